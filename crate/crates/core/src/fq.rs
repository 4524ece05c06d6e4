//! Small finite fields F_q (q = p^k) with table-based arithmetic, used by the
//! exhaustive coloring and augmentation counters.

use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

/// F_q for a prime power q. Elements are indices 0..q; 0 is zero, 1 is one.
/// For k > 1, element i encodes the polynomial with base-p digits of i.
#[derive(Clone, Debug)]
pub struct Fq {
    pub p: u16,
    pub k: u32,
    pub q: u16,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    inv: Vec<u16>,
}

impl Fq {
    pub fn new(q: u16) -> Result<Fq> {
        let (p, k) = factor_prime_power(q)
            .ok_or_else(|| Error::Unsupported(format!("{q} is not a prime power")))?;
        if q > 512 {
            return Err(Error::Unsupported(format!("field size {q} too large")));
        }
        let (add, mul) = if k == 1 {
            let mut add = vec![0u16; (q as usize) * (q as usize)];
            let mut mul = vec![0u16; (q as usize) * (q as usize)];
            for a in 0..q as usize {
                for b in 0..q as usize {
                    add[a * q as usize + b] = ((a + b) % q as usize) as u16;
                    mul[a * q as usize + b] = ((a * b) % q as usize) as u16;
                }
            }
            (add, mul)
        } else {
            let modulus = irreducible_poly(p, k);
            let qd = q as usize;
            let mut add = vec![0u16; qd * qd];
            let mut mul = vec![0u16; qd * qd];
            for a in 0..qd {
                for b in 0..qd {
                    add[a * qd + b] = poly_add(a as u16, b as u16, p);
                    mul[a * qd + b] = poly_mul_mod(a as u16, b as u16, p, &modulus);
                }
            }
            (add, mul)
        };
        let neg = (0..q)
            .map(|a| (0..q).find(|&b| add[a as usize * q as usize + b as usize] == 0).unwrap())
            .collect();
        let mut inv = vec![0u16; q as usize];
        for a in 1..q {
            inv[a as usize] = (1..q)
                .find(|&b| mul[a as usize * q as usize + b as usize] == 1)
                .unwrap();
        }
        Ok(Fq {
            p,
            k,
            q,
            add,
            mul,
            neg,
            inv,
        })
    }

    #[inline]
    pub fn add(&self, a: u16, b: u16) -> u16 {
        self.add[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u16, b: u16) -> u16 {
        self.mul[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u16) -> u16 {
        self.neg[a as usize]
    }

    pub fn sub(&self, a: u16, b: u16) -> u16 {
        self.add(a, self.neg(b))
    }

    pub fn inv(&self, a: u16) -> Result<u16> {
        if a == 0 {
            return Err(Error::NonInvertible("zero in a finite field".into()));
        }
        Ok(self.inv[a as usize])
    }

    pub fn pow(&self, a: u16, e: i64) -> Result<u16> {
        let base = if e < 0 { self.inv(a)? } else { a };
        let mut out = 1u16;
        for _ in 0..e.unsigned_abs() {
            out = self.mul(out, base);
        }
        Ok(out)
    }

    /// The multiplicative group, in index order.
    pub fn units(&self) -> Vec<u16> {
        (1..self.q).collect()
    }

    /// Reduce an integer coefficient into the prime subfield of F_q.
    pub fn from_bigint(&self, c: &BigInt) -> u16 {
        let p = BigInt::from(self.p);
        let mut r = c % &p;
        if r.is_negative() {
            r += &p;
        }
        r.to_u16().unwrap()
    }
}

fn factor_prime_power(q: u16) -> Option<(u16, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2u16;
    while p * p <= q {
        if q % p == 0 {
            let mut k = 0u32;
            let mut rest = q;
            while rest % p == 0 {
                rest /= p;
                k += 1;
            }
            return if rest == 1 { Some((p, k)) } else { None };
        }
        p += 1;
    }
    Some((q, 1))
}

// Polynomials over F_p encoded as base-p digit strings (lowest digit first).
fn digits(mut x: u16, p: u16) -> Vec<u16> {
    let mut out = Vec::new();
    while x > 0 {
        out.push(x % p);
        x /= p;
    }
    out
}

fn undigits(d: &[u16], p: u16) -> u16 {
    d.iter().rev().fold(0u16, |acc, &c| acc * p + c)
}

fn poly_add(a: u16, b: u16, p: u16) -> u16 {
    let (da, db) = (digits(a, p), digits(b, p));
    let n = da.len().max(db.len());
    let mut out = vec![0u16; n];
    for (i, slot) in out.iter_mut().enumerate() {
        *slot = (da.get(i).copied().unwrap_or(0) + db.get(i).copied().unwrap_or(0)) % p;
    }
    undigits(&out, p)
}

fn poly_mul_raw(a: &[u16], b: &[u16], p: u16) -> Vec<u16> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u16; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

fn poly_rem(mut a: Vec<u16>, m: &[u16], p: u16) -> Vec<u16> {
    // m is monic of degree k
    let k = m.len() - 1;
    while a.len() > k {
        let lead = *a.last().unwrap();
        let shift = a.len() - 1 - k;
        for (i, &mc) in m.iter().enumerate() {
            let idx = shift + i;
            let sub = (lead * mc) % p;
            a[idx] = (a[idx] + p - sub) % p;
        }
        while a.last() == Some(&0) {
            a.pop();
        }
    }
    a
}

fn poly_mul_mod(a: u16, b: u16, p: u16, modulus: &[u16]) -> u16 {
    let prod = poly_mul_raw(&digits(a, p), &digits(b, p), p);
    undigits(&poly_rem(prod, modulus, p), p)
}

/// Smallest monic irreducible polynomial of degree k over F_p, found by
/// exhaustive factor search (the fields here are tiny).
fn irreducible_poly(p: u16, k: u32) -> Vec<u16> {
    let pk = (p as u64).pow(k);
    'candidates: for c in 0..pk {
        let mut poly = Vec::with_capacity(k as usize + 1);
        let mut x = c;
        for _ in 0..k {
            poly.push((x % p as u64) as u16);
            x /= p as u64;
        }
        poly.push(1);
        for d in 1..=(k / 2).max(1) {
            let pd = (p as u64).pow(d);
            for f in 0..pd {
                let mut fac = Vec::with_capacity(d as usize + 1);
                let mut y = f;
                for _ in 0..d {
                    fac.push((y % p as u64) as u16);
                    y /= p as u64;
                }
                fac.push(1);
                if poly_rem(poly.clone(), &fac, p).is_empty() {
                    continue 'candidates;
                }
            }
        }
        return poly;
    }
    unreachable!("an irreducible polynomial exists for every prime power");
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_f5() {
        let f = Fq::new(5).unwrap();
        assert_eq!(f.add(3, 4), 2);
        assert_eq!(f.mul(3, 4), 2);
        assert_eq!(f.inv(3).unwrap(), 2);
        assert_eq!(f.pow(2, -1).unwrap(), 3);
        assert_eq!(f.units().len(), 4);
    }

    #[test]
    fn extension_field_f9() {
        let f = Fq::new(9).unwrap();
        for a in 1..9 {
            let inv = f.inv(a).unwrap();
            assert_eq!(f.mul(a, inv), 1);
            assert_eq!(f.pow(a, 8).unwrap(), 1);
        }
        assert_eq!((f.p, f.k), (3, 2));
    }

    #[test]
    fn rejects_non_prime_power() {
        assert!(Fq::new(6).is_err());
        assert!(Fq::new(12).is_err());
    }
}
