//! Alexander polynomials by two independent routes: gcd of minors of
//! id - Burau(β), and Fox free differential calculus on the braid-closure
//! group presentation. Exact gcd over Z[t] via the primitive PRS.

use crate::braid::BraidWord;
use crate::burau::{closure_matrix, LMatrix};
use crate::group::{GroupPresentation, Word};
use crate::scalar::Scalar;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Dense univariate polynomial over Z, lowest degree first, no trailing
/// zeros. The zero polynomial has an empty coefficient vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZPoly(pub Vec<BigInt>);

impl ZPoly {
    pub fn zero() -> Self {
        ZPoly(Vec::new())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn trim(mut v: Vec<BigInt>) -> ZPoly {
        while v.last().map(|c| c.is_zero()).unwrap_or(false) {
            v.pop();
        }
        ZPoly(v)
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    /// Forget the Laurent shift: move the lowest nonzero exponent to 0.
    pub fn from_scalar(s: &Scalar, var: &str) -> Result<ZPoly> {
        let pairs = s.univariate(var)?;
        if pairs.is_empty() {
            return Ok(ZPoly::zero());
        }
        let min = pairs.iter().map(|(e, _)| *e).min().unwrap();
        let max = pairs.iter().map(|(e, _)| *e).max().unwrap();
        let mut v = vec![BigInt::zero(); (max - min + 1) as usize];
        for (e, c) in pairs {
            v[(e - min) as usize] = c;
        }
        Ok(ZPoly::trim(v))
    }

    fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.0 {
            g = g.gcd(c);
        }
        g
    }

    fn primitive(&self) -> ZPoly {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        ZPoly(self.0.iter().map(|x| x / &c).collect())
    }

    fn mul_scalar(&self, c: &BigInt) -> ZPoly {
        ZPoly::trim(self.0.iter().map(|x| x * c).collect())
    }

    fn sub(&self, other: &ZPoly) -> ZPoly {
        let n = self.0.len().max(other.0.len());
        let mut v = vec![BigInt::zero(); n];
        for (i, slot) in v.iter_mut().enumerate() {
            let a = self.0.get(i).cloned().unwrap_or_else(BigInt::zero);
            let b = other.0.get(i).cloned().unwrap_or_else(BigInt::zero);
            *slot = a - b;
        }
        ZPoly::trim(v)
    }

    fn shift(&self, k: usize) -> ZPoly {
        if self.is_zero() {
            return ZPoly::zero();
        }
        let mut v = vec![BigInt::zero(); k];
        v.extend(self.0.iter().cloned());
        ZPoly(v)
    }

    /// Pseudo-remainder of self by d (lc(d)^{δ+1}·self reduced by d).
    fn pseudo_rem(&self, d: &ZPoly) -> ZPoly {
        let mut r = self.clone();
        let lc = d.0.last().unwrap().clone();
        while !r.is_zero() && r.degree() >= d.degree() {
            let k = r.degree() - d.degree();
            let rl = r.0.last().unwrap().clone();
            r = r.mul_scalar(&lc).sub(&d.shift(k).mul_scalar(&rl));
        }
        r
    }

    /// Gcd over Z[t] via the primitive polynomial remainder sequence.
    pub fn gcd(&self, other: &ZPoly) -> ZPoly {
        if self.is_zero() {
            return other.positive_lead();
        }
        if other.is_zero() {
            return self.positive_lead();
        }
        let content = self.content().gcd(&other.content());
        let (mut a, mut b) = (self.primitive(), other.primitive());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive();
            a = b;
            b = r;
        }
        a.primitive().mul_scalar(&content).positive_lead()
    }

    fn positive_lead(&self) -> ZPoly {
        match self.0.last() {
            Some(c) if c.is_negative() => ZPoly(self.0.iter().map(|x| -x).collect()),
            _ => self.clone(),
        }
    }
}

/// A normalized one-variable Alexander polynomial: lowest-degree coefficient
/// at index 0 and positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlexPoly(pub Vec<BigInt>);

impl AlexPoly {
    pub fn one() -> Self {
        AlexPoly(vec![BigInt::one()])
    }

    pub fn from_zpoly(p: &ZPoly) -> AlexPoly {
        if p.is_zero() {
            return AlexPoly(Vec::new());
        }
        let start = p.0.iter().position(|c| !c.is_zero()).unwrap();
        let mut v: Vec<BigInt> = p.0[start..].to_vec();
        if v[0].is_negative() {
            v = v.iter().map(|x| -x).collect();
        }
        AlexPoly(v)
    }

    /// Δ(t) ≐ Δ(1/t): palindromic coefficients after normalization.
    pub fn is_symmetric(&self) -> bool {
        let mut rev = self.0.clone();
        rev.reverse();
        AlexPoly::from_zpoly(&ZPoly::trim(rev)) == *self
    }
}

impl fmt::Display for AlexPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.magnitude();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if e == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                if e == 1 {
                    write!(f, "t")?;
                } else {
                    write!(f, "t^{e}")?;
                }
            }
        }
        Ok(())
    }
}

/// Abelianized Fox derivative ∂w/∂x_j with every generator sent to t.
pub fn fox_derivative(word: &Word, j: usize) -> Scalar {
    let mut acc = Scalar::zero();
    let mut exp = 0i64;
    for &k in &word.0 {
        if k > 0 {
            if k as usize == j {
                acc = acc.add(&Scalar::var_pow("t", exp));
            }
            exp += 1;
        } else {
            exp -= 1;
            if (-k) as usize == j {
                acc = acc.sub(&Scalar::var_pow("t", exp));
            }
        }
    }
    acc
}

/// The abelianized Fox Jacobian: rows are relators, columns generators.
pub fn fox_jacobian(g: &GroupPresentation) -> Result<LMatrix> {
    let rows: Vec<Vec<Scalar>> = g
        .relators
        .iter()
        .map(|r| (1..=g.num_generators).map(|j| fox_derivative(r, j)).collect())
        .collect();
    if rows.is_empty() {
        return LMatrix::from_rows(vec![]);
    }
    LMatrix::from_rows(rows)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlexMethod {
    Burau,
    Fox,
}

impl AlexMethod {
    pub fn parse(s: &str) -> Result<AlexMethod> {
        match s {
            "burau" => Ok(AlexMethod::Burau),
            "fox" => Ok(AlexMethod::Fox),
            _ => Err(Error::Parse(format!("unknown method {s}"))),
        }
    }
}

/// Result of the Alexander extraction: a normalized polynomial for knots,
/// or the raw ideal generators for multi-component closures.
#[derive(Clone, Debug, PartialEq)]
pub enum AlexOutcome {
    Knot(AlexPoly),
    Link(Vec<Scalar>),
}

/// Gcd of the (n-1)×(n-1) minors of the appropriate matrix, normalized.
/// `group` must be the Artin closure presentation of the same braid when
/// the Fox route is requested.
pub fn alexander_polynomial(
    b: &BraidWord,
    group: &GroupPresentation,
    method: AlexMethod,
) -> Result<AlexOutcome> {
    let n = b.strand_count();
    let matrix = match method {
        AlexMethod::Burau => closure_matrix(b)?,
        AlexMethod::Fox => fox_jacobian(group)?,
    };
    let minors = minors_padded(&matrix, n - 1)?;
    let is_knot = b.strand_orbits().component_count() == 1;
    if !is_knot {
        let gens: Vec<Scalar> = minors
            .iter()
            .filter(|m| !m.is_zero())
            .map(|m| m.unit_normalize())
            .collect();
        let mut dedup = Vec::new();
        for g in gens {
            if !dedup.contains(&g) {
                dedup.push(g);
            }
        }
        return Ok(AlexOutcome::Link(dedup));
    }
    let mut gcd = ZPoly::zero();
    for m in &minors {
        gcd = gcd.gcd(&ZPoly::from_scalar(m, "t")?);
    }
    Ok(AlexOutcome::Knot(AlexPoly::from_zpoly(&gcd)))
}

/// k×k minors, treating a matrix with fewer than k rows as having none
/// (then the gcd convention yields 1 when k = 0).
fn minors_padded(m: &LMatrix, k: usize) -> Result<Vec<Scalar>> {
    if k == 0 {
        return Ok(vec![Scalar::one()]);
    }
    if m.rows < k || m.cols < k {
        return Ok(vec![]);
    }
    m.minors(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zp(v: &[i64]) -> ZPoly {
        ZPoly::trim(v.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn gcd_examples() {
        // (t^2-1, t^2-2t+1) = t-1
        let g = zp(&[-1, 0, 1]).gcd(&zp(&[1, -2, 1]));
        assert_eq!(g, zp(&[-1, 1]));
        // contents combine
        let g = zp(&[2, 2]).gcd(&zp(&[4]));
        assert_eq!(g, zp(&[2]));
        assert_eq!(zp(&[0]).gcd(&zp(&[3, 3])), zp(&[3, 3]));
    }

    #[test]
    fn fox_derivative_examples() {
        // ∂(x1 x2 x1^{-1}) / ∂x1 = 1 - t (abelianized)
        let w = Word(vec![1, 2, -1]);
        let d1 = fox_derivative(&w, 1);
        assert_eq!(d1, Scalar::one().sub(&Scalar::var("t")));
        let d2 = fox_derivative(&w, 2);
        assert_eq!(d2, Scalar::var("t"));
    }

    #[test]
    fn alexpoly_display_and_symmetry() {
        let p = AlexPoly(vec![BigInt::one(), BigInt::from(-1), BigInt::one()]);
        assert_eq!(p.to_string(), "t^2 - t + 1");
        assert!(p.is_symmetric());
        let q = AlexPoly(vec![BigInt::from(2), BigInt::from(-1)]);
        assert!(!q.is_symmetric());
    }
}
