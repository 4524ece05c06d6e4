//! Exact Laurent-polynomial scalars: finite maps from integer exponent
//! vectors to big integers, over an open-ended set of named variables.

use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// A Laurent monomial. Variables with zero exponent are never stored.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Monomial(BTreeMap<String, i64>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(BTreeMap::new())
    }

    pub fn var(name: &str, exp: i64) -> Self {
        let mut m = BTreeMap::new();
        if exp != 0 {
            m.insert(name.to_string(), exp);
        }
        Monomial(m)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = self.0.clone();
        for (v, e) in &other.0 {
            let entry = out.entry(v.clone()).or_insert(0);
            *entry += e;
            if *entry == 0 {
                out.remove(v);
            }
        }
        Monomial(out)
    }

    pub fn inv(&self) -> Monomial {
        Monomial(self.0.iter().map(|(v, e)| (v.clone(), -e)).collect())
    }

    /// Monomial quotient self / other (always defined in the Laurent ring).
    pub fn div(&self, other: &Monomial) -> Monomial {
        self.mul(&other.inv())
    }

    pub fn exponents(&self) -> impl Iterator<Item = (&str, i64)> {
        self.0.iter().map(|(v, e)| (v.as_str(), *e))
    }

    pub fn exponent(&self, var: &str) -> i64 {
        self.0.get(var).copied().unwrap_or(0)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for (v, e) in &self.0 {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// An exact scalar of the Laurent ring Z[v1^{±1}, v2^{±1}, ...].
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Scalar {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::int(1)
    }

    pub fn int(n: i64) -> Self {
        let mut terms = BTreeMap::new();
        if n != 0 {
            terms.insert(Monomial::one(), BigInt::from(n));
        }
        Scalar { terms }
    }

    pub fn var(name: &str) -> Self {
        Scalar::var_pow(name, 1)
    }

    pub fn var_pow(name: &str, exp: i64) -> Self {
        Scalar::term(Monomial::var(name, exp), BigInt::one())
    }

    pub fn term(m: Monomial, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Scalar { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::one())
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Units of the Laurent ring are the terms ±m for a single monomial m.
    pub fn as_unit(&self) -> Option<(Monomial, bool)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next().unwrap();
        if c.is_one() {
            Some((m.clone(), false))
        } else if (-c).is_one() {
            Some((m.clone(), true))
        } else {
            None
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        let mut out = self.terms.clone();
        for (m, c) in &other.terms {
            let entry = out.entry(m.clone()).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                out.remove(m);
            }
        }
        Scalar { terms: out }
    }

    pub fn neg(&self) -> Scalar {
        Scalar {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        let mut out: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = m1.mul(m2);
                let entry = out.entry(m).or_insert_with(BigInt::zero);
                *entry += c1 * c2;
            }
        }
        out.retain(|_, c| !c.is_zero());
        Scalar { terms: out }
    }

    pub fn mul_int(&self, n: i64) -> Scalar {
        self.mul(&Scalar::int(n))
    }

    /// Integer power. Negative powers require the scalar to be a unit.
    pub fn pow(&self, exp: i64) -> Result<Scalar> {
        if exp >= 0 {
            let mut out = Scalar::one();
            for _ in 0..exp {
                out = out.mul(self);
            }
            Ok(out)
        } else {
            let (m, neg) = self.as_unit().ok_or_else(|| {
                Error::NonInvertible(format!("scalar {self} is not a unit"))
            })?;
            let base = Scalar::term(m.inv(), if neg { BigInt::from(-1) } else { BigInt::one() });
            let mut out = Scalar::one();
            for _ in 0..(-exp) {
                out = out.mul(&base);
            }
            Ok(out)
        }
    }

    /// Substitute variables; images of variables occurring with negative
    /// exponents must be units.
    pub fn substitute(&self, map: &BTreeMap<String, Scalar>) -> Result<Scalar> {
        if map.is_empty() {
            return Ok(self.clone());
        }
        let mut out = Scalar::zero();
        for (m, c) in &self.terms {
            let mut term = Scalar::term(Monomial::one(), c.clone());
            for (v, e) in m.exponents() {
                let image = match map.get(v) {
                    Some(s) => s.pow(e)?,
                    None => Scalar::var_pow(v, e),
                };
                term = term.mul(&image);
            }
            out = out.add(&term);
        }
        Ok(out)
    }

    /// Exact division in the Laurent ring; `None` when not exact. Both
    /// operands are shifted to honest polynomials and divided under the
    /// graded-lexicographic term order, which is multiplication compatible.
    pub fn exact_div(&self, divisor: &Scalar) -> Option<Scalar> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Scalar::zero());
        }
        let mut vars: Vec<String> = Vec::new();
        for s in [self, divisor] {
            for m in s.terms.keys() {
                for (v, _) in m.exponents() {
                    if !vars.iter().any(|w| w == v) {
                        vars.push(v.to_string());
                    }
                }
            }
        }
        vars.sort();
        let dense = |s: &Scalar| -> (Vec<(Vec<i64>, BigInt)>, Vec<i64>) {
            let mins: Vec<i64> = vars
                .iter()
                .map(|v| s.terms.keys().map(|m| m.exponent(v)).min().unwrap_or(0).min(0))
                .collect();
            let terms = s
                .terms
                .iter()
                .map(|(m, c)| {
                    let e: Vec<i64> = vars
                        .iter()
                        .zip(&mins)
                        .map(|(v, lo)| m.exponent(v) - lo)
                        .collect();
                    (e, c.clone())
                })
                .collect();
            (terms, mins)
        };
        let grlex = |a: &[i64], b: &[i64]| -> std::cmp::Ordering {
            let (ta, tb): (i64, i64) = (a.iter().sum(), b.iter().sum());
            ta.cmp(&tb).then_with(|| a.cmp(b))
        };
        let lead = |terms: &[(Vec<i64>, BigInt)]| -> usize {
            let mut best = 0;
            for i in 1..terms.len() {
                if grlex(&terms[i].0, &terms[best].0) == std::cmp::Ordering::Greater {
                    best = i;
                }
            }
            best
        };
        let (mut rem, self_shift) = dense(self);
        let (den, div_shift) = dense(divisor);
        let dl = lead(&den);
        let (dm, dc) = (den[dl].0.clone(), den[dl].1.clone());
        let mut quot: Vec<(Vec<i64>, BigInt)> = Vec::new();
        let mut steps = 0usize;
        while !rem.is_empty() {
            steps += 1;
            if steps > 100_000 {
                return None;
            }
            let rl = lead(&rem);
            let (rm, rc) = (rem[rl].0.clone(), rem[rl].1.clone());
            if rm.iter().zip(&dm).any(|(a, b)| a < b) {
                return None;
            }
            if (&rc % &dc) != BigInt::zero() {
                return None;
            }
            let qm: Vec<i64> = rm.iter().zip(&dm).map(|(a, b)| a - b).collect();
            let qc = &rc / &dc;
            // rem -= (qm, qc) * den
            for (e, c) in &den {
                let m: Vec<i64> = e.iter().zip(&qm).map(|(a, b)| a + b).collect();
                let prod = c * &qc;
                if let Some(slot) = rem.iter_mut().find(|(f, _)| *f == m) {
                    slot.1 -= prod;
                } else {
                    rem.push((m, -prod));
                }
            }
            rem.retain(|(_, c)| !c.is_zero());
            quot.push((qm, qc));
        }
        // undo the shifts: quotient exponent += self_shift - div_shift
        let mut out = Scalar::zero();
        for (e, c) in quot {
            let mono = Monomial(
                vars.iter()
                    .zip(e.iter().zip(self_shift.iter().zip(&div_shift)))
                    .filter_map(|(v, (x, (slo, dlo)))| {
                        let exp = x + slo - dlo;
                        (exp != 0).then(|| (v.clone(), exp))
                    })
                    .collect(),
            );
            out = out.add(&Scalar::term(mono, c));
        }
        Some(out)
    }

    /// Evaluate in F_q after pinning every variable to a field value.
    pub fn eval_fq(&self, field: &crate::fq::Fq, pins: &BTreeMap<String, u16>) -> Result<u16> {
        let mut acc = 0u16;
        for (m, c) in &self.terms {
            let mut val = field.from_bigint(c);
            for (v, e) in m.exponents() {
                let x = *pins.get(v).ok_or_else(|| {
                    Error::MissingGenerator(format!("variable {v} not pinned"))
                })?;
                val = field.mul(val, field.pow(x, e)?);
            }
            acc = field.add(acc, val);
        }
        Ok(acc)
    }

    /// Extract a univariate view in `var`; errors if other variables occur.
    pub fn univariate(&self, var: &str) -> Result<Vec<(i64, BigInt)>> {
        let mut out = Vec::new();
        for (m, c) in &self.terms {
            let mut exp = 0;
            for (v, e) in m.exponents() {
                if v == var {
                    exp = e;
                } else {
                    return Err(Error::Unsupported(format!(
                        "scalar {self} is not univariate in {var}"
                    )));
                }
            }
            out.push((exp, c.clone()));
        }
        Ok(out)
    }

    /// Multiply by the unit ±m that makes every variable's minimal exponent 0
    /// and the leading coefficient positive. Canonical representative of the
    /// orbit under unit multiplication.
    pub fn unit_normalize(&self) -> Scalar {
        if self.is_zero() {
            return Scalar::zero();
        }
        let mut vars: Vec<String> = Vec::new();
        for m in self.terms.keys() {
            for (v, _) in m.exponents() {
                if !vars.iter().any(|w| w == v) {
                    vars.push(v.to_string());
                }
            }
        }
        let shift = Monomial(
            vars.into_iter()
                .filter_map(|v| {
                    let min = self.terms.keys().map(|m| m.exponent(&v)).min().unwrap();
                    if min != 0 {
                        Some((v, -min))
                    } else {
                        None
                    }
                })
                .collect(),
        );
        let mut out = self.mul(&Scalar::term(shift, BigInt::one()));
        if let Some((_, c)) = out.terms.iter().next() {
            if c.is_negative() {
                out = out.neg();
            }
        }
        out
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = c.magnitude();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mu() -> Scalar {
        Scalar::var("mu")
    }

    #[test]
    fn ring_ops() {
        let a = mu().sub(&Scalar::one()); // mu - 1
        let b = a.mul(&a);
        assert_eq!(
            b,
            mu().mul(&mu())
                .sub(&mu().mul_int(2))
                .add(&Scalar::one())
        );
        assert_eq!(b.to_string(), "mu^2 - 2*mu + 1");
    }

    #[test]
    fn units_and_powers() {
        let u = Scalar::var_pow("mu", -1).neg();
        assert!(u.as_unit().is_some());
        assert_eq!(u.pow(-2).unwrap(), Scalar::var_pow("mu", 2));
        assert!(mu().add(&Scalar::one()).as_unit().is_none());
    }

    #[test]
    fn exact_division() {
        let t = Scalar::var("t");
        let p = t.mul(&t).sub(&Scalar::one()); // t^2 - 1
        let d = t.sub(&Scalar::one());
        assert_eq!(p.exact_div(&d).unwrap(), t.add(&Scalar::one()));
        assert!(p.exact_div(&t.add(&Scalar::int(2))).is_none());
    }

    #[test]
    fn unit_normalization() {
        // -λ^{-1}(λ-1)(μ-1) normalizes to (λ-1)(μ-1)
        let l = Scalar::var("lambda");
        let m = mu();
        let p = l.sub(&Scalar::one()).mul(&m.sub(&Scalar::one()));
        let twisted = p.neg().mul(&Scalar::var_pow("lambda", -1));
        assert_eq!(twisted.unit_normalize(), p.unit_normalize());
        assert_eq!(p.unit_normalize(), p);
    }
}
