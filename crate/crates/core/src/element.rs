//! Formal sums of scalar-weighted composable paths: the universal value type
//! for all morphism expressions.

use crate::quiver::{GradedQuiver, Path, Sym};
use crate::scalar::Scalar;
use crate::{Error, Result};
use std::collections::BTreeMap;
use std::fmt;

/// A homogeneous morphism expression from `src` to `tgt`. Every stored path
/// is composable, runs `src -> tgt`, and has total degree `deg`. Terms are
/// kept in canonical (length, lexicographic) order with no zero coefficients.
#[derive(Clone, Eq, Debug)]
pub struct Element {
    src: Sym,
    tgt: Sym,
    deg: i64,
    terms: BTreeMap<Path, Scalar>,
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        if self.terms.is_empty() && other.terms.is_empty() {
            // zero elements of different contractual degree are still equal
            return self.src == other.src && self.tgt == other.tgt;
        }
        self.src == other.src
            && self.tgt == other.tgt
            && self.deg == other.deg
            && self.terms == other.terms
    }
}

impl Element {
    pub fn zero(src: impl Into<Sym>, tgt: impl Into<Sym>, deg: i64) -> Self {
        Element {
            src: src.into(),
            tgt: tgt.into(),
            deg,
            terms: BTreeMap::new(),
        }
    }

    /// The identity morphism of an object (empty path).
    pub fn identity(obj: impl Into<Sym>) -> Self {
        let obj = obj.into();
        let mut terms = BTreeMap::new();
        terms.insert(Path::empty(), Scalar::one());
        Element {
            src: obj.clone(),
            tgt: obj,
            deg: 0,
            terms,
        }
    }

    /// A single path with coefficient 1, typechecked against the quiver.
    pub fn path(quiver: &GradedQuiver, path: Path) -> Result<Self> {
        Self::term(quiver, path, Scalar::one())
    }

    pub fn term(quiver: &GradedQuiver, path: Path, coeff: Scalar) -> Result<Self> {
        let (src, tgt, deg) = path.typecheck(quiver)?;
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(path, coeff);
        }
        Ok(Element {
            src,
            tgt,
            deg,
            terms,
        })
    }

    /// Build from raw parts, revalidating every path.
    pub fn from_terms(
        quiver: &GradedQuiver,
        src: Sym,
        tgt: Sym,
        deg: i64,
        terms: impl IntoIterator<Item = (Path, Scalar)>,
    ) -> Result<Self> {
        let mut out = Element::zero(src, tgt, deg);
        for (p, c) in terms {
            let t = if p.is_empty() {
                if out.src != out.tgt {
                    return Err(Error::EndpointMismatch(
                        "identity path in a non-endomorphism element".into(),
                    ));
                }
                let mut e = Element::identity(out.src.clone());
                e = e.scale(&c);
                e
            } else {
                Element::term(quiver, p, c)?
            };
            out.accumulate(&t)?;
        }
        Ok(out)
    }

    pub fn src(&self) -> &Sym {
        &self.src
    }

    pub fn tgt(&self) -> &Sym {
        &self.tgt
    }

    pub fn deg(&self) -> i64 {
        self.deg
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Path, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, p: &Path) -> Scalar {
        self.terms.get(p).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add(&self, other: &Element) -> Result<Element> {
        let mut out = self.clone();
        out.accumulate(other)?;
        Ok(out)
    }

    /// In-place addition; avoids the quadratic churn of repeated `add` in
    /// accumulation loops.
    pub fn accumulate(&mut self, other: &Element) -> Result<()> {
        if self.src != other.src || self.tgt != other.tgt {
            return Err(Error::EndpointMismatch(format!(
                "cannot add {}->{} to {}->{}",
                other.src, other.tgt, self.src, self.tgt
            )));
        }
        if self.terms.is_empty() {
            self.deg = other.deg;
        } else if !other.terms.is_empty() && self.deg != other.deg {
            return Err(Error::DegreeMismatch(format!(
                "cannot add degree {} to degree {}",
                other.deg, self.deg
            )));
        }
        for (p, c) in &other.terms {
            match self.terms.get_mut(p) {
                Some(entry) => {
                    *entry = entry.add(c);
                    if entry.is_zero() {
                        self.terms.remove(p);
                    }
                }
                None => {
                    self.terms.insert(p.clone(), c.clone());
                }
            }
        }
        Ok(())
    }

    pub fn neg(&self) -> Element {
        Element {
            src: self.src.clone(),
            tgt: self.tgt.clone(),
            deg: self.deg,
            terms: self.terms.iter().map(|(p, c)| (p.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Element) -> Result<Element> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        if c.is_zero() {
            return Element::zero(self.src.clone(), self.tgt.clone(), self.deg);
        }
        let mut terms = BTreeMap::new();
        for (p, x) in &self.terms {
            let v = x.mul(c);
            if !v.is_zero() {
                terms.insert(p.clone(), v);
            }
        }
        Element {
            src: self.src.clone(),
            tgt: self.tgt.clone(),
            deg: self.deg,
            terms,
        }
    }

    /// Composition product: `self * other` is `self` after `other`
    /// (paths concatenate as written words, `other` applied first).
    pub fn mul(&self, other: &Element) -> Result<Element> {
        if other.tgt != self.src {
            return Err(Error::EndpointMismatch(format!(
                "cannot compose {}->{} after {}->{}",
                self.src, self.tgt, other.src, other.tgt
            )));
        }
        let mut terms: BTreeMap<Path, Scalar> = BTreeMap::new();
        for (p1, c1) in &self.terms {
            for (p2, c2) in &other.terms {
                let p = p1.concat(p2);
                let c = c1.mul(c2);
                let entry = terms.entry(p).or_insert_with(Scalar::zero);
                *entry = entry.add(&c);
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(Element {
            src: other.src.clone(),
            tgt: self.tgt.clone(),
            deg: self.deg + other.deg,
            terms,
        })
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (p, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if c.is_one() {
                write!(f, "{p}")?;
            } else if c.num_terms() > 1 {
                write!(f, "({c})·{p}")?;
            } else {
                write!(f, "{c}·{p}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_vertex() -> GradedQuiver {
        let mut q = GradedQuiver::new();
        q.add_object("0").unwrap();
        q.add_object("1").unwrap();
        q.add_arrow("a", "1", "0", 0).unwrap();
        q.add_arrow("a*", "0", "1", 0).unwrap();
        q.add_arrow("xi", "1", "1", 1).unwrap();
        q
    }

    #[test]
    fn composition_tracks_endpoints_and_degree() {
        let q = two_vertex();
        let a = Element::path(&q, Path::of(&["a"])).unwrap();
        let astar = Element::path(&q, Path::of(&["a*"])).unwrap();
        let t = a.mul(&astar).unwrap(); // a∘a*: 0 -> 0
        assert_eq!(t.src().as_str(), "0");
        assert_eq!(t.tgt().as_str(), "0");
        let xi = Element::path(&q, Path::of(&["xi"])).unwrap();
        assert_eq!(xi.deg(), 1);
        assert!(a.mul(&a).is_err());
    }

    #[test]
    fn addition_cancels() {
        let q = two_vertex();
        let a = Element::path(&q, Path::of(&["a"])).unwrap();
        assert!(a.sub(&a).unwrap().is_zero());
        let id1 = Element::identity("1");
        assert!(id1.add(&a).is_err());
    }

    #[test]
    fn heterogeneous_degree_rejected() {
        let q = two_vertex();
        let xi = Element::path(&q, Path::of(&["xi"])).unwrap();
        let id1 = Element::identity("1");
        assert!(xi.add(&id1).is_err());
        // adding zero of any contractual degree is fine
        let z = Element::zero("1", "1", 0);
        assert_eq!(xi.add(&z).unwrap(), xi);
    }
}
