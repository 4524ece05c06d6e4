//! Substitutions: object- and arrow-maps extended multiplicatively and
//! linearly, i.e. k-linear functors between presented categories.

use crate::dg::DgPresentation;
use crate::element::Element;
use crate::quiver::{Path, Sym};
use crate::scalar::Scalar;
use crate::{Error, Result};
use std::collections::BTreeMap;

/// A functor determined by where objects, generator arrows, and scalar
/// variables go. Arrows absent from the map are an error when encountered;
/// objects and variables default to themselves.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Substitution {
    pub obj_map: BTreeMap<Sym, Sym>,
    pub arrow_map: BTreeMap<Sym, Element>,
    pub scalar_map: BTreeMap<String, Scalar>,
}

impl Substitution {
    pub fn identity(pres: &DgPresentation) -> Self {
        let mut s = Substitution::default();
        for obj in pres.quiver.objects() {
            s.obj_map.insert(obj.clone(), obj.clone());
        }
        for a in pres.quiver.arrows() {
            s.arrow_map
                .insert(a.name.clone(), Element::term(&pres.quiver, Path(vec![a.name.clone()]), Scalar::one()).unwrap());
        }
        s
    }

    pub fn map_obj(&self, o: &Sym) -> Sym {
        self.obj_map.get(o).cloned().unwrap_or_else(|| o.clone())
    }

    fn map_scalar(&self, c: &Scalar) -> Result<Scalar> {
        c.substitute(&self.scalar_map)
    }

    /// Multiplicative, linear extension of the generator map, followed by
    /// normal form in the target presentation. Partial products are
    /// re-normalized as they grow so sums stay at canonical size.
    pub fn apply(&self, e: &Element, target: &DgPresentation) -> Result<Element> {
        let src = self.map_obj(e.src());
        let tgt = self.map_obj(e.tgt());
        let mut acc = Element::zero(src.clone(), tgt.clone(), e.deg());
        for (path, coeff) in e.terms() {
            let mut img = Element::identity(tgt.clone());
            // multiply right-to-left so endpoints chain correctly
            for arrow in &path.0 {
                let factor = self.arrow_map.get(arrow).ok_or_else(|| {
                    Error::MissingGenerator(format!("no image for arrow {arrow}"))
                })?;
                img = img.mul(factor)?;
                if img.num_terms() > 16 {
                    img = target.nf(&img)?;
                }
            }
            if path.is_empty() {
                img = Element::identity(src.clone());
            }
            acc.accumulate(&img.scale(&self.map_scalar(coeff)?))?;
        }
        target.nf(&acc)
    }

    /// Compose `self` after `other` (apply `other` first). Both must land in
    /// `target`'s quiver, where images are normalized.
    pub fn compose(&self, other: &Substitution, target: &DgPresentation) -> Result<Substitution> {
        let mut out = Substitution::default();
        for (o, img) in &other.obj_map {
            out.obj_map.insert(o.clone(), self.map_obj(img));
        }
        for (a, img) in &other.arrow_map {
            out.arrow_map.insert(a.clone(), self.apply(img, target)?);
        }
        let mut vars: std::collections::BTreeSet<String> = self.scalar_map.keys().cloned().collect();
        vars.extend(other.scalar_map.keys().cloned());
        for v in vars {
            let mid = other
                .scalar_map
                .get(&v)
                .cloned()
                .unwrap_or_else(|| Scalar::var(&v));
            out.scalar_map.insert(v.clone(), self.map_scalar(&mid)?);
        }
        Ok(out)
    }

    /// Two substitutions agree when their images of every generator of
    /// `domain` have equal normal forms in `target`.
    pub fn agrees_with(
        &self,
        other: &Substitution,
        domain: &DgPresentation,
        target: &DgPresentation,
    ) -> Result<bool> {
        for a in domain.quiver.arrows() {
            let g = Element::term(&domain.quiver, Path(vec![a.name.clone()]), Scalar::one())?;
            if self.apply(&g, target)? != other.apply(&g, target)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Witnesses (generator, lhs image, rhs image) where the two differ.
    pub fn disagreements(
        &self,
        other: &Substitution,
        domain: &DgPresentation,
        target: &DgPresentation,
    ) -> Result<Vec<(Sym, Element, Element)>> {
        let mut out = Vec::new();
        for a in domain.quiver.arrows() {
            let g = Element::term(&domain.quiver, Path(vec![a.name.clone()]), Scalar::one())?;
            let l = self.apply(&g, target)?;
            let r = other.apply(&g, target)?;
            if l != r {
                out.push((a.name.clone(), l, r));
            }
        }
        Ok(out)
    }

    /// Check that the image of every rewrite-rule difference of `domain`
    /// normalizes to zero in `target` (the functor respects relations).
    pub fn respects_rules(
        &self,
        domain: &DgPresentation,
        target: &DgPresentation,
    ) -> Result<Vec<(Path, Element)>> {
        let mut violations = Vec::new();
        for rule in domain.rules.rules() {
            let lhs = Element::path(&domain.quiver, rule.lhs.clone())?;
            let l = self.apply(&lhs, target)?;
            let r = self.apply(&rule.rhs, target)?;
            let diff = l.sub(&r)?;
            if !diff.is_zero() {
                violations.push((rule.lhs.clone(), diff));
            }
        }
        Ok(violations)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dg::DgPresentation;
    use crate::quiver::GradedQuiver;
    use crate::rewrite::{Rule, RewriteSystem};

    /// F_2 as a one-object quiver with free cancellation.
    fn free2() -> DgPresentation {
        let mut q = GradedQuiver::new();
        q.add_object("v").unwrap();
        for g in ["x1", "x2"] {
            q.add_arrow(g, "v", "v", 0).unwrap();
            q.add_arrow(format!("{g}^-1"), "v", "v", 0).unwrap();
        }
        let mut rules = Vec::new();
        for g in ["x1", "x2"] {
            let inv = format!("{g}^-1");
            rules.push(Rule {
                lhs: Path(vec![g.into(), inv.as_str().into()]),
                rhs: Element::identity("v"),
            });
            rules.push(Rule {
                lhs: Path(vec![inv.as_str().into(), g.into()]),
                rhs: Element::identity("v"),
            });
        }
        let rules = RewriteSystem::new(&q, rules).unwrap();
        DgPresentation::new(q, rules, BTreeMap::new()).unwrap()
    }

    #[test]
    fn artin_sigma_squared_on_x1() {
        let f2 = free2();
        let mut sigma = Substitution::identity(&f2);
        let im = |names: &[&str]| Element::path(&f2.quiver, Path::of(names)).unwrap();
        sigma
            .arrow_map
            .insert("x1".into(), im(&["x1", "x2", "x1^-1"]));
        sigma
            .arrow_map
            .insert("x1^-1".into(), im(&["x1", "x2^-1", "x1^-1"]));
        sigma.arrow_map.insert("x2".into(), im(&["x1"]));
        sigma.arrow_map.insert("x2^-1".into(), im(&["x1^-1"]));
        let sq = sigma.compose(&sigma, &f2).unwrap();
        let x1 = im(&["x1"]);
        let got = sq.apply(&x1, &f2).unwrap();
        assert_eq!(got, im(&["x1", "x2", "x1", "x2^-1", "x1^-1"]));
    }

    #[test]
    fn identity_substitution_is_identity() {
        let f2 = free2();
        let id = Substitution::identity(&f2);
        let w = Element::path(&f2.quiver, Path::of(&["x1", "x2", "x2"])).unwrap();
        assert_eq!(id.apply(&w, &f2).unwrap(), w);
    }
}
