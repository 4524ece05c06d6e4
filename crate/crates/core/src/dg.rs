//! Presented DG categories: a graded quiver, an oriented rewrite system, and
//! a degree -1 differential on generators extended by the graded Leibniz
//! rule. Includes the canonical cylinder on a semi-free presentation.

use crate::element::Element;
use crate::quiver::{GradedQuiver, Path, Sym};
use crate::rewrite::RewriteSystem;
use crate::scalar::Scalar;
use crate::subst::Substitution;
use crate::{Error, Result};
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq)]
pub struct DgPresentation {
    pub quiver: GradedQuiver,
    pub rules: RewriteSystem,
    /// Differential on generator arrows; absent entries are zero.
    pub diff: BTreeMap<Sym, Element>,
}

impl DgPresentation {
    pub fn new(
        quiver: GradedQuiver,
        rules: RewriteSystem,
        diff: BTreeMap<Sym, Element>,
    ) -> Result<Self> {
        for (g, dg) in &diff {
            let info = quiver.arrow(g)?;
            if dg.is_zero() {
                continue;
            }
            if dg.src() != &info.src || dg.tgt() != &info.tgt {
                return Err(Error::EndpointMismatch(format!(
                    "d({g}) does not preserve endpoints"
                )));
            }
            if dg.deg() != info.deg - 1 {
                return Err(Error::DegreeMismatch(format!(
                    "d({g}) must lower degree by exactly 1"
                )));
            }
        }
        Ok(DgPresentation {
            quiver,
            rules,
            diff,
        })
    }

    pub fn nf(&self, e: &Element) -> Result<Element> {
        self.rules.normal_form(&self.quiver, e)
    }

    pub fn mul_nf(&self, a: &Element, b: &Element) -> Result<Element> {
        self.nf(&a.mul(b)?)
    }

    pub fn gen(&self, name: &str) -> Result<Element> {
        Element::path(&self.quiver, Path(vec![name.into()]))
    }

    /// d on a single generator, materializing zero with correct endpoints.
    pub fn d_arrow(&self, name: &Sym) -> Result<Element> {
        let info = self.quiver.arrow(name)?;
        Ok(self
            .diff
            .get(name)
            .cloned()
            .unwrap_or_else(|| Element::zero(info.src.clone(), info.tgt.clone(), info.deg - 1)))
    }

    /// Graded Leibniz extension: d(fg) = d(f)g + (-1)^{|f|} f d(g), linear
    /// over scalars, followed by normal form.
    pub fn d(&self, e: &Element) -> Result<Element> {
        let mut acc = Element::zero(e.src().clone(), e.tgt().clone(), e.deg() - 1);
        for (path, coeff) in e.terms() {
            let mut prefix_deg = 0i64;
            for j in 0..path.len() {
                let dj = self.d_arrow(&path.0[j])?;
                if dj.is_zero() {
                    prefix_deg += self.quiver.arrow(&path.0[j])?.deg;
                    continue;
                }
                let left = if j == 0 {
                    Element::identity(dj.tgt().clone())
                } else {
                    Element::path(&self.quiver, Path(path.0[..j].to_vec()))?
                };
                let right = if j + 1 == path.len() {
                    Element::identity(dj.src().clone())
                } else {
                    Element::path(&self.quiver, Path(path.0[j + 1..].to_vec()))?
                };
                let sign = if prefix_deg % 2 == 0 { 1 } else { -1 };
                let term = left.mul(&dj)?.mul(&right)?.scale(&Scalar::int(sign)).scale(coeff);
                acc = acc.add(&term)?;
                prefix_deg += self.quiver.arrow(&path.0[j])?.deg;
            }
        }
        self.nf(&acc)
    }

    /// d·d = 0 on every generator, and d kills every rule difference.
    pub fn check_d_squared(&self) -> Result<DSquaredReport> {
        let mut gen_failures = Vec::new();
        for a in self.quiver.arrows() {
            let dg = self.d_arrow(&a.name)?;
            let ddg = self.d(&dg)?;
            if !ddg.is_zero() {
                gen_failures.push((a.name.clone(), ddg));
            }
        }
        let mut rule_failures = Vec::new();
        for rule in self.rules.rules() {
            let lhs = Element::path(&self.quiver, rule.lhs.clone())?;
            let diff = self.d(&lhs)?.sub(&self.d(&rule.rhs)?)?;
            let diff = self.nf(&diff)?;
            if !diff.is_zero() {
                rule_failures.push((rule.lhs.clone(), diff));
            }
        }
        Ok(DSquaredReport {
            gen_failures,
            rule_failures,
        })
    }

    /// The canonical cylinder on a semi-free presentation. `prime` and
    /// `shift` name the primed and degree-shifted copies of each generator.
    pub fn cylinder(
        &self,
        prime: &BTreeMap<Sym, Sym>,
        shift: &BTreeMap<Sym, Sym>,
    ) -> Result<Cylinder> {
        if !self.rules.is_empty() {
            return Err(Error::NotSemiFree(
                "cylinder requires a presentation with no rewrite rules".into(),
            ));
        }
        let mut q = GradedQuiver::new();
        for o in self.quiver.objects() {
            q.add_object(o.clone())?;
        }
        for a in self.quiver.arrows() {
            q.add_arrow(a.name.clone(), a.src.clone(), a.tgt.clone(), a.deg)?;
        }
        for a in self.quiver.arrows() {
            let p = prime
                .get(&a.name)
                .ok_or_else(|| Error::MissingGenerator(format!("prime name for {}", a.name)))?;
            q.add_arrow(p.clone(), a.src.clone(), a.tgt.clone(), a.deg)?;
        }
        for a in self.quiver.arrows() {
            let s = shift
                .get(&a.name)
                .ok_or_else(|| Error::MissingGenerator(format!("shift name for {}", a.name)))?;
            q.add_arrow(s.clone(), a.src.clone(), a.tgt.clone(), a.deg + 1)?;
        }
        let cyl_rules = RewriteSystem::empty();
        // provisional presentation to host images while we build d
        let mut cyl = DgPresentation::new(q, cyl_rules, BTreeMap::new())?;

        let rename = |e: &Element, table: &BTreeMap<Sym, Sym>| -> Result<Element> {
            let mut s = Substitution::default();
            for o in self.quiver.objects() {
                s.obj_map.insert(o.clone(), o.clone());
            }
            for a in self.quiver.arrows() {
                let img = table.get(&a.name).cloned().unwrap_or_else(|| a.name.clone());
                s.arrow_map
                    .insert(a.name.clone(), Element::path(&cyl.quiver, Path(vec![img]))?);
            }
            s.apply(e, &cyl)
        };
        let identity_table: BTreeMap<Sym, Sym> = BTreeMap::new();

        // the unique (i,i')-biderivation S with S(g) = sg
        let s_of_element = |e: &Element| -> Result<Element> {
            let mut acc = Element::zero(
                e.src().clone(),
                e.tgt().clone(),
                e.deg() + 1,
            );
            for (path, coeff) in e.terms() {
                let mut prefix_deg = 0i64;
                for j in 0..path.len() {
                    let sg = shift.get(&path.0[j]).unwrap().clone();
                    let left = if j == 0 {
                        Element::identity(cyl.quiver.arrow(&sg)?.tgt.clone())
                    } else {
                        // unprimed copy of the prefix
                        Element::path(&cyl.quiver, Path(path.0[..j].to_vec()))?
                    };
                    let right = if j + 1 == path.len() {
                        Element::identity(cyl.quiver.arrow(&sg)?.src.clone())
                    } else {
                        // primed copy of the suffix
                        let renamed: Vec<Sym> = path.0[j + 1..]
                            .iter()
                            .map(|a| prime.get(a).unwrap().clone())
                            .collect();
                        Element::path(&cyl.quiver, Path(renamed))?
                    };
                    let mid = Element::path(&cyl.quiver, Path(vec![sg]))?;
                    let sign = if prefix_deg % 2 == 0 { 1 } else { -1 };
                    let term = left.mul(&mid)?.mul(&right)?.scale(&Scalar::int(sign)).scale(coeff);
                    acc = acc.add(&term)?;
                    prefix_deg += self.quiver.arrow(&path.0[j])?.deg;
                }
            }
            Ok(acc)
        };

        let mut diff: BTreeMap<Sym, Element> = BTreeMap::new();
        for a in self.quiver.arrows() {
            let d_base = self.d_arrow(&a.name)?;
            // d(g) = i(d_B g), d(g') = i'(d_B g)
            if !d_base.is_zero() {
                diff.insert(a.name.clone(), rename(&d_base, &identity_table)?);
                diff.insert(prime[&a.name].clone(), rename(&d_base, prime)?);
            }
            // d(sg) = g - g' - S(d_B g)
            let g = Element::path(&cyl.quiver, Path(vec![a.name.clone()]))?;
            let gp = Element::path(&cyl.quiver, Path(vec![prime[&a.name].clone()]))?;
            let ds = g.sub(&gp)?.sub(&s_of_element(&d_base)?)?;
            diff.insert(shift[&a.name].clone(), ds);
        }
        cyl.diff = diff;

        // the three structure maps
        let mut incl = Substitution::default();
        let mut incl_prime = Substitution::default();
        let mut proj = Substitution::default();
        for o in self.quiver.objects() {
            incl.obj_map.insert(o.clone(), o.clone());
            incl_prime.obj_map.insert(o.clone(), o.clone());
            proj.obj_map.insert(o.clone(), o.clone());
        }
        for a in self.quiver.arrows() {
            incl.arrow_map.insert(
                a.name.clone(),
                Element::path(&cyl.quiver, Path(vec![a.name.clone()]))?,
            );
            incl_prime.arrow_map.insert(
                a.name.clone(),
                Element::path(&cyl.quiver, Path(vec![prime[&a.name].clone()]))?,
            );
            proj.arrow_map.insert(
                a.name.clone(),
                Element::path(&self.quiver, Path(vec![a.name.clone()]))?,
            );
            proj.arrow_map.insert(
                prime[&a.name].clone(),
                Element::path(&self.quiver, Path(vec![a.name.clone()]))?,
            );
            let info = self.quiver.arrow(&a.name)?;
            proj.arrow_map.insert(
                shift[&a.name].clone(),
                Element::zero(info.src.clone(), info.tgt.clone(), info.deg + 1),
            );
        }
        Ok(Cylinder {
            base: self.clone(),
            pres: cyl,
            incl,
            incl_prime,
            proj,
            prime: prime.clone(),
            shift: shift.clone(),
        })
    }
}

#[derive(Clone, Debug)]
pub struct DSquaredReport {
    pub gen_failures: Vec<(Sym, Element)>,
    pub rule_failures: Vec<(Path, Element)>,
}

impl DSquaredReport {
    pub fn pass(&self) -> bool {
        self.gen_failures.is_empty() && self.rule_failures.is_empty()
    }
}

/// Cylinder factorization B ⊔ B -> Cyl(B) -> B of the fold map.
#[derive(Clone, Debug)]
pub struct Cylinder {
    pub base: DgPresentation,
    pub pres: DgPresentation,
    pub incl: Substitution,
    pub incl_prime: Substitution,
    pub proj: Substitution,
    pub prime: BTreeMap<Sym, Sym>,
    pub shift: BTreeMap<Sym, Sym>,
}

impl Cylinder {
    /// The contracting homotopy H of the cylinder: the (i∘π, id)-biderivation
    /// with H(g) = 0, H(g') = -sg, H(sg) = 0.
    fn homotopy(&self, e: &Element) -> Result<Element> {
        let ip = self.incl.compose(&self.proj, &self.pres)?;
        let mut acc = Element::zero(e.src().clone(), e.tgt().clone(), e.deg() + 1);
        let primed_of: BTreeMap<Sym, Sym> =
            self.prime.iter().map(|(k, v)| (v.clone(), k.clone())).collect();
        for (path, coeff) in e.terms() {
            let mut prefix_deg = 0i64;
            for j in 0..path.len() {
                let arrow = &path.0[j];
                let h_mid = if let Some(orig) = primed_of.get(arrow) {
                    // H(g') = -sg
                    Some(
                        Element::path(&self.pres.quiver, Path(vec![self.shift[orig].clone()]))?
                            .neg(),
                    )
                } else {
                    None
                };
                if let Some(mid) = h_mid {
                    let left = if j == 0 {
                        Element::identity(mid.tgt().clone())
                    } else {
                        let raw = Element::path(&self.pres.quiver, Path(path.0[..j].to_vec()))?;
                        ip.apply(&raw, &self.pres)?
                    };
                    let right = if j + 1 == path.len() {
                        Element::identity(mid.src().clone())
                    } else {
                        Element::path(&self.pres.quiver, Path(path.0[j + 1..].to_vec()))?
                    };
                    let sign = if prefix_deg % 2 == 0 { 1 } else { -1 };
                    let term = left
                        .mul(&mid)?
                        .mul(&right)?
                        .scale(&Scalar::int(sign))
                        .scale(coeff);
                    acc = acc.add(&term)?;
                }
                prefix_deg += self.pres.quiver.arrow(arrow)?.deg;
            }
        }
        self.pres.nf(&acc)
    }

    /// Check id - i∘π = dH + Hd on every generator of the cylinder.
    pub fn check_homotopy_identity(&self) -> Result<Vec<(Sym, Element)>> {
        let ip = self.incl.compose(&self.proj, &self.pres)?;
        let mut failures = Vec::new();
        for a in self.pres.quiver.arrows() {
            let g = Element::path(&self.pres.quiver, Path(vec![a.name.clone()]))?;
            let lhs = g.sub(&ip.apply(&g, &self.pres)?)?;
            let rhs = self
                .pres
                .d(&self.homotopy(&g)?)?
                .add(&self.homotopy(&self.pres.d(&g)?)?)?;
            let diff = self.pres.nf(&lhs.sub(&rhs)?)?;
            if !diff.is_zero() {
                failures.push((a.name.clone(), diff));
            }
        }
        Ok(failures)
    }

    /// π ∘ i = id on generators.
    pub fn check_retraction(&self) -> Result<bool> {
        for a in self.base.quiver.arrows() {
            let g = Element::path(&self.base.quiver, Path(vec![a.name.clone()]))?;
            let through = self
                .proj
                .apply(&self.incl.apply(&g, &self.pres)?, &self.base)?;
            if through != self.base.nf(&g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// One generator v with dv = 0: the cylinder satisfies d(sv) = v - v'.
    #[test]
    fn cylinder_on_single_generator() {
        let mut q = GradedQuiver::new();
        q.add_object("0").unwrap();
        q.add_arrow("v", "0", "0", 0).unwrap();
        let pres = DgPresentation::new(q, RewriteSystem::empty(), BTreeMap::new()).unwrap();
        let prime: BTreeMap<Sym, Sym> = [(Sym::from("v"), Sym::from("v'"))].into();
        let shift: BTreeMap<Sym, Sym> = [(Sym::from("v"), Sym::from("sv"))].into();
        let cyl = pres.cylinder(&prime, &shift).unwrap();
        let dsv = cyl.pres.d_arrow(&"sv".into()).unwrap();
        let v = Element::path(&cyl.pres.quiver, Path::of(&["v"])).unwrap();
        let vp = Element::path(&cyl.pres.quiver, Path::of(&["v'"])).unwrap();
        assert_eq!(dsv, v.sub(&vp).unwrap());
        assert!(cyl.pres.check_d_squared().unwrap().pass());
        assert!(cyl.check_retraction().unwrap());
        assert!(cyl.check_homotopy_identity().unwrap().is_empty());
    }

    #[test]
    fn leibniz_sign() {
        // d(b b*) with d b = a - a', d b* = a* - a'* and |b| = 1:
        // d(b b*) = (a - a') b* - b (a* - a'*)
        let mut q = GradedQuiver::new();
        q.add_object("0").unwrap();
        q.add_object("1").unwrap();
        for (name, src, tgt, deg) in [
            ("a", "1", "0", 0),
            ("a'", "1", "0", 0),
            ("b", "1", "0", 1),
            ("a*", "0", "1", 0),
            ("a'*", "0", "1", 0),
            ("b*", "0", "1", 1),
        ] {
            q.add_arrow(name, src, tgt, deg).unwrap();
        }
        let a = Element::path(&q, Path::of(&["a"])).unwrap();
        let ap = Element::path(&q, Path::of(&["a'"])).unwrap();
        let astar = Element::path(&q, Path::of(&["a*"])).unwrap();
        let apstar = Element::path(&q, Path::of(&["a'*"])).unwrap();
        let mut diff = BTreeMap::new();
        diff.insert(Sym::from("b"), a.sub(&ap).unwrap());
        diff.insert(Sym::from("b*"), astar.sub(&apstar).unwrap());
        let pres = DgPresentation::new(q, RewriteSystem::empty(), diff).unwrap();
        let b = pres.gen("b").unwrap();
        let bstar = pres.gen("b*").unwrap();
        let bbstar = b.mul(&bstar).unwrap();
        let got = pres.d(&bbstar).unwrap();
        let want = a
            .sub(&ap)
            .unwrap()
            .mul(&bstar)
            .unwrap()
            .sub(&b.mul(&astar.sub(&apstar).unwrap()).unwrap())
            .unwrap();
        assert_eq!(got, want);
    }
}
