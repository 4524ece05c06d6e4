//! Verifiers for the structural conditions an operator must satisfy:
//! Yang-Baxter, braid relations, dualizability, the Wada condition and its
//! torsion, and σ-naturality of colorings.

use crate::element::Element;
use crate::operators::{OperatorKind, YbOperator};
use crate::quiver::Path;
use crate::subst::Substitution;
use crate::Result;

/// One line of a verification report.
#[derive(Clone, Debug)]
pub struct CheckItem {
    pub check: String,
    pub generator: String,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Default)]
pub struct CheckReport {
    pub items: Vec<CheckItem>,
}

impl CheckReport {
    pub fn pass(&self) -> bool {
        self.items.iter().all(|i| i.pass)
    }

    fn push_cmp(&mut self, check: &str, generator: &str, lhs: &Element, rhs: &Element) {
        self.items.push(CheckItem {
            check: check.to_string(),
            generator: generator.to_string(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            pass: lhs == rhs,
        });
    }

    fn push_flag(&mut self, check: &str, generator: &str, note: &str, pass: bool) {
        self.items.push(CheckItem {
            check: check.to_string(),
            generator: generator.to_string(),
            lhs: note.to_string(),
            rhs: String::new(),
            pass,
        });
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.items.extend(other.items);
    }
}

/// Compare two substitutions generator-wise and append one report line per
/// generator of `domain`.
fn compare_substitutions(
    report: &mut CheckReport,
    check: &str,
    f: &Substitution,
    g: &Substitution,
    domain: &crate::dg::DgPresentation,
    target: &crate::dg::DgPresentation,
) -> Result<()> {
    for a in domain.quiver.arrows() {
        let gen = Element::path(&domain.quiver, Path(vec![a.name.clone()]))?;
        let l = f.apply(&gen, target)?;
        let r = g.apply(&gen, target)?;
        report.push_cmp(check, a.name.as_str(), &l, &r);
    }
    Ok(())
}

/// σ23 σ12 σ23 = σ12 σ23 σ12 on every generator of A^{(3)}, plus
/// two-sided invertibility of σ on A^{(2)}.
pub fn verify_yang_baxter(op: &YbOperator) -> Result<CheckReport> {
    let mut report = CheckReport::default();
    let p3 = op.presentation(3)?;
    let s12 = op.sigma(3, 1)?;
    let s23 = op.sigma(3, 2)?;
    let lhs = s23.compose(&s12.compose(&s23, &p3)?, &p3)?;
    let rhs = s12.compose(&s23.compose(&s12, &p3)?, &p3)?;
    compare_substitutions(&mut report, "yang_baxter", &lhs, &rhs, &p3, &p3)?;

    let p2 = op.presentation(2)?;
    let s = op.sigma(2, 1)?;
    let sinv = op.sigma_inv(2, 1)?;
    for (lhs, residue) in s.respects_rules(&p2, &p2)? {
        report.push_flag(
            "sigma_respects_relations",
            "-",
            &format!("rule {lhs} violated, residue {residue}"),
            false,
        );
    }
    let id = Substitution::identity(&p2);
    compare_substitutions(
        &mut report,
        "sigma_right_inverse",
        &s.compose(&sinv, &p2)?,
        &id,
        &p2,
        &p2,
    )?;
    compare_substitutions(
        &mut report,
        "sigma_left_inverse",
        &sinv.compose(&s, &p2)?,
        &id,
        &p2,
        &p2,
    )?;
    Ok(report)
}

/// Braid relation σ1σ2σ1 = σ2σ1σ2 on A^{(3)} and far commutation
/// σ1σ3 = σ3σ1 on A^{(4)}.
pub fn verify_braid_relations(op: &YbOperator) -> Result<CheckReport> {
    let mut report = verify_yang_baxter(op)?;
    let p4 = op.presentation(4)?;
    let s1 = op.sigma(4, 1)?;
    let s3 = op.sigma(4, 3)?;
    let lhs = s1.compose(&s3, &p4)?;
    let rhs = s3.compose(&s1, &p4)?;
    compare_substitutions(&mut report, "far_commutation", &lhs, &rhs, &p4, &p4)?;
    Ok(report)
}

/// Dualizability witnesses, the Wada map j', and the torsion χ = (j')^{-1}∘j,
/// compared against the operator's declared torsion.
pub fn verify_reidemeister(op: &YbOperator) -> Result<CheckReport> {
    let mut report = CheckReport::default();
    let dual = match op.dual_data()? {
        Some(d) => d,
        None => {
            debug_assert!(matches!(op.kind, OperatorKind::HumphriesMagnus));
            report.push_flag(
                "dualizability",
                "-",
                "operator carries no coproduct-over-base structure; not applicable",
                true,
            );
            return Ok(report);
        }
    };
    let p2 = op.presentation(2)?;
    let p1 = op.presentation(1)?;
    let id2 = Substitution::identity(&p2);
    compare_substitutions(
        &mut report,
        "sigma_u_r_inverse",
        &dual.sigma_u_r.compose(&dual.sigma_u_r_inv, &p2)?,
        &id2,
        &p2,
        &p2,
    )?;
    compare_substitutions(
        &mut report,
        "sigma_u_r_inverse_other_side",
        &dual.sigma_u_r_inv.compose(&dual.sigma_u_r, &p2)?,
        &id2,
        &p2,
        &p2,
    )?;
    compare_substitutions(
        &mut report,
        "sigma_u_l_inverse",
        &dual.sigma_u_l.compose(&dual.sigma_u_l_inv, &p2)?,
        &id2,
        &p2,
        &p2,
    )?;
    compare_substitutions(
        &mut report,
        "sigma_u_l_inverse_other_side",
        &dual.sigma_u_l_inv.compose(&dual.sigma_u_l, &p2)?,
        &id2,
        &p2,
        &p2,
    )?;

    // (j, j') = ∇ ∘ (σ_U^R)^{-1} ∘ σ_U^L restricted to the two copies
    let fold = op.fold()?;
    let through = dual.sigma_u_r_inv.compose(&dual.sigma_u_l, &p2)?;
    let jfull = fold.compose(&through, &p1)?;
    let mut j = Substitution::identity(&p1);
    let mut jprime = Substitution::identity(&p1);
    for a in p1.quiver.arrows() {
        // copy-1 generators carry the base names of A^{(1)}
        j.arrow_map
            .insert(a.name.clone(), jfull.arrow_map[&a.name].clone());
    }
    for a2 in p2.quiver.arrows() {
        let base = crate::operators::fold_arrow_name(a2.name.as_str());
        if p1.quiver.arrow(&base.as_str().into()).is_ok() && a2.name.as_str() != base {
            jprime
                .arrow_map
                .insert(base.as_str().into(), jfull.arrow_map[&a2.name].clone());
        }
    }

    // candidate inverse for j': transport σ_U^R through the fold
    let mut jprime_inv = Substitution::identity(&p1);
    for a in p1.quiver.arrows() {
        let gen2 = Element::path(&p2.quiver, Path(vec![a.name.clone()]))?;
        let img = fold.apply(&dual.sigma_u_r.apply(&gen2, &p2)?, &p1)?;
        jprime_inv.arrow_map.insert(a.name.clone(), img);
    }
    let id1 = Substitution::identity(&p1);
    compare_substitutions(
        &mut report,
        "wada_j_prime_invertible",
        &jprime_inv.compose(&jprime, &p1)?,
        &id1,
        &p1,
        &p1,
    )?;
    compare_substitutions(
        &mut report,
        "wada_j_prime_invertible_other_side",
        &jprime.compose(&jprime_inv, &p1)?,
        &id1,
        &p1,
        &p1,
    )?;

    let chi = jprime_inv.compose(&j, &p1)?;
    match op.torsion_on_copy(1, 1)? {
        Some((declared, declared_inv)) => {
            compare_substitutions(&mut report, "torsion_matches_declared", &chi, &declared, &p1, &p1)?;
            compare_substitutions(
                &mut report,
                "torsion_inverse",
                &declared.compose(&declared_inv, &p1)?,
                &id1,
                &p1,
                &p1,
            )?;
        }
        None => report.push_flag("torsion_matches_declared", "-", "no declared torsion", false),
    }
    Ok(report)
}

/// The shipped negative control: x1 -> x2, x2 -> x1 x2 on the free-group
/// carrier is invertible but not Yang-Baxter. Returns the witnesses where
/// σ23 σ12 σ23 and σ12 σ23 σ12 disagree on A^{(3)}.
pub fn non_yang_baxter_witnesses() -> Result<Vec<(crate::quiver::Sym, Element, Element)>> {
    let op = crate::operators::catalog_operator("artin")?;
    let p3 = op.presentation(3)?;
    let bad_at = |i: usize| -> Result<Substitution> {
        let mut s = Substitution::identity(&p3);
        let im = |names: &[String]| -> Result<Element> {
            Element::path(
                &p3.quiver,
                Path(names.iter().map(|s| s.as_str().into()).collect()),
            )
        };
        let x = |j: usize| format!("x{j}");
        let xi = |j: usize| format!("x{j}^-1");
        s.arrow_map.insert(x(i).as_str().into(), im(&[x(i + 1)])?);
        s.arrow_map.insert(xi(i).as_str().into(), im(&[xi(i + 1)])?);
        s.arrow_map
            .insert(x(i + 1).as_str().into(), im(&[x(i), x(i + 1)])?);
        s.arrow_map
            .insert(xi(i + 1).as_str().into(), im(&[xi(i + 1), xi(i)])?);
        Ok(s)
    };
    let s12 = bad_at(1)?;
    let s23 = bad_at(2)?;
    let lhs = s23.compose(&s12.compose(&s23, &p3)?, &p3)?;
    let rhs = s12.compose(&s23.compose(&s12, &p3)?, &p3)?;
    lhs.disagreements(&rhs, &p3, &p3)
}

/// Whether the computed torsion is the identity map (trivial torsion).
pub fn torsion_is_trivial(op: &YbOperator) -> Result<bool> {
    let p1 = op.presentation(1)?;
    match op.torsion_on_copy(1, 1)? {
        Some((chi, _)) => chi.agrees_with(&Substitution::identity(&p1), &p1, &p1),
        None => Ok(false),
    }
}

/// σ∘(θ⨿id) = (id⨿θ)∘σ and σ∘(id⨿θ) = (θ⨿id)∘σ on all generators of A^{(2)},
/// after checking that θ is well defined (respects the relations).
pub fn verify_sigma_natural(op: &YbOperator, theta_copy1: &Substitution, theta_copy2: &Substitution) -> Result<CheckReport> {
    let mut report = CheckReport::default();
    let p2 = op.presentation(2)?;
    for (label, theta) in [("copy1", theta_copy1), ("copy2", theta_copy2)] {
        for (lhs, residue) in theta.respects_rules(&p2, &p2)? {
            report.push_flag(
                "coloring_respects_relations",
                label,
                &format!("rule {lhs} violated, residue {residue}"),
                false,
            );
        }
    }
    let s = op.sigma(2, 1)?;
    let lhs = s.compose(theta_copy1, &p2)?;
    let rhs = theta_copy2.compose(&s, &p2)?;
    compare_substitutions(&mut report, "sigma_natural_first", &lhs, &rhs, &p2, &p2)?;
    let lhs = s.compose(theta_copy2, &p2)?;
    let rhs = theta_copy1.compose(&s, &p2)?;
    compare_substitutions(&mut report, "sigma_natural_second", &lhs, &rhs, &p2, &p2)?;
    Ok(report)
}

/// The shipped θ_λ coloring of a GMV-type operator, verified σ-natural.
pub fn verify_theta_lambda(op: &YbOperator) -> Result<Option<CheckReport>> {
    let t1 = op.theta_lambda_on_copy(2, 1)?;
    let t2 = op.theta_lambda_on_copy(2, 2)?;
    match (t1, t2) {
        (Some(t1), Some(t2)) => Ok(Some(verify_sigma_natural(op, &t1, &t2)?)),
        _ => Ok(None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operators::catalog_operator;

    #[test]
    fn artin_is_yang_baxter() {
        let op = catalog_operator("artin").unwrap();
        assert!(verify_yang_baxter(&op).unwrap().pass());
    }

    #[test]
    fn gmv_is_yang_baxter() {
        let op = catalog_operator("gmv").unwrap();
        let report = verify_yang_baxter(&op).unwrap();
        assert!(report.pass(), "failures: {:#?}", report.items.iter().filter(|i| !i.pass).collect::<Vec<_>>());
    }

    #[test]
    fn gmv_torsion() {
        let op = catalog_operator("gmv").unwrap();
        let report = verify_reidemeister(&op).unwrap();
        assert!(report.pass(), "failures: {:#?}", report.items.iter().filter(|i| !i.pass).collect::<Vec<_>>());
        assert!(!torsion_is_trivial(&op).unwrap());
    }

    #[test]
    fn artin_torsion_trivial() {
        let op = catalog_operator("artin").unwrap();
        assert!(verify_reidemeister(&op).unwrap().pass());
        assert!(torsion_is_trivial(&op).unwrap());
    }

    #[test]
    fn negative_control_fails_yang_baxter() {
        // x1 -> x2, x2 -> x1 x2 is invertible but not Yang-Baxter
        let op = catalog_operator("artin").unwrap();
        let p3 = op.presentation(3).unwrap();
        let bad_at = |i: usize| -> Substitution {
            let mut s = Substitution::identity(&p3);
            let im = |names: &[&str]| {
                Element::path(&p3.quiver, Path(names.iter().map(|s| (*s).into()).collect()))
                    .unwrap()
            };
            let x = |j: usize| format!("x{j}");
            let xi = |j: usize| format!("x{j}^-1");
            s.arrow_map.insert(x(i).as_str().into(), im(&[&x(i + 1)]));
            s.arrow_map.insert(xi(i).as_str().into(), im(&[&xi(i + 1)]));
            s.arrow_map
                .insert(x(i + 1).as_str().into(), im(&[&x(i), &x(i + 1)]));
            s.arrow_map
                .insert(xi(i + 1).as_str().into(), im(&[&xi(i + 1), &xi(i)]));
            s
        };
        let s12 = bad_at(1);
        let s23 = bad_at(2);
        let lhs = s23
            .compose(&s12.compose(&s23, &p3).unwrap(), &p3)
            .unwrap();
        let rhs = s12
            .compose(&s23.compose(&s12, &p3).unwrap(), &p3)
            .unwrap();
        let witnesses = lhs.disagreements(&rhs, &p3, &p3).unwrap();
        assert!(!witnesses.is_empty());
    }

    #[test]
    fn theta_lambda_sigma_natural() {
        let op = catalog_operator("gmv_mu_central").unwrap();
        let report = verify_theta_lambda(&op).unwrap().unwrap();
        assert!(report.pass());
    }

    #[test]
    fn one_sided_theta_fails() {
        // θ(a) = a, θ(a*) = λ a* is not σ-natural
        let op = catalog_operator("gmv_mu_central").unwrap();
        let p2 = op.presentation(2).unwrap();
        let mk = |copy: usize| {
            let mut s = Substitution::identity(&p2);
            let astar: crate::quiver::Sym = format!("a{copy}*").as_str().into();
            let img = s.arrow_map[&astar].scale(&crate::scalar::Scalar::var("lambda"));
            s.arrow_map.insert(astar, img);
            s
        };
        let report = verify_sigma_natural(&op, &mk(1), &mk(2)).unwrap();
        assert!(!report.pass());
    }

    #[test]
    fn humphries_magnus_reidemeister_not_applicable() {
        let op = catalog_operator("humphries_magnus").unwrap();
        let report = verify_reidemeister(&op).unwrap();
        assert_eq!(report.items.len(), 1);
    }
}
