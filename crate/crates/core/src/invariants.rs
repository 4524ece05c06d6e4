//! Classical and new invariants extracted from braid closures, and the
//! Markov-invariance harness that cross-checks them over representative
//! families.

use crate::alex::{alexander_polynomial, AlexMethod, AlexOutcome, AlexPoly};
use crate::braid::{BraidWord, MarkovMove};
use crate::closure::hc0_presentation;
use crate::count::{point_count, CountReport, CountRequest};
use crate::fq::Fq;
use crate::group::{hom_count, FiniteGroup};
use crate::Result;
use std::collections::BTreeMap;

pub use crate::group::AbelianInvariants;
pub use crate::peripheral::{knot_group_presentation, peripheral_presentation};

/// |Hom(π(closure), T)| by exhaustive enumeration.
pub fn finite_hom_count(b: &BraidWord, target: &FiniteGroup) -> Result<CountReport> {
    let g = knot_group_presentation(b)?;
    let count = hom_count(&g, target)?;
    Ok(CountReport {
        invariant: "finite_hom_count".into(),
        target: target.name.clone(),
        count,
    })
}

/// Normalized Alexander polynomial of the closure (knots), by either route.
pub fn alexander(b: &BraidWord, method: AlexMethod) -> Result<AlexOutcome> {
    let g = knot_group_presentation(b)?;
    alexander_polynomial(b, &g, method)
}

/// Point counts of the degree-0 homology presentation at every unit pair
/// (λ, μ) of F_q, keyed for exact comparison across representatives.
pub fn hc0_point_grid(b: &BraidWord, q: u16, dim: usize) -> Result<Vec<((u16, u16), u64)>> {
    let hc0 = hc0_presentation(b)?;
    let field = Fq::new(q)?;
    let mut out = Vec::new();
    for lam in field.units() {
        for mu in field.units() {
            let mut pins = BTreeMap::new();
            pins.insert("lambda".to_string(), lam);
            pins.insert("mu".to_string(), mu);
            let req = CountRequest { q, dim, pins };
            out.push(((lam, mu), point_count(&hc0, &req)?.count));
        }
    }
    Ok(out)
}

/// The Markov representatives used by the invariance suite: the braid, a
/// conjugate, and both stabilizations.
pub fn markov_representatives(b: &BraidWord) -> Result<Vec<(String, BraidWord)>> {
    let mut reps = vec![("original".to_string(), b.clone())];
    if b.strand_count() >= 2 {
        let conj = b.markov_move(&MarkovMove::Conjugate(BraidWord::new(
            b.strand_count(),
            vec![1],
        )?))?;
        reps.push(("conjugate_s1".into(), conj));
    }
    reps.push((
        "stabilize_pos".into(),
        b.markov_move(&MarkovMove::StabilizePositive)?,
    ));
    reps.push((
        "stabilize_neg".into(),
        b.markov_move(&MarkovMove::StabilizeNegative)?,
    ));
    Ok(reps)
}

/// Which invariant the suite compares across representatives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvariantKind {
    Alexander,
    HomCount(String),
    Hc0Points { q: u16 },
}

#[derive(Clone, Debug, PartialEq)]
pub enum InvariantValue {
    Alexander(AlexPoly),
    Count(u64),
    Grid(Vec<((u16, u16), u64)>),
}

#[derive(Clone, Debug)]
pub struct InvarianceRow {
    pub representative: String,
    pub braid: String,
    pub value: InvariantValue,
}

#[derive(Clone, Debug)]
pub struct InvarianceReport {
    pub invariant: String,
    pub rows: Vec<InvarianceRow>,
    pub all_equal: bool,
}

pub fn evaluate_invariant(kind: &InvariantKind, b: &BraidWord) -> Result<InvariantValue> {
    match kind {
        InvariantKind::Alexander => match alexander(b, AlexMethod::Burau)? {
            AlexOutcome::Knot(p) => Ok(InvariantValue::Alexander(p)),
            AlexOutcome::Link(_) => Err(crate::Error::MultiComponent(
                b.strand_orbits().component_count(),
            )),
        },
        InvariantKind::HomCount(name) => {
            let target = FiniteGroup::by_name(name)?;
            Ok(InvariantValue::Count(finite_hom_count(b, &target)?.count))
        }
        InvariantKind::Hc0Points { q } => Ok(InvariantValue::Grid(hc0_point_grid(b, *q, 1)?)),
    }
}

/// Evaluate an invariant on the braid's Markov representatives (plus any
/// caller-supplied extras) and report pairwise equality.
pub fn invariance_suite(
    kind: &InvariantKind,
    b: &BraidWord,
    extra_reps: &[BraidWord],
) -> Result<InvarianceReport> {
    let mut reps = markov_representatives(b)?;
    for (i, r) in extra_reps.iter().enumerate() {
        reps.push((format!("extra_{i}"), r.clone()));
    }
    let mut rows = Vec::new();
    for (name, rep) in &reps {
        rows.push(InvarianceRow {
            representative: name.clone(),
            braid: rep.to_string(),
            value: evaluate_invariant(kind, rep)?,
        });
    }
    let all_equal = rows.windows(2).all(|w| w[0].value == w[1].value);
    Ok(InvarianceReport {
        invariant: format!("{kind:?}"),
        rows,
        all_equal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn trefoil() -> BraidWord {
        BraidWord::new(2, vec![1, 1, 1]).unwrap()
    }

    #[test]
    fn alexander_trefoil_both_routes() {
        let b = trefoil();
        let burau = alexander(&b, AlexMethod::Burau).unwrap();
        let fox = alexander(&b, AlexMethod::Fox).unwrap();
        assert_eq!(burau, fox);
        match burau {
            AlexOutcome::Knot(p) => {
                assert_eq!(p.to_string(), "t^2 - t + 1");
                assert!(p.is_symmetric());
            }
            _ => panic!("trefoil closes to a knot"),
        }
    }

    #[test]
    fn alexander_figure_eight() {
        let b = BraidWord::new(3, vec![1, -2, 1, -2]).unwrap();
        let burau = alexander(&b, AlexMethod::Burau).unwrap();
        let fox = alexander(&b, AlexMethod::Fox).unwrap();
        assert_eq!(burau, fox);
        match burau {
            AlexOutcome::Knot(p) => assert_eq!(p.to_string(), "t^2 - 3*t + 1"),
            _ => panic!("figure-eight closes to a knot"),
        }
    }

    #[test]
    fn alexander_unknot() {
        let b = BraidWord::identity(1);
        match alexander(&b, AlexMethod::Burau).unwrap() {
            AlexOutcome::Knot(p) => assert_eq!(p, AlexPoly::one()),
            _ => panic!(),
        }
    }

    #[test]
    fn trefoil_hom_s3_is_12() {
        let b = trefoil();
        let s3 = FiniteGroup::symmetric(3);
        assert_eq!(finite_hom_count(&b, &s3).unwrap().count, 12);
    }

    #[test]
    fn knot_group_abelianization_rank_one() {
        for b in [
            trefoil(),
            BraidWord::new(3, vec![1, -2, 1, -2]).unwrap(),
            BraidWord::new(2, vec![1, 1, 1, 1, 1]).unwrap(),
        ] {
            let ab = knot_group_presentation(&b).unwrap().abelianization();
            assert_eq!(ab.free_rank, 1);
            assert!(ab.torsion.iter().all(|d| *d == BigInt::from(1)));
        }
        // Hopf link: free rank 2
        let hopf = BraidWord::new(2, vec![1, 1]).unwrap();
        let ab = knot_group_presentation(&hopf).unwrap().abelianization();
        assert_eq!(ab.free_rank, 2);
    }

    #[test]
    fn figure_eight_group_shape() {
        let b = BraidWord::new(3, vec![1, -2, 1, -2]).unwrap();
        let g = knot_group_presentation(&b).unwrap();
        assert_eq!(g.num_generators, 3);
        assert_eq!(g.relators.len(), 3);
    }

    #[test]
    fn alexander_markov_invariance() {
        let report = invariance_suite(&InvariantKind::Alexander, &trefoil(), &[]).unwrap();
        assert!(report.all_equal, "{report:#?}");
        assert!(report.rows.len() >= 3);
    }

    #[test]
    fn hom_count_markov_invariance() {
        let report =
            invariance_suite(&InvariantKind::HomCount("s3".into()), &trefoil(), &[]).unwrap();
        assert!(report.all_equal);
        assert_eq!(report.rows[0].value, InvariantValue::Count(12));
    }
}
