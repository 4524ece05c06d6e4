//! Oriented rewriting on path words. Equality in a presented k-category is
//! decided by reduction to normal form; soundness of a shipped rule set is
//! guarded by the mechanical critical-pair check.

use crate::element::Element;
use crate::quiver::{GradedQuiver, Path};
use crate::scalar::Scalar;
use crate::{Error, Result};
use std::collections::BTreeMap;

/// Hard cap on rule applications per `normal_form` call.
pub const STEP_BUDGET: u64 = 1_000_000;

/// One oriented rule: a monomial path rewrites to an element with the same
/// endpoints and degree.
#[derive(Clone, Debug, PartialEq)]
pub struct Rule {
    pub lhs: Path,
    pub rhs: Element,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct RewriteSystem {
    rules: Vec<Rule>,
}

impl RewriteSystem {
    pub fn empty() -> Self {
        RewriteSystem::default()
    }

    /// Build a system, validating that every rule preserves endpoints and
    /// degree. Rules are kept sorted by (length, lexicographic) of the LHS.
    pub fn new(quiver: &GradedQuiver, rules: Vec<Rule>) -> Result<Self> {
        for rule in &rules {
            let (src, tgt, deg) = rule.lhs.typecheck(quiver)?;
            if !rule.rhs.is_zero() {
                if *rule.rhs.src() != src || *rule.rhs.tgt() != tgt {
                    return Err(Error::EndpointMismatch(format!(
                        "rule {} -> {} changes endpoints",
                        rule.lhs, rule.rhs
                    )));
                }
                if rule.rhs.deg() != deg {
                    return Err(Error::DegreeMismatch(format!(
                        "rule {} -> {} changes degree",
                        rule.lhs, rule.rhs
                    )));
                }
            }
        }
        let mut rules = rules;
        rules.sort_by(|a, b| a.lhs.cmp(&b.lhs));
        Ok(RewriteSystem { rules })
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn merge(&self, other: &RewriteSystem, quiver: &GradedQuiver) -> Result<RewriteSystem> {
        let mut rules = self.rules.clone();
        rules.extend(other.rules.iter().cloned());
        RewriteSystem::new(quiver, rules)
    }

    /// Leftmost redex of a word: smallest start position, then first rule in
    /// canonical order among those matching there.
    fn leftmost_redex(&self, word: &Path) -> Option<(usize, &Rule)> {
        for pos in 0..word.len() {
            for rule in &self.rules {
                let l = rule.lhs.len();
                if pos + l <= word.len() && word.0[pos..pos + l] == rule.lhs.0[..] {
                    return Some((pos, rule));
                }
            }
        }
        None
    }

    fn splice(word: &Path, pos: usize, len: usize, replacement: &Path) -> Path {
        let mut v = Vec::with_capacity(word.len() - len + replacement.len());
        v.extend_from_slice(&word.0[..pos]);
        v.extend_from_slice(&replacement.0);
        v.extend_from_slice(&word.0[pos + len..]);
        Path(v)
    }

    /// Reduce to the fixpoint of leftmost-innermost rule application.
    /// Idempotent and linear over scalars by construction.
    pub fn normal_form(&self, quiver: &GradedQuiver, e: &Element) -> Result<Element> {
        self.normal_form_budgeted(quiver, e, STEP_BUDGET)
    }

    pub fn normal_form_budgeted(
        &self,
        quiver: &GradedQuiver,
        e: &Element,
        budget: u64,
    ) -> Result<Element> {
        let mut steps = 0u64;
        let mut out: BTreeMap<Path, Scalar> = BTreeMap::new();
        let mut current: BTreeMap<Path, Scalar> =
            e.terms().map(|(p, c)| (p.clone(), c.clone())).collect();
        // rewrite every term one step per round, merging duplicates between
        // rounds so cancellations collapse before they can fan out
        while !current.is_empty() {
            let mut next: BTreeMap<Path, Scalar> = BTreeMap::new();
            for (word, coeff) in current {
                if coeff.is_zero() {
                    continue;
                }
                match self.leftmost_redex(&word) {
                    None => {
                        let entry = out.entry(word).or_insert_with(Scalar::zero);
                        *entry = entry.add(&coeff);
                    }
                    Some((pos, rule)) => {
                        steps += 1;
                        if steps > budget {
                            return Err(Error::StepBudgetExceeded(budget));
                        }
                        for (rp, rc) in rule.rhs.terms() {
                            let spliced = Self::splice(&word, pos, rule.lhs.len(), rp);
                            let c = coeff.mul(rc);
                            let entry = next.entry(spliced).or_insert_with(Scalar::zero);
                            *entry = entry.add(&c);
                        }
                    }
                }
            }
            next.retain(|_, c| !c.is_zero());
            current = next;
        }
        out.retain(|_, c| !c.is_zero());
        Element::from_terms(
            quiver,
            e.src().clone(),
            e.tgt().clone(),
            e.deg(),
            out,
        )
    }

    /// All overlap ambiguities between rule left-hand sides, with both
    /// branches reduced; pairs whose normal forms differ are unresolved.
    pub fn check_local_confluence(&self, quiver: &GradedQuiver) -> ConfluenceReport {
        let mut unresolved = Vec::new();
        let mut seen = std::collections::BTreeSet::new();
        for (i, r1) in self.rules.iter().enumerate() {
            for (j, r2) in self.rules.iter().enumerate() {
                // proper suffix of r1 = prefix of r2
                let l1 = r1.lhs.len();
                let l2 = r2.lhs.len();
                for k in 1..l1.min(l2) {
                    if r1.lhs.0[l1 - k..] == r2.lhs.0[..k] {
                        let word = Self::splice(&r1.lhs, l1 - k, k, &r2.lhs);
                        self.branch_pair(quiver, &word, (0, r1), (l1 - k, r2), &mut seen, &mut unresolved);
                    }
                }
                // two distinct rules with the same left-hand side
                if i < j && r1.lhs == r2.lhs {
                    let word = r1.lhs.clone();
                    self.branch_pair(quiver, &word, (0, r1), (0, r2), &mut seen, &mut unresolved);
                }
                // r2 contained strictly inside r1
                if l2 < l1 {
                    for pos in 0..=(l1 - l2) {
                        if r1.lhs.0[pos..pos + l2] == r2.lhs.0[..] {
                            let word = r1.lhs.clone();
                            self.branch_pair(quiver, &word, (0, r1), (pos, r2), &mut seen, &mut unresolved);
                        }
                    }
                }
            }
        }
        ConfluenceReport { unresolved }
    }

    fn branch_pair(
        &self,
        quiver: &GradedQuiver,
        word: &Path,
        left: (usize, &Rule),
        right: (usize, &Rule),
        seen: &mut std::collections::BTreeSet<(Path, usize, usize)>,
        unresolved: &mut Vec<CriticalPair>,
    ) {
        if left.0 == right.0 && left.1 == right.1 {
            return;
        }
        if !seen.insert((word.clone(), left.0, right.0)) {
            return;
        }
        let reduce_one = |pos: usize, rule: &Rule| -> Result<Element> {
            let mut acc: Option<Element> = None;
            for (rp, rc) in rule.rhs.terms() {
                let spliced = Self::splice(word, pos, rule.lhs.len(), rp);
                let term = if spliced.is_empty() {
                    let (src, _, _) = word.typecheck(quiver)?;
                    Element::identity(src).scale(rc)
                } else {
                    Element::term(quiver, spliced, rc.clone())?
                };
                acc = Some(match acc {
                    None => term,
                    Some(a) => a.add(&term)?,
                });
            }
            let base = match acc {
                Some(a) => a,
                None => {
                    let (src, tgt, deg) = word.typecheck(quiver)?;
                    Element::zero(src, tgt, deg)
                }
            };
            self.normal_form(quiver, &base)
        };
        let lhs_nf = reduce_one(left.0, left.1);
        let rhs_nf = reduce_one(right.0, right.1);
        match (lhs_nf, rhs_nf) {
            (Ok(a), Ok(b)) => {
                if a != b {
                    unresolved.push(CriticalPair {
                        word: word.clone(),
                        left_nf: a,
                        right_nf: b,
                    });
                }
            }
            _ => unresolved.push(CriticalPair {
                word: word.clone(),
                left_nf: Element::zero("?", "?", 0),
                right_nf: Element::zero("?", "?", 0),
            }),
        }
    }
}

/// An unresolved overlap: the superposition word and the two distinct
/// normal forms it reduces to.
#[derive(Clone, Debug)]
pub struct CriticalPair {
    pub word: Path,
    pub left_nf: Element,
    pub right_nf: Element,
}

#[derive(Clone, Debug, Default)]
pub struct ConfluenceReport {
    pub unresolved: Vec<CriticalPair>,
}

impl ConfluenceReport {
    pub fn pass(&self) -> bool {
        self.unresolved.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::Sym;

    fn free_group_one_gen() -> (GradedQuiver, RewriteSystem) {
        let mut q = GradedQuiver::new();
        q.add_object("v").unwrap();
        q.add_arrow("x", "v", "v", 0).unwrap();
        q.add_arrow("x^-1", "v", "v", 0).unwrap();
        let id = Element::identity("v");
        let rules = vec![
            Rule {
                lhs: Path::of(&["x", "x^-1"]),
                rhs: id.clone(),
            },
            Rule {
                lhs: Path::of(&["x^-1", "x"]),
                rhs: id,
            },
        ];
        let rs = RewriteSystem::new(&q, rules).unwrap();
        (q, rs)
    }

    #[test]
    fn free_reduction() {
        let (q, rs) = free_group_one_gen();
        let w = Element::path(&q, Path::of(&["x", "x", "x^-1", "x^-1"])).unwrap();
        let nf = rs.normal_form(&q, &w).unwrap();
        assert_eq!(nf, Element::identity("v"));
    }

    #[test]
    fn free_cancellation_is_confluent() {
        let (q, rs) = free_group_one_gen();
        assert!(rs.check_local_confluence(&q).pass());
    }

    #[test]
    fn budget_guard_fires() {
        // a -> a grows nothing but loops forever
        let mut q = GradedQuiver::new();
        q.add_object("v").unwrap();
        q.add_arrow("x", "v", "v", 0).unwrap();
        let bad = RewriteSystem::new(
            &q,
            vec![Rule {
                lhs: Path::of(&["x"]),
                rhs: Element::path(&q, Path::of(&["x"])).unwrap(),
            }],
        )
        .unwrap();
        let e = Element::path(&q, Path::of(&["x"])).unwrap();
        let err = bad.normal_form_budgeted(&q, &e, 10).unwrap_err();
        assert!(matches!(err, Error::StepBudgetExceeded(_)));
        let _ = Sym::from("x");
    }
}
