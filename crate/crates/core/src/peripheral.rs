//! Peripheral data of a knot from its braid: the group presentation, the
//! meridian m = x1, the longitude traced through the closed braid, and the
//! bracket-calculus presentation of the endomorphism algebra at the
//! distinguished object (the cord algebra), derived from (π, m, l) alone.
//!
//! This route is independent of the braid-action differentials, so its point
//! counts cross-check the degree-0 homology presentation.

use crate::braid::BraidWord;
use crate::closure::{canonical_relation, categorical_closure, AlgebraPresentation, ClosurePresentation};
use crate::dg::DgPresentation;
use crate::element::Element;
use crate::group::{GroupPresentation, Word};
use crate::quiver::{GradedQuiver, Path, Sym};
use crate::rewrite::RewriteSystem;
use crate::scalar::Scalar;
use crate::{Error, Result};
use std::collections::BTreeMap;

#[derive(Clone, Debug)]
pub struct PeripheralPresentation {
    pub group: GroupPresentation,
    pub meridian: Word,
    pub longitude: Word,
    pub writhe: i64,
    /// The object-0 endomorphism quotient ideal generators, as displayable
    /// words: (m-1)(m-μ) and (m-1)(l-λ).
    pub object0_ideal: Vec<String>,
}

/// The knot group via the Artin closure.
pub fn knot_group_presentation(b: &BraidWord) -> Result<GroupPresentation> {
    let op = crate::operators::catalog_operator("artin")?;
    match categorical_closure(&op, b)? {
        ClosurePresentation::Group(g) => Ok(g),
        _ => unreachable!("artin closure is a group"),
    }
}

/// Trace the strand of x1 through the closed braid. At every crossing where
/// the traced strand passes under, record the over-arc's meridian (inverted
/// at negative crossings); the longitude is that product times m^{-w}.
pub fn longitude(b: &BraidWord) -> Result<Word> {
    let orbits = b.strand_orbits();
    if orbits.component_count() != 1 {
        return Err(Error::MultiComponent(orbits.component_count()));
    }
    let n = b.strand_count();
    let w = b.writhes().total;
    let mut trace = Word::identity();
    let mut start_slot = 1usize;
    for _pass in 0..n {
        // meridians of the n arcs at the current level, in slot order
        let mut meridians: Vec<Word> = (1..=n).map(|j| Word(vec![j as i32])).collect();
        let mut cur = start_slot;
        for &letter in b.letters() {
            let k = letter.unsigned_abs() as usize;
            let (mk, mk1) = (meridians[k - 1].clone(), meridians[k].clone());
            if letter > 0 {
                // strand at slot k crosses over; slot k+1 passes under it.
                // the under-passage conjugates the running meridian by the
                // over-arc's meridian, so the conjugator grows on the left
                if cur == k + 1 {
                    trace = mk.concat(&trace);
                    cur = k;
                } else if cur == k {
                    cur = k + 1;
                }
                meridians[k - 1] = mk.concat(&mk1).concat(&mk.inverse()).free_reduce();
                meridians[k] = mk;
            } else {
                // strand at slot k+1 crosses over; slot k passes under it
                if cur == k {
                    trace = mk1.inverse().concat(&trace);
                    cur = k + 1;
                } else if cur == k + 1 {
                    cur = k;
                }
                meridians[k] = mk1.inverse().concat(&mk).concat(&mk1).free_reduce();
                meridians[k - 1] = mk1;
            }
        }
        start_slot = cur;
    }
    debug_assert_eq!(start_slot, 1, "the traced strand must close up");
    let correction = Word(vec![1]).pow(-w);
    Ok(trace.concat(&correction).free_reduce())
}

pub fn peripheral_presentation(b: &BraidWord) -> Result<PeripheralPresentation> {
    let group = knot_group_presentation(b)?;
    let l = longitude(b)?;
    let m = Word(vec![1]);
    let object0_ideal = vec![
        format!("({m} - 1)({m} - mu)"),
        format!("({m} - 1)({l} - lambda)"),
    ];
    Ok(PeripheralPresentation {
        group,
        meridian: m,
        longitude: l,
        writhe: b.writhes().total,
        object0_ideal,
    })
}

// ---------------------------------------------------------------------------
// Bracket calculus: the object-1 algebra generated by the cords [γ].

/// A polynomial in products of bracket symbols, indexed by the m-free words
/// that remain after bracket reduction.
type BPoly = BTreeMap<Vec<Word>, Scalar>;

fn bp_zero() -> BPoly {
    BTreeMap::new()
}

fn bp_const(c: Scalar) -> BPoly {
    let mut p = bp_zero();
    if !c.is_zero() {
        p.insert(Vec::new(), c);
    }
    p
}

fn bp_add(a: &BPoly, b: &BPoly) -> BPoly {
    let mut out = a.clone();
    for (k, v) in b {
        let entry = out.entry(k.clone()).or_insert_with(Scalar::zero);
        *entry = entry.add(v);
        if entry.is_zero() {
            out.remove(k);
        }
    }
    out
}

fn bp_scale(a: &BPoly, c: &Scalar) -> BPoly {
    if c.is_zero() {
        return bp_zero();
    }
    a.iter().map(|(k, v)| (k.clone(), v.mul(c))).collect()
}

fn bp_sub(a: &BPoly, b: &BPoly) -> BPoly {
    bp_add(a, &bp_scale(b, &Scalar::int(-1)))
}

fn bp_mul(a: &BPoly, b: &BPoly) -> BPoly {
    let mut out = bp_zero();
    for (ka, va) in a {
        for (kb, vb) in b {
            let mut k = ka.clone();
            k.extend(kb.iter().cloned());
            let v = va.mul(vb);
            let entry = out.entry(k).or_insert_with(Scalar::zero);
            *entry = entry.add(&v);
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Reduce a bracket [w] to a polynomial in brackets of m-free words, using
/// [e] = 1-μ, [γ m γ'] = [γγ'] - [γ][γ'], [γm] = μ[γ], [mγ] = μ[γ] and the
/// inverse-meridian variants they imply.
pub struct BracketCalculus {
    memo: BTreeMap<Word, BPoly>,
    mu: Scalar,
}

impl BracketCalculus {
    pub fn new() -> Self {
        BracketCalculus {
            memo: BTreeMap::new(),
            mu: Scalar::var("mu"),
        }
    }

    pub fn reduce(&mut self, w: &Word) -> BPoly {
        let w = w.free_reduce();
        if let Some(hit) = self.memo.get(&w) {
            return hit.clone();
        }
        let out = self.reduce_uncached(&w);
        self.memo.insert(w, out.clone());
        out
    }

    fn reduce_uncached(&mut self, w: &Word) -> BPoly {
        if w.0.is_empty() {
            return bp_const(Scalar::one().sub(&self.mu));
        }
        let Some(pos) = w.0.iter().position(|&k| k == 1 || k == -1) else {
            // m-free: an irreducible bracket generator
            let mut p = bp_zero();
            p.insert(vec![w.clone()], Scalar::one());
            return p;
        };
        let u = Word(w.0[..pos].to_vec());
        let v = Word(w.0[pos + 1..].to_vec());
        let positive = w.0[pos] == 1;
        if positive {
            if v.0.is_empty() {
                // [u m] = μ [u]
                return bp_scale(&self.reduce(&u), &self.mu.clone());
            }
            if u.0.is_empty() {
                // [m v] = μ [v]
                return bp_scale(&self.reduce(&v), &self.mu.clone());
            }
            // [u m v] = [u v] - [u][v]
            let uv = self.reduce(&u.concat(&v));
            let prod = bp_mul(&self.reduce(&u), &self.reduce(&v));
            bp_sub(&uv, &prod)
        } else {
            let mu_inv = self.mu.pow(-1).expect("mu is a unit");
            if v.0.is_empty() {
                // [u m^{-1}] = μ^{-1} [u]
                return bp_scale(&self.reduce(&u), &mu_inv);
            }
            if u.0.is_empty() {
                // [m^{-1} v] = μ^{-1} [v]
                return bp_scale(&self.reduce(&v), &mu_inv);
            }
            // [u m^{-1} v] = [u v] + [u m^{-1}][v]
            let uv = self.reduce(&u.concat(&v));
            let um = Word(
                u.0.iter()
                    .cloned()
                    .chain(std::iter::once(-1))
                    .collect(),
            );
            let prod = bp_mul(&self.reduce(&um), &self.reduce(&v));
            bp_add(&uv, &prod)
        }
    }
}

impl Default for BracketCalculus {
    fn default() -> Self {
        Self::new()
    }
}

/// Derive a finite presentation of the object-1 algebra from (π, m, l):
/// bracket generators indexed by the m-free words that survive reduction,
/// with relations instantiated from the longitude and relator identities
/// over all probe words up to the given length.
pub fn object1_algebra(
    peri: &PeripheralPresentation,
    probe_len: usize,
) -> Result<AlgebraPresentation> {
    let n = peri.group.num_generators;
    let mut calc = BracketCalculus::new();
    let lambda = Scalar::var("lambda");

    // probe words: all free-reduced words of length <= probe_len
    let mut probes: Vec<Word> = vec![Word::identity()];
    let mut frontier: Vec<Word> = vec![Word::identity()];
    for _ in 0..probe_len {
        let mut next = Vec::new();
        for w in &frontier {
            for g in 1..=n as i32 {
                for s in [g, -g] {
                    let mut v = w.0.clone();
                    v.push(s);
                    let v = Word(v).free_reduce();
                    if v.0.len() == w.0.len() + 1 && !probes.contains(&v) {
                        probes.push(v.clone());
                        next.push(v);
                    }
                }
            }
        }
        frontier = next;
    }

    let mut raw_relations: Vec<BPoly> = Vec::new();
    // longitude relations: [w l] = λ [w] and [l w] = λ [w]
    for w in &probes {
        let wl = calc.reduce(&w.concat(&peri.longitude));
        let lw = calc.reduce(&peri.longitude.concat(w));
        let lam_w = bp_scale(&calc.reduce(w), &lambda);
        raw_relations.push(bp_sub(&wl, &lam_w));
        raw_relations.push(bp_sub(&lw, &lam_w));
    }
    // relator insertions: [u r v] = [u v]
    for r in &peri.group.relators {
        for u in &probes {
            for v in &probes {
                let urv = calc.reduce(&u.concat(r).concat(v));
                let uv = calc.reduce(&u.concat(v));
                raw_relations.push(bp_sub(&urv, &uv));
            }
        }
    }

    // name the surviving bracket generators
    let mut gens: Vec<Word> = Vec::new();
    for rel in &raw_relations {
        for key in rel.keys() {
            for w in key {
                if !gens.contains(w) {
                    gens.push(w.clone());
                }
            }
        }
    }
    gens.sort();
    let mut q = GradedQuiver::new();
    q.add_object("1")?;
    let mut name_of: BTreeMap<Word, Sym> = BTreeMap::new();
    for (i, w) in gens.iter().enumerate() {
        let name = format!("c{i}");
        q.add_arrow(name.as_str(), "1", "1", 0)?;
        name_of.insert(w.clone(), name.as_str().into());
    }
    let pres = DgPresentation::new(q, RewriteSystem::empty(), BTreeMap::new())?;

    let mut relations: Vec<Element> = Vec::new();
    for rel in &raw_relations {
        let mut e = Element::zero("1", "1", 0);
        for (key, coeff) in rel {
            let term = if key.is_empty() {
                Element::identity("1")
            } else {
                let letters: Vec<Sym> = key.iter().map(|w| name_of[w].clone()).collect();
                Element::path(&pres.quiver, Path(letters))?
            };
            e = e.add(&term.scale(coeff))?;
        }
        let e = canonical_relation(&e);
        if e.is_zero() || relations.contains(&e) {
            continue;
        }
        relations.push(e);
    }
    Ok(AlgebraPresentation {
        pres,
        relations,
        params: vec!["lambda".into(), "mu".into()],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::count::{point_count, CountRequest};

    #[test]
    fn unknot_longitude_is_trivial() {
        let b = BraidWord::identity(1);
        let l = longitude(&b).unwrap();
        assert!(l.is_identity());
    }

    #[test]
    fn longitude_abelianizes_to_zero() {
        for (n, letters) in [
            (2, vec![1, 1, 1]),
            (3, vec![1, -2, 1, -2]),
            (2, vec![1, 1, 1, 1, 1]),
            (3, vec![1, 1, 1, -2, 1, -2]),
        ] {
            let b = BraidWord::new(n, letters).unwrap();
            let l = longitude(&b).unwrap();
            assert_eq!(
                l.exponent_vector(n).iter().sum::<i64>(),
                0,
                "longitude of {b} must be null-homologous"
            );
        }
    }

    #[test]
    fn bracket_identities() {
        let mut calc = BracketCalculus::new();
        // [e] = 1 - μ
        let e = calc.reduce(&Word::identity());
        assert_eq!(
            e,
            bp_const(Scalar::one().sub(&Scalar::var("mu")))
        );
        // [γ1 m γ2] = [γ1 γ2] - [γ1][γ2] on a sample pair
        let g1 = Word(vec![2]);
        let g2 = Word(vec![2, 2]);
        let lhs = calc.reduce(&g1.concat(&Word(vec![1])).concat(&g2));
        let rhs = bp_sub(
            &calc.reduce(&g1.concat(&g2)),
            &bp_mul(&calc.reduce(&g1), &calc.reduce(&g2)),
        );
        assert_eq!(lhs, rhs);
        // [m^k] = μ^k (1-μ)
        let mk = calc.reduce(&Word(vec![1, 1, 1]));
        assert_eq!(
            mk,
            bp_const(
                Scalar::var_pow("mu", 3).mul(&Scalar::one().sub(&Scalar::var("mu")))
            )
        );
        let mneg = calc.reduce(&Word(vec![-1, -1]));
        assert_eq!(
            mneg,
            bp_const(
                Scalar::var_pow("mu", -2).mul(&Scalar::one().sub(&Scalar::var("mu")))
            )
        );
    }

    #[test]
    fn unknot_object1_matches_hc0_count() {
        let b = BraidWord::identity(1);
        let peri = peripheral_presentation(&b).unwrap();
        let alg = object1_algebra(&peri, 1).unwrap();
        let req = CountRequest {
            q: 5,
            dim: 1,
            pins: Default::default(),
        };
        let report = point_count(&alg, &req).unwrap();
        assert_eq!(report.count, 7);
    }
}
