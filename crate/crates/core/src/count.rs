//! Exhaustive point counting: values of presented algebra generators in F_q
//! (scalars or small matrices) satisfying all relations, with the invertible
//! parameters pinned or enumerated over units. Linear generators are
//! eliminated symbolically before enumeration so stabilized presentations
//! stay inside the candidate budget.

use crate::closure::AlgebraPresentation;
use crate::element::Element;
use crate::fq::Fq;
use crate::group::{count_range, count_range_sequential, ENUM_BUDGET};
use crate::quiver::Sym;
use crate::{Error, Result};
use std::collections::BTreeMap;

/// A noncommutative polynomial over F_q in generator indices 0..n.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NcPoly {
    pub terms: BTreeMap<Vec<u16>, u16>,
}

impl NcPoly {
    fn add_term(&mut self, field: &Fq, word: Vec<u16>, coeff: u16) {
        if coeff == 0 {
            return;
        }
        match self.terms.get_mut(&word) {
            Some(v) => {
                *v = field.add(*v, coeff);
                if *v == 0 {
                    self.terms.remove(&word);
                }
            }
            None => {
                self.terms.insert(word, coeff);
            }
        }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Substitute generator `g` by a polynomial.
    fn substitute(&self, field: &Fq, g: u16, value: &NcPoly) -> NcPoly {
        let mut out = NcPoly::default();
        for (word, &coeff) in &self.terms {
            // split the word at occurrences of g and multiply the pieces
            let mut expansion = NcPoly {
                terms: BTreeMap::from([(Vec::new(), 1u16)]),
            };
            for &letter in word {
                if letter == g {
                    expansion = expansion.mul(field, value);
                } else {
                    expansion = expansion.mul_letter(field, letter);
                }
            }
            for (w, &c) in &expansion.terms {
                out.add_term(field, w.clone(), field.mul(c, coeff));
            }
        }
        out
    }

    fn mul(&self, field: &Fq, other: &NcPoly) -> NcPoly {
        let mut out = NcPoly::default();
        for (w1, &c1) in &self.terms {
            for (w2, &c2) in &other.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                out.add_term(field, w, field.mul(c1, c2));
            }
        }
        out
    }

    fn mul_letter(&self, field: &Fq, letter: u16) -> NcPoly {
        let mut out = NcPoly::default();
        for (w, &c) in &self.terms {
            let mut w = w.clone();
            w.push(letter);
            out.add_term(field, w, c);
        }
        out
    }

    fn scale(&self, field: &Fq, c: u16) -> NcPoly {
        let mut out = NcPoly::default();
        for (w, &v) in &self.terms {
            out.add_term(field, w.clone(), field.mul(v, c));
        }
        out
    }

    /// Evaluate at square matrices of dimension d (entries row-major).
    fn eval_matrix(&self, field: &Fq, d: usize, values: &[Vec<u16>]) -> Vec<u16> {
        let mut acc = vec![0u16; d * d];
        for (word, &coeff) in &self.terms {
            let mut m = identity(d);
            for &letter in word {
                m = mat_mul(field, d, &m, &values[letter as usize]);
            }
            for (slot, v) in acc.iter_mut().zip(m.iter()) {
                *slot = field.add(*slot, field.mul(coeff, *v));
            }
        }
        acc
    }
}

fn identity(d: usize) -> Vec<u16> {
    let mut m = vec![0u16; d * d];
    for i in 0..d {
        m[i * d + i] = 1;
    }
    m
}

fn mat_mul(field: &Fq, d: usize, a: &[u16], b: &[u16]) -> Vec<u16> {
    let mut out = vec![0u16; d * d];
    for i in 0..d {
        for k in 0..d {
            let aik = a[i * d + k];
            if aik == 0 {
                continue;
            }
            for j in 0..d {
                out[i * d + j] = field.add(out[i * d + j], field.mul(aik, b[k * d + j]));
            }
        }
    }
    out
}

/// A counting request: which field, which dimension, and the unit pins.
#[derive(Clone, Debug)]
pub struct CountRequest {
    pub q: u16,
    /// Matrix dimension for generator values (1 = scalar counting).
    pub dim: usize,
    /// Parameter pins; parameters absent here range over all units.
    pub pins: BTreeMap<String, u16>,
}

/// The result of an exhaustive count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountReport {
    pub invariant: String,
    pub target: String,
    pub count: u64,
}

/// Pin the scalar parameters of a relation and flatten it into an `NcPoly`
/// over the generator list.
fn pin_relation(
    rel: &Element,
    gens: &BTreeMap<Sym, u16>,
    field: &Fq,
    pins: &BTreeMap<String, u16>,
) -> Result<NcPoly> {
    let mut out = NcPoly::default();
    for (path, coeff) in rel.terms() {
        let c = coeff.eval_fq(field, pins)?;
        let word: Result<Vec<u16>> = path
            .0
            .iter()
            .map(|a| {
                gens.get(a)
                    .copied()
                    .ok_or_else(|| Error::MissingGenerator(a.to_string()))
            })
            .collect();
        out.add_term(field, word?, c);
    }
    Ok(out)
}

/// Gaussian elimination on the relation set viewed as F_q-linear
/// combinations of words. Row operations are invertible, so the generated
/// ideal (hence the solution count in any dimension) is unchanged; the point
/// is to surface relations linear in a single generator.
fn row_reduce(field: &Fq, relations: Vec<NcPoly>) -> Vec<NcPoly> {
    let mut words: Vec<Vec<u16>> = Vec::new();
    for r in &relations {
        for w in r.terms.keys() {
            if !words.contains(w) {
                words.push(w.clone());
            }
        }
    }
    // pivot on long words first so short (solvable) relations surface
    words.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    let col: BTreeMap<Vec<u16>, usize> = words
        .iter()
        .enumerate()
        .map(|(i, w)| (w.clone(), i))
        .collect();
    let mut rows: Vec<Vec<u16>> = relations
        .iter()
        .map(|r| {
            let mut row = vec![0u16; words.len()];
            for (w, &c) in &r.terms {
                row[col[w]] = c;
            }
            row
        })
        .collect();
    let mut pivot_row = 0;
    for c in 0..words.len() {
        let Some(found) = (pivot_row..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(pivot_row, found);
        let inv = field.inv(rows[pivot_row][c]).unwrap();
        for x in rows[pivot_row].iter_mut() {
            *x = field.mul(*x, inv);
        }
        for r in 0..rows.len() {
            if r != pivot_row && rows[r][c] != 0 {
                let factor = rows[r][c];
                for j in 0..words.len() {
                    let sub = field.mul(factor, rows[pivot_row][j]);
                    rows[r][j] = field.sub(rows[r][j], sub);
                }
            }
        }
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    rows.into_iter()
        .filter_map(|row| {
            let mut p = NcPoly::default();
            for (j, &c) in row.iter().enumerate() {
                if c != 0 {
                    p.terms.insert(words[j].clone(), c);
                }
            }
            (!p.is_zero()).then_some(p)
        })
        .collect()
}

/// Repeatedly eliminate generators that occur linearly with a unit
/// coefficient in some relation and nowhere else in that relation. This is a
/// Tietze move: the count of algebra maps (into any dimension) is unchanged.
fn eliminate(field: &Fq, mut relations: Vec<NcPoly>, num_gens: usize) -> (Vec<NcPoly>, Vec<u16>) {
    let mut alive: Vec<u16> = (0..num_gens as u16).collect();
    loop {
        relations = row_reduce(field, relations);
        let mut target: Option<(usize, u16, NcPoly)> = None;
        'search: for (ri, rel) in relations.iter().enumerate() {
            for &g in &alive {
                let lin = rel.terms.get(&vec![g]).copied().unwrap_or(0);
                if lin == 0 {
                    continue;
                }
                // g must not occur in any other term of this relation
                let occurs_elsewhere = rel
                    .terms
                    .keys()
                    .any(|w| w.as_slice() != [g] && w.contains(&g));
                if occurs_elsewhere {
                    continue;
                }
                // value := -lin^{-1} * (rel - lin*g)
                let mut rest = rel.clone();
                rest.terms.remove(&vec![g]);
                let inv = match field.inv(lin) {
                    Ok(v) => v,
                    Err(_) => continue,
                };
                let value = rest.scale(field, field.neg(inv));
                target = Some((ri, g, value));
                break 'search;
            }
        }
        let Some((ri, g, value)) = target else { break };
        relations.remove(ri);
        relations = relations
            .into_iter()
            .map(|r| r.substitute(field, g, &value))
            .filter(|r| !r.is_zero())
            .collect();
        alive.retain(|&x| x != g);
    }
    // compact the surviving generator indices to 0..alive.len()
    let remap: BTreeMap<u16, u16> = alive
        .iter()
        .enumerate()
        .map(|(new, &old)| (old, new as u16))
        .collect();
    let relations = relations
        .into_iter()
        .map(|r| NcPoly {
            terms: r
                .terms
                .into_iter()
                .map(|(w, c)| (w.into_iter().map(|g| remap[&g]).collect(), c))
                .collect(),
        })
        .collect();
    (relations, alive)
}

/// Diagnostic: show the relation set before and after elimination.
pub fn debug_eliminate(p: &AlgebraPresentation, req: &CountRequest) {
    let field = Fq::new(req.q).unwrap();
    let gens: BTreeMap<Sym, u16> = p
        .pres
        .quiver
        .arrows()
        .enumerate()
        .map(|(i, a)| (a.name.clone(), i as u16))
        .collect();
    let pinned: Vec<NcPoly> = p
        .relations
        .iter()
        .map(|r| pin_relation(r, &gens, &field, &req.pins).unwrap())
        .collect();
    println!("before: {} relations, {} gens", pinned.len(), gens.len());
    let (relations, alive) = eliminate(&field, pinned, gens.len());
    println!("after: {} relations, alive gens {:?}", relations.len(), alive);
    for r in relations.iter().take(12) {
        println!("  {:?}", r.terms);
    }
}

/// Count assignments of generator values in F_q (scalars for dim 1, d×d
/// matrices otherwise) satisfying all relations of the presentation, with
/// unpinned parameters enumerated over F_q^×.
pub fn point_count(p: &AlgebraPresentation, req: &CountRequest) -> Result<CountReport> {
    point_count_impl(p, req, false)
}

/// Sequential twin of `point_count`, kept for the benchmark comparison.
pub fn point_count_sequential(p: &AlgebraPresentation, req: &CountRequest) -> Result<CountReport> {
    point_count_impl(p, req, true)
}

fn point_count_impl(
    p: &AlgebraPresentation,
    req: &CountRequest,
    force_sequential: bool,
) -> Result<CountReport> {
    let field = Fq::new(req.q)?;
    let gens: BTreeMap<Sym, u16> = p
        .pres
        .quiver
        .arrows()
        .enumerate()
        .map(|(i, a)| (a.name.clone(), i as u16))
        .collect();
    let num_gens = gens.len();
    let free_params: Vec<String> = p
        .params
        .iter()
        .filter(|v| !req.pins.contains_key(*v))
        .cloned()
        .collect();
    let units = field.units();
    let mut total: u64 = 0;
    let mut param_choice = vec![0usize; free_params.len()];
    loop {
        let mut pins = req.pins.clone();
        for (v, &idx) in free_params.iter().zip(&param_choice) {
            pins.insert(v.clone(), units[idx]);
        }
        let pinned: Result<Vec<NcPoly>> = p
            .relations
            .iter()
            .map(|r| pin_relation(r, &gens, &field, &pins))
            .collect();
        let pinned = pinned?;
        let (relations, alive) = eliminate(&field, pinned, num_gens);
        total += count_solutions(&field, &relations, alive.len(), req.dim, force_sequential)?;
        // advance the mixed-radix parameter counter
        let mut k = 0;
        loop {
            if k == param_choice.len() {
                return Ok(CountReport {
                    invariant: "point_count".into(),
                    target: describe(req, &free_params),
                    count: total,
                });
            }
            param_choice[k] += 1;
            if param_choice[k] < units.len() {
                break;
            }
            param_choice[k] = 0;
            k += 1;
        }
    }
}

fn describe(req: &CountRequest, free: &[String]) -> String {
    let mut s = format!("F_{} dim {}", req.q, req.dim);
    for (k, v) in &req.pins {
        s.push_str(&format!(" {k}={v}"));
    }
    if !free.is_empty() {
        s.push_str(&format!(" ({} over units)", free.join(",")));
    }
    s
}

fn count_solutions(
    field: &Fq,
    relations: &[NcPoly],
    num_gens: usize,
    dim: usize,
    force_sequential: bool,
) -> Result<u64> {
    let slots = num_gens * dim * dim;
    let space = (field.q as u128).checked_pow(slots as u32);
    let space = space.ok_or(Error::EnumerationBudget(u128::MAX, ENUM_BUDGET))?;
    if space > ENUM_BUDGET {
        return Err(Error::EnumerationBudget(space, ENUM_BUDGET));
    }
    if relations.iter().any(|r| {
        r.terms.len() == 1 && r.terms.keys().next().unwrap().is_empty()
    }) {
        return Ok(0); // unit ideal after elimination
    }
    let total = space as u64;
    let q = field.q as u64;
    let check = move |idx: u64| -> u64 {
        let mut rest = idx;
        let mut values: Vec<Vec<u16>> = Vec::with_capacity(num_gens);
        for _ in 0..num_gens {
            let mut m = vec![0u16; dim * dim];
            for slot in m.iter_mut() {
                *slot = (rest % q) as u16;
                rest /= q;
            }
            values.push(m);
        }
        let ok = relations
            .iter()
            .all(|r| r.eval_matrix(field, dim, &values).iter().all(|&x| x == 0));
        u64::from(ok)
    };
    Ok(if force_sequential {
        count_range_sequential(total, &check)
    } else {
        count_range(total, &check)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;
    use crate::closure::hc0_presentation;
    use crate::dg::DgPresentation;
    use crate::quiver::GradedQuiver;
    use crate::rewrite::RewriteSystem;
    use crate::scalar::Scalar;

    #[test]
    fn unknot_hc0_f5_count_is_seven() {
        let b = BraidWord::identity(1);
        let hc0 = hc0_presentation(&b).unwrap();
        let req = CountRequest {
            q: 5,
            dim: 1,
            pins: BTreeMap::new(),
        };
        let report = point_count(&hc0, &req).unwrap();
        assert_eq!(report.count, 7);
    }

    #[test]
    fn unit_ideal_has_no_points() {
        // presentation with relation 1 -> zero count
        let mut q = GradedQuiver::new();
        q.add_object("1").unwrap();
        let pres = DgPresentation::new(q, RewriteSystem::empty(), BTreeMap::new()).unwrap();
        let p = AlgebraPresentation {
            pres,
            relations: vec![Element::identity("1").scale(&Scalar::one())],
            params: vec![],
        };
        let req = CountRequest {
            q: 5,
            dim: 1,
            pins: BTreeMap::new(),
        };
        assert_eq!(point_count(&p, &req).unwrap().count, 0);
    }

    #[test]
    fn elimination_is_countpreserving() {
        // x - y·z with x eliminable; counts must equal the brute force over
        // the full generator set
        let mut qv = GradedQuiver::new();
        qv.add_object("1").unwrap();
        for g in ["x", "y", "z"] {
            qv.add_arrow(g, "1", "1", 0).unwrap();
        }
        let pres = DgPresentation::new(qv, RewriteSystem::empty(), BTreeMap::new()).unwrap();
        let x = pres.gen("x").unwrap();
        let yz = pres
            .gen("y")
            .unwrap()
            .mul(&pres.gen("z").unwrap())
            .unwrap();
        let p = AlgebraPresentation {
            pres: pres.clone(),
            relations: vec![x.sub(&yz).unwrap()],
            params: vec![],
        };
        let req = CountRequest {
            q: 3,
            dim: 1,
            pins: BTreeMap::new(),
        };
        // one free choice of (y, z); x determined: 9 solutions
        assert_eq!(point_count(&p, &req).unwrap().count, 9);
        let req2 = CountRequest {
            q: 3,
            dim: 2,
            pins: BTreeMap::new(),
        };
        // matrix case: (y,z) free in M_2(F_3): 3^8 solutions
        assert_eq!(point_count(&p, &req2).unwrap().count, 6561);
    }
}
