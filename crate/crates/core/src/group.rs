//! Group presentations extracted from braid closures, free-group words,
//! abelianization, and exhaustive homomorphism counting into finite groups.

use crate::quiver::Path;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::One;
use std::fmt;

/// A word over group generators x1, x2, ...; letter k > 0 is x_k, letter -k
/// its inverse.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(pub Vec<i32>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn free_reduce(&self) -> Word {
        let mut out: Vec<i32> = Vec::with_capacity(self.0.len());
        for &k in &self.0 {
            if out.last().map(|&l| l == -k).unwrap_or(false) {
                out.pop();
            } else {
                out.push(k);
            }
        }
        Word(out)
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|&k| -k).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn pow(&self, e: i64) -> Word {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..e.unsigned_abs() {
            out = out.concat(&base);
        }
        out.free_reduce()
    }

    pub fn is_identity(&self) -> bool {
        self.free_reduce().0.is_empty()
    }

    /// Exponent sum per generator (abelianized image), 0-indexed.
    pub fn exponent_vector(&self, num_generators: usize) -> Vec<i64> {
        let mut v = vec![0i64; num_generators];
        for &k in &self.0 {
            let idx = k.unsigned_abs() as usize - 1;
            v[idx] += k.signum() as i64;
        }
        v
    }

    /// Total exponent sum (abelianization to Z when all generators map to t).
    pub fn total_exponent(&self) -> i64 {
        self.0.iter().map(|&k| k.signum() as i64).sum()
    }

    /// Read a quiver path over arrows named `x<k>` / `x<k>^-1` as a word.
    pub fn from_artin_path(path: &Path) -> Result<Word> {
        let mut out = Vec::with_capacity(path.len());
        for name in &path.0 {
            let s = name.as_str();
            let (body, sign) = match s.strip_suffix("^-1") {
                Some(b) => (b, -1),
                None => (s, 1),
            };
            let idx: i32 = body
                .strip_prefix('x')
                .and_then(|d| d.parse().ok())
                .ok_or_else(|| Error::Parse(format!("not a group generator arrow: {s}")))?;
            out.push(sign * idx);
        }
        Ok(Word(out))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, &k) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if k > 0 {
                write!(f, "x{k}")?;
            } else {
                write!(f, "x{}^-1", -k)?;
            }
        }
        Ok(())
    }
}

/// A finitely presented group with generators x1..x_n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPresentation {
    pub num_generators: usize,
    pub relators: Vec<Word>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianInvariants {
    pub free_rank: usize,
    /// Elementary divisors > 1, each dividing the next.
    pub torsion: Vec<BigInt>,
}

impl GroupPresentation {
    pub fn new(num_generators: usize, relators: Vec<Word>) -> Self {
        let relators = relators
            .into_iter()
            .map(|w| w.free_reduce())
            .filter(|w| !w.0.is_empty())
            .collect();
        GroupPresentation {
            num_generators,
            relators,
        }
    }

    /// Smith normal form of the relator exponent matrix.
    pub fn abelianization(&self) -> AbelianInvariants {
        if self.relators.is_empty() {
            return AbelianInvariants {
                free_rank: self.num_generators,
                torsion: Vec::new(),
            };
        }
        let matrix: Vec<Vec<BigInt>> = self
            .relators
            .iter()
            .map(|w| {
                w.exponent_vector(self.num_generators)
                    .into_iter()
                    .map(BigInt::from)
                    .collect()
            })
            .collect();
        let diag = crate::intmat::smith_normal_form(matrix);
        let rank = diag.len();
        AbelianInvariants {
            free_rank: self.num_generators - rank,
            torsion: diag.into_iter().filter(|d| !d.is_one()).collect(),
        }
    }
}

/// A finite group given by its multiplication table.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    pub name: String,
    pub order: usize,
    mul: Vec<u16>,
    inv: Vec<u16>,
}

impl FiniteGroup {
    pub fn cyclic(k: usize) -> FiniteGroup {
        let mul = (0..k)
            .flat_map(|a| (0..k).map(move |b| ((a + b) % k) as u16))
            .collect();
        let inv = (0..k).map(|a| ((k - a) % k) as u16).collect();
        FiniteGroup {
            name: format!("z{k}"),
            order: k,
            mul,
            inv,
        }
    }

    /// The symmetric group S_k on {0..k-1} with composition (p*q)(x) = p(q(x)).
    pub fn symmetric(k: usize) -> FiniteGroup {
        let perms = permutations(k);
        let order = perms.len();
        let index_of = |p: &[u8]| perms.iter().position(|q| q == p).unwrap() as u16;
        let mut mul = vec![0u16; order * order];
        let mut inv = vec![0u16; order];
        for (a, p) in perms.iter().enumerate() {
            for (b, q) in perms.iter().enumerate() {
                let composed: Vec<u8> = (0..k).map(|x| p[q[x] as usize]).collect();
                mul[a * order + b] = index_of(&composed);
            }
            let mut pinv = vec![0u8; k];
            for (x, &px) in p.iter().enumerate() {
                pinv[px as usize] = x as u8;
            }
            inv[a] = index_of(&pinv);
        }
        FiniteGroup {
            name: format!("s{k}"),
            order,
            mul,
            inv,
        }
    }

    pub fn by_name(name: &str) -> Result<FiniteGroup> {
        if let Some(k) = name.strip_prefix('s') {
            let k: usize = k.parse().map_err(|_| Error::Parse(name.to_string()))?;
            if !(1..=5).contains(&k) {
                return Err(Error::Unsupported(format!("symmetric group {name}")));
            }
            return Ok(FiniteGroup::symmetric(k));
        }
        if let Some(k) = name.strip_prefix('z') {
            let k: usize = k.parse().map_err(|_| Error::Parse(name.to_string()))?;
            if k == 0 || k > 64 {
                return Err(Error::Unsupported(format!("cyclic group {name}")));
            }
            return Ok(FiniteGroup::cyclic(k));
        }
        Err(Error::UnknownOperator(format!("finite group {name}")))
    }

    #[inline]
    pub fn mul(&self, a: u16, b: u16) -> u16 {
        self.mul[a as usize * self.order + b as usize]
    }

    #[inline]
    pub fn inv(&self, a: u16) -> u16 {
        self.inv[a as usize]
    }

    /// Evaluate a word at an assignment of generator images.
    pub fn eval(&self, word: &Word, assignment: &[u16]) -> u16 {
        let mut acc = self.identity();
        for &k in &word.0 {
            let g = assignment[k.unsigned_abs() as usize - 1];
            let g = if k < 0 { self.inv(g) } else { g };
            acc = self.mul(acc, g);
        }
        acc
    }

    pub fn identity(&self) -> u16 {
        // both constructors place the identity at index 0: cyclic 0, and
        // permutations(k) lists the identity permutation first
        0
    }
}

/// All permutations of {0..k-1} in lexicographic order (identity first).
fn permutations(k: usize) -> Vec<Vec<u8>> {
    fn gen(k: usize, prefix: &mut Vec<u8>, used: &mut Vec<bool>, out: &mut Vec<Vec<u8>>) {
        if prefix.len() == k {
            out.push(prefix.clone());
            return;
        }
        for v in 0..k {
            if !used[v] {
                used[v] = true;
                prefix.push(v as u8);
                gen(k, prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut perms = Vec::new();
    gen(k, &mut Vec::new(), &mut vec![false; k], &mut perms);
    perms
}

/// Exact count of generator assignments satisfying all relators.
pub fn hom_count(g: &GroupPresentation, target: &FiniteGroup) -> Result<u64> {
    let total = (target.order as u128).checked_pow(g.num_generators as u32);
    let total = total.ok_or(Error::EnumerationBudget(u128::MAX, ENUM_BUDGET))?;
    if total > ENUM_BUDGET {
        return Err(Error::EnumerationBudget(total, ENUM_BUDGET));
    }
    let total = total as u64;
    let order = target.order as u64;
    let n = g.num_generators;
    let check = |idx: u64| -> u64 {
        let mut assignment = vec![0u16; n];
        let mut rest = idx;
        for slot in assignment.iter_mut() {
            *slot = (rest % order) as u16;
            rest /= order;
        }
        let ok = g
            .relators
            .iter()
            .all(|r| target.eval(r, &assignment) == target.identity());
        u64::from(ok)
    };
    Ok(count_range(total, &check))
}

/// Hard cap on enumeration candidates, shared by all exhaustive counters.
pub const ENUM_BUDGET: u128 = 100_000_000;

#[cfg(feature = "parallel")]
pub(crate) fn count_range(total: u64, check: &(dyn Fn(u64) -> u64 + Sync)) -> u64 {
    use rayon::prelude::*;
    (0..total).into_par_iter().map(check).sum()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn count_range(total: u64, check: &(dyn Fn(u64) -> u64 + Sync)) -> u64 {
    (0..total).map(check).sum()
}

/// Always-sequential variant, kept for benchmarking the parallel speedup.
pub fn count_range_sequential(total: u64, check: &(dyn Fn(u64) -> u64 + Sync)) -> u64 {
    (0..total).map(check).sum()
}

pub fn hom_count_sequential(g: &GroupPresentation, target: &FiniteGroup) -> Result<u64> {
    let total = (target.order as u128).pow(g.num_generators as u32);
    if total > ENUM_BUDGET {
        return Err(Error::EnumerationBudget(total, ENUM_BUDGET));
    }
    let total = total as u64;
    let order = target.order as u64;
    let n = g.num_generators;
    Ok(count_range_sequential(total, &|idx| {
        let mut assignment = vec![0u16; n];
        let mut rest = idx;
        for slot in assignment.iter_mut() {
            *slot = (rest % order) as u16;
            rest /= order;
        }
        u64::from(
            g.relators
                .iter()
                .all(|r| target.eval(r, &assignment) == target.identity()),
        )
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trefoil_like() -> GroupPresentation {
        // <x1, x2 | x1 x2 x1 = x2 x1 x2>
        GroupPresentation::new(2, vec![Word(vec![1, 2, 1, -2, -1, -2])])
    }

    #[test]
    fn free_reduction_and_exponents() {
        let w = Word(vec![1, 2, -2, -1, 1]);
        assert_eq!(w.free_reduce(), Word(vec![1]));
        assert_eq!(w.exponent_vector(2), vec![1, 0]);
    }

    #[test]
    fn abelianization_examples() {
        // <x | > = Z
        let free = GroupPresentation::new(1, vec![]);
        assert_eq!(free.abelianization().free_rank, 1);
        let tre = trefoil_like();
        let ab = tre.abelianization();
        assert_eq!(ab.free_rank, 1);
        assert!(ab.torsion.is_empty());
    }

    #[test]
    fn hom_counts() {
        let s3 = FiniteGroup::symmetric(3);
        let tre = trefoil_like();
        assert_eq!(hom_count(&tre, &s3).unwrap(), 12);
        // free group on one generator: |T| homs
        let free = GroupPresentation::new(1, vec![]);
        assert_eq!(hom_count(&free, &s3).unwrap(), 6);
        // through abelianization Z -> Z/3
        let z3 = FiniteGroup::cyclic(3);
        assert_eq!(hom_count(&tre, &z3).unwrap(), 3);
    }

    #[test]
    fn symmetric_group_identity_first() {
        let s4 = FiniteGroup::symmetric(4);
        assert_eq!(s4.order, 24);
        assert_eq!(s4.identity(), 0);
        for a in 0..24u16 {
            assert_eq!(s4.mul(a, s4.inv(a)), 0);
        }
    }

    #[test]
    fn budget_guard() {
        let s5 = FiniteGroup::symmetric(5);
        let big = GroupPresentation::new(5, vec![]);
        assert!(matches!(
            hom_count(&big, &s5),
            Err(Error::EnumerationBudget(_, _))
        ));
    }
}
