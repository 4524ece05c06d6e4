//! Braid words in B_n and their combinatorics: permutations, strand orbits,
//! writhes, and Markov moves.

use crate::{Error, Result};
use std::fmt;

/// A word in the standard generators of B_n. Letter k > 0 is σ_k, letter
/// -k is σ_k^{-1}; every |k| must satisfy 1 ≤ |k| ≤ n-1. The empty word is
/// the identity braid.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strand_count: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strand_count: usize, letters: Vec<i32>) -> Result<Self> {
        if strand_count == 0 {
            return Err(Error::Parse("strand count must be positive".into()));
        }
        for &k in &letters {
            if k == 0 || (k.unsigned_abs() as usize) > strand_count - 1 {
                return Err(Error::IndexOutOfRange(format!(
                    "letter {k} invalid in B_{strand_count}"
                )));
            }
        }
        Ok(BraidWord {
            strand_count,
            letters,
        })
    }

    pub fn identity(strand_count: usize) -> Self {
        BraidWord {
            strand_count,
            letters: Vec::new(),
        }
    }

    /// Parse `s<k>` / `s<k>^-1` tokens or bare signed integers.
    pub fn parse(text: &str, strand_count: usize) -> Result<Self> {
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            let token = token.trim_matches(|c| c == ',' || c == '[' || c == ']');
            if token.is_empty() {
                continue;
            }
            let letter = if let Some(rest) = token.strip_prefix('s') {
                if let Some(idx) = rest.strip_suffix("^-1") {
                    -parse_index(idx, token)?
                } else {
                    parse_index(rest, token)?
                }
            } else {
                token
                    .parse::<i32>()
                    .map_err(|_| Error::MalformedToken(token.to_string()))?
            };
            letters.push(letter);
        }
        BraidWord::new(strand_count, letters)
    }

    pub fn strand_count(&self) -> usize {
        self.strand_count
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Serialize back to the `s<k>` token grammar; round-trips with `parse`.
    pub fn serialize(&self) -> String {
        self.letters
            .iter()
            .map(|&k| {
                if k > 0 {
                    format!("s{k}")
                } else {
                    format!("s{}^-1", -k)
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// The underlying permutation as the map top position -> bottom
    /// position, tracking slots through the word left to right.
    pub fn underlying_permutation(&self) -> Vec<usize> {
        // slot[j] = strand that currently occupies position j+1
        let n = self.strand_count;
        let mut slot: Vec<usize> = (1..=n).collect();
        for &k in &self.letters {
            let i = k.unsigned_abs() as usize - 1;
            slot.swap(i, i + 1);
        }
        // strand s ends at the position j with slot[j] = s
        let mut perm = vec![0usize; n + 1];
        for (j, &s) in slot.iter().enumerate() {
            perm[s] = j + 1;
        }
        perm.remove(0);
        perm
    }

    /// Orbits of the cyclic group generated by the underlying permutation;
    /// one block per link component of the closure.
    pub fn strand_orbits(&self) -> OrbitPartition {
        let n = self.strand_count;
        let perm = self.underlying_permutation();
        let mut component_of = vec![usize::MAX; n + 1];
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for start in 1..=n {
            if component_of[start] != usize::MAX {
                continue;
            }
            let id = blocks.len();
            let mut orbit = Vec::new();
            let mut cur = start;
            loop {
                component_of[cur] = id;
                orbit.push(cur);
                cur = perm[cur - 1];
                if cur == start {
                    break;
                }
            }
            orbit.sort_unstable();
            blocks.push(orbit);
        }
        OrbitPartition {
            blocks,
            component_of: component_of[1..].to_vec(),
        }
    }

    /// Total and per-component writhes. A crossing contributes to w_i when
    /// both strand positions it involves are carried by strands of S_i.
    pub fn writhes(&self) -> WritheReport {
        let orbits = self.strand_orbits();
        let n = self.strand_count;
        let mut slot: Vec<usize> = (1..=n).collect();
        let mut total = 0i64;
        let mut per_component = vec![0i64; orbits.blocks.len()];
        for &k in &self.letters {
            let sign = if k > 0 { 1 } else { -1 };
            total += sign;
            let i = k.unsigned_abs() as usize - 1;
            let (u, v) = (slot[i], slot[i + 1]);
            let (cu, cv) = (orbits.component_of[u - 1], orbits.component_of[v - 1]);
            if cu == cv {
                per_component[cu] += sign;
            }
            slot.swap(i, i + 1);
        }
        WritheReport {
            total,
            per_component,
        }
    }

    /// Concatenation within the same braid group.
    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strand_count != other.strand_count {
            return Err(Error::IndexOutOfRange(
                "cannot concatenate words in different braid groups".into(),
            ));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord::new(self.strand_count, letters)
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strand_count: self.strand_count,
            letters: self.letters.iter().rev().map(|&k| -k).collect(),
        }
    }

    /// Cancel adjacent inverse letters until no pair remains.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &k in &self.letters {
            if out.last().map(|&l| l == -k).unwrap_or(false) {
                out.pop();
            } else {
                out.push(k);
            }
        }
        BraidWord {
            strand_count: self.strand_count,
            letters: out,
        }
    }

    pub fn markov_move(&self, mv: &MarkovMove) -> Result<BraidWord> {
        match mv {
            MarkovMove::Conjugate(g) => {
                if g.strand_count != self.strand_count {
                    return Err(Error::IndexOutOfRange(format!(
                        "conjugator lives in B_{}, word in B_{}",
                        g.strand_count, self.strand_count
                    )));
                }
                Ok(g.concat(self)?.concat(&g.inverse())?.free_reduce())
            }
            MarkovMove::StabilizePositive => self.stabilize(1),
            MarkovMove::StabilizeNegative => self.stabilize(-1),
        }
    }

    fn stabilize(&self, sign: i32) -> Result<BraidWord> {
        let n = self.strand_count + 1;
        let mut letters = self.letters.clone();
        letters.push(sign * (n as i32 - 1));
        BraidWord::new(n, letters)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            write!(f, "(identity in B_{})", self.strand_count)
        } else {
            write!(f, "{} in B_{}", self.serialize(), self.strand_count)
        }
    }
}

fn parse_index(s: &str, token: &str) -> Result<i32> {
    s.parse::<i32>()
        .map_err(|_| Error::MalformedToken(token.to_string()))
}

/// Markov moves: conjugation within B_n, stabilization into B_{n+1}.
#[derive(Clone, Debug)]
pub enum MarkovMove {
    Conjugate(BraidWord),
    StabilizePositive,
    StabilizeNegative,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitPartition {
    /// Sorted orbits of {1..n}, ordered by minimal element.
    pub blocks: Vec<Vec<usize>>,
    /// component_of[j] is the block index of strand j+1.
    pub component_of: Vec<usize>,
}

impl OrbitPartition {
    pub fn component_count(&self) -> usize {
        self.blocks.len()
    }

    /// Marked strand of each component: the minimal index in its block.
    pub fn marked_strands(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b[0]).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WritheReport {
    pub total: i64,
    /// Indexed by component (same order as OrbitPartition::blocks).
    pub per_component: Vec<i64>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        let b = BraidWord::parse("s1 s1 s1", 2).unwrap();
        assert_eq!(b.letters(), &[1, 1, 1]);
        let b = BraidWord::parse("s2^-1 s1", 3).unwrap();
        assert_eq!(b.letters(), &[-2, 1]);
        let b = BraidWord::parse("", 3).unwrap();
        assert!(b.is_empty());
        let b = BraidWord::parse("1 -2 1 -2", 3).unwrap();
        assert_eq!(b.letters(), &[1, -2, 1, -2]);
        assert!(BraidWord::parse("s3", 3).is_err());
        assert!(BraidWord::parse("foo", 3).is_err());
    }

    #[test]
    fn parse_serialize_roundtrip() {
        let b = BraidWord::new(4, vec![1, -2, 3, -1]).unwrap();
        let again = BraidWord::parse(&b.serialize(), 4).unwrap();
        assert_eq!(b, again);
    }

    #[test]
    fn permutations_and_orbits() {
        let sigma1 = BraidWord::new(2, vec![1]).unwrap();
        assert_eq!(sigma1.underlying_permutation(), vec![2, 1]);
        let trefoil = BraidWord::new(2, vec![1, 1, 1]).unwrap();
        assert_eq!(trefoil.underlying_permutation(), vec![2, 1]);
        assert_eq!(trefoil.strand_orbits().blocks, vec![vec![1, 2]]);
        let hopf = BraidWord::new(2, vec![1, 1]).unwrap();
        assert_eq!(hopf.strand_orbits().blocks, vec![vec![1], vec![2]]);
        let id3 = BraidWord::identity(3);
        assert_eq!(id3.strand_orbits().component_count(), 3);
    }

    #[test]
    fn writhes() {
        let trefoil = BraidWord::new(2, vec![1, 1, 1]).unwrap();
        let w = trefoil.writhes();
        assert_eq!(w.total, 3);
        assert_eq!(w.per_component, vec![3]);
        let mixed = BraidWord::new(3, vec![1, -2]).unwrap();
        assert_eq!(mixed.writhes().total, 0);
        // Hopf link: both crossings join distinct components
        let hopf = BraidWord::new(2, vec![1, 1]).unwrap();
        assert_eq!(hopf.writhes().per_component, vec![0, 0]);
        assert_eq!(hopf.writhes().total, 2);
    }

    #[test]
    fn markov_moves() {
        let trefoil = BraidWord::new(2, vec![1, 1, 1]).unwrap();
        let conj = trefoil
            .markov_move(&MarkovMove::Conjugate(BraidWord::new(2, vec![1]).unwrap()))
            .unwrap();
        assert_eq!(conj.letters(), &[1, 1, 1]);
        let pos = trefoil.markov_move(&MarkovMove::StabilizePositive).unwrap();
        assert_eq!(pos.letters(), &[1, 1, 1, 2]);
        assert_eq!(pos.strand_count(), 3);
        let neg = trefoil.markov_move(&MarkovMove::StabilizeNegative).unwrap();
        assert_eq!(neg.letters(), &[1, 1, 1, -2]);
        // stabilization preserves component count
        assert_eq!(
            pos.strand_orbits().component_count(),
            trefoil.strand_orbits().component_count()
        );
        // total writhe changes by ±1 under stabilization
        assert_eq!(pos.writhes().total, 4);
        assert_eq!(neg.writhes().total, 2);
    }
}
