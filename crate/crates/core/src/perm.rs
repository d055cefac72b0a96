//! The isomorphism `W(A_n) ≅ S_{n+1}` sending `s_i` to the transposition
//! `(i i+1)`.
//!
//! Permutations compose right to left: `p.compose(q)` is `x ↦ p(q(x))`, so the
//! image of the word `a_1 a_2 ... a_k` is `s_{a_1} ∘ s_{a_2} ∘ ... ∘ s_{a_k}`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{CfcError, Result};
use crate::word::{Rank, Word};

/// A bijection of `{1, ..., d}` in one-line notation `[p(1) p(2) ... p(d)]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PermutationRepr", into = "PermutationRepr")]
pub struct Permutation {
    one_line: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct PermutationRepr {
    one_line: Vec<usize>,
}

impl TryFrom<PermutationRepr> for Permutation {
    type Error = CfcError;
    fn try_from(r: PermutationRepr) -> Result<Permutation> {
        Permutation::new(r.one_line)
    }
}

impl From<Permutation> for PermutationRepr {
    fn from(p: Permutation) -> PermutationRepr {
        PermutationRepr { one_line: p.one_line }
    }
}

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Permutation> {
        let d = one_line.len();
        let mut seen = vec![false; d + 1];
        for &v in &one_line {
            if v == 0 || v > d || seen[v] {
                return Err(CfcError::Parse(format!("{one_line:?} is not a permutation of 1..={d}")));
            }
            seen[v] = true;
        }
        Ok(Permutation { one_line })
    }

    pub fn identity(degree: usize) -> Permutation {
        Permutation { one_line: (1..=degree).collect() }
    }

    /// Image of a word under `s_i ↦ (i i+1)`.
    pub fn from_word(w: &Word) -> Permutation {
        let mut one_line: Vec<usize> = (1..=w.rank().degree()).collect();
        // p ∘ s_a swaps the entries in positions a and a+1.
        for a in w.iter() {
            one_line.swap(a - 1, a);
        }
        Permutation { one_line }
    }

    /// Build from disjoint cycles; entries not mentioned are fixed.
    pub fn from_cycles(degree: usize, cycles: &[Cycle]) -> Result<Permutation> {
        let mut one_line: Vec<usize> = (1..=degree).collect();
        let mut touched = vec![false; degree + 1];
        for c in cycles {
            for (k, &a) in c.entries.iter().enumerate() {
                if a > degree || touched[a] {
                    return Err(CfcError::Parse(format!("cycle {c} does not fit degree {degree}")));
                }
                touched[a] = true;
                one_line[a - 1] = c.entries[(k + 1) % c.entries.len()];
            }
        }
        Permutation::new(one_line)
    }

    /// Parse cycle notation such as `(1 3)(2 4)`; `()` or `e` is the identity.
    pub fn from_cycle_notation(degree: usize, text: &str) -> Result<Permutation> {
        let t = text.trim();
        if t.is_empty() || t == "e" || t == "()" {
            return Ok(Permutation::identity(degree));
        }
        let mut cycles = Vec::new();
        for part in t.split(')') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let cycle: Cycle = format!("{part})").parse()?;
            cycles.push(cycle);
        }
        Permutation::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.one_line.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.one_line
    }

    /// `p(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.one_line[i - 1]
    }

    /// `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        self.check_degree(other)?;
        Ok(Permutation { one_line: other.one_line.iter().map(|&x| self.one_line[x - 1]).collect() })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &v) in self.one_line.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { one_line: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.one_line.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Number of pairs `i < j` with `p(i) > p(j)`; the Coxeter length.
    pub fn inversions(&self) -> usize {
        let p = &self.one_line;
        let mut count = 0;
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                if p[i] > p[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Non-trivial disjoint cycles, each starting at its minimum, ordered by
    /// that minimum.
    pub fn cycles(&self) -> Vec<Cycle> {
        let d = self.degree();
        let mut seen = vec![false; d + 1];
        let mut out = Vec::new();
        for start in 1..=d {
            if seen[start] {
                continue;
            }
            let mut entries = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                entries.push(x);
                x = self.apply(x);
            }
            if entries.len() > 1 {
                out.push(Cycle { entries });
            }
        }
        out
    }

    /// Cycle lengths including fixed points, sorted descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.cycles().iter().map(Cycle::len).collect();
        let moved: usize = lens.iter().sum();
        lens.extend(std::iter::repeat_n(1, self.degree() - moved));
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    /// 1-based positions `i < j < k` with `p(i) > p(j) > p(k)`, if any.
    pub fn contains_321(&self) -> Option<[usize; 3]> {
        let p = &self.one_line;
        let n = p.len();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    if p[k] < p[j] && p[j] < p[i] {
                        return Some([i + 1, j + 1, k + 1]);
                    }
                }
            }
        }
        None
    }

    /// 1-based positions `i < j < k < l` with `p(k) < p(l) < p(i) < p(j)`.
    pub fn contains_3412(&self) -> Option<[usize; 4]> {
        let p = &self.one_line;
        let n = p.len();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    for l in k + 1..n {
                        if p[k] < p[l] && p[l] < p[i] && p[i] < p[j] {
                            return Some([i + 1, j + 1, k + 1, l + 1]);
                        }
                    }
                }
            }
        }
        None
    }

    /// `x ∘ self ∘ x⁻¹`.
    pub fn conjugate(&self, x: &Permutation) -> Result<Permutation> {
        x.compose(self)?.compose(&x.inverse())
    }

    pub fn same_cycle_type(&self, other: &Permutation) -> Result<bool> {
        self.check_degree(other)?;
        Ok(self.cycle_type() == other.cycle_type())
    }

    /// Generators `s_i` with `ℓ(s_i p) < ℓ(p)`: the value `i+1` sits left of `i`.
    pub fn left_descents(&self) -> Vec<usize> {
        let inv = self.inverse();
        (1..self.degree()).filter(|&i| inv.apply(i) > inv.apply(i + 1)).collect()
    }

    /// Lexicographically least reduced expression, built by repeatedly
    /// stripping the smallest left descent. Requires degree at least 2.
    pub fn to_word(&self) -> Word {
        let rank = Rank::new(self.degree() - 1).expect("permutation of degree >= 2");
        let mut pos = self.inverse().one_line;
        let mut letters = Vec::with_capacity(self.inversions());
        // `pos[v-1]` is the position of value v; s_i ∘ p swaps values i, i+1.
        'outer: loop {
            for i in 1..self.degree() {
                if pos[i - 1] > pos[i] {
                    letters.push(i as u8);
                    pos.swap(i - 1, i);
                    continue 'outer;
                }
            }
            break;
        }
        Word::from_raw(rank, letters)
    }

    /// Every permutation of `{1..degree}` in lexicographic order.
    pub fn all(degree: usize) -> AllPermutations {
        AllPermutations { next: Some((1..=degree).collect()) }
    }

    fn check_degree(&self, other: &Permutation) -> Result<()> {
        if self.degree() != other.degree() {
            return Err(CfcError::DegreeMismatch { left: self.degree(), right: other.degree() });
        }
        Ok(())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_line.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Lexicographic enumeration of a symmetric group.
pub struct AllPermutations {
    next: Option<Vec<usize>>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        let n = succ.len();
        if n >= 2 {
            if let Some(i) = (0..n - 1).rev().find(|&i| succ[i] < succ[i + 1]) {
                let j = (i + 1..n).rev().find(|&j| succ[j] > succ[i]).unwrap();
                succ.swap(i, j);
                succ[i + 1..].reverse();
                self.next = Some(succ);
            }
        }
        Some(Permutation { one_line: cur })
    }
}

/// A non-trivial cycle written with its smallest entry first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle {
    entries: Vec<usize>,
}

impl Cycle {
    /// Normalizes the rotation so the minimum comes first.
    pub fn new(mut entries: Vec<usize>) -> Result<Cycle> {
        if entries.len() < 2 {
            return Err(CfcError::Parse("a stored cycle needs at least two entries".into()));
        }
        let mut sorted = entries.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) || sorted[0] == 0 {
            return Err(CfcError::Parse(format!("cycle entries {entries:?} must be distinct and positive")));
        }
        let min_at = entries.iter().enumerate().min_by_key(|(_, &v)| v).map(|(i, _)| i).unwrap();
        entries.rotate_left(min_at);
        Ok(Cycle { entries })
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(" "))
    }
}

impl fmt::Debug for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts `(1 2 4 5)`, `(1,2,4,5)` or, when every entry is a single digit,
/// `(1245)`.
impl FromStr for Cycle {
    type Err = CfcError;

    fn from_str(s: &str) -> Result<Cycle> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| CfcError::Parse(format!("cycle {s:?} must be parenthesized")))?
            .trim();
        let entries: Vec<usize> = if inner.contains(|c: char| c == ',' || c.is_whitespace()) {
            inner
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse().map_err(|_| CfcError::Parse(format!("bad cycle entry {t:?}"))))
                .collect::<Result<_>>()?
        } else {
            inner
                .chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| CfcError::Parse(format!("bad cycle entry {c:?}")))
                })
                .collect::<Result<_>>()?
        };
        Cycle::new(entries)
    }
}

impl Serialize for Cycle {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
