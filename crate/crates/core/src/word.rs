//! Words over the generators `s_1, ..., s_n` of the type A Coxeter group
//! `W(A_n)`, together with Matsumoto-move rewriting.
//!
//! Letters are 1-based: the letter `3` stands for `s_3`. A [`Word`] always
//! carries its rank so every letter can be range-checked once, at
//! construction time.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::ops::ControlFlow;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{CfcError, Result};
use crate::perm::Permutation;

/// Largest supported rank. Letters are stored as `u8` and the permutation
/// image has degree `rank + 1`.
pub const MAX_RANK: usize = 254;

/// Default cap on the number of words materialized by a closure.
pub const DEFAULT_CLOSURE_CAP: usize = 1_000_000;

/// Environment variable overriding [`DEFAULT_CLOSURE_CAP`].
pub const CLOSURE_CAP_ENV: &str = "CFC_MAX_CLOSURE";

/// The closure cap in effect for this process.
pub fn closure_cap() -> usize {
    static CAP: OnceLock<usize> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var(CLOSURE_CAP_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_CLOSURE_CAP)
    })
}

/// Number of generators `n` of `W(A_n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "usize", into = "usize")]
pub struct Rank(u8);

impl Rank {
    pub fn new(n: usize) -> Result<Rank> {
        if n == 0 || n > MAX_RANK {
            return Err(CfcError::InvalidRank { rank: n, max: MAX_RANK });
        }
        Ok(Rank(n as u8))
    }

    pub fn get(self) -> usize {
        self.0 as usize
    }

    /// Degree of the symmetric group `S_{n+1}` isomorphic to `W(A_n)`.
    pub fn degree(self) -> usize {
        self.get() + 1
    }
}

impl TryFrom<usize> for Rank {
    type Error = CfcError;
    fn try_from(n: usize) -> Result<Rank> {
        Rank::new(n)
    }
}

impl From<Rank> for usize {
    fn from(r: Rank) -> usize {
        r.get()
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A single generator `s_i`, `1 <= i <= rank`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator(u8);

impl Generator {
    pub fn new(index: usize, rank: Rank) -> Result<Generator> {
        if index == 0 || index > rank.get() {
            return Err(CfcError::InvalidGenerator { gen: index, rank: rank.get() });
        }
        Ok(Generator(index as u8))
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Order `m(s_i, s_j)` of `s_i s_j` in `W(A_n)`: 1 on the diagonal, 3 for
/// neighbours on the path graph, 2 otherwise.
pub fn m_value(i: usize, j: usize, rank: Rank) -> Result<u8> {
    let i = Generator::new(i, rank)?.index();
    let j = Generator::new(j, rank)?.index();
    Ok(bond(i, j))
}

#[inline]
pub(crate) fn bond(i: usize, j: usize) -> u8 {
    match i.abs_diff(j) {
        0 => 1,
        1 => 3,
        _ => 2,
    }
}

#[inline]
pub(crate) fn commute(a: u8, b: u8) -> bool {
    a.abs_diff(b) > 1
}

/// An expression `s_{x_1} s_{x_2} ... s_{x_k}`: an element of the free monoid
/// on the generators. The empty word is the identity.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    rank: Rank,
    letters: Vec<u8>,
}

impl Word {
    pub fn new<I>(rank: Rank, letters: I) -> Result<Word>
    where
        I: IntoIterator<Item = usize>,
    {
        let letters = letters
            .into_iter()
            .map(|x| Generator::new(x, rank).map(|g| g.0))
            .collect::<Result<Vec<u8>>>()?;
        Ok(Word { rank, letters })
    }

    /// Convenience constructor from a plain rank and letter slice.
    pub fn from_slice(rank: usize, letters: &[usize]) -> Result<Word> {
        Word::new(Rank::new(rank)?, letters.iter().copied())
    }

    pub fn identity(rank: Rank) -> Word {
        Word { rank, letters: Vec::new() }
    }

    pub(crate) fn from_raw(rank: Rank, letters: Vec<u8>) -> Word {
        debug_assert!(letters.iter().all(|&x| x >= 1 && (x as usize) <= rank.get()));
        Word { rank, letters }
    }

    /// Parse the text notation: a digit string such as `12342` (ranks up to 9),
    /// or comma/space separated indices. `e`, `[]` and the empty string denote
    /// the identity; a JSON-style `[1,2,3]` array is accepted too.
    pub fn parse(rank: Rank, text: &str) -> Result<Word> {
        let t = text.trim();
        let t = t.strip_prefix('[').and_then(|s| s.strip_suffix(']')).unwrap_or(t).trim();
        if t.is_empty() || t == "e" {
            return Ok(Word::identity(rank));
        }
        let separated = t.contains(',') || t.contains(char::is_whitespace);
        let letters: Vec<usize> = if separated {
            t.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<usize>().map_err(|_| CfcError::Parse(format!("bad letter {s:?}"))))
                .collect::<Result<_>>()?
        } else {
            if rank.get() > 9 {
                return Err(CfcError::Parse(format!(
                    "digit-string words need rank <= 9; use commas for rank {rank}"
                )));
            }
            t.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| CfcError::Parse(format!("bad letter {c:?}")))
                })
                .collect::<Result<_>>()?
        };
        Word::new(rank, letters)
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    /// Letters widened to `usize`, convenient for serialization and tests.
    pub fn to_vec(&self) -> Vec<usize> {
        self.letters.iter().map(|&x| x as usize).collect()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.letters.iter().map(|&x| x as usize)
    }

    /// `s_{x_1} s_{x_2} ... s_{x_k} -> s_{x_2} ... s_{x_k} s_{x_1}`.
    pub fn cyclic_shift(&self) -> Word {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            letters.rotate_left(1);
        }
        Word { rank: self.rank, letters }
    }

    /// The word read backwards; it represents the inverse element.
    pub fn reversed(&self) -> Word {
        let mut letters = self.letters.clone();
        letters.reverse();
        Word { rank: self.rank, letters }
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &Word) -> Result<Word> {
        if self.rank != other.rank {
            return Err(CfcError::RankMismatch { left: self.rank.get(), right: other.rank.get() });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Word { rank: self.rank, letters })
    }

    /// Same letters over a different rank.
    pub fn with_rank(&self, rank: Rank) -> Result<Word> {
        Word::new(rank, self.iter())
    }

    pub fn to_permutation(&self) -> Permutation {
        Permutation::from_word(self)
    }

    /// `length(w) == inversions(to_permutation(w))`.
    pub fn is_reduced(&self) -> bool {
        self.len() == self.to_permutation().inversions()
    }

    /// Some reduced expression (the lexicographically least one) of the same
    /// group element, obtained from the descent algorithm on the image.
    pub fn reduce(&self) -> Word {
        self.to_permutation().to_word()
    }

    /// Set of distinct generators appearing in the word.
    pub fn support(&self) -> BTreeSet<usize> {
        self.iter().collect()
    }

    pub(crate) fn require_reduced(&self) -> Result<()> {
        if self.is_reduced() {
            Ok(())
        } else {
            Err(CfcError::NotReduced { word: self.to_string() })
        }
    }
}

/// Shortlex: shorter words first, then lexicographic on letters, then rank.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.letters
            .len()
            .cmp(&other.letters.len())
            .then_with(|| self.letters.cmp(&other.letters))
            .then_with(|| self.rank.cmp(&other.rank))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("e");
        }
        if self.rank.get() <= 9 {
            for x in &self.letters {
                write!(f, "{x}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.letters.iter().map(|x| x.to_string()).collect();
            f.write_str(&parts.join(","))
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self}; A_{})", self.rank)
    }
}

#[derive(Serialize, Deserialize)]
struct WordRepr {
    rank: Rank,
    word: Vec<usize>,
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        WordRepr { rank: self.rank, word: self.to_vec() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Word, D::Error> {
        let repr = WordRepr::deserialize(d)?;
        Word::new(repr.rank, repr.word).map_err(serde::de::Error::custom)
    }
}

/// Serde helper: a word as a bare JSON array of letters.
pub mod letters_only {
    use super::Word;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(w: &Word, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(w.iter())
    }
}

/// Canonical representative of a group element: its lexicographically least
/// reduced expression.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementId(Word);

impl ElementId {
    pub fn of(w: &Word) -> ElementId {
        ElementId(w.reduce())
    }

    pub fn from_permutation(p: &Permutation) -> ElementId {
        ElementId(p.to_word())
    }

    pub fn word(&self) -> &Word {
        &self.0
    }

    pub fn into_word(self) -> Word {
        self.0
    }

    pub fn rank(&self) -> Rank {
        self.0.rank
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ElementId({})", self.0)
    }
}

impl Serialize for ElementId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter())
    }
}

fn push_neighbors(w: &[u8], braids: bool, out: &mut Vec<Vec<u8>>) {
    for i in 0..w.len().saturating_sub(1) {
        if commute(w[i], w[i + 1]) {
            let mut v = w.to_vec();
            v.swap(i, i + 1);
            out.push(v);
        }
    }
    if braids {
        for i in 0..w.len().saturating_sub(2) {
            if w[i] == w[i + 2] && w[i].abs_diff(w[i + 1]) == 1 {
                let mut v = w.to_vec();
                v[i] = w[i + 1];
                v[i + 1] = w[i];
                v[i + 2] = w[i + 1];
                out.push(v);
            }
        }
    }
}

/// Breadth-first walk of the closure of `start` under commutations (and,
/// with `braids`, braid moves), calling `visit` on each word once. The walk
/// stops early when `visit` breaks.
pub(crate) fn walk_closure<T>(
    start: &[u8],
    braids: bool,
    cap: usize,
    mut visit: impl FnMut(&[u8]) -> ControlFlow<T>,
) -> Result<Option<T>> {
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    let mut queue = VecDeque::new();
    let mut scratch = Vec::new();
    seen.insert(start.to_vec());
    queue.push_back(start.to_vec());
    while let Some(w) = queue.pop_front() {
        if let ControlFlow::Break(t) = visit(&w) {
            return Ok(Some(t));
        }
        scratch.clear();
        push_neighbors(&w, braids, &mut scratch);
        for v in scratch.drain(..) {
            if !seen.contains(&v) {
                if seen.len() >= cap {
                    return Err(CfcError::ClosureTooLarge { cap });
                }
                seen.insert(v.clone());
                queue.push_back(v);
            }
        }
    }
    Ok(None)
}

fn collect_closure(start: &[u8], braids: bool, cap: usize) -> Result<Vec<Vec<u8>>> {
    let mut out = Vec::new();
    walk_closure::<()>(start, braids, cap, |w| {
        out.push(w.to_vec());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// All reduced expressions of the element represented by the reduced word
/// `w` (Matsumoto closure under commutations and braid moves).
pub fn reduced_expressions(w: &Word) -> Result<BTreeSet<Word>> {
    reduced_expressions_with_cap(w, closure_cap())
}

pub fn reduced_expressions_with_cap(w: &Word, cap: usize) -> Result<BTreeSet<Word>> {
    w.require_reduced()?;
    Ok(collect_closure(&w.letters, true, cap)?
        .into_iter()
        .map(|v| Word::from_raw(w.rank, v))
        .collect())
}

/// Commutation class of `w` alone (closure under commutations).
pub fn commutation_class(w: &Word) -> Result<BTreeSet<Word>> {
    Ok(collect_closure(&w.letters, false, closure_cap())?
        .into_iter()
        .map(|v| Word::from_raw(w.rank, v))
        .collect())
}

/// Partition of [`reduced_expressions`] into commutation classes, ordered by
/// each class's least word.
pub fn commutation_classes(w: &Word) -> Result<Vec<BTreeSet<Word>>> {
    commutation_classes_with_cap(w, closure_cap())
}

pub fn commutation_classes_with_cap(w: &Word, cap: usize) -> Result<Vec<BTreeSet<Word>>> {
    let mut remaining = reduced_expressions_with_cap(w, cap)?;
    let mut classes = Vec::new();
    while let Some(first) = remaining.pop_first() {
        let class: BTreeSet<Word> = collect_closure(&first.letters, false, cap)?
            .into_iter()
            .map(|v| Word::from_raw(w.rank, v))
            .collect();
        for u in &class {
            remaining.remove(u);
        }
        classes.push(class);
    }
    Ok(classes)
}

/// True when `u` can be turned into `v` by commutations alone.
pub fn commutation_equivalent(u: &Word, v: &Word) -> bool {
    if u.rank != v.rank || u.len() != v.len() {
        return false;
    }
    // Two words are commutation equivalent iff, for every pair of
    // non-commuting letters (including equal ones), the subsequences
    // restricted to that pair coincide.
    let n = u.rank.get() as u8;
    for a in 1..=n {
        for b in a..=n.min(a + 1) {
            let pu = u.letters.iter().filter(|&&x| x == a || x == b);
            let pv = v.letters.iter().filter(|&&x| x == a || x == b);
            if !pu.eq(pv) {
                return false;
            }
        }
    }
    true
}
