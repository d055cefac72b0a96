//! Rings of CFC elements and conjugacy.
//!
//! The heap of a CFC element of `W(A_n)` splits into chunks whose labels are
//! disjoint intervals of generators, each used once. On the cylinder a chunk
//! becomes a ring; two CFC elements are conjugate exactly when their ring
//! sizes agree as multisets. [`conjugacy_witness`] goes further and builds a
//! conjugator from cyclic shifts, ring slides and ring swaps, then checks it
//! in `S_{n+1}`.

use std::collections::{BTreeMap, VecDeque};

use serde::Serialize;

use crate::classify::require_cfc;
use crate::error::{CfcError, Result};
use crate::heap::{build_heap, chunks};
use crate::perm::Permutation;
use crate::word::{ElementId, Rank, Word};

/// A chunk up to cyclic shift: the generator interval `start..start+size`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Ring {
    pub start: usize,
    pub size: usize,
}

impl Ring {
    pub fn end(&self) -> usize {
        self.start + self.size - 1
    }
}

/// One ring per chunk of the heap, ordered by start.
pub fn rings_of(w: &Word) -> Result<Vec<Ring>> {
    require_cfc(w)?;
    Ok(chunks(&build_heap(w)?).into_iter().map(|c| Ring { start: c.start, size: c.size }).collect())
}

fn sizes(rings: &[Ring]) -> Vec<usize> {
    rings.iter().map(|r| r.size).collect()
}

fn sorted_sizes(rings: &[Ring]) -> Vec<usize> {
    let mut s = sizes(rings);
    s.sort_unstable();
    s
}

/// Rings match pairwise in order, each translated by some amount.
pub fn slide_equivalent(w: &Word, y: &Word) -> Result<bool> {
    Ok(sizes(&rings_of(w)?) == sizes(&rings_of(y)?))
}

/// Ring sizes agree as multisets.
pub fn ring_equivalent(w: &Word, y: &Word) -> Result<bool> {
    same_rank(w, y)?;
    Ok(sorted_sizes(&rings_of(w)?) == sorted_sizes(&rings_of(y)?))
}

/// Conjugacy of two CFC elements, decided on their rings.
pub fn is_conjugate_cfc(w: &Word, y: &Word) -> Result<bool> {
    ring_equivalent(w, y)
}

fn same_rank(w: &Word, y: &Word) -> Result<()> {
    if w.rank() != y.rank() {
        return Err(CfcError::RankMismatch { left: w.rank().get(), right: y.rank().get() });
    }
    Ok(())
}

/// `k (k+1) ... k' (k'+1)`: conjugating the diagonal chunk `k ... k'` by it
/// slides the chunk one column to the right.
pub fn slide_conjugator(k: usize, k_prime: usize, rank: Rank) -> Result<Word> {
    if k == 0 || k > k_prime {
        return Err(CfcError::OutOfRange(format!("slide needs 1 <= k <= k', got k={k}, k'={k_prime}")));
    }
    if k_prime >= rank.get() {
        return Err(CfcError::ChunkAtBoundary { end: k_prime, rank: rank.get() });
    }
    Word::new(rank, k..=k_prime + 1)
}

/// Ascending runs `(m+1 ... k'+1)(m ... k')...(1 ... k+1)` with `k' = k+m`,
/// for `k > m`.
fn swap_letters_descending(k: usize, m: usize) -> Vec<usize> {
    (1..=m + 1).rev().flat_map(|first| first..=first + k).collect()
}

/// Conjugator taking the simple element with chunks `1..k` and
/// `k+2..k+m+1` to the one with chunks `1..m` and `m+2..k+m+1`. For `k < m`
/// this is the inverse of the `k > m` construction; for `k = m` it is empty.
pub fn swap_conjugator(k: usize, m: usize, rank: Rank) -> Result<Word> {
    if k == 0 || m == 0 || k + m + 1 > rank.get() {
        return Err(CfcError::OutOfRange(format!(
            "chunks of sizes {k} and {m} need rank at least {}, got {rank}",
            k + m + 1
        )));
    }
    Word::new(rank, swap_letters(k, m))
}

fn swap_letters(k: usize, m: usize) -> Vec<usize> {
    use std::cmp::Ordering::*;
    match k.cmp(&m) {
        Greater => swap_letters_descending(k, m),
        Less => {
            let mut x = swap_letters_descending(m, k);
            x.reverse();
            x
        }
        Equal => Vec::new(),
    }
}

/// Replaces `k (k+1) ... k' (k'+1) k' ... (k+1) k` starting at `pos` with
/// `(k'+1) k' ... (k+1) k (k+1) ... k' (k'+1)`, a sequence of braid moves.
pub fn boomerang_rewrite(w: &Word, pos: usize) -> Result<Word> {
    let l: Vec<usize> = w.iter().collect();
    let bad = CfcError::PatternMismatch { pos };
    if pos >= l.len() {
        return Err(bad);
    }
    let k = l[pos];
    let mut peak_at = pos;
    while peak_at + 1 < l.len() && l[peak_at + 1] == l[peak_at] + 1 {
        peak_at += 1;
    }
    let peak = l[peak_at];
    if peak_at == pos {
        return Err(bad);
    }
    let span = peak - k;
    let end = peak_at + span;
    if end >= l.len() || (1..=span).any(|d| l[peak_at + d] != peak - d) {
        return Err(bad);
    }
    let replacement = (k..=peak).rev().chain(k + 1..=peak);
    let out: Vec<usize> = l[..pos].iter().copied().chain(replacement).chain(l[end + 1..].iter().copied()).collect();
    Word::new(w.rank(), out)
}

/// `i j i j -> j i` for neighbouring `i, j`, at `pos`.
pub fn stst_rewrite(w: &Word, pos: usize) -> Result<Word> {
    let l: Vec<usize> = w.iter().collect();
    match l.get(pos..pos + 4) {
        Some(&[a, b, c, d]) if a == c && b == d && a.abs_diff(b) == 1 => {
            let out: Vec<usize> =
                l[..pos].iter().copied().chain([b, a]).chain(l[pos + 4..].iter().copied()).collect();
            Word::new(w.rank(), out)
        }
        _ => Err(CfcError::PatternMismatch { pos }),
    }
}

/// A conjugator `x` with `x · source · x⁻¹ = target`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjugacyCertificate {
    pub source: ElementId,
    pub target: ElementId,
    #[serde(with = "crate::word::letters_only")]
    pub conjugator: Word,
    pub verified: bool,
}

impl ConjugacyCertificate {
    /// Re-runs the conjugation in `S_{n+1}`.
    pub fn check(&self) -> bool {
        let x = self.conjugator.to_permutation();
        self.source.word().to_permutation().conjugate(&x).ok().as_ref()
            == Some(&self.target.word().to_permutation())
    }
}

/// Tracks a CFC element whose chunks are all diagonal, plus the conjugator
/// accumulated so far.
struct Normalizer {
    rank: Rank,
    rings: Vec<Ring>,
    /// Conjugator letters; later steps are prepended.
    conj: Vec<usize>,
}

impl Normalizer {
    /// Conjugates every chunk of `w` into its diagonal form `a (a+1) ... b`.
    fn diagonalize(w: &Word) -> Result<Normalizer> {
        let rank = w.rank();
        let rings = rings_of(w)?;
        let mut conj = Vec::new();
        for r in &rings {
            let part: Vec<usize> = w.iter().filter(|&g| g >= r.start && g <= r.end()).collect();
            // distinct chunks commute, so their conjugators can be concatenated
            conj.extend(diagonalizing_conjugator(rank, &part, *r)?);
        }
        Ok(Normalizer { rank, rings, conj })
    }

    fn apply(&mut self, x: impl IntoIterator<Item = usize>) {
        let mut next: Vec<usize> = x.into_iter().collect();
        next.extend_from_slice(&self.conj);
        self.conj = next;
    }

    fn slide_right(&mut self, i: usize) {
        let r = self.rings[i];
        self.apply(r.start..=r.end() + 1);
        self.rings[i].start += 1;
    }

    fn slide_left(&mut self, i: usize) {
        let r = self.rings[i];
        self.apply((r.start - 1..=r.end()).rev());
        self.rings[i].start -= 1;
    }

    /// Moves each ring to the start given in `targets` (same order, same
    /// sizes) one column at a time, never letting rings touch.
    fn slide_to(&mut self, targets: &[usize]) -> Result<()> {
        let n = self.rank.get();
        let limit = self.rings.len() * (n + 1) + 1;
        for _ in 0..limit {
            let mut moved = false;
            for (i, &target) in targets.iter().enumerate() {
                let r = self.rings[i];
                if r.start < target {
                    let room = match self.rings.get(i + 1) {
                        Some(next) => r.end() + 2 < next.start,
                        None => r.end() < n,
                    };
                    if room {
                        self.slide_right(i);
                        moved = true;
                    }
                } else if r.start > target {
                    let room = match i.checked_sub(1).map(|j| self.rings[j]) {
                        Some(prev) => prev.end() + 2 < r.start,
                        None => r.start > 1,
                    };
                    if room {
                        self.slide_left(i);
                        moved = true;
                    }
                }
            }
            if !moved {
                break;
            }
        }
        if self.rings.iter().zip(targets).all(|(r, &t)| r.start == t) {
            Ok(())
        } else {
            Err(CfcError::VerificationFailed)
        }
    }

    /// Packs the rings to the left and sorts them by decreasing size: the
    /// simple representative of the conjugacy class.
    fn make_simple(&mut self) -> Result<()> {
        let targets = packed_starts(&sizes(&self.rings));
        self.slide_to(&targets)?;
        let len = self.rings.len();
        for pass in 0..len {
            for i in 0..len.saturating_sub(1 + pass) {
                let (a, b) = (self.rings[i], self.rings[i + 1]);
                if a.size < b.size {
                    let offset = a.start - 1;
                    self.apply(swap_letters(a.size, b.size).into_iter().map(|g| g + offset));
                    self.rings[i] = Ring { start: a.start, size: b.size };
                    self.rings[i + 1] = Ring { start: a.start + b.size + 1, size: a.size };
                }
            }
        }
        Ok(())
    }

    fn conjugator(&self) -> Word {
        Word::new(self.rank, self.conj.iter().copied()).expect("letters within rank")
    }
}

fn packed_starts(sizes: &[usize]) -> Vec<usize> {
    let mut next = 1;
    sizes
        .iter()
        .map(|s| {
            let start = next;
            next += s + 1;
            start
        })
        .collect()
}

/// Breadth-first search over the cyclic-shift orbit of one chunk for its
/// diagonal representative. Returns the conjugator as letters.
fn diagonalizing_conjugator(rank: Rank, part: &[usize], ring: Ring) -> Result<Vec<usize>> {
    let start = Word::new(rank, part.iter().copied())?.to_permutation();
    let goal = Word::new(rank, ring.start..=ring.end())?.to_permutation();
    let len = start.inversions();
    let mut parent: BTreeMap<Permutation, Option<(Permutation, usize)>> = BTreeMap::new();
    parent.insert(start.clone(), None);
    let mut q = VecDeque::from([start]);
    while let Some(cur) = q.pop_front() {
        if cur == goal {
            let mut shifts = Vec::new();
            let mut at = cur;
            while let Some(Some((prev, s))) = parent.get(&at).cloned() {
                shifts.push(s);
                at = prev;
            }
            // `shifts` holds the last shift first, which is the order the
            // conjugator word needs.
            return Ok(shifts);
        }
        for s in cur.left_descents() {
            let x = Word::new(rank, [s])?.to_permutation();
            let next = cur.conjugate(&x)?;
            if next.inversions() == len && !parent.contains_key(&next) {
                parent.insert(next.clone(), Some((cur.clone(), s)));
                q.push_back(next);
            }
        }
    }
    Err(CfcError::VerificationFailed)
}

/// Conjugator from `w` to `y` when their rings agree, `None` otherwise.
///
/// Slide-equivalent pairs are joined directly: diagonalize, slide each ring
/// to its place, undo the diagonalization of `y`. Other pairs are both
/// brought to the common simple representative and the two conjugators are
/// combined as `x_y⁻¹ · x_w`.
pub fn conjugacy_witness(w: &Word, y: &Word) -> Result<Option<ConjugacyCertificate>> {
    same_rank(w, y)?;
    if !ring_equivalent(w, y)? {
        return Ok(None);
    }
    let mut from_w = Normalizer::diagonalize(w)?;
    let mut from_y = Normalizer::diagonalize(y)?;
    if sizes(&from_w.rings) == sizes(&from_y.rings) {
        let targets: Vec<usize> = from_y.rings.iter().map(|r| r.start).collect();
        from_w.slide_to(&targets)?;
    } else {
        from_w.make_simple()?;
        from_y.make_simple()?;
    }
    let conjugator = from_y.conjugator().reversed().concat(&from_w.conjugator())?;
    let cert = ConjugacyCertificate {
        source: ElementId::of(w),
        target: ElementId::of(y),
        conjugator,
        verified: true,
    };
    if !cert.check() {
        return Err(CfcError::VerificationFailed);
    }
    Ok(Some(cert))
}
