//! Heaps of pieces for type A words.
//!
//! A heap is the labeled poset on the letters of a word where letter `i`
//! sits above letter `j` (`i < j` in the word) whenever they do not commute,
//! closed transitively. Blocks live in the lattice `{1..n} × ℕ`: the column
//! is the generator and levels are assigned greedily as low as possible, so
//! a block's level is one more than the longest chain below it. Earlier
//! letters are higher up.

mod render;

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::classify::require_cfc;
use crate::error::{CfcError, Result};
use crate::perm::Permutation;
use crate::word::{ElementId, Rank, Word};

pub use render::{render, RenderFormat};

/// One letter of the source word placed in the lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Block {
    /// Position in the source word.
    pub id: usize,
    pub gen: usize,
    pub level: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Heap {
    rank: Rank,
    blocks: Vec<Block>,
    /// Hasse diagram edges `(upper, lower)` by block id, sorted.
    covers: Vec<(usize, usize)>,
}

/// Heap of a reduced word.
pub fn build_heap(w: &Word) -> Result<Heap> {
    w.require_reduced()?;
    Ok(Heap::from_word_unchecked(w))
}

impl Heap {
    /// Stacked-block picture of any word, reduced or not. Equal adjacent
    /// letters are stacked rather than cancelled.
    pub(crate) fn from_word_unchecked(w: &Word) -> Heap {
        let gens: Vec<usize> = w.iter().collect();
        let k = gens.len();
        let mut level = vec![0usize; k];
        for i in (0..k).rev() {
            level[i] = 1 + (i + 1..k)
                .filter(|&j| gens[i].abs_diff(gens[j]) <= 1)
                .map(|j| level[j])
                .max()
                .unwrap_or(0);
        }
        let mut covers = Vec::new();
        for i in 0..k {
            for j in i + 1..k {
                let blocked = match gens[i].abs_diff(gens[j]) {
                    0 => (i + 1..j).any(|m| gens[m].abs_diff(gens[i]) <= 1),
                    1 => (i + 1..j).any(|m| gens[m] == gens[i] || gens[m] == gens[j]),
                    _ => true,
                };
                if !blocked {
                    covers.push((i, j));
                }
            }
        }
        let blocks = (0..k).map(|id| Block { id, gen: gens[id], level: level[id] }).collect();
        Heap { rank: w.rank(), blocks, covers }
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn height(&self) -> usize {
        self.blocks.iter().map(|b| b.level).max().unwrap_or(0)
    }

    /// The word the heap was built from.
    pub fn source_word(&self) -> Word {
        Word::new(self.rank, self.blocks.iter().map(|b| b.gen)).expect("labels within rank")
    }

    /// Reading top-down, left to right within a level.
    pub fn to_word(&self) -> Word {
        let mut order: Vec<&Block> = self.blocks.iter().collect();
        order.sort_by(|a, b| b.level.cmp(&a.level).then(a.gen.cmp(&b.gen)));
        Word::new(self.rank, order.into_iter().map(|b| b.gen)).expect("labels within rank")
    }

    /// Labeled-poset fingerprint independent of the source word order: blocks
    /// are named by (column, index from the top within the column).
    pub fn shape(&self) -> HeapShape {
        let mut nth = vec![0usize; self.blocks.len()];
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for b in &self.blocks {
            let c = counts.entry(b.gen).or_default();
            nth[b.id] = *c;
            *c += 1;
        }
        let name = |id: usize| (self.blocks[id].gen, nth[id]);
        let mut blocks: Vec<((usize, usize), usize)> =
            self.blocks.iter().map(|b| (name(b.id), b.level)).collect();
        blocks.sort_unstable();
        let mut covers: Vec<_> = self.covers.iter().map(|&(u, l)| (name(u), name(l))).collect();
        covers.sort_unstable();
        HeapShape { blocks, covers }
    }

    /// Equal as labeled posets (with the greedy-low levels).
    pub fn is_isomorphic(&self, other: &Heap) -> bool {
        self.rank == other.rank && self.shape() == other.shape()
    }

    /// Blocks with nothing above them.
    pub fn maximal_blocks(&self) -> Vec<usize> {
        let covered: BTreeSet<usize> = self.covers.iter().map(|&(_, l)| l).collect();
        (0..self.blocks.len()).filter(|id| !covered.contains(id)).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HeapShape {
    blocks: Vec<((usize, usize), usize)>,
    covers: Vec<((usize, usize), (usize, usize))>,
}

#[derive(Serialize, Deserialize)]
struct BlockRepr {
    gen: usize,
    level: usize,
}

#[derive(Serialize, Deserialize)]
struct HeapRepr {
    rank: Rank,
    blocks: Vec<BlockRepr>,
    covers: Vec<[usize; 2]>,
}

impl Serialize for Heap {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        HeapRepr {
            rank: self.rank,
            blocks: self.blocks.iter().map(|b| BlockRepr { gen: b.gen, level: b.level }).collect(),
            covers: self.covers.iter().map(|&(u, l)| [u, l]).collect(),
        }
        .serialize(s)
    }
}

/// Rebuilds the heap from the block labels (in source order) and rejects
/// input whose levels or covers disagree with the reconstruction.
impl<'de> Deserialize<'de> for Heap {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Heap, D::Error> {
        use serde::de::Error;
        let repr = HeapRepr::deserialize(d)?;
        let word = Word::new(repr.rank, repr.blocks.iter().map(|b| b.gen)).map_err(D::Error::custom)?;
        let heap = Heap::from_word_unchecked(&word);
        let levels_ok = heap.blocks.iter().zip(&repr.blocks).all(|(b, r)| b.level == r.level);
        let mut covers: Vec<(usize, usize)> = repr.covers.iter().map(|c| (c[0], c[1])).collect();
        covers.sort_unstable();
        if !levels_ok || covers != heap.covers {
            return Err(D::Error::custom("heap levels or covers inconsistent with its blocks"));
        }
        Ok(heap)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScanMode {
    /// Convex chains `i, i±1, i` in the heap itself.
    Fc,
    /// Additionally wrap each column around the cylinder.
    Cfc,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    /// Two consecutive blocks of a column with a single neighbour block
    /// between them: a braid `i j i`.
    Braid,
    /// Two consecutive blocks of a column with nothing from the neighbouring
    /// columns between them: they cancel.
    Collapse,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub column: usize,
    /// Block ids of the two column-`i` blocks; `upper` is the earlier one in
    /// the scan direction.
    pub upper: usize,
    pub lower: usize,
    /// The lone neighbour block of a braid.
    pub neighbor: Option<usize>,
    /// The pair is only consecutive around the cylinder.
    pub wraps: bool,
}

/// Looks for the forbidden convex subheaps: in `Fc` mode the braid chains
/// `i (i±1) i`; in `Cfc` mode also the same configurations, and bare `i`
/// over `i`, formed across the seam of the cylinder.
pub fn forbidden_pattern_scan(h: &Heap, mode: ScanMode) -> Vec<Violation> {
    let mut out = Vec::new();
    let gens: Vec<usize> = h.blocks.iter().map(|b| b.gen).collect();
    for column in 1..=h.rank.get() {
        let occ: Vec<usize> = (0..gens.len()).filter(|&i| gens[i] == column).collect();
        if occ.len() < 2 {
            continue;
        }
        let nbrs: Vec<usize> = (0..gens.len()).filter(|&i| gens[i].abs_diff(column) == 1).collect();
        let mut judge = |upper: usize, lower: usize, between: Vec<usize>, wraps: bool| {
            let kind = match between.len() {
                0 => ViolationKind::Collapse,
                1 => ViolationKind::Braid,
                _ => return,
            };
            out.push(Violation { kind, column, upper, lower, neighbor: between.first().copied(), wraps });
        };
        for pair in occ.windows(2) {
            let between = nbrs.iter().copied().filter(|&m| pair[0] < m && m < pair[1]).collect();
            judge(pair[0], pair[1], between, false);
        }
        if mode == ScanMode::Cfc {
            let (last, first) = (*occ.last().unwrap(), occ[0]);
            let between = nbrs.iter().copied().filter(|&m| m > last || m < first).collect();
            judge(last, first, between, true);
        }
    }
    out
}

/// A maximal connected component of the Hasse diagram.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Chunk {
    pub block_ids: BTreeSet<usize>,
    /// Smallest generator in the chunk.
    pub start: usize,
    /// Width of the generator interval `start..start+size`; for CFC heaps it
    /// equals the number of blocks.
    pub size: usize,
}

impl Chunk {
    pub fn end(&self) -> usize {
        self.start + self.size - 1
    }
}

/// Connected components ordered by their smallest generator.
pub fn chunks(h: &Heap) -> Vec<Chunk> {
    let k = h.blocks.len();
    let mut adj = vec![Vec::new(); k];
    for &(u, l) in &h.covers {
        adj[u].push(l);
        adj[l].push(u);
    }
    let mut comp = vec![usize::MAX; k];
    let mut out = Vec::new();
    for s in 0..k {
        if comp[s] != usize::MAX {
            continue;
        }
        let mut ids = BTreeSet::new();
        let mut q = VecDeque::from([s]);
        comp[s] = s;
        while let Some(v) = q.pop_front() {
            ids.insert(v);
            for &u in &adj[v] {
                if comp[u] == usize::MAX {
                    comp[u] = s;
                    q.push_back(u);
                }
            }
        }
        let lo = ids.iter().map(|&i| h.blocks[i].gen).min().unwrap();
        let hi = ids.iter().map(|&i| h.blocks[i].gen).max().unwrap();
        out.push(Chunk { block_ids: ids, start: lo, size: hi - lo + 1 });
    }
    out.sort_by_key(|c| c.start);
    out
}

/// Moves a maximal block labeled `gen` from the top of the heap to the
/// bottom: the heap of `u·s` where the heap is that of `s·u`. The result can
/// be the heap of a non-reduced word.
pub fn cyclic_shift_heap(h: &Heap, gen: usize) -> Result<Heap> {
    let word = h.to_word();
    let letters: Vec<usize> = word.iter().collect();
    let pos = (0..letters.len())
        .find(|&p| letters[p] == gen && letters[..p].iter().all(|&x| x.abs_diff(gen) > 1))
        .ok_or(CfcError::NotMaximalBlock { gen })?;
    let mut shifted = letters;
    let g = shifted.remove(pos);
    shifted.push(g);
    Ok(Heap::from_word_unchecked(&Word::new(h.rank, shifted)?))
}

/// The class of a CFC heap under cyclic shifts, wrapped on a cylinder.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CylindricalHeap {
    /// Least word (shortlex) over all reduced expressions of all elements
    /// reachable by cyclic shifts.
    #[serde(with = "crate::word::letters_only")]
    pub canonical_word: Word,
    /// `(start, size)` of each ring, ordered by start.
    pub ring_profile: Vec<(usize, usize)>,
    /// Every element of the cyclic class.
    pub class: Vec<ElementId>,
}

/// Elements reachable from `p` by conjugating with left descents that keep
/// the length (cyclic shifts of reduced expressions).
pub(crate) fn cyclic_orbit(p: &Permutation) -> BTreeSet<Permutation> {
    let len = p.inversions();
    let mut seen = BTreeSet::from([p.clone()]);
    let mut q = VecDeque::from([p.clone()]);
    while let Some(cur) = q.pop_front() {
        for s in cur.left_descents() {
            let mut t = Permutation::identity(cur.degree()).one_line().to_vec();
            t.swap(s - 1, s);
            let x = Permutation::new(t).expect("transposition");
            let next = cur.conjugate(&x).expect("same degree");
            if next.inversions() == len && seen.insert(next.clone()) {
                q.push_back(next);
            }
        }
    }
    seen
}

pub fn cylindrical_canonical(w: &Word) -> Result<CylindricalHeap> {
    w.require_reduced()?;
    require_cfc(w)?;
    let class: BTreeSet<ElementId> =
        cyclic_orbit(&w.to_permutation()).iter().map(ElementId::from_permutation).collect();
    let canonical_word = class.iter().next().expect("orbit contains w").word().clone();
    let ring_profile = chunks(&build_heap(w)?).iter().map(|c| (c.start, c.size)).collect();
    Ok(CylindricalHeap { canonical_word, ring_profile, class: class.into_iter().collect() })
}

/// Two CFC words are cyclically equivalent iff their canonical words agree.
pub fn cyclically_equivalent(u: &Word, v: &Word) -> Result<bool> {
    Ok(cylindrical_canonical(u)?.canonical_word == cylindrical_canonical(v)?.canonical_word)
}
