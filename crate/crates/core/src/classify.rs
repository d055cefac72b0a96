//! Fully commutative (FC) and cyclically fully commutative (CFC)
//! classification in `W(A_n)`, each by three independent routes, plus
//! enumeration of FC, CFC and Coxeter elements.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::error::{CfcError, Result};
use crate::limits::Limits;
use crate::perm::Permutation;
use crate::word::{closure_cap, commutation_classes, walk_closure, ElementId, Rank, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FcMethod {
    /// Scan every reduced expression for a braid factor `i j i`.
    StembridgeScan,
    /// Count commutation classes.
    SingleCommutationClass,
    /// 321-avoidance of the permutation image.
    #[serde(rename = "pattern_321")]
    Pattern321,
}

impl FcMethod {
    pub const ALL: [FcMethod; 3] =
        [FcMethod::StembridgeScan, FcMethod::SingleCommutationClass, FcMethod::Pattern321];
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CfcMethod {
    /// Every cyclic shift of every reduced expression is a reduced FC word.
    Definition,
    /// 321- and 3412-avoidance of the permutation image.
    #[serde(rename = "pattern_321_3412")]
    Pattern3213412,
    /// Each generator in the support appears exactly once.
    SupportOnce,
}

impl CfcMethod {
    pub const ALL: [CfcMethod; 3] =
        [CfcMethod::Definition, CfcMethod::Pattern3213412, CfcMethod::SupportOnce];
}

impl fmt::Display for FcMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FcMethod::StembridgeScan => "stembridge_scan",
            FcMethod::SingleCommutationClass => "single_commutation_class",
            FcMethod::Pattern321 => "pattern_321",
        })
    }
}

impl fmt::Display for CfcMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CfcMethod::Definition => "definition",
            CfcMethod::Pattern3213412 => "pattern_321_3412",
            CfcMethod::SupportOnce => "support_once",
        })
    }
}

/// Evidence attached to a negative verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum Witness {
    /// A reduced expression with a braid factor starting at `position` (0-based).
    #[serde(rename = "braid")]
    Braid {
        #[serde(with = "crate::word::letters_only")]
        word: Word,
        position: usize,
    },
    /// A reduced expression outside the commutation class of the input.
    #[serde(rename = "second_class")]
    SecondClass {
        #[serde(with = "crate::word::letters_only")]
        word: Word,
    },
    /// 1-based one-line positions of a 321 pattern.
    #[serde(rename = "321")]
    Pattern321 { positions: [usize; 3] },
    /// 1-based one-line positions of a 3412 pattern.
    #[serde(rename = "3412")]
    Pattern3412 { positions: [usize; 4] },
    /// A cyclic shift of a reduced expression that is not reduced, or is
    /// reduced but not FC.
    #[serde(rename = "failing_shift")]
    FailingShift {
        #[serde(with = "crate::word::letters_only")]
        word: Word,
        reduced: bool,
    },
    /// A generator used more than once, with its 0-based positions.
    #[serde(rename = "repeated_letter")]
    RepeatedLetter { letter: usize, positions: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FcVerdict {
    pub is_fc: bool,
    pub method: FcMethod,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CfcVerdict {
    pub is_cfc: bool,
    pub method: CfcMethod,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

fn braid_position(w: &[u8]) -> Option<usize> {
    (0..w.len().saturating_sub(2)).find(|&i| w[i] == w[i + 2] && w[i].abs_diff(w[i + 1]) == 1)
}

/// Searches the reduced expressions of `w` for a braid factor. Returns the
/// first word (in breadth-first order) carrying one.
fn find_braid(w: &Word) -> Result<Option<(Word, usize)>> {
    walk_closure(w.letters(), true, closure_cap(), |u| match braid_position(u) {
        Some(pos) => ControlFlow::Break((u.to_vec(), pos)),
        None => ControlFlow::Continue(()),
    })
    .map(|hit| hit.map(|(u, pos)| (Word::from_raw(w.rank(), u), pos)))
}

fn pattern_321_verdict(p: &Permutation) -> FcVerdict {
    let hit = p.contains_321();
    FcVerdict {
        is_fc: hit.is_none(),
        method: FcMethod::Pattern321,
        witness: hit.map(|positions| Witness::Pattern321 { positions }),
    }
}

pub fn is_fc(w: &Word, method: FcMethod) -> Result<FcVerdict> {
    w.require_reduced()?;
    Ok(match method {
        FcMethod::StembridgeScan => {
            let hit = find_braid(w)?;
            FcVerdict {
                is_fc: hit.is_none(),
                method,
                witness: hit.map(|(word, position)| Witness::Braid { word, position }),
            }
        }
        FcMethod::SingleCommutationClass => {
            let classes = commutation_classes(w)?;
            let witness = classes
                .iter()
                .find(|c| !c.contains(w))
                .and_then(|c| c.first().cloned())
                .map(|word| Witness::SecondClass { word });
            FcVerdict { is_fc: classes.len() == 1, method, witness }
        }
        FcMethod::Pattern321 => pattern_321_verdict(&w.to_permutation()),
    })
}

/// Every k-fold cyclic shift of every reduced expression of `w` is reduced.
pub fn is_cyclically_reduced(w: &Word) -> Result<bool> {
    w.require_reduced()?;
    let rank = w.rank();
    let failing = walk_closure(w.letters(), true, closure_cap(), |u| {
        let mut shifted = Word::from_raw(rank, u.to_vec());
        for _ in 0..u.len() {
            shifted = shifted.cyclic_shift();
            if !shifted.is_reduced() {
                return ControlFlow::Break(());
            }
        }
        ControlFlow::Continue(())
    })?;
    Ok(failing.is_none())
}

pub fn is_cfc(w: &Word, method: CfcMethod) -> Result<CfcVerdict> {
    w.require_reduced()?;
    Ok(match method {
        CfcMethod::Definition => {
            let witness = cfc_definition_failure(w)?;
            CfcVerdict { is_cfc: witness.is_none(), method, witness }
        }
        CfcMethod::Pattern3213412 => {
            let p = w.to_permutation();
            let witness = match p.contains_321() {
                Some(positions) => Some(Witness::Pattern321 { positions }),
                None => p.contains_3412().map(|positions| Witness::Pattern3412 { positions }),
            };
            CfcVerdict { is_cfc: witness.is_none(), method, witness }
        }
        CfcMethod::SupportOnce => {
            let mut positions: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
            for (i, x) in w.iter().enumerate() {
                positions.entry(x).or_default().push(i);
            }
            let witness = positions
                .into_iter()
                .find(|(_, ps)| ps.len() > 1)
                .map(|(letter, positions)| Witness::RepeatedLetter { letter, positions });
            CfcVerdict { is_cfc: witness.is_none(), method, witness }
        }
    })
}

/// Literal check: for every reduced expression `u` of `w` and every `k`, the
/// k-fold cyclic shift of `u` must be reduced and FC (by the braid scan).
fn cfc_definition_failure(w: &Word) -> Result<Option<Witness>> {
    // If w itself is not FC the unshifted word already fails, and its braid
    // scan terminates early instead of materializing every reduced word.
    if find_braid(w)?.is_some() {
        return Ok(Some(Witness::FailingShift { word: w.clone(), reduced: true }));
    }
    let rank = w.rank();
    let mut err = None;
    let hit = walk_closure(w.letters(), true, closure_cap(), |u| {
        let mut shifted = Word::from_raw(rank, u.to_vec());
        for _ in 0..u.len().max(1) {
            if !shifted.is_reduced() {
                return ControlFlow::Break(Witness::FailingShift { word: shifted, reduced: false });
            }
            match find_braid(&shifted) {
                Ok(Some(_)) => {
                    return ControlFlow::Break(Witness::FailingShift { word: shifted, reduced: true })
                }
                Ok(None) => {}
                Err(e) => {
                    err = Some(e);
                    return ControlFlow::Break(Witness::FailingShift { word: shifted, reduced: true });
                }
            }
            shifted = shifted.cyclic_shift();
        }
        ControlFlow::Continue(())
    })?;
    match err {
        Some(e) => Err(e),
        None => Ok(hit),
    }
}

/// Pattern route, the fast default.
pub fn fc(w: &Word) -> Result<bool> {
    Ok(is_fc(w, FcMethod::Pattern321)?.is_fc)
}

/// Pattern route, the fast default.
pub fn cfc(w: &Word) -> Result<bool> {
    Ok(is_cfc(w, CfcMethod::Pattern3213412)?.is_cfc)
}

pub(crate) fn require_cfc(w: &Word) -> Result<()> {
    if cfc(w)? {
        Ok(())
    } else {
        Err(CfcError::NotCfc { word: w.to_string() })
    }
}

fn sorted(set: BTreeSet<ElementId>) -> Vec<ElementId> {
    // ElementId orders by its word, which is shortlex.
    set.into_iter().collect()
}

/// All FC elements of `W(A_n)`: the 321-avoiding permutations of `S_{n+1}`.
pub fn enumerate_fc(rank: Rank, limits: &Limits) -> Result<Vec<ElementId>> {
    limits.check_enumeration(rank)?;
    Ok(sorted(
        Permutation::all(rank.degree())
            .filter(|p| p.contains_321().is_none())
            .map(|p| ElementId::from_permutation(&p))
            .collect(),
    ))
}

/// All CFC elements of `W(A_n)`, built as subsets of generators together
/// with an orientation of every edge of the induced path graph.
pub fn enumerate_cfc(rank: Rank, limits: &Limits) -> Result<Vec<ElementId>> {
    limits.check_enumeration(rank)?;
    let n = rank.get();
    let mut out = BTreeSet::new();
    for subset in 0u64..(1u64 << n) {
        let gens: Vec<usize> = (1..=n).filter(|&i| subset >> (i - 1) & 1 == 1).collect();
        for w in oriented_words(rank, &gens) {
            out.insert(ElementId::of(&w));
        }
    }
    Ok(sorted(out))
}

/// All Coxeter elements: products of all generators, each exactly once.
pub fn enumerate_coxeter(rank: Rank, limits: &Limits) -> Result<Vec<ElementId>> {
    limits.check_enumeration(rank)?;
    let gens: Vec<usize> = (1..=rank.get()).collect();
    Ok(sorted(oriented_words(rank, &gens).iter().map(ElementId::of).collect()))
}

/// For generators `gens` (ascending, distinct), one word per choice of
/// relative order between each adjacent pair `i, i+1` present in `gens`.
fn oriented_words(rank: Rank, gens: &[usize]) -> Vec<Word> {
    let edges: Vec<usize> = gens.windows(2).filter(|p| p[1] == p[0] + 1).map(|p| p[0]).collect();
    let mut out = Vec::with_capacity(1 << edges.len());
    for orient in 0u64..(1u64 << edges.len()) {
        // Bit set: i+1 comes before i. Build a linear extension greedily: a
        // chunk's letters form a path, so each generator is emitted once its
        // required predecessors are out.
        let before_next: BTreeMap<usize, bool> =
            edges.iter().enumerate().map(|(b, &i)| (i, orient >> b & 1 == 1)).collect();
        let mut placed: BTreeSet<usize> = BTreeSet::new();
        let mut letters = Vec::with_capacity(gens.len());
        while letters.len() < gens.len() {
            let next = gens
                .iter()
                .copied()
                .find(|&g| {
                    if placed.contains(&g) {
                        return false;
                    }
                    // predecessor from the left neighbour edge (g-1, g)
                    let left_ok = match before_next.get(&(g.wrapping_sub(1))) {
                        Some(&true) => true,           // g before g-1
                        Some(&false) => placed.contains(&(g - 1)),
                        None => true,
                    };
                    let right_ok = match before_next.get(&g) {
                        Some(&true) => placed.contains(&(g + 1)), // g+1 before g
                        Some(&false) => true,
                        None => true,
                    };
                    left_ok && right_ok
                })
                .expect("orientation of a path is acyclic");
            placed.insert(next);
            letters.push(next);
        }
        out.push(Word::new(rank, letters).expect("generators within rank"));
    }
    out
}

/// Catalan number `C_k`.
pub fn catalan(k: u64) -> u64 {
    (0..k).fold(1u64, |c, i| c * 2 * (2 * i + 1) / (i + 2))
}
