//! A cycle-structure test for CFC permutations, checked exhaustively.
//!
//! The predicate asks that every nontrivial cycle of `p` has connected
//! support (its entries form an interval) and at most one direction change.
//! [`check_conjecture`] compares it with the CFC classifier on all of
//! `S_{n+1}` and reports every disagreement.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::classify::cfc;
use crate::error::Result;
use crate::limits::Limits;
use crate::perm::{Cycle, Permutation};
use crate::word::{ElementId, Rank};

/// Values where the written cycle turns from rising to falling or back.
///
/// The cycle is read as written, smallest entry first, over consecutive
/// triples `(a, b, c)`; the seam from the last entry back to the first is
/// not a triple.
pub fn direction_changes(c: &Cycle) -> BTreeSet<usize> {
    c.entries()
        .windows(3)
        .filter(|t| (t[0] < t[1] && t[1] > t[2]) || (t[0] > t[1] && t[1] < t[2]))
        .map(|t| t[1])
        .collect()
}

pub fn has_connected_support(c: &Cycle) -> bool {
    let e = c.entries();
    match (e.iter().min(), e.iter().max()) {
        (Some(lo), Some(hi)) => hi - lo + 1 == e.len(),
        _ => true,
    }
}

pub fn conjecture_predicate(p: &Permutation) -> bool {
    p.cycles().iter().all(|c| has_connected_support(c) && direction_changes(c).len() <= 1)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub word: ElementId,
    pub permutation: Permutation,
    pub predicate: bool,
    pub is_cfc: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub rank: Rank,
    pub elements_checked: usize,
    pub agree: bool,
    /// Ordered by one-line notation.
    pub counterexamples: Vec<Counterexample>,
}

/// Compares the predicate with CFC classification on every element of
/// `S_{n+1}`.
pub fn check_conjecture(rank: Rank, limits: &Limits) -> Result<ConjectureReport> {
    limits.check_conjecture(rank)?;
    let mut elements_checked = 0;
    let mut counterexamples = Vec::new();
    for p in Permutation::all(rank.degree()) {
        elements_checked += 1;
        let word = ElementId::from_permutation(&p);
        let predicate = conjecture_predicate(&p);
        let is_cfc = cfc(word.word())?;
        if predicate != is_cfc {
            counterexamples.push(Counterexample { word, permutation: p, predicate, is_cfc });
        }
    }
    Ok(ConjectureReport { rank, elements_checked, agree: counterexamples.is_empty(), counterexamples })
}
