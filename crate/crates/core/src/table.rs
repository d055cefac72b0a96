//! Class tables and counts.
//!
//! The CFC elements of a rank are grouped three levels deep: conjugacy
//! classes (equal ring-size multisets), cyclic classes inside each (same
//! cylindrical canonical word), and the commutation classes of reduced
//! expressions of each element.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::classify::{enumerate_cfc, enumerate_coxeter, enumerate_fc};
use crate::error::{CfcError, Result};
use crate::heap::cylindrical_canonical;
use crate::limits::Limits;
use crate::ring::rings_of;
use crate::word::{commutation_classes, Rank, Word};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawTable", into = "RawTable")]
pub struct ClassTable {
    pub rank: Rank,
    pub conjugacy_classes: Vec<ConjugacyClass>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClass {
    /// Ring sizes, largest first.
    pub ring_size_multiset: Vec<usize>,
    pub cyclic_classes: Vec<CyclicClass>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicClass {
    pub canonical_word: Word,
    /// One entry per element; each lists that element's reduced words.
    pub commutation_classes: Vec<Vec<Word>>,
}

impl ClassTable {
    pub fn element_count(&self) -> usize {
        self.cyclic_classes().map(|c| c.commutation_classes.len()).sum()
    }

    pub fn cyclic_classes(&self) -> impl Iterator<Item = &CyclicClass> {
        self.conjugacy_classes.iter().flat_map(|c| &c.cyclic_classes)
    }

    /// Every leaf word, in table order.
    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.cyclic_classes().flat_map(|c| c.commutation_classes.iter().flatten())
    }
}

/// Groups `CFC(A_n)` into conjugacy, cyclic and commutation classes, each
/// level sorted by (length, least word).
pub fn class_table(rank: Rank, limits: &Limits) -> Result<ClassTable> {
    let mut by_rings: BTreeMap<Vec<usize>, BTreeMap<Word, Vec<Vec<Word>>>> = BTreeMap::new();
    for id in enumerate_cfc(rank, limits)? {
        let w = id.word();
        let mut sizes: Vec<usize> = rings_of(w)?.iter().map(|r| r.size).collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        let canonical = cylindrical_canonical(w)?.canonical_word;
        let words: Vec<Word> = commutation_classes(w)?.into_iter().flatten().collect();
        by_rings.entry(sizes).or_default().entry(canonical).or_default().push(words);
    }
    let mut conjugacy_classes: Vec<ConjugacyClass> = by_rings
        .into_iter()
        .map(|(ring_size_multiset, cyclic)| ConjugacyClass {
            ring_size_multiset,
            cyclic_classes: cyclic
                .into_iter()
                .map(|(canonical_word, mut commutation_classes)| {
                    commutation_classes.sort();
                    CyclicClass { canonical_word, commutation_classes }
                })
                .collect(),
        })
        .collect();
    conjugacy_classes.sort_by(|a, b| {
        let key = |c: &ConjugacyClass| (c.ring_size_multiset.iter().sum::<usize>(), c.cyclic_classes[0].canonical_word.clone());
        key(a).cmp(&key(b))
    });
    Ok(ClassTable { rank, conjugacy_classes })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CountKind {
    Fc,
    Cfc,
    Coxeter,
}

/// Number of FC, CFC or Coxeter elements of `W(A_n)`.
pub fn count(kind: CountKind, rank: Rank, limits: &Limits) -> Result<usize> {
    Ok(match kind {
        CountKind::Fc => enumerate_fc(rank, limits)?.len(),
        CountKind::Cfc => enumerate_cfc(rank, limits)?.len(),
        CountKind::Coxeter => enumerate_coxeter(rank, limits)?.len(),
    })
}

#[derive(Serialize, Deserialize)]
struct RawTable {
    rank: Rank,
    conjugacy_classes: Vec<RawConjugacy>,
}

#[derive(Serialize, Deserialize)]
struct RawConjugacy {
    ring_size_multiset: Vec<usize>,
    cyclic_classes: Vec<RawCyclic>,
}

#[derive(Serialize, Deserialize)]
struct RawCyclic {
    canonical_word: Vec<usize>,
    commutation_classes: Vec<Vec<Vec<usize>>>,
}

impl From<ClassTable> for RawTable {
    fn from(t: ClassTable) -> RawTable {
        RawTable {
            rank: t.rank,
            conjugacy_classes: t
                .conjugacy_classes
                .into_iter()
                .map(|c| RawConjugacy {
                    ring_size_multiset: c.ring_size_multiset,
                    cyclic_classes: c
                        .cyclic_classes
                        .into_iter()
                        .map(|y| RawCyclic {
                            canonical_word: y.canonical_word.to_vec(),
                            commutation_classes: y
                                .commutation_classes
                                .iter()
                                .map(|cls| cls.iter().map(Word::to_vec).collect())
                                .collect(),
                        })
                        .collect(),
                })
                .collect(),
        }
    }
}

impl TryFrom<RawTable> for ClassTable {
    type Error = CfcError;

    fn try_from(raw: RawTable) -> Result<ClassTable> {
        let rank = raw.rank;
        let conjugacy_classes = raw
            .conjugacy_classes
            .into_iter()
            .map(|c| {
                let cyclic_classes = c
                    .cyclic_classes
                    .into_iter()
                    .map(|y| {
                        let commutation_classes = y
                            .commutation_classes
                            .into_iter()
                            .map(|cls| cls.into_iter().map(|l| Word::new(rank, l)).collect::<Result<Vec<_>>>())
                            .collect::<Result<Vec<_>>>()?;
                        Ok(CyclicClass { canonical_word: Word::new(rank, y.canonical_word)?, commutation_classes })
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(ConjugacyClass { ring_size_multiset: c.ring_size_multiset, cyclic_classes })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ClassTable { rank, conjugacy_classes })
    }
}
