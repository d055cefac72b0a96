use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;

use cfc::classify::{cfc, enumerate_cfc, enumerate_coxeter, fc};
use cfc::heap::{chunks, cyclic_shift_heap, cylindrical_canonical, forbidden_pattern_scan, ScanMode};
use cfc::ring::{boomerang_rewrite, rings_of, slide_conjugator, stst_rewrite};
use cfc::table::{class_table, ClassTable};
use cfc::word::commutation_equivalent;
use cfc::{build_heap, reduced_expressions, Heap, Limits, Permutation, Rank, Word};

fn rank(n: usize) -> Rank {
    Rank::new(n).unwrap()
}

/// Applies the transpositions right to left, one point at a time.
fn image_by_functions(n: usize, letters: &[usize]) -> Vec<usize> {
    (1..=n + 1)
        .map(|x| {
            letters.iter().rev().fold(x, |y, &a| match y {
                _ if y == a => a + 1,
                _ if y == a + 1 => a,
                _ => y,
            })
        })
        .collect()
}

/// Every reduced word of `p`, built by peeling off right descents.
fn reduced_words_oracle(p: &[usize], memo: &mut BTreeMap<Vec<usize>, BTreeSet<Vec<usize>>>) -> BTreeSet<Vec<usize>> {
    if let Some(r) = memo.get(p) {
        return r.clone();
    }
    let mut out = BTreeSet::new();
    if p.windows(2).all(|w| w[0] < w[1]) {
        out.insert(Vec::new());
    }
    for i in 1..p.len() {
        if p[i - 1] > p[i] {
            let mut q = p.to_vec();
            q.swap(i - 1, i);
            for mut w in reduced_words_oracle(&q, memo) {
                w.push(i);
                out.insert(w);
            }
        }
    }
    memo.insert(p.to_vec(), out.clone());
    out
}

fn all_elements(n: usize) -> Vec<Word> {
    Permutation::all(n + 1).map(|p| p.to_word()).collect()
}

fn word_strategy() -> impl Strategy<Value = Word> {
    (1usize..=7).prop_flat_map(|n| prop::collection::vec(1..=n, 0..14).prop_map(move |l| Word::from_slice(n, &l).unwrap()))
}

proptest! {
    #[test]
    fn image_is_a_homomorphism(u in word_strategy(), extra in prop::collection::vec(1usize..=7, 0..10)) {
        let n = u.rank().get();
        let v = Word::new(u.rank(), extra.into_iter().map(|a| (a - 1) % n + 1)).unwrap();
        let uv = u.concat(&v).unwrap();
        prop_assert_eq!(uv.to_permutation(), u.to_permutation().compose(&v.to_permutation()).unwrap());
        prop_assert_eq!(uv.to_permutation().one_line().to_vec(), image_by_functions(n, &uv.to_vec()));
    }

    #[test]
    fn length_is_the_inversion_count(w in word_strategy()) {
        let r = w.reduce();
        prop_assert!(r.is_reduced());
        prop_assert_eq!(r.to_permutation(), w.to_permutation());
        prop_assert_eq!(r.len(), w.to_permutation().inversions());
    }

    #[test]
    fn boomerang_keeps_the_element(
        n in 3usize..=7,
        k in 1usize..=5,
        span in 1usize..=4,
        pre in prop::collection::vec(1usize..=7, 0..5),
        post in prop::collection::vec(1usize..=7, 0..5),
    ) {
        prop_assume!(k + span <= n);
        let fit = |v: Vec<usize>| v.into_iter().map(|a| (a - 1) % n + 1).collect::<Vec<_>>();
        let (pre, post) = (fit(pre), fit(post));
        let factor: Vec<usize> = (k..=k + span).chain((k..k + span).rev()).collect();
        let letters: Vec<usize> = pre.iter().chain(&factor).chain(&post).copied().collect();
        let w = Word::from_slice(n, &letters).unwrap();
        let v = boomerang_rewrite(&w, pre.len()).unwrap();
        prop_assert_eq!(v.len(), w.len());
        prop_assert_eq!(v.to_permutation(), w.to_permutation());
    }

    #[test]
    fn stst_keeps_the_element(
        n in 2usize..=7,
        i in 1usize..=7,
        up in any::<bool>(),
        pre in prop::collection::vec(1usize..=7, 0..5),
        post in prop::collection::vec(1usize..=7, 0..5),
    ) {
        let i = (i - 1) % (n - 1) + 1;
        let (a, b) = if up { (i, i + 1) } else { (i + 1, i) };
        let fit = |v: Vec<usize>| v.into_iter().map(|x| (x - 1) % n + 1).collect::<Vec<_>>();
        let (pre, post) = (fit(pre), fit(post));
        let letters: Vec<usize> = pre.iter().chain(&[a, b, a, b]).chain(&post).copied().collect();
        let w = Word::from_slice(n, &letters).unwrap();
        let v = stst_rewrite(&w, pre.len()).unwrap();
        prop_assert_eq!(v.len() + 2, w.len());
        prop_assert_eq!(v.to_permutation(), w.to_permutation());
    }

    /// A diagonal chunk `k..k'` with `k'+1` and `k'+2` free slides right by
    /// one and the other chunks stay put.
    #[test]
    fn slide_moves_one_ring(n in 2usize..=8, pick in any::<prop::sample::Index>(), which in any::<prop::sample::Index>()) {
        let elements = enumerate_cfc(rank(n.min(6)), &Limits::default()).unwrap();
        let w = elements[pick.index(elements.len())].word().with_rank(rank(n)).unwrap();
        let rings = rings_of(&w).unwrap();
        prop_assume!(!rings.is_empty());
        let r = rings[which.index(rings.len())];
        let support = w.support();
        prop_assume!(r.end() < n && !support.contains(&(r.end() + 1)) && !support.contains(&(r.end() + 2)));
        let others: Vec<usize> = w.iter().filter(|&g| g < r.start || g > r.end()).collect();
        let before = Word::new(w.rank(), others.iter().copied().chain(r.start..=r.end())).unwrap();
        let after = Word::new(w.rank(), others.iter().copied().chain(r.start + 1..=r.end() + 1)).unwrap();
        let x = slide_conjugator(r.start, r.end(), w.rank()).unwrap().to_permutation();
        prop_assert_eq!(before.to_permutation().conjugate(&x).unwrap(), after.to_permutation());
    }

    #[test]
    fn word_json_round_trip(w in word_strategy()) {
        let text = serde_json::to_string(&w).unwrap();
        prop_assert_eq!(serde_json::from_str::<Word>(&text).unwrap(), w.clone());
        let p = w.to_permutation();
        let text = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<Permutation>(&text).unwrap(), p);
    }

    #[test]
    fn heap_json_round_trip(w in word_strategy()) {
        let h = build_heap(&w.reduce()).unwrap();
        let text = serde_json::to_string(&h).unwrap();
        prop_assert_eq!(serde_json::from_str::<Heap>(&text).unwrap(), h);
    }
}

#[test]
fn reduced_expressions_match_descent_recursion() {
    for n in 1..=4 {
        let mut memo = BTreeMap::new();
        for p in Permutation::all(n + 1) {
            let expected = reduced_words_oracle(p.one_line(), &mut memo);
            let got: BTreeSet<Vec<usize>> = reduced_expressions(&p.to_word()).unwrap().iter().map(Word::to_vec).collect();
            assert_eq!(got, expected, "{:?}", p.one_line());
        }
    }
}

#[test]
fn heaps_agree_across_each_fc_commutation_class() {
    for n in 1..=4 {
        for w in all_elements(n).into_iter().filter(|w| fc(w).unwrap()) {
            let h = build_heap(&w).unwrap();
            for u in reduced_expressions(&w).unwrap() {
                let g = build_heap(&u).unwrap();
                assert!(g.is_isomorphic(&h), "{u} vs {w}");
                let back = g.to_word();
                assert!(commutation_equivalent(&back, &u));
                assert_eq!(back.to_permutation(), w.to_permutation());
            }
        }
    }
}

#[test]
fn scans_match_classifiers() {
    for n in 1..=4 {
        for w in all_elements(n) {
            for u in reduced_expressions(&w).unwrap() {
                let h = build_heap(&u).unwrap();
                let fc_scan = forbidden_pattern_scan(&h, ScanMode::Fc).is_empty();
                let cfc_scan = forbidden_pattern_scan(&h, ScanMode::Cfc).is_empty();
                if fc(&w).unwrap() {
                    assert!(fc_scan, "{u}");
                    assert_eq!(cfc_scan, cfc(&w).unwrap(), "{u}");
                } else {
                    assert!(!cfc_scan, "{u}");
                }
            }
            // on the canonical word, the scan alone decides FC
            let h = build_heap(&w).unwrap();
            assert_eq!(forbidden_pattern_scan(&h, ScanMode::Fc).is_empty(), fc(&w).unwrap(), "{w}");
        }
    }
}

#[test]
fn cfc_chunks_are_separated_intervals_matching_cycles() {
    for n in 1..=6 {
        for id in enumerate_cfc(rank(n), &Limits::default()).unwrap() {
            let w = id.word();
            let cs = chunks(&build_heap(w).unwrap());
            for c in &cs {
                let gens: BTreeSet<usize> = w.iter().filter(|&g| g >= c.start && g <= c.end()).collect();
                assert_eq!(gens.len(), c.size);
                assert_eq!(c.block_ids.len(), c.size);
            }
            for pair in cs.windows(2) {
                assert!(pair[0].end() + 1 < pair[1].start);
            }
            let mut ring_cycles: Vec<usize> = rings_of(w).unwrap().iter().map(|r| r.size + 1).collect();
            ring_cycles.sort_unstable();
            let mut cycles: Vec<usize> = w.to_permutation().cycles().iter().map(|c| c.len()).collect();
            cycles.sort_unstable();
            assert_eq!(ring_cycles, cycles, "{w}");
        }
    }
}

#[test]
fn coxeter_elements_form_one_cyclic_class() {
    for n in 1..=6 {
        let cox = enumerate_coxeter(rank(n), &Limits::default()).unwrap();
        assert_eq!(cox.len(), 1 << (n - 1));
        let canon: BTreeSet<Word> = cox.iter().map(|c| cylindrical_canonical(c.word()).unwrap().canonical_word).collect();
        assert_eq!(canon.len(), 1);
        let first = cox[0].word().to_permutation();
        assert!(cox.iter().all(|c| c.word().to_permutation().same_cycle_type(&first).unwrap()));
    }
}

#[test]
fn shifting_a_maximal_block_matches_the_shifted_word() {
    for n in 1..=4 {
        for id in enumerate_cfc(rank(n), &Limits::default()).unwrap() {
            let h = build_heap(id.word()).unwrap();
            for top in h.maximal_blocks() {
                let g = h.blocks()[top].gen;
                let shifted = cyclic_shift_heap(&h, g).unwrap();
                let p = id.word().to_permutation();
                let s = Word::from_slice(n, &[g]).unwrap().to_permutation();
                assert_eq!(shifted.to_word().to_permutation(), p.conjugate(&s).unwrap());
            }
        }
    }
}

#[test]
fn class_tables_group_by_cycle_type() {
    for n in 1..=5 {
        let t = class_table(rank(n), &Limits::default()).unwrap();
        let mut seen = BTreeSet::new();
        for c in &t.conjugacy_classes {
            let types: BTreeSet<Vec<usize>> = c
                .cyclic_classes
                .iter()
                .flat_map(|y| &y.commutation_classes)
                .map(|cls| cls[0].to_permutation().cycle_type())
                .collect();
            assert_eq!(types.len(), 1);
            assert!(seen.insert(types.into_iter().next().unwrap()));
        }
        let all: Vec<&Word> = t.words().collect();
        let expected: usize =
            enumerate_cfc(rank(n), &Limits::default()).unwrap().iter().map(|e| reduced_expressions(e.word()).unwrap().len()).sum();
        assert_eq!(all.len(), expected);
        assert_eq!(all.iter().collect::<BTreeSet<_>>().len(), expected);
        let text = serde_json::to_string(&t).unwrap();
        assert_eq!(serde_json::from_str::<ClassTable>(&text).unwrap(), t);
    }
}
