//! Acceptance run: one PASS/FAIL line per criterion, each with a time limit.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use cfc::classify::{enumerate_cfc, enumerate_coxeter, enumerate_fc};
use cfc::conjecture::{check_conjecture, direction_changes, has_connected_support};
use cfc::heap::{chunks, forbidden_pattern_scan, ScanMode};
use cfc::table::class_table;
use cfc::word::commutation_equivalent;
use cfc::{
    build_heap, commutation_classes, conjugacy_witness, is_cfc, is_conjugate_cfc, is_fc, reduced_expressions,
    CfcMethod, Cycle, FcMethod, Limits, Permutation, Rank, Word,
};

type Check = Result<(), String>;
type Criterion = (&'static str, u64, fn() -> Check);

fn rank(n: usize) -> Rank {
    Rank::new(n).unwrap()
}

fn word(n: usize, text: &str) -> Word {
    Word::parse(rank(n), text).unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// `x ∘ p ∘ x⁻¹` on one-line arrays.
fn conjugate(p: &[usize], x: &[usize]) -> Vec<usize> {
    let mut out = vec![0; p.len()];
    for i in 0..p.len() {
        out[x[i] - 1] = x[p[i] - 1];
    }
    out
}

fn all_one_line(degree: usize) -> Vec<Vec<usize>> {
    Permutation::all(degree).map(|p| p.one_line().to_vec()).collect()
}

fn avoids_321(p: &[usize]) -> bool {
    let n = p.len();
    !(0..n).any(|i| (i + 1..n).any(|j| p[i] > p[j] && (j + 1..n).any(|k| p[j] > p[k])))
}

fn catalan_counts() -> Check {
    let expected = [2, 5, 14, 42, 132, 429];
    for (n, &want) in (1..=6).zip(&expected) {
        let got = enumerate_fc(rank(n), &Limits::default()).map_err(|e| e.to_string())?.len();
        let brute = all_one_line(n + 1).iter().filter(|p| avoids_321(p)).count();
        ensure(got == want && brute == want, || format!("n={n}: enumerated {got}, brute force {brute}, want {want}"))?;
    }
    Ok(())
}

fn cfc_a3_set() -> Check {
    let listed = ["e", "1", "2", "3", "13", "12", "21", "23", "32", "123", "321", "132", "231"];
    let want: BTreeSet<Permutation> = listed.iter().map(|t| word(3, t).to_permutation()).collect();
    ensure(want.len() == 13, || "listed words are not 13 distinct elements".into())?;
    let got: BTreeSet<Permutation> = enumerate_cfc(rank(3), &Limits::default())
        .map_err(|e| e.to_string())?
        .iter()
        .map(|e| e.word().to_permutation())
        .collect();
    ensure(got == want, || format!("got {} elements, differing from the listed set", got.len()))
}

fn decision_oracle() -> Check {
    for n in 2..=6 {
        let elements: Vec<Word> = enumerate_cfc(rank(n), &Limits::default())
            .map_err(|e| e.to_string())?
            .into_iter()
            .map(|e| e.into_word())
            .collect();
        let orbits: Vec<BTreeSet<Vec<usize>>> = if n <= 5 {
            let group = all_one_line(n + 1);
            elements
                .iter()
                .map(|w| {
                    let p = w.to_permutation().one_line().to_vec();
                    group.iter().map(|x| conjugate(&p, x)).collect()
                })
                .collect()
        } else {
            Vec::new()
        };
        for (i, w) in elements.iter().enumerate() {
            for y in &elements {
                let decided = is_conjugate_cfc(w, y).map_err(|e| e.to_string())?;
                let cycle_type = w.to_permutation().same_cycle_type(&y.to_permutation()).unwrap();
                ensure(decided == cycle_type, || format!("n={n}: {w} vs {y}: decided {decided}, cycle type {cycle_type}"))?;
                if n <= 5 {
                    let brute = orbits[i].contains(y.to_permutation().one_line());
                    ensure(decided == brute, || format!("n={n}: {w} vs {y}: decided {decided}, brute force {brute}"))?;
                }
            }
        }
    }
    Ok(())
}

fn witness_soundness() -> Check {
    let mut checked = 0;
    for n in 1..=5 {
        let elements: Vec<Word> = enumerate_cfc(rank(n), &Limits::default())
            .map_err(|e| e.to_string())?
            .into_iter()
            .map(|e| e.into_word())
            .collect();
        for w in &elements {
            for y in &elements {
                if !w.to_permutation().same_cycle_type(&y.to_permutation()).unwrap() {
                    continue;
                }
                let cert = conjugacy_witness(w, y)
                    .map_err(|e| format!("{w} -> {y}: {e}"))?
                    .ok_or_else(|| format!("{w} -> {y}: no certificate"))?;
                let x = cert.conjugator.to_permutation();
                let image = conjugate(w.to_permutation().one_line(), x.one_line());
                ensure(cert.verified && image == y.to_permutation().one_line(), || {
                    format!("{w} -> {y}: conjugator {} does not verify", cert.conjugator)
                })?;
                checked += 1;
            }
        }
    }
    ensure(checked > 0, || "no pairs checked".into())
}

fn worked_examples() -> Check {
    let w = word(4, "12342");
    let p = w.to_permutation();
    ensure(p.one_line() == [2, 4, 3, 5, 1], || format!("12342 -> {:?}", p.one_line()))?;
    ensure(p.cycles() == vec!["(1 2 4 5)".parse::<Cycle>().unwrap()], || "cycles of 12342".into())?;
    ensure(p.inversions() == 5 && w.is_reduced(), || "length of 12342".into())?;

    let got: BTreeSet<Word> = reduced_expressions(&w).map_err(|e| e.to_string())?;
    let want: BTreeSet<Word> = ["12342", "12324", "13234", "31234"].iter().map(|t| word(4, t)).collect();
    ensure(got == want, || format!("reduced expressions of 12342: {got:?}"))?;
    let classes = commutation_classes(&w).map_err(|e| e.to_string())?;
    let want_classes: Vec<BTreeSet<Word>> = vec![
        ["12324", "12342"].iter().map(|t| word(4, t)).collect(),
        ["13234", "31234"].iter().map(|t| word(4, t)).collect(),
    ];
    ensure(classes == want_classes, || format!("commutation classes of 12342: {classes:?}"))?;

    let fc = |w: &Word| is_fc(w, FcMethod::Pattern321).unwrap().is_fc;
    let cfc = |w: &Word| is_cfc(w, CfcMethod::Pattern3213412).unwrap().is_cfc;
    let y = word(4, "21324");
    ensure(fc(&y) && !cfc(&y), || "21324 should be FC but not CFC".into())?;
    ensure(!fc(&word(3, "3213")), || "3213 should not be FC".into())?;
    let z = word(3, "2132");
    ensure(z.to_permutation().one_line() == [3, 4, 1, 2] && fc(&z) && !cfc(&z), || "2132".into())?;

    let sizes: Vec<usize> = chunks(&build_heap(&word(6, "12356")).unwrap()).iter().map(|c| c.size).collect();
    ensure(sizes == [3, 2], || format!("chunks of 12356: {sizes:?}"))?;
    ensure(is_conjugate_cfc(&word(7, "3456"), &word(7, "4567")).unwrap(), || "3456 ~ 4567".into())?;
    ensure(is_conjugate_cfc(&word(6, "12356"), &word(6, "12456")).unwrap(), || "12356 ~ 12456".into())?;

    let dc = |s: &str| direction_changes(&s.parse::<Cycle>().unwrap());
    ensure(dc("(1 2 4 3 5)") == BTreeSet::from([3, 4]), || format!("{:?}", dc("(1 2 4 3 5)")))?;
    ensure(dc("(1 4 3 5 2)") == BTreeSet::from([3, 4, 5]), || format!("{:?}", dc("(1 4 3 5 2)")))?;
    ensure(!has_connected_support(&"(1 3 5 7)".parse().unwrap()), || "(1 3 5 7) support".into())
}

fn classifier_agreement() -> Check {
    for n in 1..=5 {
        for p in Permutation::all(n + 1) {
            let w = p.to_word();
            let fc: Vec<bool> = FcMethod::ALL.iter().map(|&m| is_fc(&w, m).unwrap().is_fc).collect();
            let cfc: Vec<bool> = CfcMethod::ALL.iter().map(|&m| is_cfc(&w, m).unwrap().is_cfc).collect();
            ensure(fc.iter().all(|&v| v == fc[0]), || format!("FC methods disagree on {w}: {fc:?}"))?;
            ensure(cfc.iter().all(|&v| v == cfc[0]), || format!("CFC methods disagree on {w}: {cfc:?}"))?;
        }
    }
    Ok(())
}

fn structural_properties() -> Check {
    for n in 1..=5 {
        for p in Permutation::all(n + 1) {
            let w = p.to_word();
            let fc = is_fc(&w, FcMethod::Pattern321).unwrap().is_fc;
            let cfc = is_cfc(&w, CfcMethod::Pattern3213412).unwrap().is_cfc;
            if !fc {
                let h = build_heap(&w).unwrap();
                ensure(!forbidden_pattern_scan(&h, ScanMode::Fc).is_empty(), || format!("scan misses non-FC {w}"))?;
                continue;
            }
            let h = build_heap(&w).unwrap();
            for u in reduced_expressions(&w).map_err(|e| e.to_string())? {
                let g = build_heap(&u).unwrap();
                ensure(g.is_isomorphic(&h), || format!("heaps of {u} and {w} differ"))?;
                let back = g.to_word();
                ensure(commutation_equivalent(&back, &u) && back.to_permutation() == p, || {
                    format!("heap of {u} reads back as {back}")
                })?;
                ensure(forbidden_pattern_scan(&g, ScanMode::Fc).is_empty(), || format!("FC scan flags {u}"))?;
                let cfc_scan = forbidden_pattern_scan(&g, ScanMode::Cfc).is_empty();
                ensure(cfc_scan == cfc, || format!("CFC scan on {u}: {cfc_scan}, classifier {cfc}"))?;
            }
        }
    }
    Ok(())
}

fn class_table_rank_four() -> Check {
    let t = class_table(rank(4), &Limits::default()).map_err(|e| e.to_string())?;
    ensure(t.element_count() == 34, || format!("{} elements", t.element_count()))?;

    let coxeter: BTreeSet<Permutation> = enumerate_coxeter(rank(4), &Limits::default())
        .unwrap()
        .iter()
        .map(|e| e.word().to_permutation())
        .collect();
    ensure(coxeter.len() == 8, || format!("{} Coxeter elements", coxeter.len()))?;
    let holding: Vec<_> = t
        .conjugacy_classes
        .iter()
        .filter(|c| c.cyclic_classes.iter().flat_map(|y| &y.commutation_classes).any(|cls| coxeter.contains(&cls[0].to_permutation())))
        .collect();
    ensure(holding.len() == 1, || format!("Coxeter elements in {} conjugacy classes", holding.len()))?;
    let class = holding[0];
    let members: BTreeSet<Permutation> =
        class.cyclic_classes.iter().flat_map(|y| &y.commutation_classes).map(|cls| cls[0].to_permutation()).collect();
    ensure(class.cyclic_classes.len() == 1 && members == coxeter, || "Coxeter class is not a single cyclic class".into())?;

    let target = word(4, "123").to_permutation();
    let of_123 = t
        .conjugacy_classes
        .iter()
        .find(|c| c.cyclic_classes.iter().flat_map(|y| &y.commutation_classes).any(|cls| cls[0].to_permutation() == target))
        .ok_or("123 missing")?;
    let contains = |y: &cfc::table::CyclicClass, text: &str| {
        let p = word(4, text).to_permutation();
        y.commutation_classes.iter().any(|cls| cls[0].to_permutation() == p)
    };
    ensure(of_123.cyclic_classes.len() == 2, || format!("{} cyclic classes", of_123.cyclic_classes.len()))?;
    let (a, b) = (&of_123.cyclic_classes[0], &of_123.cyclic_classes[1]);
    ensure((contains(a, "123") && contains(b, "234")) || (contains(a, "234") && contains(b, "123")), || {
        "123 and 234 not in separate cyclic classes".into()
    })
}

fn conjecture_sweep() -> Check {
    for n in 1..=6 {
        let r = check_conjecture(rank(n), &Limits::default()).map_err(|e| e.to_string())?;
        let total: usize = (1..=n + 1).product();
        ensure(r.elements_checked == total, || format!("n={n}: checked {}", r.elements_checked))?;
        ensure(r.agree == r.counterexamples.is_empty(), || "agree flag inconsistent".into())?;
        ensure(r.agree, || {
            let list: Vec<String> = r
                .counterexamples
                .iter()
                .map(|c| format!("{} {:?} predicate={} cfc={}", c.word.word(), c.permutation.one_line(), c.predicate, c.is_cfc))
                .collect();
            format!("n={n}: counterexamples {}", list.join("; "))
        })?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("FC counts are Catalan numbers, n=1..6", 30, catalan_counts),
        ("CFC(A_3) is the listed 13-element set", 1, cfc_a3_set),
        ("ring decision matches cycle type and brute-force conjugacy", 120, decision_oracle),
        ("every conjugate CFC pair, n<=5, gets a verified conjugator", 120, witness_soundness),
        ("worked examples reproduce exactly", 5, worked_examples),
        ("FC and CFC methods agree on all of W(A_n), n<=5", 60, classifier_agreement),
        ("heaps are well defined, round-trip, and scans match classifiers, n<=5", 120, structural_properties),
        ("rank-4 class table: 34 elements, Coxeter and 123 classes", 10, class_table_rank_four),
        ("cycle-structure predicate agrees with CFC, n=1..6", 300, conjecture_sweep),
    ];
    let mut failed = 0;
    for (i, (name, limit, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let limit = Duration::from_secs(*limit);
        let verdict = match result {
            Ok(()) if elapsed <= limit => "PASS".to_string(),
            Ok(()) => "FAIL (over time limit)".to_string(),
            Err(e) => format!("FAIL ({e})"),
        };
        if !verdict.starts_with("PASS") {
            failed += 1;
        }
        println!("[{}] {verdict} {name} ({:.2}s, limit {}s)", i + 1, elapsed.as_secs_f64(), limit.as_secs());
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
