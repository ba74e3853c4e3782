//! Acceptance gate: one test per acceptance criterion, each printing a
//! single `ACCEPTANCE <k>: PASS` line (run with `--nocapture` to see the
//! lines on success; a failed assertion names its criterion).

use fibrun::barriers::distance_certified;
use fibrun::bounds::{
    baseline_improved_90_229, best_lower_bound, conjectured_diameter, improved_set, p_of,
    refutation_scan, table1, table2, table3,
};
use fibrun::constructions::{nh_bar1_pair, thick_chain_pair, ConstructionSpec, Family};
use fibrun::graph::{CheckMode, FormulaKind, GraphIndex};
use fibrun::strings::{count_vertices, fibonacci, for_each_vertex, BitString};
use std::time::{Duration, Instant};

fn bs(s: &str) -> BitString {
    s.parse().unwrap()
}

/// Criterion 1: the closed-form vertex count equals the Fibonacci value for
/// n ≤ 40 (< 1s), and explicit enumeration agrees with it for n ≤ 20
/// (< 10s).
#[test]
fn criterion_1_vertex_counts() {
    let t0 = Instant::now();
    for n in 0..=40usize {
        assert_eq!(
            count_vertices(n),
            fibonacci(n + 2),
            "criterion 1: count disagrees with the Fibonacci value at n={n}"
        );
    }
    let count_time = t0.elapsed();
    assert!(count_time < Duration::from_secs(1), "criterion 1: {count_time:?}");

    let t1 = Instant::now();
    for n in 0..=20usize {
        let mut seen = 0u64;
        for_each_vertex(n, |_| seen += 1);
        assert_eq!(
            count_vertices(n).to_string(),
            seen.to_string(),
            "criterion 1: enumeration count differs at n={n}"
        );
    }
    let enum_time = t1.elapsed();
    assert!(enum_time < Duration::from_secs(10), "criterion 1: {enum_time:?}");
    println!(
        "ACCEPTANCE 1: PASS — counts = Fibonacci for n ≤ 40 ({count_time:?}), enumeration agrees for n ≤ 20 ({enum_time:?})"
    );
}

/// Criterion 2: Hamming distance equals the true distance on every pair for
/// n ≤ 6, and the distinguished n = 7 pair exceeds its Hamming distance by
/// exactly 2 (< 1s total).
#[test]
fn criterion_2_hamming_threshold() {
    let t0 = Instant::now();
    for n in 1..=6usize {
        let g = GraphIndex::build(n).unwrap();
        let report = g.all_pairs_check(FormulaKind::Hamming, CheckMode::Exhaustive);
        assert!(
            report.mismatches.is_empty(),
            "criterion 2: Hamming mismatch at n={n}: {}",
            serde_json::to_string(&report.mismatches).unwrap()
        );
    }
    let g7 = GraphIndex::build(7).unwrap();
    let (u, v) = (bs("1001000"), bs("1111000"));
    let bfs = g7.distance_bfs(&u, &v).unwrap();
    let hamming = fibrun::strings::hamming(&u, &v).unwrap();
    assert_eq!((bfs, hamming), (4, 2), "criterion 2: n=7 pair");
    let elapsed = t0.elapsed();
    assert!(elapsed < Duration::from_secs(1), "criterion 2: {elapsed:?}");
    println!(
        "ACCEPTANCE 2: PASS — Hamming = distance on all pairs for n ≤ 6; n=7 pair needs Hamming+2 ({elapsed:?})"
    );
}

/// Criterion 3: the certified distance equals breadth-first search on every
/// pair for n ≤ 14 (< 2min) and on ≥ 10^5 seeded pairs for each
/// n ∈ 15..=20 (< 5min); zero mismatches, with overlap refusals counted
/// separately.
#[test]
fn criterion_3_certified_equals_bfs() {
    let t0 = Instant::now();
    for n in 1..=14usize {
        let g = GraphIndex::build(n).unwrap();
        let report = g.all_pairs_check(FormulaKind::Certified, CheckMode::Exhaustive);
        assert!(
            report.mismatches.is_empty(),
            "criterion 3: certified mismatch at n={n}: {}",
            serde_json::to_string(&report.mismatches).unwrap()
        );
        assert_eq!(report.overlap_refusals, 0, "criterion 3: n={n}");
    }
    let exhaustive_time = t0.elapsed();
    assert!(
        exhaustive_time < Duration::from_secs(120),
        "criterion 3: {exhaustive_time:?}"
    );

    let t1 = Instant::now();
    let mut refusals = Vec::new();
    for n in 15..=20usize {
        let g = GraphIndex::build(n).unwrap();
        let report = g.all_pairs_check(
            FormulaKind::Certified,
            CheckMode::Sampled {
                pairs: 100_000,
                seed: 42,
            },
        );
        assert!(
            report.mismatches.is_empty(),
            "criterion 3: certified mismatch at n={n}: {}",
            serde_json::to_string(&report.mismatches).unwrap()
        );
        assert!(report.pairs_checked + report.overlap_refusals >= 100_000);
        refusals.push((n, report.overlap_refusals));
    }
    let sampled_time = t1.elapsed();
    assert!(
        sampled_time < Duration::from_secs(300),
        "criterion 3: {sampled_time:?}"
    );
    println!(
        "ACCEPTANCE 3: PASS — certified = BFS on all pairs n ≤ 14 ({exhaustive_time:?}) and 10^5 seeded pairs each n ∈ 15..=20 ({sampled_time:?}); refusals {refusals:?}"
    );
}

/// Criterion 4: the worked distance examples reproduce exactly — the n=21
/// pair at distance 14, the n=28 barrier-free pair at distance 18 by
/// single-source search (< 30s), and the four construction witnesses with
/// certified distances 86 (n=91), 89 (n=94), 279 (n=288), 508 (n=520).
#[test]
fn criterion_4_worked_examples() {
    let g21 = GraphIndex::build(21).unwrap();
    let (u, v) = (bs("100110001110000011100"), bs("111111111110000000000"));
    assert_eq!(g21.distance_bfs(&u, &v).unwrap(), 14, "criterion 4: n=21");
    assert_eq!(
        distance_certified(&u, &v).unwrap().certified_distance,
        14,
        "criterion 4: n=21 certificate"
    );

    let t0 = Instant::now();
    let g28 = GraphIndex::build(28).unwrap();
    let (a, b) = (
        bs("1001111111000000001100011100"),
        bs("1110000100111000011111100000"),
    );
    assert_eq!(g28.distance_bfs(&a, &b).unwrap(), 18, "criterion 4: n=28");
    let cert = distance_certified(&a, &b).unwrap();
    assert_eq!((cert.certified_distance, cert.hamming), (18, 18));
    let bfs28_time = t0.elapsed();
    assert!(bfs28_time < Duration::from_secs(30), "criterion 4: {bfs28_time:?}");

    let spec = |family, n, q, b, w, c, prefixed| ConstructionSpec {
        family,
        n,
        q,
        b,
        w,
        c,
        prefixed,
    };
    let w91 = nh_bar1_pair(&spec(Family::NhBar1, 91, 9, Some(6), None, None, false)).unwrap();
    assert_eq!(w91.certified_distance(), 86, "criterion 4: n=91");
    assert_eq!(best_lower_bound(94).certified, 89, "criterion 4: n=94");
    let w288 =
        thick_chain_pair(&spec(Family::ThickChain, 288, 21, None, Some(2), Some(8), false))
            .unwrap();
    assert_eq!(w288.certified_distance(), 279, "criterion 4: n=288");
    let w520 =
        thick_chain_pair(&spec(Family::ThickChain, 520, 23, None, Some(2), Some(7), true))
            .unwrap();
    assert_eq!(w520.certified_distance(), 508, "criterion 4: n=520");
    println!(
        "ACCEPTANCE 4: PASS — distances 14@21, 18@28 ({bfs28_time:?}), certified 86@91, 89@94, 279@288, 508@520"
    );
}

/// Criterion 5: the exact diameter equals the conjectured value and the
/// exact radius equals ⌈n/2⌉ for every n ≤ 18 (≤ 10min).
#[test]
fn criterion_5_diameter_radius() {
    let t0 = Instant::now();
    for n in 0..=18usize {
        let g = GraphIndex::build(n).unwrap();
        let (diam, witness) = g.diameter_exact();
        assert_eq!(
            diam as u64,
            conjectured_diameter(n as u64),
            "criterion 5: diameter at n={n} (witness {} / {})",
            witness.0,
            witness.1
        );
        let (radius, _) = g.radius_exact();
        assert_eq!(radius, n.div_ceil(2), "criterion 5: radius at n={n}");
    }
    let elapsed = t0.elapsed();
    assert!(elapsed < Duration::from_secs(600), "criterion 5: {elapsed:?}");
    println!(
        "ACCEPTANCE 5: PASS — diameter = conjectured value and radius = ⌈n/2⌉ for all n ≤ 18 ({elapsed:?})"
    );
}

/// Criterion 6: the two closed forms for the conjectured diameter (direct
/// square-root form and interval form) agree for every n ≤ 10^6 (< 5s).
#[test]
fn criterion_6_closed_forms_agree() {
    let t0 = Instant::now();
    for n in 0..=1_000_000u64 {
        assert_eq!(
            conjectured_diameter(n),
            n - p_of(n).p,
            "criterion 6: closed forms disagree at n={n}"
        );
    }
    let elapsed = t0.elapsed();
    assert!(elapsed < Duration::from_secs(5), "criterion 6: {elapsed:?}");
    println!("ACCEPTANCE 6: PASS — both closed forms agree for all n ≤ 10^6 ({elapsed:?})");
}

/// Criterion 7: the refutation scan over 90..=229 finds exactly the
/// baseline improved set (including the distinguished lengths), every
/// witness revalidates through the barrier detector, and every length in
/// 230..=300 is improved.
#[test]
fn criterion_7_refutation_scan() {
    let t0 = Instant::now();
    let reports = refutation_scan(90, 229);
    let set = improved_set(&reports);
    for key in [91, 94, 119, 120, 121, 122, 123, 124, 152, 189, 223] {
        assert!(set.contains(&key), "criterion 7: {key} missing");
    }
    assert_eq!(
        set,
        baseline_improved_90_229(),
        "criterion 7: improved set differs from baseline"
    );
    for r in &reports {
        let cert = distance_certified(&r.witness.u, &r.witness.v).unwrap();
        assert_eq!(
            cert.certified_distance as u64, r.certified,
            "criterion 7: witness at n={} does not revalidate",
            r.n
        );
    }
    let later = refutation_scan(230, 300);
    assert_eq!(
        improved_set(&later),
        (230..=300).collect::<Vec<u64>>(),
        "criterion 7: a length in 230..=300 is not improved"
    );
    let elapsed = t0.elapsed();
    println!(
        "ACCEPTANCE 7: PASS — scan(90..=229) = baseline 70-element set, all witnesses revalidate, 230..=300 all improved ({elapsed:?})"
    );
}

/// Criterion 8: the per-offset tables at p = 15 match the shipped baseline
/// cell-for-cell (closed-form discrepancies surface only as notes), and the
/// interval tabulation reproduces the recomputed rows for p ∈ 6..=10 with
/// every printed-vs-recomputed difference logged.
#[test]
fn criterion_8_tables() {
    let t0 = Instant::now();
    let t1 = table1(15);
    assert!(t1.diffs.is_empty(), "criterion 8: table 1 diffs {:?}", t1.diffs);
    assert!(
        t1.notes.iter().any(|n| n.contains("legacy closed form")),
        "criterion 8: table 1 missing legacy note"
    );
    let t2 = table2(15);
    assert!(t2.diffs.is_empty(), "criterion 8: table 2 diffs {:?}", t2.diffs);

    let t3 = table3();
    let row = |p: &str| {
        t3.rows
            .iter()
            .find(|r| r[0] == p)
            .unwrap_or_else(|| panic!("criterion 8: no row for p={p}"))
    };
    let expected: [(&str, &str, &str); 5] = [
        ("6", "1", "91;94:95"),
        ("7", "1", "119:124;131;136"),
        ("8", "1", "152:170;172;178;181;184:185"),
        ("9", "1", "189:223"),
        ("10", "2", "230;232;238:239;241"),
    ];
    for (p, e, col1) in expected {
        let r = row(p);
        assert_eq!(
            (&r[1][..], &r[2][..]),
            (e, col1),
            "criterion 8: recomputed row p={p}"
        );
    }
    assert!(
        t3.diffs
            .iter()
            .any(|d| d.contains("p=6 col1: baseline 91;93:94 recomputed 91;94:95")),
        "criterion 8: expected p=6 diff not logged: {:?}",
        t3.diffs
    );
    assert!(!t3.diffs.is_empty(), "criterion 8: no diffs logged");
    let elapsed = t0.elapsed();
    println!(
        "ACCEPTANCE 8: PASS — tables at p=15 match baseline with closed-form notes; tabulation rows p ∈ 6..=10 reproduce with {} diffs logged ({elapsed:?})",
        t3.diffs.len()
    );
}
