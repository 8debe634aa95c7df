//! Acceptance suite: one test per criterion, each printing a single
//! `criterion N ... PASS|FAIL` line. Run with
//! `cargo test -p antiramsey-core --test acceptance -- --nocapture`.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use antiramsey_core::decomposition::{deck, is_stable, reduced_chromatic, Mode};
use antiramsey_core::error::Budget;
use antiramsey_core::extremal::{
    classify, ex_exact_small, f_exact_tiny, find_f_colored_copy, kst_bound, lb_coloring, pair_index, turan_number,
    ClassifyCase, ClassifyOptions, EdgeColoring, ForcingOptions,
};
use antiramsey_core::graph::{chromatic_number, is_isomorphic, named_graph, GraphSpec};
use antiramsey_core::transversal::{
    itl_transversal_traced, rainbow_cut, scan_s3_d1, smd_construct, PartedDigraph, SmdVariant,
};
use antiramsey_core::{FamilySpec, SimpleGraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn g(s: GraphSpec) -> SimpleGraph {
    named_graph(&s).unwrap()
}

/// Prints the criterion line and fails the test when `failures` is non-empty.
fn report(id: u32, title: &str, started: Instant, limit: Duration, mut failures: Vec<String>) {
    let elapsed = started.elapsed();
    if elapsed > limit {
        failures.push(format!("took {elapsed:.1?}, limit {limit:?}"));
    }
    if failures.is_empty() {
        println!("criterion {id} ({title}): PASS in {elapsed:.2?}");
    } else {
        println!(
            "criterion {id} ({title}): FAIL in {elapsed:.2?}: {}",
            failures.join("; ")
        );
        panic!("criterion {id} failed: {}", failures.join("; "));
    }
}

fn exact_chi_f(h: &SimpleGraph, f: FamilySpec) -> Option<usize> {
    let r = reduced_chromatic(h, &f, Mode::Exact, &mut Budget::default()).unwrap();
    assert!(r.verify(h, &f).unwrap());
    r.value
}

#[test]
fn criterion_01_reduced_chromatic_table() {
    let t = Instant::now();
    let mut bad = Vec::new();
    let mut check = |what: String, h: SimpleGraph, f: FamilySpec, want: usize| {
        let got = exact_chi_f(&h, f);
        if got != Some(want) {
            bad.push(format!("{what} under {f}: got {got:?}, want {want}"));
        }
    };
    for p in 4..=10 {
        check(
            format!("K_{p}"),
            g(GraphSpec::Complete(p)),
            FamilySpec::Matchings,
            p.div_ceil(2),
        );
    }
    for k in 4..=8 {
        check(format!("W_{k}"), g(GraphSpec::Wheel(k)), FamilySpec::Matchings, 3);
    }
    for p in 5..=7 {
        check(
            format!("K_{p}"),
            g(GraphSpec::Complete(p)),
            FamilySpec::Forests,
            p.div_ceil(2),
        );
    }
    for k in [2, 3] {
        for p in 1..=8 {
            check(
                format!("K_{p}"),
                g(GraphSpec::Complete(p)),
                FamilySpec::KColorable(k),
                p.div_ceil(k),
            );
        }
    }
    report(1, "reduced chromatic table", t, Duration::from_secs(60), bad);
}

#[test]
fn criterion_02_book_deck_structure() {
    let t = Instant::now();
    let mut bad = Vec::new();
    for size in 3..=5 {
        let d = deck(
            &g(GraphSpec::Book(size)),
            &FamilySpec::Matchings,
            true,
            &mut Budget::default(),
        )
        .unwrap();
        if d.members.len() != 3 {
            bad.push(format!("B_{size}: {} classes", d.members.len()));
        }
        let k2t = g(GraphSpec::CompleteMultipartite(vec![2, size]));
        let has = d.members.iter().any(|m| is_isomorphic(m, &k2t).unwrap());
        if !has {
            bad.push(format!("B_{size}: no K_2,{size} class"));
        }
    }
    report(2, "book deck structure", t, Duration::from_secs(5), bad);
}

#[test]
fn criterion_03_exact_forcing_values() {
    let t = Instant::now();
    let mut bad = Vec::new();
    for (name, h, want) in [
        ("K_3", g(GraphSpec::Complete(3)), 5),
        ("K_4-e", g(GraphSpec::CompleteMinusEdge(4)), 7),
    ] {
        let r = f_exact_tiny(5, &h, &FamilySpec::Matchings, ForcingOptions::default()).unwrap();
        if r.f != want {
            let avoider = r.extremal_avoider.map(|a| a.to_text()).unwrap_or_default();
            bad.push(format!("f(5, {name}) = {}, want {want}; avoider:\n{avoider}", r.f));
        }
    }
    report(3, "exact forcing values at n = 5", t, Duration::from_secs(300), bad);
}

#[test]
fn criterion_04_lower_bound_soundness() {
    let t = Instant::now();
    let mut bad = Vec::new();
    let graphs = [
        ("K_3", g(GraphSpec::Complete(3))),
        ("K_4", g(GraphSpec::Complete(4))),
        ("K_4-e", g(GraphSpec::CompleteMinusEdge(4))),
        ("C_5", g(GraphSpec::Cycle(5))),
    ];
    let mut cases = 0;
    for (name, h) in &graphs {
        for fam in [FamilySpec::SingleEdge, FamilySpec::Matchings] {
            if fam.contains(h).unwrap() {
                continue;
            }
            for n in h.n()..=5 {
                cases += 1;
                let lb = lb_coloring(n, h, &fam, &mut Budget::default()).unwrap();
                let found = find_f_colored_copy(&lb.coloring, h, &fam, &mut Budget::default()).unwrap();
                if found.is_some() || !lb.certified {
                    bad.push(format!("{name}/{fam} n={n}: lower-bound coloring has a colored copy"));
                }
                let f = f_exact_tiny(n, h, &fam, ForcingOptions::default()).unwrap().f;
                if f < lb.coloring.k() + 1 {
                    bad.push(format!("{name}/{fam} n={n}: f = {f} < {} + 1", lb.coloring.k()));
                }
            }
        }
    }
    if cases == 0 {
        bad.push("no cases ran".into());
    }
    report(4, "deck lower bound soundness", t, Duration::from_secs(600), bad);
}

#[test]
fn criterion_05_itl_random_suite() {
    let t = Instant::now();
    let mut bad = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for trial in 0..1000 {
        let m = rng.gen_range(2..=4);
        let dp = rng.gen_range(1..=3);
        let d = PartedDigraph::random(m, m * dp + 1, dp, &mut rng).unwrap();
        match itl_transversal_traced(&d) {
            Ok((tr, trace)) => {
                if !tr.verify(&d) {
                    bad.push(format!("trial {trial}: dependent transversal"));
                }
                if trace.surviving.contains(&0) || trace.destroyed.iter().any(|&q| q >= trace.threshold) {
                    bad.push(format!("trial {trial}: surviving completions hit zero"));
                }
            }
            Err(e) => bad.push(format!("trial {trial}: {e}")),
        }
    }
    report(
        5,
        "independent transversal lemma on 1000 digraphs",
        t,
        Duration::from_secs(30),
        bad,
    );
}

#[test]
fn criterion_06_smd_tightness() {
    let t = Instant::now();
    let mut bad = Vec::new();
    let mut built = 0;
    for m in 2..=4 {
        for d in 1..=4 {
            let variants = [
                (SmdVariant::Basic, m >= 3),
                (SmdVariant::SmallM, m >= 3 && m <= d),
                (SmdVariant::Divisible, d % (m - 1) == 0),
            ];
            for (v, applies) in variants {
                if !applies {
                    continue;
                }
                built += 1;
                let r = smd_construct(m, d, v, &mut Budget::new(500_000_000)).unwrap();
                if r.verified != Some(true) || r.digraph.delta_plus() > d || r.digraph.s() != r.claimed_s {
                    bad.push(format!("{v} m={m} d={d}: verified {:?}", r.verified));
                }
            }
        }
    }
    let small = smd_construct(3, 1, SmdVariant::Basic, &mut Budget::default()).unwrap();
    if small.claimed_s != 2 || small.verified != Some(true) {
        bad.push("s(3,1) > 2 witness missing".into());
    }
    let scan = scan_s3_d1(3, None).unwrap();
    if scan.failures != 0 || scan.instances != 2 * 7u64.pow(8) {
        bad.push(format!(
            "s = 3 scan: {} failures in {} instances",
            scan.failures, scan.instances
        ));
    }
    println!(
        "  {built} constructions verified; {} digraphs scanned at s = 3",
        scan.instances
    );
    report(
        6,
        "s(m,d) constructions and s(3,1) = 3",
        t,
        Duration::from_secs(600),
        bad,
    );
}

/// Independent check: every color inside an output class is absent from the
/// edges between output classes.
fn interior_colors_avoid_cut(psi: &EdgeColoring, classes: &[Vec<usize>]) -> bool {
    let inside: HashSet<usize> = classes
        .iter()
        .flat_map(|x| {
            x.iter()
                .flat_map(move |&a| x.iter().filter(move |&&b| a < b).map(move |&b| (a, b)))
        })
        .map(|(a, b)| psi.colors()[pair_index(psi.n(), a, b)])
        .collect();
    let mut cut = Vec::new();
    for (i, x) in classes.iter().enumerate() {
        for y in &classes[i + 1..] {
            for &a in x {
                for &b in y {
                    cut.push(psi.colors()[pair_index(psi.n(), a, b)]);
                }
            }
        }
    }
    cut.iter().all(|c| !inside.contains(c))
}

#[test]
fn criterion_07_rainbow_cut_postcondition() {
    let t = Instant::now();
    let mut bad = Vec::new();
    let (q, n) = (16, 32);
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for trial in 0..200 {
        // Cross edges rainbow in a shuffled order; interior edges reuse K's
        // colors most of the time.
        let mut cross: Vec<usize> = (0..q * q).collect();
        for i in (1..cross.len()).rev() {
            cross.swap(i, rng.gen_range(0..=i));
        }
        let mut raw = vec![0; n * (n - 1) / 2];
        let mut next = 0;
        for a in 0..n {
            for b in a + 1..n {
                raw[pair_index(n, a, b)] = if (a < q) != (b < q) {
                    next += 1;
                    cross[next - 1]
                } else if rng.gen_bool(0.8) {
                    rng.gen_range(0..q * q)
                } else {
                    q * q + rng.gen_range(0..8)
                };
            }
        }
        let psi = EdgeColoring::normalized(n, &raw).unwrap();
        let classes = vec![(0..q).collect::<Vec<_>>(), (q..n).collect()];
        match rainbow_cut(&psi, &classes, 2, None) {
            Ok(r) => {
                let shapes_ok = r.classes.len() == 2
                    && r.classes[0].len() == 2
                    && r.classes[1].len() == 2
                    && r.classes[0].iter().all(|&v| v < q)
                    && r.classes[1].iter().all(|&v| v >= q);
                if !shapes_ok || !interior_colors_avoid_cut(&psi, &r.classes) {
                    bad.push(format!("trial {trial}: postcondition violated by {:?}", r.classes));
                }
            }
            Err(e) => bad.push(format!("trial {trial}: {e}")),
        }
    }
    report(7, "rainbow cut postcondition", t, Duration::from_secs(60), bad);
}

#[test]
fn criterion_08_extremal_oracles() {
    let t = Instant::now();
    let mut bad = Vec::new();
    for r in 3..=5 {
        for n in 1..=8 {
            let search = ex_exact_small(n, &[g(GraphSpec::Complete(r))], &mut Budget::unlimited()).unwrap();
            let formula = turan_number(n, r).unwrap();
            if !search.exact || search.value != formula.value {
                bad.push(format!(
                    "ex({n}, K_{r}): search {} vs formula {}",
                    search.value, formula.value
                ));
            }
        }
    }
    let c4 = ex_exact_small(8, &[g(GraphSpec::Cycle(4))], &mut Budget::unlimited()).unwrap();
    let kst = kst_bound(8, 2, 2).unwrap();
    if c4.value != 11 || !c4.exact || c4.value as f64 > kst {
        bad.push(format!(
            "ex(8, C_4) = {} (exact {}), bound {kst:.3}",
            c4.value, c4.exact
        ));
    }
    report(
        8,
        "extremal search agrees with formulas",
        t,
        Duration::from_secs(600),
        bad,
    );
}

#[test]
fn criterion_09_stability_machinery() {
    let t = Instant::now();
    let mut bad = Vec::new();
    let cases = [
        ("Petersen", g(GraphSpec::Petersen), FamilySpec::Matchings, true),
        ("K_4", g(GraphSpec::Complete(4)), FamilySpec::SingleEdge, false),
        ("C_5", g(GraphSpec::Cycle(5)), FamilySpec::SingleEdge, false),
        ("K_4", g(GraphSpec::Complete(4)), FamilySpec::Matchings, false),
    ];
    for (name, h, fam, want_stable) in cases {
        let rep = is_stable(&h, &fam, &mut Budget::default()).unwrap();
        if rep.stable != want_stable {
            let witness = rep
                .critical_witness
                .as_ref()
                .map(|w| format!("{:?}", w.edges))
                .unwrap_or_default();
            bad.push(format!(
                "({name}, {fam}) reported {} with chi = {}, chi_F = {} {witness}",
                if rep.stable { "stable" } else { "unstable" },
                rep.chi,
                rep.chi_f
            ));
            continue;
        }
        if !want_stable {
            let w = rep.critical_witness.expect("unstable report carries a witness");
            let sub = h.spanning_subgraph(&w.edges).unwrap();
            let rest = h.delete_edges(&w.edges).unwrap();
            if !fam.contains(&sub).unwrap() || chromatic_number(&rest) >= chromatic_number(&h) {
                bad.push(format!("({name}, {fam}) witness is not critical"));
            }
        }
    }
    report(9, "stability reports", t, Duration::from_secs(5), bad);
}

#[test]
fn criterion_10_classifier() {
    let t = Instant::now();
    let mut bad = Vec::new();
    let b = &mut Budget::default();
    for p in 4..=10 {
        let r = classify(
            &g(GraphSpec::Complete(p)),
            &FamilySpec::Matchings,
            ClassifyOptions::default(),
            b,
        )
        .unwrap();
        let c = p.div_ceil(2);
        let want = if p >= 5 {
            ClassifyCase::Quadratic
        } else {
            ClassifyCase::Subquadratic
        };
        if r.case != want || r.chi_f.value != Some(c) {
            bad.push(format!("K_{p}: case {:?}, chi_F {:?}", r.case, r.chi_f.value));
        }
        if p >= 5 {
            let expected = (c - 2) as f64 / (2 * c - 2) as f64;
            let got = r.coefficient_value().unwrap_or(f64::NAN);
            if (got - expected).abs() > 1e-12 || r.leading_term != format!("ex(n, K_{c})") {
                bad.push(format!("K_{p}: coefficient {got} vs {expected}"));
            }
        }
    }
    for h in [g(GraphSpec::Matching(3)), g(GraphSpec::Complete(2))] {
        let r = classify(&h, &FamilySpec::Matchings, ClassifyOptions::default(), b).unwrap();
        if r.case != ClassifyCase::Trivial {
            bad.push(format!("member graph classified {:?}", r.case));
        }
    }
    report(10, "classifier cases", t, Duration::from_secs(60), bad);
}
