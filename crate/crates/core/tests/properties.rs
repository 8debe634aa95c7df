use antiramsey_core::decomposition::{reduced_chromatic, Mode};
use antiramsey_core::error::Budget;
use antiramsey_core::extremal::{
    f_exact_tiny, find_f_colored_copy, lb_coloring, turan_number, EdgeColoring, ForcingOptions,
};
use antiramsey_core::graph::{contains_subgraph, named_graph, GraphSpec};
use antiramsey_core::transversal::{find_transversal_exact, itl_transversal, PartedDigraph};
use antiramsey_core::{FamilySpec, SimpleGraph};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = SimpleGraph> {
    (2..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            SimpleGraph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

fn chi_f(g: &SimpleGraph, f: FamilySpec) -> usize {
    reduced_chromatic(g, &f, Mode::Exact, &mut Budget::default())
        .unwrap()
        .value
        .unwrap()
}

/// Fewest classes in a vertex partition where every class induces maximum
/// degree at most `t`, by trying all labelings.
fn defective_chromatic(g: &SimpleGraph, t: usize) -> usize {
    let n = g.n();
    for k in 1..=n {
        let mut labels = vec![0usize; n];
        loop {
            let ok = (0..n).all(|v| (0..n).filter(|&w| labels[w] == labels[v] && g.has_edge(v, w)).count() <= t);
            if ok {
                return k;
            }
            let mut i = 0;
            while i < n && labels[i] == k - 1 {
                labels[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
            labels[i] += 1;
        }
    }
    n.max(1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn chi_f_decreases_along_family_chain(g in graph_strategy(7)) {
        let chain = [FamilySpec::SingleEdge, FamilySpec::Matchings, FamilySpec::LinearForests, FamilySpec::Forests];
        let values: Vec<usize> = chain.iter().map(|f| chi_f(&g, *f)).collect();
        prop_assert!(values.windows(2).all(|w| w[0] >= w[1]), "{values:?}");
    }

    #[test]
    fn max_degree_family_is_defective_coloring(g in graph_strategy(7), t in 1usize..3) {
        prop_assert_eq!(chi_f(&g, FamilySpec::MaxDegree(t)), defective_chromatic(&g, t));
    }

    #[test]
    fn chi_f_is_one_exactly_on_members(g in graph_strategy(7)) {
        for f in [FamilySpec::Matchings, FamilySpec::Forests, FamilySpec::MaxDegree(2), FamilySpec::KColorable(2)] {
            prop_assert_eq!(chi_f(&g, f) == 1, f.contains(&g).unwrap());
        }
    }

    #[test]
    fn itl_and_exact_search_agree(seed in any::<u64>(), m in 2usize..=4, dp in 1usize..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = PartedDigraph::random(m, m * dp + 1, dp, &mut rng).unwrap();
        let t = itl_transversal(&d).unwrap();
        prop_assert!(t.verify(&d));
        prop_assert!(find_transversal_exact(&d, 1, &mut Budget::default()).unwrap().is_some());
    }
}

#[test]
fn itl_and_exact_agree_on_500_instances() {
    let mut rng = ChaCha8Rng::seed_from_u64(500);
    for i in 0..500 {
        let m = 2 + i % 3;
        let dp = 1 + i % 3;
        let d = PartedDigraph::random(m, m * dp + 1, dp, &mut rng).unwrap();
        let itl = itl_transversal(&d).unwrap();
        assert!(itl.verify(&d), "instance {i}");
        let exact = find_transversal_exact(&d, 1, &mut Budget::default()).unwrap().unwrap();
        assert!(exact.verify(&d), "instance {i}");
    }
}

#[test]
fn complete_graphs_under_k_colorable() {
    for k in 1..=4 {
        for p in 1..=9 {
            let g = named_graph(&GraphSpec::Complete(p)).unwrap();
            assert_eq!(chi_f(&g, FamilySpec::KColorable(k)), p.div_ceil(k), "K_{p}, k = {k}");
        }
    }
}

#[test]
fn turan_graphs_avoid_the_next_clique() {
    for r in 2..=6 {
        for n in 1..=12 {
            let t = turan_number(n, r).unwrap();
            let clique = named_graph(&GraphSpec::Complete(r)).unwrap();
            assert!(!contains_subgraph(&t.extremal_graph, &clique), "n = {n}, r = {r}");
            if n >= r {
                let plus = (0..n)
                    .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                    .find(|&(u, v)| !t.extremal_graph.has_edge(u, v));
                if let Some((u, v)) = plus {
                    let mut edges: Vec<(usize, usize)> = t.extremal_graph.edges().iter().map(|e| (e.u, e.v)).collect();
                    edges.push((u, v));
                    let g = SimpleGraph::from_edges(n, edges).unwrap();
                    assert!(contains_subgraph(&g, &clique), "Turán graph is not saturated");
                }
            }
        }
    }
}

#[test]
fn forcing_number_shrinks_as_family_grows() {
    let k3 = named_graph(&GraphSpec::Complete(3)).unwrap();
    let p4 = named_graph(&GraphSpec::Path(4)).unwrap();
    for (g, n) in [(&k3, 4), (&k3, 5), (&p4, 5)] {
        let values: Vec<usize> = [FamilySpec::SingleEdge, FamilySpec::Matchings, FamilySpec::LinearForests]
            .iter()
            .map(|f| f_exact_tiny(n, g, f, ForcingOptions::default()).unwrap().f)
            .collect();
        assert!(values.windows(2).all(|w| w[0] >= w[1]), "{values:?}");
    }
}

/// A `(c-1)`-partite Turán graph has chromatic number below every deck
/// member's, so the deck's extremal number is at least `ex(n, K_c)`.
#[test]
fn deck_extremal_number_dominates_clique_bound() {
    let cases = [
        (GraphSpec::Complete(5), FamilySpec::Matchings),
        (GraphSpec::Complete(4), FamilySpec::SingleEdge),
        (GraphSpec::Wheel(5), FamilySpec::Matchings),
        (GraphSpec::Cycle(5), FamilySpec::SingleEdge),
    ];
    for (spec, f) in cases {
        let g = named_graph(&spec).unwrap();
        let c = chi_f(&g, f);
        for n in g.n()..=7 {
            let lb = lb_coloring(n, &g, &f, &mut Budget::default()).unwrap();
            assert!(lb.certified);
            assert!(lb.ex.value >= turan_number(n, c).unwrap().value, "{spec:?} at n = {n}");
            assert_eq!(lb.certified_bound(), lb.ex.value + 2);
        }
    }
}

#[test]
fn certificates_survive_serialization() {
    let g = named_graph(&GraphSpec::Complete(4)).unwrap();
    let lb = lb_coloring(6, &g, &FamilySpec::Matchings, &mut Budget::default()).unwrap();
    let back = EdgeColoring::parse(&lb.coloring.to_text()).unwrap();
    assert_eq!(back, lb.coloring);
    assert!(
        find_f_colored_copy(&back, &g, &FamilySpec::Matchings, &mut Budget::default())
            .unwrap()
            .is_none()
    );

    let rainbow = EdgeColoring::rainbow(6).unwrap();
    let cert = find_f_colored_copy(&rainbow, &g, &FamilySpec::Matchings, &mut Budget::default())
        .unwrap()
        .unwrap();
    assert!(cert.verify(&rainbow, &g, &FamilySpec::Matchings).unwrap());

    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let d = PartedDigraph::random(3, 7, 2, &mut rng).unwrap();
    let d2 = PartedDigraph::parse(&d.to_text()).unwrap();
    let t = itl_transversal(&d2).unwrap();
    assert!(t.verify(&d));

    let r = reduced_chromatic(
        &named_graph(&GraphSpec::Petersen).unwrap(),
        &FamilySpec::Forests,
        Mode::Exact,
        &mut Budget::default(),
    )
    .unwrap();
    assert!(r
        .verify(&named_graph(&GraphSpec::Petersen).unwrap(), &FamilySpec::Forests)
        .unwrap());
}
