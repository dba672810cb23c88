mod common;

use proptest::prelude::*;
use tough_cycles::graph::Graph;
use tough_cycles::harness::enumerate_connected_graphs;
use tough_cycles::invariants::{
    circumference, circumference_dp, connectivity, min_degree, toughness, toughness_exhaustive, InvariantReport,
};
use tough_cycles::ExactRational;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (3..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::new(n).unwrap();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        g.add_edge(u, v).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn arb_relabelled(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    arb_graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn invariants_ignore_labels((g, perm) in arb_relabelled(9)) {
        let h = g.relabel(&perm);
        let (a, b) = (InvariantReport::compute(&g), InvariantReport::compute(&h));
        prop_assert_eq!((a.delta, a.kappa, a.circumference, a.toughness), (b.delta, b.kappa, b.circumference, b.toughness));
    }

    #[test]
    fn connectivity_at_most_min_degree(g in arb_graph(10)) {
        prop_assert!(connectivity(&g) <= min_degree(&g));
    }

    #[test]
    fn more_than_one_tough_means_three_connected(g in arb_graph(9)) {
        let t = toughness(&g).value;
        if t > ExactRational::ONE && !g.is_complete() {
            prop_assert!(connectivity(&g) >= 3);
        }
        if !g.is_complete() {
            // τ ≤ κ / 2
            prop_assert!(t <= ExactRational::new(connectivity(&g) as u64, 2).unwrap());
        }
    }

    #[test]
    fn toughness_witness_attains_the_value(g in arb_graph(9)) {
        let t = toughness(&g);
        if let Some(cut) = t.witness {
            if !cut.is_empty() {
                let rest = g.delete_vertices(&cut).unwrap().graph;
                let k = rest.component_count() as u64;
                prop_assert!(k >= 2);
                prop_assert_eq!(ExactRational::new(cut.len() as u64, k).unwrap(), t.value);
            }
        }
    }

    #[test]
    fn branch_and_bound_matches_dp(g in arb_graph(11)) {
        let c = circumference(&g);
        prop_assert_eq!(c.length, circumference_dp(&g));
        if c.length >= 3 {
            c.witness.validate(&g).unwrap();
            prop_assert_eq!(c.witness.len(), c.length);
        }
    }
}

#[test]
fn toughness_matches_enumeration_on_small_corpus() {
    for n in 1..=6 {
        for g in enumerate_connected_graphs(n).unwrap() {
            assert_eq!(toughness(&g).value, toughness_exhaustive(&g), "{g:?}");
        }
    }
}

#[test]
fn random_sparse_circumference() {
    let mut rng = common::rng(7);
    for i in 0..60 {
        let n = 8 + i % 7;
        let g = common::random_connected(&mut rng, n, 0.3);
        assert_eq!(circumference(&g).length, circumference_dp(&g), "{g:?}");
    }
}

#[test]
fn cycles_are_exactly_one_tough() {
    for n in 4..=10 {
        assert_eq!(toughness(&Graph::cycle_graph(n)).value, ExactRational::ONE);
    }
    assert_eq!(toughness(&Graph::complete_bipartite(2, 3)).value, ExactRational::new(2, 3).unwrap());
    assert_eq!(toughness(&Graph::petersen()).value, ExactRational::new(4, 3).unwrap());
}
