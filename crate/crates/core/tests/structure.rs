mod common;

use tough_cycles::extension::{all_candidates, greedy_extend_with, GreedyConfig};
use tough_cycles::graph::{Cycle, Graph, Path};
use tough_cycles::invariants::{circumference, enumerate_longest_cycles, longest_path_outside, InvariantReport};
use tough_cycles::structure::{
    check_claims_1_2, check_lemma1, check_lemma2, check_lemma3, decompose, run_suite, LemmaId, StructureError, SuiteConfig,
};

/// C10 with the edge 10-11 outside; 10 sees {0, 2} and 11 sees {5, 7}.
fn split_attachments() -> (Graph, Cycle, Path) {
    let mut edges: Vec<(usize, usize)> = (0..10).map(|i| (i, (i + 1) % 10)).collect();
    edges.extend([(10, 11), (10, 0), (10, 2), (11, 5), (11, 7)]);
    let g = Graph::from_edges(12, &edges).unwrap();
    let c = Cycle::new(&g, (0..10).collect()).unwrap();
    let p = Path::new(&g, vec![10, 11]).unwrap();
    (g, c, p)
}

#[test]
fn unequal_ends_bound_on_an_extreme_pair() {
    let (g, c, p) = split_attachments();
    assert_eq!(circumference(&g).length, 10);
    let d = decompose(&g, &c, &p).unwrap();
    assert_eq!((d.p_bar, d.sigma1, d.sigma2, d.shared), (1, 2, 2, 0));
    let v = check_lemma1(&g, &c, &p).unwrap();
    assert!(v.hypothesis_met && v.holds);
    // 3δ + max(σ1, σ2) - 1 with δ = 2
    assert_eq!((v.bound_required, v.bound_observed), (7, 10));
}

#[test]
fn strict_checks_reject_non_extreme_pairs() {
    let g = Graph::petersen();
    let c = g.shortest_cycle().unwrap();
    let p = longest_path_outside(&g, &c).unwrap();
    assert!(matches!(check_lemma1(&g, &c, &p), Err(StructureError::CycleNotLongest { found: 5, longest: 9 })));
    let best = circumference(&g).witness;
    let full = longest_path_outside(&g, &best).unwrap();
    let (h, ch, _) = split_attachments();
    let lone = Path::new(&h, vec![10]).unwrap();
    assert!(matches!(check_lemma2(&h, &ch, &lone), Err(StructureError::PathNotLongest { found: 0, longest: 1 })));
    let d = decompose(&g, &best, &full).unwrap();
    assert!(check_claims_1_2(&g, &d).unwrap().iter().all(|v| v.holds));
}

#[test]
fn petersen_pair_sums_are_tight() {
    let g = Graph::petersen();
    for c in enumerate_longest_cycles(&g, 100).items {
        let p = longest_path_outside(&g, &c).unwrap();
        let vs = check_lemma2(&g, &c, &p).unwrap();
        let tight: Vec<_> = vs.iter().filter(|v| v.lemma == LemmaId::EdgeCountSum).collect();
        assert_eq!(tight.len(), 3);
        assert!(tight.iter().all(|v| v.bound_required == 6 && v.bound_observed == 6));
    }
    assert!(check_lemma3(&g).holds);
}

#[test]
fn suite_on_random_larger_graphs() {
    let mut rng = common::rng(11);
    for i in 0..40 {
        let n = 9 + i % 3;
        let g = common::random_connected(&mut rng, n, 0.3);
        let r = InvariantReport::compute(&g);
        let out = run_suite(&g, &r, SuiteConfig { cycle_cap: 200, path_cap: 50 });
        assert!(out.verdicts.iter().all(|v| v.holds), "{g:?}");
    }
}

#[test]
fn rewiring_accounting_on_random_graphs() {
    let mut rng = common::rng(23);
    let mut checked = 0;
    for i in 0..150 {
        let n = 8 + i % 5;
        let g = common::random_connected(&mut rng, n, 0.35);
        let c_max = circumference(&g).length;
        let Some(start) = g.shortest_cycle() else { continue };
        for c in [start, circumference(&g).witness] {
            let Some(p) = longest_path_outside(&g, &c) else { continue };
            for (c, p) in [(c.clone(), p.clone()), (c.reversed(), p.reversed())] {
                let Ok(d) = decompose(&g, &c, &p) else { continue };
                for cand in all_candidates(&g, &d, n).unwrap() {
                    cand.new_cycle.validate(&g).unwrap();
                    assert!(cand.accounting_matches(), "{cand:?}");
                    assert!(cand.measured_length() <= c_max);
                    if c.len() == c_max {
                        assert!(cand.measured_length() <= c.len());
                    }
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 100, "{checked}");
}

#[test]
fn greedy_is_monotone_and_bounded() {
    let mut rng = common::rng(5);
    for i in 0..80 {
        let n = 6 + i % 7;
        let g = common::random_connected(&mut rng, n, 0.4);
        let Some(start) = g.shortest_cycle() else { continue };
        let out = greedy_extend_with(&g, &start, GreedyConfig::default()).unwrap();
        assert!(out.lengths.windows(2).all(|w| w[0] < w[1]));
        assert!(out.iterations <= n);
        assert!(out.cycle.len() <= circumference(&g).length);
        out.cycle.validate(&g).unwrap();
    }
}
