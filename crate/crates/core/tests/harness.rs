mod common;

use std::collections::HashSet;
use tough_cycles::graph::{canonical_form, write_graph6};
use tough_cycles::harness::{
    enumerate_connected_graphs, enumerate_connected_graphs_with, sweep, verify_theorem1, EnumerationOptions, Status,
    SweepConfig, SweepSource, TheoremId,
};
use tough_cycles::invariants::{connectivity, toughness_exhaustive};
use tough_cycles::ExactRational;

#[test]
fn enumerator_counts_and_uniqueness() {
    let expected = [1, 1, 2, 6, 21, 112, 853, 11117];
    for (i, &count) in expected.iter().enumerate() {
        let gs = enumerate_connected_graphs(i + 1).unwrap();
        assert_eq!(gs.len(), count, "n = {}", i + 1);
        let forms: HashSet<String> = gs.iter().map(|g| write_graph6(&canonical_form(g).graph)).collect();
        assert_eq!(forms.len(), count);
    }
}

#[test]
fn cubic_counts() {
    let counts: Vec<usize> = [4, 6, 8, 10]
        .iter()
        .map(|&n| {
            enumerate_connected_graphs_with(n, EnumerationOptions { max_degree: Some(3) })
                .unwrap()
                .into_iter()
                .filter(|g| g.is_regular(3))
                .count()
        })
        .collect();
    assert_eq!(counts, vec![1, 2, 5, 19]);
}

#[test]
fn sweep_ignores_worker_count() {
    let run = |workers| {
        let mut cfg = SweepConfig::new(SweepSource::internal(7), TheoremId::ALL.to_vec());
        cfg.lemmas = true;
        cfg.workers = workers;
        sweep(cfg).unwrap()
    };
    let (one, eight) = (run(1), run(8));
    assert_eq!(one.fingerprint(), eight.fingerprint());
    assert_eq!(serde_json::to_string(&one.violations).unwrap(), serde_json::to_string(&eight.violations).unwrap());
    assert_eq!(one.counts, eight.counts);
    assert_eq!(one.to_csv(), eight.to_csv());
}

#[test]
fn connectivity_prefilter_only_skips_graphs_of_toughness_at_most_one() {
    let mut rng = common::rng(99);
    let mut skipped = 0;
    while skipped < 1000 {
        let n = 5 + skipped % 8;
        let g = common::random_connected(&mut rng, n, 0.35);
        if g.is_complete() || connectivity(&g) >= 3 {
            continue;
        }
        skipped += 1;
        assert!(toughness_exhaustive(&g) <= ExactRational::ONE, "{g:?}");
        assert_eq!(verify_theorem1(&g).status, Status::Vacuous);
    }
}

#[test]
fn malformed_stream_records_are_counted() {
    let text = format!("{}\nbad line\n{}\n~\n\u{7f}x\n", "C~", write_graph6(&tough_cycles::Graph::petersen()));
    let src = SweepSource::from_reader(text.as_bytes(), "mixed").unwrap();
    let r = sweep(SweepConfig::new(src, vec![TheoremId::T1])).unwrap();
    assert_eq!(r.processed, 2);
    assert_eq!(r.rejected.len(), 3);
    assert_eq!(r.rejected.iter().map(|x| x.line).collect::<Vec<_>>(), vec![2, 4, 5]);
    let t = r.totals(TheoremId::T1);
    assert_eq!((t.seen, t.holds, t.exceptions), (2, 1, 1));
}

#[test]
fn counts_add_up() {
    let r = sweep(SweepConfig::new(SweepSource::internal(7), TheoremId::ALL.to_vec())).unwrap();
    for row in &r.counts {
        let c = &row.counts;
        assert_eq!(c.seen, c.vacuous + c.holds + c.exceptions + c.violations);
    }
    assert_eq!(r.violations.len(), r.counts.iter().map(|c| c.counts.violations).sum::<usize>());
    let t1 = r.totals(TheoremId::T1);
    assert!(t1.tau_exactly_one > 0);
    assert_eq!(t1.seen, r.processed);
}
