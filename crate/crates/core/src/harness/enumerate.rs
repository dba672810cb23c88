//! Connected graphs up to isomorphism by canonical augmentation: a child
//! `G = P + v` is kept only when `v` lies in the orbit of the canonically
//! chosen deletion vertex of `G`, a non-cut vertex of least degree.

use crate::graph::{bit, canonical_form, full_mask, mask_iter, Graph};
use rayon::prelude::*;
use std::collections::HashSet;
use thiserror::Error;

/// Largest order the internal enumerator accepts.
pub const ENUMERATION_SCOPE: usize = 10;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EnumerationOptions {
    /// Only graphs with every degree at most this.
    pub max_degree: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("order {n} is outside 1..={ENUMERATION_SCOPE}")]
    OutOfScope { n: usize },
}

fn check(n: usize) -> Result<(), EnumerationError> {
    if n == 0 || n > ENUMERATION_SCOPE {
        return Err(EnumerationError::OutOfScope { n });
    }
    Ok(())
}

fn is_cut_vertex(g: &Graph, u: usize) -> bool {
    let rest = full_mask(g.n()) & !bit(u);
    if rest == 0 {
        return false;
    }
    g.reach_within(rest & rest.wrapping_neg(), rest) != rest
}

/// Canonical children of a canonical parent, sorted.
fn children(parent: &Graph, opts: EnumerationOptions) -> Vec<Graph> {
    let m = parent.n();
    let cap = opts.max_degree.unwrap_or(usize::MAX);
    let open = (0..m).filter(|&u| parent.degree(u) < cap).fold(0u64, |acc, u| acc | bit(u));
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for s in 1u64..(1 << m) {
        let k = s.count_ones() as usize;
        if s & !open != 0 || k > cap {
            continue;
        }
        let mut rows = parent.rows().to_vec();
        for u in mask_iter(s) {
            rows[u] |= bit(m);
        }
        rows.push(s);
        let g = Graph::from_rows(rows);
        // cheap rejection: a non-cut vertex of smaller degree must be deleted instead
        if (0..m).any(|u| g.degree(u) < k && !is_cut_vertex(&g, u)) {
            continue;
        }
        let cf = canonical_form(&g);
        let pos = cf.positions();
        let chosen = (0..=m)
            .filter(|&u| g.degree(u) == k && !is_cut_vertex(&g, u))
            .max_by_key(|&u| pos[u])
            .expect("the new vertex qualifies");
        let orbits = cf.orbits();
        if orbits[chosen] != orbits[m] {
            continue;
        }
        if seen.insert(cf.graph.clone()) {
            out.push(cf.graph);
        }
    }
    out
}

fn sort(graphs: &mut [Graph]) {
    graphs.par_sort_unstable_by(|a, b| a.rows().cmp(b.rows()));
}

/// Every connected graph on `n` vertices (within the degree cap), one
/// canonical representative per isomorphism class, in a fixed order.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>, EnumerationError> {
    enumerate_connected_graphs_with(n, EnumerationOptions::default())
}

pub fn enumerate_connected_graphs_with(n: usize, opts: EnumerationOptions) -> Result<Vec<Graph>, EnumerationError> {
    check(n)?;
    let mut level = vec![Graph::new(1).expect("one vertex")];
    for _ in 1..n {
        level = next_level(&level, opts);
    }
    Ok(level)
}

fn next_level(level: &[Graph], opts: EnumerationOptions) -> Vec<Graph> {
    let mut next: Vec<Graph> = level.par_iter().flat_map_iter(|p| children(p, opts)).collect();
    sort(&mut next);
    next
}

/// Calls `f` on every connected graph on `n` vertices without collecting the
/// last level, in parallel and in no particular order.
pub fn par_for_each_connected_graph<F>(n: usize, opts: EnumerationOptions, f: F) -> Result<(), EnumerationError>
where
    F: Fn(Graph) + Sync + Send,
{
    check(n)?;
    if n == 1 {
        f(Graph::new(1).expect("one vertex"));
        return Ok(());
    }
    let parents = enumerate_connected_graphs_with(n - 1, opts)?;
    parents.par_iter().for_each(|p| children(p, opts).into_iter().for_each(&f));
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_isomorphic;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=7).map(|n| enumerate_connected_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112, 853]);
    }

    #[test]
    fn representatives_are_canonical_connected_and_distinct() {
        for n in 1..=6 {
            let gs = enumerate_connected_graphs(n).unwrap();
            for (i, g) in gs.iter().enumerate() {
                assert!(g.is_connected());
                assert_eq!(&canonical_form(g).graph, g);
                for h in &gs[i + 1..] {
                    assert!(!is_isomorphic(g, h).unwrap());
                }
            }
        }
    }

    #[test]
    fn degree_cap() {
        let gs = enumerate_connected_graphs_with(6, EnumerationOptions { max_degree: Some(2) }).unwrap();
        // the path and the cycle
        assert_eq!(gs.len(), 2);
        let cubic = enumerate_connected_graphs_with(8, EnumerationOptions { max_degree: Some(3) })
            .unwrap()
            .into_iter()
            .filter(|g| g.is_regular(3))
            .count();
        assert_eq!(cubic, 5);
    }

    #[test]
    fn streaming_matches_collection() {
        let count = std::sync::atomic::AtomicUsize::new(0);
        par_for_each_connected_graph(6, EnumerationOptions::default(), |_| {
            count.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
        })
        .unwrap();
        assert_eq!(count.into_inner(), 112);
        assert_eq!(enumerate_connected_graphs(0), Err(EnumerationError::OutOfScope { n: 0 }));
        assert_eq!(enumerate_connected_graphs(11), Err(EnumerationError::OutOfScope { n: 11 }));
    }
}
