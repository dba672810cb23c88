use crate::graph::{Graph, Vertex};
use std::collections::VecDeque;

/// Unit-capacity flow network on the vertex-split graph: vertex `v` becomes
/// `2v -> 2v+1` with capacity 1, each edge `uv` becomes `2u+1 -> 2v` and
/// `2v+1 -> 2u` with unbounded capacity.
struct SplitNetwork {
    size: usize,
    cap: Vec<i32>,
}

const UNBOUNDED: i32 = i32::MAX / 4;

impl SplitNetwork {
    fn new(g: &Graph) -> Self {
        let size = 2 * g.n();
        SplitNetwork { size, cap: vec![0; size * size] }
    }

    fn reset(&mut self, g: &Graph, s: Vertex, t: Vertex) {
        self.cap.fill(0);
        let size = self.size;
        for v in 0..g.n() {
            let c = if v == s || v == t { UNBOUNDED } else { 1 };
            self.cap[(2 * v) * size + 2 * v + 1] = c;
        }
        for (u, v) in g.edges() {
            self.cap[(2 * u + 1) * size + 2 * v] = UNBOUNDED;
            self.cap[(2 * v + 1) * size + 2 * u] = UNBOUNDED;
        }
    }

    /// Augment along shortest paths until `limit` units flow or none remain.
    fn max_flow(&mut self, source: usize, sink: usize, limit: usize) -> usize {
        let size = self.size;
        let mut flow = 0;
        let mut prev = vec![usize::MAX; size];
        while flow < limit {
            prev.fill(usize::MAX);
            prev[source] = source;
            let mut queue = VecDeque::from([source]);
            while let Some(u) = queue.pop_front() {
                if u == sink {
                    break;
                }
                for w in 0..size {
                    if prev[w] == usize::MAX && self.cap[u * size + w] > 0 {
                        prev[w] = u;
                        queue.push_back(w);
                    }
                }
            }
            if prev[sink] == usize::MAX {
                break;
            }
            let mut w = sink;
            while w != source {
                let u = prev[w];
                self.cap[u * size + w] -= 1;
                self.cap[w * size + u] += 1;
                w = u;
            }
            flow += 1;
        }
        flow
    }
}

/// Maximum number of internally vertex-disjoint `s`–`t` paths for
/// non-adjacent `s != t`, capped at `limit`.
pub fn local_connectivity(g: &Graph, s: Vertex, t: Vertex, limit: usize) -> usize {
    debug_assert!(s != t && !g.has_edge(s, t));
    let mut net = SplitNetwork::new(g);
    net.reset(g, s, t);
    net.max_flow(2 * s + 1, 2 * t, limit)
}

/// Vertex connectivity `κ`: `n - 1` for complete graphs, 0 when
/// disconnected, otherwise the least number of internally disjoint paths
/// over non-adjacent pairs.
pub fn connectivity(g: &Graph) -> usize {
    let n = g.n();
    if g.is_complete() {
        return n - 1;
    }
    if !g.is_connected() {
        return 0;
    }
    let mut best = (0..n).map(|v| g.degree(v)).min().expect("n >= 1");
    let mut net = SplitNetwork::new(g);
    // Some vertex among the first κ + 1 lies outside a minimum separator.
    let mut i = 0;
    while i <= best && i < n {
        for j in 0..n {
            if j == i || g.has_edge(i, j) {
                continue;
            }
            net.reset(g, i, j);
            best = best.min(net.max_flow(2 * i + 1, 2 * j, best));
        }
        i += 1;
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_families() {
        assert_eq!(connectivity(&Graph::cycle_graph(5)), 2);
        assert_eq!(connectivity(&Graph::complete(4)), 3);
        assert_eq!(connectivity(&Graph::complete(1)), 0);
        assert_eq!(connectivity(&Graph::petersen()), 3);
        assert_eq!(connectivity(&Graph::path_graph(4)), 1);
        assert_eq!(connectivity(&Graph::star(4)), 1);
        assert_eq!(connectivity(&Graph::complete_bipartite(2, 3)), 2);
        assert_eq!(connectivity(&Graph::new(3).unwrap()), 0);
    }

    #[test]
    fn local_counts() {
        let p = Graph::petersen();
        // vertices 0 and 1 share element 1 of their pairs, so they are non-adjacent
        assert!(!p.has_edge(0, 1));
        assert_eq!(local_connectivity(&p, 0, 1, usize::MAX), 3);
        let k23 = Graph::complete_bipartite(2, 3);
        assert_eq!(local_connectivity(&k23, 0, 1, usize::MAX), 3);
        assert_eq!(local_connectivity(&k23, 2, 3, usize::MAX), 2);
    }
}
