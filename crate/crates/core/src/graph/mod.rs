//! Simple undirected graphs on dense vertex ids with bitset adjacency.

mod edgelist;
mod graph6;
mod iso;
mod walk;

pub use edgelist::{parse_edge_list, EdgeListError};
pub use graph6::{parse_graph6, write_graph6, Graph6Error};
pub use iso::{canonical_form, is_isomorphic, CanonicalForm, ISO_SCOPE};
pub use walk::{cycle_step, Cycle, Path, WalkError};

use thiserror::Error;

/// Largest supported vertex count. Adjacency rows are single `u64` words.
pub const MAX_VERTICES: usize = 64;

/// Vertex id, dense in `0..n`.
pub type Vertex = usize;

/// A set of vertices of one graph, stored as a bitmask.
pub type VertexMask = u64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex count {0} is outside 1..={MAX_VERTICES}")]
    BadOrder(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("deleting every vertex leaves no graph")]
    EmptyResult,
    #[error("graph on {n} vertices exceeds the supported scope of {cap}")]
    OutOfScope { n: usize, cap: usize },
}

/// Simple undirected graph: no loops, no multi-edges, `1 <= n <= 64`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

/// Induced subgraph produced by vertex deletion, with the map from new ids to
/// the ids of the graph it was cut from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    pub to_parent: Vec<Vertex>,
}

impl InducedSubgraph {
    pub fn parent_vertex(&self, v: Vertex) -> Vertex {
        self.to_parent[v]
    }
}

#[inline]
pub(crate) fn bit(v: Vertex) -> u64 {
    1u64 << v
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterate the set bits of a mask in ascending order.
pub(crate) fn mask_iter(mut mask: u64) -> impl Iterator<Item = Vertex> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

pub(crate) fn mask_of(vertices: &[Vertex]) -> u64 {
    vertices.iter().fold(0, |m, &v| m | bit(v))
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::BadOrder(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Build from adjacency rows; rows must already be symmetric and loop-free.
    pub(crate) fn from_rows(adj: Vec<u64>) -> Self {
        debug_assert!(!adj.is_empty() && adj.len() <= MAX_VERTICES);
        let g = Graph { n: adj.len(), adj };
        debug_assert!(g.is_consistent());
        g
    }

    fn is_consistent(&self) -> bool {
        let full = full_mask(self.n);
        (0..self.n).all(|v| {
            self.adj[v] & !full == 0
                && self.adj[v] & bit(v) == 0
                && mask_iter(self.adj[v]).all(|u| self.adj[u] & bit(v) != 0)
        })
    }

    /// Adding an edge that already exists is a no-op.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: Vertex, v: Vertex) {
        if u < self.n && v < self.n {
            self.adj[u] &= !bit(v);
            self.adj[v] &= !bit(u);
        }
    }

    pub(crate) fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn neighbor_mask(&self, v: Vertex) -> VertexMask {
        self.adj[v]
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        mask_iter(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.n).flat_map(move |u| mask_iter(self.adj[u] >> u >> 1).map(move |k| (u, u + 1 + k)))
    }

    pub fn vertex_mask(&self) -> VertexMask {
        full_mask(self.n)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * (self.n - 1) / 2
    }

    pub fn is_regular(&self, d: usize) -> bool {
        (0..self.n).all(|v| self.degree(v) == d)
    }

    pub(crate) fn rows(&self) -> &[u64] {
        &self.adj
    }

    /// The graph with vertex `v` renamed to `perm[v]`. `perm` must be a
    /// permutation of `0..n`.
    pub fn relabel(&self, perm: &[Vertex]) -> Graph {
        assert_eq!(perm.len(), self.n, "relabel: permutation length");
        let mut adj = vec![0u64; self.n];
        for (u, row) in self.adj.iter().enumerate() {
            adj[perm[u]] = mask_iter(*row).fold(0, |m, v| m | bit(perm[v]));
        }
        Graph::from_rows(adj)
    }

    /// Induced subgraph on the vertices of `keep`, relabelled in ascending order.
    pub fn induced(&self, keep: VertexMask) -> Result<InducedSubgraph, GraphError> {
        let keep = keep & self.vertex_mask();
        if keep == 0 {
            return Err(GraphError::EmptyResult);
        }
        let to_parent: Vec<Vertex> = mask_iter(keep).collect();
        let mut index = [usize::MAX; MAX_VERTICES];
        for (i, &v) in to_parent.iter().enumerate() {
            index[v] = i;
        }
        let adj = to_parent
            .iter()
            .map(|&v| mask_iter(self.adj[v] & keep).fold(0, |m, u| m | bit(index[u])))
            .collect();
        Ok(InducedSubgraph { graph: Graph::from_rows(adj), to_parent })
    }

    /// `G \ S`: the induced subgraph on `V(G) \ S`.
    pub fn delete_vertices(&self, s: &[Vertex]) -> Result<InducedSubgraph, GraphError> {
        for &v in s {
            self.check_vertex(v)?;
        }
        self.induced(self.vertex_mask() & !mask_of(s))
    }

    /// Number of connected components of the subgraph induced by `within`.
    pub fn components_in(&self, within: VertexMask) -> usize {
        let mut rest = within;
        let mut count = 0;
        while rest != 0 {
            let seed = rest & rest.wrapping_neg();
            rest &= !self.reach_within(seed, within);
            count += 1;
        }
        count
    }

    /// Vertices reachable from `from` inside the induced subgraph on `within`.
    #[inline]
    pub(crate) fn reach_within(&self, from: VertexMask, within: VertexMask) -> VertexMask {
        let mut seen = from & within;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in mask_iter(frontier) {
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// `s(G)`: number of connected components.
    pub fn component_count(&self) -> usize {
        self.components_in(self.vertex_mask())
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// True when the subgraph induced by `within` has no edges.
    pub fn is_edgeless_in(&self, within: VertexMask) -> bool {
        mask_iter(within).all(|v| self.adj[v] & within == 0)
    }

    pub fn complete(n: usize) -> Graph {
        let full = full_mask(n);
        Graph::from_rows((0..n).map(|v| full & !bit(v)).collect())
    }

    pub fn cycle_graph(n: usize) -> Graph {
        assert!(n >= 3);
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).expect("cycle graph")
    }

    pub fn path_graph(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("path graph")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let edges: Vec<_> = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect();
        Graph::from_edges(a + b, &edges).expect("complete bipartite graph")
    }

    pub fn star(leaves: usize) -> Graph {
        Graph::complete_bipartite(1, leaves)
    }

    /// The Petersen graph as the Kneser graph K(5, 2): vertices are the
    /// 2-subsets of a 5-set in lexicographic order, adjacent when disjoint.
    pub fn petersen() -> Graph {
        let pairs: Vec<(usize, usize)> =
            (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
        let mut g = Graph::new(pairs.len()).expect("10 vertices");
        for (i, &(a, b)) in pairs.iter().enumerate() {
            for (j, &(c, d)) in pairs.iter().enumerate().skip(i + 1) {
                if a != c && a != d && b != c && b != d {
                    g.add_edge(i, j).expect("valid ids");
                }
            }
        }
        g
    }

    /// Length of a shortest cycle, or `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        self.shortest_cycle().map(|c| c.len())
    }

    /// A shortest cycle, or `None` for forests.
    pub fn shortest_cycle(&self) -> Option<Cycle> {
        let mut best: Option<Vec<Vertex>> = None;
        for s in 0..self.n {
            let mut dist = [usize::MAX; MAX_VERTICES];
            let mut parent = [usize::MAX; MAX_VERTICES];
            let mut queue = std::collections::VecDeque::from([s]);
            dist[s] = 0;
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v && best.as_ref().map_or(true, |b| dist[u] + dist[v] + 1 < b.len()) {
                        let trace = |mut w: Vertex| {
                            let mut out = vec![w];
                            while w != s {
                                w = parent[w];
                                out.push(w);
                            }
                            out
                        };
                        let (mut left, right) = (trace(u), trace(v));
                        left.reverse();
                        left.extend(&right[..right.len() - 1]);
                        // branches meeting before the root do not close a simple cycle
                        if mask_of(&left).count_ones() as usize == left.len() {
                            best = Some(left);
                        }
                    }
                }
            }
        }
        best.map(Cycle::from_vertices_unchecked)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph({})", write_graph6(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn petersen_shape() {
        let p = Graph::petersen();
        assert_eq!(p.n(), 10);
        assert_eq!(p.edge_count(), 15);
        assert!(p.is_regular(3));
        assert_eq!(p.girth(), Some(5));
        let c = p.shortest_cycle().unwrap();
        c.validate(&p).unwrap();
        assert_eq!(c.len(), 5);
        assert_eq!(Graph::path_graph(5).shortest_cycle(), None);
        assert_eq!(Graph::complete(4).girth(), Some(3));
    }

    #[test]
    fn delete_from_complete_and_cycle() {
        let k3 = Graph::complete(4).delete_vertices(&[0]).unwrap();
        assert_eq!(k3.graph, Graph::complete(3));
        assert_eq!(k3.to_parent, vec![1, 2, 3]);

        let p4 = Graph::cycle_graph(5).delete_vertices(&[2]).unwrap();
        assert_eq!(p4.graph.edge_count(), 3);
        assert!(p4.graph.is_connected());
        assert_eq!(p4.graph.degree_sequence(), vec![1, 1, 2, 2]);
    }

    #[test]
    fn delete_nothing_is_identity() {
        let p = Graph::petersen();
        assert_eq!(p.delete_vertices(&[]).unwrap().graph, p);
    }

    #[test]
    fn delete_rejects_foreign_vertices() {
        let err = Graph::complete(4).delete_vertices(&[7]).unwrap_err();
        assert_eq!(err, GraphError::VertexOutOfRange { vertex: 7, n: 4 });
        assert_eq!(Graph::complete(2).delete_vertices(&[0, 1]).unwrap_err(), GraphError::EmptyResult);
    }

    #[test]
    fn component_counts() {
        assert_eq!(Graph::complete(4).component_count(), 1);
        assert_eq!(Graph::new(5).unwrap().component_count(), 5);
        // Petersen minus N(v) isolates v from a 6-cycle; minus N[v] the
        // 6-cycle stays whole.
        let p = Graph::petersen();
        let open: Vec<Vertex> = p.neighbors(0).collect();
        assert_eq!(p.delete_vertices(&open).unwrap().graph.component_count(), 2);
        let closed: Vec<Vertex> = std::iter::once(0).chain(p.neighbors(0)).collect();
        let rest = p.delete_vertices(&closed).unwrap();
        assert_eq!(rest.graph.n(), 6);
        assert!(rest.graph.is_regular(2));
        assert_eq!(rest.graph.component_count(), 1);
    }

    #[test]
    fn rejects_loops_and_bad_orders() {
        assert_eq!(Graph::new(0).unwrap_err(), GraphError::BadOrder(0));
        assert_eq!(Graph::new(65).unwrap_err(), GraphError::BadOrder(65));
        assert!(Graph::new(64).is_ok());
        let mut g = Graph::new(3).unwrap();
        assert_eq!(g.add_edge(1, 1), Err(GraphError::SelfLoop(1)));
        g.add_edge(0, 1).unwrap();
        g.add_edge(1, 0).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn edges_in_lex_order() {
        let g = Graph::from_edges(4, &[(3, 0), (1, 2), (0, 1)]).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 3), (1, 2)]);
    }
}
