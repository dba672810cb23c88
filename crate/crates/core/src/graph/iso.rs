//! Canonical labelling by individualization and equitable refinement, with
//! automorphism pruning. Intended for graphs of at most a dozen or so vertices.

use super::{bit, mask_iter, Graph, GraphError, Vertex};
use std::cmp::Ordering;

/// Largest order accepted by [`is_isomorphic`].
pub const ISO_SCOPE: usize = 12;

/// Result of canonical labelling.
#[derive(Debug, Clone)]
pub struct CanonicalForm {
    /// The relabelled graph; isomorphic inputs give equal graphs here.
    pub graph: Graph,
    /// `labeling[i]` is the input vertex that became vertex `i`.
    pub labeling: Vec<Vertex>,
    /// Automorphisms met during the search, as maps on input vertices.
    /// Together they generate the automorphism group.
    pub generators: Vec<Vec<Vertex>>,
}

impl CanonicalForm {
    /// Canonical position of every input vertex (inverse of `labeling`).
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.labeling.len()];
        for (i, &v) in self.labeling.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }

    /// Orbit representative (least vertex of the orbit) for every vertex.
    pub fn orbits(&self) -> Vec<Vertex> {
        let mut uf = UnionFind::new(self.labeling.len());
        for gamma in &self.generators {
            for (v, &w) in gamma.iter().enumerate() {
                uf.union(v, w);
            }
        }
        (0..self.labeling.len()).map(|v| uf.min_rep(v)).collect()
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // keep the smaller id as root so roots are orbit minima
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }

    fn min_rep(&mut self, x: usize) -> usize {
        self.find(x)
    }
}

/// Split every cell by the number of neighbours in each splitter cell until the
/// ordered partition is equitable. Cell order depends only on the partition
/// structure, so the result commutes with relabelling.
fn refine(g: &Graph, cells: &mut Vec<u64>) {
    let n = g.n();
    let mut scratch: Vec<(u32, Vertex)> = Vec::with_capacity(n);
    let mut si = 0;
    while si < cells.len() && cells.len() < n {
        let splitter = cells[si];
        let mut out: Vec<u64> = Vec::with_capacity(n);
        let mut changed = false;
        for &cell in cells.iter() {
            if cell.count_ones() == 1 {
                out.push(cell);
                continue;
            }
            scratch.clear();
            scratch.extend(mask_iter(cell).map(|v| ((g.rows()[v] & splitter).count_ones(), v)));
            scratch.sort_unstable_by_key(|&(c, _)| c);
            let mut current = scratch[0].0;
            let mut mask = 0u64;
            for &(c, v) in &scratch {
                if c != current {
                    out.push(mask);
                    mask = 0;
                    current = c;
                    changed = true;
                }
                mask |= bit(v);
            }
            out.push(mask);
        }
        if changed {
            *cells = out;
            si = 0;
        } else {
            si += 1;
        }
    }
}

struct Leaf {
    rows: Vec<u64>,
    lab: Vec<Vertex>,
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    first_path: Vec<Vertex>,
    autos: Vec<Vec<Vertex>>,
}

impl<'a> Search<'a> {
    fn leaf_of(&self, cells: &[u64]) -> Leaf {
        let n = self.g.n();
        let lab: Vec<Vertex> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let mut pos = [0usize; super::MAX_VERTICES];
        for (i, &v) in lab.iter().enumerate() {
            pos[v] = i;
        }
        let rows = (0..n)
            .map(|i| mask_iter(self.g.rows()[lab[i]]).fold(0u64, |m, u| m | bit(pos[u])))
            .collect();
        Leaf { rows, lab }
    }

    fn automorphism(from: &[Vertex], to: &[Vertex]) -> Vec<Vertex> {
        let mut gamma = vec![0; from.len()];
        for (&a, &b) in from.iter().zip(to) {
            gamma[a] = b;
        }
        gamma
    }

    /// Returns the tree level to unwind to when this leaf proves the current
    /// subtree equivalent to one already explored.
    fn visit_leaf(&mut self, cells: &[u64], path: &[Vertex]) -> Option<usize> {
        let leaf = self.leaf_of(cells);
        let Some(first) = &self.first else {
            self.first_path = path.to_vec();
            self.best = Some(Leaf { rows: leaf.rows.clone(), lab: leaf.lab.clone() });
            self.first = Some(leaf);
            return None;
        };
        if leaf.rows == first.rows {
            self.autos.push(Self::automorphism(&first.lab, &leaf.lab));
            let common = path.iter().zip(&self.first_path).take_while(|(a, b)| a == b).count();
            return Some(common);
        }
        let best = self.best.as_ref().expect("best set with first");
        match leaf.rows.cmp(&best.rows) {
            Ordering::Greater => self.best = Some(leaf),
            Ordering::Equal => self.autos.push(Self::automorphism(&best.lab, &leaf.lab)),
            Ordering::Less => {}
        }
        None
    }

    /// Orbits of the group generated by the known automorphisms that fix every
    /// vertex of `path`.
    fn stabilizer_orbits(&self, path: &[Vertex]) -> UnionFind {
        let mut uf = UnionFind::new(self.g.n());
        for gamma in self.autos.iter().filter(|gamma| path.iter().all(|&v| gamma[v] == v)) {
            for (v, &w) in gamma.iter().enumerate() {
                uf.union(v, w);
            }
        }
        uf
    }

    fn dfs(&mut self, mut cells: Vec<u64>, path: &mut Vec<Vertex>) -> Option<usize> {
        refine(self.g, &mut cells);
        if cells.len() == self.g.n() {
            return self.visit_leaf(&cells, path);
        }
        let depth = path.len();
        let t = cells.iter().position(|c| c.count_ones() > 1).expect("non-discrete partition");
        let target = cells[t];
        let mut explored: Vec<Vertex> = Vec::new();
        let mut orbits: Option<(usize, UnionFind)> = None;
        for v in mask_iter(target) {
            if !explored.is_empty() && !self.autos.is_empty() {
                if orbits.as_ref().map_or(true, |(k, _)| *k != self.autos.len()) {
                    orbits = Some((self.autos.len(), self.stabilizer_orbits(path)));
                }
                let uf = &mut orbits.as_mut().expect("just set").1;
                let rv = uf.find(v);
                if explored.iter().any(|&u| uf.find(u) == rv) {
                    continue;
                }
            }
            explored.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..t]);
            child.push(bit(v));
            child.push(target & !bit(v));
            child.extend_from_slice(&cells[t + 1..]);
            path.push(v);
            let jump = self.dfs(child, path);
            path.pop();
            if let Some(level) = jump {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }
}

/// Canonical form of `g`: the lexicographically greatest adjacency matrix
/// over the leaves of the refinement search tree.
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_form_with_cells(g, vec![g.vertex_mask()])
}

/// Canonical form relative to an ordered initial colouring of the vertices.
fn canonical_form_with_cells(g: &Graph, cells: Vec<u64>) -> CanonicalForm {
    let mut search = Search { g, first: None, best: None, first_path: Vec::new(), autos: Vec::new() };
    search.dfs(cells, &mut Vec::new());
    let best = search.best.expect("search reaches a leaf");
    CanonicalForm { graph: Graph::from_rows(best.rows), labeling: best.lab, generators: search.autos }
}

/// Decide isomorphism for graphs with at most [`ISO_SCOPE`] vertices.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool, GraphError> {
    for x in [g, h] {
        if x.n() > ISO_SCOPE {
            return Err(GraphError::OutOfScope { n: x.n(), cap: ISO_SCOPE });
        }
    }
    if g.n() != h.n() || g.edge_count() != h.edge_count() || g.degree_sequence() != h.degree_sequence() {
        return Ok(false);
    }
    Ok(canonical_form(g).graph == canonical_form(h).graph)
}
