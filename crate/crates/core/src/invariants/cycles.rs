use crate::graph::{bit, mask_iter, Cycle, Graph, Path, Vertex, VertexMask, WalkError};
use serde::{Deserialize, Serialize};

/// A longest cycle and its length under the degenerate convention.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Circumference {
    pub length: usize,
    pub witness: Cycle,
}

/// Every maximum-length object, up to `cap` of them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumerated<T> {
    pub length: usize,
    pub items: Vec<T>,
    pub truncated: bool,
}

struct CycleSearch<'a> {
    g: &'a Graph,
    start: Vertex,
    allowed: VertexMask,
    path: Vec<Vertex>,
    best: Vec<Vertex>,
}

impl CycleSearch<'_> {
    fn dfs(&mut self, used: VertexMask) {
        let g = self.g;
        let end = *self.path.last().expect("nonempty");
        if self.path.len() >= 3 && g.has_edge(end, self.start) && self.path.len() > self.best.len() {
            self.best = self.path.clone();
        }
        let avail = self.allowed & !used;
        let reach = g.reach_within(g.neighbor_mask(end) & avail, avail);
        if reach & g.neighbor_mask(self.start) == 0 {
            return;
        }
        if self.path.len() + reach.count_ones() as usize <= self.best.len() {
            return;
        }
        for w in mask_iter(g.neighbor_mask(end) & avail) {
            self.path.push(w);
            self.dfs(used | bit(w));
            self.path.pop();
            if self.best.len() == self.allowed.count_ones() as usize {
                return;
            }
        }
    }
}

/// Vertices by degree, highest first, ties by id.
fn search_order(g: &Graph) -> Vec<Vertex> {
    let mut order: Vec<Vertex> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order
}

/// Length of a longest cycle with a witness in canonical rotation. A graph
/// with an edge but no cycle has circumference 2 (witness: its least edge);
/// an edgeless graph has circumference 1 (witness: vertex 0).
pub fn circumference(g: &Graph) -> Circumference {
    let order = search_order(g);
    let mut best: Vec<Vertex> = Vec::new();
    let mut allowed = g.vertex_mask();
    for &s in &order {
        let comp = g.reach_within(bit(s), allowed);
        let size = comp.count_ones() as usize;
        if size > best.len() && size >= 3 {
            let mut search = CycleSearch { g, start: s, allowed: comp, path: vec![s], best };
            search.dfs(bit(s));
            best = search.best;
        }
        allowed &= !bit(s);
        if allowed.count_ones() as usize <= best.len() {
            break;
        }
    }
    if best.is_empty() {
        best = match g.edges().next() {
            Some((u, v)) => vec![u, v],
            None => vec![0],
        };
    }
    let witness = Cycle::from_vertices_unchecked(best).canonical();
    Circumference { length: witness.len(), witness }
}

/// Circumference by dynamic programming over vertex subsets, for up to 20
/// vertices. `ends[m]` holds the possible last vertices of a path that starts
/// at the least vertex of `m` and covers exactly `m`.
pub fn circumference_dp(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 20, "subset DP is limited to 20 vertices");
    let mut ends = vec![0u32; 1 << n];
    let mut best = if g.edge_count() > 0 { 2 } else { 1 };
    for s in 0..n {
        ends[1 << s] = 1 << s;
    }
    for m in 1usize..(1 << n) {
        let e = ends[m];
        if e == 0 {
            continue;
        }
        let s = m.trailing_zeros() as usize;
        let size = m.count_ones() as usize;
        if size >= 3 && size > best && (e as u64) & g.neighbor_mask(s) != 0 {
            best = size;
        }
        for v in mask_iter(e as u64) {
            let free = g.neighbor_mask(v) & !(m as u64) & !((1u64 << (s + 1)) - 1);
            for w in mask_iter(free) {
                ends[m | 1 << w] |= 1 << w;
            }
        }
    }
    best
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HamiltonianError {
    #[error("hamiltonicity needs at least 3 vertices, got {0}")]
    TooSmall(usize),
}

pub fn is_hamiltonian(g: &Graph) -> Result<bool, HamiltonianError> {
    if g.n() < 3 {
        return Err(HamiltonianError::TooSmall(g.n()));
    }
    Ok(circumference(g).length == g.n())
}

/// True when `G \ C` has no edges.
pub fn is_dominating_cycle(g: &Graph, c: &Cycle) -> Result<bool, WalkError> {
    c.validate(g)?;
    Ok(g.is_edgeless_in(g.vertex_mask() & !c.mask()))
}

struct PathSearch<'a> {
    g: &'a Graph,
    within: VertexMask,
    path: Vec<Vertex>,
    best: Vec<Vertex>,
}

impl PathSearch<'_> {
    fn dfs(&mut self, used: VertexMask) {
        if self.path.len() > self.best.len() {
            self.best = self.path.clone();
        }
        let g = self.g;
        let end = *self.path.last().expect("nonempty");
        let avail = self.within & !used;
        let reach = g.reach_within(g.neighbor_mask(end) & avail, avail);
        if self.path.len() + reach.count_ones() as usize <= self.best.len() {
            return;
        }
        for w in mask_iter(g.neighbor_mask(end) & avail) {
            self.path.push(w);
            self.dfs(used | bit(w));
            self.path.pop();
            if self.best.len() == self.within.count_ones() as usize {
                return;
            }
        }
    }
}

/// A longest path of the subgraph induced by `within`; `None` when empty.
pub fn longest_path_within(g: &Graph, within: VertexMask) -> Option<Path> {
    let mut best: Vec<Vertex> = Vec::new();
    for s in mask_iter(within) {
        let mut search = PathSearch { g, within, path: vec![s], best };
        search.dfs(bit(s));
        best = search.best;
        if best.len() == within.count_ones() as usize {
            break;
        }
    }
    (!best.is_empty()).then(|| Path::from_vertices_unchecked(best))
}

/// A longest path of `G \ C`, or `None` when `C` covers every vertex.
pub fn longest_path_outside(g: &Graph, c: &Cycle) -> Option<Path> {
    longest_path_within(g, g.vertex_mask() & !c.mask())
}

struct Collector<T> {
    cap: usize,
    items: Vec<T>,
    truncated: bool,
}

impl<T> Collector<T> {
    /// False once the cap is exceeded.
    fn push(&mut self, item: T) -> bool {
        if self.items.len() == self.cap {
            self.truncated = true;
            return false;
        }
        self.items.push(item);
        true
    }
}

/// All longest paths inside `within`, each listed once with its smaller end
/// first, in lexicographic order.
pub fn enumerate_longest_paths_within(g: &Graph, within: VertexMask, cap: usize) -> Enumerated<Path> {
    let Some(longest) = longest_path_within(g, within) else {
        return Enumerated { length: 0, items: Vec::new(), truncated: false };
    };
    let target = longest.vertices().len();
    let mut out = Collector { cap, items: Vec::new(), truncated: false };
    fn walk(g: &Graph, within: VertexMask, target: usize, path: &mut Vec<Vertex>, used: VertexMask, out: &mut Collector<Path>) -> bool {
        let end = *path.last().expect("nonempty");
        if path.len() == target {
            if path.len() == 1 || path[0] < end {
                return out.push(Path::from_vertices_unchecked(path.clone()));
            }
            return true;
        }
        let avail = within & !used;
        let reach = g.reach_within(g.neighbor_mask(end) & avail, avail);
        if path.len() + (reach.count_ones() as usize) < target {
            return true;
        }
        for w in mask_iter(g.neighbor_mask(end) & avail) {
            path.push(w);
            let go = walk(g, within, target, path, used | bit(w), out);
            path.pop();
            if !go {
                return false;
            }
        }
        true
    }
    for s in mask_iter(within) {
        if !walk(g, within, target, &mut vec![s], bit(s), &mut out) {
            break;
        }
    }
    Enumerated { length: target - 1, items: out.items, truncated: out.truncated }
}

/// All longest cycles, each once in canonical rotation, in lexicographic
/// order. Degenerate circumference lists every edge or every vertex.
pub fn enumerate_longest_cycles(g: &Graph, cap: usize) -> Enumerated<Cycle> {
    let target = circumference(g).length;
    let mut out = Collector { cap, items: Vec::new(), truncated: false };
    if target <= 2 {
        let all: Vec<Vec<Vertex>> = if target == 2 {
            g.edges().map(|(u, v)| vec![u, v]).collect()
        } else {
            (0..g.n()).map(|v| vec![v]).collect()
        };
        for c in all {
            if !out.push(Cycle::from_vertices_unchecked(c)) {
                break;
            }
        }
        return Enumerated { length: target, items: out.items, truncated: out.truncated };
    }
    fn walk(g: &Graph, allowed: VertexMask, target: usize, path: &mut Vec<Vertex>, used: VertexMask, out: &mut Collector<Cycle>) -> bool {
        let s = path[0];
        let end = *path.last().expect("nonempty");
        if path.len() == target {
            if g.has_edge(end, s) && path[1] < end {
                return out.push(Cycle::from_vertices_unchecked(path.clone()));
            }
            return true;
        }
        let avail = allowed & !used;
        let reach = g.reach_within(g.neighbor_mask(end) & avail, avail);
        if reach & g.neighbor_mask(s) == 0 || path.len() + (reach.count_ones() as usize) < target {
            return true;
        }
        for w in mask_iter(g.neighbor_mask(end) & avail) {
            path.push(w);
            let go = walk(g, allowed, target, path, used | bit(w), out);
            path.pop();
            if !go {
                return false;
            }
        }
        true
    }
    for s in 0..g.n() {
        let allowed = g.vertex_mask() & !((1u64 << s) - 1);
        if !walk(g, allowed, target, &mut vec![s], bit(s), &mut out) {
            break;
        }
    }
    Enumerated { length: target, items: out.items, truncated: out.truncated }
}

/// Length of a longest `x`–`y` path, `None` when `y` is unreachable.
pub fn longest_path_between(g: &Graph, x: Vertex, y: Vertex) -> Option<usize> {
    if x == y {
        return Some(0);
    }
    fn walk(g: &Graph, y: Vertex, end: Vertex, len: usize, used: VertexMask, best: &mut Option<usize>) {
        if end == y {
            *best = Some(best.map_or(len, |b| b.max(len)));
            return;
        }
        let avail = g.vertex_mask() & !used;
        let reach = g.reach_within(g.neighbor_mask(end) & avail, avail);
        if reach & bit(y) == 0 || best.is_some_and(|b| len + reach.count_ones() as usize <= b) {
            return;
        }
        for w in mask_iter(g.neighbor_mask(end) & avail) {
            walk(g, y, w, len + 1, used | bit(w), best);
        }
    }
    let mut best = None;
    walk(g, y, x, 0, bit(x), &mut best);
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_circumferences() {
        assert_eq!(circumference(&Graph::cycle_graph(5)).length, 5);
        let p = circumference(&Graph::petersen());
        assert_eq!(p.length, 9);
        p.witness.validate(&Graph::petersen()).unwrap();
        assert_eq!(circumference(&Graph::path_graph(4)).length, 2);
        assert_eq!(circumference(&Graph::star(3)).witness.vertices(), &[0, 1]);
        let e = circumference(&Graph::new(3).unwrap());
        assert_eq!((e.length, e.witness.vertices().to_vec()), (1, vec![0]));
        assert_eq!(circumference(&Graph::complete_bipartite(2, 3)).length, 4);
        assert_eq!(circumference(&Graph::complete(1)).length, 1);
    }

    #[test]
    fn dp_agrees_on_families() {
        for g in [Graph::petersen(), Graph::complete(6), Graph::path_graph(5), Graph::complete_bipartite(3, 5), Graph::new(2).unwrap()] {
            assert_eq!(circumference_dp(&g), circumference(&g).length, "{g:?}");
        }
    }

    #[test]
    fn hamiltonicity() {
        assert_eq!(is_hamiltonian(&Graph::complete(4)), Ok(true));
        assert_eq!(is_hamiltonian(&Graph::petersen()), Ok(false));
        assert_eq!(is_hamiltonian(&Graph::cycle_graph(6)), Ok(true));
        assert_eq!(is_hamiltonian(&Graph::complete(2)), Err(HamiltonianError::TooSmall(2)));
    }

    #[test]
    fn domination_and_outside_paths() {
        let p = Graph::petersen();
        let c = circumference(&p).witness;
        assert_eq!(is_dominating_cycle(&p, &c), Ok(true));
        let rest = longest_path_outside(&p, &c).unwrap();
        assert_eq!(rest.len(), 0);
        let k4 = Graph::complete(4);
        let tri = Cycle::new(&k4, vec![0, 1, 2]).unwrap();
        assert_eq!(is_dominating_cycle(&k4, &tri), Ok(true));
        assert_eq!(longest_path_outside(&k4, &tri).unwrap().vertices(), &[3]);
        let c6 = Graph::cycle_graph(6);
        let full = Cycle::new(&c6, (0..6).collect()).unwrap();
        assert_eq!(is_dominating_cycle(&c6, &full), Ok(true));
        assert_eq!(longest_path_outside(&c6, &full), None);
        let bad = Cycle::from_vertices_unchecked(vec![0, 2, 4]);
        assert!(is_dominating_cycle(&c6, &bad).is_err());
    }

    #[test]
    fn cycle_enumeration() {
        let c5 = enumerate_longest_cycles(&Graph::cycle_graph(5), 100);
        assert_eq!(c5.items.len(), 1);
        assert_eq!(enumerate_longest_cycles(&Graph::complete(4), 100).items.len(), 3);
        let p = Graph::petersen();
        let nine = enumerate_longest_cycles(&p, 1000);
        assert_eq!(nine.items.len(), 20);
        assert!(!nine.truncated);
        for c in &nine.items {
            assert_eq!(c.len(), 9);
            c.validate(&p).unwrap();
            assert_eq!(&c.canonical(), c);
        }
        let capped = enumerate_longest_cycles(&p, 5);
        assert_eq!((capped.items.len(), capped.truncated), (5, true));
        assert_eq!(enumerate_longest_cycles(&Graph::path_graph(3), 10).items.len(), 2);
    }

    #[test]
    fn path_enumeration() {
        let g = Graph::path_graph(4);
        let all = enumerate_longest_paths_within(&g, g.vertex_mask(), 10);
        assert_eq!(all.length, 3);
        assert_eq!(all.items.len(), 1);
        let k4 = Graph::complete(4);
        let ps = enumerate_longest_paths_within(&k4, k4.vertex_mask(), 100);
        assert_eq!(ps.items.len(), 12);
        let iso = enumerate_longest_paths_within(&Graph::new(3).unwrap(), 0b111, 10);
        assert_eq!((iso.length, iso.items.len()), (0, 3));
    }

    #[test]
    fn paths_between() {
        let k5 = Graph::complete(5);
        assert_eq!(longest_path_between(&k5, 0, 1), Some(4));
        let c6 = Graph::cycle_graph(6);
        assert_eq!(longest_path_between(&c6, 0, 3), Some(3));
        assert_eq!(longest_path_between(&c6, 0, 1), Some(5));
        let split = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(longest_path_between(&split, 0, 2), None);
    }
}
