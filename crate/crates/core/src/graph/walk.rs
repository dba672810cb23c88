//! Oriented cycles and paths as vertex sequences.

use super::{bit, Graph, Vertex, VertexMask};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WalkError {
    #[error("walk has no vertices")]
    Empty,
    #[error("vertex {0} is not in the graph")]
    VertexOutOfRange(Vertex),
    #[error("vertex {0} repeats")]
    Repeated(Vertex),
    #[error("consecutive vertices {0} and {1} are not adjacent")]
    NotAdjacent(Vertex, Vertex),
    #[error("vertex {0} is not on the cycle")]
    NotOnCycle(Vertex),
    #[error("operation needs a cycle of length at least 3, got {0}")]
    Degenerate(usize),
}

fn check_sequence(g: &Graph, vertices: &[Vertex]) -> Result<VertexMask, WalkError> {
    if vertices.is_empty() {
        return Err(WalkError::Empty);
    }
    let mut seen = 0u64;
    for &v in vertices {
        if v >= g.n() {
            return Err(WalkError::VertexOutOfRange(v));
        }
        if seen & bit(v) != 0 {
            return Err(WalkError::Repeated(v));
        }
        seen |= bit(v);
    }
    for w in vertices.windows(2) {
        if !g.has_edge(w[0], w[1]) {
            return Err(WalkError::NotAdjacent(w[0], w[1]));
        }
    }
    Ok(seen)
}

/// A cycle `v1 v2 … vt v1` with a fixed orientation. One vertex is a cycle
/// of length 1 and an edge a cycle of length 2; otherwise `|C|` is the vertex
/// count.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Cycle {
    vertices: Vec<Vertex>,
}

impl Cycle {
    pub fn new(g: &Graph, vertices: Vec<Vertex>) -> Result<Self, WalkError> {
        check_sequence(g, &vertices)?;
        let t = vertices.len();
        if t >= 3 && !g.has_edge(vertices[t - 1], vertices[0]) {
            return Err(WalkError::NotAdjacent(vertices[t - 1], vertices[0]));
        }
        Ok(Cycle { vertices })
    }

    /// Re-check the cycle against a graph.
    pub fn validate(&self, g: &Graph) -> Result<(), WalkError> {
        Cycle::new(g, self.vertices.clone()).map(|_| ())
    }

    pub(crate) fn from_vertices_unchecked(vertices: Vec<Vertex>) -> Self {
        Cycle { vertices }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// `|C|`.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_degenerate(&self) -> bool {
        self.vertices.len() < 3
    }

    pub fn mask(&self) -> VertexMask {
        self.vertices.iter().fold(0, |m, &v| m | bit(v))
    }

    pub fn contains(&self, x: Vertex) -> bool {
        self.vertices.contains(&x)
    }

    pub fn position(&self, x: Vertex) -> Option<usize> {
        self.vertices.iter().position(|&v| v == x)
    }

    /// Vertex at index `i` taken modulo `|C|`.
    pub fn at(&self, i: isize) -> Vertex {
        self.vertices[i.rem_euclid(self.len() as isize) as usize]
    }

    fn require_proper(&self) -> Result<(), WalkError> {
        if self.is_degenerate() {
            Err(WalkError::Degenerate(self.len()))
        } else {
            Ok(())
        }
    }

    fn index_of(&self, x: Vertex) -> Result<usize, WalkError> {
        self.position(x).ok_or(WalkError::NotOnCycle(x))
    }

    /// `x^{+h}` for `h > 0`, `x^{-|h|}` for `h < 0`, along the stored orientation.
    pub fn step(&self, x: Vertex, h: isize) -> Result<Vertex, WalkError> {
        self.require_proper()?;
        let i = self.index_of(x)?;
        Ok(self.at(i as isize + h))
    }

    pub fn succ(&self, x: Vertex) -> Vertex {
        self.step(x, 1).expect("succ of a cycle vertex")
    }

    pub fn pred(&self, x: Vertex) -> Vertex {
        self.step(x, -1).expect("pred of a cycle vertex")
    }

    /// `|x →C→ y|`: edges from `x` forward to `y`; 0 when `x == y`.
    pub fn forward_distance(&self, x: Vertex, y: Vertex) -> Result<usize, WalkError> {
        self.require_proper()?;
        let (i, j) = (self.index_of(x)?, self.index_of(y)?);
        Ok((j + self.len() - i) % self.len())
    }

    /// The vertices of `x →C→ y`, both ends included. `x == y` yields `[x]`.
    pub fn arc(&self, x: Vertex, y: Vertex) -> Result<Vec<Vertex>, WalkError> {
        let d = self.forward_distance(x, y)?;
        let i = self.index_of(x)? as isize;
        Ok((0..=d as isize).map(|k| self.at(i + k)).collect())
    }

    /// The vertices of `x ←C← y`: from `x` against the orientation down to `y`.
    pub fn back_arc(&self, x: Vertex, y: Vertex) -> Result<Vec<Vertex>, WalkError> {
        let mut a = self.arc(y, x)?;
        a.reverse();
        Ok(a)
    }

    pub fn reversed(&self) -> Cycle {
        let mut v = self.vertices.clone();
        v.reverse();
        Cycle { vertices: v }
    }

    /// The lexicographically least sequence among all rotations and both
    /// orientations.
    pub fn canonical(&self) -> Cycle {
        let t = self.len();
        if t < 3 {
            let mut v = self.vertices.clone();
            v.sort_unstable();
            return Cycle { vertices: v };
        }
        let (start, _) = self.vertices.iter().enumerate().min_by_key(|(_, &v)| v).expect("nonempty");
        let s = start as isize;
        let fwd: Vec<Vertex> = (0..t as isize).map(|k| self.at(s + k)).collect();
        let bwd: Vec<Vertex> = (0..t as isize).map(|k| self.at(s - k)).collect();
        Cycle { vertices: fwd.min(bwd) }
    }
}

/// `x^{+h}` / `x^{-h}` on an oriented cycle.
pub fn cycle_step(c: &Cycle, x: Vertex, h: isize) -> Result<Vertex, WalkError> {
    c.step(x, h)
}

/// A path `x → … → y`; `|P|` counts edges, so a lone vertex has length 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Path {
    vertices: Vec<Vertex>,
}

impl Path {
    pub fn new(g: &Graph, vertices: Vec<Vertex>) -> Result<Self, WalkError> {
        check_sequence(g, &vertices)?;
        Ok(Path { vertices })
    }

    pub(crate) fn from_vertices_unchecked(vertices: Vec<Vertex>) -> Self {
        debug_assert!(!vertices.is_empty());
        Path { vertices }
    }

    pub fn validate(&self, g: &Graph) -> Result<(), WalkError> {
        check_sequence(g, &self.vertices).map(|_| ())
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// `|P|` in edges.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn first(&self) -> Vertex {
        self.vertices[0]
    }

    pub fn last(&self) -> Vertex {
        *self.vertices.last().expect("nonempty path")
    }

    pub fn mask(&self) -> VertexMask {
        self.vertices.iter().fold(0, |m, &v| m | bit(v))
    }

    pub fn reversed(&self) -> Path {
        let mut v = self.vertices.clone();
        v.reverse();
        Path { vertices: v }
    }
}
