use crate::graph::{bit, mask_iter, Cycle, Graph, Path, Vertex, VertexMask, WalkError};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error(transparent)]
    Walk(#[from] WalkError),
    #[error("path vertex {0} lies on the cycle")]
    PathMeetsCycle(Vertex),
    #[error("neither path end has a neighbor on the cycle")]
    NoAttachments,
    #[error("segment index {index} out of range for {s} segments")]
    SegmentIndex { index: usize, s: usize },
    #[error("segments must be distinct, got {0} twice")]
    SameSegment(usize),
    #[error("intermediate path {0:?} is not a single edge")]
    NotAnEdge(Vec<Vertex>),
    #[error("cycle has length {found} but the circumference is {longest}")]
    CycleNotLongest { found: usize, longest: usize },
    #[error("path has length {found} but the longest path outside the cycle has length {longest}")]
    PathNotLongest { found: usize, longest: usize },
    #[error("the ends of the path have different cycle neighborhoods")]
    UnequalEnds,
    #[error("need at least two attachments, found {0}")]
    TooFewAttachments(usize),
}

/// Elementary segments of an oriented cycle `C` cut out by the cycle
/// neighbors of the ends of a path `P = x…y` outside `C`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SegmentDecomposition {
    pub cycle: Cycle,
    pub path: Path,
    /// `ξ_1 … ξ_s` in cyclic order, starting from the earliest cycle position.
    pub xi: Vec<Vertex>,
    /// `I_i = ξ_i →C→ ξ_{i+1}`, both ends included.
    pub segments: Vec<Vec<Vertex>>,
    /// `I_i* = ξ_i⁺ →C→ ξ_{i+1}⁻`.
    pub interiors: Vec<Vec<Vertex>>,
    pub p_bar: usize,
    /// `|N_C(x) \ N_C(y)|`.
    pub sigma1: usize,
    /// `|N_C(y) \ N_C(x)|`.
    pub sigma2: usize,
    /// `|N_C(x) ∩ N_C(y)|`.
    pub shared: usize,
    #[serde(skip)]
    pub nx: VertexMask,
    #[serde(skip)]
    pub ny: VertexMask,
    #[serde(skip)]
    pos: Vec<usize>,
    #[serde(skip)]
    interior_of: Vec<Option<usize>>,
}

impl SegmentDecomposition {
    pub fn s(&self) -> usize {
        self.xi.len()
    }

    /// `|I_i|` in edges.
    pub fn segment_len(&self, i: usize) -> usize {
        self.segments[i].len() - 1
    }

    /// `ξ_i` with the index taken modulo `s`.
    pub fn xi_at(&self, i: isize) -> Vertex {
        self.xi[i.rem_euclid(self.s() as isize) as usize]
    }

    pub fn x(&self) -> Vertex {
        self.path.first()
    }

    pub fn y(&self) -> Vertex {
        self.path.last()
    }

    /// Index of the segment whose interior holds `v`.
    pub fn interior_of(&self, v: Vertex) -> Option<usize> {
        self.interior_of.get(v).copied().flatten()
    }

    /// `|u →C→ v|` for cycle vertices.
    pub fn fwd(&self, u: Vertex, v: Vertex) -> usize {
        let t = self.cycle.len();
        (self.pos[v] + t - self.pos[u]) % t
    }

    /// Position of a cycle vertex in the stored sequence.
    pub fn position(&self, v: Vertex) -> usize {
        self.pos[v]
    }

    pub fn equal_ends(&self) -> bool {
        self.nx == self.ny
    }

    pub fn attachment_mask(&self) -> VertexMask {
        self.nx | self.ny
    }

    /// Vertices outside both `C` and `P`.
    pub fn outside_mask(&self, g: &Graph) -> VertexMask {
        g.vertex_mask() & !self.cycle.mask() & !self.path.mask()
    }

    fn check_index(&self, i: usize) -> Result<(), StructureError> {
        if i >= self.s() {
            Err(StructureError::SegmentIndex { index: i, s: self.s() })
        } else {
            Ok(())
        }
    }
}

/// Split `c` at the attachments of the ends of `p`.
pub fn decompose(g: &Graph, c: &Cycle, p: &Path) -> Result<SegmentDecomposition, StructureError> {
    c.validate(g)?;
    p.validate(g)?;
    if c.is_degenerate() {
        return Err(WalkError::Degenerate(c.len()).into());
    }
    let cmask = c.mask();
    if let Some(v) = p.vertices().iter().find(|&&v| cmask & bit(v) != 0) {
        return Err(StructureError::PathMeetsCycle(*v));
    }
    let nx = g.neighbor_mask(p.first()) & cmask;
    let ny = g.neighbor_mask(p.last()) & cmask;
    if nx | ny == 0 {
        return Err(StructureError::NoAttachments);
    }
    let t = c.len();
    let mut pos = vec![usize::MAX; g.n()];
    for (i, &v) in c.vertices().iter().enumerate() {
        pos[v] = i;
    }
    let xi: Vec<Vertex> = c.vertices().iter().copied().filter(|&v| (nx | ny) & bit(v) != 0).collect();
    let s = xi.len();
    let mut segments = Vec::with_capacity(s);
    for i in 0..s {
        let from = pos[xi[i]];
        let mut span = (pos[xi[(i + 1) % s]] + t - from) % t;
        if span == 0 {
            span = t;
        }
        segments.push((0..=span).map(|k| c.vertices()[(from + k) % t]).collect::<Vec<_>>());
    }
    let interiors: Vec<Vec<Vertex>> = segments.iter().map(|seg| seg[1..seg.len() - 1].to_vec()).collect();
    let mut interior_of = vec![None; g.n()];
    for (i, inner) in interiors.iter().enumerate() {
        for &v in inner {
            interior_of[v] = Some(i);
        }
    }
    Ok(SegmentDecomposition {
        cycle: c.clone(),
        path: p.clone(),
        xi,
        segments,
        interiors,
        p_bar: p.len(),
        sigma1: (nx & !ny).count_ones() as usize,
        sigma2: (ny & !nx).count_ones() as usize,
        shared: (nx & ny).count_ones() as usize,
        nx,
        ny,
        pos,
        interior_of,
    })
}

/// A path `z…w` with `z ∈ I_a*`, `w ∈ I_b*` and every other vertex outside
/// `C ∪ P`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct IntermediatePath {
    pub path: Path,
    pub seg_a: usize,
    pub seg_b: usize,
}

impl IntermediatePath {
    pub fn z(&self) -> Vertex {
        self.path.first()
    }

    pub fn w(&self) -> Vertex {
        self.path.last()
    }

    /// `|L|` in edges.
    pub fn len(&self) -> usize {
        self.path.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_edge(&self) -> bool {
        self.path.len() == 1
    }

    pub fn reversed(&self) -> IntermediatePath {
        IntermediatePath { path: self.path.reversed(), seg_a: self.seg_b, seg_b: self.seg_a }
    }
}

/// `Υ(I_a, I_b)` restricted to paths with at most `max_internal` internal
/// vertices, oriented from `I_a*` to `I_b*`. Order: by `z` along the cycle,
/// then depth-first with neighbors in ascending id.
pub fn intermediate_paths(
    g: &Graph,
    d: &SegmentDecomposition,
    a: usize,
    b: usize,
    max_internal: usize,
) -> Result<Vec<IntermediatePath>, StructureError> {
    d.check_index(a)?;
    d.check_index(b)?;
    if a == b {
        return Err(StructureError::SameSegment(a));
    }
    let target: VertexMask = d.interiors[b].iter().fold(0, |m, &v| m | bit(v));
    let free = d.outside_mask(g);
    let mut out = Vec::new();
    let mut trail = Vec::new();
    fn walk(
        g: &Graph,
        target: VertexMask,
        free: VertexMask,
        room: usize,
        trail: &mut Vec<Vertex>,
        used: VertexMask,
        out: &mut Vec<Vec<Vertex>>,
    ) {
        let end = *trail.last().expect("nonempty");
        for w in mask_iter(g.neighbor_mask(end) & (target | (free & !used))) {
            trail.push(w);
            if target & bit(w) != 0 {
                out.push(trail.clone());
            } else if room > 0 {
                walk(g, target, free, room - 1, trail, used | bit(w), out);
            }
            trail.pop();
        }
    }
    for &z in &d.interiors[a] {
        let mut found = Vec::new();
        trail.clear();
        trail.push(z);
        walk(g, target, free, max_internal, &mut trail, bit(z), &mut found);
        out.extend(found.into_iter().map(|v| IntermediatePath {
            path: Path::from_vertices_unchecked(v),
            seg_a: a,
            seg_b: b,
        }));
    }
    Ok(out)
}

/// True when two of the given intermediate edges share no endpoint.
pub fn has_independent_pair(paths: &[IntermediatePath]) -> Result<bool, StructureError> {
    if let Some(p) = paths.iter().find(|p| !p.is_edge()) {
        return Err(StructureError::NotAnEdge(p.path.vertices().to_vec()));
    }
    Ok(paths.iter().enumerate().any(|(i, e)| {
        paths[i + 1..].iter().any(|f| e.z() != f.z() && e.z() != f.w() && e.w() != f.z() && e.w() != f.w())
    }))
}
