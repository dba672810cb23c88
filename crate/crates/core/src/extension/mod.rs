//! Explicit cycle rewirings around a longest outside path, each reporting
//! the length its accounting formula predicts next to the length actually
//! built, and a greedy driver that chains them.

mod greedy;

pub use greedy::{greedy_extend, greedy_extend_with, GreedyConfig, GreedyOutcome};

use crate::graph::{Cycle, Graph, Path, Vertex, WalkError};
use crate::structure::{intermediate_paths, IntermediatePath, SegmentDecomposition, StructureError};
use serde::Serialize;
use thiserror::Error;

/// Which rewiring produced a candidate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Construction {
    /// `ξ_i x→P→y ξ_{i+1}` replaces the segment `I_i`.
    SegmentInsertion,
    /// `ξ_a x→P→y ξ_b ←C← z →L→ w →C→ ξ_a`.
    SpliceForward,
    /// The forward splice on the reversed cycle.
    SpliceBackward,
    /// Two independent edges `z₁w₁`, `z₂w₂` with `z₁` before `z₂` and `w₂` before `w₁`.
    CrossedPair,
    /// Two independent edges with `z₁` before `z₂` and `w₁` before `w₂`.
    ParallelPair,
    /// Edges sharing `w`; keeps the arc up to the nearer `z`.
    FanNear,
    /// Edges sharing `w`; keeps the arc up to the farther `z`.
    FanFar,
    /// A chord `yz` between interiors, spliced forward.
    ChordNear,
    /// A chord `yz` between interiors, spliced on the reversed cycle.
    ChordFar,
    /// `y` after `ξ_f` adjacent to `ξ_a`, with `ξ_a⁻ξ_b⁺ ∈ E`.
    HopBack,
    /// `y` after `ξ_f` adjacent to `ξ_b`, with `ξ_a⁻ξ_b⁺ ∈ E`.
    HopAhead,
}

/// Which end of the arcs of a spliced path is kept.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Forward,
    Backward,
}

/// How two intermediate edges between the same segments are combined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PairVariant {
    Crossed,
    Parallel,
    /// Shared far end; also covers three edges at one vertex via the first one.
    FanNear,
    /// Shared far end; also covers three edges at one vertex via the last one.
    FanFar,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RewireCandidate {
    pub construction: Construction,
    pub new_cycle: Cycle,
    /// Length predicted by the accounting formula.
    pub claimed_length: i64,
    pub segments: Vec<usize>,
    pub paths: Vec<Path>,
}

impl RewireCandidate {
    pub fn measured_length(&self) -> usize {
        self.new_cycle.len()
    }

    pub fn accounting_matches(&self) -> bool {
        self.claimed_length == self.new_cycle.len() as i64
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtensionError {
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error("vertex {vertex} is not in the interior of segment {segment}")]
    NotInInterior { vertex: Vertex, segment: usize },
    #[error("path end {end} is not adjacent to cycle vertex {cycle_vertex}")]
    MissingAttachment { end: Vertex, cycle_vertex: Vertex },
    #[error("required edge {0}-{1} is missing")]
    MissingEdge(Vertex, Vertex),
    #[error("edge pattern does not fit the {0:?} variant")]
    PatternMismatch(PairVariant),
    #[error("constructed sequence is not a cycle: {0}")]
    Invalid(WalkError),
    #[error("iteration budget must be at least 1")]
    ZeroBudget,
}

type Result<T> = std::result::Result<T, ExtensionError>;

fn arc(d: &SegmentDecomposition, u: Vertex, v: Vertex) -> Vec<Vertex> {
    d.cycle.arc(u, v).expect("cycle vertices")
}

fn back_arc(d: &SegmentDecomposition, u: Vertex, v: Vertex) -> Vec<Vertex> {
    d.cycle.back_arc(u, v).expect("cycle vertices")
}

/// Cycle through the given pieces; the last vertex of the final piece is the
/// starting vertex and is dropped.
fn close(g: &Graph, mut pieces: Vec<Vec<Vertex>>) -> Result<Cycle> {
    let last = pieces.last_mut().expect("pieces");
    last.pop();
    Cycle::new(g, pieces.concat()).map_err(ExtensionError::Invalid)
}

fn need_attach(g: &Graph, end: Vertex, cycle_vertex: Vertex) -> Result<()> {
    if g.has_edge(end, cycle_vertex) {
        Ok(())
    } else {
        Err(ExtensionError::MissingAttachment { end, cycle_vertex })
    }
}

fn need_interior(d: &SegmentDecomposition, v: Vertex, segment: usize) -> Result<()> {
    if d.interior_of(v) == Some(segment) {
        Ok(())
    } else {
        Err(ExtensionError::NotInInterior { vertex: v, segment })
    }
}

fn check_path(d: &SegmentDecomposition, l: &IntermediatePath) -> Result<()> {
    if l.seg_a == l.seg_b {
        return Err(StructureError::SameSegment(l.seg_a).into());
    }
    need_interior(d, l.z(), l.seg_a)?;
    need_interior(d, l.w(), l.seg_b)
}

fn path_vertices(d: &SegmentDecomposition) -> Vec<Vertex> {
    d.path.vertices().to_vec()
}

/// Splice `P` and an intermediate path `L` into the cycle. Forward:
/// `ξ_a x→P→y ξ_b ←C← z →L→ w →C→ ξ_a` of length
/// `|C| - |ξ_a→z| - |ξ_b→w| + |L| + p̄ + 2`. Backward: the same on the
/// reversed cycle, of length `|C| - |z→ξ_{a+1}| - |w→ξ_{b+1}| + |L| + p̄ + 2`.
pub fn splice_basic(g: &Graph, d: &SegmentDecomposition, l: &IntermediatePath, dir: Direction) -> Result<RewireCandidate> {
    check_path(d, l)?;
    let (a, b) = (l.seg_a as isize, l.seg_b as isize);
    let (z, w) = (l.z(), l.w());
    let t = d.cycle.len() as i64;
    let extra = l.len() as i64 + d.p_bar as i64 + 2;
    let lv = l.path.vertices();
    let (cycle, claimed, construction) = match dir {
        Direction::Forward => {
            let (xa, xb) = (d.xi_at(a), d.xi_at(b));
            need_attach(g, d.x(), xa)?;
            need_attach(g, d.y(), xb)?;
            let c = close(g, vec![vec![xa], path_vertices(d), back_arc(d, xb, z), lv[1..].to_vec(), arc(d, w, xa)[1..].to_vec()])?;
            (c, t - d.fwd(xa, z) as i64 - d.fwd(xb, w) as i64 + extra, Construction::SpliceForward)
        }
        Direction::Backward => {
            let (xa1, xb1) = (d.xi_at(a + 1), d.xi_at(b + 1));
            need_attach(g, d.x(), xa1)?;
            need_attach(g, d.y(), xb1)?;
            let c = close(g, vec![vec![xa1], path_vertices(d), arc(d, xb1, z), lv[1..].to_vec(), back_arc(d, w, xa1)[1..].to_vec()])?;
            (c, t - d.fwd(z, xa1) as i64 - d.fwd(w, xb1) as i64 + extra, Construction::SpliceBackward)
        }
    };
    Ok(RewireCandidate { construction, new_cycle: cycle, claimed_length: claimed, segments: vec![l.seg_a, l.seg_b], paths: vec![l.path.clone()] })
}

/// Two intermediate edges between the same pair of segments.
///
/// * `Crossed`: `ξ_a →C→ z₁ w₁ ←C← w₂ z₂ →C→ ξ_b x→P→y ξ_{b+1} →C→ ξ_a`,
///   length `|C| - |z₁→z₂| - |ξ_b→w₂| - |w₁→ξ_{b+1}| + p̄ + 4`.
/// * `Parallel`: `ξ_a →C→ z₁ w₁ →C→ w₂ z₂ →C→ ξ_b x→P→y ξ_{b+1} →C→ ξ_a`,
///   length `|C| - |z₁→z₂| - |ξ_b→w₁| - |w₂→ξ_{b+1}| + p̄ + 4`.
/// * `FanNear` (`w₁ = w₂`): `ξ_a x→P→y ξ_b ←C← z₁ w →C→ ξ_a`,
///   length `|C| - |ξ_a→z₁| - |ξ_b→w| + p̄ + 3`.
/// * `FanFar` (`w₁ = w₂`): `ξ_a →C→ z₂ w ←C← ξ_{a+1} x→P→y ξ_{b+1} →C→ ξ_a`,
///   length `|C| - |z₂→ξ_{a+1}| - |w→ξ_{b+1}| + p̄ + 3`.
///
/// Edges are reordered so that `z₁` precedes `z₂`; a shared `z` is handled by
/// reversing both edges.
pub fn rewire_two_edges(
    g: &Graph,
    d: &SegmentDecomposition,
    e1: &IntermediatePath,
    e2: &IntermediatePath,
    variant: PairVariant,
) -> Result<RewireCandidate> {
    if !e1.is_edge() {
        return Err(StructureError::NotAnEdge(e1.path.vertices().to_vec()).into());
    }
    if !e2.is_edge() {
        return Err(StructureError::NotAnEdge(e2.path.vertices().to_vec()).into());
    }
    check_path(d, e1)?;
    check_path(d, e2)?;
    let (mut e1, mut e2) = (e1.clone(), e2.clone());
    if (e2.seg_a, e2.seg_b) != (e1.seg_a, e1.seg_b) {
        e2 = e2.reversed();
        if (e2.seg_a, e2.seg_b) != (e1.seg_a, e1.seg_b) {
            return Err(ExtensionError::PatternMismatch(variant));
        }
    }
    let fan = matches!(variant, PairVariant::FanNear | PairVariant::FanFar);
    if fan && e1.z() == e2.z() && e1.w() != e2.w() {
        e1 = e1.reversed();
        e2 = e2.reversed();
    }
    let (a, b) = (e1.seg_a as isize, e1.seg_b as isize);
    let (xa, xb) = (d.xi_at(a), d.xi_at(b));
    if d.fwd(xa, e1.z()) > d.fwd(xa, e2.z()) {
        std::mem::swap(&mut e1, &mut e2);
    }
    let (z1, w1, z2, w2) = (e1.z(), e1.w(), e2.z(), e2.w());
    let t = d.cycle.len() as i64;
    let p = d.p_bar as i64;
    let xb1 = d.xi_at(b + 1);
    let xa1 = d.xi_at(a + 1);
    let mismatch = || ExtensionError::PatternMismatch(variant);
    let (cycle, claimed, construction) = match variant {
        PairVariant::Crossed | PairVariant::Parallel => {
            if z1 == z2 || w1 == w2 {
                return Err(mismatch());
            }
            let w2_first = d.fwd(xb, w2) < d.fwd(xb, w1);
            need_attach(g, d.x(), xb)?;
            need_attach(g, d.y(), xb1)?;
            let tail = vec![arc(d, z2, xb), path_vertices(d), arc(d, xb1, xa)];
            if variant == PairVariant::Crossed {
                if !w2_first {
                    return Err(mismatch());
                }
                let mut pieces = vec![arc(d, xa, z1), back_arc(d, w1, w2)];
                pieces.extend(tail);
                let dropped = d.fwd(z1, z2) + d.fwd(xb, w2) + d.fwd(w1, xb1);
                (close(g, pieces)?, t - dropped as i64 + p + 4, Construction::CrossedPair)
            } else {
                if w2_first {
                    return Err(mismatch());
                }
                let mut pieces = vec![arc(d, xa, z1), arc(d, w1, w2)];
                pieces.extend(tail);
                let dropped = d.fwd(z1, z2) + d.fwd(xb, w1) + d.fwd(w2, xb1);
                (close(g, pieces)?, t - dropped as i64 + p + 4, Construction::ParallelPair)
            }
        }
        PairVariant::FanNear => {
            if w1 != w2 || z1 == z2 {
                return Err(mismatch());
            }
            need_attach(g, d.x(), xa)?;
            need_attach(g, d.y(), xb)?;
            let c = close(g, vec![vec![xa], path_vertices(d), back_arc(d, xb, z1), arc(d, w1, xa)])?;
            (c, t - d.fwd(xa, z1) as i64 - d.fwd(xb, w1) as i64 + p + 3, Construction::FanNear)
        }
        PairVariant::FanFar => {
            if w1 != w2 || z1 == z2 {
                return Err(mismatch());
            }
            need_attach(g, d.x(), xa1)?;
            need_attach(g, d.y(), xb1)?;
            let c = close(g, vec![arc(d, xa, z2), back_arc(d, w1, xa1), path_vertices(d), arc(d, xb1, xa)])?;
            (c, t - d.fwd(z2, xa1) as i64 - d.fwd(w1, xb1) as i64 + p + 3, Construction::FanFar)
        }
    };
    Ok(RewireCandidate {
        construction,
        new_cycle: cycle,
        claimed_length: claimed,
        segments: vec![e1.seg_a, e1.seg_b],
        paths: vec![e1.path.clone(), e2.path.clone()],
    })
}

/// `ξ_i x→P→y ξ_{i+1} →C→ ξ_i`, of length `|C| - |I_i| + p̄ + 2`.
pub fn insert_path(g: &Graph, d: &SegmentDecomposition, i: usize) -> Result<RewireCandidate> {
    if i >= d.s() {
        return Err(StructureError::SegmentIndex { index: i, s: d.s() }.into());
    }
    let (u, v) = (d.xi[i], d.xi_at(i as isize + 1));
    need_attach(g, d.x(), u)?;
    need_attach(g, d.y(), v)?;
    let c = close(g, vec![vec![u], path_vertices(d), arc(d, v, u)])?;
    let claimed = d.cycle.len() as i64 - d.segment_len(i) as i64 + d.p_bar as i64 + 2;
    Ok(RewireCandidate { construction: Construction::SegmentInsertion, new_cycle: c, claimed_length: claimed, segments: vec![i], paths: Vec::new() })
}

/// Chord between the interiors of segments `a` and `b`, spliced forward:
/// `ξ_a x→P→y ξ_b ←C← y' z' →C→ ξ_a` with length
/// `|C| - |ξ_a→y'| - |ξ_b→z'| + p̄ + 3`, or on the reversed cycle.
fn chord(g: &Graph, d: &SegmentDecomposition, y: Vertex, z: Vertex, dir: Direction) -> Result<RewireCandidate> {
    let (a, b) = (d.interior_of(y), d.interior_of(z));
    let (Some(a), Some(b)) = (a, b) else {
        return Err(ExtensionError::NotInInterior { vertex: if a.is_none() { y } else { z }, segment: usize::MAX });
    };
    if !g.has_edge(y, z) {
        return Err(ExtensionError::MissingEdge(y, z));
    }
    let l = IntermediatePath { path: Path::from_vertices_unchecked(vec![y, z]), seg_a: a, seg_b: b };
    let mut cand = splice_basic(g, d, &l, dir)?;
    cand.construction = match dir {
        Direction::Forward => Construction::ChordNear,
        Direction::Backward => Construction::ChordFar,
    };
    Ok(cand)
}

/// With `ξ_a, ξ_b, ξ_f` in cyclic order, `ξ_a⁻ξ_b⁺ ∈ E` and `y ∈ I_f*`:
/// `HopBack` (`yξ_a ∈ E`) builds `ξ_f x→P→y ξ_b ←C← ξ_a y →C→ ξ_a⁻ ξ_b⁺ →C→ ξ_f`,
/// `HopAhead` (`yξ_b ∈ E`) builds `ξ_f x→P→y ξ_a →C→ ξ_b y →C→ ξ_a⁻ ξ_b⁺ →C→ ξ_f`;
/// both of length `|C| - |ξ_f→y| + p̄ + 2`.
fn hop(g: &Graph, d: &SegmentDecomposition, a: usize, b: usize, f: usize, y: Vertex, ahead: bool) -> Result<RewireCandidate> {
    need_interior(d, y, f)?;
    let c = &d.cycle;
    let (xa, xb, xf) = (d.xi[a], d.xi[b], d.xi[f]);
    let (am, bp) = (c.pred(xa), c.succ(xb));
    if !g.has_edge(am, bp) {
        return Err(ExtensionError::MissingEdge(am, bp));
    }
    let target = if ahead { xb } else { xa };
    if !g.has_edge(y, target) {
        return Err(ExtensionError::MissingEdge(y, target));
    }
    need_attach(g, d.x(), xf)?;
    let middle = if ahead {
        need_attach(g, d.y(), xa)?;
        arc(d, xa, xb)
    } else {
        need_attach(g, d.y(), xb)?;
        back_arc(d, xb, xa)
    };
    let cycle = close(g, vec![vec![xf], path_vertices(d), middle, arc(d, y, am), arc(d, bp, xf)])?;
    let claimed = c.len() as i64 - d.fwd(xf, y) as i64 + d.p_bar as i64 + 2;
    Ok(RewireCandidate {
        construction: if ahead { Construction::HopAhead } else { Construction::HopBack },
        new_cycle: cycle,
        claimed_length: claimed,
        segments: vec![a, b, f],
        paths: Vec::new(),
    })
}

/// Every chord and hop rewiring available in `d` when both path ends see the
/// same cycle vertices. On a longest cycle none of them is longer.
pub fn claim_rewires(g: &Graph, d: &SegmentDecomposition) -> Vec<RewireCandidate> {
    let mut out = Vec::new();
    if !d.equal_ends() {
        return out;
    }
    let s = d.s();
    for a in 0..s {
        for b in 0..s {
            if a == b {
                continue;
            }
            for &y in &d.interiors[a] {
                for &z in &d.interiors[b] {
                    if g.has_edge(y, z) {
                        for dir in [Direction::Forward, Direction::Backward] {
                            out.extend(chord(g, d, y, z, dir).ok());
                        }
                    }
                }
            }
        }
    }
    let c = &d.cycle;
    for a in 0..s {
        for b in 0..s {
            for f in 0..s {
                let (ob, of) = ((b + s - a) % s, (f + s - a) % s);
                if ob == 0 || of == 0 || ob >= of || !g.has_edge(c.pred(d.xi[a]), c.succ(d.xi[b])) {
                    continue;
                }
                for &y in &d.interiors[f] {
                    if g.has_edge(y, d.xi[a]) {
                        out.extend(hop(g, d, a, b, f, y, false).ok());
                    }
                    if g.has_edge(y, d.xi[b]) {
                        out.extend(hop(g, d, a, b, f, y, true).ok());
                    }
                }
            }
        }
    }
    out
}

/// Every applicable rewiring of `d`, in a fixed order: segment insertions,
/// splices over intermediate paths with at most `max_internal` internal
/// vertices, edge pairs, then chords and hops.
pub fn all_candidates(g: &Graph, d: &SegmentDecomposition, max_internal: usize) -> Result<Vec<RewireCandidate>> {
    let s = d.s();
    let (x, y) = (d.x(), d.y());
    let mut out = Vec::new();
    for i in (0..s).filter(|_| s >= 2) {
        if g.has_edge(x, d.xi[i]) && g.has_edge(y, d.xi_at(i as isize + 1)) {
            out.push(insert_path(g, d, i)?);
        }
    }
    for a in 0..s {
        for b in 0..s {
            if a == b {
                continue;
            }
            let ups = intermediate_paths(g, d, a, b, max_internal)?;
            let (ai, bi) = (a as isize, b as isize);
            for l in &ups {
                if g.has_edge(x, d.xi_at(ai)) && g.has_edge(y, d.xi_at(bi)) {
                    out.push(splice_basic(g, d, l, Direction::Forward)?);
                }
                if g.has_edge(x, d.xi_at(ai + 1)) && g.has_edge(y, d.xi_at(bi + 1)) {
                    out.push(splice_basic(g, d, l, Direction::Backward)?);
                }
            }
            let edges: Vec<&IntermediatePath> = ups.iter().filter(|l| l.is_edge()).collect();
            for (i, e1) in edges.iter().enumerate() {
                for e2 in &edges[i + 1..] {
                    for variant in pair_variants(d, e1, e2) {
                        if pair_attachments_ok(g, d, e1, e2, variant) {
                            out.push(rewire_two_edges(g, d, e1, e2, variant)?);
                        }
                    }
                }
            }
        }
    }
    out.extend(claim_rewires(g, d));
    Ok(out)
}

fn pair_variants(d: &SegmentDecomposition, e1: &IntermediatePath, e2: &IntermediatePath) -> Vec<PairVariant> {
    let (z1, w1, z2, w2) = (e1.z(), e1.w(), e2.z(), e2.w());
    if z1 != z2 && w1 != w2 {
        let xa = d.xi[e1.seg_a];
        let xb = d.xi[e1.seg_b];
        let z_order = d.fwd(xa, z1) < d.fwd(xa, z2);
        let w_order = d.fwd(xb, w1) < d.fwd(xb, w2);
        if z_order != w_order {
            vec![PairVariant::Crossed]
        } else {
            vec![PairVariant::Parallel]
        }
    } else if (z1 == z2) != (w1 == w2) {
        vec![PairVariant::FanNear, PairVariant::FanFar]
    } else {
        Vec::new()
    }
}

fn pair_attachments_ok(g: &Graph, d: &SegmentDecomposition, e1: &IntermediatePath, e2: &IntermediatePath, v: PairVariant) -> bool {
    // the segment pair seen from the shared-end side when fanning out
    let (a, b) = if e1.z() == e2.z() && matches!(v, PairVariant::FanNear | PairVariant::FanFar) {
        (e1.seg_b as isize, e1.seg_a as isize)
    } else {
        (e1.seg_a as isize, e1.seg_b as isize)
    };
    let (x, y) = (d.x(), d.y());
    match v {
        PairVariant::Crossed | PairVariant::Parallel | PairVariant::FanFar => {
            let first = if v == PairVariant::FanFar { d.xi_at(a + 1) } else { d.xi_at(b) };
            g.has_edge(x, first) && g.has_edge(y, d.xi_at(b + 1))
        }
        PairVariant::FanNear => g.has_edge(x, d.xi_at(a)) && g.has_edge(y, d.xi_at(b)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{circumference, enumerate_longest_cycles, longest_path_outside};
    use crate::structure::decompose;

    fn all_accounted(cands: &[RewireCandidate]) {
        for c in cands {
            assert!(c.accounting_matches(), "{c:?}");
        }
    }

    #[test]
    fn petersen_splices_never_exceed_nine() {
        let g = Graph::petersen();
        for c in enumerate_longest_cycles(&g, 100).items {
            let p = longest_path_outside(&g, &c).unwrap();
            let d = decompose(&g, &c, &p).unwrap();
            let cands = all_candidates(&g, &d, 2).unwrap();
            assert!(!cands.is_empty());
            all_accounted(&cands);
            assert_eq!(cands.iter().map(|c| c.measured_length()).max(), Some(9));
            for cand in &cands {
                cand.new_cycle.validate(&g).unwrap();
            }
        }
    }

    #[test]
    fn splice_accounting_on_hexagon() {
        // C6 on 0..5, vertex 6 on 0 and 3, chord 1-4 between the interiors
        let mut edges: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        edges.extend([(6, 0), (6, 3), (1, 4)]);
        let g = Graph::from_edges(7, &edges).unwrap();
        let c = Cycle::new(&g, (0..6).collect()).unwrap();
        let d = decompose(&g, &c, &Path::new(&g, vec![6]).unwrap()).unwrap();
        let l = &intermediate_paths(&g, &d, 0, 1, 0).unwrap()[0];
        assert_eq!(l.path.vertices(), &[1, 4]);
        for (dir, dropped) in [(Direction::Forward, 1 + 1), (Direction::Backward, 2 + 2)] {
            let cand = splice_basic(&g, &d, l, dir).unwrap();
            assert!(cand.accounting_matches());
            assert_eq!(cand.measured_length(), 6 - dropped + 1 + 0 + 2);
        }
    }

    #[test]
    fn fan_near_formula() {
        // C8 on 0..7, vertex 8 on 0 and 4; edges 1-6 and 2-6 share w = 6
        let mut edges: Vec<(usize, usize)> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
        edges.extend([(8, 0), (8, 4), (1, 6), (2, 6)]);
        let g = Graph::from_edges(9, &edges).unwrap();
        let c = Cycle::new(&g, (0..8).collect()).unwrap();
        let d = decompose(&g, &c, &Path::new(&g, vec![8]).unwrap()).unwrap();
        let ups = intermediate_paths(&g, &d, 0, 1, 0).unwrap();
        assert_eq!(ups.len(), 2);
        let near = rewire_two_edges(&g, &d, &ups[0], &ups[1], PairVariant::FanNear).unwrap();
        assert!(near.accounting_matches());
        assert_eq!(near.claimed_length, 8 - 1 - 2 + 0 + 3);
        let far = rewire_two_edges(&g, &d, &ups[1], &ups[0], PairVariant::FanFar).unwrap();
        assert!(far.accounting_matches());
        assert_eq!(far.claimed_length, 8 - 2 - 2 + 0 + 3);
        assert_eq!(
            rewire_two_edges(&g, &d, &ups[0], &ups[1], PairVariant::Crossed),
            Err(ExtensionError::PatternMismatch(PairVariant::Crossed))
        );
    }

    #[test]
    fn crossed_and_parallel_formulas() {
        // C10 on 0..9, vertex 10 on 0 and 5; crossing edges 1-8, 3-6 and parallel 1-6, 3-8
        let base: Vec<(usize, usize)> = (0..10).map(|i| (i, (i + 1) % 10)).collect();
        for (extra, variant) in [([(1, 8), (3, 6)], PairVariant::Crossed), ([(1, 6), (3, 8)], PairVariant::Parallel)] {
            let mut edges = base.clone();
            edges.extend([(10, 0), (10, 5)]);
            edges.extend(extra);
            let g = Graph::from_edges(11, &edges).unwrap();
            let c = Cycle::new(&g, (0..10).collect()).unwrap();
            let d = decompose(&g, &c, &Path::new(&g, vec![10]).unwrap()).unwrap();
            let ups = intermediate_paths(&g, &d, 0, 1, 0).unwrap();
            assert_eq!(ups.len(), 2);
            let cand = rewire_two_edges(&g, &d, &ups[0], &ups[1], variant).unwrap();
            assert!(cand.accounting_matches(), "{cand:?}");
            if variant == PairVariant::Crossed {
                assert_eq!(cand.claimed_length, 10 - 2 - 1 - 2 + 0 + 4);
            }
        }
    }

    #[test]
    fn chord_rewire_lengthens_a_short_cycle() {
        // C6 on 0..5 with vertex 6 on 0 and 2 and chord 1-3
        let mut edges: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        edges.extend([(6, 0), (6, 2), (1, 3)]);
        let g = Graph::from_edges(7, &edges).unwrap();
        let c = Cycle::new(&g, (0..6).collect()).unwrap();
        let d = decompose(&g, &c, &Path::new(&g, vec![6]).unwrap()).unwrap();
        let cands = claim_rewires(&g, &d);
        all_accounted(&cands);
        let best = cands.iter().map(|c| c.measured_length()).max().unwrap();
        assert_eq!(best, 7);
        assert_eq!(circumference(&g).length, 7);
    }

    #[test]
    fn no_adjacency_no_rewires() {
        let lone = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 0), (5, 2)]).unwrap();
        let c5 = Cycle::new(&lone, (0..5).collect()).unwrap();
        let d = decompose(&lone, &c5, &Path::new(&lone, vec![5]).unwrap()).unwrap();
        assert!(claim_rewires(&lone, &d).is_empty());
    }

    #[test]
    fn insertion_on_triangle_of_k5() {
        let g = Graph::complete(5);
        let c = Cycle::new(&g, vec![0, 1, 2]).unwrap();
        let d = decompose(&g, &c, &Path::new(&g, vec![3, 4]).unwrap()).unwrap();
        let cand = insert_path(&g, &d, 0).unwrap();
        assert_eq!(cand.measured_length(), 5);
        assert!(cand.accounting_matches());
    }
}
