use super::decomposition::{decompose, has_independent_pair, intermediate_paths, SegmentDecomposition, StructureError};
use super::verdict::{LemmaId, LemmaVerdict, Relation, VerdictWitness};
use crate::graph::{bit, mask_iter, Cycle, Graph, Path, Vertex};
use crate::invariants::{
    circumference, connectivity, enumerate_longest_cycles, enumerate_longest_paths_within, is_hamiltonian,
    longest_path_between, longest_path_within, min_degree, InvariantReport,
};
use crate::rational::ExactRational;
use thiserror::Error;

/// Longest cycles and longest outside paths listed per graph before a check
/// falls back to the first ones found.
pub const ENUMERATION_CAP: usize = 10_000;

fn context(c: &Cycle, p: &Path) -> VerdictWitness {
    VerdictWitness { cycle: Some(c.clone()), path: Some(p.clone()), vertices: Vec::new() }
}

/// Per-graph data shared by the pair checks. In strict mode every `(C, P)`
/// is first confirmed to be a longest cycle and a longest path of `G \ C`.
#[derive(Debug, Clone)]
pub struct Checker<'g> {
    g: &'g Graph,
    delta: usize,
    longest_cycle: usize,
    strict: bool,
}

impl<'g> Checker<'g> {
    pub fn strict(g: &'g Graph) -> Self {
        Checker { g, delta: min_degree(g), longest_cycle: circumference(g).length, strict: true }
    }

    /// Skips the extremality checks; the caller vouches for them.
    pub fn trusting(g: &'g Graph, report: &InvariantReport) -> Self {
        Checker { g, delta: report.delta, longest_cycle: report.circumference, strict: false }
    }

    pub fn graph(&self) -> &'g Graph {
        self.g
    }

    fn require_extreme(&self, c: &Cycle, p: &Path) -> Result<(), StructureError> {
        if !self.strict {
            return Ok(());
        }
        if c.len() != self.longest_cycle {
            return Err(StructureError::CycleNotLongest { found: c.len(), longest: self.longest_cycle });
        }
        let outside = self.g.vertex_mask() & !c.mask();
        let longest = longest_path_within(self.g, outside).map_or(0, |q| q.len());
        if p.len() != longest {
            return Err(StructureError::PathNotLongest { found: p.len(), longest });
        }
        Ok(())
    }

    /// Length bound for a path whose ends see different cycle vertices.
    pub fn lemma1(&self, c: &Cycle, p: &Path) -> Result<LemmaVerdict, StructureError> {
        let d = decompose(self.g, c, p)?;
        self.require_extreme(c, p)?;
        Ok(self.lemma1_on(&d))
    }

    pub fn lemma1_on(&self, d: &SegmentDecomposition) -> LemmaVerdict {
        let w = context(&d.cycle, &d.path);
        let (nx, ny) = (d.nx.count_ones(), d.ny.count_ones());
        if d.p_bar < 1 || nx < 2 || ny < 2 || d.nx == d.ny {
            return LemmaVerdict::vacuous(LemmaId::UnequalEndsLength, w);
        }
        let delta = self.delta as i64;
        let p = d.p_bar as i64;
        let required = if d.p_bar == 1 {
            3 * delta + d.sigma1.max(d.sigma2) as i64 - 1
        } else {
            (2 * p + 8).max(4 * delta - 2 * p)
        };
        LemmaVerdict::new(LemmaId::UnequalEndsLength, required, d.cycle.len() as i64, Relation::AtLeast, w)
    }

    /// Segment-pair bounds when both path ends see the same cycle vertices.
    pub fn lemma2(&self, c: &Cycle, p: &Path) -> Result<Vec<LemmaVerdict>, StructureError> {
        let d = decompose(self.g, c, p)?;
        self.require_extreme(c, p)?;
        Ok(self.lemma2_on(&d))
    }

    pub fn lemma2_on(&self, d: &SegmentDecomposition) -> Vec<LemmaVerdict> {
        let w = context(&d.cycle, &d.path);
        if !d.equal_ends() || d.nx.count_ones() < 2 {
            return vec![LemmaVerdict::vacuous(LemmaId::IntermediatePathSum, w)];
        }
        let p = d.p_bar as i64;
        let mut out = Vec::new();
        for a in 0..d.s() {
            for b in a + 1..d.s() {
                let ups = intermediate_paths(self.g, d, a, b, usize::MAX).expect("valid segment pair");
                let observed = (d.segment_len(a) + d.segment_len(b)) as i64;
                let with = |vs: Vec<Vertex>| VerdictWitness { vertices: vs, ..w.clone() };
                for l in &ups {
                    out.push(LemmaVerdict::new(
                        LemmaId::IntermediatePathSum,
                        2 * p + 2 * l.len() as i64 + 4,
                        observed,
                        Relation::AtLeast,
                        with(l.path.vertices().to_vec()),
                    ));
                }
                if ups.is_empty() || !ups.iter().all(|l| l.is_edge()) {
                    continue;
                }
                let ends: Vec<Vertex> = ups.iter().flat_map(|l| [l.z(), l.w()]).collect();
                let i = ups.len() as i64;
                if i <= 3 {
                    out.push(LemmaVerdict::new(LemmaId::EdgeCountSum, 2 * p + i + 5, observed, Relation::AtLeast, with(ends.clone())));
                }
                if has_independent_pair(&ups).expect("all edges") {
                    out.push(LemmaVerdict::new(LemmaId::IndependentEdgesSum, 2 * p + 8, observed, Relation::AtLeast, with(ends)));
                }
            }
        }
        out
    }

    /// Non-adjacency consequences of extremality when both path ends see the
    /// same cycle vertices. One verdict per rule that has eligible vertices;
    /// the observed count is the number of forbidden adjacencies present.
    pub fn claims_1_2(&self, d: &SegmentDecomposition) -> Vec<LemmaVerdict> {
        let mut out = Vec::new();
        if !d.equal_ends() {
            return out;
        }
        let g = self.g;
        let s = d.s();
        let slack = d.p_bar + 2;
        let mut eligible = 0;
        let mut bad = Vec::new();
        for a in 0..s {
            for b in a + 1..s {
                let (xa, xb) = (d.xi_at(a as isize), d.xi_at(b as isize));
                let (xa1, xb1) = (d.xi_at(a as isize + 1), d.xi_at(b as isize + 1));
                for &y in &d.interiors[a] {
                    for &z in &d.interiors[b] {
                        let near = d.fwd(xa, y) + d.fwd(xb, z) <= slack;
                        let far = d.fwd(y, xa1) + d.fwd(z, xb1) <= slack;
                        if near || far {
                            eligible += 1;
                            if g.has_edge(y, z) {
                                bad.extend([y, z]);
                            }
                        }
                    }
                }
            }
        }
        if eligible > 0 {
            let w = VerdictWitness { vertices: bad, ..context(&d.cycle, &d.path) };
            out.push(LemmaVerdict::new(LemmaId::ShortChordAbsent, 0, (w.vertices.len() / 2) as i64, Relation::AtMost, w));
        }
        let c = &d.cycle;
        let mut eligible = 0;
        let mut bad = Vec::new();
        for a in 0..s {
            for b in 0..s {
                for f in 0..s {
                    // a, b, f distinct and met in this order walking forward from ξ_a
                    let (ob, of) = ((b + s - a) % s, (f + s - a) % s);
                    if ob == 0 || of == 0 || ob >= of {
                        continue;
                    }
                    let (xa, xb, xf) = (d.xi[a], d.xi[b], d.xi[f]);
                    if !g.has_edge(c.pred(xa), c.succ(xb)) {
                        continue;
                    }
                    for &y in &d.interiors[f] {
                        if d.fwd(xf, y) > d.p_bar + 1 {
                            continue;
                        }
                        eligible += 1;
                        for t in [xa, xb] {
                            if g.has_edge(y, t) {
                                bad.extend([y, t]);
                            }
                        }
                    }
                }
            }
        }
        if eligible > 0 {
            let w = VerdictWitness { vertices: bad, ..context(&d.cycle, &d.path) };
            out.push(LemmaVerdict::new(LemmaId::CrossHopAbsent, 0, (w.vertices.len() / 2) as i64, Relation::AtMost, w));
        }
        out
    }

    /// Every segment of an extreme cycle has length at least 2, and at least
    /// `p̄ + 2` when its ends attach to different path ends or one end
    /// attaches to both. Observed: number of segments under their floor.
    pub fn segment_floor(&self, d: &SegmentDecomposition) -> LemmaVerdict {
        let s = d.s();
        let mut short = Vec::new();
        if s >= 2 {
            for i in 0..s {
                let (u, v) = (d.xi[i], d.xi_at(i as isize + 1));
                let both = d.nx & d.ny;
                let only_x = d.nx & !d.ny;
                let only_y = d.ny & !d.nx;
                let crosses = (only_x & bit(u) != 0 && only_y & bit(v) != 0) || (only_y & bit(u) != 0 && only_x & bit(v) != 0);
                let floor = if (both & (bit(u) | bit(v))) != 0 || crosses { d.p_bar + 2 } else { 2 };
                if d.segment_len(i) < floor {
                    short.push(u);
                }
            }
        }
        let w = VerdictWitness { vertices: short, ..context(&d.cycle, &d.path) };
        if s < 2 {
            return LemmaVerdict::vacuous(LemmaId::SegmentFloor, w);
        }
        LemmaVerdict::new(LemmaId::SegmentFloor, 0, w.vertices.len() as i64, Relation::AtMost, w)
    }
}

/// Strict single-pair form of the unequal-ends length bound.
pub fn check_lemma1(g: &Graph, c: &Cycle, p: &Path) -> Result<LemmaVerdict, StructureError> {
    Checker::strict(g).lemma1(c, p)
}

/// Strict single-pair form of the segment-pair bounds.
pub fn check_lemma2(g: &Graph, c: &Cycle, p: &Path) -> Result<Vec<LemmaVerdict>, StructureError> {
    Checker::strict(g).lemma2(c, p)
}

/// Strict form of the non-adjacency rules for one decomposition.
pub fn check_claims_1_2(g: &Graph, d: &SegmentDecomposition) -> Result<Vec<LemmaVerdict>, StructureError> {
    let checker = Checker::strict(g);
    checker.require_extreme(&d.cycle, &d.path)?;
    Ok(checker.claims_1_2(d))
}

/// Outcome of the whole-graph check that every longest cycle is long or has
/// a longest outside path attached twice at both ends.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleAlternative {
    pub verdict: LemmaVerdict,
    /// True when a cap cut the enumeration short.
    pub sampled: bool,
}

/// Observed: number of longest cycles satisfying one of the alternatives;
/// required: number of longest cycles examined.
pub fn check_lemma3(g: &Graph) -> LemmaVerdict {
    check_lemma3_capped(g, ENUMERATION_CAP).verdict
}

pub fn check_lemma3_capped(g: &Graph, cap: usize) -> CycleAlternative {
    if !g.is_connected() {
        return CycleAlternative { verdict: LemmaVerdict::vacuous(LemmaId::LongCycleOrAttachedPath, VerdictWitness::default()), sampled: false };
    }
    let floor = connectivity(g) * (min_degree(g) + 1);
    let cycles = enumerate_longest_cycles(g, cap);
    let mut sampled = cycles.truncated;
    let mut good = 0;
    let mut first_bad = None;
    for c in &cycles.items {
        let outside = g.vertex_mask() & !c.mask();
        let ok = c.len() >= floor || outside == 0 || {
            let paths = enumerate_longest_paths_within(g, outside, cap);
            sampled |= paths.truncated;
            paths.items.iter().any(|p| {
                let cm = c.mask();
                (g.neighbor_mask(p.first()) & cm).count_ones() >= 2 && (g.neighbor_mask(p.last()) & cm).count_ones() >= 2
            })
        };
        if ok {
            good += 1;
        } else if first_bad.is_none() {
            first_bad = Some(c.clone());
        }
    }
    let w = VerdictWitness { cycle: first_bad, path: None, vertices: Vec::new() };
    CycleAlternative {
        verdict: LemmaVerdict::new(LemmaId::LongCycleOrAttachedPath, cycles.items.len() as i64, good, Relation::AtLeast, w),
        sampled,
    }
}

/// Segment-length rules that follow when `τ > 1`, `c ≤ 2δ + 3` and the
/// longest outside path is a single vertex with `s = δ` (point family) or a
/// single edge with equal end neighborhoods and `s = δ - 1` (edge family).
pub fn check_claims_3_4(report: &InvariantReport, d: &SegmentDecomposition) -> Vec<LemmaVerdict> {
    let family = match d.p_bar {
        0 => [
            LemmaId::PointPairSumCap,
            LemmaId::PointPairSumForcesRest,
            LemmaId::PointLongSegmentForcesRest,
            LemmaId::PointFewLongSegments,
            LemmaId::PointLongSegmentsEqual,
        ],
        1 => [
            LemmaId::EdgePairSumCap,
            LemmaId::EdgePairSumForcesRest,
            LemmaId::EdgeLongSegmentForcesRest,
            LemmaId::EdgeFewLongSegments,
            LemmaId::EdgeLongSegmentsEqual,
        ],
        _ => return Vec::new(),
    };
    let w = context(&d.cycle, &d.path);
    let delta = report.delta;
    let s = d.s();
    let gated = report.toughness > ExactRational::ONE
        && report.circumference <= 2 * delta + 3
        && d.cycle.len() == report.circumference
        && s >= 2
        && if d.p_bar == 0 { s == delta } else { d.equal_ends() && s + 1 == delta };
    if !gated {
        return family.iter().map(|&id| LemmaVerdict::vacuous(id, w.clone())).collect();
    }
    // base segment length, pair cap and long-segment threshold for the family
    let base = d.p_bar + 2;
    let cap = 2 * base + 3;
    let long = base + 1;
    let lens: Vec<usize> = (0..s).map(|i| d.segment_len(i)).collect();
    let mut out = Vec::new();
    let max_pair = (0..s).flat_map(|i| (i + 1..s).map(move |j| (i, j))).map(|(i, j)| lens[i] + lens[j]).max().expect("s >= 2");
    out.push(LemmaVerdict::new(family[0], cap as i64, max_pair as i64, Relation::AtMost, w.clone()));

    let mut hit = false;
    let mut off = 0;
    for i in 0..s {
        for j in i + 1..s {
            if lens[i] + lens[j] == cap {
                hit = true;
                off += (0..s).filter(|&k| k != i && k != j && lens[k] != base).count();
            }
        }
    }
    out.push(if hit {
        LemmaVerdict::new(family[1], 0, off as i64, Relation::AtMost, w.clone())
    } else {
        LemmaVerdict::vacuous(family[1], w.clone())
    });

    let top = cap - base;
    let mut hit = false;
    let mut off = 0;
    for i in 0..s {
        if lens[i] == top {
            hit = true;
            off += (0..s).filter(|&k| k != i && lens[k] != base).count();
        }
    }
    out.push(if hit {
        LemmaVerdict::new(family[2], 0, off as i64, Relation::AtMost, w.clone())
    } else {
        LemmaVerdict::vacuous(family[2], w.clone())
    });

    let longs: Vec<usize> = lens.iter().copied().filter(|&l| l >= long).collect();
    out.push(LemmaVerdict::new(family[3], 3, longs.len() as i64, Relation::AtMost, w.clone()));
    out.push(if longs.len() >= 3 {
        let off = longs.iter().filter(|&&l| l != long).count();
        LemmaVerdict::new(family[4], 0, off as i64, Relation::AtMost, w)
    } else {
        LemmaVerdict::vacuous(family[4], w)
    });
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VossError {
    #[error("the graph is not hamiltonian")]
    NotHamiltonian,
    #[error("expected {expected} witness vertices, got {found}")]
    WrongCount { expected: usize, found: usize },
    #[error("witness vertex {0} is not in the graph")]
    OutOfRange(Vertex),
    #[error("witness vertex {0} repeats")]
    Repeated(Vertex),
    #[error("witness vertex {vertex} has degree {degree} < {t}")]
    LowDegree { vertex: Vertex, degree: usize, t: usize },
}

/// In a hamiltonian graph with `t` vertices of degree at least `t`, checks
/// that every vertex pair is joined by a path of length at least `t`.
pub fn check_voss(g: &Graph, t: usize, witnesses: &[Vertex]) -> Result<bool, VossError> {
    if !is_hamiltonian(g).unwrap_or(false) {
        return Err(VossError::NotHamiltonian);
    }
    if witnesses.len() != t {
        return Err(VossError::WrongCount { expected: t, found: witnesses.len() });
    }
    let mut seen = 0u64;
    for &v in witnesses {
        if v >= g.n() {
            return Err(VossError::OutOfRange(v));
        }
        if seen & bit(v) != 0 {
            return Err(VossError::Repeated(v));
        }
        seen |= bit(v);
        if g.degree(v) < t {
            return Err(VossError::LowDegree { vertex: v, degree: g.degree(v), t });
        }
    }
    Ok((0..g.n()).all(|u| mask_iter(g.vertex_mask() & !((bit(u) << 1) - 1)).all(|v| longest_path_between(g, u, v).is_some_and(|l| l >= t))))
}
