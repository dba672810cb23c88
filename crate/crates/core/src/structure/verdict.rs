use crate::graph::{Cycle, Path, Vertex};
use serde::{Deserialize, Serialize};

/// Which checked inequality a verdict belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LemmaId {
    /// `|C|` against `δ`, `σ₁`, `σ₂`, `p̄` when the path ends see different cycle vertices.
    UnequalEndsLength,
    /// `|I_a| + |I_b| ≥ 2p̄ + 2|L| + 4` for an intermediate path `L`.
    IntermediatePathSum,
    /// `|I_a| + |I_b| ≥ 2p̄ + i + 5` when `Υ(I_a, I_b)` is `i ≤ 3` edges.
    EdgeCountSum,
    /// `|I_a| + |I_b| ≥ 2p̄ + 8` when `Υ(I_a, I_b)` holds two independent edges.
    IndependentEdgesSum,
    /// `|C| ≥ κ(δ + 1)` or some longest outside path has both ends attached twice.
    LongCycleOrAttachedPath,
    /// Interior vertices close to their segment starts (or ends) are non-adjacent.
    ShortChordAbsent,
    /// With `ξ_a⁻ξ_b⁺ ∈ E`, vertices just after `ξ_f` avoid `ξ_a` and `ξ_b`.
    CrossHopAbsent,
    /// `|I_i| ≥ 2`, and `≥ p̄ + 2` when the ends of `I_i` attach to both path ends.
    SegmentFloor,
    PointPairSumCap,
    PointPairSumForcesRest,
    PointLongSegmentForcesRest,
    PointFewLongSegments,
    PointLongSegmentsEqual,
    EdgePairSumCap,
    EdgePairSumForcesRest,
    EdgeLongSegmentForcesRest,
    EdgeFewLongSegments,
    EdgeLongSegmentsEqual,
}

impl LemmaId {
    pub const ALL: [LemmaId; 18] = [
        LemmaId::UnequalEndsLength,
        LemmaId::IntermediatePathSum,
        LemmaId::EdgeCountSum,
        LemmaId::IndependentEdgesSum,
        LemmaId::LongCycleOrAttachedPath,
        LemmaId::ShortChordAbsent,
        LemmaId::CrossHopAbsent,
        LemmaId::SegmentFloor,
        LemmaId::PointPairSumCap,
        LemmaId::PointPairSumForcesRest,
        LemmaId::PointLongSegmentForcesRest,
        LemmaId::PointFewLongSegments,
        LemmaId::PointLongSegmentsEqual,
        LemmaId::EdgePairSumCap,
        LemmaId::EdgePairSumForcesRest,
        LemmaId::EdgeLongSegmentForcesRest,
        LemmaId::EdgeFewLongSegments,
        LemmaId::EdgeLongSegmentsEqual,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LemmaId::UnequalEndsLength => "unequal_ends_length",
            LemmaId::IntermediatePathSum => "intermediate_path_sum",
            LemmaId::EdgeCountSum => "edge_count_sum",
            LemmaId::IndependentEdgesSum => "independent_edges_sum",
            LemmaId::LongCycleOrAttachedPath => "long_cycle_or_attached_path",
            LemmaId::ShortChordAbsent => "short_chord_absent",
            LemmaId::CrossHopAbsent => "cross_hop_absent",
            LemmaId::SegmentFloor => "segment_floor",
            LemmaId::PointPairSumCap => "point_pair_sum_cap",
            LemmaId::PointPairSumForcesRest => "point_pair_sum_forces_rest",
            LemmaId::PointLongSegmentForcesRest => "point_long_segment_forces_rest",
            LemmaId::PointFewLongSegments => "point_few_long_segments",
            LemmaId::PointLongSegmentsEqual => "point_long_segments_equal",
            LemmaId::EdgePairSumCap => "edge_pair_sum_cap",
            LemmaId::EdgePairSumForcesRest => "edge_pair_sum_forces_rest",
            LemmaId::EdgeLongSegmentForcesRest => "edge_long_segment_forces_rest",
            LemmaId::EdgeFewLongSegments => "edge_few_long_segments",
            LemmaId::EdgeLongSegmentsEqual => "edge_long_segments_equal",
        }
    }
}

impl std::fmt::Display for LemmaId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Direction of the checked inequality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    /// `observed ≥ required`.
    AtLeast,
    /// `observed ≤ required`.
    AtMost,
}

/// Where a verdict was evaluated and which vertices it concerns.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictWitness {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cycle: Option<Cycle>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub path: Option<Path>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub vertices: Vec<Vertex>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaVerdict {
    pub lemma: LemmaId,
    pub hypothesis_met: bool,
    pub bound_required: i64,
    pub bound_observed: i64,
    pub relation: Relation,
    pub holds: bool,
    pub witness: VerdictWitness,
}

impl LemmaVerdict {
    pub fn new(lemma: LemmaId, required: i64, observed: i64, relation: Relation, witness: VerdictWitness) -> Self {
        let holds = match relation {
            Relation::AtLeast => observed >= required,
            Relation::AtMost => observed <= required,
        };
        LemmaVerdict { lemma, hypothesis_met: true, bound_required: required, bound_observed: observed, relation, holds, witness }
    }

    pub fn vacuous(lemma: LemmaId, witness: VerdictWitness) -> Self {
        LemmaVerdict {
            lemma,
            hypothesis_met: false,
            bound_required: 0,
            bound_observed: 0,
            relation: Relation::AtLeast,
            holds: true,
            witness,
        }
    }

    pub fn is_violation(&self) -> bool {
        !self.holds
    }

    /// One JSON line tagged with the host graph.
    pub fn to_json_line(&self, graph6: &str) -> String {
        #[derive(Serialize)]
        struct Line<'a> {
            lemma: LemmaId,
            graph6: &'a str,
            hypothesis_met: bool,
            bound_required: i64,
            bound_observed: i64,
            relation: Relation,
            holds: bool,
            witness: &'a VerdictWitness,
        }
        serde_json::to_string(&Line {
            lemma: self.lemma,
            graph6,
            hypothesis_met: self.hypothesis_met,
            bound_required: self.bound_required,
            bound_observed: self.bound_observed,
            relation: self.relation,
            holds: self.holds,
            witness: &self.witness,
        })
        .expect("verdicts serialize")
    }
}
