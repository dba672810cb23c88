use crate::graph::{is_isomorphic, write_graph6, Graph};
use crate::invariants::{circumference, circumference_dp, connectivity, min_degree, toughness, toughness_exhaustive};
use crate::rational::ExactRational;
use serde::{Deserialize, Serialize};
use std::cell::OnceCell;
use std::fmt;
use std::str::FromStr;

/// The three circumference bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TheoremId {
    /// 2-connected: `c ≥ min{n, 2δ}`.
    A,
    /// 1-tough: `c ≥ min{n, 2δ + 2}`.
    B,
    /// `τ > 1`: `c ≥ min{n, 2δ + 4}` unless `G` is the Petersen graph.
    T1,
}

impl TheoremId {
    pub const ALL: [TheoremId; 3] = [TheoremId::A, TheoremId::B, TheoremId::T1];

    fn slack(self) -> usize {
        match self {
            TheoremId::A => 0,
            TheoremId::B => 2,
            TheoremId::T1 => 4,
        }
    }

    /// Connectivity every non-complete graph meeting the hypothesis has.
    pub fn connectivity_floor(self) -> usize {
        match self {
            TheoremId::A | TheoremId::B => 2,
            TheoremId::T1 => 3,
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TheoremId::A => "A",
            TheoremId::B => "B",
            TheoremId::T1 => "T1",
        })
    }
}

impl FromStr for TheoremId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "A" | "a" => Ok(TheoremId::A),
            "B" | "b" => Ok(TheoremId::B),
            "T1" | "t1" | "1" => Ok(TheoremId::T1),
            _ => Err(format!("unknown theorem {s:?}; expected A, B or T1")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Status {
    #[serde(rename = "holds")]
    Holds,
    /// Hypothesis unmet.
    #[serde(rename = "vacuous")]
    Vacuous,
    #[serde(rename = "exception_petersen")]
    ExceptionPetersen,
    #[serde(rename = "VIOLATION")]
    Violation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremVerdict {
    pub theorem: TheoremId,
    pub status: Status,
    /// `min{n, 2δ + k}`.
    pub bound_required: i64,
    /// `c`, absent when the hypothesis check settled the verdict first.
    pub bound_observed: Option<i64>,
    pub graph6: String,
}

/// Lazily computed invariants shared by the three predicates. Evaluation
/// runs cheapest first: `δ`, `κ`, `τ`, `c`.
pub(crate) struct Facts<'g> {
    g: &'g Graph,
    delta: OnceCell<usize>,
    kappa: OnceCell<usize>,
    tau: OnceCell<ExactRational>,
    circ: OnceCell<usize>,
    oracle: bool,
}

impl<'g> Facts<'g> {
    pub(crate) fn new(g: &'g Graph) -> Self {
        Facts { g, delta: OnceCell::new(), kappa: OnceCell::new(), tau: OnceCell::new(), circ: OnceCell::new(), oracle: false }
    }

    /// Same predicates, evaluated with the brute-force oracles.
    fn oracle(g: &'g Graph) -> Self {
        Facts { oracle: true, ..Facts::new(g) }
    }

    fn delta(&self) -> usize {
        *self.delta.get_or_init(|| min_degree(self.g))
    }

    fn kappa(&self) -> usize {
        *self.kappa.get_or_init(|| if self.oracle { connectivity_exhaustive(self.g) } else { connectivity(self.g) })
    }

    pub(crate) fn tau(&self) -> ExactRational {
        *self.tau.get_or_init(|| if self.oracle { toughness_exhaustive(self.g) } else { toughness(self.g).value })
    }

    fn circ(&self) -> usize {
        *self.circ.get_or_init(|| if self.oracle { circumference_dp(self.g) } else { circumference(self.g).length })
    }

    /// True when the cheap connectivity test already rules the hypothesis out.
    pub(crate) fn prefiltered(&self, theorem: TheoremId) -> bool {
        !self.g.is_complete() && self.kappa() < theorem.connectivity_floor()
    }

    fn hypothesis(&self, theorem: TheoremId) -> bool {
        if self.prefiltered(theorem) {
            return false;
        }
        match theorem {
            TheoremId::A => self.g.is_complete() || self.kappa() >= 2,
            TheoremId::B => self.tau() >= ExactRational::ONE,
            TheoremId::T1 => self.tau() > ExactRational::ONE,
        }
    }

    pub(crate) fn verdict(&self, theorem: TheoremId) -> TheoremVerdict {
        let n = self.g.n();
        let required = n.min(2 * self.delta() + theorem.slack()) as i64;
        let mut v = TheoremVerdict {
            theorem,
            status: Status::Vacuous,
            bound_required: required,
            bound_observed: None,
            graph6: write_graph6(self.g),
        };
        if !self.hypothesis(theorem) {
            return v;
        }
        let c = self.circ() as i64;
        v.bound_observed = Some(c);
        v.status = if c >= required {
            Status::Holds
        } else if theorem == TheoremId::T1 && is_petersen(self.g) {
            Status::ExceptionPetersen
        } else {
            Status::Violation
        };
        v
    }
}

fn is_petersen(g: &Graph) -> bool {
    g.n() == 10 && g.is_regular(3) && is_isomorphic(g, &Graph::petersen()).unwrap_or(false)
}

/// Smallest vertex set whose deletion disconnects `g`, by trying every subset.
fn connectivity_exhaustive(g: &Graph) -> usize {
    let n = g.n();
    let full = g.vertex_mask();
    for k in 0..n.saturating_sub(1) {
        let mut found = false;
        let mut s: u64 = (1u64 << k) - 1;
        while s < (1u64 << n) {
            if g.components_in(full & !s) > 1 {
                found = true;
                break;
            }
            if s == 0 {
                break;
            }
            // next subset of the same size
            let low = s & s.wrapping_neg();
            let ripple = s + low;
            s = (((ripple ^ s) >> 2) / low) | ripple;
        }
        if found {
            return k;
        }
    }
    n.saturating_sub(1)
}

pub fn verify_theorem_a(g: &Graph) -> TheoremVerdict {
    Facts::new(g).verdict(TheoremId::A)
}

pub fn verify_theorem_b(g: &Graph) -> TheoremVerdict {
    Facts::new(g).verdict(TheoremId::B)
}

pub fn verify_theorem1(g: &Graph) -> TheoremVerdict {
    Facts::new(g).verdict(TheoremId::T1)
}

pub fn verify(g: &Graph, theorem: TheoremId) -> TheoremVerdict {
    Facts::new(g).verdict(theorem)
}

/// Recomputes a verdict from the exhaustive oracles only.
pub fn verify_with_oracles(g: &Graph, theorem: TheoremId) -> TheoremVerdict {
    Facts::oracle(g).verdict(theorem)
}
