//! Exact `δ`, `κ`, `τ` and `c` with witnesses, plus brute-force oracles.

mod connectivity;
mod cycles;
mod toughness;

pub use connectivity::{connectivity, local_connectivity};
pub use cycles::{
    circumference, circumference_dp, enumerate_longest_cycles, enumerate_longest_paths_within, is_dominating_cycle,
    is_hamiltonian, longest_path_between, longest_path_outside, longest_path_within, Circumference, Enumerated,
    HamiltonianError,
};
pub use toughness::{independence_number, independence_number_in, is_t_tough, toughness, toughness_exhaustive, Toughness};

use crate::graph::{Cycle, Graph, Vertex};
use crate::rational::ExactRational;
use serde::{Deserialize, Serialize};

pub fn min_degree(g: &Graph) -> usize {
    (0..g.n()).map(|v| g.degree(v)).min().unwrap_or(0)
}

/// The invariant vector of one graph with its witnesses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub n: usize,
    pub delta: usize,
    pub kappa: usize,
    pub circumference: usize,
    pub circumference_witness: Cycle,
    pub toughness: ExactRational,
    pub toughness_witness: Option<Vec<Vertex>>,
    /// False below 3 vertices.
    pub hamiltonian: bool,
}

impl InvariantReport {
    pub fn compute(g: &Graph) -> Self {
        let c = circumference(g);
        let t = toughness(g);
        InvariantReport {
            n: g.n(),
            delta: min_degree(g),
            kappa: connectivity(g),
            circumference: c.length,
            hamiltonian: g.n() >= 3 && c.length == g.n(),
            circumference_witness: c.witness,
            toughness: t.value,
            toughness_witness: t.witness,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn min_degrees() {
        assert_eq!(min_degree(&Graph::complete(4)), 3);
        assert_eq!(min_degree(&Graph::petersen()), 3);
        assert_eq!(min_degree(&Graph::star(4)), 1);
    }

    #[test]
    fn petersen_report() {
        let r = InvariantReport::compute(&Graph::petersen());
        assert_eq!((r.n, r.delta, r.kappa, r.circumference), (10, 3, 3, 9));
        assert_eq!(r.toughness, ExactRational::new(4, 3).unwrap());
        assert!(!r.hamiltonian);
        let json = serde_json::to_value(&r).unwrap();
        for key in ["n", "delta", "kappa", "circumference", "circumference_witness", "toughness", "toughness_witness", "hamiltonian"] {
            assert!(json.get(key).is_some(), "{key}");
        }
        assert_eq!(json["toughness"]["den"], 3);
        assert_eq!(json["circumference_witness"].as_array().unwrap().len(), 9);
    }

    #[test]
    fn complete_report() {
        let r = InvariantReport::compute(&Graph::complete(5));
        assert_eq!(r.toughness_witness, None);
        assert!(r.hamiltonian);
        assert_eq!(serde_json::to_value(&r).unwrap()["toughness"]["infinite"], true);
    }
}
