use super::{all_candidates, Construction, ExtensionError, RewireCandidate};
use crate::graph::{Cycle, Graph};
use crate::invariants::enumerate_longest_paths_within;
use crate::structure::{decompose, StructureError};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GreedyConfig {
    /// Maximum number of adopted rewirings; also capped at `n`.
    pub budget: usize,
    /// Adopt the longest candidate instead of the first longer one.
    pub best_improvement: bool,
    /// Internal vertices allowed on intermediate paths.
    pub max_internal: usize,
    /// Longest outside paths tried per iteration.
    pub path_samples: usize,
}

impl Default for GreedyConfig {
    fn default() -> Self {
        GreedyConfig { budget: usize::MAX, best_improvement: false, max_internal: 2, path_samples: 64 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GreedyOutcome {
    pub cycle: Cycle,
    pub iterations: usize,
    /// Cycle length before the first and after every adopted step.
    pub lengths: Vec<usize>,
    pub steps: Vec<Construction>,
}

/// Repeatedly replaces `start` by a strictly longer rewiring until none
/// applies or `budget` steps were taken.
pub fn greedy_extend(g: &Graph, start: &Cycle, budget: usize) -> Result<Cycle, ExtensionError> {
    greedy_extend_with(g, start, GreedyConfig { budget, ..GreedyConfig::default() }).map(|o| o.cycle)
}

pub fn greedy_extend_with(g: &Graph, start: &Cycle, cfg: GreedyConfig) -> Result<GreedyOutcome, ExtensionError> {
    if cfg.budget == 0 {
        return Err(ExtensionError::ZeroBudget);
    }
    start.validate(g).map_err(StructureError::from)?;
    if start.is_degenerate() {
        return Err(StructureError::from(crate::graph::WalkError::Degenerate(start.len())).into());
    }
    let mut cycle = start.clone();
    let mut out = GreedyOutcome { cycle: cycle.clone(), iterations: 0, lengths: vec![cycle.len()], steps: Vec::new() };
    while out.iterations < cfg.budget.min(g.n()) {
        match improve(g, &cycle, cfg)? {
            Some(cand) => {
                cycle = cand.new_cycle;
                out.iterations += 1;
                out.lengths.push(cycle.len());
                out.steps.push(cand.construction);
            }
            None => break,
        }
    }
    out.cycle = cycle;
    Ok(out)
}

fn improve(g: &Graph, c: &Cycle, cfg: GreedyConfig) -> Result<Option<RewireCandidate>, ExtensionError> {
    let outside = g.vertex_mask() & !c.mask();
    if outside == 0 {
        return Ok(None);
    }
    let mut best: Option<RewireCandidate> = None;
    for p in enumerate_longest_paths_within(g, outside, cfg.path_samples).items {
        for p in [p.reversed(), p] {
            let d = match decompose(g, c, &p) {
                Ok(d) => d,
                Err(StructureError::NoAttachments) => continue,
                Err(e) => return Err(e.into()),
            };
            for cand in all_candidates(g, &d, cfg.max_internal)? {
                let bar = best.as_ref().map_or(c.len(), |b| b.new_cycle.len());
                if cand.new_cycle.len() > bar {
                    if !cfg.best_improvement {
                        return Ok(Some(cand));
                    }
                    best = Some(cand);
                }
            }
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{circumference, enumerate_longest_cycles};

    fn five_cycles(g: &Graph) -> Vec<Cycle> {
        let mut found = Vec::new();
        let n = g.n();
        for a in 0..n {
            for b in g.neighbors(a).filter(|&b| b > a) {
                for c in g.neighbors(b).filter(|&c| c > a && c != b) {
                    for d in g.neighbors(c).filter(|&d| d > a && d != b) {
                        for e in g.neighbors(d).filter(|&e| e > b && e != c && g.has_edge(e, a)) {
                            found.push(Cycle::new(g, vec![a, b, c, d, e]).unwrap());
                        }
                    }
                }
            }
        }
        found
    }

    #[test]
    fn every_petersen_pentagon_reaches_nine() {
        let g = Graph::petersen();
        let starts = five_cycles(&g);
        assert_eq!(starts.len(), 12);
        for c in starts {
            for best_improvement in [false, true] {
                let cfg = GreedyConfig { best_improvement, ..GreedyConfig::default() };
                let out = greedy_extend_with(&g, &c, cfg).unwrap();
                assert_eq!(out.cycle.len(), 9, "{c:?} {out:?}");
                out.cycle.validate(&g).unwrap();
                assert!(out.lengths.windows(2).all(|w| w[0] < w[1]));
            }
        }
    }

    #[test]
    fn triangle_of_k5_becomes_hamiltonian() {
        let g = Graph::complete(5);
        let c = Cycle::new(&g, vec![0, 1, 2]).unwrap();
        assert_eq!(greedy_extend(&g, &c, 10).unwrap().len(), 5);
    }

    #[test]
    fn longest_cycle_is_kept() {
        let g = Graph::petersen();
        let c = enumerate_longest_cycles(&g, 1).items.remove(0);
        let out = greedy_extend_with(&g, &c, GreedyConfig::default()).unwrap();
        assert_eq!(out.cycle, c);
        assert_eq!(out.iterations, 0);
        assert_eq!(circumference(&g).length, 9);
    }

    #[test]
    fn budget_limits_steps() {
        let g = Graph::complete(8);
        let c = Cycle::new(&g, vec![0, 1, 2]).unwrap();
        assert_eq!(greedy_extend(&g, &c, 0), Err(ExtensionError::ZeroBudget));
        let out = greedy_extend_with(&g, &c, GreedyConfig { budget: 1, ..GreedyConfig::default() }).unwrap();
        assert_eq!(out.iterations, 1);
        assert!(out.cycle.len() > 3);
    }
}
