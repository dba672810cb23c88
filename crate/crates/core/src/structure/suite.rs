use super::checks::{check_claims_3_4, check_lemma3_capped, Checker, ENUMERATION_CAP};
use super::decomposition::{decompose, StructureError};
use super::verdict::LemmaVerdict;
use crate::graph::Graph;
use crate::invariants::{enumerate_longest_cycles, enumerate_longest_paths_within, InvariantReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    pub cycle_cap: usize,
    pub path_cap: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { cycle_cap: ENUMERATION_CAP, path_cap: ENUMERATION_CAP }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub verdicts: Vec<LemmaVerdict>,
    /// `(C, P)` pairs examined.
    pub pairs: usize,
    /// Set when an enumeration hit its cap.
    pub sampled: bool,
}

/// Runs every segment check over every longest cycle `C` (both orientations
/// for the orientation-dependent rules) and every longest path `P` of
/// `G \ C`, plus the whole-graph cycle alternative. Disconnected graphs and
/// graphs without a proper cycle yield no pair verdicts, and neither do
/// pairs where no end of `P` sees `C`.
pub fn run_suite(g: &Graph, report: &InvariantReport, cfg: SuiteConfig) -> SuiteOutcome {
    let mut out = SuiteOutcome::default();
    if !g.is_connected() {
        return out;
    }
    let alt = check_lemma3_capped(g, cfg.cycle_cap.max(cfg.path_cap));
    out.sampled |= alt.sampled;
    out.verdicts.push(alt.verdict);
    if report.circumference < 3 {
        return out;
    }
    let checker = Checker::trusting(g, report);
    let cycles = enumerate_longest_cycles(g, cfg.cycle_cap);
    out.sampled |= cycles.truncated;
    for c in &cycles.items {
        let outside = g.vertex_mask() & !c.mask();
        if outside == 0 {
            continue;
        }
        let paths = enumerate_longest_paths_within(g, outside, cfg.path_cap);
        out.sampled |= paths.truncated;
        for p in &paths.items {
            // both ends may see only the path itself
            let d = match decompose(g, c, p) {
                Ok(d) => d,
                Err(StructureError::NoAttachments) => continue,
                Err(e) => unreachable!("longest cycle and outside path: {e}"),
            };
            out.pairs += 1;
            out.verdicts.push(checker.lemma1_on(&d));
            out.verdicts.extend(checker.lemma2_on(&d));
            out.verdicts.push(checker.segment_floor(&d));
            out.verdicts.extend(check_claims_3_4(report, &d));
            out.verdicts.extend(checker.claims_1_2(&d));
            let back = decompose(g, &c.reversed(), p).expect("same pair reversed");
            out.verdicts.extend(checker.claims_1_2(&back));
        }
    }
    out
}
