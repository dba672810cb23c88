//! Elementary segments of a longest cycle, intermediate paths between them,
//! and executable forms of the segment inequalities.

mod checks;
mod decomposition;
mod suite;
mod verdict;

pub use checks::{
    check_claims_1_2, check_claims_3_4, check_lemma1, check_lemma2, check_lemma3, check_lemma3_capped, check_voss,
    Checker, CycleAlternative, VossError, ENUMERATION_CAP,
};
pub use decomposition::{decompose, has_independent_pair, intermediate_paths, IntermediatePath, SegmentDecomposition, StructureError};
pub use suite::{run_suite, SuiteConfig, SuiteOutcome};
pub use verdict::{LemmaId, LemmaVerdict, Relation, VerdictWitness};
