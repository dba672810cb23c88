//! Small-graph enumeration, bound verification and parallel sweeps.

mod enumerate;
mod sweep;
mod verify;

pub use enumerate::{
    enumerate_connected_graphs, enumerate_connected_graphs_with, par_for_each_connected_graph, EnumerationError,
    EnumerationOptions, ENUMERATION_SCOPE,
};
pub use sweep::{
    sweep, CountRow, LemmaCounts, LemmaRow, RejectedRecord, SweepConfig, SweepError, SweepReport, SweepSource,
    TheoremCounts, DEFAULT_MAX_N, REPORT_SCHEMA,
};
pub use verify::{
    verify, verify_theorem1, verify_theorem_a, verify_theorem_b, verify_with_oracles, Status, TheoremId, TheoremVerdict,
};
