//! Goodness decisions, perfect tessellability, the forbidden-subgraph scan
//! and the replayable verification suites.

mod gtr;
mod perfect;
mod scan;
mod verify;

pub use gtr::{gtr, gtr_with_cover, DecidedBy, GtrVerdict};
pub use perfect::{forbidden_free, perfect_tessellable, ForbiddenCheck, OddCycleRule, PerfectReport};
pub use scan::{
    conjecture_scan, conjecture_scan_with, Counterexample, InterpretationReport, ScanReport,
    SizeCount, SCAN_MAX_N,
};
pub use verify::{
    cons4_brackets, verify_theorems, verify_with_limit, CheckRecord, Cons4Brackets, Profile,
    Status, Suite, VerifyReport,
};

#[cfg(test)]
mod tests;
