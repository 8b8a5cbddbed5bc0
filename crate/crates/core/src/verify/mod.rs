//! Identity checks, seeded sweeps and their reports.

mod decompose;
mod rep_check;
mod report;
mod sweep;
mod theorem;

pub use decompose::{decompose_matrix, parse_matrix_json, BlockReport, DecompositionReport};
pub use rep_check::{check_representation, RepCheckReport, HOMOMORPHISM_PAIRS, INTERTWINER_PAIRS};
pub use report::{emit_report, parse_report, ReportFormat};
pub use sweep::{
    check_curve, run_sweep, run_trial, trial_seed, Elapsed, Report, Summary, SweepConfig, SweepMode, TrialReport,
};
pub use theorem::{check_dimension_identity, check_main_theorem, seeded_model, MainTheoremCheck};

/// Process exit code for a run whose checks all held.
pub const EXIT_PASS: i32 = 0;
/// Process exit code when at least one identity failed.
pub const EXIT_MISMATCH: i32 = 1;
/// Process exit code for invalid input or configuration.
pub const EXIT_INVALID: i32 = 2;
