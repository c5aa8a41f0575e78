//! Residual checks, transcription comparison and the catalog audit.

pub mod audit;
pub mod bindings;
pub mod compare;
pub mod residual;
pub mod truncated;

pub use bindings::{nondegenerate_bindings, random_binding, seed_for, to_f64_binding};
pub use compare::{compare_systems, ComparisonReport, EquationStatus, TermDiff};
pub use residual::{fd_eval_config, residual_exact, residual_exact_shifted, residual_numeric, ResidualMode, NUMERIC_RESIDUAL_BOUND, ResidualReport, Violation};
pub use truncated::TruncatedSeries;
pub use audit::{audit, AuditEntry, AuditOptions, AuditReport, ReferenceSet, SolutionAudit, TranscriptionCheck};
