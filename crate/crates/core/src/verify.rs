//! Inequality-verification harness: a corpus of test functions, checks
//! that evaluate both sides of each theorem over sweeps, and a suite
//! runner with JSON/CSV/text reporting.

pub mod checks;
pub mod config;
pub mod corpus;
pub mod report;
pub mod suite;

pub use checks::ModulusSweep;
pub use config::{ContextSpec, SuiteConfig};
pub use corpus::{build_corpus, build_entry, CorpusEntry, SmoothnessTag};
pub use report::{ReportRow, VerificationReport, SLOPE_TOL};
pub use suite::{
    dyadic_sweep, n_sweep, reports_to_csv, reports_to_json, run_suite, summary_text, SuiteOutcome,
};
