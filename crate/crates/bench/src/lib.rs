//! Benchmark harness for `adaptive-search`.
//!
//! Generates seeded datasets ([`distribution`]) and query streams
//! ([`workload`]), measures search strategies over them ([`trial`],
//! [`suite`]) and renders the results ([`report`]). All randomness flows
//! from explicit seeds through ChaCha8, so a report regenerates exactly from
//! its seeds.

pub mod distribution;
pub mod error;
pub mod report;
pub mod seed;
pub mod suite;
pub mod trial;
pub mod workload;

pub use distribution::{generate, DistributionKind, DistributionSpec};
pub use error::{BenchError, Result};
pub use report::{emit_report, parse_csv, parse_jsonl, ReportFormat};
pub use suite::{run_suite, SuiteConfig};
pub use trial::{run_trial, run_trial_on, Seeds, TrialAlgorithm, TrialRecord, TrialSamples};
pub use workload::{generate_queries, QueryMode, QuerySpec};
