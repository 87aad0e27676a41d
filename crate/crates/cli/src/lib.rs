//! Spec-file front end for the `mvstone` kernel: parsing, check execution
//! and report rendering.

pub mod report;
pub mod run;
pub mod spec;

pub use report::{CheckResult, Format, Report, Verdict};
pub use run::{run, validate, Options, UsageError};
pub use spec::{parse_spec, ParseError, SpecDocument};
