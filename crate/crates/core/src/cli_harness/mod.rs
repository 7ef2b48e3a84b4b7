//! Interchange formats and the fixture suite behind the command-line tool.

pub mod bfile;
pub mod fixtures;
pub mod report;

pub use bfile::{compare, BFile, BFileError, Verdict};
pub use fixtures::{fixtures, run_fixture, run_fixture_suite, Fixture, FixtureOutcome, SuiteSummary};
pub use report::{OdeJson, RecurrenceJson, Report};
