//! Library surface of the verifier: structured reports, the shipped
//! reference datasets and the command implementations (shared between the
//! binary and the test suites).

pub mod commands;
pub mod data;
pub mod report;
