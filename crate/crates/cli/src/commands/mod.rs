//! Command implementations; each returns a [`crate::report::Report`] so the
//! binary and the test suites share one code path.

pub mod compute;
pub mod decimate;
pub mod derive;
pub mod series;
pub mod table;
pub mod verify;
