//! Exact-arithmetic engine for the "Balkans" family of continued fractions
//! `Q(j, κ, c)` and its satellite families.
//!
//! The crate is organised in five layers:
//!
//! - [`exactnum`] — big rationals, fixed-point decimal reals, combinatorial
//!   primitives, high-precision constants and factor-vector (lazy) products.
//! - [`cf_engine`] — generic continued-fraction specifications with exact
//!   convergents and precision-controlled decimal evaluation.
//! - [`forms`] — the closed-form machinery: region classification, the
//!   per-region master formulae, symmetries and the satellite families.
//! - [`relation`] — integer-relation detection via exact LLL and the numeric
//!   derivation chain (value triples, magic constants, seed streams).
//! - [`miner`] — the reproducible mining fragments: brittleness, the factored
//!   target function and the divisibility decimator.
//!
//! Everything is exact or carries an explicit decimal error budget; no binary
//! floating point is used anywhere.

pub mod cf_engine;
pub mod exactnum;
pub mod forms;
pub mod miner;
pub mod relation;

pub use exactnum::{BigRational, HPReal};
pub use forms::{Area, QExact, QKind};
