//! Arbitrary-precision integers/rationals, combinatorial primitives,
//! high-precision constants and factor-vector products.

mod combinatorics;
mod constants;
mod factorvec;
mod hpreal;

pub use combinatorics::{
    binomial, catalan_ext, catalan_number, factorial, semifactorial, semifactorial_ext,
};
pub use constants::{constant_value, constant_value_capped, ConstantName, DEFAULT_DIGITS_CAP};
pub use factorvec::{factored_product, reduce_common, FactorVec, FACTOR_TABLE_BOUND};
pub use hpreal::{HPReal, GUARD_DIGITS};

pub use num_bigint::{BigInt, Sign};
pub use num_rational::BigRational;

use thiserror::Error;

/// Errors raised by the exact-arithmetic layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    /// Semifactorial argument below −1.
    #[error("semifactorial is only defined for n >= -1, got {0}")]
    SemifactorialRange(i64),
    /// Catalan number of a negative index.
    #[error("Catalan numbers require n >= 0, got {0}")]
    NegativeCatalanIndex(i64),
    /// Requested constant precision above the configured cap.
    #[error("requested {digits} digits exceeds the cap of {cap}")]
    DigitsOverCap { digits: u32, cap: u32 },
    /// Zero factor in a factored product.
    #[error("zero term in factored product")]
    ZeroTerm,
}

/// Shorthand for `BigInt::from`.
pub(crate) fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

/// Shorthand for an integer-valued `BigRational`.
pub(crate) fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Product of `f(i)` over the inclusive range `lo..=hi`; empty ranges give 1.
pub fn prod_range<F: FnMut(i64) -> BigInt>(lo: i64, hi: i64, mut f: F) -> BigInt {
    let mut acc = BigInt::from(1);
    let mut i = lo;
    while i <= hi {
        acc *= f(i);
        i += 1;
    }
    acc
}
