//! High-precision constants with proven truncation bounds.
//!
//! Every constant is computed from a geometrically convergent series whose
//! remainder is bounded by an explicit multiple of the first omitted term:
//!
//! - `π` by Machin's formula `16 atan(1/5) − 4 atan(1/239)` (alternating, so
//!   each partial tail is below the first omitted term),
//! - `log 2 = 2 atanh(1/3)` (positive terms with ratio ≤ 1/9, tail ≤ t/8),
//! - Catalan's constant as
//!   `π/8 · log(2+√3) + 3/8 · Σ 1/((2n+1)² C(2n,n))`
//!   (term ratio ≤ 1/4, tail ≤ t/3), with `log(2+√3) = 2 atanh(1/√3)`
//!   summed as `(2/√3) Σ 1/((2i+1) 3^i)` (ratio ≤ 1/3, tail ≤ t/2).
//!
//! All series run at the working scale plus [`SERIES_GUARD`] extra digits, so
//! the value returned for `digits` is correct to at least `digits` decimals.
//! Results are cached per `(name, digits)`; the cache tolerates concurrent
//! readers and redundant concurrent fills (entries are value-deterministic).

use std::collections::HashMap;
use std::str::FromStr;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::hpreal::HPReal;
use super::ExactError;

/// Default cap on requested digits.
pub const DEFAULT_DIGITS_CAP: u32 = 20_000;

/// Extra working digits carried by the constant series.
const SERIES_GUARD: u32 = 15;

/// The named constants the engine knows how to produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConstantName {
    /// Catalan's constant `G = Σ (-1)^n/(2n+1)² ≈ 0.9159...`.
    CatalanG,
    /// `log 2`.
    Log2,
    /// `π`.
    Pi,
}

impl FromStr for ConstantName {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "catalan_G" | "G" | "catalan" => Ok(ConstantName::CatalanG),
            "log2" => Ok(ConstantName::Log2),
            "pi" => Ok(ConstantName::Pi),
            other => Err(format!("unknown constant name: {other}")),
        }
    }
}

fn pow10(k: u32) -> BigInt {
    BigInt::from(10u32).pow(k)
}

/// `Σ_{i>=0} 1/((2i+1) k^(2i+1))` at fixed-point `scale`, i.e. `atanh(1/k)`.
/// Positive decreasing terms with ratio < 1/k²; truncated when the term
/// underflows the scale, so the tail is below 1 ulp.
fn atanh_inv(k: i64, scale: u32) -> BigInt {
    let unit = pow10(scale);
    let ksq = BigInt::from(k) * k;
    let mut power = &unit / k; // 10^scale / k^(2i+1)
    let mut sum = BigInt::zero();
    let mut i: u64 = 0;
    while !power.is_zero() {
        sum += &power / (2 * i + 1);
        power = &power / &ksq;
        i += 1;
    }
    sum
}

/// π at fixed-point `scale` via Machin: `16 atan(1/5) − 4 atan(1/239)`.
/// `atan(1/k)` is the alternating version of [`atanh_inv`].
fn pi_mantissa(scale: u32) -> BigInt {
    let atan_inv = |k: i64| -> BigInt {
        let unit = pow10(scale);
        let ksq = BigInt::from(k) * k;
        let mut power = &unit / k;
        let mut sum = BigInt::zero();
        let mut i: u64 = 0;
        while !power.is_zero() {
            let term = &power / (2 * i + 1);
            if i.is_multiple_of(2) {
                sum += term;
            } else {
                sum -= term;
            }
            power = &power / &ksq;
            i += 1;
        }
        sum
    };
    atan_inv(5) * 16 - atan_inv(239) * 4
}

/// `√3` at fixed-point `scale` (integer square root of `3·10^(2·scale)`).
fn sqrt3_mantissa(scale: u32) -> BigInt {
    (BigInt::from(3) * pow10(2 * scale)).sqrt()
}

/// `log(2+√3) = (2/√3) Σ 1/((2i+1) 3^i)` at fixed-point `scale`.
fn log_2_plus_sqrt3_mantissa(scale: u32) -> BigInt {
    let unit = pow10(scale);
    let mut power = unit.clone(); // 10^scale / 3^i
    let mut sum = BigInt::zero();
    let mut i: u64 = 0;
    while !power.is_zero() {
        sum += &power / (2 * i + 1);
        power = &power / 3;
        i += 1;
    }
    // 2/sqrt(3) = 2*sqrt(3)/3
    sum * 2 * sqrt3_mantissa(scale) / (BigInt::from(3) * unit)
}

/// Catalan's constant at fixed-point `scale`:
/// `π/8 log(2+√3) + 3/8 Σ_{n>=0} 1/((2n+1)² C(2n,n))`.
fn catalan_mantissa(scale: u32) -> BigInt {
    let unit = pow10(scale);
    let mut binom = BigInt::one(); // C(2n, n)
    let mut sum = BigInt::zero();
    let mut n: u64 = 0;
    loop {
        let denom = &binom * ((2 * n + 1) * (2 * n + 1));
        let term = &unit / denom;
        if term.is_zero() {
            break;
        }
        sum += term;
        // C(2n+2, n+1) = C(2n,n) * 2(2n+1)/(n+1)
        binom = binom * (2 * (2 * n + 1)) / (n + 1);
        n += 1;
    }
    let pi = pi_mantissa(scale);
    let log_part = log_2_plus_sqrt3_mantissa(scale);
    (pi * log_part / unit + sum * 3) / 8
}

static CACHE: RwLock<Option<HashMap<(ConstantName, u32), HPReal>>> = RwLock::new(None);

/// A constant to at least `digits` correct decimal digits, under the default
/// cap of [`DEFAULT_DIGITS_CAP`].
pub fn constant_value(name: ConstantName, digits: u32) -> Result<HPReal, ExactError> {
    constant_value_capped(name, digits, DEFAULT_DIGITS_CAP)
}

/// Same as [`constant_value`] with an explicit digit cap.
pub fn constant_value_capped(
    name: ConstantName,
    digits: u32,
    cap: u32,
) -> Result<HPReal, ExactError> {
    if digits > cap {
        return Err(ExactError::DigitsOverCap { digits, cap });
    }
    if let Some(map) = CACHE.read().expect("constants cache poisoned").as_ref() {
        if let Some(v) = map.get(&(name, digits)) {
            return Ok(v.clone());
        }
    }
    let work = digits + SERIES_GUARD;
    let mant = match name {
        ConstantName::Pi => pi_mantissa(work),
        ConstantName::Log2 => atanh_inv(3, work) * 2,
        ConstantName::CatalanG => catalan_mantissa(work),
    };
    let value = HPReal::from_mantissa(mant, work).with_scale(digits);
    let mut guard = CACHE.write().expect("constants cache poisoned");
    guard
        .get_or_insert_with(HashMap::new)
        .insert((name, digits), value.clone());
    Ok(value)
}
