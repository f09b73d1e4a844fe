//! Closed form on the `j = 1` line.
//!
//! For `κ >= 1` the value is `δ_κ (2c)! / Γ(κ, c)` with
//! `Γ(κ, c) = (2c−1)!!² G + Δ(κ, c−1)(α_κ, β_κ) · Π_{i=0}^{κ−1} (2(c−i)−1)`
//! and the magic constants `α_κ, β_κ` generated from two fixed seed chains.
//! The `κ = 0` ray uses the compact recurrence
//! `Δ(c) = (2c)! + (2c+1)² Δ(c−1)`, `Δ(0) = 1`, giving
//! `Q(1, 0, c) = (2c)! / (2 (2c−1)!!² G − Δ(c−1))`.

use std::sync::LazyLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::exactnum::{big, factorial, prod_range, rat, semifactorial};

use super::{ChainCache, FormsError, QExact, QKind};

/// `Δ(κ, c)(α, β)` for the line's recurrence
/// `Δ(κ,c) = −2c(2c−1)(2(c−κ)−1)² Δ(κ,c−2) + (8c² + (2−8κ)c − 2κ + 1) Δ(κ,c−1)`
/// with `Δ(κ,c) = α + βc` for `c < 2`; memoised per `(κ, α, β)`.
fn delta(kappa: i64, alpha: &BigRational, beta: &BigRational, c: i64) -> BigRational {
    static CACHE: LazyLock<ChainCache<(i64, BigRational, BigRational)>> =
        LazyLock::new(ChainCache::new);
    debug_assert!(c >= 0);
    CACHE.eval(
        (kappa, alpha.clone(), beta.clone()),
        c as usize,
        || (alpha.clone(), alpha + beta),
        |c| {
            (
                big(-2 * c) * big(2 * c - 1) * big(2 * (c - kappa) - 1).pow(2),
                big(8 * c * c + (2 - 8 * kappa) * c - 2 * kappa + 1),
            )
        },
    )
}

/// `Δ(1,0,c)` by the compact form `Δ(c) = (2c)! + (2c+1)² Δ(c−1)`, `Δ(0)=1`.
pub fn kappa0_delta_compact(c: i64) -> BigInt {
    debug_assert!(c >= 0);
    let mut v = BigInt::one();
    for m in 1..=c {
        v = factorial(2 * m as u64) + big(2 * m + 1).pow(2) * v;
    }
    v
}

/// `Δ(1,0,c)` by the two-term recurrence
/// `Δ(c) = 2c(1−2c)³ Δ(c−2) + (8c²+2c+1) Δ(c−1)` with `Δ(c) = 1 + 10c` below 2.
pub fn kappa0_delta_two_term(c: i64) -> BigInt {
    debug_assert!(c >= 0);
    let mut prev2 = big(1);
    let mut prev = big(11);
    if c == 0 {
        return prev2;
    }
    for m in 2..=c {
        let next = big(2 * m) * big(1 - 2 * m).pow(3) * &prev2
            + big(8 * m * m + 2 * m + 1) * &prev;
        prev2 = std::mem::replace(&mut prev, next);
    }
    prev
}

/// The magic constants of the line:
/// `δ_κ`, `ρ_κ`, then `α_κ = ρ_κ Δ(1, κ−1)(1, −2)` and
/// `β_κ = −ρ_κ (2κ−3)² Δ(2, κ−1)(1, 12) − α_κ`.
fn magic(kappa: i64) -> (BigRational, BigRational, BigRational) {
    let c_km1 = crate::exactnum::catalan_number(kappa - 1).expect("kappa >= 1");
    let delta_k = super::pow2(2 * (kappa - 1))
        / BigRational::from_integer(big(2 * kappa - 1) * c_km1);
    let sign = if kappa % 2 == 0 { 1 } else { -1 };
    let rho = &delta_k * rat(sign * (1 - 2 * kappa))
        / BigRational::from_integer(
            factorial(2 * kappa as u64) * semifactorial(2 * kappa - 3).expect("kappa >= 1"),
        );
    let alpha = &rho * delta(1, &rat(1), &rat(-2), kappa - 1);
    let beta = -&rho * rat((2 * kappa - 3) * (2 * kappa - 3))
        * delta(2, &rat(1), &rat(12), kappa - 1)
        - &alpha;
    (delta_k, alpha, beta)
}

/// Exact value of the family at `(1, κ, c)`.
pub fn montenegro_q(kappa: i64, c: i64) -> Result<QExact, FormsError> {
    if kappa < 0 {
        return Err(FormsError::BadKappa(kappa));
    }
    if c < 1 {
        return Err(FormsError::BadC(c));
    }
    let two_c_fact = BigRational::from_integer(factorial(2 * c as u64));
    let sf_sq =
        BigRational::from_integer(semifactorial(2 * c - 1).expect("c >= 1").pow(2));
    if kappa == 0 {
        // (2c)! / (2 (2c-1)!!^2 G - Δ(c-1))
        let d = BigRational::from_integer(kappa0_delta_compact(c - 1));
        return Ok(QExact::from_rational_parts(&two_c_fact, &(-d), &(sf_sq * rat(2)), QKind::G));
    }
    let (delta_k, alpha, beta) = magic(kappa);
    let tail = BigRational::from_integer(prod_range(0, kappa - 1, |i| big(2 * (c - i) - 1)));
    let rational_part = delta(kappa, &alpha, &beta, c - 1) * tail;
    Ok(QExact::from_rational_parts(
        &(delta_k * two_c_fact),
        &rational_part,
        &sf_sq,
        QKind::G,
    ))
}
