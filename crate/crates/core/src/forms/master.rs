//! The c-level master formula, valid in every region except the `j = 1` line:
//! `Q(j, κ, c) = g / (Δ(c−1)·h + f·G)` with the weights `f, g, h` below and a
//! two-term recurrence `Δ` seeded by the region's magic constants `(α, β)`.

use std::sync::LazyLock;

use num_rational::BigRational;

use crate::exactnum::{big, catalan_ext, factorial, rat, semifactorial};

use super::{pow2, prod_rat, ChainCache, QExact, QKind};

/// The pair of rational magic constants seeding the c-level recurrence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlphaBeta {
    pub alpha: BigRational,
    pub beta: BigRational,
}

impl AlphaBeta {
    pub fn new(alpha: BigRational, beta: BigRational) -> Self {
        AlphaBeta { alpha, beta }
    }
}

/// `f(j,κ,c) = C((j−3)/2) C(κ−1) (j−2)(2κ−1)(2c−1)!!² ·
///  Π_{i=1}^{(j−1)/2} (2c−2κ+2i−1)(κ−i+1)`.
///
/// Catalan factors use the Γ-limit continuation (`C(-1) = -1/2`, zero below),
/// which keeps the formula consistent on the `j = 1` line and for negative
/// parameters. The result vanishes identically on the finite regions.
pub fn f_weight(j: i64, kappa: i64, c: i64) -> BigRational {
    catalan_ext((j - 3) / 2)
        * catalan_ext(kappa - 1)
        * rat((j - 2) * (2 * kappa - 1))
        * BigRational::from_integer(semifactorial(2 * c - 1).expect("c >= 1").pow(2))
        * prod_rat(1, (j - 1) / 2, |i| {
            big(2 * c - 2 * kappa + 2 * i - 1) * big(kappa - i + 1)
        })
}

/// `g(j,κ,c) = (2c)! 2^((j+4κ−7)/2) Π_{i=1}^{(j−1)/2} (2c−2i+1)(2κ−2i+1)`.
pub fn g_weight(j: i64, kappa: i64, c: i64) -> BigRational {
    BigRational::from_integer(factorial(2 * c as u64))
        * pow2((j + 4 * kappa - 7) / 2)
        * prod_rat(1, (j - 1) / 2, |i| {
            big(2 * c - 2 * i + 1) * big(2 * kappa - 2 * i + 1)
        })
}

/// `h(j,κ,c) = Π_{i=0}^{(j−3)/2} (2c−2i−1) · Π_{i=0}^{κ−1} (2c−2i−1)`.
pub fn h_weight(j: i64, kappa: i64, c: i64) -> BigRational {
    prod_rat(0, (j - 3) / 2, |i| big(2 * c - 2 * i - 1))
        * prod_rat(0, kappa - 1, |i| big(2 * c - 2 * i - 1))
}

/// `Δ(j,κ,c)(α,β)`:
/// `−2c(2c−j)(2c−2κ+j−2)(2c−2κ−1) Δ(c−2) + (8c²+(2−8κ)c+(j−2)(2κ−j)) Δ(c−1)`
/// with `α + βc` below `c = 2`; memoised per `(j, κ, α, β)`.
pub fn delta_c_level(j: i64, kappa: i64, ab: &AlphaBeta, c: i64) -> BigRational {
    static CACHE: LazyLock<ChainCache<(i64, i64, BigRational, BigRational)>> =
        LazyLock::new(ChainCache::new);
    debug_assert!(c >= 0);
    CACHE.eval(
        (j, kappa, ab.alpha.clone(), ab.beta.clone()),
        c as usize,
        || (ab.alpha.clone(), &ab.alpha + &ab.beta),
        |c| {
            (
                big(-2 * c)
                    * big(2 * c - j)
                    * big(2 * c - 2 * kappa + j - 2)
                    * big(2 * c - 2 * kappa - 1),
                big(8 * c * c + (2 - 8 * kappa) * c) + big(j - 2) * big(2 * kappa - j),
            )
        },
    )
}

/// Exact value `g / (Δ(c−1)·h + f·G)` for the given magic constants.
/// The result is rational exactly when `f(j,κ,c) = 0` (the finite regions).
pub fn master_c_level(j: i64, kappa: i64, ab: &AlphaBeta, c: i64) -> QExact {
    let g = g_weight(j, kappa, c);
    let h = h_weight(j, kappa, c);
    let f = f_weight(j, kappa, c);
    let d = delta_c_level(j, kappa, ab, c - 1);
    QExact::from_rational_parts(&g, &(d * h), &f, QKind::G)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cf_engine::{balkan_cf_spec, eval_cf_convergent};
    use crate::exactnum::big;

    #[test]
    fn kosovo_anchor_via_chain() {
        // α, β for (3,2) from the κ-level chain, then c = 3
        let seeds = super::super::kosovo_j_seeds(3).unwrap();
        let ab = super::super::kosovo_kappa_level(3, &seeds, 2).unwrap();
        let q = master_c_level(3, 2, &ab, 3);
        assert_eq!(q.triple(), (big(192), big(13), big(18)));
    }

    #[test]
    fn bosnia_inputs_give_rational() {
        // magic constants for (5,1) via the ψ/μ closed form
        let ab = super::super::croatia_alphabeta(0, 5).unwrap();
        for c in 1..=6 {
            let q = master_c_level(5, 1, &ab, c);
            assert_eq!(q.kind(), QKind::Rational, "c={c}");
            let spec = balkan_cf_spec(5, 1, c);
            let finite = eval_cf_convergent(&spec, spec.termination().unwrap()).unwrap();
            assert_eq!(q.as_rational().unwrap(), finite, "c={c}");
            assert_eq!(f_weight(5, 1, c), BigRational::from_integer(big(0)));
        }
    }
}
