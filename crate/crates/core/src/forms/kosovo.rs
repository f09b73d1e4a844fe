//! The Kosovo chains: per-`j` seed streams (the j-level recurrence) and the
//! κ-level master formula turning seeds into the magic constants `(α, β)`.

use std::collections::HashMap;
use std::sync::{LazyLock, Mutex};

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::exactnum::{big, factorial, prod_range, rat};

use super::{AlphaBeta, ChainCache, FormsError};

/// The four per-`j` rational seeds: `(aa, ab)` drive the α stream and
/// `(ba, bb)` the β stream of the κ-level recurrence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Seeds4 {
    pub aa: BigRational,
    pub ab: BigRational,
    pub ba: BigRational,
    pub bb: BigRational,
}

impl Seeds4 {
    pub fn new(aa: BigRational, ab: BigRational, ba: BigRational, bb: BigRational) -> Self {
        Seeds4 { aa, ab, ba, bb }
    }
}

/// Seed streams for odd `j >= 3`.
///
/// `j = 3` and `j = 5` are fixed base cases; higher `j` iterate
///
/// ```text
/// aa' = (aa·a_j(2j−3) − (3j−2)ρ_j) / ((j−1)(j+1))
/// ab' = (ab·a_j(2j+1) − e_{j−2}ρ_j) / ((j−3)(j+1))
/// ba' = (ba·b_j − 3((j−3)(j−1)−1)ρ_j) / p_j
/// bb' = (bb·b_j(j(2j−3)−1) − d_{j−2}ρ_j) / (p_j((j−2)(2j−7)−1))
/// ```
///
/// from `j = 5` upward (the `ab` update divides by `j−3`, so stepping out of
/// `j = 3` is impossible; both base rows are table constants).
pub fn kosovo_j_seeds(j: i64) -> Result<Seeds4, FormsError> {
    if j < 3 || j % 2 == 0 {
        return Err(FormsError::BadJ(j));
    }
    if j == 3 {
        return Ok(Seeds4::new(
            rat(-1),
            rat(4),
            BigRational::new(big(-1), big(3)),
            BigRational::new(big(-14), big(3)),
        ));
    }
    static CACHE: LazyLock<Mutex<HashMap<i64, Seeds4>>> =
        LazyLock::new(|| Mutex::new(HashMap::new()));
    let mut cache = CACHE.lock().expect("seed cache poisoned");
    if let Some(s) = cache.get(&j) {
        return Ok(s.clone());
    }
    let mut cur_j = 5i64;
    let mut cur = cache
        .get(&5)
        .cloned()
        .unwrap_or_else(|| Seeds4::new(rat(19), rat(234), rat(-17), rat(-8)));
    // resume from the highest cached row below j
    let mut m = 7;
    while m <= j {
        if let Some(s) = cache.get(&m) {
            cur = s.clone();
            cur_j = m;
        }
        m += 2;
    }
    while cur_j < j {
        let jj = cur_j;
        let rho = BigRational::new(
            pow2_int(jj + 1) * factorial((jj - 1) as u64),
            big((jj - 2) * (jj - 4)),
        );
        let b = rat((jj - 6) * (jj - 2) * (jj - 1) * jj) * rat((2 * jj - 7) * (2 * jj - 5));
        let a = rat(4 * (jj - 1) * jj * (2 * jj - 5));
        let p = BigRational::new(big((jj - 6) * (jj - 4) * (jj - 1) * (jj + 1)), big(4));
        let d_jm2 = poly_d(jj - 2);
        let e_jm2 = rat((3 * (jj - 2) + 1) * ((jj - 2) * (jj - 2) - 7) + 3);
        let next = Seeds4::new(
            (&cur.aa * &a * rat(2 * jj - 3) - rat(3 * jj - 2) * &rho)
                / rat((jj - 1) * (jj + 1)),
            (&cur.ab * &a * rat(2 * jj + 1) - e_jm2 * &rho) / rat((jj - 3) * (jj + 1)),
            (&cur.ba * &b - rat(3 * ((jj - 3) * (jj - 1) - 1)) * &rho) / &p,
            (&cur.bb * &b * rat(jj * (2 * jj - 3) - 1) - d_jm2 * &rho)
                / (&p * rat((jj - 2) * (2 * jj - 7) - 1)),
        );
        cur_j += 2;
        cur = next;
        cache.insert(cur_j, cur.clone());
    }
    Ok(cur)
}

fn pow2_int(e: i64) -> BigInt {
    big(2).pow(e as u32)
}

/// `d_j = 6j⁶ − 15j⁵ − 68j⁴ + 74j³ + 89j² − 44j − 18`.
fn poly_d(j: i64) -> BigRational {
    let x = big(j);
    let v = ((((&x * 6 - 15) * &x - 68) * &x + 74) * &x + 89) * &x * &x - &x * 44 - 18;
    BigRational::from_integer(v)
}

/// `s(j,κ) = Π_{i=0}^{(j−3)/2} (κ−i)(2κ−2i−1)²`.
fn s_factor(j: i64, kappa: i64) -> BigInt {
    prod_range(0, (j - 3) / 2, |i| {
        big(kappa - i) * big(2 * kappa - 2 * i - 1).pow(2)
    })
}

/// `ℓ(n,j,κ)` normalisation of the κ-level formula.
fn ell(n: i64, j: i64, kappa: i64) -> BigRational {
    let sign = if kappa % 2 == 0 { -1 } else { 1 };
    let num = factorial(2 * kappa as u64).pow(2) * sign;
    let den = factorial(kappa as u64)
        * pow2_int(3 * kappa - 2)
        * big(2 * kappa - j)
        * big(2 * kappa - 1)
        * big(n * ((2 * kappa - j - 2) * (3 - 2 * kappa) - 1) + 1)
        * s_factor(j, kappa);
    BigRational::new(num, den)
}

/// `Δ̄(n,j,κ)(α,β)` with
/// `η = (2κ+2j−9−2n)(2κ+j−8−2n)(−2κ+5−j)(2κ+j−6)` and
/// `φ = 8κ² + κ(10j−48−8n) + 3j² − (28+4n)j + 68 + 18n`;
/// `α + βκ` below `κ = 2`; memoised per `(n, j, α, β)`.
fn delta_bar(n: i64, j: i64, alpha: &BigRational, beta: &BigRational, kappa: i64) -> BigRational {
    static CACHE: LazyLock<ChainCache<(i64, i64, BigRational, BigRational)>> =
        LazyLock::new(ChainCache::new);
    debug_assert!(kappa >= 0);
    CACHE.eval(
        (n, j, alpha.clone(), beta.clone()),
        kappa as usize,
        || (alpha.clone(), alpha + beta),
        |k| {
            (
                big(2 * k + 2 * j - 9 - 2 * n)
                    * big(2 * k + j - 8 - 2 * n)
                    * big(-2 * k + 5 - j)
                    * big(2 * k + j - 6),
                big(8 * k * k + k * (10 * j - 48 - 8 * n))
                    + big(3 * j * j - (28 + 4 * n) * j + 68 + 18 * n),
            )
        },
    )
}

/// κ-level master formula: the magic constants for `(j, κ)` from the per-`j`
/// seeds, defined for `κ >= j − 2`:
/// `α = Δ̄(0,j,κ−j+2)(aa,ab)/ℓ(0,j,κ)`,
/// `β = Δ̄(1,j,κ−j+2)(ba,bb)/ℓ(1,j,κ) − α`.
pub fn kosovo_kappa_level(j: i64, seeds: &Seeds4, kappa: i64) -> Result<AlphaBeta, FormsError> {
    if j < 3 || j % 2 == 0 {
        return Err(FormsError::BadJ(j));
    }
    if kappa < j - 2 {
        return Err(FormsError::KappaBelowChain { j, kappa });
    }
    let idx = kappa - j + 2;
    let alpha = delta_bar(0, j, &seeds.aa, &seeds.ab, idx) / ell(0, j, kappa);
    let beta = delta_bar(1, j, &seeds.ba, &seeds.bb, idx) / ell(1, j, kappa) - &alpha;
    Ok(AlphaBeta::new(alpha, beta))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> BigRational {
        s.parse().unwrap()
    }

    #[test]
    fn base_rows() {
        let s3 = kosovo_j_seeds(3).unwrap();
        assert_eq!((s3.aa, s3.ab, s3.ba, s3.bb), (rat(-1), rat(4), r("-1/3"), r("-14/3")));
        let s5 = kosovo_j_seeds(5).unwrap();
        assert_eq!((s5.aa, s5.ab, s5.ba, s5.bb), (rat(19), rat(234), rat(-17), rat(-8)));
    }

    #[test]
    fn seventh_row() {
        let s7 = kosovo_j_seeds(7).unwrap();
        assert_eq!(s7.aa, r("5818/3"));
        assert_eq!(s7.ab, r("254456/3"));
        assert_eq!(s7.ba, rat(-758));
        assert_eq!(s7.bb, rat(-27820));
    }

    #[test]
    fn eleventh_row_has_denominator_five() {
        let s11 = kosovo_j_seeds(11).unwrap();
        assert_eq!(s11.ba, r("-1091480994/5"));
        assert_eq!(s11.bb, r("-146282046156/5"));
    }

    #[test]
    fn kappa_level_anchor() {
        let seeds = kosovo_j_seeds(3).unwrap();
        let ab = kosovo_kappa_level(3, &seeds, 2).unwrap();
        assert_eq!(ab.alpha, rat(-9));
        assert_eq!(ab.beta, rat(24));
    }

    #[test]
    fn kappa_below_chain_rejected() {
        let seeds = kosovo_j_seeds(5).unwrap();
        assert!(matches!(
            kosovo_kappa_level(5, &seeds, 2),
            Err(FormsError::KappaBelowChain { .. })
        ));
    }
}
