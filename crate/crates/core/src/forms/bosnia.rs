//! The `j = 2κ + 3` line, where the fraction is finite and rational.

use std::sync::LazyLock;

use num_rational::BigRational;

use crate::exactnum::{big, factorial, prod_range, rat};

use super::{ChainCache, FormsError};

/// `Q(j, (j−3)/2, c) = 2 + 2c − j`.
pub fn bosnia_value(j: i64, c: i64) -> Result<BigRational, FormsError> {
    if j < 3 || j % 2 == 0 {
        return Err(FormsError::BadJ(j));
    }
    if c < 1 {
        return Err(FormsError::BadC(c));
    }
    Ok(rat(2 + 2 * c - j))
}

/// Line-specific recurrence
/// `Δ(c) = −2c(2c−j)(2c+1)(2c−j+2) Δ(c−2) + (8c² + (14−4j)c − 3(j−2)) Δ(c−1)`
/// with `Δ(c) = 1 + (15−4j)c` below 2; memoised per `j`.
fn delta(j: i64, c: i64) -> BigRational {
    static CACHE: LazyLock<ChainCache<i64>> = LazyLock::new(ChainCache::new);
    CACHE.eval(
        j,
        c as usize,
        || (rat(1), rat(16 - 4 * j)),
        |c| {
            (
                big(-2 * c) * big(2 * c - j) * big(2 * c + 1) * big(2 * c - j + 2),
                big(8 * c * c + (14 - 4 * j) * c - 3 * (j - 2)),
            )
        },
    )
}

/// The same value through the non-recursive route
/// `g(j,c) / (Δ(j, c−1) · h(j,c))` with
/// `g = (2c)!/2 · Π_{i=1}^{(j−1)/2} (2+2i−j)` and
/// `h = Π_{i=0}^{(j−5)/2} (2c−2i−1)`.
pub fn bosnia_q_via_delta(j: i64, c: i64) -> Result<BigRational, FormsError> {
    if j < 5 || j % 2 == 0 {
        return Err(FormsError::BadJ(j));
    }
    if c < 1 {
        return Err(FormsError::BadC(c));
    }
    let g = BigRational::from_integer(
        factorial(2 * c as u64) * prod_range(1, (j - 1) / 2, |i| big(2 + 2 * i - j)),
    ) / rat(2);
    let h = BigRational::from_integer(prod_range(0, (j - 5) / 2, |i| big(2 * c - 2 * i - 1)));
    Ok(g / (delta(j, c - 1) * h))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cf_engine::{balkan_cf_spec, eval_cf_convergent};

    #[test]
    fn direct_values() {
        assert_eq!(bosnia_value(5, 3).unwrap(), rat(3));
        assert_eq!(bosnia_value(5, 1).unwrap(), rat(-1));
        assert_eq!(bosnia_value(13, 14).unwrap(), rat(17));
        assert!(bosnia_value(4, 1).is_err());
    }

    #[test]
    fn delta_route_matches() {
        assert_eq!(bosnia_q_via_delta(5, 1).unwrap(), rat(-1));
        assert_eq!(bosnia_q_via_delta(7, 4).unwrap(), rat(3));
        assert_eq!(bosnia_q_via_delta(13, 14).unwrap(), rat(17));
    }

    #[test]
    fn triple_identity_on_grid() {
        for j in [5i64, 7, 9, 11, 13] {
            for c in 1..=14 {
                let direct = bosnia_value(j, c).unwrap();
                let via_delta = bosnia_q_via_delta(j, c).unwrap();
                let spec = balkan_cf_spec(j, (j - 3) / 2, c);
                let finite = eval_cf_convergent(&spec, spec.termination().unwrap()).unwrap();
                assert_eq!(direct, via_delta, "j={j} c={c}");
                assert_eq!(direct, finite, "j={j} c={c}");
            }
        }
    }
}
