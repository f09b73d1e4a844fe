//! Factorials, semifactorials, binomials and Catalan numbers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{big, ExactError};

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    acc
}

/// Semifactorial `n!! = n(n-2)(n-4)…` with the empty product equal to 1,
/// so `(-1)!! = 0!! = 1!! = 1`.
///
/// Arguments below −1 are rejected; they do not occur in any of the closed
/// forms (κ = 1 produces `(2κ-3)!! = (-1)!!`, nothing lower).
pub fn semifactorial(n: i64) -> Result<BigInt, ExactError> {
    if n < -1 {
        return Err(ExactError::SemifactorialRange(n));
    }
    let mut acc = BigInt::one();
    let mut k = n;
    while k > 1 {
        acc *= k;
        k -= 2;
    }
    Ok(acc)
}

/// Semifactorial continued to negative odd arguments via `n!! = (n+2)!!/(n+2)`,
/// e.g. `(-3)!! = -1`, `(-5)!! = 1/3`. Rational-valued; used by the
/// reflection factor τ where arguments can drop below −1.
pub fn semifactorial_ext(n: i64) -> BigRational {
    if n >= -1 {
        return BigRational::from_integer(semifactorial(n).expect("n >= -1"));
    }
    semifactorial_ext(n + 2) / BigRational::from_integer(big(n + 2))
}

/// Binomial coefficient `C(n, k)`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * big((n - i) as i64) / big((i + 1) as i64);
    }
    acc
}

/// `n`-th Catalan number `(2n)! / ((n+1)! n!)`.
pub fn catalan_number(n: i64) -> Result<BigInt, ExactError> {
    if n < 0 {
        return Err(ExactError::NegativeCatalanIndex(n));
    }
    Ok(binomial(2 * n as u64, n as u64) / big(n + 1))
}

/// Catalan number continued to negative indices by the Γ-limit:
/// `C(-1) = -1/2` and `C(n) = 0` for `n <= -2`.
///
/// This is the continuation under which the weight `f(j, κ, c)` of the
/// c-level master formula stays consistent with the recovered value triples
/// on the `j = 1` line and for negative parameters.
pub fn catalan_ext(n: i64) -> BigRational {
    if n >= 0 {
        BigRational::from_integer(catalan_number(n).expect("n >= 0"))
    } else if n == -1 {
        BigRational::new(big(-1), big(2))
    } else {
        BigRational::zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn semifactorial_empty_products() {
        assert_eq!(semifactorial(1).unwrap(), big(1));
        assert_eq!(semifactorial(0).unwrap(), big(1));
        assert_eq!(semifactorial(-1).unwrap(), big(1));
    }

    #[test]
    fn semifactorial_direct_product() {
        // oracle: plain loop product 5*3*1
        assert_eq!(semifactorial(5).unwrap(), big(15));
        let mut oracle = BigInt::one();
        let mut k = 13;
        while k >= 1 {
            oracle *= k;
            k -= 2;
        }
        assert_eq!(semifactorial(13).unwrap(), oracle);
    }

    #[test]
    fn semifactorial_rejects_below_minus_one() {
        assert_eq!(semifactorial(-2), Err(ExactError::SemifactorialRange(-2)));
        assert_eq!(semifactorial(-5), Err(ExactError::SemifactorialRange(-5)));
    }

    #[test]
    fn semifactorial_complementary_identity() {
        // (2k-1)!! * (2k)!! = (2k)! with the even part by direct product
        for k in 1..=50i64 {
            let odd = semifactorial(2 * k - 1).unwrap();
            let mut even = BigInt::one();
            let mut m = 2 * k;
            while m >= 2 {
                even *= m;
                m -= 2;
            }
            assert_eq!(odd * even, factorial(2 * k as u64), "k={k}");
        }
    }

    #[test]
    fn semifactorial_ext_ladder() {
        use super::super::rat;
        assert_eq!(semifactorial_ext(-1), rat(1));
        assert_eq!(semifactorial_ext(-3), rat(-1));
        assert_eq!(semifactorial_ext(-5), BigRational::new(big(1), big(3)));
        assert_eq!(semifactorial_ext(-7), BigRational::new(big(-1), big(15)));
        assert_eq!(semifactorial_ext(7), rat(105));
    }

    #[test]
    fn catalan_small_values() {
        let want = [1i64, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786];
        for (n, w) in want.iter().enumerate() {
            assert_eq!(catalan_number(n as i64).unwrap(), big(*w), "n={n}");
        }
        assert!(catalan_number(-1).is_err());
    }

    #[test]
    fn catalan_ext_continuation() {
        assert_eq!(catalan_ext(-1), BigRational::new(big(-1), big(2)));
        assert_eq!(catalan_ext(-2), BigRational::zero());
        assert_eq!(catalan_ext(-7), BigRational::zero());
        assert_eq!(catalan_ext(5), super::super::rat(42));
    }
}
