//! Satellite families outside the three-parameter grid: the shifted-root
//! G-families and the low-degree `log 2` fractions.

use std::sync::LazyLock;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::cf_engine::{CFSpec, Poly};
use crate::exactnum::{
    big, constant_value, factorial, rat, semifactorial, ConstantName, HPReal, GUARD_DIGITS,
};

use super::{ChainCache, FormsError, QExact, QKind};

/// General shifted family for shifts `τ, η, μ` of equal parity and `i >= 0`:
/// lead `x + 2(τ+η+1)i` with `x = (1+η)(1+μ) + τ(1+η+μ)`,
/// `P(n) = −2n(n+τ)(n+η)(n+2i+μ)`,
/// `T(n) = 3n² + (2(τ+η+μ+2i)+3)n + lead`.
pub fn inostranstvo_spec(tau: i64, eta: i64, mu: i64, i: i64) -> Result<CFSpec, FormsError> {
    if tau.rem_euclid(2) != eta.rem_euclid(2) || eta.rem_euclid(2) != mu.rem_euclid(2) {
        return Err(FormsError::ParityMismatch);
    }
    let x = (1 + eta) * (1 + mu) + tau * (1 + eta + mu);
    let lead = x + 2 * (tau + eta + 1) * i;
    let linear = 2 * (tau + eta + mu + 2 * i) + 3;
    let t = Poly::from_i64(&[lead, linear, 3]);
    let p = Poly::neg2n_from_roots(tau, eta, 2 * i + mu);
    Ok(CFSpec::new(p, t))
}

/// The `(1,1,1)` family: lead `7 + 6i`.
pub fn inostranstvo_q1_spec(i: i64) -> CFSpec {
    inostranstvo_spec(1, 1, 1, i).expect("parity holds")
}

/// Closed form of the `(1,1,1)` family:
/// `Q'_i = (2i+1)! / (Δ'_i − 2 G (2i+1)!!²)` with
/// `Δ'_i = 2(2i−1)³(1−i) Δ'_{i−2} + (8i²−2i+3) Δ'_{i−1}` and `Δ' = 2 + 15i`
/// below 2.
pub fn inostranstvo_q1(i: i64) -> Result<QExact, FormsError> {
    if i < 0 {
        return Err(FormsError::BadIndex(i));
    }
    static CACHE: LazyLock<ChainCache<()>> = LazyLock::new(ChainCache::new);
    let d = CACHE.eval(
        (),
        i as usize,
        || (rat(2), rat(17)),
        |m| {
            (
                big(2) * big(2 * m - 1).pow(3) * big(1 - m),
                big(8 * m * m - 2 * m + 3),
            )
        },
    );
    let num = BigRational::from_integer(factorial((2 * i + 1) as u64));
    let sf_sq = BigRational::from_integer(
        semifactorial(2 * i + 1).expect("nonnegative").pow(2) * big(-2),
    );
    Ok(QExact::from_rational_parts(&num, &d, &sf_sq, QKind::G))
}

/// `R_c = c + K((−2n²−2n)/(3n+c))`, a `log 2` family.
pub fn rc_spec(c: i64) -> CFSpec {
    CFSpec::new(Poly::from_i64(&[0, -2, -2]), Poly::from_i64(&[c, 3]))
}

/// `c + K(−2n²/(3n+c))`, the lower-degree `log 2` family.
pub fn log2a_spec(c: i64) -> CFSpec {
    CFSpec::new(Poly::from_i64(&[0, 0, -2]), Poly::from_i64(&[c, 3]))
}

/// Closed form of [`log2a_spec`] for `c >= 2`:
/// `1 / (2^(c−2) log 2 − Σ_{m=1}^{c−2} 2^(c−m−2)/m)`,
/// correct to `digits` digits.
pub fn log2a_closed_form(c: i64, digits: u32) -> Result<HPReal, FormsError> {
    if c < 2 {
        return Err(FormsError::BadC(c));
    }
    let scale = digits + GUARD_DIGITS;
    let mut s = BigRational::from_integer(BigInt::from(0));
    for m in 1..=(c - 2) {
        s += BigRational::new(big(2).pow((c - m - 2) as u32), big(m));
    }
    let l2 = constant_value(ConstantName::Log2, scale + c as u32)
        .expect("within default cap");
    let denom = l2
        .mul_int(&big(2).pow((c - 2) as u32))
        .sub(&HPReal::from_rational(&s, scale + c as u32));
    Ok(HPReal::from_int(1, denom.scale()).div(&denom).with_scale(scale))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cf_engine::eval_cf_decimal;
    use crate::exactnum::big;

    #[test]
    fn q1_base_cases() {
        // 1/(2 − 2G) and 6/(17 − 18G)
        let q0 = inostranstvo_q1(0).unwrap();
        assert!(q0.matches_triple_up_to_sign(&big(1), &big(2), &big(-2)));
        let q1 = inostranstvo_q1(1).unwrap();
        assert!(q1.matches_triple_up_to_sign(&big(6), &big(17), &big(-18)));
    }

    #[test]
    fn q1_matches_numeric_cf() {
        let q2 = inostranstvo_q1(2).unwrap();
        let numeric = eval_cf_decimal(&inostranstvo_q1_spec(2), 60).unwrap();
        assert!(q2.value_hp(60).unwrap().agrees_to(&numeric, 60));
    }

    #[test]
    fn spec_shapes() {
        let s = inostranstvo_q1_spec(3);
        assert_eq!(s.lead(), big(7 + 6 * 3));
        let s = inostranstvo_spec(1, 3, 3, 2).unwrap();
        assert_eq!(s.lead(), big(23 + 10 * 2));
        assert_eq!(s.t().coeffs()[1], big(17 + 4 * 2));
        let s = inostranstvo_spec(0, 0, 0, 0).unwrap();
        assert_eq!(s.lead(), big(1));
        assert!(inostranstvo_spec(1, 2, 1, 0).is_err());
    }

    #[test]
    fn log2a_matches_cf() {
        for c in [2i64, 3, 7] {
            let cf = eval_cf_decimal(&log2a_spec(c), 50).unwrap();
            let closed = log2a_closed_form(c, 50).unwrap();
            assert!(cf.agrees_to(&closed, 50), "c={c}");
        }
    }
}
