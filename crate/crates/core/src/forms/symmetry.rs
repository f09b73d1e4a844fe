//! Reflection factor τ between mirrored magic constants and the closed form
//! for the ratio `a0/a2` of a value triple.

use num_rational::BigRational;
use num_traits::Signed;

use crate::exactnum::{
    big, catalan_number, factorial, rat, semifactorial, semifactorial_ext,
};

use super::{pow2, prod_rat, FormsError};

/// `ζ(j, u) = Π_{i=0}^{u−1} (2+2i−j) / 2^u`.
fn zeta(j: i64, u: i64) -> BigRational {
    prod_rat(0, u - 1, |i| big(2 + 2 * i - j)) / pow2(u)
}

/// Reflection factor
///
/// ```text
/// τ(j,u) = sign(ζ(j,u)) (2j−2u−3)!! (2u−j)!! (−2)^u   if 2u > j−1
///        = ζ(j,u) (−4)^u                               otherwise
/// ```
///
/// satisfying `α(j, j−u−1)/α(j−2u, j−u−1) = β(j, j−u−1)/β(j−2u, j−u−1) = τ(j,u)`
/// (also for the negative `j`, κ the mirror reaches); semifactorials of
/// negative odd arguments continue rationally.
pub fn tau_ratio(j: i64, u: i64) -> Result<BigRational, FormsError> {
    if j % 2 == 0 {
        return Err(FormsError::BadJ(j));
    }
    if 2 * u > j - 1 {
        let z = zeta(j, u);
        let sign = if z.is_negative() { rat(-1) } else { rat(1) };
        let m = pow2(u);
        let minus2_u = if u % 2 == 0 { m } else { -m };
        Ok(sign * semifactorial_ext(2 * j - 2 * u - 3) * semifactorial_ext(2 * u - j) * minus2_u)
    } else {
        let m = pow2(2 * u);
        let minus4_u = if u % 2 == 0 { m } else { -m };
        Ok(zeta(j, u) * minus4_u)
    }
}

/// Closed form for `a0/a2` of the value triple, valid over all regions with
/// a constant part:
///
/// ```text
/// a0/a2 = (2c)! 2^ε / ((2c−1)!!² C(κ−1) C((j−3)/2) (2κ−1)(j−2) ρ(j,κ,c))
/// ρ(j,κ,c) = Π_{i=1}^{(j−1)/2} (2c−2κ+2i−1)(κ−i+1) / ((2c−2i+1)(2κ−2i+1))
/// ε(j,κ) = 2κ + (j−7)/2 + ⌊1/j⌋
/// ```
///
/// On the `j = 1` line `ρ = 1` (empty product), `⌊1/j⌋ = 1` and the Catalan
/// factor `C(-1)` is taken as 1, so the recovered triples match in magnitude
/// but may differ in sign (relation normalisation is sign-ambiguous anyway).
pub fn ratio_a0_a2(j: i64, kappa: i64, c: i64) -> Result<BigRational, FormsError> {
    if j % 2 == 0 || j < 1 {
        return Err(FormsError::BadJ(j));
    }
    if kappa < 1 {
        return Err(FormsError::BadKappa(kappa));
    }
    if c < 1 {
        return Err(FormsError::BadC(c));
    }
    let eps = 2 * kappa + (j - 7) / 2 + i64::from(j == 1);
    let rho = prod_rat(1, (j - 1) / 2, |i| {
        big(2 * c - 2 * kappa + 2 * i - 1) * big(kappa - i + 1)
    }) / prod_rat(1, (j - 1) / 2, |i| big(2 * c - 2 * i + 1) * big(2 * kappa - 2 * i + 1));
    let c_j = if j == 1 {
        rat(1)
    } else {
        BigRational::from_integer(catalan_number((j - 3) / 2).expect("j >= 3"))
    };
    let num = BigRational::from_integer(factorial(2 * c as u64)) * pow2(eps);
    let den = BigRational::from_integer(semifactorial(2 * c - 1).expect("c >= 1").pow(2))
        * BigRational::from_integer(catalan_number(kappa - 1).expect("kappa >= 1"))
        * c_j
        * rat(2 * kappa - 1)
        * rat(j - 2)
        * rho;
    Ok(num / den)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> BigRational {
        s.parse().unwrap()
    }

    #[test]
    fn tau_examples() {
        // ζ(7,2)·16 = (2−7)(4−7)/4 · 16 = 60
        assert_eq!(tau_ratio(7, 2).unwrap(), rat(60));
        // empty product at u = 0
        for j in [3i64, 5, 9, 13] {
            assert_eq!(tau_ratio(j, 0).unwrap(), rat(1));
        }
    }

    #[test]
    fn tau_at_u_j_minus_1() {
        // the u = j−1 branch uses the negative-argument continuation:
        // τ(j, j−1) = (−1)^((j−1)/2) 2^(j−1) (j−2)!!
        for j in [3i64, 5, 7, 9, 11, 13] {
            let want = pow2(j - 1)
                * BigRational::from_integer(semifactorial(j - 2).unwrap())
                * if ((j - 1) / 2) % 2 == 0 { rat(1) } else { rat(-1) };
            assert_eq!(tau_ratio(j, j - 1).unwrap(), want, "j={j}");
        }
        assert_eq!(tau_ratio(3, 2).unwrap(), rat(-4));
    }

    #[test]
    fn ratio_examples() {
        assert_eq!(ratio_a0_a2(1, 1, 3).unwrap(), r("-16/5"));
        assert_eq!(ratio_a0_a2(3, 2, 3).unwrap(), r("32/3"));
        assert_eq!(ratio_a0_a2(1, 1, 1).unwrap().abs(), rat(2));
    }
}
