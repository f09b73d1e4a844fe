//! κ-level closed form for the finite regions: for `i = (j−2κ−3)/2 >= 0`
//! there are integer polynomials `ψ1(i,·)` of degree `i` and `ψ2(i,·)` of
//! degree `i+1` with
//!
//! ```text
//! α(j, κ) = ψ1(i, j) / μ(i, j),   β(j, κ) = ψ2(i, j) / μ(i, j),
//! μ(i, j) = −Π_{q=1}^{i} (j−2q−2) / (−2)^((3j−11−4i)/2).
//! ```
//!
//! The polynomials for `i <= 5` are built in; higher rows are recovered by
//! exact Lagrange interpolation of values derived by finite summation.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::cf_engine::{balkan_cf_spec, eval_cf_convergent};
use crate::exactnum::{big, prod_range, rat, semifactorial};

use super::{g_weight, h_weight, AlphaBeta, FormsError};

/// Largest `i` covered by the built-in tables.
pub const PSI_TABLE_MAX_INDEX: usize = 5;

/// ψ1 rows for `i = 0..=5`, coefficients lowest first.
const PSI1: [&[i64]; 6] = [
    &[-1],
    &[14, -1],
    &[-464, 58, -3],
    &[27936, -4692, 432, -15],
    &[-2659968, 542256, -67836, 4260, -105],
    &[367568640, -86278560, 13203480, -1139700, 51450, -945],
];

/// ψ2 rows for `i = 0..=5`, coefficients lowest first.
const PSI2: [&[i64]; 6] = [
    &[-15, 4],
    &[306, -95, 4],
    &[-13360, 4646, -357, 12],
    &[999648, -379692, 40368, -2457, 60],
    &[-113885568, 46449360, -6124164, 513228, -22935, 420],
    &[18333538560, -7933530720, 1224286440, -126833100, 7864950, -266175, 3780],
];

/// The ψ polynomial pair for one row index `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsiPoly {
    pub i: usize,
    /// Coefficients of `ψ1(i, ·)`, lowest first; degree `i`.
    pub coeffs1: Vec<BigInt>,
    /// Coefficients of `ψ2(i, ·)`, lowest first; degree `i+1`.
    pub coeffs2: Vec<BigInt>,
}

fn polyval(coeffs: &[BigInt], x: i64) -> BigInt {
    let x = big(x);
    let mut acc = BigInt::zero();
    for c in coeffs.iter().rev() {
        acc = acc * &x + c;
    }
    acc
}

/// `μ(i, j) = −Π_{q=1}^{i}(j−2q−2) / (−2)^((3j−11−4i)/2)`.
pub fn mu_factor(i: usize, j: i64) -> BigRational {
    let e = (3 * j - 11 - 4 * i as i64) / 2;
    let p = BigRational::from_integer(prod_range(1, i as i64, |q| big(j - 2 * q - 2)));
    let neg2_pow = {
        let mag = super::pow2(e);
        if e.rem_euclid(2) == 0 {
            mag
        } else {
            -mag
        }
    };
    -p / neg2_pow
}

/// Magic constants from the built-in ψ tables (`i <= 5`, `j >= 2i+5`).
pub fn croatia_alphabeta(i: usize, j: i64) -> Result<AlphaBeta, FormsError> {
    if i > PSI_TABLE_MAX_INDEX {
        return Err(FormsError::PsiTableRange(i));
    }
    if j % 2 == 0 || j < 2 * i as i64 + 5 {
        return Err(FormsError::BadJ(j));
    }
    let mu = mu_factor(i, j);
    let c1: Vec<BigInt> = PSI1[i].iter().map(|&c| big(c)).collect();
    let c2: Vec<BigInt> = PSI2[i].iter().map(|&c| big(c)).collect();
    Ok(AlphaBeta::new(
        BigRational::from_integer(polyval(&c1, j)) / &mu,
        BigRational::from_integer(polyval(&c2, j)) / &mu,
    ))
}

/// Magic constants from an interpolated ψ row (any `i`).
pub fn croatia_alphabeta_from_poly(psi: &PsiPoly, j: i64) -> Result<AlphaBeta, FormsError> {
    if j % 2 == 0 || j < 2 * psi.i as i64 + 5 {
        return Err(FormsError::BadJ(j));
    }
    let mu = mu_factor(psi.i, j);
    Ok(AlphaBeta::new(
        BigRational::from_integer(polyval(&psi.coeffs1, j)) / &mu,
        BigRational::from_integer(polyval(&psi.coeffs2, j)) / &mu,
    ))
}

/// Magic constants for a finite-region point by finite summation: the
/// fraction terminates, so `Q(c)` is exactly rational and the two-point
/// system `Δ(c−1) = g/(Q·h)` at `c = 1, 2` yields `(α, β)` directly
/// (the G-weight vanishes identically here).
pub fn croatia_alphabeta_by_summation(j: i64, kappa: i64) -> Result<AlphaBeta, FormsError> {
    if j % 2 == 0 || j < 2 * kappa + 3 || kappa < 0 {
        return Err(FormsError::WrongRegion { j, kappa, expected: "Bosnia & Herzegovina / Croatia" });
    }
    let mut d = Vec::with_capacity(2);
    for c in 1..=2i64 {
        let spec = balkan_cf_spec(j, kappa, c);
        let depth = spec.termination().expect("finite region");
        let q = eval_cf_convergent(&spec, depth).expect("no zero denominators on the grid");
        let delta = g_weight(j, kappa, c) / q / h_weight(j, kappa, c);
        d.push(delta);
    }
    let beta = &d[1] - &d[0];
    Ok(AlphaBeta::new(d.swap_remove(0), beta))
}

/// Exact Lagrange interpolation through `(x, y)` points with distinct `x`.
pub fn lagrange_interpolate(points: &[(i64, BigRational)]) -> Vec<BigRational> {
    let n = points.len();
    let mut acc = vec![BigRational::zero(); n];
    for (k, (xk, yk)) in points.iter().enumerate() {
        // basis polynomial Π_{m != k} (x - x_m) / (x_k - x_m)
        let mut basis = vec![BigRational::zero(); n];
        basis[0] = BigRational::one();
        let mut deg = 0usize;
        let mut denom = BigRational::one();
        for (m, (xm, _)) in points.iter().enumerate() {
            if m == k {
                continue;
            }
            // multiply by (x - xm): new[t] = old[t-1] - xm*old[t]
            for t in (0..=deg + 1).rev() {
                let lower = if t == 0 { BigRational::zero() } else { basis[t - 1].clone() };
                basis[t] = lower - rat(*xm) * &basis[t];
            }
            deg += 1;
            denom *= rat(xk - xm);
        }
        let w = yk / denom;
        for (a, b) in acc.iter_mut().zip(basis.iter()) {
            *a += b * &w;
        }
    }
    while acc.len() > 1 && acc.last().is_some_and(Zero::is_zero) {
        acc.pop();
    }
    acc
}

/// Recover the ψ row for index `i` by interpolation: sample `i + 3`
/// consecutive odd `j` starting at `2i+5` (one more than `deg ψ2 + 1`, the
/// extra point is a consistency check), derive `(α, β)` by finite summation,
/// multiply by `μ` and interpolate exactly. Panics if the samples are not
/// polynomial of the expected degree or the coefficients are not integers —
/// both would falsify the closed form rather than indicate bad input.
pub fn croatia_psi_interpolate(i: usize) -> PsiPoly {
    let samples = i + 3;
    let mut pts1 = Vec::with_capacity(samples);
    let mut pts2 = Vec::with_capacity(samples);
    for t in 0..samples {
        let j = 2 * i as i64 + 5 + 2 * t as i64;
        let kappa = (j - 2 * i as i64 - 3) / 2;
        let ab = croatia_alphabeta_by_summation(j, kappa).expect("finite region");
        let mu = mu_factor(i, j);
        pts1.push((j, ab.alpha * &mu));
        pts2.push((j, ab.beta * &mu));
    }
    // interpolate on the minimal point count, check against the extras
    let c1 = lagrange_interpolate(&pts1[..i + 2]);
    let c2 = lagrange_interpolate(&pts2[..i + 3]);
    for (x, y) in &pts1 {
        assert_eq!(&polyval_rat(&c1, *x), y, "psi1 consistency at j={x}");
    }
    for (x, y) in &pts2 {
        assert_eq!(&polyval_rat(&c2, *x), y, "psi2 consistency at j={x}");
    }
    let to_int = |cs: &[BigRational]| -> Vec<BigInt> {
        cs.iter()
            .map(|c| {
                assert!(c.denom().is_one(), "non-integer psi coefficient {c}");
                c.numer().clone()
            })
            .collect()
    };
    let coeffs1 = to_int(&c1);
    let coeffs2 = to_int(&c2);
    assert_eq!(coeffs1.len(), i + 1, "deg psi1 = i");
    assert_eq!(coeffs2.len(), i + 2, "deg psi2 = i + 1");
    PsiPoly { i, coeffs1, coeffs2 }
}

impl PsiPoly {
    /// Per-degree gcd of the two rows' coefficients (up to the shorter
    /// degree). These come out conspicuously smooth on every known row; no
    /// bound is asserted, the values are only surfaced.
    pub fn coefficient_gcds(&self) -> Vec<BigInt> {
        use num_integer::Integer;
        self.coeffs1
            .iter()
            .zip(self.coeffs2.iter())
            .map(|(a, b)| a.gcd(b))
            .collect()
    }
}

fn polyval_rat(coeffs: &[BigRational], x: i64) -> BigRational {
    let x = rat(x);
    let mut acc = BigRational::zero();
    for c in coeffs.iter().rev() {
        acc = acc * &x + c;
    }
    acc
}

/// Leading-coefficient law of the ψ rows:
/// `lead ψ1(i,·) = −(2i−1)!!` and `lead ψ2(i,·) = 4·(2i−1)!!`.
pub fn psi_leading_law(psi: &PsiPoly) -> bool {
    let sf = semifactorial(2 * psi.i as i64 - 1).expect("i >= 0");
    psi.coeffs1.last() == Some(&(-&sf))
        && psi.coeffs2.last() == Some(&(&sf * big(4)))
}
