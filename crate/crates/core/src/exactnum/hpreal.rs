//! Fixed-point decimal reals.
//!
//! An [`HPReal`] is `mant · 10^(-scale)` with an arbitrary-precision mantissa.
//! Addition and subtraction are exact (operands are aligned by exact
//! rescaling to the finer scale); multiplication and division round the
//! result to the target scale with an error of at most half an ulp.
//!
//! Guard-digit policy: callers that need `d` correct digits perform the whole
//! computation at scale `d + GUARD_DIGITS` and round once at the end. The
//! per-operation bound (exact, or ≤ 0.5 ulp) keeps the worst-case accumulated
//! error of `k` rounding operations below `k/2` ulps of the working scale.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Default number of extra working digits.
pub const GUARD_DIGITS: u32 = 10;

/// Fixed-point decimal real: `mant · 10^(-scale)`.
#[derive(Clone, PartialEq, Eq)]
pub struct HPReal {
    mant: BigInt,
    scale: u32,
}

fn pow10(k: u32) -> BigInt {
    BigInt::from(10u32).pow(k)
}

/// Nearest-integer division (ties away from zero).
fn div_round(n: &BigInt, d: &BigInt) -> BigInt {
    debug_assert!(!d.is_zero());
    let (q, r) = num_integer::Integer::div_rem(n, d);
    if r.abs() * 2 >= d.abs() {
        if n.sign() == d.sign() {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

impl HPReal {
    /// Zero at the given scale.
    pub fn zero(scale: u32) -> Self {
        HPReal { mant: BigInt::zero(), scale }
    }

    /// Exact integer value at the given scale.
    pub fn from_int(n: i64, scale: u32) -> Self {
        HPReal { mant: BigInt::from(n) * pow10(scale), scale }
    }

    /// Exact big-integer value at the given scale.
    pub fn from_bigint(n: &BigInt, scale: u32) -> Self {
        HPReal { mant: n * pow10(scale), scale }
    }

    /// Raw constructor from a mantissa: the value is `mant · 10^(-scale)`.
    pub fn from_mantissa(mant: BigInt, scale: u32) -> Self {
        HPReal { mant, scale }
    }

    /// Rounded conversion of an exact rational; error ≤ 0.5 ulp.
    pub fn from_rational(q: &BigRational, scale: u32) -> Self {
        let n = q.numer() * pow10(scale);
        HPReal { mant: div_round(&n, q.denom()), scale }
    }

    /// Decimal precision of the representation.
    pub fn scale(&self) -> u32 {
        self.scale
    }

    /// The mantissa, i.e. `value · 10^scale`.
    pub fn mantissa(&self) -> &BigInt {
        &self.mant
    }

    /// Exact rational value of the representation.
    pub fn to_rational(&self) -> BigRational {
        BigRational::new(self.mant.clone(), pow10(self.scale))
    }

    /// Re-round to a new scale (exact when upscaling, ≤ 0.5 ulp when
    /// downscaling).
    pub fn with_scale(&self, scale: u32) -> Self {
        match scale.cmp(&self.scale) {
            Ordering::Equal => self.clone(),
            Ordering::Greater => HPReal {
                mant: &self.mant * pow10(scale - self.scale),
                scale,
            },
            Ordering::Less => HPReal {
                mant: div_round(&self.mant, &pow10(self.scale - scale)),
                scale,
            },
        }
    }

    fn aligned(&self, other: &Self) -> (BigInt, BigInt, u32) {
        let scale = self.scale.max(other.scale);
        let a = &self.mant * pow10(scale - self.scale);
        let b = &other.mant * pow10(scale - other.scale);
        (a, b, scale)
    }

    /// Exact sum at the finer of the two scales.
    pub fn add(&self, other: &Self) -> Self {
        let (a, b, scale) = self.aligned(other);
        HPReal { mant: a + b, scale }
    }

    /// Exact difference at the finer of the two scales.
    pub fn sub(&self, other: &Self) -> Self {
        let (a, b, scale) = self.aligned(other);
        HPReal { mant: a - b, scale }
    }

    /// Product rounded to the finer of the two scales (≤ 0.5 ulp).
    pub fn mul(&self, other: &Self) -> Self {
        let scale = self.scale.max(other.scale);
        let prod = &self.mant * &other.mant;
        let down = self.scale + other.scale - scale;
        HPReal { mant: div_round(&prod, &pow10(down)), scale }
    }

    /// Quotient rounded to the finer of the two scales (≤ 0.5 ulp).
    pub fn div(&self, other: &Self) -> Self {
        assert!(!other.mant.is_zero(), "division by zero HPReal");
        let scale = self.scale.max(other.scale);
        // value = (a*10^-sa) / (b*10^-sb) = a/b * 10^(sb-sa); target 10^-scale
        let shift = scale + other.scale - self.scale;
        let n = &self.mant * pow10(shift);
        HPReal { mant: div_round(&n, &other.mant), scale }
    }

    /// Product with an exact integer (exact).
    pub fn mul_int(&self, k: &BigInt) -> Self {
        HPReal { mant: &self.mant * k, scale: self.scale }
    }

    /// Additive inverse (exact).
    pub fn neg(&self) -> Self {
        HPReal { mant: -&self.mant, scale: self.scale }
    }

    /// Absolute value (exact).
    pub fn abs(&self) -> Self {
        HPReal { mant: self.mant.abs(), scale: self.scale }
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    /// `|self - other| < 10^(-digits)`.
    pub fn agrees_to(&self, other: &Self, digits: u32) -> bool {
        let diff = self.sub(other);
        diff.abs().cmp_value(&HPReal::from_rational(
            &BigRational::new(BigInt::from(1), pow10(digits)),
            diff.scale(),
        )) == Ordering::Less
    }

    /// Value comparison after exact alignment.
    pub fn cmp_value(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.aligned(other);
        a.cmp(&b)
    }

    /// Decimal rendering with exactly `digits` fractional digits
    /// (rounded, ≤ 0.5 ulp of the rendered scale).
    pub fn to_decimal_string(&self, digits: u32) -> String {
        let r = self.with_scale(digits);
        let neg = r.mant.is_negative();
        let m = r.mant.abs();
        let (ip, fp) = num_integer::Integer::div_rem(&m, &pow10(digits));
        let frac = format!("{:0>width$}", fp.to_string(), width = digits as usize);
        let sign = if neg { "-" } else { "" };
        if digits == 0 {
            format!("{sign}{ip}")
        } else {
            format!("{sign}{ip}.{frac}")
        }
    }
}

impl fmt::Debug for HPReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HPReal({})", self.to_decimal_string(self.scale.min(40)))
    }
}

impl fmt::Display for HPReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal_string(self.scale))
    }
}
