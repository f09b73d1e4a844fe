//! Canonical closed-form values `a0 / (a1 + a2·K)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::exactnum::{constant_value, ConstantName, ExactError, HPReal, GUARD_DIGITS};

/// The constant appearing in the denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QKind {
    /// Catalan's constant.
    G,
    /// `log 2`.
    Log2,
    /// No constant: the value is the plain rational `a0/a1`.
    Rational,
}

/// A value `a0 / (a1 + a2·K)` over canonical integers:
/// `gcd(a0, a1, a2) = 1` and the sign is normalised so that `a2 > 0`, or
/// `a1 > 0` when `a2 = 0`, or `a0 >= 0` when both vanish. `kind` is
/// `Rational` exactly when `a2 = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QExact {
    a0: BigInt,
    a1: BigInt,
    a2: BigInt,
    kind: QKind,
}

impl QExact {
    /// Canonicalise an integer triple. `family` is the constant of the
    /// originating family; it is demoted to `Rational` when `a2 = 0`.
    pub fn new(a0: BigInt, a1: BigInt, a2: BigInt, family: QKind) -> Self {
        let mut t = QExact { a0, a1, a2, kind: family };
        // value 0 collapses to the canonical zero
        if t.a0.is_zero() {
            return QExact {
                a0: BigInt::zero(),
                a1: BigInt::one(),
                a2: BigInt::zero(),
                kind: QKind::Rational,
            };
        }
        assert!(
            !(t.a1.is_zero() && t.a2.is_zero()),
            "denominator cannot vanish"
        );
        if t.a2.is_zero() {
            t.kind = QKind::Rational;
        }
        let g = t.a0.gcd(&t.a1).gcd(&t.a2);
        if g > BigInt::one() {
            t.a0 /= &g;
            t.a1 /= &g;
            t.a2 /= &g;
        }
        let flip = if !t.a2.is_zero() {
            t.a2.is_negative()
        } else if !t.a1.is_zero() {
            t.a1.is_negative()
        } else {
            t.a0.is_negative()
        };
        if flip {
            t.a0 = -t.a0;
            t.a1 = -t.a1;
            t.a2 = -t.a2;
        }
        t
    }

    /// Canonicalise from rational numerator/denominator parts
    /// `n / (d + f·K)` by clearing denominators.
    pub fn from_rational_parts(
        n: &BigRational,
        d: &BigRational,
        f: &BigRational,
        family: QKind,
    ) -> Self {
        let l = n.denom().lcm(d.denom()).lcm(f.denom());
        let lr = BigRational::from_integer(l);
        let scale = |x: &BigRational| (x * &lr).to_integer();
        QExact::new(scale(n), scale(d), scale(f), family)
    }

    /// A plain rational value.
    pub fn from_rational(q: &BigRational) -> Self {
        QExact::new(q.numer().clone(), q.denom().clone(), BigInt::zero(), QKind::Rational)
    }

    pub fn a0(&self) -> &BigInt {
        &self.a0
    }

    pub fn a1(&self) -> &BigInt {
        &self.a1
    }

    pub fn a2(&self) -> &BigInt {
        &self.a2
    }

    pub fn kind(&self) -> QKind {
        self.kind
    }

    pub fn triple(&self) -> (BigInt, BigInt, BigInt) {
        (self.a0.clone(), self.a1.clone(), self.a2.clone())
    }

    /// The rational value; `None` for kinds with a constant.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.kind {
            QKind::Rational => Some(BigRational::new(self.a0.clone(), self.a1.clone())),
            _ => None,
        }
    }

    /// Decimal digits of the largest coefficient; a proxy for the working
    /// precision needed to separate the value from nearby rationals.
    pub fn coeff_digits(&self) -> u32 {
        [&self.a0, &self.a1, &self.a2]
            .into_iter()
            .map(|x| x.abs().to_string().len() as u32)
            .max()
            .unwrap_or(1)
    }

    /// Equality against a printed triple up to overall sign.
    pub fn matches_triple_up_to_sign(&self, a0: &BigInt, a1: &BigInt, a2: &BigInt) -> bool {
        (&self.a0 == a0 && &self.a1 == a1 && &self.a2 == a2)
            || (self.a0 == -a0 && self.a1 == -a1 && self.a2 == -a2)
    }

    /// Decimal value to `digits` correct digits.
    pub fn value_hp(&self, digits: u32) -> Result<HPReal, ExactError> {
        let scale = digits + GUARD_DIGITS;
        let denom = match self.kind {
            QKind::Rational => HPReal::from_bigint(&self.a1, scale),
            QKind::G | QKind::Log2 => {
                let name = match self.kind {
                    QKind::G => ConstantName::CatalanG,
                    _ => ConstantName::Log2,
                };
                // scale the constant's precision with the coefficient size so
                // the quotient keeps `digits` correct digits
                let extra = (self.a2.abs().to_string().len() as u32) + 5;
                let k = constant_value(name, scale + extra)?;
                HPReal::from_bigint(&self.a1, scale + extra).add(&k.mul_int(&self.a2))
            }
        };
        Ok(HPReal::from_bigint(&self.a0, denom.scale()).div(&denom).with_scale(scale))
    }
}

impl std::fmt::Display for QExact {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.kind {
            QKind::Rational => {
                if self.a1.is_one() {
                    write!(f, "{}", self.a0)
                } else {
                    write!(f, "{}/{}", self.a0, self.a1)
                }
            }
            QKind::G => write!(f, "{}/({} + {}*G)", self.a0, self.a1, self.a2),
            QKind::Log2 => write!(f, "{}/({} + {}*log2)", self.a0, self.a1, self.a2),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::big;

    #[test]
    fn canonical_sign_and_gcd() {
        let q = QExact::new(big(-288), big(31), big(-90), QKind::G);
        assert_eq!(q.triple(), (big(288), big(-31), big(90)));
        assert_eq!(q.kind(), QKind::G);
        assert!(q.matches_triple_up_to_sign(&big(-288), &big(31), &big(-90)));

        let q = QExact::new(big(4), big(-6), big(0), QKind::G);
        assert_eq!(q.triple(), (big(-2), big(3), big(0)));
        assert_eq!(q.kind(), QKind::Rational);

        let q = QExact::new(big(0), big(7), big(-3), QKind::G);
        assert_eq!(q.triple(), (big(0), big(1), big(0)));
    }

    #[test]
    fn rational_parts_clearing() {
        let n = BigRational::new(big(3), big(4));
        let d = BigRational::new(big(-1), big(6));
        let f = BigRational::new(big(5), big(2));
        let q = QExact::from_rational_parts(&n, &d, &f, QKind::G);
        // common denominator 12: (9, -2, 30); gcd 1; a2 > 0 already
        assert_eq!(q.triple(), (big(9), big(-2), big(30)));
    }

    #[test]
    fn value_of_known_triple() {
        // -288/(31-90G) ≈ 5.599092879583...
        let q = QExact::new(big(-288), big(31), big(-90), QKind::G);
        let v = q.value_hp(30).unwrap();
        assert_eq!(&v.to_decimal_string(12), "5.599092879583");
    }
}
