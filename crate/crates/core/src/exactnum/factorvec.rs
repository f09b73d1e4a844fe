//! Factor vectors: signed products kept as sparse prime-exponent maps.
//!
//! Products of smooth terms are held unevaluated as `sign · Π p^e` so that
//! common prime content between several such products can be cancelled before
//! any large multiplication happens. Factorisations of integers up to
//! [`FACTOR_TABLE_BOUND`] come from a precomputed smallest-prime-factor
//! table; larger terms fall back to trial division.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::ExactError;

/// Upper bound of the precomputed factorisation table.
pub const FACTOR_TABLE_BOUND: u64 = 2998;

/// A sparse prime → signed exponent map with an overall sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorVec {
    sign: i8,
    exponents: BTreeMap<u64, i64>,
}

fn spf_table() -> &'static Vec<u32> {
    static TABLE: OnceLock<Vec<u32>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let n = FACTOR_TABLE_BOUND as usize;
        let mut spf = vec![0u32; n + 1];
        for i in 2..=n {
            if spf[i] == 0 {
                let mut j = i;
                while j <= n {
                    if spf[j] == 0 {
                        spf[j] = i as u32;
                    }
                    j += i;
                }
            }
        }
        spf
    })
}

impl FactorVec {
    /// The empty product: `+1`.
    pub fn one() -> Self {
        FactorVec { sign: 1, exponents: BTreeMap::new() }
    }

    /// Overall sign, `+1` or `-1`.
    pub fn sign(&self) -> i8 {
        self.sign
    }

    /// The exponent map (no zero exponents are stored).
    pub fn exponents(&self) -> &BTreeMap<u64, i64> {
        &self.exponents
    }

    fn push(&mut self, prime: u64, exp: i64) {
        if exp == 0 {
            return;
        }
        let e = self.exponents.entry(prime).or_insert(0);
        *e += exp;
        if *e == 0 {
            self.exponents.remove(&prime);
        }
    }

    /// Multiply a nonzero integer into the vector.
    pub fn mul_term(&mut self, term: &BigInt) -> Result<(), ExactError> {
        if term.is_zero() {
            return Err(ExactError::ZeroTerm);
        }
        if term.is_negative() {
            self.sign = -self.sign;
        }
        let mut m = term.abs();
        // table path for small values, trial division beyond
        loop {
            if m.is_one() {
                break;
            }
            if let Some(v) = m.to_u64() {
                if v <= FACTOR_TABLE_BOUND {
                    let spf = spf_table();
                    let mut v = v;
                    while v > 1 {
                        let p = spf[v as usize] as u64;
                        let mut e = 0i64;
                        while v % p == 0 {
                            v /= p;
                            e += 1;
                        }
                        self.push(p, e);
                    }
                    break;
                }
            }
            // trial division step
            let mut p = BigInt::from(2);
            loop {
                if (&p * &p) > m {
                    // m itself is prime
                    let v = m.to_u64().expect("prime factor exceeds u64 range");
                    self.push(v, 1);
                    m = BigInt::one();
                    break;
                }
                if (&m % &p).is_zero() {
                    let mut e = 0i64;
                    while (&m % &p).is_zero() {
                        m /= &p;
                        e += 1;
                    }
                    self.push(p.to_u64().expect("small prime"), e);
                    break;
                }
                p += 1;
            }
        }
        Ok(())
    }

    /// Divide a nonzero integer out of the vector (exponents may go negative).
    pub fn div_term(&mut self, term: &BigInt) -> Result<(), ExactError> {
        let mut inv = FactorVec::one();
        inv.mul_term(term)?;
        self.sign *= inv.sign;
        for (p, e) in inv.exponents {
            self.push(p, -e);
        }
        Ok(())
    }

    /// Evaluate the vector to a reduced rational.
    pub fn realize(&self) -> BigRational {
        let mut num = BigInt::from(self.sign);
        let mut den = BigInt::one();
        for (&p, &e) in &self.exponents {
            if e > 0 {
                num *= BigInt::from(p).pow(e as u32);
            } else {
                den *= BigInt::from(p).pow((-e) as u32);
            }
        }
        BigRational::new(num, den)
    }
}

/// Factor a list of nonzero integers into a single [`FactorVec`] whose
/// realisation equals the plain product (empty list gives `+1`).
pub fn factored_product(terms: &[BigInt]) -> Result<FactorVec, ExactError> {
    let mut v = FactorVec::one();
    for t in terms {
        v.mul_term(t)?;
    }
    Ok(v)
}

/// For each prime, subtract the minimum exponent across all vectors from
/// every vector. Pairwise realised ratios are unchanged; at least one vector
/// loses each shared prime entirely.
pub fn reduce_common(vectors: &[FactorVec]) -> Vec<FactorVec> {
    let mut out = vectors.to_vec();
    if out.is_empty() {
        return out;
    }
    let mut primes: Vec<u64> = out
        .iter()
        .flat_map(|v| v.exponents.keys().copied())
        .collect();
    primes.sort_unstable();
    primes.dedup();
    for p in primes {
        let m = out
            .iter()
            .map(|v| v.exponents.get(&p).copied().unwrap_or(0))
            .min()
            .expect("nonempty");
        if m != 0 {
            for v in &mut out {
                v.push(p, -m);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn fv(pairs: &[(u64, i64)], sign: i8) -> FactorVec {
        let mut v = FactorVec::one();
        v.sign = sign;
        for &(p, e) in pairs {
            v.push(p, e);
        }
        v
    }

    #[test]
    fn examples() {
        let v = factored_product(&[BigInt::from(6), BigInt::from(10)]).unwrap();
        assert_eq!(v, fv(&[(2, 2), (3, 1), (5, 1)], 1));
        assert_eq!(v.realize(), BigRational::from_integer(BigInt::from(60)));

        let v = factored_product(&[BigInt::from(-4)]).unwrap();
        assert_eq!(v, fv(&[(2, 2)], -1));
        assert_eq!(v.realize(), BigRational::from_integer(BigInt::from(-4)));

        let v = factored_product(&[]).unwrap();
        assert_eq!(v, FactorVec::one());
        assert!(v.realize().is_one());
    }

    #[test]
    fn zero_term_rejected() {
        assert_eq!(
            factored_product(&[BigInt::from(0)]),
            Err(ExactError::ZeroTerm)
        );
    }

    #[test]
    fn beyond_table_falls_back_to_trial_division() {
        // 3001 is prime and above the table bound
        let v = factored_product(&[BigInt::from(3001 * 4)]).unwrap();
        assert_eq!(v, fv(&[(2, 2), (3001, 1)], 1));
    }

    #[test]
    fn reduce_common_examples() {
        let vs = vec![fv(&[(2, 3)], 1), fv(&[(2, 1)], 1), fv(&[(2, 2)], 1)];
        let out = reduce_common(&vs);
        assert_eq!(out, vec![fv(&[(2, 2)], 1), fv(&[], 1), fv(&[(2, 1)], 1)]);

        let single = reduce_common(&[fv(&[(2, 5), (7, 2)], -1)]);
        assert_eq!(single, vec![fv(&[], -1)]);

        let vs = vec![fv(&[(2, 1), (3, 2)], 1), fv(&[(3, 1)], 1)];
        let out = reduce_common(&vs);
        assert_eq!(out, vec![fv(&[(2, 1), (3, 1)], 1), fv(&[], 1)]);
    }

    #[test]
    fn realization_matches_plain_product_1000_cases() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
        for _ in 0..1000 {
            let len = rng.gen_range(0..6);
            let terms: Vec<BigInt> = (0..len)
                .map(|_| {
                    let mut t = 0i64;
                    while t == 0 {
                        t = rng.gen_range(-1_000_000i64..=1_000_000);
                    }
                    BigInt::from(t)
                })
                .collect();
            let v = factored_product(&terms).unwrap();
            let plain = terms.iter().fold(BigInt::one(), |acc, t| acc * t);
            assert_eq!(v.realize(), BigRational::from_integer(plain));
        }
    }

    #[test]
    fn reduce_common_preserves_ratios() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let mk = |rng: &mut rand_chacha::ChaCha8Rng| {
                let terms: Vec<BigInt> = (0..rng.gen_range(1..5))
                    .map(|_| {
                        let mut t = 0i64;
                        while t == 0 {
                            t = rng.gen_range(-5000i64..=5000);
                        }
                        BigInt::from(t)
                    })
                    .collect();
                factored_product(&terms).unwrap()
            };
            let a = mk(&mut rng);
            let b = mk(&mut rng);
            let out = reduce_common(&[a.clone(), b.clone()]);
            assert_eq!(
                a.realize() / b.realize(),
                out[0].realize() / out[1].realize()
            );
        }
    }
}
