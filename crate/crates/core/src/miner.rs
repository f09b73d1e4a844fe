//! Reproducible fragments of the mining pipeline: the brittleness measure,
//! the factored target function and the divisibility decimator.

use std::collections::HashMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use thiserror::Error;

use crate::exactnum::{big, catalan_number, prod_range};

/// Errors raised by the mining tools.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MinerError {
    /// Brittleness of zero is undefined.
    #[error("brittleness is undefined for zero")]
    ZeroValue,
    /// Malformed database line.
    #[error("cannot parse database line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

/// Candidate index vector: coefficients of `j`, `κ`, `c`, `1` and (for the
/// product family) the per-factor step.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UVec {
    pub coords: Vec<i64>,
}

impl UVec {
    pub fn new(coords: Vec<i64>) -> Self {
        UVec { coords }
    }
}

impl std::fmt::Display for UVec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// One database record: a parameter point and its factored target value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MiningEntry {
    pub j: i64,
    pub kappa: i64,
    pub c: i64,
    pub t: BigInt,
}

/// A database of factored targets, serialised as ASCII lines `j κ c t`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MiningDB {
    pub entries: Vec<MiningEntry>,
}

impl MiningDB {
    /// Parse the line-oriented format; blank lines and `#` comments are
    /// skipped. Decimation entries must be nonzero.
    pub fn parse(text: &str) -> Result<Self, MinerError> {
        let mut entries = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut it = line.split_whitespace();
            let mut field = |name: &str| {
                it.next().ok_or(MinerError::Parse {
                    line: idx + 1,
                    reason: format!("missing {name}"),
                })
            };
            let j = field("j")?.parse::<i64>().map_err(|e| MinerError::Parse {
                line: idx + 1,
                reason: e.to_string(),
            })?;
            let kappa = field("kappa")?.parse::<i64>().map_err(|e| MinerError::Parse {
                line: idx + 1,
                reason: e.to_string(),
            })?;
            let c = field("c")?.parse::<i64>().map_err(|e| MinerError::Parse {
                line: idx + 1,
                reason: e.to_string(),
            })?;
            let t = field("t")?.parse::<BigInt>().map_err(|e| MinerError::Parse {
                line: idx + 1,
                reason: e.to_string(),
            })?;
            if t.is_zero() {
                return Err(MinerError::Parse {
                    line: idx + 1,
                    reason: "zero target".into(),
                });
            }
            entries.push(MiningEntry { j, kappa, c, t });
        }
        Ok(MiningDB { entries })
    }

    pub fn serialize(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            writeln!(out, "{} {} {} {}", e.j, e.kappa, e.c, e.t).expect("string write");
        }
        out
    }
}

/// Brittleness `Ξ` of a reduced rational: the number of prime factors,
/// counted with multiplicity, of numerator and denominator together.
pub fn brittleness(q: &BigRational) -> Result<u64, MinerError> {
    if q.is_zero() {
        return Err(MinerError::ZeroValue);
    }
    Ok(count_prime_factors(q.numer()) + count_prime_factors(q.denom()))
}

fn count_prime_factors(n: &BigInt) -> u64 {
    let mut m = n.abs();
    let mut count = 0u64;
    let mut p = BigInt::from(2);
    while &p * &p <= m {
        while (&m % &p).is_zero() {
            m /= &p;
            count += 1;
        }
        p += 1u32;
    }
    if m > BigInt::one() {
        count += 1;
    }
    count
}

/// The factored target
/// `C(κ−1) C((j−3)/2) (2κ−1)(j−2) Π_{i=1}^{(j−1)/2} (2c−2κ+2i−1)(κ−i+1)`.
pub fn n_omega_target(j: i64, kappa: i64, c: i64) -> BigInt {
    catalan_number(kappa - 1).expect("kappa >= 1")
        * catalan_number((j - 3) / 2).expect("j >= 3")
        * big((2 * kappa - 1) * (j - 2))
        * prod_range(1, (j - 1) / 2, |i| {
            big(2 * c - 2 * kappa + 2 * i - 1) * big(kappa - i + 1)
        })
}

/// Candidate families the decimator can sieve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CandidateFamily {
    /// `y = u0·j + u1·κ + u2·c + u3` (4 coordinates).
    Affine,
    /// `y = C(u0·j + u1·κ + u2·c + u3)` (4 coordinates).
    CatalanIndexed,
    /// `y = Π_{i=1}^{(j−1)/2} (u0·j + u1·κ + u2·c + u3 + u4·i)` (5 coords).
    Product,
}

impl CandidateFamily {
    pub fn arity(self) -> usize {
        match self {
            CandidateFamily::Affine | CandidateFamily::CatalanIndexed => 4,
            CandidateFamily::Product => 5,
        }
    }
}

/// What to do when a candidate evaluates to zero on an entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ZeroPolicy {
    /// Zero divides nothing, so the candidate is eliminated (reproduces the
    /// published counts).
    #[default]
    Eliminates,
    /// Skip the entry instead.
    Skips,
}

/// How Catalan-indexed candidates treat negative indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum NegativeIndexPolicy {
    /// Continue the evaluation: `C(-1) = -1` (divides everything) and
    /// `C(n) = 0` below, falling through to the zero policy. Reproduces the
    /// published 288-survivor count.
    #[default]
    Continue,
    /// Treat any negative index as undefined: the candidate is eliminated.
    Eliminates,
}

/// Decimation policy knobs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct DecimatePolicy {
    pub zero: ZeroPolicy,
    pub negative_index: NegativeIndexPolicy,
}

/// Result of a decimation run.
#[derive(Debug, Clone)]
pub struct DecimationOutcome {
    /// Candidates not eliminated by any entry, in lexicographic order.
    pub survivors: Vec<UVec>,
    /// Number of candidates eliminated by each entry independently
    /// (overlapping; the union is `box size - survivors.len()`).
    pub per_entry_eliminated: Vec<u64>,
    /// Total box size.
    pub box_size: u64,
}

/// Sieve a per-coordinate integer box against the database: a candidate
/// survives iff its evaluation divides the target on every entry.
pub fn decimate(
    family: CandidateFamily,
    bounds: &[(i64, i64)],
    db: &MiningDB,
    policy: DecimatePolicy,
) -> DecimationOutcome {
    assert_eq!(bounds.len(), family.arity(), "box arity mismatch");
    let dims: Vec<Vec<i64>> = bounds.iter().map(|&(lo, hi)| (lo..=hi).collect()).collect();
    let box_size: u64 = dims.iter().map(|d| d.len() as u64).product();

    let mut catalan_cache: HashMap<i64, BigInt> = HashMap::new();
    let mut per_entry = vec![0u64; db.entries.len()];
    let mut survivors = Vec::new();

    let mut idx = vec![0usize; dims.len()];
    let mut u = vec![0i64; dims.len()];
    'outer: loop {
        for (k, slot) in u.iter_mut().enumerate() {
            *slot = dims[k][idx[k]];
        }
        let mut alive = true;
        for (e_idx, e) in db.entries.iter().enumerate() {
            let eliminated = match family {
                CandidateFamily::Affine => {
                    let y = u[0] * e.j + u[1] * e.kappa + u[2] * e.c + u[3];
                    y == 0 && matches!(policy.zero, ZeroPolicy::Eliminates)
                        || (y != 0 && !(&e.t % big(y)).is_zero())
                }
                CandidateFamily::CatalanIndexed => {
                    let m = u[0] * e.j + u[1] * e.kappa + u[2] * e.c + u[3];
                    let y: Option<BigInt> = if m >= 0 {
                        Some(
                            catalan_cache
                                .entry(m)
                                .or_insert_with(|| catalan_number(m).expect("m >= 0"))
                                .clone(),
                        )
                    } else {
                        match policy.negative_index {
                            NegativeIndexPolicy::Continue => {
                                if m == -1 {
                                    Some(big(-1))
                                } else {
                                    Some(BigInt::zero())
                                }
                            }
                            NegativeIndexPolicy::Eliminates => None,
                        }
                    };
                    match y {
                        None => true,
                        Some(y) if y.is_zero() => {
                            matches!(policy.zero, ZeroPolicy::Eliminates)
                        }
                        Some(y) => !(&e.t % y).is_zero(),
                    }
                }
                CandidateFamily::Product => {
                    let base = u[0] * e.j + u[1] * e.kappa + u[2] * e.c + u[3];
                    let mut y = BigInt::one();
                    let mut zero = false;
                    for i in 1..=(e.j - 1) / 2 {
                        let factor = base + u[4] * i;
                        if factor == 0 {
                            zero = true;
                            break;
                        }
                        y *= big(factor);
                    }
                    if zero {
                        matches!(policy.zero, ZeroPolicy::Eliminates)
                    } else {
                        !(&e.t % y).is_zero()
                    }
                }
            };
            if eliminated {
                per_entry[e_idx] += 1;
                alive = false;
            }
        }
        if alive {
            survivors.push(UVec::new(u.clone()));
        }
        // advance the odometer
        for k in (0..idx.len()).rev() {
            idx[k] += 1;
            if idx[k] < dims[k].len() {
                continue 'outer;
            }
            idx[k] = 0;
        }
        break;
    }
    DecimationOutcome { survivors, per_entry_eliminated: per_entry, box_size }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn table_db() -> MiningDB {
        let entries = (40..=47)
            .map(|c| MiningEntry { j: 11, kappa: 6, c, t: n_omega_target(11, 6, c) })
            .collect();
        MiningDB { entries }
    }

    #[test]
    fn brittleness_examples() {
        assert_eq!(brittleness(&rat(1)).unwrap(), 0);
        assert_eq!(brittleness(&rat(12)).unwrap(), 3);
        assert_eq!(brittleness(&BigRational::new(big(3), big(4))).unwrap(), 3);
        assert!(brittleness(&rat(0)).is_err());
    }

    #[test]
    fn target_anchors() {
        assert_eq!(n_omega_target(3, 1, 1), big(1));
        assert_eq!(
            n_omega_target(11, 6, 40).to_string(),
            "86562004597992000"
        );
        assert_eq!(
            n_omega_target(11, 6, 47).to_string(),
            "208349607563697600"
        );
    }

    #[test]
    fn db_round_trip() {
        let db = table_db();
        let text = db.serialize();
        assert_eq!(MiningDB::parse(&text).unwrap(), db);
        assert!(MiningDB::parse("1 2").is_err());
        assert!(MiningDB::parse("1 2 3 0").is_err());
        assert!(MiningDB::parse("# comment\n\n3 1 1 1").unwrap().entries.len() == 1);
    }

    #[test]
    fn empty_db_everything_survives() {
        let out = decimate(
            CandidateFamily::Affine,
            &[(-1, 1); 4],
            &MiningDB::default(),
            DecimatePolicy::default(),
        );
        assert_eq!(out.survivors.len(), 81);
        assert_eq!(out.box_size, 81);
    }

    #[test]
    fn small_box_affine_count() {
        let out = decimate(
            CandidateFamily::Affine,
            &[(-3, 3); 4],
            &table_db(),
            DecimatePolicy::default(),
        );
        assert_eq!(out.box_size, 2401);
        assert_eq!(out.survivors.len(), 332);
    }

    #[test]
    fn true_factor_always_survives() {
        // 2κ−1 divides the target symbolically: ū = (0,2,0,-1)
        let out = decimate(
            CandidateFamily::Affine,
            &[(-3, 3); 4],
            &table_db(),
            DecimatePolicy::default(),
        );
        assert!(out.survivors.contains(&UVec::new(vec![0, 2, 0, -1])));
        // κ−i+1 with i = 1, i.e. plain κ: ū = (0,1,0,0)
        assert!(out.survivors.contains(&UVec::new(vec![0, 1, 0, 0])));
    }

    #[test]
    fn brittleness_additivity() {
        use num_integer::Integer;
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
        let mut tested = 0;
        while tested < 200 {
            let a = rng.gen_range(1i64..=100_000);
            let b = rng.gen_range(1i64..=100_000);
            if big(a).gcd(&big(b)) != big(1) {
                continue;
            }
            tested += 1;
            let xi_a = brittleness(&rat(a)).unwrap();
            let xi_b = brittleness(&rat(b)).unwrap();
            let xi_ab = brittleness(&rat(a * b)).unwrap();
            assert_eq!(xi_ab, xi_a + xi_b, "a={a} b={b}");
        }
    }
}
