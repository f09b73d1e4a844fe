//! Exact integral LLL reduction (the all-integer formulation, Cohen's
//! Algorithm 2.6.7): Gram–Schmidt data is carried as integers
//! `λ[i][j] = μ[i][j]·d[j]` and subdeterminants `d[i]`, so no rationals
//! appear and no precision is lost.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::RelationError;

/// A row vector of big integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntVector(pub Vec<BigInt>);

impl IntVector {
    pub fn from_i64(v: &[i64]) -> Self {
        IntVector(v.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn norm_sq(&self) -> BigInt {
        self.0.iter().map(|x| x * x).sum()
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }
}

/// A list of equal-dimension rows forming a lattice basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeBasis {
    pub rows: Vec<IntVector>,
}

impl LatticeBasis {
    pub fn new(rows: Vec<IntVector>) -> Self {
        assert!(!rows.is_empty(), "empty basis");
        let dim = rows[0].0.len();
        assert!(rows.iter().all(|r| r.0.len() == dim), "ragged basis");
        LatticeBasis { rows }
    }
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Nearest integer to `n/d` (d > 0), ties toward zero.
fn round_div(n: &BigInt, d: &BigInt) -> BigInt {
    let (q, r) = num_integer::Integer::div_rem(n, d);
    if r.abs() * 2 > d.abs() {
        if (n.is_negative()) != (d.is_negative()) {
            q - BigInt::one()
        } else {
            q + BigInt::one()
        }
    } else {
        q
    }
}

struct LllState {
    b: Vec<Vec<BigInt>>,
    /// `lambda[i][j] = μ[i][j] d[j]` for `j < i`
    lambda: Vec<Vec<BigInt>>,
    /// `d[0] = 1` prepended: `d[i+1]` is the Gram determinant of the first
    /// `i+1` vectors
    d: Vec<BigInt>,
}

impl LllState {
    fn reduce_pair(&mut self, k: usize, l: usize) {
        // size-reduce b_k against b_l
        let q = round_div(&self.lambda[k][l], &self.d[l + 1]);
        if q.is_zero() {
            return;
        }
        let row_l = self.b[l].clone();
        for (x, y) in self.b[k].iter_mut().zip(row_l.iter()) {
            *x -= &q * y;
        }
        for j in 0..l {
            let v = &self.lambda[l][j] * &q;
            self.lambda[k][j] -= v;
        }
        let v = &self.d[l + 1] * &q;
        self.lambda[k][l] -= v;
    }

    fn swap(&mut self, k: usize, kmax: usize) {
        self.b.swap(k, k - 1);
        for j in 0..k - 1 {
            let tmp = self.lambda[k][j].clone();
            self.lambda[k][j] = std::mem::replace(&mut self.lambda[k - 1][j], tmp);
        }
        let lam = self.lambda[k][k - 1].clone();
        let bnew = (&self.d[k - 1] * &self.d[k + 1] + &lam * &lam) / &self.d[k];
        for i in k + 1..=kmax {
            let t = self.lambda[i][k].clone();
            self.lambda[i][k] = (&self.d[k + 1] * &self.lambda[i][k - 1] - &lam * &t) / &self.d[k];
            self.lambda[i][k - 1] = (&bnew * &t + &lam * &self.lambda[i][k]) / &self.d[k + 1];
        }
        self.d[k] = bnew;
    }
}

/// LLL-reduce a basis of independent rows with parameter `delta ∈ (1/4, 1)`
/// (pass `(3, 4)` for the classical 3/4). Exact integer arithmetic
/// throughout; returns [`RelationError::DependentRows`] when a Gram
/// determinant vanishes.
pub fn lll_reduce(basis: &LatticeBasis, delta: (u32, u32)) -> Result<LatticeBasis, RelationError> {
    let delta_rat = BigRational::new(BigInt::from(delta.0), BigInt::from(delta.1));
    if delta_rat <= BigRational::new(BigInt::one(), BigInt::from(4))
        || delta_rat >= BigRational::one()
    {
        return Err(RelationError::BadDelta);
    }
    let n = basis.rows.len();
    let mut st = LllState {
        b: basis.rows.iter().map(|r| r.0.clone()).collect(),
        lambda: vec![vec![BigInt::zero(); n]; n],
        d: vec![BigInt::one(); n + 1],
    };
    // initial Gram data
    let mut kmax = 0usize;
    st.d[1] = dot(&st.b[0], &st.b[0]);
    if st.d[1].is_zero() {
        return Err(RelationError::DependentRows);
    }
    let mut k = 1usize;
    while k < n {
        if k > kmax {
            kmax = k;
            // incremental Gram-Schmidt for row k
            for j in 0..=k {
                let mut u = dot(&st.b[k], &st.b[j]);
                for i in 0..j {
                    u = (&st.d[i + 1] * &u - &st.lambda[k][i] * &st.lambda[j][i]) / &st.d[i];
                }
                if j < k {
                    st.lambda[k][j] = u;
                } else {
                    st.d[k + 1] = u;
                    if st.d[k + 1].is_zero() {
                        return Err(RelationError::DependentRows);
                    }
                }
            }
        }
        loop {
            st.reduce_pair(k, k - 1);
            // Lovász test: d[k+1] d[k-1] < (δ - μ²) d[k]² rearranged to
            // integer form: d[k+1] d[k-1] q < (p d[k]² - q λ²) with δ = p/q
            let lhs = &st.d[k + 1] * &st.d[k - 1] * BigInt::from(delta.1);
            let rhs = BigInt::from(delta.0) * &st.d[k] * &st.d[k]
                - BigInt::from(delta.1) * &st.lambda[k][k - 1] * &st.lambda[k][k - 1];
            if lhs < rhs {
                st.swap(k, kmax);
                k = k.max(2) - 1;
            } else {
                for l in (0..k.max(1) - 1).rev() {
                    st.reduce_pair(k, l);
                }
                k += 1;
                break;
            }
        }
    }
    Ok(LatticeBasis::new(st.b.into_iter().map(IntVector).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_stays_reduced() {
        let basis = LatticeBasis::new(vec![
            IntVector::from_i64(&[1, 0, 0]),
            IntVector::from_i64(&[0, 1, 0]),
            IntVector::from_i64(&[0, 0, 1]),
        ]);
        let out = lll_reduce(&basis, (3, 4)).unwrap();
        assert_eq!(out, basis);
    }

    #[test]
    fn two_dim_reduction() {
        let basis = LatticeBasis::new(vec![
            IntVector::from_i64(&[1, 0]),
            IntVector::from_i64(&[4, 1]),
        ]);
        let out = lll_reduce(&basis, (3, 4)).unwrap();
        let shortest_in = basis.rows.iter().map(IntVector::norm_sq).min().unwrap();
        let shortest_out = out.rows.iter().map(IntVector::norm_sq).min().unwrap();
        assert!(shortest_out <= shortest_in);
        assert_eq!(out.rows[0].norm_sq(), BigInt::from(1));
    }

    #[test]
    fn dependent_rows_detected() {
        let basis = LatticeBasis::new(vec![
            IntVector::from_i64(&[1, 2, 3]),
            IntVector::from_i64(&[2, 4, 6]),
            IntVector::from_i64(&[0, 1, 1]),
        ]);
        assert_eq!(lll_reduce(&basis, (3, 4)), Err(RelationError::DependentRows));
    }

    #[test]
    fn bad_delta_rejected() {
        let basis = LatticeBasis::new(vec![IntVector::from_i64(&[1])]);
        assert_eq!(lll_reduce(&basis, (1, 4)), Err(RelationError::BadDelta));
        assert_eq!(lll_reduce(&basis, (5, 4)), Err(RelationError::BadDelta));
    }

    #[test]
    fn shortest_vector_vs_brute_force_100_lattices() {
        use num_traits::ToPrimitive;
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xba5e);
        let mut checked = 0;
        while checked < 100 {
            let rows: Vec<IntVector> = (0..3)
                .map(|_| IntVector::from_i64(&[
                    rng.gen_range(-30i64..=30),
                    rng.gen_range(-30i64..=30),
                    rng.gen_range(-30i64..=30),
                ]))
                .collect();
            let basis = LatticeBasis::new(rows.clone());
            let reduced = match lll_reduce(&basis, (3, 4)) {
                Ok(b) => b,
                Err(RelationError::DependentRows) => continue,
                Err(e) => panic!("{e}"),
            };
            checked += 1;
            // brute-force λ₁ over a generous coefficient box
            let mut lambda1: Option<i64> = None;
            for a in -20i64..=20 {
                for b in -20i64..=20 {
                    for c in -20i64..=20 {
                        if (a, b, c) == (0, 0, 0) {
                            continue;
                        }
                        let mut norm = 0i64;
                        for t in 0..3 {
                            let x = a * rows[0].0[t].to_i64().unwrap()
                                + b * rows[1].0[t].to_i64().unwrap()
                                + c * rows[2].0[t].to_i64().unwrap();
                            norm += x * x;
                        }
                        lambda1 = Some(lambda1.map_or(norm, |m: i64| m.min(norm)));
                    }
                }
            }
            let lambda1 = BigInt::from(lambda1.unwrap());
            let b1 = reduced.rows.iter().map(IntVector::norm_sq).min().unwrap();
            // ‖b₁‖² ≤ 2^(n−1) λ₁² in the squared-norm form
            assert!(b1 <= &lambda1 * 4, "b1²={b1} λ1²={lambda1}");
            assert!(b1 >= lambda1.clone(), "reduced vector shorter than λ₁?");
        }
    }
}
