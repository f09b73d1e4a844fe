//! Generic continued fractions `T(0) + K(P(n)/T(n))` with integer-coefficient
//! partial numerators and denominators.
//!
//! Evaluation runs the forward three-term recurrence
//! `p_n = T(n) p_{n-1} + P(n) p_{n-2}` (and likewise for `q_n`), so exact
//! rational convergents are available at every depth and finite fractions are
//! evaluated exactly. Decimal evaluation doubles the depth until two
//! successive convergents agree to the requested precision plus five digits.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exactnum::{big, HPReal};

/// Default cap on the doubling depth of [`eval_cf_decimal`].
pub const DEFAULT_DEPTH_CAP: u64 = 1 << 21;

static DEPTH_CAP: std::sync::atomic::AtomicU64 = std::sync::atomic::AtomicU64::new(DEFAULT_DEPTH_CAP);

/// Override the depth cap used by [`eval_cf_decimal`] (process-wide).
pub fn set_depth_cap(cap: u64) {
    DEPTH_CAP.store(cap.max(64), std::sync::atomic::Ordering::Relaxed);
}

/// The current process-wide depth cap.
pub fn depth_cap() -> u64 {
    DEPTH_CAP.load(std::sync::atomic::Ordering::Relaxed)
}

/// How often the four-component recurrence state is reduced by its gcd.
/// The convergents share enormous common factors (the reduction typically
/// strips half the digits), but gcd computation on the full state is slow
/// enough that a sparse schedule wins; 4096 measured best on the derivation
/// workloads.
static GCD_REDUCE_INTERVAL: std::sync::atomic::AtomicU64 = std::sync::atomic::AtomicU64::new(4096);

/// Tune the gcd-reduction interval (performance only; values are unchanged).
pub fn set_gcd_reduce_interval(interval: u64) {
    GCD_REDUCE_INTERVAL.store(interval.max(1), std::sync::atomic::Ordering::Relaxed);
}

/// Errors raised by continued-fraction evaluation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CfError {
    /// The convergent denominator vanished at the requested depth.
    #[error("zero convergent denominator at depth {0}")]
    ZeroConvergentDenominator(u64),
    /// Depth doubling hit the cap without reaching the requested agreement.
    #[error("no convergence up to depth {0}")]
    NonConvergence(u64),
}

/// Dense integer polynomial, coefficients lowest first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly(Vec<BigInt>);

impl Poly {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut c = coeffs;
        while c.len() > 1 && c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        if c.is_empty() {
            c.push(BigInt::zero());
        }
        Poly(c)
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| big(c)).collect())
    }

    /// `-2n (n+r0)(n+r1)(n+r2)` — the cubic-root form used by all the
    /// families in this crate.
    pub fn neg2n_from_roots(r0: i64, r1: i64, r2: i64) -> Self {
        let mut p = Poly::from_i64(&[0, -2]);
        for r in [r0, r1, r2] {
            p = p.mul(&Poly::from_i64(&[r, 1]));
        }
        p
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn eval(&self, n: i64) -> BigInt {
        let x = big(n);
        let mut acc = BigInt::zero();
        for c in self.0.iter().rev() {
            acc = acc * &x + c;
        }
        acc
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

/// A continued-fraction specification `T(0) + K_{n>=1}(P(n)/T(n))`.
///
/// `termination`, when present, is the smallest positive integer root of `P`;
/// the fraction is finite and any evaluation at depth ≥ `termination` yields
/// its exact value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CFSpec {
    p: Poly,
    t: Poly,
    termination: Option<u64>,
}

impl CFSpec {
    /// Build a spec, deriving the termination depth from `P`'s smallest
    /// positive integer root.
    pub fn new(p: Poly, t: Poly) -> Self {
        let termination = smallest_positive_root(&p);
        CFSpec { p, t, termination }
    }

    pub fn p(&self) -> &Poly {
        &self.p
    }

    pub fn t(&self) -> &Poly {
        &self.t
    }

    /// The `n = 0` term `T(0)`.
    pub fn lead(&self) -> BigInt {
        self.t.eval(0)
    }

    pub fn termination(&self) -> Option<u64> {
        self.termination
    }
}

/// Exact convergent state of the three-term recurrence.
#[derive(Debug, Clone)]
pub struct Convergent {
    pub p: BigInt,
    pub q: BigInt,
    pub depth: u64,
}

impl Convergent {
    /// Reduced rational value `p/q`.
    pub fn value(&self) -> Result<BigRational, CfError> {
        if self.q.is_zero() {
            return Err(CfError::ZeroConvergentDenominator(self.depth));
        }
        Ok(BigRational::new(self.p.clone(), self.q.clone()))
    }
}

/// Smallest `n >= 1` with `P(n) = 0`, if any.
///
/// Positive integer roots of an integer polynomial divide the constant term
/// of the polynomial deflated by its zero roots, so only divisors of that
/// constant need testing; divisor enumeration uses trial division up to the
/// constant's square root with a scan cap for pathological inputs.
pub fn smallest_positive_root(p: &Poly) -> Option<u64> {
    let mut coeffs: Vec<BigInt> = p.coeffs().to_vec();
    if coeffs.iter().all(Zero::is_zero) {
        return None;
    }
    while coeffs.first().is_some_and(Zero::is_zero) {
        coeffs.remove(0);
    }
    let constant = coeffs.first()?.abs();
    if constant.is_zero() {
        return None;
    }
    let deflated = Poly::new(coeffs);
    // enumerate divisors of `constant` in increasing order
    let c = match constant.to_string().parse::<u64>() {
        Ok(v) => v,
        Err(_) => {
            // constant term too large to enumerate; scan a generous range
            return (1..=1_000_000u64).find(|&n| deflated.eval(n as i64).is_zero());
        }
    };
    let mut divisors = Vec::new();
    let mut d = 1u64;
    while d.saturating_mul(d) <= c {
        if c % d == 0 {
            divisors.push(d);
            divisors.push(c / d);
        }
        d += 1;
    }
    divisors.sort_unstable();
    divisors.dedup();
    divisors
        .into_iter()
        .find(|&n| i64::try_from(n).is_ok_and(|n| deflated.eval(n).is_zero()))
}

struct RecurrenceState {
    p_prev: BigInt,
    p_cur: BigInt,
    q_prev: BigInt,
    q_cur: BigInt,
    depth: u64,
}

impl RecurrenceState {
    fn start(spec: &CFSpec) -> Self {
        RecurrenceState {
            p_prev: BigInt::one(),
            p_cur: spec.lead(),
            q_prev: BigInt::zero(),
            q_cur: BigInt::one(),
            depth: 0,
        }
    }

    fn advance_to(&mut self, spec: &CFSpec, depth: u64) {
        while self.depth < depth {
            let n = self.depth as i64 + 1;
            let t = spec.t.eval(n);
            let p = spec.p.eval(n);
            let p_next = &t * &self.p_cur + &p * &self.p_prev;
            let q_next = &t * &self.q_cur + &p * &self.q_prev;
            self.p_prev = std::mem::replace(&mut self.p_cur, p_next);
            self.q_prev = std::mem::replace(&mut self.q_cur, q_next);
            self.depth += 1;
            if self
                .depth
                .is_multiple_of(GCD_REDUCE_INTERVAL.load(std::sync::atomic::Ordering::Relaxed))
            {
                self.reduce();
            }
        }
    }

    /// Divide the whole state by its gcd; future convergent values are
    /// unchanged since the recurrence is linear.
    fn reduce(&mut self) {
        let g = self
            .p_prev
            .gcd(&self.p_cur)
            .gcd(&self.q_prev.gcd(&self.q_cur));
        if g > BigInt::one() {
            self.p_prev /= &g;
            self.p_cur /= &g;
            self.q_prev /= &g;
            self.q_cur /= &g;
        }
    }

    fn convergent(&self) -> Convergent {
        Convergent { p: self.p_cur.clone(), q: self.q_cur.clone(), depth: self.depth }
    }
}

/// Exact rational value of the depth-truncated fraction. For terminating
/// specs any depth ≥ the termination index returns the exact finite value.
pub fn eval_cf_convergent(spec: &CFSpec, depth: u64) -> Result<BigRational, CfError> {
    let effective = match spec.termination {
        Some(t) => depth.min(t),
        None => depth,
    };
    let mut st = RecurrenceState::start(spec);
    st.advance_to(spec, effective);
    let conv = st.convergent();
    match conv.value() {
        Ok(v) => Ok(v),
        // report the caller's depth, not the clamped one
        Err(CfError::ZeroConvergentDenominator(_)) => {
            Err(CfError::ZeroConvergentDenominator(depth))
        }
        Err(e) => Err(e),
    }
}

/// Decimal value correct to `digits` digits together with the depth at which
/// agreement was reached. Depth doubles from 32 until two successive
/// convergents agree to `digits + 5` decimals, or `depth_cap` is hit.
pub fn eval_cf_decimal_with(
    spec: &CFSpec,
    digits: u32,
    depth_cap: u64,
) -> Result<(HPReal, u64), CfError> {
    let scale = digits + crate::exactnum::GUARD_DIGITS;
    if let Some(t) = spec.termination {
        let exact = eval_cf_convergent(spec, t)?;
        return Ok((HPReal::from_rational(&exact, scale), t));
    }
    let mut st = RecurrenceState::start(spec);
    let mut depth = 32u64;
    st.advance_to(spec, depth);
    let mut prev = st.convergent().value().map(|v| HPReal::from_rational(&v, scale));
    loop {
        let next_depth = depth * 2;
        if next_depth > depth_cap {
            return Err(CfError::NonConvergence(depth_cap));
        }
        st.advance_to(spec, next_depth);
        let cur = st.convergent().value().map(|v| HPReal::from_rational(&v, scale));
        if let (Ok(a), Ok(b)) = (&prev, &cur) {
            if a.agrees_to(b, digits + 5) {
                return Ok((b.clone(), next_depth));
            }
        }
        prev = cur;
        depth = next_depth;
    }
}

/// Decimal value correct to `digits` digits under the process-wide depth cap.
pub fn eval_cf_decimal(spec: &CFSpec, digits: u32) -> Result<HPReal, CfError> {
    eval_cf_decimal_with(spec, digits, depth_cap()).map(|(v, _)| v)
}

/// The three-parameter family: lead `j(2−j+2κ)`,
/// `P(n) = −2n(c+n)(j+n−1)(1−j+2κ+n)`,
/// `T(n) = j(2−j+2κ) + (3+4κ)n + 3n²`.
///
/// `j` is odd in the closed-form regions; even `j` yields the `log 2` family
/// and is accepted here (the spec is the same object either way).
pub fn balkan_cf_spec(j: i64, kappa: i64, c: i64) -> CFSpec {
    let lead = j * (2 - j + 2 * kappa);
    let t = Poly::from_i64(&[lead, 3 + 4 * kappa, 3]);
    let mut p = Poly::from_i64(&[0, -2]);
    for shift in [c, j - 1, 1 - j + 2 * kappa] {
        p = p.mul(&Poly::from_i64(&[shift, 1]));
    }
    CFSpec::new(p, t)
}

/// Termination depth of the family at `(j, κ, c)`: the smallest positive
/// root of the partial numerator, if any.
pub fn termination_index(j: i64, kappa: i64, c: i64) -> Option<u64> {
    [-c, 1 - j, j - 2 * kappa - 1]
        .into_iter()
        .filter(|&r| r >= 1)
        .min()
        .map(|r| r as u64)
}
