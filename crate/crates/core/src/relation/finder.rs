//! Relation recovery: from a high-precision value to its canonical triple,
//! and from value triples to the magic constants and seed streams.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::cf_engine::{balkan_cf_spec, depth_cap, eval_cf_decimal_with, CFSpec};
use crate::exactnum::{constant_value, ConstantName, HPReal};
use crate::forms::{f_weight, g_weight, h_weight, AlphaBeta, QExact, QKind, Seeds4};

use super::{lll_reduce, IntVector, LatticeBasis, RelationError};

/// Default cap on relation coefficients (seed magnitudes reach ~10^57 by the
/// mid-table rows; values past that signal a bad run, not a bigger answer).
pub const DEFAULT_COEFF_BOUND: u32 = 80;

/// Find a small integer relation `v · xs = 0` among three reals known to
/// `digits` digits.
///
/// The lattice rows are `(e_i | round(x_i · 10^digits))`; after reduction the
/// shortest row whose residual `|v · xs|` is below `10^(-digits/2)` and whose
/// coefficients stay under `10^bound_digits` wins. The result is normalised
/// so its last nonzero entry is positive.
///
/// Coefficients are additionally capped at `10^(digits/4 - 10)`: a spurious
/// vector over three values can push its residual down to roughly
/// `10^(-2·coeffdigits)`, so anything bigger could fake the residual test.
/// Callers must budget `digits` at least four times the expected coefficient
/// size plus margin; the derivation precisions used here (200+ digits for
/// two-digit grids, 2000/5000 defaults for the chains) all clear that bar.
pub fn find_integer_relation(
    xs: &[HPReal; 3],
    digits: u32,
    bound_digits: u32,
) -> Result<IntVector, RelationError> {
    relation_candidate(xs, digits, bound_digits.min((digits / 4).saturating_sub(10)))
}

/// Candidate search with an explicit coefficient cap in digits. Callers that
/// can re-validate against fresh digits (the recovery path) may pass a looser
/// cap than [`find_integer_relation`]'s self-consistent one.
fn relation_candidate(
    xs: &[HPReal; 3],
    digits: u32,
    cap_digits: u32,
) -> Result<IntVector, RelationError> {
    let rows: Vec<IntVector> = xs
        .iter()
        .enumerate()
        .map(|(i, x)| {
            let mut row = vec![BigInt::zero(); 4];
            row[i] = BigInt::one();
            row[3] = x.with_scale(digits).mantissa().clone();
            IntVector(row)
        })
        .collect();
    let reduced = lll_reduce(&LatticeBasis::new(rows), (3, 4))?;

    let residual_cap = {
        // |v·xs| < 10^(-digits/2), compared at the xs scale
        let scale = xs[0].scale().max(xs[1].scale()).max(xs[2].scale());
        HPReal::from_rational(
            &BigRational::new(BigInt::one(), BigInt::from(10u32).pow(digits / 2)),
            scale,
        )
    };
    let coeff_cap = BigInt::from(10u32).pow(cap_digits);

    let mut best: Option<(BigInt, Vec<BigInt>)> = None;
    for row in &reduced.rows {
        let v = &row.0[..3];
        if v.iter().all(Zero::is_zero) {
            continue;
        }
        if v.iter().any(|c| c.abs() > coeff_cap) {
            continue;
        }
        let mut residual = HPReal::zero(xs[0].scale());
        for (c, x) in v.iter().zip(xs.iter()) {
            residual = residual.add(&x.mul_int(c));
        }
        if residual.abs().cmp_value(&residual_cap) != std::cmp::Ordering::Less {
            continue;
        }
        let norm: BigInt = v.iter().map(|c| c * c).sum();
        if best.as_ref().is_none_or(|(n, _)| &norm < n) {
            best = Some((norm, v.to_vec()));
        }
    }
    let (_, mut v) = best.ok_or(RelationError::NoRelation)?;
    // canonical sign: last nonzero entry positive
    if let Some(last) = v.iter().rev().find(|c| !c.is_zero()) {
        if last.is_negative() {
            for c in &mut v {
                *c = -&*c;
            }
        }
    }
    Ok(IntVector(v))
}

fn constant_of(kind: QKind, digits: u32) -> HPReal {
    let name = match kind {
        QKind::G => ConstantName::CatalanG,
        QKind::Log2 => ConstantName::Log2,
        QKind::Rational => unreachable!("rational values carry no constant"),
    };
    constant_value(name, digits).expect("within default cap")
}

/// Evaluate a fraction and recover its canonical triple against
/// `(1, r, K·r)` at working precision `digits`.
///
/// The value is actually computed to `2·digits` digits; the lattice only
/// sees the first `digits` of them, and the candidate must then reproduce
/// the unseen half (`|a0/(a1+a2·K) − r| < 10^(−(2·digits−20))`). A wrong
/// triple with `A`-digit coefficients can track at most ~`2A` digits, so
/// with the coefficient cap at `digits/3` the confirmation is decisive;
/// callers budget `digits ≥ 3·(expected coefficient digits) + 30`.
pub fn recover_qexact(spec: &CFSpec, kind: QKind, digits: u32) -> Result<QExact, RelationError> {
    let confirm = 2 * digits;
    let (r, _depth) = eval_cf_decimal_with(spec, confirm, depth_cap())?;
    let k = constant_of(kind, confirm + 10);
    let xs = [
        HPReal::from_int(1, r.scale()),
        r.clone(),
        k.mul(&r).with_scale(r.scale()),
    ];
    let cap = DEFAULT_COEFF_BOUND.min(digits / 3);
    let v = relation_candidate(&xs, digits, cap)?;
    // v0 + v1 r + v2 K r = 0  =>  r = -v0 / (v1 + v2 K)
    let [v0, v1, v2]: [BigInt; 3] = v.0.try_into().expect("three entries");
    let q = QExact::new(-v0, v1, v2, kind);
    let check = q.value_hp(confirm).expect("within cap");
    if !check.agrees_to(&r, confirm.saturating_sub(20)) {
        return Err(RelationError::NoRelation);
    }
    Ok(q)
}

/// Numeric derivation of the magic constants at `(j, κ)` for any odd `j`
/// (including the mirror-extended points: negative `j`, the `j = 1` line and
/// negative κ reached by the reflection factor): recover the value triple at
/// `c = 1, 2`, divide symbolically and solve the two-point system
/// `Δ(c−1) = (g/Q − f·G)/h`, `α = Δ(0)`, `β = Δ(1) − Δ(0)`.
///
/// The G-part of `g/Q` cancels against `f` exactly (this is asserted), so the
/// result is exactly rational.
pub fn derive_alphabeta_extended(
    j: i64,
    kappa: i64,
    digits: u32,
) -> Result<AlphaBeta, RelationError> {
    let mut d = Vec::with_capacity(2);
    for c in 1..=2i64 {
        let spec = balkan_cf_spec(j, kappa, c);
        let triple = if spec.termination().is_some() {
            let v = crate::cf_engine::eval_cf_convergent(&spec, spec.termination().unwrap())?;
            QExact::from_rational(&v)
        } else {
            recover_qexact(&spec, QKind::G, digits)?
        };
        let (a0, a1, a2) = triple.triple();
        if a0.is_zero() {
            return Err(RelationError::NoRelation);
        }
        let g = g_weight(j, kappa, c);
        let f = f_weight(j, kappa, c);
        let h = h_weight(j, kappa, c);
        // G-part of g/Q must equal f for Δ to be rational
        let g_part = &g * BigRational::new(a2.clone(), a0.clone());
        assert_eq!(g_part, f, "G-weight mismatch at j={j} κ={kappa} c={c}");
        d.push(g * BigRational::new(a1, a0) / h);
    }
    let beta = &d[1] - &d[0];
    Ok(AlphaBeta::new(d.swap_remove(0), beta))
}

/// [`derive_alphabeta_extended`] restricted to the regions the c-level master
/// formula covers (everything except the `j = 1` line).
pub fn derive_alphabeta_numeric(
    j: i64,
    kappa: i64,
    digits: u32,
) -> Result<AlphaBeta, RelationError> {
    if j == 1 {
        return Err(RelationError::Forms(crate::forms::FormsError::WrongRegion {
            j,
            kappa,
            expected: "any region except Montenegro",
        }));
    }
    derive_alphabeta_extended(j, kappa, digits)
}

/// Numeric derivation of the per-`j` seed streams: derive `(α, β)` at
/// `κ = j−2` and `κ = j−1`, map back through the κ-level normalisation
/// (`Δ̄(idx) = value · ℓ`) and solve `a + b(u−1)` through the two points.
pub fn derive_seeds_numeric(j: i64, digits: u32) -> Result<Seeds4, RelationError> {
    if j < 3 || j % 2 == 0 {
        return Err(RelationError::Forms(crate::forms::FormsError::BadJ(j)));
    }
    // Δ̄ indices at κ = j−2, j−1 are 0 and 1, so the seeds are read off
    // directly: a = Δ̄(0), b = Δ̄(1) − Δ̄(0).
    let mut streams = Vec::with_capacity(2);
    let ab_lo = derive_alphabeta_numeric(j, j - 2, digits)?;
    let ab_hi = derive_alphabeta_numeric(j, j - 1, digits)?;
    for w in 0..=1i64 {
        let pick = |ab: &AlphaBeta| {
            if w == 0 {
                ab.alpha.clone()
            } else {
                &ab.alpha + &ab.beta
            }
        };
        let e1 = pick(&ab_lo) * ell_norm(w, j, j - 2);
        let e2 = pick(&ab_hi) * ell_norm(w, j, j - 1);
        let b = &e2 - &e1;
        streams.push((e1, b));
    }
    let (ba, bb) = streams.pop().expect("two streams");
    let (aa, ab) = streams.pop().expect("two streams");
    Ok(Seeds4::new(aa, ab, ba, bb))
}

/// `ℓ(n, j, κ)` of the κ-level master formula (duplicated here in its raw
/// form so the derivation chain does not depend on the closed-form module's
/// internals).
fn ell_norm(n: i64, j: i64, kappa: i64) -> BigRational {
    use crate::exactnum::{big, factorial, prod_range};
    let sign = if kappa % 2 == 0 { -1 } else { 1 };
    let num = factorial(2 * kappa as u64).pow(2) * sign;
    let den = factorial(kappa as u64)
        * big(2).pow((3 * kappa - 2) as u32)
        * big(2 * kappa - j)
        * big(2 * kappa - 1)
        * big(n * ((2 * kappa - j - 2) * (3 - 2 * kappa) - 1) + 1)
        * prod_range(0, (j - 3) / 2, |i| {
            big(kappa - i) * big(2 * kappa - 2 * i - 1).pow(2)
        });
    BigRational::new(num, den)
}
