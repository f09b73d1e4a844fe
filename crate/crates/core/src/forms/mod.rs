//! Closed-form machinery for the three-parameter family: region
//! classification, the per-region master formulae, symmetries, the exact
//! dispatcher and the satellite families.

mod area;
mod bosnia;
mod croatia;
mod dispatch;
mod families;
mod kosovo;
mod master;
mod montenegro;
mod qexact;
mod symmetry;

pub use area::{classify, serbia_reflect, Area};
pub use bosnia::{bosnia_q_via_delta, bosnia_value};
pub use croatia::{
    croatia_alphabeta, croatia_alphabeta_by_summation, croatia_alphabeta_from_poly,
    croatia_psi_interpolate, lagrange_interpolate, mu_factor, psi_leading_law, PsiPoly,
    PSI_TABLE_MAX_INDEX,
};
pub use dispatch::q_exact;
pub use families::{
    inostranstvo_q1, inostranstvo_q1_spec, inostranstvo_spec, log2a_closed_form, log2a_spec,
    rc_spec,
};
pub use kosovo::{kosovo_j_seeds, kosovo_kappa_level, Seeds4};
pub use master::{delta_c_level, f_weight, g_weight, h_weight, master_c_level, AlphaBeta};
pub use montenegro::{montenegro_q, kappa0_delta_compact, kappa0_delta_two_term};
pub use qexact::{QExact, QKind};
pub use symmetry::{ratio_a0_a2, tau_ratio};

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

/// Errors raised by the closed-form layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormsError {
    /// `j` must be odd (and positive where stated).
    #[error("j must be odd and >= 1, got {0}")]
    BadJ(i64),
    /// `κ` must be nonnegative.
    #[error("kappa must be >= 0, got {0}")]
    BadKappa(i64),
    /// `c` must be positive.
    #[error("c must be >= 1, got {0}")]
    BadC(i64),
    /// Operation applied outside its region.
    #[error("({j},{kappa}) is not in the {expected} region")]
    WrongRegion { j: i64, kappa: i64, expected: &'static str },
    /// κ below the reach of the κ-level chain.
    #[error("kappa-level formula requires kappa >= j-2, got j={j}, kappa={kappa}")]
    KappaBelowChain { j: i64, kappa: i64 },
    /// Shifts of unequal parity in the general satellite family.
    #[error("tau, eta, mu must have equal parity")]
    ParityMismatch,
    /// Negative family index.
    #[error("index must be >= 0, got {0}")]
    BadIndex(i64),
    /// ψ table only ships indices 0..=5.
    #[error("psi table covers i <= 5, got {0}; interpolate instead")]
    PsiTableRange(usize),
}

/// Memoised two-term recurrences `v[n] = A(n) v[n-2] + B(n) v[n-1]`, keyed by
/// the recurrence parameters. Entries are value-deterministic, so redundant
/// concurrent fills are harmless.
pub(crate) struct ChainCache<K> {
    map: Mutex<HashMap<K, Vec<BigRational>>>,
}

impl<K: Eq + Hash + Clone> ChainCache<K> {
    pub fn new() -> Self {
        ChainCache { map: Mutex::new(HashMap::new()) }
    }

    /// `v[upto]` for the chain identified by `key`, with `v[0], v[1]` from
    /// `base` and coefficients from `coeff(n) = (A(n), B(n))`.
    pub fn eval(
        &self,
        key: K,
        upto: usize,
        base: impl FnOnce() -> (BigRational, BigRational),
        coeff: impl Fn(i64) -> (BigInt, BigInt),
    ) -> BigRational {
        let mut guard = self.map.lock().expect("chain cache poisoned");
        let chain = guard.entry(key).or_insert_with(|| {
            let (v0, v1) = base();
            vec![v0, v1]
        });
        while chain.len() <= upto {
            let n = chain.len() as i64;
            let (a, b) = coeff(n);
            let next = &chain[chain.len() - 2] * BigRational::from_integer(a)
                + &chain[chain.len() - 1] * BigRational::from_integer(b);
            chain.push(next);
        }
        chain[upto].clone()
    }
}

/// Product over the inclusive range `lo..=hi` as a rational; empty ranges
/// give 1 (the convention every formula in this crate relies on).
pub(crate) fn prod_rat<F: FnMut(i64) -> BigInt>(lo: i64, hi: i64, f: F) -> BigRational {
    BigRational::from_integer(crate::exactnum::prod_range(lo, hi, f))
}

/// `2^e` for a signed exponent.
pub(crate) fn pow2(e: i64) -> BigRational {
    let two = BigInt::from(2);
    if e >= 0 {
        BigRational::from_integer(two.pow(e as u32))
    } else {
        BigRational::new(BigInt::from(1), two.pow((-e) as u32))
    }
}
