//! `balkan derive`: recover magic constants or seed rows numerically and
//! diff them against the closed-form chain.

use balkan_core::forms::{
    classify, croatia_alphabeta_by_summation, kosovo_j_seeds, kosovo_kappa_level, Area,
};
use balkan_core::relation::{derive_alphabeta_numeric, derive_seeds_numeric, RelationError};

use crate::report::{check_exact, Check, Comparison, Report, ReportBuilder};

/// Derivation failures are verification outcomes (exit 1), not usage errors:
/// the report carries one failing check naming the cause.
fn failure_report(rb: ReportBuilder, what: &str, err: &RelationError) -> Report {
    let mut rb = rb;
    rb.push(Check {
        name: what.to_string(),
        expected: "a validated derivation".into(),
        actual: err.to_string(),
        digits: None,
        mode: Comparison::Exact,
        pass: false,
    });
    rb.finish()
}

/// Derive `(α, β)` at `(j, κ)` numerically and compare against the region's
/// algebraic route (κ-level chain in Kosovo/Serbia reach, finite summation in
/// the terminating regions).
pub fn alphabeta(j: i64, kappa: i64, digits: u32) -> Result<Report, String> {
    let mut rb = ReportBuilder::new("derive alphabeta")
        .parameter("j", j)
        .parameter("kappa", kappa)
        .parameter("digits", digits);
    let derived = match derive_alphabeta_numeric(j, kappa, digits) {
        Ok(d) => d,
        Err(e @ (RelationError::NoRelation | RelationError::Cf(_))) => {
            return Ok(failure_report(rb, "derive alphabeta", &e));
        }
        Err(e) => return Err(e.to_string()),
    };
    let closed = match classify(j, kappa).map_err(|e| e.to_string())? {
        Area::BosniaHerzegovina | Area::Croatia => {
            croatia_alphabeta_by_summation(j, kappa).map_err(|e| e.to_string())?
        }
        Area::Kosovo => {
            let seeds = kosovo_j_seeds(j).map_err(|e| e.to_string())?;
            kosovo_kappa_level(j, &seeds, kappa).map_err(|e| e.to_string())?
        }
        Area::Serbia => {
            // no independent algebraic route at the Serbia point itself;
            // check the derived constants by reproducing a value instead
            let q = balkan_core::forms::q_exact(j, kappa, 3).map_err(|e| e.to_string())?;
            let own = balkan_core::forms::master_c_level(j, kappa, &derived, 3);
            rb.push(check_exact("value at c=3".to_string(), q, own));
            rb.push(check_exact(
                "derived".to_string(),
                format!("({}, {})", derived.alpha, derived.beta),
                format!("({}, {})", derived.alpha, derived.beta),
            ));
            return Ok(rb.finish());
        }
        area => return Err(format!("no derivation target in {}", area.name())),
    };
    rb.push(check_exact(
        format!("alphabeta ({j},{kappa})"),
        format!("({}, {})", closed.alpha, closed.beta),
        format!("({}, {})", derived.alpha, derived.beta),
    ));
    Ok(rb.finish())
}

/// Derive the per-`j` seed row numerically and compare against the j-level
/// recurrence.
pub fn seeds(j: i64, digits: u32) -> Result<Report, String> {
    let mut rb = ReportBuilder::new("derive seeds")
        .parameter("j", j)
        .parameter("digits", digits);
    let derived = match derive_seeds_numeric(j, digits) {
        Ok(d) => d,
        Err(e @ (RelationError::NoRelation | RelationError::Cf(_))) => {
            return Ok(failure_report(rb, "derive seeds", &e));
        }
        Err(e) => return Err(e.to_string()),
    };
    let chain = kosovo_j_seeds(j).map_err(|e| e.to_string())?;
    rb.push(check_exact(
        format!("seeds j={j}"),
        format!("({}, {}, {}, {})", chain.aa, chain.ab, chain.ba, chain.bb),
        format!("({}, {}, {}, {})", derived.aa, derived.ab, derived.ba, derived.bb),
    ));
    Ok(rb.finish())
}
