//! `balkan verify AREA`: grid verifications of the closed forms against the
//! numeric evaluator (and against each other where two exact routes exist).

use std::str::FromStr;

use balkan_core::cf_engine::{balkan_cf_spec, eval_cf_convergent, depth_cap, eval_cf_decimal_with};
use balkan_core::exactnum::BigRational;
use balkan_core::forms::{
    bosnia_q_via_delta, bosnia_value, croatia_alphabeta, croatia_alphabeta_by_summation,
    croatia_psi_interpolate, kosovo_kappa_level, master_c_level, montenegro_q, q_exact,
    ratio_a0_a2, serbia_reflect, tau_ratio, QKind, Seeds4,
};
use balkan_core::relation::{derive_alphabeta_extended, derive_alphabeta_numeric};
use num_traits::Signed;
use rayon::prelude::*;

use crate::data;
use crate::report::{check_exact, check_digits, Check, Report, ReportBuilder};

/// The supported verification areas.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyArea {
    Montenegro,
    Bosnia,
    Northern,
    Kosovo,
    Symmetry,
    Croatia,
    Ratio,
    Altogether,
}

impl FromStr for VerifyArea {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "montenegro" => Ok(Self::Montenegro),
            "bosnia" => Ok(Self::Bosnia),
            "northern" => Ok(Self::Northern),
            "kosovo" => Ok(Self::Kosovo),
            "symmetry" => Ok(Self::Symmetry),
            "croatia" => Ok(Self::Croatia),
            "ratio" => Ok(Self::Ratio),
            "altogether" => Ok(Self::Altogether),
            other => Err(format!(
                "unknown area {other}; expected montenegro|bosnia|northern|kosovo|symmetry|croatia|ratio|altogether"
            )),
        }
    }
}

/// Optional `lo..hi` clamps for the grid axes (j, κ, c).
#[derive(Debug, Clone, Copy, Default)]
pub struct GridClamp {
    pub j: Option<(i64, i64)>,
    pub kappa: Option<(i64, i64)>,
    pub c: Option<(i64, i64)>,
}

impl GridClamp {
    fn keep(&self, j: i64, kappa: i64, c: i64) -> bool {
        let within = |v: i64, r: Option<(i64, i64)>| r.is_none_or(|(lo, hi)| lo <= v && v <= hi);
        within(j, self.j) && within(kappa, self.kappa) && within(c, self.c)
    }
}

/// A closed-form value checked against the numeric evaluator at `digits`.
fn check_vs_numeric(
    name: String,
    q: &balkan_core::forms::QExact,
    j: i64,
    kappa: i64,
    c: i64,
    digits: u32,
) -> (Check, u64) {
    let closed = q.value_hp(digits).expect("within cap");
    match eval_cf_decimal_with(&balkan_cf_spec(j, kappa, c), digits, depth_cap()) {
        Ok((numeric, depth)) => {
            let pass = closed.agrees_to(&numeric, digits);
            (
                check_digits(
                    name,
                    closed.to_decimal_string(digits.min(30)),
                    numeric.to_decimal_string(digits.min(30)),
                    digits,
                    pass,
                ),
                depth,
            )
        }
        Err(e) => (
            check_digits(name, closed.to_decimal_string(digits.min(30)), e.to_string(), digits, false),
            0,
        ),
    }
}

pub fn run(area: VerifyArea, digits: u32, derive_digits: u32, clamp: GridClamp) -> Report {
    match area {
        VerifyArea::Montenegro => montenegro(digits, clamp),
        VerifyArea::Bosnia => bosnia(clamp),
        VerifyArea::Northern => northern(digits, derive_digits, clamp),
        VerifyArea::Kosovo => kosovo(digits, clamp, false),
        VerifyArea::Altogether => kosovo(digits, clamp, true),
        VerifyArea::Symmetry => symmetry(derive_digits, clamp),
        VerifyArea::Croatia => croatia(clamp),
        VerifyArea::Ratio => ratio(clamp),
    }
}

/// Grid 1 ≤ κ, c ≤ 14: the line's closed form vs the numeric fraction.
fn montenegro(digits: u32, clamp: GridClamp) -> Report {
    let mut rb = ReportBuilder::new("verify montenegro").parameter("digits", digits);
    let points: Vec<(i64, i64)> = (1..=14)
        .flat_map(|k| (1..=14).map(move |c| (k, c)))
        .filter(|&(k, c)| clamp.keep(1, k, c))
        .collect();
    let results: Vec<(Check, u64)> = points
        .par_iter()
        .map(|&(k, c)| {
            let q = montenegro_q(k, c).expect("valid grid");
            check_vs_numeric(format!("Q(1,{k:02},{c:02})"), &q, 1, k, c, digits)
        })
        .collect();
    let (checks, depths): (Vec<_>, Vec<_>) = results.into_iter().unzip();
    rb.extend(checks, depths);
    rb.finish()
}

/// Grid j ∈ {5..13}, c ∈ 1..14: direct value, recurrence route and finite
/// summation must agree exactly.
fn bosnia(clamp: GridClamp) -> Report {
    let mut rb = ReportBuilder::new("verify bosnia");
    for j in (5..=13).step_by(2) {
        for c in 1..=14 {
            if !clamp.keep(j, (j - 3) / 2, c) {
                continue;
            }
            let direct = bosnia_value(j, c).expect("grid");
            let via = bosnia_q_via_delta(j, c).expect("grid");
            let spec = balkan_cf_spec(j, (j - 3) / 2, c);
            let finite = eval_cf_convergent(&spec, spec.termination().expect("finite"))
                .expect("no zero denominators");
            rb.push(check_exact(format!("delta-route j={j:02} c={c:02}"), direct.clone(), via));
            rb.push(check_exact(format!("summation j={j:02} c={c:02}"), direct, finite));
        }
    }
    rb.finish()
}

/// Northern grid: odd j ∈ −7..13 (j ≠ 1), κ ∈ 1..6, c ∈ 1..7 — the master
/// formula with numerically derived magic constants vs the numeric fraction.
fn northern(digits: u32, derive_digits: u32, clamp: GridClamp) -> Report {
    let mut rb = ReportBuilder::new("verify northern")
        .parameter("digits", digits)
        .parameter("deriveDigits", derive_digits);
    let js: Vec<i64> = (-7..=13).filter(|j| j % 2 != 0 && *j != 1).collect();
    let pairs: Vec<(i64, i64)> = js
        .iter()
        .flat_map(|&j| (1..=6).map(move |k| (j, k)))
        .filter(|&(j, k)| (1..=7).any(|c| clamp.keep(j, k, c)))
        .collect();
    let results: Vec<Vec<(Check, u64)>> = pairs
        .par_iter()
        .map(|&(j, k)| {
            let ab = derive_alphabeta_numeric(j, k, derive_digits).expect("derivation succeeds");
            (1..=7)
                .filter(|&c| clamp.keep(j, k, c))
                .map(|c| {
                    let q = master_c_level(j, k, &ab, c);
                    check_vs_numeric(format!("Q({j:+03},{k},{c})"), &q, j, k, c, digits)
                })
                .collect()
        })
        .collect();
    for row in results {
        let (checks, depths): (Vec<_>, Vec<_>) = row.into_iter().unzip();
        rb.extend(checks, depths);
    }
    rb.finish()
}

/// Kosovo grid: odd j ∈ 3..11, κ ∈ j−2..10, c ∈ 1..7. With
/// `from_recurrence` the seeds come from the j-level recurrence (the full
/// chain); otherwise from the shipped reference rows.
fn kosovo(digits: u32, clamp: GridClamp, from_recurrence: bool) -> Report {
    let name = if from_recurrence { "verify altogether" } else { "verify kosovo" };
    let mut rb = ReportBuilder::new(name).parameter("digits", digits);
    let seed_rows = data::seed_rows();
    let seeds_for = |j: i64| -> Seeds4 {
        if from_recurrence {
            balkan_core::forms::kosovo_j_seeds(j).expect("odd j")
        } else {
            seed_rows
                .iter()
                .find(|(sj, _)| *sj == j)
                .map(|(_, s)| s.clone())
                .expect("seed row present")
        }
    };
    let mut points = Vec::new();
    for j in (3..=11).step_by(2) {
        for k in (j - 2)..=10 {
            for c in 1..=7 {
                if clamp.keep(j, k, c) {
                    points.push((j, k, c));
                }
            }
        }
    }
    let results: Vec<(Check, u64)> = points
        .par_iter()
        .map(|&(j, k, c)| {
            let ab = kosovo_kappa_level(j, &seeds_for(j), k).expect("grid");
            let q = master_c_level(j, k, &ab, c);
            check_vs_numeric(format!("Q({j},{k:02},{c})"), &q, j, k, c, digits)
        })
        .collect();
    let (checks, depths): (Vec<_>, Vec<_>) = results.into_iter().unzip();
    rb.extend(checks, depths);
    rb.finish()
}

/// The three symmetries: Serbia reflection (exact, against independently
/// derived constants), the τ ratios over the full mirror sweep, and the
/// `Q(1,κ,1) = Q(1,1,κ)` identity.
fn symmetry(derive_digits: u32, clamp: GridClamp) -> Report {
    let mut rb = ReportBuilder::new("verify symmetry").parameter("deriveDigits", derive_digits);

    // Serbia: the mirror value equals the master formula run with the Serbia
    // side's own derived constants.
    let mut serbia_points = Vec::new();
    for kappa in 2..=6i64 {
        for j in ((kappa + 3)..=(2 * kappa + 1)).filter(|j| j % 2 == 1) {
            for c in 1..=7 {
                if clamp.keep(j, kappa, c) {
                    serbia_points.push((j, kappa, c));
                }
            }
        }
    }
    let serbia_checks: Vec<Check> = serbia_points
        .par_iter()
        .map(|&(j, kappa, c)| {
            let ab = derive_alphabeta_numeric(j, kappa, derive_digits).expect("derives");
            let own = master_c_level(j, kappa, &ab, c);
            let mirrored = q_exact(serbia_reflect(j, kappa).expect("serbia"), kappa, c).expect("grid");
            check_exact(format!("reflect Q({j},{kappa},{c})"), mirrored, own)
        })
        .collect();
    rb.extend(serbia_checks, []);

    // τ sweep: j ∈ 3..13 odd, u ∈ 1..j+3; both sides derived numerically.
    let mut tau_points = Vec::new();
    for j in (3..=13).step_by(2) {
        for u in 1..=(j + 3) {
            tau_points.push((j, u));
        }
    }
    let tau_checks: Vec<Check> = tau_points
        .par_iter()
        .map(|&(j, u)| {
            let kappa = j - u - 1;
            let t = tau_ratio(j, u).expect("odd j");
            let lhs = derive_alphabeta_extended(j, kappa, derive_digits).expect("derives");
            let rhs = derive_alphabeta_extended(j - 2 * u, kappa, derive_digits).expect("derives");
            let alpha_ratio = &lhs.alpha / &rhs.alpha;
            let beta_ratio = &lhs.beta / &rhs.beta;
            let pass = alpha_ratio == t && beta_ratio == t;
            check_exact(
                format!("tau j={j:02} u={u:02}"),
                t.to_string(),
                if pass { t.to_string() } else { format!("{alpha_ratio} / {beta_ratio}") },
            )
        })
        .collect();
    rb.extend(tau_checks, []);

    // Montenegro footnote symmetry.
    for kappa in 1..=14 {
        let a = q_exact(1, kappa, 1).expect("grid");
        let b = q_exact(1, 1, kappa).expect("grid");
        rb.push(check_exact(format!("montenegro swap k={kappa:02}"), a, b));
    }
    rb.finish()
}

/// ψ/μ closed form vs finite-summation derivation for i ≤ 5, odd j ≤ 37,
/// plus interpolation against the shipped tables.
fn croatia(clamp: GridClamp) -> Report {
    let mut rb = ReportBuilder::new("verify croatia");
    for i in 0..=5usize {
        for j in ((2 * i as i64 + 5)..=37).step_by(2) {
            let kappa = (j - 2 * i as i64 - 3) / 2;
            if !clamp.keep(j, kappa, 1) {
                continue;
            }
            let table = croatia_alphabeta(i, j).expect("in range");
            let derived = croatia_alphabeta_by_summation(j, kappa).expect("finite");
            rb.push(check_exact(
                format!("alphabeta i={i} j={j:02}"),
                format!("({}, {})", table.alpha, table.beta),
                format!("({}, {})", derived.alpha, derived.beta),
            ));
        }
    }
    for (i, want) in data::psi_rows(1) {
        let got = croatia_psi_interpolate(i);
        rb.push(check_exact(format!("psi1 row {i}"), format!("{want:?}"), format!("{:?}", got.coeffs1)));
    }
    for (i, want) in data::psi_rows(2) {
        let got = croatia_psi_interpolate(i);
        rb.push(check_exact(format!("psi2 row {i}"), format!("{want:?}"), format!("{:?}", got.coeffs2)));
    }
    rb.finish()
}

/// Ratio grid: |a0/a2| of the dispatcher's triple vs the closed ratio.
fn ratio(clamp: GridClamp) -> Report {
    let mut rb = ReportBuilder::new("verify ratio");
    for j in (1..=7).step_by(2) {
        let k_lo = (j - 2).abs().max(1);
        for kappa in k_lo..=7 {
            for c in 1..=7 {
                if !clamp.keep(j, kappa, c) {
                    continue;
                }
                let q = q_exact(j, kappa, c).expect("grid");
                if q.kind() != QKind::G {
                    continue;
                }
                let formula = ratio_a0_a2(j, kappa, c).expect("grid").abs();
                let actual = BigRational::new(q.a0().clone(), q.a2().clone()).abs();
                rb.push(check_exact(format!("ratio ({j},{kappa},{c})"), formula, actual));
            }
        }
    }
    rb.finish()
}
