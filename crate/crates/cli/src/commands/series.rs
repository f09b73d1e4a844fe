//! `balkan series CHECK`: the weighted-series relations, the low-degree
//! `log 2` family, the difference limits and the shifted families.

use std::str::FromStr;

use balkan_core::cf_engine::{depth_cap, eval_cf_decimal_with};
use balkan_core::exactnum::{
    constant_value, factorial, semifactorial, BigRational, ConstantName, HPReal,
};
use balkan_core::forms::{
    inostranstvo_q1, inostranstvo_q1_spec, inostranstvo_spec, log2a_closed_form, log2a_spec,
    q_exact, rc_spec, QKind,
};
use balkan_core::relation::recover_qexact;
use num_bigint::BigInt;
use num_traits::Signed;
use rayon::prelude::*;

use crate::data;
use crate::report::{check_digits, check_up_to_sign, Check, Comparison, Report, ReportBuilder};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesCheck {
    Table5,
    Remark11,
    Limits,
    Inostranstvo,
}

impl FromStr for SeriesCheck {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "table5" => Ok(Self::Table5),
            "remark11" => Ok(Self::Remark11),
            "limits" => Ok(Self::Limits),
            "inostranstvo" => Ok(Self::Inostranstvo),
            other => Err(format!(
                "unknown series check {other}; expected table5|remark11|limits|inostranstvo"
            )),
        }
    }
}

pub fn run(check: SeriesCheck) -> Report {
    match check {
        SeriesCheck::Table5 => table5(),
        SeriesCheck::Remark11 => remark11(),
        SeriesCheck::Limits => limits(),
        SeriesCheck::Inostranstvo => inostranstvo(),
    }
}

/// One weighted series `S = Σ (−1)^(n+1) Π (2n+2i−3+ε)^(−e_i)` summed to a
/// truncation whose alternating remainder is below `floor`; returns the sum
/// and the remainder bound (first omitted term).
fn weighted_sum(row: &data::SeriesRow, scale: u32, floor: &HPReal) -> (HPReal, HPReal) {
    let term = |n: i64| -> HPReal {
        let mut denom = BigInt::from(1);
        for (i, &e) in row.exponents.iter().enumerate() {
            if e > 0 {
                denom *= BigInt::from(2 * n + 2 * (i as i64 + 1) - 3 + row.eps).pow(e);
            }
        }
        HPReal::from_rational(&BigRational::new(BigInt::from(1), denom), scale)
    };
    let mut sum = HPReal::zero(scale);
    let mut n = 1i64;
    loop {
        let t = term(n);
        if n % 2 == 1 {
            sum = sum.add(&t);
        } else {
            sum = sum.sub(&t);
        }
        if t.cmp_value(floor) == std::cmp::Ordering::Less || n > 2_000_000 {
            return (sum, term(n + 1));
        }
        n += 1;
    }
}

/// All 32 relation rows: `|w1·S + w2·K + w3| ≤ |w1|·remainder + 10^(−15)`.
fn table5() -> Report {
    let mut rb = ReportBuilder::new("series table5");
    let scale = 60u32;
    let rows = data::series_rows();
    let checks: Vec<Check> = rows
        .par_iter()
        .map(|row| {
            let k = match row.constant.as_str() {
                "pi" => constant_value(ConstantName::Pi, scale),
                "G" => constant_value(ConstantName::CatalanG, scale),
                _ => constant_value(ConstantName::Log2, scale),
            }
            .expect("within cap");
            let [w1, w2, w3] = row.weights;
            // truncate once |w1|·term < 10^-18
            let floor = HPReal::from_rational(
                &BigRational::new(BigInt::from(1), BigInt::from(10u32).pow(18) * w1.abs()),
                scale,
            );
            let (sum, remainder) = weighted_sum(row, scale, &floor);
            let residual = sum
                .mul_int(&BigInt::from(w1))
                .add(&k.mul_int(&BigInt::from(w2)))
                .add(&HPReal::from_int(w3, scale))
                .abs();
            let bound = remainder
                .mul_int(&BigInt::from(w1.abs()))
                .add(&HPReal::from_rational(
                    &BigRational::new(BigInt::from(1), BigInt::from(10u64).pow(15)),
                    scale,
                ));
            let pass = residual.cmp_value(&bound) != std::cmp::Ordering::Greater;
            Check {
                name: format!("{} e={:?} w=({w1},{w2},{w3})", row.constant, row.exponents),
                expected: format!("residual <= {}", bound.to_decimal_string(20)),
                actual: residual.to_decimal_string(20),
                digits: Some(15),
                mode: Comparison::Digits(15),
                pass,
            }
        })
        .collect();
    rb.extend(checks, []);
    rb.finish()
}

/// The low-degree `log 2` family: fraction vs the explicit two-power /
/// harmonic closed form to 50 digits for 2 ≤ c ≤ 25, and the `R_c` weight
/// law for 5 ≤ c ≤ 20.
fn remark11() -> Report {
    let mut rb = ReportBuilder::new("series remark11");
    let digits = 50u32;
    let checks: Vec<(Check, u64)> = (2i64..=25)
        .into_par_iter()
        .map(|c| {
            let (cf, depth) =
                eval_cf_decimal_with(&log2a_spec(c), digits, depth_cap()).expect("converges");
            let closed = log2a_closed_form(c, digits).expect("c >= 2");
            let pass = cf.agrees_to(&closed, digits);
            (
                check_digits(
                    format!("closed form c={c:02}"),
                    closed.to_decimal_string(25),
                    cf.to_decimal_string(25),
                    digits,
                    pass,
                ),
                depth,
            )
        })
        .collect();
    let (checks, depths): (Vec<_>, Vec<_>) = checks.into_iter().unzip();
    rb.extend(checks, depths);
    // R_c weight law via recovery
    let law: Vec<Check> = (5i64..=20)
        .into_par_iter()
        .map(|c| {
            let q = recover_qexact(&rc_spec(c), QKind::Log2, 200).expect("recovers");
            let lhs = (BigInt::from(2).pow((c - 4) as u32) * (c - 3) * q.a0()).abs();
            check_up_to_sign(
                format!("R_c weight law c={c:02}"),
                lhs.to_string(),
                q.a2().abs().to_string(),
                lhs == q.a2().abs(),
            )
        })
        .collect();
    rb.extend(law, []);
    rb.finish()
}

/// Difference limits at large parameters: `Q(j,κ,c+1) − Q(j,κ,c) → 2` and
/// `Q(j,κ+1,c) − Q(j,κ,c) → 2j`, checked within 0.05 at 200.
fn limits() -> Report {
    let mut rb = ReportBuilder::new("series limits");
    let tol = |x: &HPReal, target: i64| -> bool {
        let d = x.sub(&HPReal::from_int(target, x.scale())).abs();
        let bound = HPReal::from_rational(
            &BigRational::new(BigInt::from(5), BigInt::from(100)),
            x.scale(),
        );
        d.cmp_value(&bound) == std::cmp::Ordering::Less
    };
    for (j, kappa) in [(1i64, 1i64), (3, 2), (5, 4)] {
        let c = 200i64;
        let a = q_exact(j, kappa, c).expect("grid");
        let b = q_exact(j, kappa, c + 1).expect("grid");
        let digits = a.coeff_digits().max(b.coeff_digits()) + 40;
        let diff = b.value_hp(digits).expect("cap").sub(&a.value_hp(digits).expect("cap"));
        rb.push(Check {
            name: format!("c-limit ({j},{kappa})"),
            expected: "2 ± 0.05".into(),
            actual: diff.to_decimal_string(6),
            digits: None,
            mode: Comparison::Digits(2),
            pass: tol(&diff, 2),
        });
    }
    for (j, c) in [(1i64, 1i64), (3, 2), (5, 4)] {
        let kappa = 200i64;
        let a = q_exact(j, kappa, c).expect("grid");
        let b = q_exact(j, kappa + 1, c).expect("grid");
        let digits = a.coeff_digits().max(b.coeff_digits()) + 40;
        let diff = b.value_hp(digits).expect("cap").sub(&a.value_hp(digits).expect("cap"));
        rb.push(Check {
            name: format!("kappa-limit ({j},{c})"),
            expected: format!("{} ± 0.05", 2 * j),
            actual: diff.to_decimal_string(6),
            digits: None,
            mode: Comparison::Digits(2),
            pass: tol(&diff, 2 * j),
        });
    }
    rb.finish()
}

/// The shifted families: the `(1,1,1)` closed form at 80 digits for
/// i ≤ 14, the `(1,3,3)` ratio law at 180 digits for i ≤ 10, and relation
/// recovery over the equal-parity shift box at 80 digits.
fn inostranstvo() -> Report {
    let mut rb = ReportBuilder::new("series inostranstvo");
    let q1: Vec<(Check, u64)> = (0i64..=14)
        .into_par_iter()
        .map(|i| {
            let q = inostranstvo_q1(i).expect("i >= 0");
            let (numeric, depth) =
                eval_cf_decimal_with(&inostranstvo_q1_spec(i), 80, depth_cap())
                    .expect("converges");
            let closed = q.value_hp(80).expect("cap");
            let pass = closed.agrees_to(&numeric, 80);
            (
                check_digits(
                    format!("family-111 i={i:02}"),
                    closed.to_decimal_string(25),
                    numeric.to_decimal_string(25),
                    80,
                    pass,
                ),
                depth,
            )
        })
        .collect();
    let (checks, depths): (Vec<_>, Vec<_>) = q1.into_iter().unzip();
    rb.extend(checks, depths);

    let q2: Vec<Check> = (0i64..=10)
        .into_par_iter()
        .map(|i| {
            let spec = inostranstvo_spec(1, 3, 3, i).expect("parity");
            let q = recover_qexact(&spec, QKind::G, 180).expect("recovers");
            let ratio = BigRational::new(q.a0().clone(), q.a2().clone()).abs();
            let want = BigRational::new(
                factorial((2 * i + 5) as u64),
                (2 * i + 4) * semifactorial(2 * i + 5).expect("odd").pow(2),
            )
            .abs();
            check_up_to_sign(
                format!("family-133 ratio i={i:02}"),
                want.to_string(),
                ratio.to_string(),
                ratio == want,
            )
        })
        .collect();
    rb.extend(q2, []);

    // equal-parity box: every point admits a validated G relation at 80 digits
    let mut box_points = Vec::new();
    for p in 0..=1i64 {
        for a in (0..=6i64).step_by(2) {
            for i in 0..=6i64 {
                for c in (0..=6i64).step_by(2) {
                    for b in (a..=6i64).step_by(2) {
                        box_points.push((a + p, b + p, c + p, i));
                    }
                }
            }
        }
    }
    let box_checks: Vec<Check> = box_points
        .par_iter()
        .map(|&(tau, eta, mu, i)| {
            let spec = inostranstvo_spec(tau, eta, mu, i).expect("parity");
            let got = recover_qexact(&spec, QKind::G, 80);
            Check {
                name: format!("parity box ({tau},{eta},{mu},{i})"),
                expected: "G relation".into(),
                actual: match &got {
                    Ok(q) => q.to_string(),
                    Err(e) => e.to_string(),
                },
                digits: Some(80),
                mode: Comparison::Digits(80),
                pass: got.is_ok(),
            }
        })
        .collect();
    rb.extend(box_checks, []);
    rb.finish()
}
