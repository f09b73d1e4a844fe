//! `balkan compute J KAPPA C [exact|decimal|both]`.

use balkan_core::forms::q_exact;

use crate::report::{Check, Comparison, Report, ReportBuilder};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputMode {
    Exact,
    Decimal,
    Both,
}

/// Compute one exact value; the report carries the triple and, when asked,
/// its decimal expansion.
pub fn run(j: i64, kappa: i64, c: i64, mode: OutputMode, digits: u32) -> Result<Report, String> {
    let mut rb = ReportBuilder::new("compute")
        .parameter("j", j)
        .parameter("kappa", kappa)
        .parameter("c", c)
        .parameter("digits", digits);
    let q = q_exact(j, kappa, c).map_err(|e| e.to_string())?;
    if mode != OutputMode::Decimal {
        rb.push(Check {
            name: format!("Q({j},{kappa},{c})"),
            expected: String::new(),
            actual: q.to_string(),
            digits: None,
            mode: Comparison::Exact,
            pass: true,
        });
    }
    if mode != OutputMode::Exact {
        let v = q.value_hp(digits).map_err(|e| e.to_string())?;
        rb.push(Check {
            name: format!("Q({j},{kappa},{c}) decimal"),
            expected: String::new(),
            actual: v.to_decimal_string(digits),
            digits: Some(digits),
            mode: Comparison::Digits(digits),
            pass: true,
        });
    }
    Ok(rb.finish())
}
