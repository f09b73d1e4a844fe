//! `balkan decimate`: run the divisibility sieve over a candidate box.

use std::str::FromStr;

use balkan_core::miner::{decimate, CandidateFamily, DecimatePolicy, MiningDB, ZeroPolicy};

use crate::report::{Check, Comparison, Report, ReportBuilder};

pub fn family_from_str(s: &str) -> Result<CandidateFamily, String> {
    match s {
        "affine" => Ok(CandidateFamily::Affine),
        "catalan" => Ok(CandidateFamily::CatalanIndexed),
        "product" => Ok(CandidateFamily::Product),
        other => Err(format!("unknown family {other}; expected affine|catalan|product")),
    }
}

/// Parse a box: either one `lo..hi` range applied to every coordinate or a
/// comma list with one range per coordinate.
pub fn parse_box(spec: &str, arity: usize) -> Result<Vec<(i64, i64)>, String> {
    let parse_range = |s: &str| -> Result<(i64, i64), String> {
        let (lo, hi) = s
            .split_once("..")
            .ok_or_else(|| format!("range must be lo..hi, got {s}"))?;
        let lo = i64::from_str(lo.trim()).map_err(|e| e.to_string())?;
        let hi = i64::from_str(hi.trim()).map_err(|e| e.to_string())?;
        if lo > hi {
            return Err(format!("empty range {s}"));
        }
        Ok((lo, hi))
    };
    let parts: Vec<&str> = spec.split(',').collect();
    if parts.len() == 1 {
        return Ok(vec![parse_range(parts[0])?; arity]);
    }
    if parts.len() != arity {
        return Err(format!("expected {arity} ranges, got {}", parts.len()));
    }
    parts.into_iter().map(parse_range).collect()
}

pub fn run(
    db_text: &str,
    family: CandidateFamily,
    box_spec: &str,
    zero: ZeroPolicy,
    dump_db: Option<&std::path::Path>,
) -> Result<Report, String> {
    let db = MiningDB::parse(db_text).map_err(|e| e.to_string())?;
    if let Some(path) = dump_db {
        std::fs::write(path, db.serialize()).map_err(|e| e.to_string())?;
    }
    let bounds = parse_box(box_spec, family.arity())?;
    let mut rb = ReportBuilder::new("decimate")
        .parameter("family", format!("{family:?}"))
        .parameter("box", box_spec)
        .parameter("entries", db.entries.len())
        .parameter(
            "policy",
            match zero {
                ZeroPolicy::Eliminates => "zero-eliminates",
                ZeroPolicy::Skips => "zero-skips",
            },
        );
    let policy = DecimatePolicy { zero, ..DecimatePolicy::default() };
    let out = decimate(family, &bounds, &db, policy);
    rb.push(Check {
        name: "survivors".into(),
        expected: String::new(),
        actual: format!("{} of {}", out.survivors.len(), out.box_size),
        digits: None,
        mode: Comparison::Exact,
        pass: true,
    });
    for (e, n) in db.entries.iter().zip(out.per_entry_eliminated.iter()) {
        rb.push(Check {
            name: format!("eliminated by (j={}, k={}, c={})", e.j, e.kappa, e.c),
            expected: String::new(),
            actual: n.to_string(),
            digits: None,
            mode: Comparison::Exact,
            pass: true,
        });
    }
    Ok(rb.finish())
}
