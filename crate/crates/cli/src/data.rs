//! Reference datasets shipped with the verifier, parsed from the versioned
//! files under `data/`. Table commands regenerate values and diff against
//! these rows.

use balkan_core::cf_engine::{CFSpec, Poly};
use balkan_core::exactnum::BigRational;
use balkan_core::forms::{QKind, Seeds4};
use num_bigint::BigInt;

/// One reference convergent row: a canonical triple plus the fraction that
/// produces it (`P(n) = -2n(n+r0)(n+r1)(n+r2)`, `T(n) = 3n² + t1·n + t0`).
#[derive(Debug, Clone)]
pub struct CfRow {
    pub a0: BigInt,
    pub a1: BigInt,
    pub a2: BigInt,
    pub roots: [i64; 3],
    pub t_linear: i64,
    pub t_const: i64,
    pub kind: QKind,
}

impl CfRow {
    pub fn spec(&self) -> CFSpec {
        CFSpec::new(
            Poly::neg2n_from_roots(self.roots[0], self.roots[1], self.roots[2]),
            Poly::from_i64(&[self.t_const, self.t_linear, 3]),
        )
    }

    /// Stable identifier for report lines.
    pub fn label(&self) -> String {
        format!(
            "P/-2n=({},{},{}) T=3n2+{}n+{}",
            self.roots[0], self.roots[1], self.roots[2], self.t_linear, self.t_const
        )
    }
}

fn data_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'))
}

fn parse_cf_rows(text: &str, kind: QKind) -> Vec<CfRow> {
    data_lines(text)
        .map(|line| {
            let f: Vec<&str> = line.split_whitespace().collect();
            assert_eq!(f.len(), 8, "cf row: {line}");
            CfRow {
                a0: f[0].parse().expect("a0"),
                a1: f[1].parse().expect("a1"),
                a2: f[2].parse().expect("a2"),
                roots: [f[3].parse().unwrap(), f[4].parse().unwrap(), f[5].parse().unwrap()],
                t_linear: f[6].parse().expect("t1"),
                t_const: f[7].parse().expect("t0"),
                kind,
            }
        })
        .collect()
}

/// The `log 2` rows with negative leading numerators.
pub fn cf_log2_neg() -> Vec<CfRow> {
    parse_cf_rows(include_str!("../data/cf_log2_neg.txt"), QKind::Log2)
}

/// The `log 2` rows with positive leading numerators.
pub fn cf_log2_pos() -> Vec<CfRow> {
    parse_cf_rows(include_str!("../data/cf_log2_pos.txt"), QKind::Log2)
}

/// The G rows with negative leading numerators.
pub fn cf_catalan_neg() -> Vec<CfRow> {
    parse_cf_rows(include_str!("../data/cf_catalan_neg.txt"), QKind::G)
}

/// The G rows with positive leading numerators.
pub fn cf_catalan_pos() -> Vec<CfRow> {
    parse_cf_rows(include_str!("../data/cf_catalan_pos.txt"), QKind::G)
}

/// ψ table rows: `(i, coefficients lowest first)`.
pub fn psi_rows(which: usize) -> Vec<(usize, Vec<BigInt>)> {
    let text = match which {
        1 => include_str!("../data/psi1.txt"),
        2 => include_str!("../data/psi2.txt"),
        _ => panic!("psi table index"),
    };
    data_lines(text)
        .map(|line| {
            let mut it = line.split_whitespace();
            let i: usize = it.next().unwrap().parse().unwrap();
            (i, it.map(|c| c.parse().unwrap()).collect())
        })
        .collect()
}

/// `R_c` reference triples keyed by `c`.
pub fn rc_rows() -> Vec<(i64, BigInt, BigInt, BigInt)> {
    data_lines(include_str!("../data/rc_triples.txt"))
        .map(|line| {
            let f: Vec<&str> = line.split_whitespace().collect();
            (
                f[0].parse().unwrap(),
                f[1].parse().unwrap(),
                f[2].parse().unwrap(),
                f[3].parse().unwrap(),
            )
        })
        .collect()
}

/// Seed-chain rows: `(j, Seeds4)`.
pub fn seed_rows() -> Vec<(i64, Seeds4)> {
    data_lines(include_str!("../data/seed_chain.txt"))
        .map(|line| {
            let f: Vec<&str> = line.split_whitespace().collect();
            let r = |s: &str| s.parse::<BigRational>().expect("rational");
            (
                f[0].parse().unwrap(),
                Seeds4::new(r(f[1]), r(f[2]), r(f[3]), r(f[4])),
            )
        })
        .collect()
}

/// Rational-ratio rows: `(j, κ, c, j', κ', c', ratio)`.
pub fn ratio_rows() -> Vec<([i64; 6], BigRational)> {
    data_lines(include_str!("../data/kosovo_ratios.txt"))
        .map(|line| {
            let f: Vec<&str> = line.split_whitespace().collect();
            let p: Vec<i64> = f[..6].iter().map(|s| s.parse().unwrap()).collect();
            ([p[0], p[1], p[2], p[3], p[4], p[5]], f[6].parse().unwrap())
        })
        .collect()
}

/// Series-relation rows.
#[derive(Debug, Clone)]
pub struct SeriesRow {
    pub constant: String,
    pub eps: i64,
    pub exponents: [u32; 7],
    pub weights: [i64; 3],
}

pub fn series_rows() -> Vec<SeriesRow> {
    data_lines(include_str!("../data/series_relations.txt"))
        .map(|line| {
            let f: Vec<&str> = line.split_whitespace().collect();
            assert_eq!(f.len(), 12, "series row: {line}");
            let mut exponents = [0u32; 7];
            for (slot, s) in exponents.iter_mut().zip(&f[2..9]) {
                *slot = s.parse().unwrap();
            }
            SeriesRow {
                constant: f[0].to_string(),
                eps: f[1].parse().unwrap(),
                exponents,
                weights: [f[9].parse().unwrap(), f[10].parse().unwrap(), f[11].parse().unwrap()],
            }
        })
        .collect()
}

/// The shipped mining database.
pub fn mining_db_text() -> &'static str {
    include_str!("../data/mining_db.txt")
}

/// Expected decimation outcomes on the shipped database:
/// `(survivor expectations, per-entry eliminated counts for affine -8..8)`.
/// `(family, box, survivors)` expectations plus per-entry eliminated counts.
pub type DecimatorExpectations = (Vec<(String, String, u64)>, Vec<(i64, u64)>);

pub fn decimator_expectations() -> DecimatorExpectations {
    let mut surv = Vec::new();
    let mut elim = Vec::new();
    for line in data_lines(include_str!("../data/decimator_expectations.txt")) {
        let f: Vec<&str> = line.split_whitespace().collect();
        match f[0] {
            "eliminated" => elim.push((f[1].parse().unwrap(), f[2].parse().unwrap())),
            fam => surv.push((fam.to_string(), f[1].to_string(), f[2].parse().unwrap())),
        }
    }
    (surv, elim)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn datasets_parse() {
        assert_eq!(cf_log2_neg().len(), 35);
        assert_eq!(cf_log2_pos().len(), 35);
        assert_eq!(cf_catalan_neg().len(), 31);
        assert_eq!(cf_catalan_pos().len(), 29);
        assert_eq!(psi_rows(1).len(), 6);
        assert_eq!(psi_rows(2).len(), 6);
        assert_eq!(rc_rows().len(), 18);
        assert_eq!(seed_rows().len(), 17);
        assert_eq!(ratio_rows().len(), 25);
        assert_eq!(series_rows().len(), 32);
        let (surv, elim) = decimator_expectations();
        assert_eq!(surv.len(), 3);
        assert_eq!(elim.len(), 8);
    }

    #[test]
    fn cf_row_specs_have_expected_lead() {
        let rows = cf_catalan_neg();
        let last = rows.last().unwrap();
        assert_eq!(last.spec().lead(), BigInt::from(3));
    }
}
