//! Reconstruction of the published tables: the QDC codes over F4+uF4, the
//! lifted codes `L_i`, and the length 58, 66 and 68 extensions.

mod calibration;
mod data;

pub use calibration::{calibrate_w58, w58_samples, CalibrationReport, W58Sample};

pub use data::{TableRow, TABLE3, TABLE4, TABLE5, TABLE6};

use std::fmt;

use serde::Serialize;

use crate::bincode::{
    classify, gray_image, identify_from_counts, weight_distribution, BinaryCode, CodeSummary, CodeType,
    EnumeratorId, Family, W58Calibration,
};
use crate::error::{Error, Result};
use crate::extend::{extend_free_binary, extend_standard_binary, f2u_extension_image, psi_code};
use crate::lifts::BuiltinCode;
use crate::qdc::theorem5_codes;
use crate::rings::{F2u, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RowStatus {
    Pass,
    /// The reconstruction meets the hard requirements but a reported value
    /// differs (used where exact agreement is not expected).
    Deviation,
    Fail,
}

impl fmt::Display for RowStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RowStatus::Pass => "PASS",
            RowStatus::Deviation => "DEVIATION",
            RowStatus::Fail => "FAIL",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RowOutcome {
    pub row: usize,
    pub label: String,
    pub expected: String,
    pub observed: String,
    pub status: RowStatus,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableReport {
    pub table: u8,
    pub rows: Vec<RowOutcome>,
}

impl TableReport {
    /// No row failed; deviations are allowed.
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.status != RowStatus::Fail)
    }

    pub fn count(&self, status: RowStatus) -> usize {
        self.rows.iter().filter(|r| r.status == status).count()
    }
}

impl fmt::Display for TableReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Table {}", self.table)?;
        for r in &self.rows {
            writeln!(
                f,
                "  {:>2} {:<10} {:<9} expected {} | observed {}",
                r.row + 1,
                r.label,
                r.status,
                r.expected,
                r.observed
            )?;
        }
        write!(
            f,
            "  {} pass, {} deviation, {} fail",
            self.count(RowStatus::Pass),
            self.count(RowStatus::Deviation),
            self.count(RowStatus::Fail)
        )
    }
}

#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    /// Also enumerate all `2^k` codewords and check that the full
    /// distribution gives the same family and parameters.
    pub full_enumeration: bool,
    /// Zero-based rows to check; all rows when `None`.
    pub rows: Option<Vec<usize>>,
}

impl VerifyOptions {
    fn wants(&self, i: usize) -> bool {
        self.rows.as_ref().is_none_or(|r| r.contains(&i))
    }
}

/// Parses a binary extension vector; bit `i` is `x_{i+1}`.
pub fn parse_binary_x(s: &str) -> Result<u128> {
    let digits: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    if digits.len() > 126 {
        return Err(Error::Parse("extension vector too long".into()));
    }
    digits.iter().enumerate().try_fold(0u128, |acc, (i, &c)| match c {
        '0' => Ok(acc),
        '1' => Ok(acc | 1 << i),
        _ => Err(Error::Parse(format!("`{c}` is not a binary digit"))),
    })
}

/// Parses an F2+uF2 extension vector written with `0`, `1`, `u` and
/// `3 = 1+u`; whitespace is ignored.
pub fn parse_f2u_x(s: &str) -> Result<Vec<F2u>> {
    s.chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| match c {
            '0' => Ok(F2u::ZERO),
            '1' => Ok(F2u::ONE),
            'u' => Ok(F2u::U),
            '3' => Ok(F2u::ONE_PLUS_U),
            _ => Err(Error::Parse(format!("`{c}` is not an F2+uF2 symbol"))),
        })
        .collect()
}

pub fn parse_f2u_unit(s: &str) -> Result<F2u> {
    match s.trim() {
        "1" => Ok(F2u::ONE),
        "1+u" | "3" => Ok(F2u::ONE_PLUS_U),
        other => Err(Error::Parse(format!("`{other}` is not a self-inverse unit of F2+uF2"))),
    }
}

/// The six codes of the first table and their listed binary parameters.
pub fn table1_codes() -> Result<Vec<(String, crate::matrix::LinearCode<crate::rings::F4u>, CodeSummary)>> {
    let listed = |n: usize, d: usize, code_type: CodeType| CodeSummary {
        n,
        k: n / 2,
        d,
        code_type,
    };
    let mut out = Vec::new();
    for p in [3, 7, 11] {
        let mut codes = theorem5_codes(p)?;
        // listed order: Type II before Type I for p ≡ 3
        codes.sort_by_key(|c| c.expected_type != CodeType::TypeII);
        for c in codes {
            let n = 4 * c.code.length();
            let d = match n {
                32 => 8,
                _ => 12,
            };
            out.push((c.label, c.code, listed(n, d, c.expected_type)));
        }
    }
    Ok(out)
}

/// Binary parameters of the six QDC codes.
pub fn verify_table1(options: &VerifyOptions) -> Result<TableReport> {
    let rows = table1_codes()?
        .into_iter()
        .enumerate()
        .filter(|(i, _)| options.wants(*i))
        .map(|(i, (label, code, expected))| {
            let bin = gray_image(&code)?;
            let observed = crate::bincode::summarize(&bin);
            Ok(RowOutcome {
                row: i,
                label,
                expected: expected.to_string(),
                observed: observed.to_string(),
                status: if observed == expected { RowStatus::Pass } else { RowStatus::Fail },
            })
        })
        .collect::<Result<_>>()?;
    Ok(TableReport { table: 1, rows })
}

/// `W_{64,1}` parameters of the `L_i` images, from the full distribution.
pub fn verify_table2(options: &VerifyOptions) -> Result<TableReport> {
    let rows = BuiltinCode::L
        .iter()
        .enumerate()
        .filter(|(i, _)| options.wants(*i))
        .map(|(i, &l)| {
            let bin = gray_image(&l.code())?;
            let dist = weight_distribution(&bin)?;
            let d = dist.min_nonzero_weight().unwrap_or(0);
            let id = identify_from_counts(64, &dist.counts, &W58Calibration::FROZEN).ok();
            let expected = EnumeratorId {
                family: Family::W64_1,
                beta: l.reported_beta().expect("L codes have a reported beta"),
                gamma: None,
            };
            let observed_sum = CodeSummary {
                n: bin.n(),
                k: bin.k(),
                d,
                code_type: bin.classify_type(),
            };
            let ok = id == Some(expected) && d == 12 && observed_sum.code_type == CodeType::TypeI;
            Ok(RowOutcome {
                row: i,
                label: l.to_string(),
                expected: format!("[64,32,12]_2 Type I, {expected}"),
                observed: format!("{observed_sum}, {}", describe(id)),
                status: if ok { RowStatus::Pass } else { RowStatus::Fail },
            })
        })
        .collect::<Result<_>>()?;
    Ok(TableReport { table: 2, rows })
}

fn describe(id: Option<EnumeratorId>) -> String {
    id.map_or_else(|| "no family".to_string(), |id| id.to_string())
}

/// The reconstructed binary code of a table row.
pub fn row_code(table: u8, row: &TableRow) -> Result<BinaryCode> {
    match table {
        3 | 5 => {
            let base = gray_image(&row.base.code())?;
            extend_free_binary(&base, parse_binary_x(row.x)?)
        }
        4 => {
            let base = gray_image(&row.base.code())?;
            extend_standard_binary(&base.standard_form(), parse_binary_x(row.x)?)
        }
        6 => {
            let base = psi_code(&row.base.code());
            f2u_extension_image(&base, &parse_f2u_x(row.x)?, parse_f2u_unit(row.c)?)
        }
        _ => Err(Error::InvalidArgument(format!("table {table} has no extension rows"))),
    }
}

pub fn table_rows(table: u8) -> Result<&'static [TableRow]> {
    match table {
        3 => Ok(&TABLE3),
        4 => Ok(&TABLE4),
        5 => Ok(&TABLE5),
        6 => Ok(&TABLE6),
        _ => Err(Error::InvalidArgument(format!("table {table} has no extension rows"))),
    }
}

fn table_family(table: u8) -> Family {
    match table {
        3 => Family::W58_2,
        4 | 5 => Family::W66_3,
        _ => Family::W68_2,
    }
}

/// Observed parameters of one extension row.
#[derive(Clone, Debug, Serialize)]
pub struct RowParameters {
    pub summary: CodeSummary,
    pub id: Option<EnumeratorId>,
    /// Family from the complete distribution, when it was enumerated.
    pub full_id: Option<Option<EnumeratorId>>,
}

pub fn row_parameters(table: u8, row: &TableRow, full: bool) -> Result<RowParameters> {
    let code = row_code(table, row)?;
    let class = classify(&code)?;
    let full_id = if full {
        let dist = weight_distribution(&code)?;
        Some(identify_from_counts(code.n(), &dist.counts, &W58Calibration::FROZEN).ok())
    } else {
        None
    };
    Ok(RowParameters {
        summary: class.summary,
        id: class.id,
        full_id,
    })
}

/// Rebuilds each row of an extension table and compares it with the
/// printed parameters. Table 4 rows whose `β` differs from the printed one
/// are deviations rather than failures, since the printed values depend on
/// the standard-form matrices used to print them.
pub fn verify_table(table: u8, options: &VerifyOptions) -> Result<TableReport> {
    let rows = table_rows(table)?;
    let family = table_family(table);
    let n = match table {
        3 => 58,
        4 | 5 => 66,
        _ => 68,
    };
    let d_ext = crate::bincode::extremal_distance(n);
    let mut out = Vec::new();
    for (i, row) in rows.iter().enumerate().filter(|(i, _)| options.wants(*i)) {
        let params = row_parameters(table, row, options.full_enumeration)?;
        let expected = EnumeratorId {
            family,
            beta: row.beta,
            gamma: row.gamma,
        };
        let shape_ok = params.summary.n == n && params.summary.k == n / 2 && params.summary.d == d_ext;
        let full_ok = params.full_id.is_none_or(|f| f == params.id);
        let status = if !shape_ok || !full_ok {
            RowStatus::Fail
        } else if params.id == Some(expected) {
            RowStatus::Pass
        } else if table == 4 && params.id.is_some_and(|id| id.family == family) {
            RowStatus::Deviation
        } else {
            RowStatus::Fail
        };
        let mut observed = format!("{}, {}", params.summary, describe(params.id));
        if let Some(f) = params.full_id {
            observed.push_str(if f == params.id { " (full enumeration agrees)" } else { " (full enumeration DISAGREES)" });
        }
        out.push(RowOutcome {
            row: i,
            label: format!("{} c={}", row.base, row.c),
            expected: format!("[{n},{},{d_ext}]_2, {expected}", n / 2),
            observed,
            status,
        });
    }
    Ok(TableReport { table, rows: out })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transcription_shapes() {
        assert!(TABLE3.iter().all(|r| parse_binary_x(r.x).unwrap() >> 56 == 0 && r.x.len() == 56));
        assert!(TABLE4.iter().all(|r| r.x.len() == 32));
        assert!(TABLE5.iter().all(|r| r.x.len() == 64));
        assert!(TABLE6.iter().all(|r| parse_f2u_x(r.x).unwrap().len() == 32));
        assert_eq!(TABLE6.len(), 29);
        // the printed vectors of Table 4 have ⟨X,X⟩ = 1 + 32 = 1 over F2
        assert!(TABLE4.iter().all(|r| parse_binary_x(r.x).unwrap().count_ones() % 2 == 1));
    }

    #[test]
    fn symbol_parsing() {
        assert_eq!(parse_f2u_x("0 1u3").unwrap(), vec![F2u::ZERO, F2u::ONE, F2u::U, F2u::ONE_PLUS_U]);
        assert!(parse_f2u_x("2").is_err());
        assert_eq!(parse_f2u_unit("1+u").unwrap(), F2u::ONE_PLUS_U);
        assert!(parse_f2u_unit("u").is_err());
        assert_eq!(parse_binary_x("101").unwrap(), 0b101);
        assert!(parse_binary_x("10a").is_err());
    }

    #[test]
    fn table5_first_row() {
        let p = row_parameters(5, &TABLE5[0], false).unwrap();
        assert_eq!(p.summary.to_string(), "[66,33,12]_2 Type I");
        assert_eq!(p.id, Some(EnumeratorId { family: Family::W66_3, beta: 45, gamma: None }));
    }

    #[test]
    fn table6_first_row() {
        let p = row_parameters(6, &TABLE6[0], false).unwrap();
        assert_eq!(p.id, Some(EnumeratorId { family: Family::W68_2, beta: 67, gamma: Some(1) }));
    }
}
