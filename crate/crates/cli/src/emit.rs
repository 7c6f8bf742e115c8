//! CSV and JSON output. Every number is written as an exact `p/q` string.

use std::io::Write;

use ncring::identities::VerificationReport;
use ncring::wmodule::ActionMatrix;
use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct MatrixEntry {
    pub row: [usize; 2],
    pub col: [usize; 2],
    pub value: String,
}

#[derive(Debug, Serialize)]
pub struct MatrixRecord {
    pub generator: &'static str,
    pub kmax: usize,
    pub lmax: usize,
    pub entries: Vec<MatrixEntry>,
}

impl From<&ActionMatrix> for MatrixRecord {
    fn from(m: &ActionMatrix) -> Self {
        Self {
            generator: m.generator.as_str(),
            kmax: m.kmax,
            lmax: m.lmax,
            entries: m
                .triples()
                .map(|((rk, rl), (ck, cl), v)| MatrixEntry {
                    row: [rk, rl],
                    col: [ck, cl],
                    value: v.to_string(),
                })
                .collect(),
        }
    }
}

/// `row_k,row_l,col_k,col_l,value`, one nonzero entry per line, column-major.
pub fn action_matrix_csv<W: Write>(m: &ActionMatrix, out: W) -> csv::Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    writer.write_record(["row_k", "row_l", "col_k", "col_l", "value"])?;
    for ((rk, rl), (ck, cl), v) in m.triples() {
        writer.write_record([
            rk.to_string(),
            rl.to_string(),
            ck.to_string(),
            cl.to_string(),
            v.to_string(),
        ])?;
    }
    writer.flush()?;
    Ok(())
}

pub fn action_matrix_json(m: &ActionMatrix) -> serde_json::Result<String> {
    serde_json::to_string_pretty(&MatrixRecord::from(m))
}

#[derive(Debug, Serialize)]
pub struct ReportRecord {
    pub id: &'static str,
    pub params: serde_json::Map<String, serde_json::Value>,
    pub pass: bool,
    pub residual: String,
}

impl From<&VerificationReport> for ReportRecord {
    fn from(r: &VerificationReport) -> Self {
        Self {
            id: r.id.as_str(),
            params: r
                .params
                .iter()
                .map(|(name, v)| (name.to_string(), serde_json::Value::from(*v)))
                .collect(),
            pass: r.equal,
            residual: r.render(&r.residual),
        }
    }
}

/// One compact JSON object for a verification instance.
pub fn report_json(r: &VerificationReport) -> String {
    serde_json::to_string(&ReportRecord::from(r)).expect("plain strings and integers")
}

#[cfg(test)]
mod tests {
    use super::*;
    use ncring::identities::verify_br1_literal;
    use ncring::wmodule::{action_matrix, Acting};

    #[test]
    fn csv_is_exact() {
        let m = action_matrix(Acting::Y, 3, 0).unwrap();
        let mut buf = Vec::new();
        action_matrix_csv(&m, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "row_k,row_l,col_k,col_l,value");
        assert_eq!(lines[1], "1,0,1,0,-1/2");
        assert_eq!(lines[2], "2,0,1,0,1/2");
        assert!(!text.contains("0."));
    }

    #[test]
    fn json_matrix_round_trips_through_serde() {
        let m = action_matrix(Acting::X, 2, 1).unwrap();
        let v: serde_json::Value = serde_json::from_str(&action_matrix_json(&m).unwrap()).unwrap();
        assert_eq!(v["generator"], "x");
        assert_eq!(v["entries"].as_array().unwrap().len(), m.nnz());
        assert_eq!(v["entries"][0]["value"], "1");
    }

    #[test]
    fn report_record() {
        let r = verify_br1_literal(2, 0).unwrap();
        let v: serde_json::Value = serde_json::from_str(&report_json(&r)).unwrap();
        assert_eq!(v["id"], "br1-literal");
        assert_eq!(v["params"]["k"], 2);
        assert_eq!(v["pass"], false);
        assert_ne!(v["residual"], "0");
    }
}
