use std::io::Write;

use anyhow::Result;
use rayon::prelude::*;
use serde::Serialize;

use clmonoid::bounds::{cs_bound_with_precision, CsReport};

use crate::args::SweepFormat;
use crate::render::rational_str;

/// One sweep line; field order is the CSV column order.
#[allow(non_snake_case)]
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub m: i32,
    pub delta_phi: String,
    pub c_phi: String,
    pub abs_delta_E: String,
    pub r2: u32,
    pub A: String,
    pub classnum_bound: String,
    pub bound_main: String,
    pub bound_simple: Option<String>,
    pub prime_case_summary: String,
}

impl From<&CsReport> for SweepRow {
    fn from(r: &CsReport) -> Self {
        let summary: Vec<String> = r
            .prime_cases
            .iter()
            .map(|c| format!("{}:{}", c.case.p, c.case.case_id.tag()))
            .collect();
        SweepRow {
            m: r.m,
            delta_phi: r.delta_phi.to_string(),
            c_phi: r.c_phi.to_string(),
            abs_delta_E: r.abs_delta_e.to_string(),
            r2: r.r2,
            A: r.a.to_string(),
            classnum_bound: r.classnum_bound.to_string(),
            bound_main: r.bound_main.to_string(),
            bound_simple: r.bound_simple.as_ref().map(rational_str),
            prime_case_summary: summary.join(";"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub from: i32,
    pub to: i32,
    pub rows: usize,
    /// Number of m with signed delta_E > 3075.
    pub simple_bound_rows: usize,
}

/// Reports for every m in `[from, to]`, in ascending m.
pub fn sweep_reports(from: i32, to: i32, pi_bits: u32) -> Result<Vec<CsReport>> {
    anyhow::ensure!(from <= to, "empty range {from}..{to}");
    (from..=to)
        .into_par_iter()
        .map(|m| cs_bound_with_precision(m, pi_bits).map_err(|e| anyhow::anyhow!("m = {m}: {e}")))
        .collect()
}

pub fn write_rows<W: Write>(reports: &[CsReport], format: SweepFormat, out: W) -> Result<()> {
    match format {
        SweepFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for r in reports {
                w.serialize(SweepRow::from(r))?;
            }
            w.flush()?;
        }
        SweepFormat::Jsonl => {
            let mut out = std::io::BufWriter::new(out);
            for r in reports {
                serde_json::to_writer(&mut out, &SweepRow::from(r))?;
                out.write_all(b"\n")?;
            }
            out.flush()?;
        }
    }
    Ok(())
}

pub fn summarize(from: i32, to: i32, reports: &[CsReport]) -> SweepSummary {
    SweepSummary {
        from,
        to,
        rows: reports.len(),
        simple_bound_rows: reports.iter().filter(|r| r.bound_simple.is_some()).count(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clmonoid::classnum::DEFAULT_PI_BITS;

    fn csv_of(from: i32, to: i32) -> String {
        let reports = sweep_reports(from, to, DEFAULT_PI_BITS).unwrap();
        let mut buf = Vec::new();
        write_rows(&reports, SweepFormat::Csv, &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn header_and_rows() {
        let text = csv_of(5, 7);
        let mut lines = text.lines();
        assert_eq!(
            lines.next(),
            Some("m,delta_phi,c_phi,abs_delta_E,r2,A,classnum_bound,bound_main,bound_simple,prime_case_summary")
        );
        let rows: Vec<&str> = lines.collect();
        assert_eq!(rows.len(), 3);
        assert!(rows[1].starts_with("6,49,"));
        assert!(rows[1].contains(",49,0,1,1,1,,7:C1max"));
    }

    #[test]
    fn jsonl_rows_parse() {
        let reports = sweep_reports(-2, 2, DEFAULT_PI_BITS).unwrap();
        let mut buf = Vec::new();
        write_rows(&reports, SweepFormat::Jsonl, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let ms: Vec<i64> = text
            .lines()
            .map(|l| serde_json::from_str::<serde_json::Value>(l).unwrap()["m"].as_i64().unwrap())
            .collect();
        assert_eq!(ms, vec![-2, -1, 0, 1, 2]);
    }

    #[test]
    fn summary_counts() {
        let reports = sweep_reports(-20, 20, DEFAULT_PI_BITS).unwrap();
        let s = summarize(-20, 20, &reports);
        assert_eq!(s.rows, 41);
        let direct = reports.iter().filter(|r| r.signed_delta_e() > 3075).count();
        assert_eq!(s.simple_bound_rows, direct);
    }
}
