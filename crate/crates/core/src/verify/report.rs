//! JSON and CSV encodings of sweep reports.

use serde::Serialize;

use crate::algebra::CycScalar;
use crate::error::{Error, Result};

use super::sweep::{Report, TrialReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

/// Pretty-printed JSON with a trailing newline, or one CSV row per trial.
pub fn emit_report(report: &Report, format: ReportFormat) -> Result<Vec<u8>> {
    match format {
        ReportFormat::Json => {
            let mut out = serde_json::to_vec_pretty(report).map_err(|e| Error::Internal(e.to_string()))?;
            out.push(b'\n');
            Ok(out)
        }
        ReportFormat::Csv => emit_csv(&report.trials),
    }
}

pub fn parse_report(bytes: &[u8]) -> Result<Report> {
    serde_json::from_slice(bytes).map_err(|e| Error::InvalidConfig(format!("malformed report: {e}")))
}

#[derive(Serialize)]
struct CsvRow {
    index: usize,
    seed: u64,
    curve: String,
    g: String,
    charpoly: String,
    n_minus1: Option<usize>,
    fixed_dim: Option<usize>,
    fbar: String,
    semisimple: Option<bool>,
    dimension_identity: Option<bool>,
    closed_sign: Option<i32>,
    closed_ell_power: Option<usize>,
    trace: String,
    brute_equal: Option<bool>,
    lemma_equal: Option<bool>,
    main_equal: Option<bool>,
    gauss_equal: Option<bool>,
    path_integral: String,
    q: String,
    error: String,
    passed: bool,
}

fn json_or_empty<T: Serialize>(v: &Option<T>) -> String {
    v.as_ref().map(|x| serde_json::to_string(x).expect("plain data")).unwrap_or_default()
}

fn scalar(v: &Option<CycScalar>) -> String {
    v.as_ref().map(|x| x.coeff_strings().join(" ")).unwrap_or_default()
}

fn emit_csv(trials: &[TrialReport]) -> Result<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let csv_err = |e: csv::Error| Error::Internal(e.to_string());
    if trials.is_empty() {
        // header only
        w.write_record([
            "index", "seed", "curve", "g", "charpoly", "n_minus1", "fixed_dim", "fbar", "semisimple",
            "dimension_identity", "closed_sign", "closed_ell_power", "trace", "brute_equal", "lemma_equal",
            "main_equal", "gauss_equal", "path_integral", "q", "error", "passed",
        ])
        .map_err(csv_err)?;
    }
    for t in trials {
        w.serialize(CsvRow {
            index: t.index,
            seed: t.seed,
            curve: json_or_empty(&t.curve),
            g: json_or_empty(&t.g),
            charpoly: json_or_empty(&t.charpoly),
            n_minus1: t.n_minus1,
            fixed_dim: t.fixed_dim,
            fbar: json_or_empty(&t.fbar),
            semisimple: t.semisimple,
            dimension_identity: t.dimension_identity,
            closed_sign: t.closed.map(|c| c.sign),
            closed_ell_power: t.closed.map(|c| c.ell_power),
            trace: scalar(&t.trace),
            brute_equal: t.brute_equal,
            lemma_equal: t.lemma_equal,
            main_equal: t.main_equal,
            gauss_equal: t.gauss_equal,
            path_integral: scalar(&t.path_integral),
            q: json_or_empty(&t.q),
            error: t.error.clone().unwrap_or_default(),
            passed: t.passed,
        })
        .map_err(csv_err)?;
    }
    w.into_inner().map_err(|e| Error::Internal(e.to_string()))
}
