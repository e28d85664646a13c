//! Report rendering and parsing.
//!
//! csv and jsonl share one field set and fixed number formatting (probes to
//! 2 decimals, rates to 4), so a report converted between the two formats
//! reproduces the same values. `cache_hit_rate` is empty in csv and `null`
//! in jsonl for non-adaptive rows.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Deserialize;

use crate::error::{BenchError, Result};
use crate::trial::{TrialAlgorithm, TrialRecord};

pub const FIELDS: [&str; 10] = [
    "algorithm",
    "distribution",
    "n",
    "queries",
    "found_rate",
    "mean_probes",
    "p99_probes",
    "cache_hit_rate",
    "wall_time_ns",
    "seed",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Table,
    Csv,
    Jsonl,
}

impl FromStr for ReportFormat {
    type Err = BenchError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "table" => Ok(ReportFormat::Table),
            "csv" => Ok(ReportFormat::Csv),
            "jsonl" => Ok(ReportFormat::Jsonl),
            _ => Err(BenchError::UnknownFormat(s.to_owned())),
        }
    }
}

fn rate(x: f64) -> String {
    format!("{x:.4}")
}

fn probes(x: f64) -> String {
    format!("{x:.2}")
}

/// Field values of `r` in [`FIELDS`] order, formatted for output.
fn cells(r: &TrialRecord) -> [String; 10] {
    [
        r.algorithm.to_string(),
        r.distribution.clone(),
        r.n.to_string(),
        r.queries.to_string(),
        rate(r.found_rate),
        probes(r.mean_probes),
        r.p99_probes.to_string(),
        r.cache_hit_rate.map(rate).unwrap_or_default(),
        r.wall_time_ns.to_string(),
        r.seed.to_string(),
    ]
}

pub fn emit_report(records: &[TrialRecord], format: ReportFormat) -> String {
    match format {
        ReportFormat::Csv => emit_csv(records),
        ReportFormat::Jsonl => emit_jsonl(records),
        ReportFormat::Table => emit_table(records),
    }
}

fn emit_csv(records: &[TrialRecord]) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(FIELDS).expect("in-memory write");
    for r in records {
        w.write_record(cells(r)).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is utf-8")
}

fn emit_jsonl(records: &[TrialRecord]) -> String {
    let mut out = String::new();
    for r in records {
        let c = cells(r);
        let json_str = |s: &str| serde_json::to_string(s).expect("string serialization");
        let hit = if c[7].is_empty() { "null" } else { &c[7] };
        writeln!(
            out,
            "{{\"algorithm\":{},\"distribution\":{},\"n\":{},\"queries\":{},\"found_rate\":{},\
             \"mean_probes\":{},\"p99_probes\":{},\"cache_hit_rate\":{},\"wall_time_ns\":{},\"seed\":{}}}",
            json_str(&c[0]),
            json_str(&c[1]),
            c[2],
            c[3],
            c[4],
            c[5],
            c[6],
            hit,
            c[8],
            json_str(&c[9]),
        )
        .expect("write to String");
    }
    out
}

fn emit_table(records: &[TrialRecord]) -> String {
    let rows: Vec<[String; 10]> = records.iter().map(cells).collect();
    let mut widths: Vec<usize> = FIELDS.iter().map(|f| f.len()).collect();
    for row in &rows {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.len());
        }
    }
    let mut out = String::new();
    let mut line = |items: &mut dyn Iterator<Item = &str>| {
        let parts: Vec<String> = items
            .zip(&widths)
            .enumerate()
            // Text columns left-aligned, numbers right-aligned.
            .map(|(i, (s, w))| if i < 2 { format!("{s:<w$}") } else { format!("{s:>w$}") })
            .collect();
        out.push_str(parts.join("  ").trim_end());
        out.push('\n');
    };
    line(&mut FIELDS.iter().copied());
    for row in &rows {
        line(&mut row.iter().map(String::as_str));
    }
    out
}

#[derive(Debug, Deserialize)]
struct Row {
    algorithm: String,
    distribution: String,
    n: usize,
    queries: usize,
    found_rate: f64,
    mean_probes: f64,
    p99_probes: usize,
    cache_hit_rate: Option<f64>,
    wall_time_ns: u64,
    seed: String,
}

impl TryFrom<Row> for TrialRecord {
    type Error = BenchError;

    fn try_from(row: Row) -> Result<Self> {
        Ok(TrialRecord {
            algorithm: row.algorithm.parse::<TrialAlgorithm>().map_err(BenchError::Report)?,
            distribution: row.distribution,
            n: row.n,
            queries: row.queries,
            found_rate: row.found_rate,
            mean_probes: row.mean_probes,
            p99_probes: row.p99_probes,
            cache_hit_rate: row.cache_hit_rate,
            wall_time_ns: row.wall_time_ns,
            seed: row.seed.parse().map_err(BenchError::Report)?,
        })
    }
}

pub fn parse_csv(text: &str) -> Result<Vec<TrialRecord>> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let header = reader.headers().map_err(|e| BenchError::Report(e.to_string()))?;
    if header.iter().ne(FIELDS) {
        return Err(BenchError::Report(format!("unexpected csv header {header:?}")));
    }
    reader
        .deserialize::<Row>()
        .map(|row| row.map_err(|e| BenchError::Report(e.to_string()))?.try_into())
        .collect()
}

pub fn parse_jsonl(text: &str) -> Result<Vec<TrialRecord>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            serde_json::from_str::<Row>(l)
                .map_err(|e| BenchError::Report(e.to_string()))?
                .try_into()
        })
        .collect()
}
