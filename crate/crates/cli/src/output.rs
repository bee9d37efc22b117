//! CSV and JSON-lines writers for run records.

use std::io::Write;
use std::str::FromStr;

use crate::sweep::RunRecord;
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" | "jsonl" => Ok(Format::Json),
            _ => Err(format!("unknown format '{s}' (expected csv or json)")),
        }
    }
}

pub const CSV_COLUMNS: &[&str] = &[
    "index",
    "variable",
    "point",
    "observable",
    "value",
    "abs_error",
    "quantum_part",
    "converged",
    "singular",
    "out_of_window",
    "caution",
    "dipole_ratio",
    "material1",
    "material2",
    "R1",
    "R2",
    "d",
    "Omega",
    "omega",
    "T1",
    "T2",
    "axis",
    "error",
];

fn num(x: f64) -> String {
    format!("{x:e}")
}

fn opt(x: Option<f64>) -> String {
    x.map(num).unwrap_or_default()
}

fn io(e: impl std::fmt::Display) -> CliError {
    CliError::Io(e.to_string())
}

/// Writes a `# key=value` header block followed by one CSV row per record.
pub fn write_csv<W: Write>(
    mut out: W,
    header: &[(&str, String)],
    records: &[RunRecord],
) -> Result<(), CliError> {
    for (k, v) in header {
        writeln!(out, "# {k}={v}").map_err(io)?;
    }
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_COLUMNS).map_err(io)?;
    for r in records {
        let s = &r.scenario;
        w.write_record([
            r.index.to_string(),
            r.variable.to_string(),
            num(r.point),
            r.observable.to_string(),
            opt(r.value),
            opt(r.abs_error),
            opt(r.quantum_part),
            r.converged.to_string(),
            r.singular.to_string(),
            r.out_of_window.to_string(),
            r.caution.to_string(),
            num(r.dipole_ratio),
            s.material1.clone(),
            s.material2.clone(),
            num(s.r1),
            num(s.r2),
            num(s.d),
            num(s.rotation),
            num(s.omega),
            s.t1.to_string(),
            s.t2.to_string(),
            s.axis.clone(),
            r.error.clone().unwrap_or_default(),
        ])
        .map_err(io)?;
    }
    w.flush().map_err(io)
}

/// Writes one JSON object per record; the header becomes a leading
/// `{"header": {...}}` line.
pub fn write_json<W: Write>(
    mut out: W,
    header: &[(&str, String)],
    records: &[RunRecord],
) -> Result<(), CliError> {
    let map: serde_json::Map<String, serde_json::Value> = header
        .iter()
        .map(|(k, v)| (k.to_string(), serde_json::Value::String(v.clone())))
        .collect();
    serde_json::to_writer(&mut out, &serde_json::json!({ "header": map })).map_err(io)?;
    writeln!(out).map_err(io)?;
    for r in records {
        serde_json::to_writer(&mut out, r).map_err(io)?;
        writeln!(out).map_err(io)?;
    }
    out.flush().map_err(io)
}

pub fn write<W: Write>(
    format: Format,
    out: W,
    header: &[(&str, String)],
    records: &[RunRecord],
) -> Result<(), CliError> {
    match format {
        Format::Csv => write_csv(out, header, records),
        Format::Json => write_json(out, header, records),
    }
}
