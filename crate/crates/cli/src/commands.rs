//! Subcommand implementations, writing to any `Write` sink.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use nanorot::observables::heat_z;
use nanorot::resonance::{
    critical_separation_x_lorentzian, heat_max, heat_resonant_approx, resonant_omegas,
    ResonanceReport,
};
use nanorot::{Axis, Scenario};

use crate::config::{NamedMaterial, RunConfig};
use crate::figure::{self, FigureId};
use crate::output::{self, Format};
use crate::sweep::{run_sweep, Observable, SweepSpec};
use crate::CliError;

fn io(e: std::io::Error) -> CliError {
    CliError::Io(e.to_string())
}

/// Writes flat pairs as `key=value` lines or one JSON object.
pub fn write_pairs<W: Write>(mut out: W, format: Format, pairs: &[(&str, String)]) -> Result<(), CliError> {
    match format {
        Format::Csv => {
            for (k, v) in pairs {
                writeln!(out, "{k}={v}").map_err(io)?;
            }
        }
        Format::Json => {
            let map: serde_json::Map<String, serde_json::Value> = pairs
                .iter()
                .map(|(k, v)| {
                    let value = v
                        .parse::<f64>()
                        .ok()
                        .and_then(serde_json::Number::from_f64)
                        .map(serde_json::Value::Number)
                        .unwrap_or_else(|| serde_json::Value::String(v.clone()));
                    (k.to_string(), value)
                })
                .collect();
            serde_json::to_writer(&mut out, &map).map_err(|e| CliError::Io(e.to_string()))?;
            writeln!(out).map_err(io)?;
        }
    }
    Ok(())
}

/// Resonance report for one material, as an identical pair.
pub fn material<W: Write>(
    out: W,
    material: &NamedMaterial,
    radius: f64,
    format: Format,
) -> Result<(), CliError> {
    let p = nanorot::Particle::new(material.material, radius, 0.0)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let report = ResonanceReport::new(&p, &p, None)?;
    let lorentz = critical_separation_x_lorentzian(&p, &p)?;
    let mut pairs = vec![("material", material.name.clone()), ("R", format!("{radius:e}"))];
    pairs.extend(report.pairs().into_iter().filter(|(k, _)| *k != "d"));
    pairs.push(("d0_z_over_R", format!("{:.4}", report.d0_z / radius)));
    pairs.push(("d0_x_over_R", format!("{:.4}", report.d0_x / radius)));
    pairs.push(("d0_x_lorentzian_over_R", format!("{:.4}", lorentz / radius)));
    write_pairs(out, format, &pairs)
}

/// Critical separations and resonant rotation rates for the configured pair.
pub fn critical_sep<W: Write>(out: W, cfg: &RunConfig, format: Format) -> Result<(), CliError> {
    let (p1, p2) = cfg.particles()?;
    let d = cfg.separation()?;
    let report = ResonanceReport::new(&p1, &p2, Some(d))?;
    let lorentz = critical_separation_x_lorentzian(&p1, &p2)?;
    let r = cfg.radius1;
    let mut pairs = report.pairs();
    pairs.push(("d0_z_over_R", format!("{:.4}", report.d0_z / r)));
    pairs.push(("d0_x_over_R", format!("{:.4}", report.d0_x / r)));
    pairs.push(("d0_x_lorentzian", format!("{lorentz:e}")));
    pairs.push(("d0_x_lorentzian_over_R", format!("{:.4}", lorentz / r)));
    write_pairs(out, format, &pairs)
}

/// Static (Ω = 0) heat into particle 1 against the closed forms.
pub fn static_heat<W: Write>(out: W, cfg: &RunConfig, format: Format) -> Result<(), CliError> {
    let (p1, p2) = cfg.particles()?;
    let d = cfg.separation()?;
    let thermal = cfg.thermal()?;
    let s = Scenario::new(p1, p2, d, 0.0, Axis::Z).map_err(|e| CliError::Usage(e.to_string()))?;
    let exact = heat_z(&s, &thermal, &cfg.quadrature)?;
    let mut pairs = vec![
        ("d", format!("{d:e}")),
        ("T1", thermal.t1.to_string()),
        ("T2", thermal.t2.to_string()),
        ("heat", format!("{:e}", exact.value)),
        ("abs_error", format!("{:e}", exact.abs_error)),
        ("heat_max", format!("{:e}", heat_max(&thermal))),
    ];
    if let Ok(approx) = heat_resonant_approx(&p1, &p2, d, &thermal) {
        pairs.push(("heat_resonant_approx", format!("{approx:e}")));
    }
    if let Ok(rot) = resonant_omegas(&p1, &p2, d) {
        pairs.push(("Omega0", format!("{:e}", rot.omega0)));
    }
    write_pairs(out, format, &pairs)
}

/// Runs a sweep and writes its records. Exit status 2 when every point
/// failed.
pub fn sweep<W: Write>(
    out: W,
    cfg: &RunConfig,
    spec: &SweepSpec,
    observables: &[Observable],
    format: Format,
    jobs: Option<usize>,
) -> Result<(), CliError> {
    let records = run_sweep(cfg, spec, observables, jobs)?;
    let mut header = cfg.snapshot();
    header.push(("sweep_variable", spec.variable.to_string()));
    header.push(("sweep_start", spec.start.to_string()));
    header.push(("sweep_stop", spec.stop.to_string()));
    header.push(("sweep_points", spec.points.to_string()));
    output::write(format, out, &header, &records)?;
    if records.iter().all(|r| r.failed()) {
        return Err(CliError::Failed("every sweep point failed".into()));
    }
    Ok(())
}

/// Writes one file per curve into `dir`; returns the paths written.
pub fn figure(
    id: FigureId,
    dir: &Path,
    points: Option<usize>,
    cfg: &RunConfig,
    format: Format,
    jobs: Option<usize>,
) -> Result<Vec<PathBuf>, CliError> {
    std::fs::create_dir_all(dir).map_err(io)?;
    let ext = match format {
        Format::Csv => "csv",
        Format::Json => "jsonl",
    };
    let mut written = Vec::new();
    for curve in figure::generate(id, points, &cfg.quadrature, jobs)? {
        let path = dir.join(format!("{}.{ext}", curve.name));
        let file = BufWriter::new(File::create(&path).map_err(io)?);
        output::write(format, file, &curve.header(), &curve.records)?;
        written.push(path);
    }
    Ok(written)
}
