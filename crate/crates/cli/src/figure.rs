//! Curve sets for the quantum-friction resonance figures.
//!
//! All curves use two SiC spheres with R = 0.5 nm at T₁ = T₂ = 0.
//!
//! * `2a`: quantum heat generation vs Ω at d = 2.60R … 2.63R
//! * `2b`: force along ẑ vs Ω at the same separations
//! * `3a`: quantum heat generation vs d at Ω = Ω₀ and Ω₀(1 + 0.003)
//! * `3b`: force along ẑ vs d at the same two rotation rates

use std::fmt;
use std::str::FromStr;

use nanorot::materials::resonance_params;
use nanorot::QuadratureConfig;

use crate::config::{Quantity, RunConfig};
use crate::sweep::{run_sweep, Observable, RunRecord, Scale, SweepSpec, Variable};
use crate::CliError;

pub const FIG2_SEPARATIONS: [f64; 4] = [2.60, 2.61, 2.62, 2.63];
/// Half-width of the Ω window, in polariton linewidths.
pub const FIG2_HALF_WINDOW: f64 = 10.0;
pub const FIG2_POINTS: usize = 401;
pub const FIG3_ROTATIONS: [f64; 2] = [1.0, 1.003];
pub const FIG3_RANGE: (f64, f64) = (2.60, 3.5);
pub const FIG3_POINTS: usize = 181;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FigureId {
    Fig2a,
    Fig2b,
    Fig3a,
    Fig3b,
}

impl FigureId {
    pub const ALL: [FigureId; 4] = [FigureId::Fig2a, FigureId::Fig2b, FigureId::Fig3a, FigureId::Fig3b];
}

impl FromStr for FigureId {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim_start_matches("fig") {
            "2a" => Ok(FigureId::Fig2a),
            "2b" => Ok(FigureId::Fig2b),
            "3a" => Ok(FigureId::Fig3a),
            "3b" => Ok(FigureId::Fig3b),
            _ => Err(format!("unknown figure '{s}' (expected 2a, 2b, 3a or 3b)")),
        }
    }
}

impl fmt::Display for FigureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FigureId::Fig2a => "2a",
            FigureId::Fig2b => "2b",
            FigureId::Fig3a => "3a",
            FigureId::Fig3b => "3b",
        })
    }
}

/// One curve of a figure with its data.
#[derive(Debug, Clone)]
pub struct Curve {
    /// File stem, e.g. `fig2a_d2.60R`.
    pub name: String,
    pub config: RunConfig,
    pub sweep: SweepSpec,
    pub records: Vec<RunRecord>,
}

impl Curve {
    /// (sweep point, value) pairs of one observable; singular points
    /// give `None`.
    pub fn series(&self, o: Observable) -> Vec<(f64, Option<f64>)> {
        self.records
            .iter()
            .filter(|r| r.observable == o)
            .map(|r| (r.point, r.value))
            .collect()
    }

    pub fn header(&self) -> Vec<(&'static str, String)> {
        let mut h = vec![("curve", self.name.clone())];
        h.extend(self.config.snapshot());
        h.push(("sweep_variable", self.sweep.variable.to_string()));
        h.push(("sweep_start", self.sweep.start.to_string()));
        h.push(("sweep_stop", self.sweep.stop.to_string()));
        h.push(("sweep_points", self.sweep.points.to_string()));
        h
    }
}

fn base(quadrature: &QuadratureConfig) -> RunConfig {
    RunConfig {
        quadrature: quadrature.clone(),
        ..RunConfig::default()
    }
}

fn observables(id: FigureId) -> Vec<Observable> {
    match id {
        FigureId::Fig2a | FigureId::Fig3a => vec![Observable::HeatQuantum],
        FigureId::Fig2b | FigureId::Fig3b => vec![Observable::ForceZ, Observable::ForceZAnomalous],
    }
}

/// Computes every curve of a figure. `points` overrides the default
/// sampling; Ω sweeps are forced to an odd count so Ω₀ is sampled.
pub fn generate(
    id: FigureId,
    points: Option<usize>,
    quadrature: &QuadratureConfig,
    jobs: Option<usize>,
) -> Result<Vec<Curve>, CliError> {
    let base = base(quadrature);
    let res = resonance_params(&base.material1.material).map_err(CliError::Compute)?;
    let list = observables(id);
    let mut curves = Vec::new();
    match id {
        FigureId::Fig2a | FigureId::Fig2b => {
            let n = points.unwrap_or(FIG2_POINTS) | 1;
            let center = 2.0 * res.omega0;
            let half = FIG2_HALF_WINDOW * res.gamma_res;
            for d in FIG2_SEPARATIONS {
                let config = RunConfig {
                    d: Quantity::Radii(d),
                    ..base.clone()
                };
                let sweep = SweepSpec {
                    variable: Variable::Omega,
                    start: Quantity::Absolute(center - half),
                    stop: Quantity::Absolute(center + half),
                    points: n,
                    scale: Scale::Linear,
                };
                let records = run_sweep(&config, &sweep, &list, jobs)?;
                curves.push(Curve {
                    name: format!("fig{id}_d{d:.2}R"),
                    config,
                    sweep,
                    records,
                });
            }
        }
        FigureId::Fig3a | FigureId::Fig3b => {
            let n = points.unwrap_or(FIG3_POINTS);
            for k in FIG3_ROTATIONS {
                let config = RunConfig {
                    rotation: Quantity::ResonantRotations(k),
                    ..base.clone()
                };
                let sweep = SweepSpec {
                    variable: Variable::Separation,
                    start: Quantity::Radii(FIG3_RANGE.0),
                    stop: Quantity::Radii(FIG3_RANGE.1),
                    points: n,
                    scale: Scale::Linear,
                };
                let records = run_sweep(&config, &sweep, &list, jobs)?;
                curves.push(Curve {
                    name: format!("fig{id}_Omega{k}Omega0"),
                    config,
                    sweep,
                    records,
                });
            }
        }
    }
    Ok(curves)
}
