//! Parameter sweeps over one scenario variable.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use nanorot::observables as obs;
use nanorot::resonance;
use nanorot::{Axis, Error, ObservableResult, Scenario};

use crate::config::{Quantity, RunConfig};
use crate::CliError;

/// Dipole ratio 2R/d above which rows carry a caution flag.
pub const CAUTION_RATIO: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Variable {
    Omega,
    #[serde(rename = "d")]
    Separation,
    T2,
    #[serde(rename = "omega")]
    Frequency,
}

impl FromStr for Variable {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "Omega" | "rotation" => Ok(Variable::Omega),
            "d" => Ok(Variable::Separation),
            "T2" => Ok(Variable::T2),
            "omega" => Ok(Variable::Frequency),
            _ => Err(format!("unknown sweep variable '{s}' (expected Omega, d, T2 or omega)")),
        }
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variable::Omega => "Omega",
            Variable::Separation => "d",
            Variable::T2 => "T2",
            Variable::Frequency => "omega",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scale {
    Linear,
    Log,
}

impl FromStr for Scale {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "linear" | "lin" => Ok(Scale::Linear),
            "log" => Ok(Scale::Log),
            _ => Err(format!("unknown scale '{s}' (expected linear or log)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepSpec {
    pub variable: Variable,
    pub start: Quantity,
    pub stop: Quantity,
    pub points: usize,
    pub scale: Scale,
}

fn magnitude(q: &Quantity) -> (f64, u8) {
    match *q {
        Quantity::Absolute(x) => (x, 0),
        Quantity::Radii(x) => (x, 1),
        Quantity::PolaritonFrequencies(x) => (x, 2),
        Quantity::ResonantRotations(x) => (x, 3),
    }
}

impl SweepSpec {
    pub fn validate(&self) -> Result<(), CliError> {
        let (a, ka) = magnitude(&self.start);
        let (b, kb) = magnitude(&self.stop);
        if ka != kb {
            return Err(CliError::Usage("sweep start and stop must use the same unit".into()));
        }
        if !(a < b) {
            return Err(CliError::Usage(format!(
                "sweep needs start < stop, got {} and {}",
                self.start, self.stop
            )));
        }
        if self.points < 2 {
            return Err(CliError::Usage("sweep needs at least 2 points".into()));
        }
        if self.scale == Scale::Log && !(a > 0.0) {
            return Err(CliError::Usage("log sweeps need a positive start".into()));
        }
        Ok(())
    }

    /// The sweep values, in the unit of `start`.
    pub fn values(&self) -> Vec<Quantity> {
        let (a, _) = magnitude(&self.start);
        let (b, _) = magnitude(&self.stop);
        let n = self.points;
        (0..n)
            .map(|i| {
                let t = i as f64 / (n - 1) as f64;
                let x = if i == n - 1 {
                    b
                } else {
                    match self.scale {
                        Scale::Linear => a + (b - a) * t,
                        Scale::Log => a * (b / a).powf(t),
                    }
                };
                match self.start {
                    Quantity::Absolute(_) => Quantity::Absolute(x),
                    Quantity::Radii(_) => Quantity::Radii(x),
                    Quantity::PolaritonFrequencies(_) => Quantity::PolaritonFrequencies(x),
                    Quantity::ResonantRotations(_) => Quantity::ResonantRotations(x),
                }
            })
            .collect()
    }

    /// Applies sweep value `q` to a copy of `cfg`.
    pub fn apply(&self, cfg: &RunConfig, q: Quantity) -> Result<RunConfig, CliError> {
        let mut c = cfg.clone();
        match self.variable {
            Variable::Omega => c.rotation = q,
            Variable::Separation => c.d = q,
            Variable::Frequency => c.omega = q,
            Variable::T2 => c.t2 = q.resolve(c.radius1, &c.material1.material)?,
        }
        Ok(c)
    }
}

/// Quantities a sweep can report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Observable {
    Torque,
    TorqueQuantum,
    Heat,
    HeatQuantum,
    HeatStatic,
    ForceZ,
    ForceZAnomalous,
    ForceY,
    ForceYAnomalous,
    EmissionRate,
    EmissionRateLorentzian,
    TransmissionStatic,
    HeatNearResonance,
    HeatResonantApprox,
    HeatMax,
    VdwForce,
}

impl Observable {
    pub const ALL: &'static [Observable] = &[
        Observable::Torque,
        Observable::TorqueQuantum,
        Observable::Heat,
        Observable::HeatQuantum,
        Observable::HeatStatic,
        Observable::ForceZ,
        Observable::ForceZAnomalous,
        Observable::ForceY,
        Observable::ForceYAnomalous,
        Observable::EmissionRate,
        Observable::EmissionRateLorentzian,
        Observable::TransmissionStatic,
        Observable::HeatNearResonance,
        Observable::HeatResonantApprox,
        Observable::HeatMax,
        Observable::VdwForce,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Observable::Torque => "torque",
            Observable::TorqueQuantum => "torque_quantum",
            Observable::Heat => "heat",
            Observable::HeatQuantum => "heat_quantum",
            Observable::HeatStatic => "heat_static",
            Observable::ForceZ => "force_z",
            Observable::ForceZAnomalous => "force_z_anomalous",
            Observable::ForceY => "force_y",
            Observable::ForceYAnomalous => "force_y_anomalous",
            Observable::EmissionRate => "emission_rate",
            Observable::EmissionRateLorentzian => "emission_rate_lorentzian",
            Observable::TransmissionStatic => "transmission_static",
            Observable::HeatNearResonance => "heat_near_resonance",
            Observable::HeatResonantApprox => "heat_resonant_approx",
            Observable::HeatMax => "heat_max",
            Observable::VdwForce => "vdw_force",
        }
    }

    /// Parses a comma-separated list; an empty list is a usage error.
    pub fn parse_list(text: &str) -> Result<Vec<Observable>, CliError> {
        let list: Vec<Observable> = text
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| s.parse().map_err(CliError::Usage))
            .collect::<Result<_, _>>()?;
        if list.is_empty() {
            return Err(CliError::Usage("no observables requested".into()));
        }
        Ok(list)
    }
}

impl FromStr for Observable {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Observable::ALL
            .iter()
            .copied()
            .find(|o| o.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Observable::ALL.iter().map(|o| o.name()).collect();
                format!("unknown observable '{s}'; expected one of {}", names.join(", "))
            })
    }
}

impl fmt::Display for Observable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Resolved scenario parameters carried by every row.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScenarioSnapshot {
    pub material1: String,
    pub material2: String,
    #[serde(rename = "R1")]
    pub r1: f64,
    #[serde(rename = "R2")]
    pub r2: f64,
    pub d: f64,
    #[serde(rename = "Omega")]
    pub rotation: f64,
    pub omega: f64,
    #[serde(rename = "T1")]
    pub t1: f64,
    #[serde(rename = "T2")]
    pub t2: f64,
    pub axis: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunRecord {
    pub index: usize,
    pub variable: Variable,
    pub point: f64,
    pub observable: Observable,
    pub value: Option<f64>,
    pub abs_error: Option<f64>,
    pub quantum_part: Option<f64>,
    pub converged: bool,
    pub singular: bool,
    pub out_of_window: bool,
    pub caution: bool,
    pub dipole_ratio: f64,
    pub scenario: ScenarioSnapshot,
    pub error: Option<String>,
}

impl RunRecord {
    pub fn failed(&self) -> bool {
        self.value.is_none()
    }
}

/// One evaluation outcome before it is wrapped into a record.
struct Outcome {
    result: Result<ObservableResult, Error>,
    out_of_window: bool,
}

impl From<Result<ObservableResult, Error>> for Outcome {
    fn from(result: Result<ObservableResult, Error>) -> Self {
        Outcome {
            result,
            out_of_window: false,
        }
    }
}

fn scalar(v: Result<f64, Error>) -> Outcome {
    v.map(|value| ObservableResult {
        value,
        abs_error: 0.0,
        quantum_part: 0.0,
    })
    .into()
}

fn evaluate(o: Observable, s: &Scenario, cfg: &RunConfig) -> Result<Outcome, CliError> {
    let thermal = cfg.thermal()?;
    let q = &cfg.quadrature;
    let axis_only = |axis: Axis| -> Result<(), CliError> {
        if s.axis == axis {
            Ok(())
        } else {
            Err(CliError::Usage(format!("observable {o} requires axis = {axis}")))
        }
    };
    let (p1, p2) = (&s.p1, &s.p2);
    let z = s.axis == Axis::Z;
    Ok(match o {
        Observable::Torque if z => obs::torque_z(s, &thermal, q).into(),
        Observable::Torque => obs::torque_x(s, &thermal, q).into(),
        Observable::TorqueQuantum if z => obs::torque_z_quantum(s, q).into(),
        Observable::TorqueQuantum => obs::torque_x_quantum(s, q).into(),
        Observable::Heat if z => obs::heat_z(s, &thermal, q).into(),
        Observable::Heat => obs::heat_x(s, &thermal, q).into(),
        Observable::HeatQuantum if z => obs::heat_z_quantum(s, q).into(),
        Observable::HeatQuantum => obs::heat_x_quantum(s, q).into(),
        Observable::HeatStatic => {
            axis_only(Axis::Z)?;
            obs::heat_z_static(s, &thermal, q).into()
        }
        Observable::ForceZ if z => obs::force_z(s, &thermal, q).into(),
        Observable::ForceZ => obs::force_z_x(s, &thermal, q).into(),
        Observable::ForceZAnomalous if z => obs::force_z_anomalous(s, q).into(),
        Observable::ForceZAnomalous => obs::force_z_x_anomalous(s, q).into(),
        Observable::ForceY => {
            axis_only(Axis::XPrime)?;
            obs::force_y_x(s, &thermal, q).into()
        }
        Observable::ForceYAnomalous => {
            axis_only(Axis::XPrime)?;
            obs::force_y_x_anomalous(s, q).into()
        }
        Observable::EmissionRate => {
            axis_only(Axis::Z)?;
            scalar(Ok(obs::emission_rate_exact(s, cfg.spectral_omega()?)))
        }
        Observable::EmissionRateLorentzian => scalar(resonance::emission_rate_lorentzian(
            p1,
            p2,
            s.d,
            s.rotation,
            cfg.spectral_omega()?,
        )),
        Observable::TransmissionStatic => scalar(Ok(resonance::transmission_static(
            p1,
            p2,
            s.d,
            cfg.spectral_omega()?,
        ))),
        Observable::HeatNearResonance => {
            match resonance::heat_quantum_near_resonance(p1, p2, s.d, s.rotation) {
                Ok(near) => Outcome {
                    out_of_window: !near.in_window,
                    ..scalar(Ok(near.value))
                },
                Err(e) => scalar(Err(e)),
            }
        }
        Observable::HeatResonantApprox => {
            scalar(resonance::heat_resonant_approx(p1, p2, s.d, &thermal))
        }
        Observable::HeatMax => scalar(Ok(resonance::heat_max(&thermal))),
        Observable::VdwForce => scalar(resonance::vdw_force(p1.radius, s.d, cfg.hamaker)),
    })
}

fn snapshot(s: &Scenario, cfg: &RunConfig) -> ScenarioSnapshot {
    let m2 = cfg.material2.as_ref().unwrap_or(&cfg.material1);
    ScenarioSnapshot {
        material1: cfg.material1.name.clone(),
        material2: m2.name.clone(),
        r1: s.p1.radius,
        r2: s.p2.radius,
        d: s.d,
        rotation: s.rotation,
        omega: cfg.spectral_omega().unwrap_or(f64::NAN),
        t1: cfg.t1,
        t2: cfg.t2,
        axis: s.axis.to_string(),
    }
}

fn point_value(variable: Variable, s: &Scenario, cfg: &RunConfig) -> f64 {
    match variable {
        Variable::Omega => s.rotation,
        Variable::Separation => s.d,
        Variable::T2 => cfg.t2,
        Variable::Frequency => cfg.spectral_omega().unwrap_or(f64::NAN),
    }
}

/// Evaluates one observable for one configuration.
pub fn record(
    index: usize,
    variable: Variable,
    cfg: &RunConfig,
    o: Observable,
) -> Result<RunRecord, CliError> {
    let s = cfg.scenario()?;
    let outcome = evaluate(o, &s, cfg)?;
    let ratio = s.dipole_ratio();
    let mut rec = RunRecord {
        index,
        variable,
        point: point_value(variable, &s, cfg),
        observable: o,
        value: None,
        abs_error: None,
        quantum_part: None,
        converged: false,
        singular: false,
        out_of_window: outcome.out_of_window,
        caution: ratio > CAUTION_RATIO,
        dipole_ratio: ratio,
        scenario: snapshot(&s, cfg),
        error: None,
    };
    match outcome.result {
        Ok(r) => {
            rec.value = Some(r.value);
            rec.abs_error = Some(r.abs_error);
            rec.quantum_part = Some(r.quantum_part);
            rec.converged = true;
        }
        Err(e) => {
            rec.singular = matches!(e, Error::SingularScenario { .. });
            rec.error = Some(e.to_string());
        }
    }
    Ok(rec)
}

/// Runs the sweep; rows are ordered by sweep index, then by the order of
/// `observables`, independent of the number of worker threads.
pub fn run_sweep(
    cfg: &RunConfig,
    spec: &SweepSpec,
    observables: &[Observable],
    jobs: Option<usize>,
) -> Result<Vec<RunRecord>, CliError> {
    spec.validate()?;
    cfg.validate()?;
    if observables.is_empty() {
        return Err(CliError::Usage("no observables requested".into()));
    }
    let configs = spec
        .values()
        .into_iter()
        .map(|q| {
            let c = spec.apply(cfg, q)?;
            c.scenario()?;
            Ok(c)
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let tasks: Vec<(usize, &RunConfig, Observable)> = configs
        .iter()
        .enumerate()
        .flat_map(|(i, c)| observables.iter().map(move |o| (i, c, *o)))
        .collect();
    let work = || {
        tasks
            .par_iter()
            .map(|(i, c, o)| record(*i, spec.variable, c, *o))
            .collect::<Result<Vec<_>, CliError>>()
    };
    match jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| CliError::Usage(format!("cannot start {n} workers: {e}")))?
            .install(work),
        None => work(),
    }
}
