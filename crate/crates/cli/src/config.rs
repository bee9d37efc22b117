//! Flat `key = value` run configuration.
//!
//! ```text
//! # two SiC spheres
//! material = SiC
//! R = 0.5e-9
//! d = 2.6R
//! Omega = 2w0
//! T1 = 0
//! T2 = 300
//! axis = z
//! ```
//!
//! Lengths accept an `R` suffix (multiples of the radius of particle 1),
//! frequencies a `w0` suffix (multiples of the polariton frequency of
//! particle 1), or `Omega0` (multiples of ω₁ + ω₂).

use std::fmt;
use std::path::{Path, PathBuf};

use nanorot::materials::{resonance_params, OscillatorMaterial};
use nanorot::{Axis, Particle, QuadratureConfig, Scenario, ThermalPair};

use crate::CliError;

/// Material with the name it was loaded under.
#[derive(Debug, Clone, PartialEq)]
pub struct NamedMaterial {
    pub name: String,
    pub material: OscillatorMaterial,
}

impl NamedMaterial {
    pub fn preset(name: &str) -> Result<Self, CliError> {
        OscillatorMaterial::preset(name)
            .map(|material| NamedMaterial {
                name: name.to_string(),
                material,
            })
            .ok_or_else(|| {
                CliError::Usage(format!(
                    "unknown material preset '{name}'; available presets: {}",
                    OscillatorMaterial::PRESETS.join(", ")
                ))
            })
    }

    pub fn from_file(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
        let material = OscillatorMaterial::parse(&text)
            .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        Ok(NamedMaterial {
            name: path.display().to_string(),
            material,
        })
    }

    pub fn sic() -> Self {
        NamedMaterial {
            name: "SiC".into(),
            material: OscillatorMaterial::sic(),
        }
    }
}

/// A value that may be given relative to a reference scale.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Quantity {
    Absolute(f64),
    Radii(f64),
    PolaritonFrequencies(f64),
    ResonantRotations(f64),
}

impl Quantity {
    pub fn parse(text: &str) -> Result<Self, String> {
        let t = text.trim();
        let (number, make): (&str, fn(f64) -> Quantity) = if let Some(n) = t.strip_suffix("Omega0") {
            (n, Quantity::ResonantRotations)
        } else if let Some(n) = t.strip_suffix("w0") {
            (n, Quantity::PolaritonFrequencies)
        } else if let Some(n) = t.strip_suffix('R') {
            (n, Quantity::Radii)
        } else {
            (t, Quantity::Absolute)
        };
        let number = number.trim();
        let x = if number.is_empty() {
            1.0
        } else {
            number
                .parse::<f64>()
                .map_err(|_| format!("invalid number '{text}'"))?
        };
        if !x.is_finite() {
            return Err(format!("non-finite value '{text}'"));
        }
        Ok(make(x))
    }

    /// Resolves against the radius and resonance of particle 1.
    pub fn resolve(&self, radius: f64, material: &OscillatorMaterial) -> Result<f64, CliError> {
        let w0 = || {
            resonance_params(material)
                .map(|r| r.omega0)
                .map_err(CliError::Compute)
        };
        Ok(match *self {
            Quantity::Absolute(x) => x,
            Quantity::Radii(x) => x * radius,
            Quantity::PolaritonFrequencies(x) => x * w0()?,
            Quantity::ResonantRotations(x) => 2.0 * x * w0()?,
        })
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quantity::Absolute(x) => write!(f, "{x:e}"),
            Quantity::Radii(x) => write!(f, "{x}R"),
            Quantity::PolaritonFrequencies(x) => write!(f, "{x}w0"),
            Quantity::ResonantRotations(x) => write!(f, "{x}Omega0"),
        }
    }
}

/// Everything needed to build a [`Scenario`] and evaluate observables.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub material1: NamedMaterial,
    pub material2: Option<NamedMaterial>,
    pub radius1: f64,
    pub radius2: Option<f64>,
    pub d: Quantity,
    pub rotation: Quantity,
    /// Spectral frequency for frequency-resolved observables.
    pub omega: Quantity,
    pub t1: f64,
    pub t2: f64,
    pub axis: Axis,
    pub quadrature: QuadratureConfig,
    /// Hamaker constant for the van der Waals reference, J.
    pub hamaker: f64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            material1: NamedMaterial::sic(),
            material2: None,
            radius1: 0.5e-9,
            radius2: None,
            d: Quantity::Radii(3.0),
            rotation: Quantity::Absolute(0.0),
            omega: Quantity::PolaritonFrequencies(1.0),
            t1: 0.0,
            t2: 0.0,
            axis: Axis::Z,
            quadrature: QuadratureConfig::default(),
            hamaker: nanorot::resonance::HAMAKER_SIC,
        }
    }
}

fn parse_error(line: usize, message: impl Into<String>) -> CliError {
    CliError::Usage(format!("line {line}: {}", message.into()))
}

impl RunConfig {
    /// Reads a config file; material files are resolved relative to it.
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
        let base = path.parent().map(Path::to_path_buf).unwrap_or_default();
        let mut cfg = RunConfig::default();
        cfg.apply_text(&text, &base)
            .map_err(|e| match e {
                CliError::Usage(m) => CliError::Usage(format!("{}: {m}", path.display())),
                other => other,
            })?;
        Ok(cfg)
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut cfg = RunConfig::default();
        cfg.apply_text(text, &PathBuf::new())?;
        Ok(cfg)
    }

    fn apply_text(&mut self, text: &str, base: &Path) -> Result<(), CliError> {
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| parse_error(i + 1, format!("expected key = value, got '{line}'")))?;
            self.set(key.trim(), value.trim(), base)
                .map_err(|m| parse_error(i + 1, m))?;
        }
        Ok(())
    }

    /// Applies one `key = value` override.
    pub fn set(&mut self, key: &str, value: &str, base: &Path) -> Result<(), String> {
        let number = || {
            value
                .parse::<f64>()
                .map_err(|_| format!("invalid number '{value}' for {key}"))
        };
        let material = |v: &str| -> Result<NamedMaterial, String> {
            NamedMaterial::preset(v).map_err(|e| e.to_string())
        };
        let material_file = |v: &str| -> Result<NamedMaterial, String> {
            NamedMaterial::from_file(&base.join(v)).map_err(|e| e.to_string())
        };
        match key {
            "material" | "material1" => self.material1 = material(value)?,
            "material_file" | "material1_file" => self.material1 = material_file(value)?,
            "material2" => self.material2 = Some(material(value)?),
            "material2_file" => self.material2 = Some(material_file(value)?),
            "R" | "R1" | "radius" => self.radius1 = number()?,
            "R2" => self.radius2 = Some(number()?),
            "d" => self.d = Quantity::parse(value)?,
            "Omega" | "rotation" => self.rotation = Quantity::parse(value)?,
            "omega" => self.omega = Quantity::parse(value)?,
            "T1" => self.t1 = number()?,
            "T2" => self.t2 = number()?,
            "axis" => self.axis = value.parse().map_err(|e: nanorot::Error| e.to_string())?,
            "rel_tol" => self.quadrature.rel_tol = number()?,
            "abs_tol" => self.quadrature.abs_tol = number()?,
            "max_subdivisions" => {
                self.quadrature.max_subdivisions = value
                    .parse()
                    .map_err(|_| format!("invalid count '{value}' for {key}"))?
            }
            "oracle" => {
                self.quadrature.oracle_mode = value
                    .parse()
                    .map_err(|_| format!("expected true or false for {key}, got '{value}'"))?
            }
            "oracle_points" => {
                self.quadrature.oracle_points = value
                    .parse()
                    .map_err(|_| format!("invalid count '{value}' for {key}"))?
            }
            "pole_guard" => self.quadrature.pole_guard = number()?,
            "hamaker" => self.hamaker = number()?,
            _ => return Err(format!("unknown key '{key}'")),
        }
        Ok(())
    }

    pub fn particles(&self) -> Result<(Particle, Particle), CliError> {
        let m2 = self.material2.as_ref().unwrap_or(&self.material1);
        let p1 = Particle::new(self.material1.material, self.radius1, self.t1)
            .map_err(|e| CliError::Usage(e.to_string()))?;
        let p2 = Particle::new(m2.material, self.radius2.unwrap_or(self.radius1), self.t2)
            .map_err(|e| CliError::Usage(e.to_string()))?;
        Ok((p1, p2))
    }

    pub fn separation(&self) -> Result<f64, CliError> {
        self.d.resolve(self.radius1, &self.material1.material)
    }

    pub fn rotation_rate(&self) -> Result<f64, CliError> {
        self.rotation.resolve(self.radius1, &self.material1.material)
    }

    pub fn spectral_omega(&self) -> Result<f64, CliError> {
        self.omega.resolve(self.radius1, &self.material1.material)
    }

    pub fn thermal(&self) -> Result<ThermalPair, CliError> {
        ThermalPair::new(self.t1, self.t2).map_err(|e| CliError::Usage(e.to_string()))
    }

    /// Builds and validates the scenario; overlap is a usage error.
    pub fn scenario(&self) -> Result<Scenario, CliError> {
        let (p1, p2) = self.particles()?;
        Scenario::new(p1, p2, self.separation()?, self.rotation_rate()?, self.axis)
            .map_err(|e| CliError::Usage(e.to_string()))
    }

    pub fn validate(&self) -> Result<(), CliError> {
        self.quadrature
            .validate()
            .map_err(|e| CliError::Usage(e.to_string()))?;
        self.thermal()?;
        self.particles()?;
        Ok(())
    }

    /// `key=value` snapshot for output headers.
    pub fn snapshot(&self) -> Vec<(&'static str, String)> {
        let m2 = self.material2.as_ref().unwrap_or(&self.material1);
        vec![
            ("material1", self.material1.name.clone()),
            ("material2", m2.name.clone()),
            ("R1", format!("{:e}", self.radius1)),
            ("R2", format!("{:e}", self.radius2.unwrap_or(self.radius1))),
            ("d", self.d.to_string()),
            ("Omega", self.rotation.to_string()),
            ("omega", self.omega.to_string()),
            ("T1", format!("{}", self.t1)),
            ("T2", format!("{}", self.t2)),
            ("axis", self.axis.to_string()),
            ("rel_tol", format!("{:e}", self.quadrature.rel_tol)),
            ("abs_tol", format!("{:e}", self.quadrature.abs_tol)),
            ("oracle", format!("{}", self.quadrature.oracle_mode)),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_relative_quantities() {
        assert_eq!(Quantity::parse("2.6R").unwrap(), Quantity::Radii(2.6));
        assert_eq!(Quantity::parse("2w0").unwrap(), Quantity::PolaritonFrequencies(2.0));
        assert_eq!(Quantity::parse("Omega0").unwrap(), Quantity::ResonantRotations(1.0));
        assert_eq!(Quantity::parse("1.3e-9").unwrap(), Quantity::Absolute(1.3e-9));
        assert!(Quantity::parse("abc").is_err());
    }

    #[test]
    fn parses_config_with_comments() {
        let cfg = RunConfig::parse("# pair\nmaterial = SiC\nd = 2.6R # close\nT2 = 300\naxis = x'\n")
            .unwrap();
        assert_eq!(cfg.d, Quantity::Radii(2.6));
        assert_eq!(cfg.t2, 300.0);
        assert_eq!(cfg.axis, Axis::XPrime);
        let s = cfg.scenario().unwrap();
        assert!((s.d - 1.3e-9).abs() < 1e-24);
    }

    #[test]
    fn errors_name_the_line() {
        let err = RunConfig::parse("T1 = 0\nbogus\n").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
        let err = RunConfig::parse("T1 = 0\nT2 = hot\n").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
    }

    #[test]
    fn overlap_is_refused() {
        let cfg = RunConfig::parse("d = 1.5R\n").unwrap();
        assert!(matches!(cfg.scenario(), Err(CliError::Usage(_))));
    }
}
