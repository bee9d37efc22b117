//! Pair geometry, kinematics and observable results.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::materials::Particle;

/// Orientation of the rotation axis of particle 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    /// Along the line joining the particles.
    Z,
    /// Perpendicular to it.
    XPrime,
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Axis::Z => f.write_str("z"),
            Axis::XPrime => f.write_str("x'"),
        }
    }
}

impl FromStr for Axis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "z" => Ok(Axis::Z),
            "x'" | "xprime" | "x" => Ok(Axis::XPrime),
            other => Err(Error::InvalidParameter(format!(
                "unknown axis '{other}' (expected z or x')"
            ))),
        }
    }
}

/// Particle 1 sits at the origin, particle 2 at distance `d` along ẑ and
/// rotates with angular velocity `rotation` (Ω) about `axis`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Scenario {
    pub p1: Particle,
    pub p2: Particle,
    /// Center-to-center separation in meters.
    pub d: f64,
    /// Angular velocity Ω in rad/s.
    pub rotation: f64,
    pub axis: Axis,
}

impl Scenario {
    pub fn new(p1: Particle, p2: Particle, d: f64, rotation: f64, axis: Axis) -> Result<Self> {
        if !(d.is_finite() && d > p1.radius + p2.radius) {
            return Err(Error::InvalidParameter(format!(
                "particles overlap: d = {d:e} m must exceed R1 + R2 = {:e} m",
                p1.radius + p2.radius
            )));
        }
        if !(rotation >= 0.0 && rotation.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "angular velocity must be finite and >= 0, got {rotation:e}"
            )));
        }
        Ok(Self {
            p1,
            p2,
            d,
            rotation,
            axis,
        })
    }

    /// Two identical particles.
    pub fn symmetric(particle: Particle, d: f64, rotation: f64, axis: Axis) -> Result<Self> {
        Self::new(particle, particle, d, rotation, axis)
    }

    /// Multipole expansion parameter 2·max(R)/d.
    pub fn dipole_ratio(&self) -> f64 {
        2.0 * self.p1.radius.max(self.p2.radius) / self.d
    }

    pub fn with_rotation(&self, rotation: f64) -> Result<Self> {
        Self::new(self.p1, self.p2, self.d, rotation, self.axis)
    }

    pub fn with_separation(&self, d: f64) -> Result<Self> {
        Self::new(self.p1, self.p2, d, self.rotation, self.axis)
    }

    pub fn with_axis(&self, axis: Axis) -> Self {
        Self { axis, ..*self }
    }

    /// Same geometry with the particle labels exchanged.
    pub fn swapped(&self) -> Self {
        Self {
            p1: self.p2,
            p2: self.p1,
            ..*self
        }
    }

    pub(crate) fn require_axis(&self, axis: Axis) -> Result<()> {
        if self.axis != axis {
            return Err(Error::InvalidParameter(format!(
                "observable needs rotation axis {axis}, scenario has {}",
                self.axis
            )));
        }
        Ok(())
    }
}

/// An observable in SI units (N·m, W or N).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ObservableResult {
    pub value: f64,
    /// Quadrature error estimate of `value`.
    pub abs_error: f64,
    /// Zero-temperature contribution of the anomalous-Doppler window 0 < ω < Ω.
    pub quantum_part: f64,
}
