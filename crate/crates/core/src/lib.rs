//! Fluctuation-electrodynamics observables for a pair of spherical
//! nanoparticles, one of which rotates with angular velocity Ω.
//!
//! The crate evaluates frictional torque, heat generation and interaction
//! forces for two rotation-axis configurations (along the interparticle
//! axis ẑ, or perpendicular to it along x̂′), and locates the
//! anomalous-Doppler resonances where those quantities diverge.
//!
//! Units are SI throughout, except that polarizabilities are in the
//! Gaussian convention (m³), so `α / d³` is dimensionless.

pub mod constants;
pub mod error;
pub mod materials;
pub mod observables;
pub mod quadrature;
pub mod resonance;
pub mod roots;
pub mod scenario;
pub mod spectral;

pub use error::{Error, Result};
pub use materials::{OscillatorMaterial, Particle, PolaritonResonance};
pub use quadrature::{IntegralResult, PoleHint, QuadratureConfig};
pub use resonance::ResonanceReport;
pub use scenario::{Axis, ObservableResult, Scenario};
pub use spectral::ThermalPair;
