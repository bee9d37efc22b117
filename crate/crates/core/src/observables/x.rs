//! Rotation axis along x̂′, perpendicular to the line joining the particles.
//!
//! The rotation mixes the z- and y-polarized dipoles, so the Doppler
//! channels share the coupling determinant Δ = D₁⁺D₂⁻ + D₁⁻D₂⁺. The
//! x-polarized dipoles stay static and couple through 1 − α₁α₂/d⁶.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::constants::HBAR;
use crate::error::Result;
use crate::materials::Response;
use crate::quadrature::QuadratureConfig;
use crate::scenario::{Axis, ObservableResult, Scenario};
use crate::spectral::ThermalPair;

use super::{im_coth, plan, quantum_only, result, thermal_cross, Plan};

/// Mode-coupling factors at one lab frequency.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CouplingFactors {
    /// 1 − 4α₁(ω)α₂(ω+Ω)/d⁶
    pub d1_plus: Complex64,
    /// 1 − 4α₁(ω)α₂(ω−Ω)/d⁶
    pub d1_minus: Complex64,
    /// 1 − α₁(ω)α₂(ω+Ω)/d⁶
    pub d2_plus: Complex64,
    /// 1 − α₁(ω)α₂(ω−Ω)/d⁶
    pub d2_minus: Complex64,
    pub delta: Complex64,
}

impl CouplingFactors {
    fn from_products(plus: Complex64, minus: Complex64, d6: f64) -> Self {
        let d1_plus = 1.0 - 4.0 * plus / d6;
        let d1_minus = 1.0 - 4.0 * minus / d6;
        let d2_plus = 1.0 - plus / d6;
        let d2_minus = 1.0 - minus / d6;
        CouplingFactors {
            d1_plus,
            d1_minus,
            d2_plus,
            d2_minus,
            delta: d1_plus * d2_minus + d1_minus * d2_plus,
        }
    }

    /// 4(|D₁⁺|² + 4|D₂⁺|²), the Doppler weight in the heat and z-force.
    fn doppler_weight(&self) -> f64 {
        4.0 * (self.d1_plus.norm_sqr() + 4.0 * self.d2_plus.norm_sqr())
    }
}

/// Coupling factors at lab frequency `omega`.
///
/// Does not check the axis; Ω is taken from the scenario either way.
pub fn coupling_factors(s: &Scenario, omega: f64) -> CouplingFactors {
    let a1 = s.p1.polarizability(omega);
    let plus = a1 * s.p2.polarizability(omega + s.rotation);
    let minus = a1 * s.p2.polarizability(omega - s.rotation);
    CouplingFactors::from_products(plus, minus, s.d.powi(6))
}

fn guard_denominator(s: &Scenario) -> impl Fn(f64) -> f64 + '_ {
    let d6 = s.d.powi(6);
    move |w: f64| {
        let stat = 1.0 - s.p1.polarizability(w) * s.p2.polarizability(w) / d6;
        (0.5 * coupling_factors(s, w).delta.norm()).min(stat.norm())
    }
}

fn prepare(s: &Scenario, thermal: &ThermalPair, q: &QuadratureConfig) -> Result<Plan> {
    s.require_axis(Axis::XPrime)?;
    plan(s, thermal, q, guard_denominator(s))
}

/// Everything the Doppler kernels need at one frequency.
struct Doppler {
    r1: Response,
    r2m: Response,
    k: CouplingFactors,
    inv_delta2: f64,
}

impl Doppler {
    fn at(s: &Scenario, w: f64) -> Self {
        let r1 = s.p1.response(w);
        let r2m = s.p2.response(w - s.rotation);
        let r2p = s.p2.polarizability(w + s.rotation);
        let k = CouplingFactors::from_products(r1.alpha * r2p, r1.alpha * r2m.alpha, s.d.powi(6));
        Doppler {
            r1,
            r2m,
            inv_delta2: 1.0 / k.delta.norm_sqr(),
            k,
        }
    }

    fn loss_product(&self) -> f64 {
        self.r1.alpha.im * self.r2m.alpha.im
    }

    fn cross(&self, thermal: &ThermalPair) -> f64 {
        thermal_cross(&self.r1, thermal.t1, &self.r2m, thermal.t2)
    }

    /// Re α₁ Im α₂(ω⁻) coth(ω⁻,T₂) + Im α₁ Re α₂(ω⁻) coth(ω,T₁).
    fn reactive(&self, thermal: &ThermalPair) -> f64 {
        self.r1.alpha.re * im_coth(&self.r2m, thermal.t2)
            + im_coth(&self.r1, thermal.t1) * self.r2m.alpha.re
    }

    /// The same combination with coth(ω⁻) = −1, coth(ω) = +1.
    fn reactive_quantum(&self) -> f64 {
        self.r1.alpha.im * self.r2m.alpha.re - self.r1.alpha.re * self.r2m.alpha.im
    }

    fn mixed(&self) -> Complex64 {
        self.k.d1_plus * self.k.d2_plus.conj()
    }
}

fn static_transverse(s: &Scenario, w: f64) -> (Response, Response, f64) {
    let r1 = s.p1.response(w);
    let r2 = s.p2.response(w);
    let den = (1.0 - r1.alpha * r2.alpha / s.d.powi(6)).norm_sqr();
    (r1, r2, den)
}

fn torque_kernel(s: &Scenario, w: f64, thermal: Option<&ThermalPair>) -> f64 {
    let k = Doppler::at(s, w);
    let c = thermal.map_or(-2.0 * k.loss_product(), |t| k.cross(t));
    k.mixed().re * c * k.inv_delta2
}

/// Frictional torque on particle 1 about x̂.
pub fn torque_x(
    s: &Scenario,
    thermal: &ThermalPair,
    q: &QuadratureConfig,
) -> Result<ObservableResult> {
    let plan = prepare(s, thermal, q)?;
    let full = plan.full_line(|w| torque_kernel(s, w, Some(thermal)))?;
    let quantum = plan.window(s.rotation, |w| torque_kernel(s, w, None))?;
    Ok(result(full, quantum, 8.0 * HBAR / (PI * s.d.powi(6))))
}

/// Zero-temperature torque about x̂.
pub fn torque_x_quantum(s: &Scenario, q: &QuadratureConfig) -> Result<ObservableResult> {
    let plan = prepare(s, &ThermalPair::zero(), q)?;
    let quantum = plan.window(s.rotation, |w| torque_kernel(s, w, None))?;
    Ok(quantum_only(quantum, 8.0 * HBAR / (PI * s.d.powi(6))))
}

fn heat_doppler_kernel(s: &Scenario, w: f64, thermal: Option<&ThermalPair>) -> f64 {
    let k = Doppler::at(s, w);
    let c = thermal.map_or(-2.0 * k.loss_product(), |t| k.cross(t));
    w * k.k.doppler_weight() * c * k.inv_delta2
}

/// Heat generated in particle 1.
pub fn heat_x(
    s: &Scenario,
    thermal: &ThermalPair,
    q: &QuadratureConfig,
) -> Result<ObservableResult> {
    let plan = prepare(s, thermal, q)?;
    let full = plan.full_line(|w| {
        let (r1, r2, den) = static_transverse(s, w);
        w * thermal_cross(&r1, thermal.t1, &r2, thermal.t2) / den
            + heat_doppler_kernel(s, w, Some(thermal))
    })?;
    let quantum = plan.window(s.rotation, |w| heat_doppler_kernel(s, w, None))?;
    Ok(result(full, quantum, HBAR / (2.0 * PI * s.d.powi(6))))
}

/// Heat generated by quantum friction at T₁ = T₂ = 0.
pub fn heat_x_quantum(s: &Scenario, q: &QuadratureConfig) -> Result<ObservableResult> {
    let plan = prepare(s, &ThermalPair::zero(), q)?;
    let quantum = plan.window(s.rotation, |w| heat_doppler_kernel(s, w, None))?;
    Ok(quantum_only(quantum, HBAR / (2.0 * PI * s.d.powi(6))))
}

fn force_z_doppler(s: &Scenario, w: f64, thermal: Option<&ThermalPair>) -> f64 {
    let k = Doppler::at(s, w);
    let c = thermal.map_or_else(|| k.reactive_quantum(), |t| k.reactive(t));
    3.0 * k.k.doppler_weight() * c * k.inv_delta2
}

/// Force on particle 1 along +ẑ (towards particle 2).
pub fn force_z_x(
    s: &Scenario,
    thermal: &ThermalPair,
    q: &QuadratureConfig,
) -> Result<ObservableResult> {
    let plan = prepare(s, thermal, q)?;
    let full = plan.full_line(|w| {
        let (r1, r2, den) = static_transverse(s, w);
        let stat = 3.0 / den
            * (r1.alpha.re * im_coth(&r2, thermal.t2) + im_coth(&r1, thermal.t1) * r2.alpha.re);
        stat + force_z_doppler(s, w, Some(thermal))
    })?;
    let quantum = plan.window(s.rotation, |w| force_z_doppler(s, w, None))?;
    Ok(result(full, quantum, HBAR / (2.0 * PI * s.d.powi(7))))
}

/// Anomalous-Doppler part of the ẑ force at T₁ = T₂ = 0.
pub fn force_z_x_anomalous(s: &Scenario, q: &QuadratureConfig) -> Result<ObservableResult> {
    let plan = prepare(s, &ThermalPair::zero(), q)?;
    let quantum = plan.window(s.rotation, |w| force_z_doppler(s, w, None))?;
    Ok(quantum_only(quantum, HBAR / (2.0 * PI * s.d.powi(7))))
}

fn force_y_kernel(s: &Scenario, w: f64, thermal: Option<&ThermalPair>) -> f64 {
    let k = Doppler::at(s, w);
    let mixed = k.mixed();
    let (cross, reactive) = match thermal {
        Some(t) => (k.cross(t), k.reactive(t)),
        None => (-2.0 * k.loss_product(), k.reactive_quantum()),
    };
    6.0 * k.inv_delta2 * (3.0 * mixed.re * cross - mixed.im * reactive)
}

/// Lateral force on particle 1 along +ŷ.
pub fn force_y_x(
    s: &Scenario,
    thermal: &ThermalPair,
    q: &QuadratureConfig,
) -> Result<ObservableResult> {
    let plan = prepare(s, thermal, q)?;
    let full = plan.full_line(|w| force_y_kernel(s, w, Some(thermal)))?;
    let quantum = plan.window(s.rotation, |w| force_y_kernel(s, w, None))?;
    Ok(result(full, quantum, HBAR / (PI * s.d.powi(7))))
}

/// Anomalous-Doppler part of the lateral force at T₁ = T₂ = 0.
pub fn force_y_x_anomalous(s: &Scenario, q: &QuadratureConfig) -> Result<ObservableResult> {
    let plan = prepare(s, &ThermalPair::zero(), q)?;
    let quantum = plan.window(s.rotation, |w| force_y_kernel(s, w, None))?;
    Ok(quantum_only(quantum, HBAR / (PI * s.d.powi(7))))
}
