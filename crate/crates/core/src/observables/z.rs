//! Rotation axis along ẑ, the line joining the particles.
//!
//! The rotation leaves the z-polarized channel untouched (coupling
//! 2α/d³, denominator 1 − 4α₁α₂/d⁶) and Doppler-shifts the two circular
//! transverse channels to ω± = ω ± Ω (denominator 1 − α₁(ω)α₂(ω∓Ω)/d⁶).

use num_complex::Complex64;

use crate::constants::HBAR;
use crate::error::Result;
use crate::quadrature::QuadratureConfig;
use crate::scenario::{Axis, ObservableResult, Scenario};
use crate::spectral::ThermalPair;

use super::{im_coth, plan, quantum_only, result, thermal_cross, Plan};

use std::f64::consts::PI;

fn d6(s: &Scenario) -> f64 {
    s.d.powi(6)
}

/// max over the three channel denominators of 1/|D|, reported as the
/// smallest |D| for the pole guard.
fn guard_denominator(s: &Scenario) -> impl Fn(f64) -> f64 + '_ {
    let d6 = d6(s);
    move |w: f64| {
        let a1 = s.p1.polarizability(w);
        let minus = 1.0 - a1 * s.p2.polarizability(w - s.rotation) / d6;
        let plus = 1.0 - a1 * s.p2.polarizability(w + s.rotation) / d6;
        let stat = 1.0 - 4.0 * a1 * s.p2.polarizability(w) / d6;
        minus.norm().min(plus.norm()).min(stat.norm())
    }
}

fn prepare(s: &Scenario, thermal: &ThermalPair, q: &QuadratureConfig) -> Result<Plan> {
    s.require_axis(Axis::Z)?;
    plan(s, thermal, q, guard_denominator(s))
}

fn doppler_denominator(s: &Scenario, a1: Complex64, a2m: Complex64) -> f64 {
    (1.0 - a1 * a2m / d6(s)).norm_sqr()
}

/// Im α₁(ω) Im α₂(ω−Ω) / |1 − α₁α₂(ω−Ω)/d⁶|² on the anomalous-Doppler
/// window (negative, since Im α₂(ω−Ω) < 0 there).
fn window_loss(s: &Scenario, w: f64) -> (f64, f64) {
    let r1 = s.p1.response(w);
    let r2 = s.p2.response(w - s.rotation);
    let den = doppler_denominator(s, r1.alpha, r2.alpha);
    (r1.alpha.im * r2.alpha.im / den, den)
}

/// Frictional torque on particle 1 about ẑ.
pub fn torque_z(
    s: &Scenario,
    thermal: &ThermalPair,
    q: &QuadratureConfig,
) -> Result<ObservableResult> {
    let plan = prepare(s, thermal, q)?;
    let full = plan.full_line(|w| {
        let r1 = s.p1.response(w);
        let r2 = s.p2.response(w - s.rotation);
        thermal_cross(&r1, thermal.t1, &r2, thermal.t2) / doppler_denominator(s, r1.alpha, r2.alpha)
    })?;
    let quantum = plan.window(s.rotation, |w| -2.0 * window_loss(s, w).0)?;
    Ok(result(full, quantum, HBAR / (PI * d6(s))))
}

/// Zero-temperature (quantum friction) torque, −(2ħ/πd⁶)∫₀^Ω Im α₁ Im α₂(ω−Ω)/|D|².
pub fn torque_z_quantum(s: &Scenario, q: &QuadratureConfig) -> Result<ObservableResult> {
    let plan = prepare(s, &ThermalPair::zero(), q)?;
    let quantum = plan.window(s.rotation, |w| -2.0 * window_loss(s, w).0)?;
    Ok(quantum_only(quantum, HBAR / (PI * d6(s))))
}

/// Static-coupling part of the heat into particle 1 (z-polarized channel).
pub fn heat_z_static(
    s: &Scenario,
    thermal: &ThermalPair,
    q: &QuadratureConfig,
) -> Result<ObservableResult> {
    let plan = prepare(s, thermal, q)?;
    let full = plan.full_line(|w| static_heat_integrand(s, thermal, w))?;
    Ok(result(full, zero(), HBAR / (PI * d6(s))))
}

/// Doppler-shifted transverse part of the heat into particle 1.
pub fn heat_z_doppler(
    s: &Scenario,
    thermal: &ThermalPair,
    q: &QuadratureConfig,
) -> Result<ObservableResult> {
    let plan = prepare(s, thermal, q)?;
    let full = plan.full_line(|w| doppler_heat_integrand(s, thermal, w))?;
    let quantum = plan.window(s.rotation, |w| -2.0 * w * window_loss(s, w).0)?;
    Ok(result(full, quantum, HBAR / (PI * d6(s))))
}

fn zero() -> crate::quadrature::IntegralResult {
    crate::quadrature::IntegralResult {
        value: 0.0,
        abs_error: 0.0,
        subdivisions: 0,
        converged: true,
    }
}

fn static_heat_integrand(s: &Scenario, thermal: &ThermalPair, w: f64) -> f64 {
    let r1 = s.p1.response(w);
    let r2 = s.p2.response(w);
    let den = (1.0 - 4.0 * r1.alpha * r2.alpha / d6(s)).norm_sqr();
    2.0 * w * thermal_cross(&r1, thermal.t1, &r2, thermal.t2) / den
}

fn doppler_heat_integrand(s: &Scenario, thermal: &ThermalPair, w: f64) -> f64 {
    let r1 = s.p1.response(w);
    let r2 = s.p2.response(w - s.rotation);
    w * thermal_cross(&r1, thermal.t1, &r2, thermal.t2) / doppler_denominator(s, r1.alpha, r2.alpha)
}

/// Heat generated in particle 1, static plus Doppler channels.
pub fn heat_z(
    s: &Scenario,
    thermal: &ThermalPair,
    q: &QuadratureConfig,
) -> Result<ObservableResult> {
    let plan = prepare(s, thermal, q)?;
    let full = plan.full_line(|w| {
        static_heat_integrand(s, thermal, w) + doppler_heat_integrand(s, thermal, w)
    })?;
    let quantum = plan.window(s.rotation, |w| -2.0 * w * window_loss(s, w).0)?;
    Ok(result(full, quantum, HBAR / (PI * d6(s))))
}

/// Heat generated by quantum friction at T₁ = T₂ = 0; positive for Ω > 0.
pub fn heat_z_quantum(s: &Scenario, q: &QuadratureConfig) -> Result<ObservableResult> {
    let plan = prepare(s, &ThermalPair::zero(), q)?;
    let quantum = plan.window(s.rotation, |w| -2.0 * w * window_loss(s, w).0)?;
    Ok(quantum_only(quantum, HBAR / (PI * d6(s))))
}

fn anomalous_force_integrand(s: &Scenario, w: f64) -> f64 {
    let r1 = s.p1.response(w);
    let r2 = s.p2.response(w - s.rotation);
    let den = doppler_denominator(s, r1.alpha, r2.alpha);
    3.0 * (r1.alpha.im * r2.alpha.re - r1.alpha.re * r2.alpha.im) / den
}

/// Force on particle 1 along +ẑ (positive = towards particle 2).
pub fn force_z(
    s: &Scenario,
    thermal: &ThermalPair,
    q: &QuadratureConfig,
) -> Result<ObservableResult> {
    let plan = prepare(s, thermal, q)?;
    let (t1, t2) = (thermal.t1, thermal.t2);
    let full = plan.full_line(|w| {
        let r1 = s.p1.response(w);
        let r2 = s.p2.response(w);
        let r2m = s.p2.response(w - s.rotation);
        let stat = 6.0 / (1.0 - 4.0 * r1.alpha * r2.alpha / d6(s)).norm_sqr()
            * (im_coth(&r1, t1) * r2.alpha.re + r1.alpha.re * im_coth(&r2, t2));
        let doppler = 3.0 / doppler_denominator(s, r1.alpha, r2m.alpha)
            * (r1.alpha.re * im_coth(&r2m, t2) + im_coth(&r1, t1) * r2m.alpha.re);
        stat + doppler
    })?;
    let quantum = plan.window(s.rotation, |w| anomalous_force_integrand(s, w))?;
    Ok(result(full, quantum, HBAR / (PI * s.d.powi(7))))
}

/// Anomalous-Doppler contribution to the ẑ force at T₁ = T₂ = 0.
pub fn force_z_anomalous(s: &Scenario, q: &QuadratureConfig) -> Result<ObservableResult> {
    let plan = prepare(s, &ThermalPair::zero(), q)?;
    let quantum = plan.window(s.rotation, |w| anomalous_force_integrand(s, w))?;
    Ok(quantum_only(quantum, HBAR / (PI * s.d.powi(7))))
}

/// Photon emission rate 4 Im α₁(ω) Im α₂(ω−Ω)/d⁶ / |1 − α₁α₂(ω−Ω)/d⁶|².
///
/// Non-negative on 0 < ω < Ω; `+∞` at an exact pole.
pub fn emission_rate_exact(s: &Scenario, omega: f64) -> f64 {
    let (loss, den) = window_loss(s, omega);
    if den == 0.0 {
        return f64::INFINITY;
    }
    // Im α₂(ω−Ω) < 0 inside the window.
    -4.0 * loss / d6(s)
}
