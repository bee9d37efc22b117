//! Torque, heat generation and forces for the two rotation-axis
//! configurations.
//!
//! Every observable is a frequency integral over the whole real line. The
//! negative half is folded onto ω > 0 with α(−ω) = α*(ω) and the oddness of
//! coth, the range is cut at ω_max and the remaining tail is integrated
//! after the substitution ω = ω_max/u. The zero-temperature
//! anomalous-Doppler contribution lives on 0 < ω < Ω and is returned
//! alongside as [`ObservableResult::quantum_part`].
//!
//! Sign conventions: torques are positive along the rotation axis
//! (+ẑ or +x̂), forces on particle 1 are positive along +ẑ (towards
//! particle 2, i.e. attraction) and along +ŷ.

pub mod x;
pub mod z;

pub use x::{
    coupling_factors, force_y_x, force_y_x_anomalous, force_z_x, force_z_x_anomalous, heat_x,
    heat_x_quantum, torque_x, torque_x_quantum, CouplingFactors,
};
pub use z::{
    emission_rate_exact, force_z, force_z_anomalous, heat_z, heat_z_doppler, heat_z_quantum,
    heat_z_static, torque_z, torque_z_quantum,
};

use crate::constants::{HBAR, K_B};
use crate::error::{Error, Result};
use crate::materials::{resonance_params, Response};
use crate::quadrature::{
    integrate, integrate_to_infinity, IntegralResult, PoleHint, QuadratureConfig,
};
use crate::roots::golden_min;
use crate::scenario::{ObservableResult, Scenario};
use crate::spectral::{coth_difference, omega_coth, ThermalPair};

/// Number of points in the coarse denominator scan.
pub const GUARD_GRID_POINTS: usize = 2048;

/// Im α₁ Im α₂ [coth(ħω₂/2k_BT₂) − coth(ħω₁/2k_BT₁)], finite at ω = 0.
pub(crate) fn thermal_cross(r1: &Response, t1: f64, r2: &Response, t2: f64) -> f64 {
    if r1.omega != 0.0 && r2.omega != 0.0 {
        r1.alpha.im * r2.alpha.im * coth_difference(r2.omega, t2, r1.omega, t1)
    } else {
        r1.alpha.im * im_coth(r2, t2) - r2.alpha.im * im_coth(r1, t1)
    }
}

/// Im α(ω)·coth(ħω/2k_BT), finite at ω = 0.
pub(crate) fn im_coth(r: &Response, t: f64) -> f64 {
    r.loss_rate * omega_coth(r.omega, t)
}

/// Upper frequency of the explicitly resolved range; beyond it only the
/// non-resonant ω⁻³ tails of Im α remain.
pub fn omega_max(s: &Scenario, thermal: &ThermalPair) -> f64 {
    let wl = s.p1.material.omega_l.max(s.p2.material.omega_l);
    (s.rotation + 5.0 * wl).max(20.0 * K_B * thermal.max() / HBAR)
}

/// Peaks of the folded integrand: α₁ at ω₁, α₂(ω ∓ Ω) at |Ω ± ω₂|, the
/// static channel at ω₂, and the kink at ω = Ω.
pub fn resonance_hints(s: &Scenario) -> Vec<PoleHint> {
    let mut hints = Vec::new();
    let omega = s.rotation;
    if omega > 0.0 {
        hints.push(PoleHint::new(omega, 0.0));
    }
    let r1 = resonance_params(&s.p1.material).ok();
    let r2 = resonance_params(&s.p2.material).ok();
    if let Some(r) = r1 {
        hints.push(PoleHint::new(r.omega0, r.gamma_res));
    }
    if let Some(r) = r2 {
        for c in [r.omega0, omega + r.omega0, (omega - r.omega0).abs()] {
            hints.push(PoleHint::new(c, r.gamma_res));
        }
    }
    if let (Some(a), Some(b)) = (r1, r2) {
        // Center of the anomalous-Doppler emission line.
        let wc = (a.gamma_res * (omega - b.omega0) + b.gamma_res * a.omega0)
            / (a.gamma_res + b.gamma_res);
        hints.push(PoleHint::new(wc, a.gamma_res.min(b.gamma_res)));
    }
    hints.retain(|h| h.center > 0.0 && h.center.is_finite());
    hints
}

fn min_width(hints: &[PoleHint]) -> Option<f64> {
    hints
        .iter()
        .map(|h| h.width)
        .filter(|w| *w > 0.0)
        .min_by(f64::total_cmp)
}

/// Smallest value of `denominator` on [0, upper]: coarse scan plus golden
/// refinement around the grid minimum and every hint.
pub(crate) fn scan_minimum<F: Fn(f64) -> f64>(
    denominator: F,
    upper: f64,
    hints: &[PoleHint],
) -> (f64, f64) {
    let n = GUARD_GRID_POINTS;
    let step = upper / (n - 1) as f64;
    let mut best = (f64::INFINITY, 0.0);
    let mut grid_best = (f64::INFINITY, 0.0);
    for i in 0..n {
        let w = i as f64 * step;
        let v = denominator(w);
        if v < grid_best.0 {
            grid_best = (v, w);
        }
    }
    let mut candidates = vec![(grid_best.1, step)];
    let narrow = min_width(hints).unwrap_or(step).min(step);
    for h in hints {
        let reach = if h.width > 0.0 { 5.0 * h.width } else { narrow };
        candidates.push((h.center, reach));
    }
    for (center, reach) in candidates {
        let lo = (center - reach).max(0.0);
        let hi = (center + reach).min(upper);
        if !(lo < hi) {
            continue;
        }
        let tol = (hi - lo) * 1e-10;
        let (w, v) = golden_min(&denominator, lo, hi, tol);
        if v < best.0 {
            best = (v, w);
        }
        let v_center = denominator(center.clamp(lo, hi));
        if v_center < best.0 {
            best = (v_center, center.clamp(lo, hi));
        }
    }
    if grid_best.0 < best.0 {
        best = grid_best;
    }
    best
}

/// Shared preparation for one observable evaluation.
pub(crate) struct Plan {
    pub omega_max: f64,
    pub cfg: QuadratureConfig,
    pub window_cfg: QuadratureConfig,
}

/// Builds the integration plan and applies the pole guard.
///
/// `denominator` must return the normalized coupling denominator
/// (1 for uncoupled particles) at lab frequency ω ≥ 0.
pub(crate) fn plan<F: Fn(f64) -> f64>(
    s: &Scenario,
    thermal: &ThermalPair,
    q: &QuadratureConfig,
    denominator: F,
) -> Result<Plan> {
    q.validate()?;
    let omega_max = omega_max(s, thermal);
    let mut hints = resonance_hints(s);
    hints.extend(q.pole_hints.iter().copied());
    let (min_den, at) = scan_minimum(&denominator, omega_max, &hints);
    if min_den < q.pole_guard {
        return Err(Error::SingularScenario {
            min_denominator: min_den,
            omega: at,
            threshold: q.pole_guard,
        });
    }
    // The denominator minimum marks where the integrand peaks.
    if min_den < 0.5 {
        let width = min_width(&hints).unwrap_or(omega_max * 1e-3) * min_den.max(1e-3);
        hints.push(PoleHint::new(at, width));
    }
    let mut cfg = q.clone();
    cfg.pole_hints = hints.clone();
    let mut window_cfg = q.clone();
    window_cfg.pole_hints = hints
        .into_iter()
        .filter(|h| h.center > 0.0 && h.center < s.rotation)
        .collect();
    Ok(Plan {
        omega_max,
        cfg,
        window_cfg,
    })
}

impl Plan {
    /// ∫_{−∞}^{∞} g(ω) dω.
    pub fn full_line<G: Fn(f64) -> f64>(&self, g: G) -> Result<IntegralResult> {
        let folded = |w: f64| g(w) + g(-w);
        let head = integrate(folded, 0.0, self.omega_max, &self.cfg)?;
        // The tail only needs to be accurate relative to the whole integral.
        let mut tail_cfg = self.cfg.clone();
        tail_cfg.abs_tol = tail_cfg.abs_tol.max(tail_cfg.rel_tol * head.value.abs());
        let tail = integrate_to_infinity(folded, self.omega_max, &tail_cfg)?;
        Ok(head.combine(tail))
    }

    /// ∫_0^Ω g(ω) dω.
    pub fn window<G: Fn(f64) -> f64>(&self, rotation: f64, g: G) -> Result<IntegralResult> {
        if rotation == 0.0 {
            return Ok(IntegralResult {
                value: 0.0,
                abs_error: 0.0,
                subdivisions: 0,
                converged: true,
            });
        }
        integrate(g, 0.0, rotation, &self.window_cfg)
    }
}

pub(crate) fn result(
    full: IntegralResult,
    quantum: IntegralResult,
    prefactor: f64,
) -> ObservableResult {
    ObservableResult {
        value: full.value * prefactor,
        abs_error: full.abs_error * prefactor.abs(),
        quantum_part: quantum.value * prefactor,
    }
}

pub(crate) fn quantum_only(quantum: IntegralResult, prefactor: f64) -> ObservableResult {
    ObservableResult {
        value: quantum.value * prefactor,
        abs_error: quantum.abs_error * prefactor.abs(),
        quantum_part: quantum.value * prefactor,
    }
}
