//! Closed-form resonance analysis: critical separations, resonant rotation
//! rates, Lorentzian line shapes and the static reference quantities.

use std::fmt;

use num_complex::Complex64;

use crate::constants::{HBAR, K_B};
use crate::error::{Error, Result};
use crate::materials::{polariton_frequency, resonance_params, Particle, PolaritonResonance};
use crate::roots::{brent, golden_min};
use crate::spectral::{bose, ThermalPair};

/// Threshold on the validity measure of [`heat_quantum_near_resonance`].
pub const NEAR_RESONANCE_WINDOW: f64 = 0.25;

/// Hamaker constant for a SiC-SiC pair, J.
pub const HAMAKER_SIC: f64 = 16.5e-20;

fn identical(p1: &Particle, p2: &Particle) -> bool {
    p1.material == p2.material && p1.radius == p2.radius
}

fn require_identical(p1: &Particle, p2: &Particle) -> Result<()> {
    if identical(p1, p2) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(
            "closed form requires identical particles".into(),
        ))
    }
}

/// d₀ = |α₁(ω₁)α₂(ω₂)|^{1/6} with the exact polarizabilities.
pub fn critical_separation_z(p1: &Particle, p2: &Particle) -> Result<f64> {
    let w1 = polariton_frequency(&p1.material)?;
    let w2 = polariton_frequency(&p2.material)?;
    Ok((p1.polarizability(w1).norm() * p2.polarizability(w2).norm()).powf(1.0 / 6.0))
}

/// The Lorentzian estimate (2.5 |α₁(ω₁)α₂(ω₂)|)^{1/6} for the x̂′ axis.
pub fn critical_separation_x_lorentzian(p1: &Particle, p2: &Particle) -> Result<f64> {
    Ok(2.5f64.powf(1.0 / 6.0) * critical_separation_z(p1, p2)?)
}

/// Roots in v = d⁶ of v²Δ = 2v² − 5(p₊+p₋)v + 8p₊p₋, p± = α₁(ω)α₂(ω±Ω).
fn delta_roots(p1: &Particle, p2: &Particle, omega: f64, rotation: f64) -> [Complex64; 2] {
    let a1 = p1.polarizability(omega);
    let plus = a1 * p2.polarizability(omega + rotation);
    let minus = a1 * p2.polarizability(omega - rotation);
    let s = 5.0 * (plus + minus);
    let disc = (s * s - 64.0 * plus * minus).sqrt();
    let mut r = [(s + disc) / 4.0, (s - disc) / 4.0];
    r.sort_by(|a, b| b.norm().total_cmp(&a.norm()));
    r
}

/// Largest real positive d⁶ at which Δ(ω, Ω) = 0 for some Ω in `range`.
fn largest_real_root(p1: &Particle, p2: &Particle, omega: f64, range: (f64, f64)) -> f64 {
    const N: usize = 400;
    let step = (range.1 - range.0) / N as f64;
    let mut best = f64::NEG_INFINITY;
    for branch in 0..2 {
        let im = |rot: f64| delta_roots(p1, p2, omega, rot)[branch].im;
        let mut prev = (range.0, im(range.0));
        for i in 1..=N {
            let x = range.0 + i as f64 * step;
            let cur = (x, im(x));
            if prev.1.signum() != cur.1.signum() {
                if let Some(rot) = brent(im, prev.0, cur.0, step * 1e-12, 200) {
                    let v = delta_roots(p1, p2, omega, rot)[branch];
                    if v.re > 0.0 && v.im.abs() <= 1e-6 * v.norm() {
                        best = best.max(v.re);
                    }
                }
            }
            prev = cur;
        }
    }
    best
}

/// Largest separation at which the x̂′-axis determinant Δ vanishes on the
/// real (ω, Ω) plane.
///
/// Searched near ω = ω₁, Ω = ω₁ + ω₂, where α₁(ω) and α₂(ω − Ω) resonate.
pub fn critical_separation_x(p1: &Particle, p2: &Particle) -> Result<f64> {
    let r1 = resonance_params(&p1.material)?;
    let r2 = resonance_params(&p2.material)?;
    let width = r1.gamma_res + r2.gamma_res;
    let center = r1.omega0 + r2.omega0;
    let range = (center - 8.0 * width, center + 8.0 * width);
    let g = |w: f64| largest_real_root(p1, p2, w, range);

    const M: usize = 160;
    let (lo, hi) = (
        r1.omega0 - 4.0 * r1.gamma_res,
        r1.omega0 + 4.0 * r1.gamma_res,
    );
    let step = (hi - lo) / M as f64;
    let (mut w_best, mut v_best) = (lo, f64::NEG_INFINITY);
    for i in 0..=M {
        let w = lo + i as f64 * step;
        let v = g(w);
        if v > v_best {
            (w_best, v_best) = (w, v);
        }
    }
    if !v_best.is_finite() {
        return Err(Error::NoRoot {
            lower: lo,
            upper: hi,
        });
    }
    let (_, neg) = golden_min(
        |w| {
            let v = g(w);
            if v.is_finite() {
                -v
            } else {
                0.0
            }
        },
        w_best - step,
        w_best + step,
        step * 1e-6,
    );
    Ok((-neg).max(v_best).powf(1.0 / 6.0))
}

/// Rotation rates at which the emission rate can diverge.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResonantRotations {
    /// Ω₀ = ω₁ + ω₂
    pub omega0: f64,
    /// (Ω⁻, Ω⁺); only for identical particles with d ≤ d₀.
    pub split: Option<(f64, f64)>,
}

/// Ω₀ and, for identical particles below the critical separation,
/// Ω± = 2[ω₀ ± Γ√((a/Γ)²(R/d)⁶ − 1)].
pub fn resonant_omegas(p1: &Particle, p2: &Particle, d: f64) -> Result<ResonantRotations> {
    let r1 = resonance_params(&p1.material)?;
    let r2 = resonance_params(&p2.material)?;
    let omega0 = r1.omega0 + r2.omega0;
    let mut split = None;
    if identical(p1, p2) {
        let x = (r1.a / r1.gamma_res).powi(2) * (p1.radius / d).powi(6) - 1.0;
        if x >= 0.0 {
            let shift = 2.0 * r1.gamma_res * x.sqrt();
            split = Some((omega0 - shift, omega0 + shift));
        }
    }
    Ok(ResonantRotations { omega0, split })
}

/// ω_c = (Γ₁(Ω − ω₂) + Γ₂ω₁)/(Γ₁ + Γ₂).
pub fn emission_center(r1: &PolaritonResonance, r2: &PolaritonResonance, rotation: f64) -> f64 {
    (r1.gamma_res * (rotation - r2.omega0) + r2.gamma_res * r1.omega0)
        / (r1.gamma_res + r2.gamma_res)
}

/// Lorentzian approximation of the photon emission rate on 0 < ω < Ω.
///
/// Returns `+∞` where the approximate denominator vanishes.
pub fn emission_rate_lorentzian(
    p1: &Particle,
    p2: &Particle,
    d: f64,
    rotation: f64,
    omega: f64,
) -> Result<f64> {
    let r1 = resonance_params(&p1.material)?;
    let r2 = resonance_params(&p2.material)?;
    let (g1, g2) = (r1.gamma_res, r2.gamma_res);
    let gs = g1 + g2;
    let coupling = r1.a * r2.a * (p1.radius * p2.radius).powi(3) / d.powi(6);
    let x = omega - emission_center(&r1, &r2, rotation);
    let detune = rotation - (r1.omega0 + r2.omega0);
    let bracket =
        g1 * g2 * (detune / gs).powi(2) - x * x + detune * (g2 - g1) * x / gs + g1 * g2 - coupling;
    let den = (gs * x).powi(2) + bracket * bracket;
    if den == 0.0 {
        return Ok(f64::INFINITY);
    }
    Ok(4.0 * g1 * g2 * coupling / den)
}

/// Static transmission coefficient 4 Im α₁ Im α₂/d⁶ / |1 − α₁α₂/d⁶|².
///
/// Bounded by 1 for identical particles.
pub fn transmission_static(p1: &Particle, p2: &Particle, d: f64, omega: f64) -> f64 {
    let a1 = p1.polarizability(omega);
    let a2 = p2.polarizability(omega);
    let d6 = d.powi(6);
    4.0 * a1.im * a2.im / d6 / (1.0 - a1 * a2 / d6).norm_sqr()
}

fn occupation(omega: f64, t: f64) -> Result<f64> {
    bose(omega, t)
}

/// Resonant static heat flow into particle 1 for identical particles.
///
/// Strong coupling a(R/d)³ > Γ: 6ħω₀Γ(n₂ − n₁); weak coupling:
/// (ħω₀a²/Γ)(R/d)⁶(n₂ − n₁), with n evaluated at ω₀.
pub fn heat_resonant_approx(
    p1: &Particle,
    p2: &Particle,
    d: f64,
    thermal: &ThermalPair,
) -> Result<f64> {
    require_identical(p1, p2)?;
    let r = resonance_params(&p1.material)?;
    let dn = occupation(r.omega0, thermal.t2)? - occupation(r.omega0, thermal.t1)?;
    let split = r.a * (p1.radius / d).powi(3);
    let power = if split > r.gamma_res {
        6.0 * HBAR * r.omega0 * r.gamma_res * dn
    } else {
        HBAR * r.omega0 * r.a * r.a / r.gamma_res * (p1.radius / d).powi(6) * dn
    };
    Ok(power)
}

/// Upper bound (πk_B²/2ħ)(T₂² − T₁²) on the static heat flow.
pub fn heat_max(thermal: &ThermalPair) -> f64 {
    std::f64::consts::PI * K_B * K_B / (2.0 * HBAR) * (thermal.t2.powi(2) - thermal.t1.powi(2))
}

/// Closed-form quantum heat generation near Ω₀ with its validity flag.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NearResonance {
    /// W
    pub value: f64,
    /// ¼|((Ω − Ω₀)/2Γ)² + 1 − (a/Γ)²(R/d)⁶|
    pub window: f64,
    pub in_window: bool,
}

/// P₁Q ≈ (ħω₀/Γ) a²(R/d)⁶ / |((Ω − Ω₀)/2Γ)² + 1 − (a/Γ)²(R/d)⁶|.
pub fn heat_quantum_near_resonance(
    p1: &Particle,
    p2: &Particle,
    d: f64,
    rotation: f64,
) -> Result<NearResonance> {
    require_identical(p1, p2)?;
    let r = resonance_params(&p1.material)?;
    let g = r.gamma_res;
    let s6 = (p1.radius / d).powi(6);
    let x = ((rotation - 2.0 * r.omega0) / (2.0 * g)).powi(2) + 1.0 - (r.a / g).powi(2) * s6;
    let window = 0.25 * x.abs();
    let value = if x == 0.0 {
        f64::INFINITY
    } else {
        HBAR * r.omega0 / g * r.a * r.a * s6 / x.abs()
    };
    Ok(NearResonance {
        value,
        window,
        in_window: window < NEAR_RESONANCE_WINDOW,
    })
}

/// Van der Waals reference force magnitude (32/3)(R/d)⁶ A_H/d.
pub fn vdw_force(radius: f64, d: f64, hamaker: f64) -> Result<f64> {
    if !(radius > 0.0) || !d.is_finite() {
        return Err(Error::Domain(format!(
            "invalid radius {radius} or separation {d}"
        )));
    }
    if d <= 2.0 * radius {
        return Err(Error::Domain(format!(
            "spheres overlap: d = {d} m <= 2R = {} m",
            2.0 * radius
        )));
    }
    Ok(32.0 / 3.0 * (radius / d).powi(6) * hamaker / d)
}

/// Summary of the resonance structure of a particle pair.
#[allow(non_snake_case)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResonanceReport {
    pub omega0_1: f64,
    pub omega0_2: f64,
    /// ε of particle 1 at its polariton frequency.
    pub eps_at_omega0_1: Complex64,
    pub a_1: f64,
    pub gamma_res_1: f64,
    /// Emission-line center at Ω = Ω₀.
    pub omega_c: f64,
    pub Omega0: f64,
    pub Omega_minus: Option<f64>,
    pub Omega_plus: Option<f64>,
    pub d0_z: f64,
    pub d0_x: f64,
    /// Separation used for Ω±, if any.
    pub d: Option<f64>,
}

impl ResonanceReport {
    /// Analyzes the pair; Ω± are only evaluated when `d` is given.
    pub fn new(p1: &Particle, p2: &Particle, d: Option<f64>) -> Result<Self> {
        let r1 = resonance_params(&p1.material)?;
        let r2 = resonance_params(&p2.material)?;
        let split = match d {
            Some(d) => resonant_omegas(p1, p2, d)?.split,
            None => None,
        };
        Ok(ResonanceReport {
            omega0_1: r1.omega0,
            omega0_2: r2.omega0,
            eps_at_omega0_1: p1.material.dielectric(r1.omega0),
            a_1: r1.a,
            gamma_res_1: r1.gamma_res,
            omega_c: emission_center(&r1, &r2, r1.omega0 + r2.omega0),
            Omega0: r1.omega0 + r2.omega0,
            Omega_minus: split.map(|s| s.0),
            Omega_plus: split.map(|s| s.1),
            d0_z: critical_separation_z(p1, p2)?,
            d0_x: critical_separation_x(p1, p2)?,
            d,
        })
    }

    /// Flat (key, value) list; absent values are empty strings.
    pub fn pairs(&self) -> Vec<(&'static str, String)> {
        let opt = |v: Option<f64>| v.map(|x| format!("{x:e}")).unwrap_or_default();
        vec![
            ("omega0_1", format!("{:e}", self.omega0_1)),
            ("omega0_2", format!("{:e}", self.omega0_2)),
            ("eps_re", format!("{:e}", self.eps_at_omega0_1.re)),
            ("eps_im", format!("{:e}", self.eps_at_omega0_1.im)),
            ("a_1", format!("{:e}", self.a_1)),
            ("gamma_res_1", format!("{:e}", self.gamma_res_1)),
            ("omega_c", format!("{:e}", self.omega_c)),
            ("Omega0", format!("{:e}", self.Omega0)),
            ("Omega_minus", opt(self.Omega_minus)),
            ("Omega_plus", opt(self.Omega_plus)),
            ("d0_z", format!("{:e}", self.d0_z)),
            ("d0_x", format!("{:e}", self.d0_x)),
            ("d", opt(self.d)),
        ]
    }
}

impl fmt::Display for ResonanceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.pairs() {
            writeln!(f, "{k}={v}")?;
        }
        Ok(())
    }
}
