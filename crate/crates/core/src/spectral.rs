//! Occupation factors of the fluctuation-dissipation theorem and Doppler
//! frequency bookkeeping.

use crate::constants::{HBAR, K_B};
use crate::error::{Error, Result};

/// Below this |ħω/2k_BT| the coth is replaced by its Laurent series.
const SERIES_CROSSOVER: f64 = 1e-3;

/// Temperatures of particle 1 (static) and particle 2 (rotating), in kelvin.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ThermalPair {
    pub t1: f64,
    pub t2: f64,
}

impl ThermalPair {
    pub fn new(t1: f64, t2: f64) -> Result<Self> {
        if !(t1 >= 0.0 && t2 >= 0.0 && t1.is_finite() && t2.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "temperatures must be finite and >= 0, got T1 = {t1}, T2 = {t2}"
            )));
        }
        Ok(Self { t1, t2 })
    }

    pub const fn zero() -> Self {
        Self { t1: 0.0, t2: 0.0 }
    }

    pub fn max(&self) -> f64 {
        self.t1.max(self.t2)
    }
}

/// Lab-frame frequency ω together with the rotating-frame frequencies
/// ω± = ω ± Ω.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DopplerFrame {
    pub omega: f64,
    pub rotation: f64,
    pub omega_minus: f64,
    pub omega_plus: f64,
}

impl DopplerFrame {
    pub fn new(omega: f64, rotation: f64) -> Self {
        Self {
            omega,
            rotation,
            omega_minus: omega - rotation,
            omega_plus: omega + rotation,
        }
    }
}

fn half_ratio(omega: f64, temperature: f64) -> f64 {
    HBAR * omega / (2.0 * K_B * temperature)
}

fn coth(x: f64) -> f64 {
    if x.abs() < SERIES_CROSSOVER {
        1.0 / x + x / 3.0
    } else {
        1.0 / x.tanh()
    }
}

/// coth(ħω / 2k_BT).
///
/// At T = 0 this is sign(ω). For T > 0 the point ω = 0 is a pole and is
/// reported as [`Error::Pole`]; use [`coth_difference`] or
/// [`omega_coth`] there.
pub fn coth_factor(omega: f64, temperature: f64) -> Result<f64> {
    if temperature == 0.0 {
        return Ok(sign(omega));
    }
    if omega == 0.0 {
        return Err(Error::Pole { omega });
    }
    Ok(coth(half_ratio(omega, temperature)))
}

fn sign(x: f64) -> f64 {
    if x > 0.0 {
        1.0
    } else if x < 0.0 {
        -1.0
    } else {
        0.0
    }
}

/// coth(ħω_a/2k_BT_a) − coth(ħω_b/2k_BT_b).
///
/// Identical arguments cancel exactly, including at ω = 0. A lone pole
/// (ω = 0 with T > 0 on one side only) contributes its principal value 0.
pub fn coth_difference(omega_a: f64, t_a: f64, omega_b: f64, t_b: f64) -> f64 {
    if omega_a == omega_b && t_a == t_b {
        return 0.0;
    }
    let (sa, sb) = (sign(omega_a), sign(omega_b));
    if sa != 0.0 && sa == sb {
        // coth|x| = 1 + 2n, so the unit parts cancel exactly.
        return sa * (coth_excess(omega_a, t_a) - coth_excess(omega_b, t_b));
    }
    let a = coth_factor(omega_a, t_a).unwrap_or(0.0);
    let b = coth_factor(omega_b, t_b).unwrap_or(0.0);
    a - b
}

/// coth(ħ|ω|/2k_BT) − 1 for ω ≠ 0.
fn coth_excess(omega: f64, temperature: f64) -> f64 {
    if temperature == 0.0 {
        return 0.0;
    }
    let x = half_ratio(omega, temperature).abs();
    if x < SERIES_CROSSOVER {
        coth(x) - 1.0
    } else {
        2.0 / (2.0 * x).exp_m1()
    }
}

/// ω·coth(ħω/2k_BT), finite everywhere: 2k_BT/ħ at ω = 0 and |ω| at T = 0.
pub fn omega_coth(omega: f64, temperature: f64) -> f64 {
    if temperature == 0.0 {
        return omega.abs();
    }
    let x = half_ratio(omega, temperature);
    let thermal = 2.0 * K_B * temperature / HBAR;
    if x.abs() < SERIES_CROSSOVER {
        thermal * (1.0 + x * x / 3.0)
    } else {
        omega / x.tanh()
    }
}

/// Bose-Einstein occupation [exp(ħω/k_BT) − 1]⁻¹ for ω > 0.
pub fn bose(omega: f64, temperature: f64) -> Result<f64> {
    if !(omega > 0.0) {
        return Err(Error::Domain(format!(
            "Bose factor needs omega > 0, got {omega:e}"
        )));
    }
    if temperature == 0.0 {
        return Ok(0.0);
    }
    Ok(1.0 / (HBAR * omega / (K_B * temperature)).exp_m1())
}
