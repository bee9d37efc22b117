//! Dielectric and polarizability models for the particle materials.
//!
//! A single Lorentz oscillator describes the optical phonon of a polar
//! dielectric:
//!
//! ```text
//! ε(ω) = ε∞ (1 + (ω_L² − ω_T²) / (ω_T² − ω² − iΓω))
//! ```
//!
//! A sphere of radius R has the quasi-static polarizability
//! `α = R³ (ε − 1) / (ε + 2)`, which resonates at the surface-polariton
//! frequency ω₀ where Re ε(ω₀) = −2. Close to ω₀ the polarizability is
//! well described by a single Lorentzian line, see [`PolaritonResonance`].

use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::roots::brent;

/// Relative offset of the upper root bracket from ω_L.
const BRACKET_OFFSET: f64 = 1e-6;
/// Relative tolerance of the polariton-frequency root.
const ROOT_REL_TOL: f64 = 1e-10;

/// Lorentz-oscillator dielectric model, all frequencies in rad/s.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscillatorMaterial {
    pub eps_inf: f64,
    pub omega_l: f64,
    pub omega_t: f64,
    /// Oscillator damping Γ (not the polariton linewidth).
    pub gamma: f64,
}

impl OscillatorMaterial {
    /// Validating constructor.
    ///
    /// `omega_l == omega_t` is accepted: it describes a material without an
    /// oscillator, which together with `eps_inf = 1` is the vacuum.
    pub fn new(eps_inf: f64, omega_l: f64, omega_t: f64, gamma: f64) -> Result<Self> {
        let finite = [eps_inf, omega_l, omega_t, gamma]
            .iter()
            .all(|v| v.is_finite());
        if !finite {
            return Err(Error::InvalidParameter(
                "material parameters must be finite".into(),
            ));
        }
        if eps_inf < 1.0 {
            return Err(Error::InvalidParameter(format!(
                "eps_inf must be >= 1, got {eps_inf}"
            )));
        }
        if omega_t <= 0.0 || omega_l < omega_t {
            return Err(Error::InvalidParameter(format!(
                "require 0 < omega_T <= omega_L, got omega_T = {omega_t:e}, omega_L = {omega_l:e}"
            )));
        }
        if gamma <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "gamma must be > 0, got {gamma:e}"
            )));
        }
        Ok(Self {
            eps_inf,
            omega_l,
            omega_t,
            gamma,
        })
    }

    /// Silicon carbide: ε∞ = 6.7, ω_L = 1.8·10¹⁴ s⁻¹, ω_T = 1.49·10¹⁴ s⁻¹,
    /// Γ = 8.9·10¹¹ s⁻¹.
    pub fn sic() -> Self {
        Self {
            eps_inf: 6.7,
            omega_l: 1.8e14,
            omega_t: 1.49e14,
            gamma: 8.9e11,
        }
    }

    /// ε = 1 at all frequencies.
    pub fn vacuum() -> Self {
        Self {
            eps_inf: 1.0,
            omega_l: 1.0e14,
            omega_t: 1.0e14,
            gamma: 1.0e12,
        }
    }

    pub const PRESETS: &'static [&'static str] = &["SiC", "vacuum"];

    /// Looks up a built-in material by (case-insensitive) name.
    pub fn preset(name: &str) -> Option<Self> {
        match name.to_ascii_lowercase().as_str() {
            "sic" => Some(Self::sic()),
            "vacuum" => Some(Self::vacuum()),
            _ => None,
        }
    }

    /// Parses a `key = value` material description.
    ///
    /// Recognized keys are `eps_inf`, `omega_L`, `omega_T` and `gamma`.
    /// Blank lines and `#` comments are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut eps_inf = None;
        let mut omega_l = None;
        let mut omega_t = None;
        let mut gamma = None;
        let mut last_line = 0;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            last_line = line_no;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| Error::Parse {
                line: line_no,
                message: format!("expected key=value, got '{line}'"),
            })?;
            let value: f64 = value.trim().parse().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("invalid number '{}'", value.trim()),
            })?;
            let slot = match key.trim() {
                "eps_inf" => &mut eps_inf,
                "omega_L" | "omega_l" => &mut omega_l,
                "omega_T" | "omega_t" => &mut omega_t,
                "gamma" => &mut gamma,
                other => {
                    return Err(Error::Parse {
                        line: line_no,
                        message: format!("unknown key '{other}'"),
                    })
                }
            };
            *slot = Some(value);
        }
        let missing = |name: &str| Error::Parse {
            line: last_line,
            message: format!("missing key '{name}'"),
        };
        let material = Self::new(
            eps_inf.ok_or_else(|| missing("eps_inf"))?,
            omega_l.ok_or_else(|| missing("omega_L"))?,
            omega_t.ok_or_else(|| missing("omega_T"))?,
            gamma.ok_or_else(|| missing("gamma"))?,
        );
        material.map_err(|e| Error::Parse {
            line: last_line,
            message: e.to_string(),
        })
    }

    /// Oscillator denominator ω_T² − ω² − iΓω for ω ≥ 0.
    fn denominator(&self, omega: f64) -> Complex64 {
        Complex64::new(
            self.omega_t * self.omega_t - omega * omega,
            -self.gamma * omega,
        )
    }

    fn strength(&self) -> f64 {
        self.omega_l * self.omega_l - self.omega_t * self.omega_t
    }

    /// Complex dielectric function; negative frequencies use ε(−ω) = ε*(ω).
    pub fn dielectric(&self, omega: f64) -> Complex64 {
        let w = omega.abs();
        let eps = self.eps_inf * (1.0 + self.strength() / self.denominator(w));
        if omega < 0.0 {
            eps.conj()
        } else {
            eps
        }
    }

    /// Im ε(ω) / ω, an even function of ω that stays finite at ω = 0.
    pub fn loss_rate(&self, omega: f64) -> f64 {
        self.eps_inf * self.strength() * self.gamma / self.denominator(omega.abs()).norm_sqr()
    }

    /// Closed-form dε′/dω.
    pub fn dielectric_re_slope(&self, omega: f64) -> f64 {
        let w = omega.abs();
        let den = self.denominator(w);
        let d = self.eps_inf * self.strength() * Complex64::new(2.0 * w, self.gamma) / (den * den);
        // Re ε is even in ω, so its slope is odd.
        if omega < 0.0 {
            -d.re
        } else {
            d.re
        }
    }
}

impl fmt::Display for OscillatorMaterial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "eps_inf={} omega_L={:e} omega_T={:e} gamma={:e}",
            self.eps_inf, self.omega_l, self.omega_t, self.gamma
        )
    }
}

/// Free function form of [`OscillatorMaterial::dielectric`].
pub fn dielectric(material: &OscillatorMaterial, omega: f64) -> Complex64 {
    material.dielectric(omega)
}

/// Solves Re ε(ω₀) = −2 inside the reststrahlen band.
///
/// With damping, Re ε rises back above −2 just above ω_T, so the lower
/// end of the bracket is the minimum of Re ε, ω_m² = ω_T² + Γω_m.
pub fn polariton_frequency(material: &OscillatorMaterial) -> Result<f64> {
    let g = material.gamma;
    let wt = material.omega_t;
    let lower = 0.5 * (g + (g * g + 4.0 * wt * wt).sqrt());
    let upper = material.omega_l * (1.0 - BRACKET_OFFSET);
    let no_root = Error::NoRoot { lower, upper };
    if !(lower < upper) {
        return Err(no_root);
    }
    let f = |w: f64| material.dielectric(w).re + 2.0;
    let (fl, fu) = (f(lower), f(upper));
    if !(fl < 0.0 && fu > 0.0) {
        return Err(no_root);
    }
    brent(f, lower, upper, ROOT_REL_TOL * upper, 200).ok_or(no_root)
}

/// Lorentzian description of the polarizability near ω₀:
/// `α ≈ −R³ a / (ω − ω₀ + iΓ_res)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolaritonResonance {
    pub omega0: f64,
    /// Oscillator strength a = 3 / (dε′/dω)|ω₀.
    pub a: f64,
    /// Polariton linewidth Γ_res = Im ε(ω₀) / (dε′/dω)|ω₀.
    pub gamma_res: f64,
}

impl PolaritonResonance {
    /// Lorentzian polarizability of a sphere of radius `radius`.
    ///
    /// Negative frequencies use α(−ω) = α*(ω), which reproduces the
    /// anti-resonant form `−R³ a / (−ω − ω₀ − iΓ_res)`.
    pub fn polarizability(&self, radius: f64, omega: f64) -> Complex64 {
        let r3 = radius.powi(3);
        let w = omega.abs();
        let alpha = -r3 * self.a / Complex64::new(w - self.omega0, self.gamma_res);
        if omega < 0.0 {
            alpha.conj()
        } else {
            alpha
        }
    }
}

pub fn resonance_params(material: &OscillatorMaterial) -> Result<PolaritonResonance> {
    let omega0 = polariton_frequency(material)?;
    let slope = material.dielectric_re_slope(omega0);
    let eps2 = material.dielectric(omega0).im;
    Ok(PolaritonResonance {
        omega0,
        a: 3.0 / slope,
        gamma_res: eps2 / slope,
    })
}

pub fn lorentzian_polarizability(res: &PolaritonResonance, radius: f64, omega: f64) -> Complex64 {
    res.polarizability(radius, omega)
}

/// Polarizability together with Im α / ω, evaluated from one ε(ω).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Response {
    pub omega: f64,
    pub alpha: Complex64,
    /// Im α(ω) / ω; even in ω and finite at ω = 0.
    pub loss_rate: f64,
}

/// A homogeneous sphere.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Particle {
    pub material: OscillatorMaterial,
    /// Radius R in meters.
    pub radius: f64,
    /// Temperature in kelvin.
    pub temperature: f64,
}

impl Particle {
    pub fn new(material: OscillatorMaterial, radius: f64, temperature: f64) -> Result<Self> {
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "radius must be > 0, got {radius:e}"
            )));
        }
        if !(temperature >= 0.0 && temperature.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "temperature must be >= 0, got {temperature}"
            )));
        }
        Ok(Self {
            material,
            radius,
            temperature,
        })
    }

    pub fn volume_scale(&self) -> f64 {
        self.radius.powi(3)
    }

    pub fn polarizability(&self, omega: f64) -> Complex64 {
        self.response(omega).alpha
    }

    /// Like [`Particle::polarizability`] but reports ε(ω) = −2 as a pole.
    pub fn try_polarizability(&self, omega: f64) -> Result<Complex64> {
        let eps = self.material.dielectric(omega);
        if eps + 2.0 == Complex64::new(0.0, 0.0) {
            return Err(Error::Pole { omega });
        }
        Ok(self.volume_scale() * (eps - 1.0) / (eps + 2.0))
    }

    pub fn response(&self, omega: f64) -> Response {
        let eps = self.material.dielectric(omega);
        let r3 = self.volume_scale();
        let shifted = eps + 2.0;
        // Im[(ε−1)/(ε+2)] = 3 Im ε / |ε+2|²
        let loss_rate = 3.0 * r3 * self.material.loss_rate(omega) / shifted.norm_sqr();
        Response {
            omega,
            alpha: r3 * (eps - 1.0) / shifted,
            loss_rate,
        }
    }
}

pub fn polarizability(particle: &Particle, omega: f64) -> Complex64 {
    particle.polarizability(omega)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn sic_near_surface_polariton() {
        let eps = OscillatorMaterial::sic().dielectric(1.73e14);
        assert!((eps.re + 2.0).abs() < 0.15, "{eps}");
        // Direct evaluation of the oscillator model.
        assert!((eps.im - 0.1761).abs() < 5e-4, "{eps}");
    }

    #[test]
    fn static_limit_is_real() {
        let m = OscillatorMaterial::sic();
        let eps = m.dielectric(0.0);
        assert_eq!(eps.im, 0.0);
        let expected = m.eps_inf * m.omega_l.powi(2) / m.omega_t.powi(2);
        assert!(rel(eps.re, expected) < 1e-14);
    }

    #[test]
    fn conductor_limit() {
        let m = OscillatorMaterial::new(1e12, 1.8e14, 1.49e14, 8.9e11).unwrap();
        let p = Particle::new(m, 1e-9, 0.0).unwrap();
        let alpha = p.polarizability(3e13);
        assert!(rel(alpha.re, 1e-27) < 1e-9);
        assert!(alpha.im.abs() < 1e-36);
    }

    #[test]
    fn static_polarizability_is_real() {
        let p = Particle::new(OscillatorMaterial::sic(), 0.5e-9, 0.0).unwrap();
        let eps0 = p.material.dielectric(0.0).re;
        let alpha = p.polarizability(0.0);
        assert_eq!(alpha.im, 0.0);
        assert!(rel(alpha.re, p.volume_scale() * (eps0 - 1.0) / (eps0 + 2.0)) < 1e-14);
        assert_eq!(p.try_polarizability(0.0).unwrap(), alpha);
    }

    #[test]
    fn sic_polariton_frequency() {
        let w0 = polariton_frequency(&OscillatorMaterial::sic()).unwrap();
        assert!(rel(w0, 1.73e14) < 5e-3, "{w0:e}");
        assert!((OscillatorMaterial::sic().dielectric(w0).re + 2.0).abs() < 1e-8);
    }

    #[test]
    fn vanishing_oscillator_has_no_root() {
        let m = OscillatorMaterial::new(6.7, 1.49e14 * (1.0 + 1e-9), 1.49e14, 8.9e11).unwrap();
        assert!(matches!(polariton_frequency(&m), Err(Error::NoRoot { .. })));
        assert!(matches!(
            polariton_frequency(&OscillatorMaterial::vacuum()),
            Err(Error::NoRoot { .. })
        ));
    }

    #[test]
    fn polariton_frequency_barely_depends_on_damping() {
        let m = OscillatorMaterial::sic();
        let doubled = OscillatorMaterial {
            gamma: 2.0 * m.gamma,
            ..m
        };
        let w1 = polariton_frequency(&m).unwrap();
        let w2 = polariton_frequency(&doubled).unwrap();
        assert!(rel(w2, w1) < 1e-3);
    }

    #[test]
    fn slope_matches_finite_differences() {
        let m = OscillatorMaterial::sic();
        for &w in &[5e13_f64, 1.6e14, 1.7336e14, 2.5e14, -1.7e14] {
            let h = 1e-6 * w.abs();
            let fd = (m.dielectric(w + h).re - m.dielectric(w - h).re) / (2.0 * h);
            assert!(rel(m.dielectric_re_slope(w), fd) < 1e-6, "ω = {w:e}");
        }
    }

    #[test]
    fn sic_resonance_parameters() {
        let m = OscillatorMaterial::sic();
        let res = resonance_params(&m).unwrap();
        let eps2 = m.dielectric(res.omega0).im;
        assert!(rel(res.a / res.gamma_res, 3.0 / eps2) < 1e-12);
        // Im ε(ω₀) = 0.17096 for the exact root, so a/Γ_res = 17.55.
        assert!((res.a / res.gamma_res - 17.55).abs() < 0.02);
        assert!(res.a > 0.0 && res.gamma_res > 0.0);
    }

    #[test]
    fn damping_scales_linewidth_only() {
        let m = OscillatorMaterial::sic();
        let doubled = OscillatorMaterial {
            gamma: 2.0 * m.gamma,
            ..m
        };
        let r1 = resonance_params(&m).unwrap();
        let r2 = resonance_params(&doubled).unwrap();
        // ω₀ itself moves slightly with Γ.
        assert!(rel(r2.gamma_res, 2.0 * r1.gamma_res) < 5e-3);
        assert!(rel(r2.a, r1.a) < 2e-3);
    }

    #[test]
    fn lorentzian_line_center_and_half_width() {
        let res = resonance_params(&OscillatorMaterial::sic()).unwrap();
        let r = 0.5e-9_f64;
        let r3 = r.powi(3);
        let center = res.polarizability(r, res.omega0);
        assert_eq!(center.re, 0.0);
        assert!(rel(center.im, r3 * res.a / res.gamma_res) < 1e-14);
        let half = res.polarizability(r, res.omega0 + res.gamma_res);
        assert!(rel(half.norm(), r3 * res.a / (res.gamma_res * 2f64.sqrt())) < 1e-12);
        // Anti-resonant branch
        let anti = lorentzian_polarizability(&res, r, -res.omega0 - 0.3 * res.gamma_res);
        let expected = -r3 * res.a
            / Complex64::new(
                res.omega0 + 0.3 * res.gamma_res - res.omega0,
                -res.gamma_res,
            );
        assert!((anti - expected).norm() < 1e-12 * expected.norm());
    }

    #[test]
    fn lorentzian_tracks_exact_polarizability() {
        let m = OscillatorMaterial::sic();
        let res = resonance_params(&m).unwrap();
        let p = Particle::new(m, 0.5e-9, 0.0).unwrap();
        let exact = p.polarizability(res.omega0).norm();
        let lorentz = p.volume_scale() * res.a / res.gamma_res;
        assert!(rel(lorentz, exact) < 0.05);
        for k in [-2.0, 2.0] {
            let w = res.omega0 + k * res.gamma_res;
            let e = p.polarizability(w);
            let l = res.polarizability(p.radius, w);
            assert!((e - l).norm() / e.norm() < 0.12, "k = {k}");
        }
    }

    #[test]
    fn loss_rate_consistent_with_polarizability() {
        let p = Particle::new(OscillatorMaterial::sic(), 1e-9, 0.0).unwrap();
        for &w in &[1e12, 1.6e14, -1.7e14, 4e14] {
            let r = p.response(w);
            assert!(rel(r.loss_rate * w, r.alpha.im) < 1e-12);
        }
        assert!(p.response(0.0).loss_rate > 0.0);
    }

    #[test]
    fn parse_material_file() {
        let text = "# SiC\neps_inf = 6.7\nomega_L=1.8e14\nomega_T = 1.49e14 # transverse\n\ngamma=8.9e11\n";
        assert_eq!(
            OscillatorMaterial::parse(text).unwrap(),
            OscillatorMaterial::sic()
        );
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = OscillatorMaterial::parse("eps_inf=6.7\nomega_L 1.8e14\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        let err = OscillatorMaterial::parse("eps_inf=6.7\nfoo=1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = OscillatorMaterial::parse("eps_inf=abc\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        let err = OscillatorMaterial::parse("eps_inf=6.7\n").unwrap_err();
        assert!(err.to_string().contains("missing key"));
    }

    #[test]
    fn presets() {
        assert_eq!(
            OscillatorMaterial::preset("sic"),
            Some(OscillatorMaterial::sic())
        );
        assert!(OscillatorMaterial::preset("InSb").is_none());
    }

    fn material() -> impl Strategy<Value = OscillatorMaterial> {
        (1.0f64..15.0, 1e13f64..1e15, 1.01f64..2.0, 1e-4f64..1e-1).prop_map(
            |(eps_inf, wt, ratio, damping)| {
                OscillatorMaterial::new(eps_inf, wt * ratio, wt, damping * wt).unwrap()
            },
        )
    }

    proptest! {
        #[test]
        fn passivity(m in material(), x in 1e-3f64..10.0, r in 1e-10f64..1e-7) {
            let w = x * m.omega_t;
            prop_assert!(m.dielectric(w).im > 0.0);
            let p = Particle::new(m, r, 0.0).unwrap();
            let a = p.polarizability(w);
            prop_assert!(a.im > 0.0);
            let neg = p.polarizability(-w);
            prop_assert_eq!(neg.im, -a.im);
            prop_assert_eq!(neg.re, a.re);
        }

        #[test]
        fn conjugate_symmetry(m in material(), x in 1e-3f64..10.0) {
            let w = x * m.omega_t;
            prop_assert_eq!(m.dielectric(-w), m.dielectric(w).conj());
        }

        #[test]
        fn resonance_consistency(m in material()) {
            if let Ok(res) = resonance_params(&m) {
                prop_assert!(res.omega0 > m.omega_t && res.omega0 < m.omega_l);
                let ratio = res.a / res.gamma_res;
                let expected = 3.0 / m.dielectric(res.omega0).im;
                prop_assert!(((ratio - expected) / expected).abs() < 1e-3);
                prop_assert!(res.a > 0.0 && res.gamma_res > 0.0);
            }
        }
    }
}
