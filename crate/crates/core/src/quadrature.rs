//! Adaptive Gauss-Kronrod integration for sharply peaked spectra.
//!
//! The observables integrate products of Lorentzian-like polarizabilities
//! whose peaks are a few 10⁻³ of the integration range wide, and which
//! sharpen further close to the anomalous-Doppler resonance. The
//! integrator therefore seeds its panel list with breakpoints around
//! caller-supplied [`PoleHint`]s and then refines globally, always
//! bisecting the panel with the largest error estimate.
//!
//! [`integrate_oracle`] is an independent uniform trapezoid rule used to
//! cross-check the adaptive route.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};

/// Location (and width) of a peak the integrand is expected to have.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoleHint {
    pub center: f64,
    pub width: f64,
}

impl PoleHint {
    pub fn new(center: f64, width: f64) -> Self {
        Self { center, width }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureConfig {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_subdivisions: usize,
    pub pole_hints: Vec<PoleHint>,
    /// Replace the adaptive rule by the dense trapezoid oracle.
    pub oracle_mode: bool,
    pub oracle_points: usize,
    /// Scenarios whose coupling denominator drops below this value are
    /// rejected as singular by the observables.
    pub pole_guard: f64,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            rel_tol: 1e-8,
            abs_tol: 0.0,
            max_subdivisions: 40_000,
            pole_hints: Vec::new(),
            oracle_mode: false,
            oracle_points: 1_000_000,
            pole_guard: 1e-6,
        }
    }
}

impl QuadratureConfig {
    pub fn oracle(points: usize) -> Self {
        Self {
            oracle_mode: true,
            oracle_points: points,
            ..Self::default()
        }
    }

    pub fn with_hints(&self, hints: impl IntoIterator<Item = PoleHint>) -> Self {
        let mut cfg = self.clone();
        cfg.pole_hints.extend(hints);
        cfg
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0) {
            return Err(Error::InvalidParameter("rel_tol must be > 0".into()));
        }
        if !(self.abs_tol >= 0.0) {
            return Err(Error::InvalidParameter("abs_tol must be >= 0".into()));
        }
        if self
            .pole_hints
            .iter()
            .any(|h| !h.center.is_finite() || !h.width.is_finite())
        {
            return Err(Error::InvalidParameter("pole hints must be finite".into()));
        }
        if self.oracle_mode && self.oracle_points < 2 {
            return Err(Error::InvalidParameter(
                "oracle needs at least 2 points".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegralResult {
    pub value: f64,
    pub abs_error: f64,
    pub subdivisions: usize,
    pub converged: bool,
}

impl IntegralResult {
    fn zero() -> Self {
        Self {
            value: 0.0,
            abs_error: 0.0,
            subdivisions: 0,
            converged: true,
        }
    }

    /// Sum of two independent integrals.
    pub fn combine(self, other: Self) -> Self {
        Self {
            value: self.value + other.value,
            abs_error: self.abs_error + other.abs_error,
            subdivisions: self.subdivisions + other.subdivisions,
            converged: self.converged && other.converged,
        }
    }

    pub fn scale(self, factor: f64) -> Self {
        Self {
            value: self.value * factor,
            abs_error: self.abs_error * factor.abs(),
            ..self
        }
    }
}

// Kronrod abscissae of the 7/15-point pair; odd indices are Gauss nodes.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
    abs_value: f64,
}

impl Panel {
    fn eval<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Self {
        let center = 0.5 * (a + b);
        let half = 0.5 * (b - a);
        let fc = f(center);
        let mut kronrod = fc * WGK[7];
        let mut gauss = fc * WG[3];
        let mut abs_k = kronrod.abs();
        let mut fv = [(0.0, 0.0); 7];
        for j in 0..7 {
            let dx = half * XGK[j];
            let (f1, f2) = (f(center - dx), f(center + dx));
            fv[j] = (f1, f2);
            kronrod += WGK[j] * (f1 + f2);
            abs_k += WGK[j] * (f1.abs() + f2.abs());
            if j % 2 == 1 {
                gauss += WG[j / 2] * (f1 + f2);
            }
        }
        let mean = 0.5 * kronrod;
        let mut asc = WGK[7] * (fc - mean).abs();
        for j in 0..7 {
            asc += WGK[j] * ((fv[j].0 - mean).abs() + (fv[j].1 - mean).abs());
        }
        let value = kronrod * half;
        let abs_value = abs_k * half.abs();
        let asc = asc * half.abs();
        let mut error = ((kronrod - gauss) * half).abs();
        if asc != 0.0 && error != 0.0 {
            error = asc * (200.0 * error / asc).powf(1.5).min(1.0);
        }
        if abs_value > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
            error = error.max(50.0 * f64::EPSILON * abs_value);
        }
        if !value.is_finite() || !error.is_finite() {
            error = f64::INFINITY;
        }
        Self {
            a,
            b,
            value,
            error,
            abs_value,
        }
    }

    fn splittable(&self) -> bool {
        let mid = 0.5 * (self.a + self.b);
        mid > self.a
            && mid < self.b
            && (self.b - self.a) > 1e3 * f64::EPSILON * self.a.abs().max(self.b.abs())
    }
}

struct Ranked(f64, usize);

impl PartialEq for Ranked {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for Ranked {}
impl PartialOrd for Ranked {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Ranked {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .total_cmp(&other.0)
            .then_with(|| other.1.cmp(&self.1))
    }
}

/// Initial breakpoints: the interval ends, every hint center and the
/// points center ± {1, 3, 10}·width that fall inside `(a, b)`.
fn breakpoints(a: f64, b: f64, hints: &[PoleHint]) -> Vec<f64> {
    let mut pts = vec![a, b];
    for h in hints {
        pts.push(h.center);
        if h.width > 0.0 {
            for k in [1.0, 3.0, 10.0] {
                pts.push(h.center - k * h.width);
                pts.push(h.center + k * h.width);
            }
        }
    }
    let span = b - a;
    pts.retain(|&x| x >= a && x <= b);
    pts.sort_by(f64::total_cmp);
    pts.dedup_by(|x, prev| (*x - *prev).abs() <= 1e-13 * span);
    if *pts.last().unwrap() != b {
        let n = pts.len();
        pts[n - 1] = b;
    }
    pts
}

/// Integrates `f` over `[a, b]`.
///
/// Converged means the summed error estimate is below
/// `max(rel_tol·|I|, abs_tol)`, or has reached the floating-point
/// resolution of ∫|f| (integrands that cancel to ~0 cannot do better).
pub fn integrate<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    cfg: &QuadratureConfig,
) -> Result<IntegralResult> {
    cfg.validate()?;
    if a == b {
        return Ok(IntegralResult::zero());
    }
    if !(a < b) {
        return Err(Error::Domain(format!(
            "integration bounds must satisfy a < b, got [{a:e}, {b:e}]"
        )));
    }
    if cfg.oracle_mode {
        return Ok(integrate_oracle(f, a, b, cfg.oracle_points));
    }

    let pts = breakpoints(a, b, &cfg.pole_hints);
    let mut panels: Vec<Panel> = pts
        .windows(2)
        .map(|w| Panel::eval(&f, w[0], w[1]))
        .collect();
    let mut heap: BinaryHeap<Ranked> = panels
        .iter()
        .enumerate()
        .map(|(i, p)| Ranked(p.error, i))
        .collect();
    let mut total: f64 = panels.iter().map(|p| p.value).sum();
    let mut total_err: f64 = panels.iter().map(|p| p.error).sum();
    let mut total_abs: f64 = panels.iter().map(|p| p.abs_value).sum();
    // Error of panels too small to bisect; kept out of the heap.
    let mut frozen_err = 0.0;

    let tolerance = |total: f64, total_abs: f64| {
        (cfg.rel_tol * total.abs())
            .max(cfg.abs_tol)
            .max(100.0 * f64::EPSILON * total_abs)
    };

    let mut iterations = 0usize;
    loop {
        if total_err + frozen_err <= tolerance(total, total_abs) {
            break;
        }
        if panels.len() >= cfg.max_subdivisions {
            let sum = ordered_sum(&panels);
            return Err(Error::QuadratureFailure {
                value: sum.value,
                abs_error: sum.abs_error,
                subdivisions: panels.len(),
            });
        }
        let Some(Ranked(_, idx)) = heap.pop() else {
            break;
        };
        let worst = panels[idx];
        if !worst.splittable() {
            frozen_err += worst.error;
            total_err -= worst.error;
            continue;
        }
        let mid = 0.5 * (worst.a + worst.b);
        let left = Panel::eval(&f, worst.a, mid);
        let right = Panel::eval(&f, mid, worst.b);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        total_abs += left.abs_value + right.abs_value - worst.abs_value;
        panels[idx] = left;
        panels.push(right);
        heap.push(Ranked(left.error, idx));
        heap.push(Ranked(right.error, panels.len() - 1));

        iterations += 1;
        if iterations.is_multiple_of(64) {
            // Limit drift of the running sums.
            total = panels.iter().map(|p| p.value).sum();
            total_err = heap.iter().map(|r| panels[r.1].error).sum();
            total_abs = panels.iter().map(|p| p.abs_value).sum();
        }
    }

    let mut sum = ordered_sum(&panels);
    sum.abs_error += frozen_err;
    if !sum.value.is_finite() {
        return Err(Error::QuadratureFailure {
            value: sum.value,
            abs_error: f64::INFINITY,
            subdivisions: panels.len(),
        });
    }
    Ok(sum)
}

/// Sums panels in order of their left endpoint so the result does not
/// depend on the refinement history.
fn ordered_sum(panels: &[Panel]) -> IntegralResult {
    let mut sorted: Vec<&Panel> = panels.iter().collect();
    sorted.sort_by(|x, y| x.a.total_cmp(&y.a));
    let (value, abs_error) = sorted
        .iter()
        .fold((0.0, 0.0), |(v, e), p| (v + p.value, e + p.error));
    IntegralResult {
        value,
        abs_error,
        subdivisions: panels.len(),
        converged: true,
    }
}

/// ∫_a^∞ f, via ω = a/u on u ∈ (0, 1]. `f` must decay faster than 1/ω.
pub fn integrate_to_infinity<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    cfg: &QuadratureConfig,
) -> Result<IntegralResult> {
    if !(a > 0.0) {
        return Err(Error::Domain(format!(
            "semi-infinite integration needs a > 0, got {a:e}"
        )));
    }
    let mapped = |u: f64| {
        if u <= 0.0 {
            0.0
        } else {
            f(a / u) * a / (u * u)
        }
    };
    let mut tail_cfg = cfg.clone();
    tail_cfg.pole_hints.clear();
    integrate(mapped, 0.0, 1.0, &tail_cfg)
}

/// Uniform trapezoid rule on `n_points` nodes.
///
/// The error estimate is the Richardson difference against the rule on
/// every other node (when `n_points − 1` is even).
pub fn integrate_oracle<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    n_points: usize,
) -> IntegralResult {
    let n = n_points.max(2);
    let intervals = n - 1;
    let h = (b - a) / intervals as f64;
    let mut fine = Neumaier::default();
    let mut coarse = Neumaier::default();
    for i in 0..n {
        let x = if i == intervals { b } else { a + i as f64 * h };
        let weight = if i == 0 || i == intervals { 0.5 } else { 1.0 };
        let fx = f(x);
        fine.add(weight * fx);
        if i % 2 == 0 {
            coarse.add(weight * fx);
        }
    }
    let value = fine.total() * h;
    let abs_error = if intervals.is_multiple_of(2) && intervals >= 2 {
        // endpoints of the coarse grid carry weight 1/2 as well
        let coarse_value = coarse.total() * 2.0 * h;
        (value - coarse_value).abs() / 3.0
    } else {
        0.0
    };
    IntegralResult {
        value,
        abs_error,
        subdivisions: intervals,
        converged: true,
    }
}

#[derive(Default)]
struct Neumaier {
    sum: f64,
    compensation: f64,
}

impl Neumaier {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    fn total(&self) -> f64 {
        self.sum + self.compensation
    }
}
