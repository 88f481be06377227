//! Simulation state, configuration and initial curves.

use std::f64::consts::{PI, TAU};

use rustfft::num_complex::Complex64;
use rustfft::FftPlanner;
use serde::{Deserialize, Serialize};

use crate::SimError;

#[derive(Debug, Clone, PartialEq)]
pub struct SimState {
    /// Curve samples at `x_j = 2π j / N`.
    pub points: Vec<[f64; 2]>,
    pub time: f64,
}

impl SimState {
    pub fn new(points: Vec<[f64; 2]>, time: f64) -> Result<Self, SimError> {
        let n = points.len();
        if n < 64 || !n.is_power_of_two() {
            return Err(SimError::InvalidConfig(format!("N = {n} must be a power of two >= 64")));
        }
        if points.iter().flatten().any(|v| !v.is_finite()) {
            return Err(SimError::InvalidConfig("non-finite curve sample".into()));
        }
        Ok(SimState { points, time })
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn component(&self, i: usize) -> Vec<f64> {
        self.points.iter().map(|p| p[i]).collect()
    }

    pub(crate) fn flatten(&self) -> Vec<f64> {
        self.points.iter().flat_map(|p| *p).collect()
    }

    pub(crate) fn from_flat(y: &[f64], time: f64) -> Self {
        SimState {
            points: y.chunks_exact(2).map(|c| [c[0], c[1]]).collect(),
            time,
        }
    }

    pub fn max_distance(&self, other: &SimState) -> f64 {
        self.points
            .iter()
            .zip(&other.points)
            .map(|(a, b)| (a[0] - b[0]).hypot(a[1] - b[1]))
            .fold(0.0, f64::max)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SimConfig {
    pub alpha: f64,
    /// Jump of the scalar across the boundary.
    pub jump: f64,
    pub filter_strength: f64,
    pub filter_order: u32,
    pub rk_abs_tol: f64,
    pub rk_rel_tol: f64,
    pub t_final: f64,
    pub snapshot_interval: f64,
    /// The run stops once the arc-chord minimum falls below this fraction of
    /// its initial value.
    pub arc_chord_fraction: f64,
}

impl Default for SimConfig {
    fn default() -> Self {
        SimConfig {
            alpha: 1.0,
            jump: -TAU,
            filter_strength: 10.0,
            filter_order: 8,
            rk_abs_tol: 1e-8,
            rk_rel_tol: 1e-8,
            t_final: 1.0,
            snapshot_interval: 0.1,
            arc_chord_fraction: 1e-3,
        }
    }
}

impl SimConfig {
    pub fn validate(&self) -> Result<(), SimError> {
        let bad = |m: &str| Err(SimError::InvalidConfig(m.to_string()));
        if !(0.0..2.0).contains(&self.alpha) {
            return bad("alpha must lie in [0, 2)");
        }
        if !self.jump.is_finite() || self.jump == 0.0 {
            return bad("jump must be finite and nonzero");
        }
        if !(self.filter_strength > 0.0) || self.filter_order == 0 {
            return bad("filter parameters must be positive");
        }
        if !(self.rk_abs_tol > 0.0 && self.rk_rel_tol > 0.0) {
            return bad("tolerances must be positive");
        }
        if !(self.t_final >= 0.0 && self.snapshot_interval > 0.0) {
            return bad("t_final must be >= 0 and snapshot_interval > 0");
        }
        if !(self.arc_chord_fraction >= 0.0 && self.arc_chord_fraction < 1.0) {
            return bad("arc_chord_fraction must lie in [0, 1)");
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum InitialCurve {
    Circle { radius: f64 },
    /// `(r1 cos θ, r2 sin θ)`, resampled uniformly in arc length.
    Ellipse { r1: f64, r2: f64 },
    /// `(2 exp(1 - 1/(1 - (x/π)^2)) - 1, sin(x - c))` on `x ∈ [-π, π)`.
    Bump { c: f64 },
}

impl InitialCurve {
    pub fn sample(&self, n: usize) -> Result<SimState, SimError> {
        let h = TAU / n as f64;
        let points = match *self {
            InitialCurve::Circle { radius } => (0..n)
                .map(|j| {
                    let (s, c) = (h * j as f64).sin_cos();
                    [radius * c, radius * s]
                })
                .collect(),
            InitialCurve::Ellipse { r1, r2 } => {
                if !(r1 > 0.0 && r2 > 0.0) {
                    return Err(SimError::InvalidConfig("semiaxes must be positive".into()));
                }
                arc_length_angles(r1, r2, n)
                    .into_iter()
                    .map(|t| [r1 * t.cos(), r2 * t.sin()])
                    .collect()
            }
            InitialCurve::Bump { c } => (0..n)
                .map(|j| {
                    let x = -PI + h * j as f64;
                    let q = 1.0 - (x / PI).powi(2);
                    let e = if q > 0.0 { (1.0 - 1.0 / q).exp() } else { 0.0 };
                    [2.0 * e - 1.0, (x - c).sin()]
                })
                .collect(),
        };
        SimState::new(points, 0.0)
    }
}

/// Angles `θ_j` at which the ellipse's arc length from `θ = 0` equals
/// `j L / n`. The speed is expanded in a Fourier series and the arc length
/// is inverted by Newton's method.
fn arc_length_angles(r1: f64, r2: f64, n: usize) -> Vec<f64> {
    const M: usize = 4096;
    let speed = |t: f64| (r1 * t.sin()).hypot(r2 * t.cos());
    let mut buf: Vec<Complex64> = (0..M).map(|j| Complex64::new(speed(TAU * j as f64 / M as f64), 0.0)).collect();
    FftPlanner::new().plan_fft_forward(M).process(&mut buf);
    let a0 = buf[0].re / M as f64;
    // speed = a0 + Σ a_k cos kθ + b_k sin kθ
    let coef: Vec<(f64, f64)> = (1..M / 2)
        .map(|k| (2.0 * buf[k].re / M as f64, -2.0 * buf[k].im / M as f64))
        .take_while(|(a, b)| a.abs() + b.abs() > 1e-18 * a0)
        .collect();
    let arc = |t: f64| {
        a0 * t
            + coef
                .iter()
                .enumerate()
                .map(|(i, (a, b))| {
                    let k = (i + 1) as f64;
                    (a * (k * t).sin() - b * ((k * t).cos() - 1.0)) / k
                })
                .sum::<f64>()
    };
    let total = a0 * TAU;
    (0..n)
        .map(|j| {
            let target = total * j as f64 / n as f64;
            let mut t = TAU * j as f64 / n as f64;
            for _ in 0..50 {
                let step = (arc(t) - target) / speed(t);
                t -= step;
                if step.abs() < 1e-15 {
                    break;
                }
            }
            t
        })
        .collect()
}
