//! Boundary velocity of the patch.
//!
//! For `0 < α < 2`,
//! `z_t(x) = c_α ∫ (z_x(x) - z_x(x-y)) / |z(x) - z(x-y)|^α dy` with
//! `c_α = -jump Γ(α/2) / (π² 2^{2-α} Γ((2-α)/2))`; for `α = 0`,
//! `z_t(x) = jump/(2π) ∫ log|z(x) - z(x-y)| z_x(x-y) dy`.
//!
//! The kernel is split as `|2 sin(y/2)|^{-α}` times a smooth factor. The
//! smooth factor is summed with weights that integrate the singular part
//! exactly for trigonometric polynomials of degree `N/2`, which keeps the
//! quadrature spectrally accurate. The log kernel is handled the same way,
//! with the `log|2 sin(y/2)|` part applied as the multiplier `-π/|k|`.

use std::f64::consts::{PI, TAU};

use rustfft::num_complex::Complex64;
use statrs::function::gamma::gamma;

use crate::spectral::Spectral;
use crate::state::{SimConfig, SimState};
use crate::SimError;

/// `∫_0^{2π} (cos ky - 1) |2 sin(y/2)|^{-α} dy` for `0 < α < 2`.
pub fn singular_weight(alpha: f64, k: u64) -> f64 {
    let d = alpha - 1.0;
    // s = Σ_{j<=k} ln(1 + d/(j - α/2)); the weight is A expm1(s)/(1 - α).
    let mut s = 0.0;
    let mut s_over_d = 0.0;
    for j in 1..=k {
        let x = j as f64 - 0.5 * alpha;
        let r = d / x;
        s += r.ln_1p();
        s_over_d += if r.abs() < 1e-8 { (1.0 - 0.5 * r) / x } else { r.ln_1p() / d };
    }
    let a = TAU * gamma(2.0 - alpha) / gamma(1.0 - 0.5 * alpha).powi(2);
    let ratio = if s.abs() < 1e-12 { 1.0 + 0.5 * s } else { s.exp_m1() / s };
    -a * ratio * s_over_d
}

pub fn velocity_constant(cfg: &SimConfig) -> f64 {
    let a = cfg.alpha;
    if a == 0.0 {
        cfg.jump / TAU
    } else {
        -cfg.jump * gamma(0.5 * a) / (PI * PI * 2f64.powf(2.0 - a) * gamma(0.5 * (2.0 - a)))
    }
}

/// Precomputed weights and transforms for one grid size and configuration.
pub struct VelocityOperator {
    n: usize,
    alpha: f64,
    constant: f64,
    spectral: Spectral,
    /// Quadrature weight for offset `m`, `m = 1..N-1`, entry 0 unused.
    weights: Vec<f64>,
    /// `(2 sin(π m / N))^2`.
    chord2: Vec<f64>,
    /// Squared periodic parameter distance for offset `m`.
    dist2: Vec<f64>,
}

/// Output of one velocity evaluation.
#[derive(Debug, Clone)]
pub struct VelocityField {
    /// Full right-hand side, normal velocity plus the tangential correction.
    pub dzdt: Vec<[f64; 2]>,
    /// Normal component of the boundary integral, along `z_x^⊥/|z_x|`.
    pub normal: Vec<f64>,
    pub arc_chord_min: f64,
}

impl VelocityOperator {
    pub fn new(cfg: &SimConfig, n: usize) -> Result<Self, SimError> {
        cfg.validate()?;
        if n < 64 || !n.is_power_of_two() {
            return Err(SimError::InvalidConfig(format!("N = {n} must be a power of two >= 64")));
        }
        let h = TAU / n as f64;
        let weights = if cfg.alpha == 0.0 {
            vec![h; n]
        } else {
            let w: Vec<f64> = (0..=n / 2).map(|k| singular_weight(cfg.alpha, k as u64)).collect();
            // q_m = (1/N) Σ_k W_k e^{ik y_m} over the symmetric band.
            (0..n)
                .map(|m| {
                    let y = h * m as f64;
                    let mut acc = w[n / 2] * (0.5 * n as f64 * y).cos();
                    for (k, wk) in w.iter().enumerate().take(n / 2).skip(1) {
                        acc += 2.0 * wk * (k as f64 * y).cos();
                    }
                    acc / n as f64
                })
                .collect()
        };
        let chord2 = (0..n).map(|m| (2.0 * (PI * m as f64 / n as f64).sin()).powi(2)).collect();
        let dist2 = (0..n)
            .map(|m| {
                let d = h * m.min(n - m) as f64;
                d * d
            })
            .collect();
        Ok(VelocityOperator {
            n,
            alpha: cfg.alpha,
            constant: velocity_constant(cfg),
            spectral: Spectral::new(n, cfg.filter_strength, cfg.filter_order),
            weights,
            chord2,
            dist2,
        })
    }

    pub fn spectral(&self) -> &Spectral {
        &self.spectral
    }

    /// Evaluates the boundary integral at every node and returns it with
    /// the minimum arc-chord ratio over all node pairs.
    fn integral(&self, z: &[[f64; 2]], zx: &[[f64; 2]]) -> (Vec<[f64; 2]>, f64) {
        let n = self.n;
        let mut acc = vec![[0.0; 2]; n];
        let mut arc2 = f64::INFINITY;
        let e = -0.5 * self.alpha;
        for i in 0..n {
            for j in i + 1..n {
                let m = j - i;
                let d = [z[i][0] - z[j][0], z[i][1] - z[j][1]];
                let r2 = d[0] * d[0] + d[1] * d[1];
                arc2 = arc2.min(r2 / self.dist2[m]);
                let ratio = r2 / self.chord2[m];
                if self.alpha == 0.0 {
                    // Smooth log part, weighted by z_x at the other node.
                    let w = self.weights[m] * 0.5 * ratio.ln();
                    acc[i][0] += w * zx[j][0];
                    acc[i][1] += w * zx[j][1];
                    acc[j][0] += w * zx[i][0];
                    acc[j][1] += w * zx[i][1];
                } else {
                    let k = if self.alpha == 1.0 { 1.0 / ratio.sqrt() } else { ratio.powf(e) };
                    let w = self.weights[m] * k;
                    let dz = [zx[i][0] - zx[j][0], zx[i][1] - zx[j][1]];
                    acc[i][0] += w * dz[0];
                    acc[i][1] += w * dz[1];
                    acc[j][0] -= w * dz[0];
                    acc[j][1] -= w * dz[1];
                }
            }
        }
        if self.alpha == 0.0 {
            let h = TAU / n as f64;
            for i in 0..n {
                let w = h * (zx[i][0].hypot(zx[i][1])).ln();
                acc[i][0] += w * zx[i][0];
                acc[i][1] += w * zx[i][1];
            }
            let nyq = (n / 2) as i64;
            let log_mult = |k: i64| {
                if k == 0 || k == nyq {
                    Complex64::new(0.0, 0.0)
                } else {
                    Complex64::new(-PI / k.unsigned_abs() as f64, 0.0)
                }
            };
            for c in 0..2 {
                let comp: Vec<f64> = zx.iter().map(|p| p[c]).collect();
                let l = self.spectral.apply(&comp, log_mult);
                for i in 0..n {
                    acc[i][c] += l[i];
                }
            }
        }
        for a in acc.iter_mut() {
            a[0] *= self.constant;
            a[1] *= self.constant;
        }
        (acc, arc2.sqrt())
    }

    /// Right-hand side `U n + T t`: the normal part of the boundary integral
    /// plus the tangential velocity `T` with `T_x = U κ |z_x| - mean`, which
    /// keeps `|z_x|` uniform along the curve.
    pub fn field(&self, state: &SimState, arc_chord_floor: f64) -> Result<VelocityField, SimError> {
        if state.n() != self.n {
            return Err(SimError::InvalidConfig(format!("state has {} points, operator {}", state.n(), self.n)));
        }
        let sp = &self.spectral;
        let (x, y) = (state.component(0), state.component(1));
        let (x1, y1) = (sp.derivative(&x, 1, true), sp.derivative(&y, 1, true));
        let (x2, y2) = (sp.derivative(&x, 2, true), sp.derivative(&y, 2, true));
        let zx: Vec<[f64; 2]> = x1.iter().zip(&y1).map(|(a, b)| [*a, *b]).collect();
        let (v, arc) = self.integral(&state.points, &zx);
        if !(arc > arc_chord_floor) || !arc.is_finite() {
            return Err(SimError::ArcChordCollapse {
                t: state.time,
                value: arc,
                floor: arc_chord_floor,
            });
        }
        let n = self.n;
        let mut normal = vec![0.0; n];
        let mut g = vec![0.0; n];
        let mut tang = vec![[0.0; 2]; n];
        let mut nrm = vec![[0.0; 2]; n];
        for i in 0..n {
            let s = x1[i].hypot(y1[i]);
            let t = [x1[i] / s, y1[i] / s];
            let nv = [-t[1], t[0]];
            let kappa = (x1[i] * y2[i] - y1[i] * x2[i]) / (s * s * s);
            normal[i] = v[i][0] * nv[0] + v[i][1] * nv[1];
            g[i] = normal[i] * kappa * s;
            tang[i] = t;
            nrm[i] = nv;
        }
        let tvel = sp.antiderivative(&g);
        let dzdt = (0..n)
            .map(|i| {
                [
                    normal[i] * nrm[i][0] + tvel[i] * tang[i][0],
                    normal[i] * nrm[i][1] + tvel[i] * tang[i][1],
                ]
            })
            .collect();
        Ok(VelocityField {
            dzdt,
            normal,
            arc_chord_min: arc,
        })
    }
}

/// Right-hand side of the evolution for `state`, failing only if the curve
/// has collapsed.
pub fn velocity(state: &SimState, cfg: &SimConfig) -> Result<Vec<[f64; 2]>, SimError> {
    Ok(VelocityOperator::new(cfg, state.n())?.field(state, 0.0)?.dzdt)
}
