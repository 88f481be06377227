//! Dormand-Prince 5(4) time stepping with snapshot output.

use crate::diagnostics::{self, Diagnostics};
use crate::state::{SimConfig, SimState};
use crate::velocity::VelocityOperator;
use crate::SimError;

/// The method amplifies purely imaginary modes once `|h λ|` exceeds about
/// 0.95, so steps are kept below this multiple of `1/ρ(J)`.
const STABLE_IMAG: f64 = 0.8;
/// Safety factor on the power-iteration estimate of `ρ(J)`, which
/// approaches the true radius from below.
const RADIUS_SAFETY: f64 = 1.25;
const POWER_STEPS: usize = 12;

const C: [f64; 7] = [0.0, 0.2, 0.3, 0.8, 8.0 / 9.0, 1.0, 1.0];
const A: [&[f64]; 7] = [
    &[],
    &[0.2],
    &[3.0 / 40.0, 9.0 / 40.0],
    &[44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0],
    &[19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0],
    &[9017.0 / 3168.0, -355.0 / 33.0, 46732.0 / 5247.0, 49.0 / 176.0, -5103.0 / 18656.0],
    &[35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0],
];
/// Fifth-order minus fourth-order weights.
const E: [f64; 7] = [
    71.0 / 57600.0,
    0.0,
    -71.0 / 16695.0,
    71.0 / 1920.0,
    -17253.0 / 339200.0,
    22.0 / 525.0,
    -1.0 / 40.0,
];

#[derive(Debug, Clone)]
pub struct Evolution {
    /// States at `t0 + k * snapshot_interval` and at the final time.
    pub snapshots: Vec<SimState>,
    pub diagnostics: Vec<(f64, Diagnostics)>,
    /// Largest speed variation seen after any accepted step.
    pub max_speed_variation: f64,
    pub accepted_steps: usize,
    pub rejected_steps: usize,
    /// Why the run ended before `t_final`, if it did.
    pub stop: Option<SimError>,
}

impl Evolution {
    pub fn last(&self) -> &SimState {
        self.snapshots.last().expect("an evolution always holds its initial state")
    }
}

struct Stepper<'a> {
    op: &'a VelocityOperator,
    floor: f64,
    atol: f64,
    rtol: f64,
}

impl Stepper<'_> {
    fn rhs(&self, y: &[f64], t: f64) -> Result<Vec<f64>, SimError> {
        let s = SimState::from_flat(y, t);
        Ok(self.op.field(&s, self.floor)?.dzdt.into_iter().flatten().collect())
    }

    fn norm(&self, e: &[f64], y0: &[f64], y1: &[f64]) -> f64 {
        let sum: f64 = e
            .iter()
            .zip(y0.iter().zip(y1))
            .map(|(e, (a, b))| {
                let sc = self.atol + self.rtol * a.abs().max(b.abs());
                (e / sc).powi(2)
            })
            .sum();
        (sum / e.len() as f64).sqrt()
    }

    /// Power-iteration estimate of the Jacobian's spectral radius at `y`,
    /// from finite-difference products. `v` carries the iterate between calls.
    fn spectral_radius(&self, y: &[f64], f: &[f64], t: f64, v: &mut [f64]) -> Result<f64, SimError> {
        let yn = y.iter().map(|a| a * a).sum::<f64>().sqrt().max(1.0);
        let mut est = 0.0;
        for _ in 0..POWER_STEPS {
            let vn = v.iter().map(|a| a * a).sum::<f64>().sqrt();
            if !(vn > 0.0) {
                break;
            }
            let eps = 1e-7 * yn / vn;
            let yp: Vec<f64> = y.iter().zip(v.iter()).map(|(a, b)| a + eps * b).collect();
            let fp = self.rhs(&yp, t)?;
            let mut jn = 0.0;
            for ((vi, a), b) in v.iter_mut().zip(&fp).zip(f) {
                *vi = (a - b) / eps;
                jn += *vi * *vi;
            }
            let jn = jn.sqrt();
            est = jn / vn;
            if !(est > 0.0) {
                break;
            }
            v.iter_mut().for_each(|a| *a /= jn);
        }
        Ok(est)
    }

    /// One trial step of size `h`. Returns the new state, its derivative
    /// (reused as the next first stage) and the scaled error estimate.
    fn step(&self, y: &[f64], f0: &[f64], t: f64, h: f64) -> Result<(Vec<f64>, Vec<f64>, f64), SimError> {
        let mut k: Vec<Vec<f64>> = vec![f0.to_vec()];
        let mut y_stage = vec![0.0; y.len()];
        for s in 1..7 {
            for (i, ys) in y_stage.iter_mut().enumerate() {
                let inc: f64 = A[s].iter().enumerate().map(|(j, a)| a * k[j][i]).sum();
                *ys = y[i] + h * inc;
            }
            k.push(self.rhs(&y_stage, t + C[s] * h)?);
        }
        // The seventh stage point is the fifth-order solution.
        let err: Vec<f64> = (0..y.len())
            .map(|i| h * E.iter().enumerate().map(|(j, e)| e * k[j][i]).sum::<f64>())
            .collect();
        let en = self.norm(&err, y, &y_stage);
        Ok((y_stage, k.pop().expect("seven stages"), en))
    }
}

fn stable_step(radius: f64) -> f64 {
    if radius > 0.0 {
        STABLE_IMAG / (RADIUS_SAFETY * radius)
    } else {
        f64::INFINITY
    }
}

/// Integrates from `state.time` to `state.time + cfg.t_final`.
pub fn evolve(state: &SimState, cfg: &SimConfig) -> Result<Evolution, SimError> {
    let op = VelocityOperator::new(cfg, state.n())?;
    let d0 = diagnostics::diagnostics(state);
    let stepper = Stepper {
        op: &op,
        floor: cfg.arc_chord_fraction * d0.arc_chord_min,
        atol: cfg.rk_abs_tol,
        rtol: cfg.rk_rel_tol,
    };
    let mut ev = Evolution {
        snapshots: vec![state.clone()],
        diagnostics: vec![(state.time, d0)],
        max_speed_variation: d0.speed_variation,
        accepted_steps: 0,
        rejected_steps: 0,
        stop: None,
    };
    let t0 = state.time;
    let t_end = t0 + cfg.t_final;
    let mut t = t0;
    let mut y = state.flatten();
    let mut f = match stepper.rhs(&y, t) {
        Ok(f) => f,
        Err(e) => {
            ev.stop = Some(e);
            return Ok(ev);
        }
    };
    let fn0 = f.iter().map(|v| v * v).sum::<f64>().sqrt().max(1e-300);
    let yn0 = y.iter().map(|v| v * v).sum::<f64>().sqrt();
    let mut h = (0.01 * yn0 / fn0).clamp(1e-6, cfg.snapshot_interval);
    // Fixed pseudo-random start so runs stay reproducible.
    let mut probe: Vec<f64> = (0..y.len()).map(|i| ((i * 7919 % 1009) as f64 / 1009.0) - 0.5).collect();
    let mut h_stable = match stepper.spectral_radius(&y, &f, t, &mut probe) {
        Ok(r) => stable_step(r),
        Err(e) => {
            ev.stop = Some(e);
            return Ok(ev);
        }
    };
    let mut next_snap = 1u64;

    while t < t_end {
        let target = (t0 + next_snap as f64 * cfg.snapshot_interval).min(t_end);
        h = h.min(h_stable);
        let hit = t + h >= target;
        let h_try = if hit { target - t } else { h };
        if h_try < 1e-12 * t.abs().max(1.0) {
            ev.stop = Some(SimError::StepSizeUnderflow { t, h: h_try });
            break;
        }
        let (y_new, f_new, err) = match stepper.step(&y, &f, t, h_try) {
            Ok(r) => r,
            Err(SimError::ArcChordCollapse { .. }) if h_try > 1e-6 => {
                // A stage of an oversized step may leave the admissible set.
                h = 0.25 * h_try;
                ev.rejected_steps += 1;
                continue;
            }
            Err(e) => {
                ev.stop = Some(e);
                break;
            }
        };
        let fac = if err == 0.0 { 5.0 } else { (0.9 * err.powf(-0.2)).clamp(0.2, 5.0) };
        if !(err <= 1.0) {
            h = h_try * fac.min(1.0);
            ev.rejected_steps += 1;
            continue;
        }
        ev.accepted_steps += 1;
        t = if hit { target } else { t + h_try };
        y = y_new;
        f = f_new;
        let s = SimState::from_flat(&y, t);
        ev.max_speed_variation = ev.max_speed_variation.max(diagnostics::speed_variation(&s));
        if hit {
            ev.diagnostics.push((t, diagnostics::diagnostics(&s)));
            ev.snapshots.push(s);
            next_snap += 1;
            match stepper.spectral_radius(&y, &f, t, &mut probe) {
                Ok(r) => h_stable = stable_step(r),
                Err(e) => {
                    ev.stop = Some(e);
                    break;
                }
            }
            // Keep the controller's proposal rather than the clipped step.
            h = h.max(h_try * fac);
        } else {
            h = h_try * fac;
        }
    }
    Ok(ev)
}
