use std::f64::consts::TAU;

use serde::Serialize;

use crate::spectral::Spectral;
use crate::state::SimState;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Diagnostics {
    pub min_curvature: f64,
    pub area: f64,
    pub arc_chord_min: f64,
    pub speed_variation: f64,
}

/// Unfiltered spectral curvature of the sampled curve.
pub fn curvature(state: &SimState) -> Vec<f64> {
    let sp = Spectral::new(state.n(), 1.0, 1);
    curvature_with(&sp, state)
}

fn curvature_with(sp: &Spectral, state: &SimState) -> Vec<f64> {
    let (x, y) = (state.component(0), state.component(1));
    let (x1, y1) = (sp.derivative(&x, 1, false), sp.derivative(&y, 1, false));
    let (x2, y2) = (sp.derivative(&x, 2, false), sp.derivative(&y, 2, false));
    (0..state.n())
        .map(|i| (x1[i] * y2[i] - y1[i] * x2[i]) / x1[i].hypot(y1[i]).powi(3))
        .collect()
}

pub fn speeds(state: &SimState) -> Vec<f64> {
    let sp = Spectral::new(state.n(), 1.0, 1);
    let (x, y) = (state.component(0), state.component(1));
    let (x1, y1) = (sp.derivative(&x, 1, false), sp.derivative(&y, 1, false));
    x1.iter().zip(&y1).map(|(a, b)| a.hypot(*b)).collect()
}

/// `(max - min)/mean` of `|z_x|` over the grid.
pub fn speed_variation(state: &SimState) -> f64 {
    let s = speeds(state);
    let (lo, hi) = s.iter().fold((f64::INFINITY, 0.0f64), |(l, h), &v| (l.min(v), h.max(v)));
    let mean = s.iter().sum::<f64>() / s.len() as f64;
    (hi - lo) / mean
}

/// Minimum of `|z_i - z_j| / d(x_i, x_j)` over node pairs, with `d` the
/// periodic parameter distance.
pub fn arc_chord_min(state: &SimState) -> f64 {
    let n = state.n();
    let h = TAU / n as f64;
    let p = &state.points;
    let mut best = f64::INFINITY;
    for i in 0..n {
        for j in i + 1..n {
            let m = j - i;
            let d = h * m.min(n - m) as f64;
            let r = (p[i][0] - p[j][0]).hypot(p[i][1] - p[j][1]);
            best = best.min(r / d);
        }
    }
    best
}

/// Enclosed area `1/2 ∫ (z1 z2' - z2 z1') dx` with spectral derivatives.
pub fn area(state: &SimState) -> f64 {
    let sp = Spectral::new(state.n(), 1.0, 1);
    let (x, y) = (state.component(0), state.component(1));
    let (x1, y1) = (sp.derivative(&x, 1, false), sp.derivative(&y, 1, false));
    let h = TAU / state.n() as f64;
    0.5 * h * (0..state.n()).map(|i| x[i] * y1[i] - y[i] * x1[i]).sum::<f64>()
}

pub fn diagnostics(state: &SimState) -> Diagnostics {
    let k = curvature(state);
    Diagnostics {
        min_curvature: k.iter().copied().fold(f64::INFINITY, f64::min),
        area: area(state),
        arc_chord_min: arc_chord_min(state),
        speed_variation: speed_variation(state),
    }
}
