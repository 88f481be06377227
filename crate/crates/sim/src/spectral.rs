//! FFT-based differentiation on the uniform periodic grid.

use std::sync::Arc;

use rustfft::num_complex::Complex64;
use rustfft::{Fft, FftPlanner};

pub struct Spectral {
    n: usize,
    fwd: Arc<dyn Fft<f64>>,
    inv: Arc<dyn Fft<f64>>,
    filter_strength: f64,
    filter_order: u32,
}

impl Spectral {
    pub fn new(n: usize, filter_strength: f64, filter_order: u32) -> Self {
        let mut planner = FftPlanner::new();
        Spectral {
            n,
            fwd: planner.plan_fft_forward(n),
            inv: planner.plan_fft_inverse(n),
            filter_strength,
            filter_order,
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Signed wavenumber of FFT slot `j`; the Nyquist slot maps to `+n/2`.
    pub fn wavenumber(&self, j: usize) -> i64 {
        if j <= self.n / 2 {
            j as i64
        } else {
            j as i64 - self.n as i64
        }
    }

    pub fn filter(&self, k: i64) -> f64 {
        let r = k.unsigned_abs() as f64 / (self.n / 2) as f64;
        (-self.filter_strength * r.powi(self.filter_order as i32)).exp()
    }

    /// Multiplies mode `k` by `m(k)`. `m` must be Hermitian so the result is
    /// real. The Nyquist slot is handled by the caller's choice of `m(n/2)`.
    pub fn apply(&self, values: &[f64], m: impl Fn(i64) -> Complex64) -> Vec<f64> {
        assert_eq!(values.len(), self.n);
        let mut buf: Vec<Complex64> = values.iter().map(|&v| Complex64::new(v, 0.0)).collect();
        self.fwd.process(&mut buf);
        for (j, c) in buf.iter_mut().enumerate() {
            *c *= m(self.wavenumber(j));
        }
        self.inv.process(&mut buf);
        let scale = 1.0 / self.n as f64;
        buf.iter().map(|c| c.re * scale).collect()
    }

    /// Multiplies mode `k` by `(ik)^order`, and by the exponential filter
    /// when `filtered`. Odd derivatives drop the Nyquist mode.
    pub fn derivative(&self, values: &[f64], order: u32, filtered: bool) -> Vec<f64> {
        let nyq = (self.n / 2) as i64;
        self.apply(values, |k| {
            if order % 2 == 1 && k == nyq {
                return Complex64::new(0.0, 0.0);
            }
            let mag = (k as f64).powi(order as i32);
            let rot = match order % 4 {
                0 => Complex64::new(1.0, 0.0),
                1 => Complex64::new(0.0, 1.0),
                2 => Complex64::new(-1.0, 0.0),
                _ => Complex64::new(0.0, -1.0),
            };
            let f = if filtered { self.filter(k) } else { 1.0 };
            rot * (mag * f)
        })
    }

    /// The zero-mean periodic antiderivative of the zero-mean part of `values`.
    pub fn antiderivative(&self, values: &[f64]) -> Vec<f64> {
        let nyq = (self.n / 2) as i64;
        self.apply(values, |k| {
            if k == 0 || k == nyq {
                Complex64::new(0.0, 0.0)
            } else {
                Complex64::new(0.0, -1.0 / k as f64)
            }
        })
    }
}

/// Differentiates samples of a `2π`-periodic function on `N` uniform points.
pub fn spectral_derivative(values: &[f64], order: u32, filtered: bool, filter_strength: f64, filter_order: u32) -> Vec<f64> {
    Spectral::new(values.len(), filter_strength, filter_order).derivative(values, order, filtered)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::TAU;

    fn grid(n: usize) -> Vec<f64> {
        (0..n).map(|j| TAU * j as f64 / n as f64).collect()
    }

    fn max_diff(a: &[f64], b: &[f64]) -> f64 {
        a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
    }

    #[test]
    fn sine_to_cosine() {
        let x = grid(64);
        let s: Vec<f64> = x.iter().map(|t| t.sin()).collect();
        let c: Vec<f64> = x.iter().map(|t| t.cos()).collect();
        let d = spectral_derivative(&s, 1, false, 10.0, 8);
        assert!(max_diff(&d, &c) < 1e-12);
        let f = spectral_derivative(&s, 1, true, 10.0, 8);
        let factor = (-10.0 * (2.0f64 / 64.0).powi(8)).exp();
        let want: Vec<f64> = c.iter().map(|v| v * factor).collect();
        assert!(max_diff(&f, &want) < 1e-12);
    }

    #[test]
    fn constants_have_zero_derivatives() {
        let v = vec![2.5; 128];
        for order in 1..4 {
            let d = spectral_derivative(&v, order, false, 10.0, 8);
            assert!(d.iter().all(|x| x.abs() < 1e-13));
        }
    }

    #[test]
    fn second_derivative_and_antiderivative() {
        let x = grid(128);
        let f: Vec<f64> = x.iter().map(|t| (3.0 * t).cos()).collect();
        let sp = Spectral::new(128, 10.0, 8);
        let d2 = sp.derivative(&f, 2, false);
        let want: Vec<f64> = f.iter().map(|v| -9.0 * v).collect();
        assert!(max_diff(&d2, &want) < 1e-11);
        let back = sp.antiderivative(&sp.derivative(&f, 1, false));
        assert!(max_diff(&back, &f) < 1e-13);
    }
}
