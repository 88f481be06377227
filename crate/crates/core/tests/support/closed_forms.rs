//! Integrands with closed-form integrals for the validated quadrature.

use alphapatch_core::quadrature::{adaptive_integrate, gl2_enclosure, QuadratureResult, ScalarIntegrand, Tolerance};
use alphapatch_core::{Interval, Result as CoreResult, Scalar};

#[derive(Debug, Clone, Copy)]
pub enum Family {
    Monomial(u32),
    Sin(f64),
    Cos(f64),
    Exp(f64),
    Ln,
    XLnX,
    X2LnX,
    X2Exp,
    Recip,
    Sqrt,
    XSin,
    ExpSin,
    InvSquare(f64),
    /// `x^3 - 2x^2 + x/2 - 1`
    Cubic,
}

impl ScalarIntegrand for Family {
    fn eval<S: Scalar>(&self, x: &S) -> CoreResult<S> {
        let c = |v: f64| S::constant(Interval::point(v));
        Ok(match *self {
            Family::Monomial(n) => {
                let mut p = c(1.0);
                for _ in 0..n {
                    p = p * x.clone();
                }
                p
            }
            Family::Sin(k) => x.scale(Interval::point(k)).sin_cos()?.0,
            Family::Cos(k) => x.scale(Interval::point(k)).sin_cos()?.1,
            Family::Exp(k) => x.scale(Interval::point(k)).exp()?,
            Family::Ln => x.ln()?,
            Family::XLnX => x.clone() * x.ln()?,
            Family::X2LnX => x.sqr() * x.ln()?,
            Family::X2Exp => x.sqr() * x.exp()?,
            Family::Recip => x.recip()?,
            Family::Sqrt => x.sqrt()?,
            Family::XSin => x.clone() * x.sin_cos()?.0,
            Family::ExpSin => x.exp()? * x.sin_cos()?.0,
            Family::InvSquare(s) => (x.clone() + c(s)).sqr().recip()?,
            Family::Cubic => {
                let x2 = x.sqr();
                x2.clone() * x.clone() - x2.scale(Interval::point(2.0)) + x.scale(Interval::point(0.5)) - c(1.0)
            }
        })
    }
}

impl Family {
    /// Antiderivative at `x`, in interval arithmetic.
    fn antiderivative(self, x: Interval) -> Interval {
        let e = |r: Result<Interval, _>| r.expect("antiderivative evaluable");
        match self {
            Family::Monomial(n) => e(x.powi(n + 1).div_f64((n + 1) as f64)),
            Family::Sin(k) => e((-e(x.mul_f64(k).cos())).div_f64(k)),
            Family::Cos(k) => e(e(x.mul_f64(k).sin()).div_f64(k)),
            Family::Exp(k) => e(e(x.mul_f64(k).exp()).div_f64(k)),
            Family::Ln => x * e(x.ln()) - x,
            Family::XLnX => x.sqr().mul_f64(0.5) * e(x.ln()) - x.sqr().mul_f64(0.25),
            Family::X2LnX => e(x.powi(3).div_f64(3.0)) * e(x.ln()) - e(x.powi(3).div_f64(9.0)),
            Family::X2Exp => e(x.exp()) * (x.sqr() - x.mul_f64(2.0) + Interval::point(2.0)),
            Family::Recip => e(x.ln()),
            Family::Sqrt => e((e(x.sqrt()) * x).mul_f64(2.0).div_f64(3.0)),
            Family::XSin => e(x.sin()) - x * e(x.cos()),
            Family::ExpSin => (e(x.exp()) * (e(x.sin()) - e(x.cos()))).mul_f64(0.5),
            Family::InvSquare(s) => -e((x + Interval::point(s)).recip()),
            Family::Cubic => {
                let x2 = x.sqr();
                x2.sqr().mul_f64(0.25) - e((x2 * x).mul_f64(2.0).div_f64(3.0)) + x2.mul_f64(0.25) - x
            }
        }
    }

    pub fn exact(self, a: f64, b: f64) -> Interval {
        self.antiderivative(Interval::point(b)) - self.antiderivative(Interval::point(a))
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Case {
    pub f: Family,
    pub a: f64,
    pub b: f64,
}

/// Fifty integrals with known values.
pub fn cases() -> Vec<Case> {
    use Family::*;
    let mut v = Vec::new();
    let mut push = |f, a, b| v.push(Case { f, a, b });
    for n in 0..8 {
        push(Monomial(n), -1.3, 2.1);
    }
    for (i, k) in [1.0, 2.0, 3.0, 4.5, 7.0].into_iter().enumerate() {
        push(Sin(k), -0.5 * i as f64, 3.0);
        push(Cos(k), 0.25, 2.5 + i as f64);
    }
    for k in [-2.0, -1.0, 0.5, 1.0, 3.0] {
        push(Exp(k), -1.0, 2.0);
    }
    for (a, b) in [(1.0, 2.0), (0.5, 3.0), (2.0, 10.0)] {
        push(Ln, a, b);
        push(XLnX, a, b);
        push(X2LnX, a, b);
        push(Recip, a, b);
        push(Sqrt, a, b);
    }
    for (a, b) in [(-1.0, 1.0), (0.0, 2.0), (-3.0, 0.5)] {
        push(X2Exp, a, b);
        push(XSin, a, b);
        push(ExpSin, a, b);
    }
    for s in [0.5, 2.0, 10.0] {
        push(InvSquare(s), 0.0, 4.0);
    }
    v
}

/// Integrates every case; the exact value must lie in the enclosure.
pub fn check_all(tol: Tolerance) -> std::result::Result<Vec<QuadratureResult>, String> {
    cases()
        .into_iter()
        .map(|c| {
            let r = adaptive_integrate(&c.f, c.a, c.b, tol).map_err(|e| format!("{c:?}: {e}"))?;
            let exact = c.f.exact(c.a, c.b);
            if exact.subset_of(r.enclosure) {
                Ok(r)
            } else {
                Err(format!("{c:?}: exact {exact} not inside {}", r.enclosure))
            }
        })
        .collect()
}

/// `∫_0^pi sin` at the default tolerance.
pub fn sine_over_half_period() -> CoreResult<QuadratureResult> {
    adaptive_integrate(&Family::Sin(1.0), 0.0, std::f64::consts::PI, Tolerance::default())
}

/// One-piece rule on a cubic: the remainder vanishes, so the enclosure is
/// as narrow as the node evaluations.
pub fn cubic_single_piece(a: f64, b: f64) -> CoreResult<(Interval, Interval)> {
    Ok((gl2_enclosure(&Family::Cubic, a, b)?, Family::Cubic.exact(a, b)))
}
