//! Validated adaptive integration with the two-point Gauss-Legendre rule.
//!
//! On `[a, b]` with `h = (b - a)/2`, `m = (a + b)/2`,
//!
//! `∫ f = h (f(m - h/√3) + f(m + h/√3)) + (b - a)^5 f''''(ξ) / 4320`
//!
//! for some `ξ ∈ [a, b]`; the fourth derivative is enclosed with [`Jet4`].

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::jet::{Jet4, Scalar};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_depth: u32,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            abs_tol: 1e-6,
            rel_tol: 1e-6,
            max_depth: 13,
        }
    }
}

impl Tolerance {
    pub fn validate(&self) -> Result<()> {
        if self.abs_tol > 0.0 && self.rel_tol > 0.0 && self.max_depth >= 1 && self.max_depth < 60 {
            Ok(())
        } else {
            Err(Error::InvalidInput(format!("bad tolerance {self:?}")))
        }
    }
}

/// One accepted piece of the subdivision.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Leaf {
    pub a: f64,
    pub b: f64,
    pub enclosure: Interval,
}

#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureResult {
    pub enclosure: Interval,
    pub subinterval_count: usize,
    pub max_depth_hit: bool,
    /// Accepted pieces, left to right.
    pub leaves: Vec<Leaf>,
}

/// A function that can be evaluated on intervals and on jets.
pub trait Integrand: Sync {
    fn eval_interval(&self, y: Interval) -> Result<Interval>;
    fn eval_jet(&self, y: &Jet4) -> Result<Jet4>;
}

/// Integrands written once against [`Scalar`].
pub trait ScalarIntegrand: Sync {
    fn eval<S: Scalar>(&self, y: &S) -> Result<S>;
}

impl<T: ScalarIntegrand> Integrand for T {
    fn eval_interval(&self, y: Interval) -> Result<Interval> {
        self.eval(&y)
    }
    fn eval_jet(&self, y: &Jet4) -> Result<Jet4> {
        self.eval(y)
    }
}

fn gauss_offset() -> Interval {
    Interval::point(3.0)
        .sqrt()
        .and_then(|r| r.div_f64(3.0))
        .expect("sqrt(3)/3")
}

/// Two-point Gauss-Legendre enclosure of `∫_a^b f` including the remainder.
pub fn gl2_enclosure<F: Integrand + ?Sized>(f: &F, a: f64, b: f64) -> Result<Interval> {
    if !(a < b) {
        return Err(Error::InvalidInput(format!("empty integration range [{a}, {b}]")));
    }
    let (ia, ib) = (Interval::point(a), Interval::point(b));
    let len = ib - ia;
    let h = len.mul_f64(0.5);
    let m = (ia + ib).mul_f64(0.5);
    let off = h * gauss_offset();
    let nodes = f.eval_interval(m - off)? + f.eval_interval(m + off)?;
    let d4 = f.eval_jet(&Jet4::variable(Interval::new(a, b)))?.d(4);
    let rem = (len.sqr().sqr() * len * d4).div_f64(4320.0)?;
    Ok((h * nodes + rem).checked("quadrature")?)
}

/// `(b - a) f([a, b])`, used when the jet cannot be formed.
fn crude_enclosure<F: Integrand + ?Sized>(f: &F, a: f64, b: f64) -> Result<Interval> {
    let v = f.eval_interval(Interval::new(a, b))?;
    Ok(((Interval::point(b) - Interval::point(a)) * v).checked("quadrature")?)
}

fn piece<F: Integrand + ?Sized>(f: &F, a: f64, b: f64) -> Option<Interval> {
    gl2_enclosure(f, a, b).or_else(|_| crude_enclosure(f, a, b)).ok()
}

/// Integrates over `[a, b]` by depth-first midpoint bisection.
pub fn adaptive_integrate<F: Integrand + ?Sized>(f: &F, a: f64, b: f64, tol: Tolerance) -> Result<QuadratureResult> {
    tol.validate()?;
    if !(a < b) {
        return Err(Error::InvalidInput(format!("empty integration range [{a}, {b}]")));
    }
    let mut stack = vec![(a, b, 0u32)];
    let mut leaves = Vec::new();
    let mut total = Interval::ZERO;
    let mut max_depth_hit = false;

    while let Some((lo, hi, depth)) = stack.pop() {
        let enc = piece(f, lo, hi);
        let mid = 0.5 * lo + 0.5 * hi;
        let at_floor = depth >= tol.max_depth || !(lo < mid && mid < hi);
        match enc {
            Some(e) if e.width() <= tol.abs_tol || e.width() <= tol.rel_tol * (hi - lo) => {}
            Some(_) if at_floor => max_depth_hit = true,
            None if at_floor => return Err(Error::NonEvaluable(Interval::new(lo, hi))),
            _ => {
                stack.push((mid, hi, depth + 1));
                stack.push((lo, mid, depth + 1));
                continue;
            }
        }
        let e = enc.expect("accepted pieces have an enclosure");
        total = total + e;
        leaves.push(Leaf {
            a: lo,
            b: hi,
            enclosure: e,
        });
    }
    Ok(QuadratureResult {
        enclosure: total.checked("quadrature")?,
        subinterval_count: leaves.len(),
        max_depth_hit,
        leaves,
    })
}
