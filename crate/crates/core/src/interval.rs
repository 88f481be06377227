//! Outward-rounded interval arithmetic.
//!
//! Arithmetic endpoints are computed in round-to-nearest and stepped one
//! representable number outward whenever an error-free transformation
//! (two-sum, fused multiply-add residual) shows the rounded value is on the
//! wrong side. Elementary functions always step two numbers outward, since
//! libm results are faithful but not correctly rounded. The result therefore
//! contains the exact real result for every choice of points in the operands.
//!
//! The `+`, `-`, `*` operators never fail. If an endpoint overflows, the
//! result is the entire line `[-inf, +inf]`, which is still a valid
//! enclosure; the checked entry points ([`arith`], [`Interval::checked`])
//! turn that into [`IntervalError::Overflow`]. Everything else returns a
//! `Result` directly.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum IntervalError {
    #[error("division by an interval containing zero: {0}")]
    DivisionByZeroInterval(Interval),
    #[error("{func} is not defined on {arg}")]
    DomainViolation { func: &'static str, arg: Interval },
    #[error("overflow in {0}")]
    Overflow(&'static str),
    #[error("invalid interval endpoints [{0}, {1}]")]
    InvalidEndpoints(f64, f64),
}

/// Closed interval `[lo, hi]` with `lo <= hi`.
#[derive(Clone, Copy, PartialEq)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

/// Sign verdict for a validated enclosure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SignOutcome {
    AllPositive,
    AllNegative,
    Indeterminate,
}

impl SignOutcome {
    pub fn of(x: Interval) -> Self {
        if x.lo > 0.0 {
            SignOutcome::AllPositive
        } else if x.hi < 0.0 {
            SignOutcome::AllNegative
        } else {
            SignOutcome::Indeterminate
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            SignOutcome::AllPositive => "positive",
            SignOutcome::AllNegative => "negative",
            SignOutcome::Indeterminate => "indeterminate",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ElemFn {
    Sin,
    Cos,
    Tan,
    Exp,
    Log,
    Sqrt,
    Abs,
    Neg,
}

#[inline]
fn down(x: f64) -> f64 {
    x.next_down()
}

#[inline]
fn up(x: f64) -> f64 {
    x.next_up()
}

// Below this magnitude the error terms below may themselves underflow.
const EXACT_FLOOR: f64 = 1e-290;

/// Rounded `a + b` with the sign of the rounding error, via two-sum.
#[inline]
fn add_err(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

#[inline]
fn add_lo(a: f64, b: f64) -> f64 {
    let (s, e) = add_err(a, b);
    if !s.is_finite() || e < 0.0 || e.is_nan() {
        down(s)
    } else {
        s
    }
}

#[inline]
fn add_hi(a: f64, b: f64) -> f64 {
    let (s, e) = add_err(a, b);
    if !s.is_finite() || e > 0.0 || e.is_nan() {
        up(s)
    } else {
        s
    }
}

/// Rounded product and the sign of `a*b - p` (exact via fused multiply-add),
/// or `None` when that sign cannot be trusted.
#[inline]
fn mul_err(a: f64, b: f64) -> (f64, Option<f64>) {
    let p = a * b;
    if !p.is_finite() || (p.abs() < EXACT_FLOOR && p != 0.0) {
        return (p, None);
    }
    if p == 0.0 {
        // Exact only if a factor is zero; otherwise the product underflowed.
        return (p, (a == 0.0 || b == 0.0).then_some(0.0));
    }
    (p, Some(a.mul_add(b, -p)))
}

#[inline]
fn mul_lo(a: f64, b: f64) -> f64 {
    match mul_err(a, b) {
        (p, Some(e)) if e >= 0.0 => p,
        (p, _) => down(p),
    }
}

#[inline]
fn mul_hi(a: f64, b: f64) -> f64 {
    match mul_err(a, b) {
        (p, Some(e)) if e <= 0.0 => p,
        (p, _) => up(p),
    }
}

/// Rounded quotient and the sign of `a/b - q`.
#[inline]
fn div_err(a: f64, b: f64) -> (f64, Option<f64>) {
    let q = a / b;
    if !q.is_finite() || q == 0.0 || q.abs() < EXACT_FLOOR || a.abs() < EXACT_FLOOR {
        return (q, (a == 0.0).then_some(0.0));
    }
    let r = (-q).mul_add(b, a);
    (q, Some(if b > 0.0 { r } else { -r }))
}

#[inline]
fn div_lo(a: f64, b: f64) -> f64 {
    match div_err(a, b) {
        (q, Some(e)) if e >= 0.0 => q,
        (q, _) => down(q),
    }
}

#[inline]
fn div_hi(a: f64, b: f64) -> f64 {
    match div_err(a, b) {
        (q, Some(e)) if e <= 0.0 => q,
        (q, _) => up(q),
    }
}

#[inline]
fn down2(x: f64) -> f64 {
    x.next_down().next_down()
}

#[inline]
fn up2(x: f64) -> f64 {
    x.next_up().next_up()
}

const ENTIRE: Interval = Interval {
    lo: f64::NEG_INFINITY,
    hi: f64::INFINITY,
};

impl Interval {
    pub const ZERO: Interval = Interval { lo: 0.0, hi: 0.0 };
    pub const ONE: Interval = Interval { lo: 1.0, hi: 1.0 };

    /// Builds `[lo, hi]`. Panics if the endpoints are unordered or not finite;
    /// use [`Interval::try_new`] for untrusted input.
    pub fn new(lo: f64, hi: f64) -> Self {
        Self::try_new(lo, hi).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn try_new(lo: f64, hi: f64) -> Result<Self, IntervalError> {
        if lo.is_finite() && hi.is_finite() && lo <= hi {
            Ok(Interval { lo, hi })
        } else {
            Err(IntervalError::InvalidEndpoints(lo, hi))
        }
    }

    pub const fn point(x: f64) -> Self {
        Interval { lo: x, hi: x }
    }

    /// Encloses every real number whose nearest double is `x`, e.g. the
    /// decimal literal `0.15` when `x` was parsed from it.
    pub fn around(x: f64) -> Self {
        Interval {
            lo: down(x),
            hi: up(x),
        }
    }

    /// Enclosure of pi. `f64::consts::PI` lies below pi, its successor above.
    pub fn pi() -> Self {
        Interval {
            lo: std::f64::consts::PI,
            hi: up(std::f64::consts::PI),
        }
    }

    pub fn two_pi() -> Self {
        Interval {
            lo: std::f64::consts::TAU,
            hi: up(std::f64::consts::TAU),
        }
    }

    pub fn half_pi() -> Self {
        Interval {
            lo: std::f64::consts::FRAC_PI_2,
            hi: up(std::f64::consts::FRAC_PI_2),
        }
    }

    #[inline]
    pub fn lo(self) -> f64 {
        self.lo
    }

    #[inline]
    pub fn hi(self) -> f64 {
        self.hi
    }

    pub fn is_finite(self) -> bool {
        self.lo.is_finite() && self.hi.is_finite()
    }

    /// Returns `self` unless an endpoint is infinite.
    pub fn checked(self, what: &'static str) -> Result<Self, IntervalError> {
        if self.is_finite() {
            Ok(self)
        } else {
            Err(IntervalError::Overflow(what))
        }
    }

    pub fn mid(self) -> f64 {
        let m = 0.5 * self.lo + 0.5 * self.hi;
        m.clamp(self.lo, self.hi)
    }

    /// Upper bound on `hi - lo`.
    pub fn width(self) -> f64 {
        up(self.hi - self.lo)
    }

    /// Largest absolute value in the interval.
    pub fn mag(self) -> f64 {
        self.lo.abs().max(self.hi.abs())
    }

    /// Smallest absolute value in the interval.
    pub fn mig(self) -> f64 {
        if self.contains(0.0) {
            0.0
        } else {
            self.lo.abs().min(self.hi.abs())
        }
    }

    pub fn contains(self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn contains_zero(self) -> bool {
        self.contains(0.0)
    }

    /// `self ⊆ other`.
    pub fn subset_of(self, other: Interval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    pub fn overlaps(self, other: Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn hull(self, other: Interval) -> Interval {
        Interval {
            lo: self.lo.min(other.lo),
            hi: self.hi.max(other.hi),
        }
    }

    pub fn intersect(self, other: Interval) -> Option<Interval> {
        let lo = self.lo.max(other.lo);
        let hi = self.hi.min(other.hi);
        (lo <= hi).then_some(Interval { lo, hi })
    }

    pub fn is_point(self) -> bool {
        self.lo == self.hi
    }

    pub fn is_positive(self) -> bool {
        self.lo > 0.0
    }

    pub fn is_negative(self) -> bool {
        self.hi < 0.0
    }

    /// Splits at the floating-point midpoint; both halves share it.
    /// Returns `None` once no double separates the endpoints.
    pub fn bisect(self) -> Option<(Interval, Interval)> {
        let m = self.mid();
        if m <= self.lo || m >= self.hi {
            return None;
        }
        Some((
            Interval { lo: self.lo, hi: m },
            Interval { lo: m, hi: self.hi },
        ))
    }

    pub fn sqr(self) -> Interval {
        if !self.is_finite() {
            return ENTIRE;
        }
        let (l, h) = (self.lo, self.hi);
        let (lo, hi) = if l >= 0.0 {
            (mul_lo(l, l), mul_hi(h, h))
        } else if h <= 0.0 {
            (mul_lo(h, h), mul_hi(l, l))
        } else {
            (0.0, mul_hi(l, l).max(mul_hi(h, h)))
        };
        fix(Interval {
            lo: lo.max(0.0),
            hi,
        })
    }

    pub fn powi(self, n: u32) -> Interval {
        match n {
            0 => Interval::ONE,
            1 => self,
            _ => {
                let half = self.powi(n / 2).sqr();
                if n % 2 == 0 {
                    half
                } else {
                    half * self
                }
            }
        }
    }

    pub fn mul_f64(self, c: f64) -> Interval {
        self * Interval::point(c)
    }

    pub fn div_f64(self, c: f64) -> Result<Interval, IntervalError> {
        self.div(Interval::point(c))
    }

    pub fn div(self, rhs: Interval) -> Result<Interval, IntervalError> {
        if rhs.contains_zero() {
            return Err(IntervalError::DivisionByZeroInterval(rhs));
        }
        let (a, b, c, d) = (self.lo, self.hi, rhs.lo, rhs.hi);
        let lo = div_lo(a, c).min(div_lo(a, d)).min(div_lo(b, c)).min(div_lo(b, d));
        let hi = div_hi(a, c).max(div_hi(a, d)).max(div_hi(b, c)).max(div_hi(b, d));
        Interval { lo, hi }.checked("div")
    }

    pub fn recip(self) -> Result<Interval, IntervalError> {
        Interval::ONE.div(self)
    }

    pub fn abs(self) -> Interval {
        if self.lo >= 0.0 {
            self
        } else if self.hi <= 0.0 {
            -self
        } else {
            Interval {
                lo: 0.0,
                hi: self.mag(),
            }
        }
    }

    pub fn exp(self) -> Result<Interval, IntervalError> {
        let at = |x: f64, dir: fn(f64) -> f64| if x == 0.0 { 1.0 } else { dir(x.exp()) };
        let lo = at(self.lo, down2).max(0.0);
        let hi = at(self.hi, up2);
        Interval { lo, hi }.checked("exp")
    }

    pub fn ln(self) -> Result<Interval, IntervalError> {
        if !(self.lo > 0.0) {
            return Err(IntervalError::DomainViolation {
                func: "log",
                arg: self,
            });
        }
        Interval {
            lo: down2(self.lo.ln()),
            hi: up2(self.hi.ln()),
        }
        .checked("log")
    }

    pub fn sqrt(self) -> Result<Interval, IntervalError> {
        if !(self.lo > 0.0) {
            return Err(IntervalError::DomainViolation {
                func: "sqrt",
                arg: self,
            });
        }
        Ok(Interval {
            lo: down(self.lo.sqrt()),
            hi: up(self.hi.sqrt()),
        })
    }

    pub fn sin(self) -> Result<Interval, IntervalError> {
        self.checked("sin")?;
        if self.hi - self.lo >= 6.28 {
            return Ok(Interval::new(-1.0, 1.0));
        }
        let (a, b) = (self.lo.sin(), self.hi.sin());
        let mut lo = down2(a.min(b));
        let mut hi = up2(a.max(b));
        if self.hits(Interval::half_pi(), Interval::two_pi()) {
            hi = 1.0;
        }
        if self.hits(-Interval::half_pi(), Interval::two_pi()) {
            lo = -1.0;
        }
        Ok(Interval {
            lo: lo.max(-1.0),
            hi: hi.min(1.0),
        })
    }

    pub fn cos(self) -> Result<Interval, IntervalError> {
        self.checked("cos")?;
        if self.hi - self.lo >= 6.28 {
            return Ok(Interval::new(-1.0, 1.0));
        }
        let (a, b) = (self.lo.cos(), self.hi.cos());
        let mut lo = down2(a.min(b));
        let mut hi = up2(a.max(b));
        if self.hits(Interval::ZERO, Interval::two_pi()) {
            hi = 1.0;
        }
        if self.hits(Interval::pi(), Interval::two_pi()) {
            lo = -1.0;
        }
        Ok(Interval {
            lo: lo.max(-1.0),
            hi: hi.min(1.0),
        })
    }

    pub fn tan(self) -> Result<Interval, IntervalError> {
        self.checked("tan")?;
        if self.hi - self.lo >= 3.14 || self.hits(Interval::half_pi(), Interval::pi()) {
            return Err(IntervalError::DomainViolation {
                func: "tan",
                arg: self,
            });
        }
        Interval {
            lo: down2(self.lo.tan()),
            hi: up2(self.hi.tan()),
        }
        .checked("tan")
    }

    /// `self^p = exp(p log self)`; requires `self.lo > 0`.
    pub fn pow(self, p: Interval) -> Result<Interval, IntervalError> {
        if !(self.lo > 0.0) {
            return Err(IntervalError::DomainViolation {
                func: "pow",
                arg: self,
            });
        }
        (p * self.ln()?).exp()
    }

    /// Conservatively decides whether `offset + k * period` lies in `self`
    /// for some integer `k`. May answer `true` when the point is merely close.
    fn hits(self, offset: Interval, period: Interval) -> bool {
        let t_lo = (Interval::point(self.lo) - offset).div(period);
        let t_hi = (Interval::point(self.hi) - offset).div(period);
        match (t_lo, t_hi) {
            (Ok(a), Ok(b)) => a.lo.ceil() <= b.hi.floor(),
            _ => true,
        }
    }
}

#[inline]
fn fix(x: Interval) -> Interval {
    if x.lo.is_nan() || x.hi.is_nan() {
        ENTIRE
    } else {
        x
    }
}

impl Add for Interval {
    type Output = Interval;
    #[inline]
    fn add(self, rhs: Interval) -> Interval {
        fix(Interval {
            lo: add_lo(self.lo, rhs.lo),
            hi: add_hi(self.hi, rhs.hi),
        })
    }
}

impl Sub for Interval {
    type Output = Interval;
    #[inline]
    fn sub(self, rhs: Interval) -> Interval {
        fix(Interval {
            lo: add_lo(self.lo, -rhs.hi),
            hi: add_hi(self.hi, -rhs.lo),
        })
    }
}

impl Mul for Interval {
    type Output = Interval;
    #[inline]
    fn mul(self, rhs: Interval) -> Interval {
        if !self.is_finite() || !rhs.is_finite() {
            return ENTIRE;
        }
        let (a, b, c, d) = (self.lo, self.hi, rhs.lo, rhs.hi);
        let lo = mul_lo(a, c).min(mul_lo(a, d)).min(mul_lo(b, c)).min(mul_lo(b, d));
        let hi = mul_hi(a, c).max(mul_hi(a, d)).max(mul_hi(b, c)).max(mul_hi(b, d));
        Interval { lo, hi }
    }
}

impl Neg for Interval {
    type Output = Interval;
    #[inline]
    fn neg(self) -> Interval {
        Interval {
            lo: -self.hi,
            hi: -self.lo,
        }
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:e}, {:e}]", self.lo, self.hi)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:.16e}, {:.16e}]", self.lo, self.hi)
    }
}

impl From<f64> for Interval {
    fn from(x: f64) -> Self {
        Interval::point(x)
    }
}

/// Parses `"x"` (outward enclosure of the decimal) or `"lo:hi"`.
impl FromStr for Interval {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |t: &str| -> Result<f64, String> {
            t.trim()
                .parse::<f64>()
                .map_err(|e| format!("bad number {t:?}: {e}"))
        };
        match s.split_once(':') {
            Some((a, b)) => {
                let (a, b) = (parse(a)?, parse(b)?);
                Interval::try_new(a, b).map_err(|e| e.to_string())
            }
            None => {
                let x = parse(s)?;
                if !x.is_finite() {
                    return Err(format!("non-finite value {s:?}"));
                }
                Ok(Interval::around(x))
            }
        }
    }
}

/// Binary arithmetic with overflow reported as an error.
pub fn arith(op: ArithOp, x: Interval, y: Interval) -> Result<Interval, IntervalError> {
    match op {
        ArithOp::Add => (x + y).checked("add"),
        ArithOp::Sub => (x - y).checked("sub"),
        ArithOp::Mul => (x * y).checked("mul"),
        ArithOp::Div => x.div(y),
    }
}

pub fn elem(f: ElemFn, x: Interval) -> Result<Interval, IntervalError> {
    match f {
        ElemFn::Sin => x.sin(),
        ElemFn::Cos => x.cos(),
        ElemFn::Tan => x.tan(),
        ElemFn::Exp => x.exp(),
        ElemFn::Log => x.ln(),
        ElemFn::Sqrt => x.sqrt(),
        ElemFn::Abs => Ok(x.abs()),
        ElemFn::Neg => Ok(-x),
    }
}

pub fn pow(x: Interval, p: Interval) -> Result<Interval, IntervalError> {
    x.pow(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{E, PI};

    fn ulp(x: f64) -> f64 {
        x.abs().next_up() - x.abs()
    }

    #[test]
    fn endpoint_formulas() {
        let s = Interval::new(1.0, 2.0) + Interval::new(3.0, 4.0);
        assert!(Interval::new(4.0, 6.0).subset_of(s));
        assert!(s.width() <= 2.0 + 4.0 * ulp(6.0));

        let p = Interval::new(-1.0, 2.0) * Interval::new(3.0, 4.0);
        assert!(Interval::new(-4.0, 8.0).subset_of(p));
        assert!(p.lo() >= -4.0 - ulp(4.0) && p.hi() <= 8.0 + ulp(8.0));
    }

    #[test]
    fn division_by_zero_interval() {
        let r = arith(ArithOp::Div, Interval::ONE, Interval::new(-1.0, 1.0));
        assert!(matches!(r, Err(IntervalError::DivisionByZeroInterval(_))));
        let r = Interval::ONE.div(Interval::new(0.0, 1.0));
        assert!(r.is_err());
    }

    #[test]
    fn overflow_is_reported() {
        let big = Interval::point(f64::MAX);
        assert!(matches!(
            arith(ArithOp::Add, big, big),
            Err(IntervalError::Overflow(_))
        ));
        assert!(matches!(
            arith(ArithOp::Mul, big, big),
            Err(IntervalError::Overflow(_))
        ));
        assert!(Interval::point(1000.0).exp().is_err());
    }

    #[test]
    fn sin_on_quarter_period() {
        let x = Interval::new(0.0, PI / 2.0);
        let s = x.sin().unwrap();
        assert!(Interval::new(0.0, 1.0).subset_of(s));
        assert!(s.lo() >= -4.0 * f64::MIN_POSITIVE && s.hi() <= 1.0);
    }

    #[test]
    fn sin_cos_detect_interior_extrema() {
        let s = Interval::new(1.0, 2.0).sin().unwrap();
        assert_eq!(s.hi(), 1.0);
        let c = Interval::new(3.0, 3.5).cos().unwrap();
        assert_eq!(c.lo(), -1.0);
        let c = Interval::new(-0.1, 0.2).cos().unwrap();
        assert_eq!(c.hi(), 1.0);
        let s = Interval::new(4.0, 5.0).sin().unwrap();
        assert_eq!(s.lo(), -1.0);
    }

    #[test]
    fn log_of_one_to_e() {
        let l = Interval::new(1.0, E).ln().unwrap();
        assert!(l.lo() <= 0.0 && l.hi() >= 1.0);
        assert!(l.width() <= 1.0 + 1e-15);
    }

    #[test]
    fn abs_straddling_zero() {
        assert_eq!(Interval::new(-3.0, 2.0).abs(), Interval::new(0.0, 3.0));
    }

    #[test]
    fn domain_violations() {
        assert!(Interval::new(0.0, 1.0).ln().is_err());
        assert!(Interval::new(-1.0, 1.0).sqrt().is_err());
        assert!(Interval::new(1.0, 2.0).tan().is_err());
        assert!(Interval::new(-1.0, 1.0).tan().is_ok());
    }

    #[test]
    fn pow_examples() {
        let r = Interval::new(4.0, 9.0).pow(Interval::point(0.5)).unwrap();
        assert!(r.contains(2.0) && r.contains(3.0));
        assert!(r.width() <= 1.0 + 1e-14);
        let r = Interval::point(2.0).pow(Interval::new(1.0, 2.0)).unwrap();
        assert!(r.contains(2.0) && r.contains(4.0));
        assert!(r.width() <= 2.0 + 1e-14);
        assert!(matches!(
            Interval::new(0.0, 1.0).pow(Interval::ONE),
            Err(IntervalError::DomainViolation { .. })
        ));
    }

    #[test]
    fn pi_enclosure() {
        let p = Interval::pi();
        assert!(p.lo() < p.hi());
        assert_eq!(p.lo(), PI);
        let s = p.sin().unwrap();
        assert!(s.contains_zero());
    }

    #[test]
    fn point_widths_stay_within_four_ulps() {
        for &x in &[0.3, 1.7, 2.5, 10.0, 123.456] {
            let v = Interval::point(x);
            let checks = [
                (x.sin(), v.sin().unwrap()),
                (x.cos(), v.cos().unwrap()),
                (x.exp(), v.exp().unwrap()),
                (x.ln(), v.ln().unwrap()),
                (x.sqrt(), v.sqrt().unwrap()),
                (x + x, v + v),
                (x * x, v * v),
            ];
            for (m, r) in checks {
                assert!(r.hi() - r.lo() <= 4.0 * ulp(m), "x={x} m={m} r={r:?}");
            }
        }
    }

    #[test]
    fn parse_forms() {
        let c: Interval = "0.15".parse().unwrap();
        assert!(c.contains(0.15) && c.lo() < 0.15 && c.hi() > 0.15);
        let a: Interval = "1.0:1.0001".parse().unwrap();
        assert_eq!((a.lo(), a.hi()), (1.0, 1.0001));
        assert!("2:1".parse::<Interval>().is_err());
    }

    #[test]
    fn sign_outcome_of_enclosure() {
        assert_eq!(SignOutcome::of(Interval::new(1e-300, 1.0)), SignOutcome::AllPositive);
        assert_eq!(SignOutcome::of(Interval::new(-2.0, -1.0)), SignOutcome::AllNegative);
        assert_eq!(SignOutcome::of(Interval::new(0.0, 1.0)), SignOutcome::Indeterminate);
    }

    #[test]
    fn bisect_shares_midpoint() {
        let (a, b) = Interval::new(0.0, 1.0).bisect().unwrap();
        assert_eq!(a.hi(), b.lo());
        assert!(Interval::point(1.0).bisect().is_none());
    }
}
