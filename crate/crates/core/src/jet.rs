//! Order-4 Taylor arithmetic over intervals.
//!
//! A [`Jet4`] stores normalized Taylor coefficients `c_k = f^(k)(y) / k!`,
//! which keeps the composition rules short (Cauchy products and the usual
//! power-series recurrences). [`Jet4::d`] converts back to derivatives.

use std::ops::{Add, Mul, Neg, Sub};

use crate::interval::{Interval, IntervalError};

const ORDER: usize = 4;
const FACT: [f64; ORDER + 1] = [1.0, 1.0, 2.0, 6.0, 24.0];

/// Value and derivatives of orders 1 to 4 of a function of `y`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Jet4 {
    c: [Interval; ORDER + 1],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JetOp {
    Add,
    Sub,
    Mul,
    Div,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum JetFn {
    Sin,
    Cos,
    Tan,
    Exp,
    Log,
    Sqrt,
    Abs,
    PowConst(f64),
    Pow(Interval),
}

impl Jet4 {
    pub fn constant(x: Interval) -> Self {
        let mut c = [Interval::ZERO; ORDER + 1];
        c[0] = x;
        Jet4 { c }
    }

    /// The identity function at `y`.
    pub fn variable(y: Interval) -> Self {
        let mut c = [Interval::ZERO; ORDER + 1];
        c[0] = y;
        c[1] = Interval::ONE;
        Jet4 { c }
    }

    /// Builds a jet from derivatives `f, f', f'', f''', f''''`.
    pub fn from_derivatives(d: [Interval; ORDER + 1]) -> Self {
        let mut c = d;
        for k in 2..=ORDER {
            c[k] = d[k].div_f64(FACT[k]).expect("nonzero factorial");
        }
        Jet4 { c }
    }

    /// `k`-th derivative, `k <= 4`.
    pub fn d(&self, k: usize) -> Interval {
        self.c[k].mul_f64(FACT[k])
    }

    pub fn value(&self) -> Interval {
        self.c[0]
    }

    pub fn coefficients(&self) -> &[Interval; ORDER + 1] {
        &self.c
    }

    pub fn checked(self, what: &'static str) -> Result<Self, IntervalError> {
        for x in &self.c {
            x.checked(what)?;
        }
        Ok(self)
    }

    fn scale(&self, s: Interval) -> Jet4 {
        Jet4 {
            c: self.c.map(|x| x * s),
        }
    }

    pub fn div(&self, rhs: &Jet4) -> Result<Jet4, IntervalError> {
        let b0 = rhs.c[0];
        if b0.contains_zero() {
            return Err(IntervalError::DivisionByZeroInterval(b0));
        }
        let mut w = [Interval::ZERO; ORDER + 1];
        for k in 0..=ORDER {
            let mut acc = self.c[k];
            for j in 1..=k {
                acc = acc - rhs.c[j] * w[k - j];
            }
            w[k] = acc.div(b0)?;
        }
        Jet4 { c: w }.checked("div")
    }

    pub fn recip(&self) -> Result<Jet4, IntervalError> {
        Jet4::constant(Interval::ONE).div(self)
    }

    pub fn sqr(&self) -> Jet4 {
        self.clone() * self.clone()
    }

    pub fn exp(&self) -> Result<Jet4, IntervalError> {
        let mut w = [Interval::ZERO; ORDER + 1];
        w[0] = self.c[0].exp()?;
        for k in 1..=ORDER {
            let mut acc = Interval::ZERO;
            for j in 1..=k {
                acc = acc + self.c[j].mul_f64(j as f64) * w[k - j];
            }
            w[k] = acc.div_f64(k as f64)?;
        }
        Jet4 { c: w }.checked("exp")
    }

    pub fn ln(&self) -> Result<Jet4, IntervalError> {
        let a0 = self.c[0];
        let mut w = [Interval::ZERO; ORDER + 1];
        w[0] = a0.ln()?;
        for k in 1..=ORDER {
            let mut acc = Interval::ZERO;
            for j in 1..k {
                acc = acc + w[j].mul_f64(j as f64) * self.c[k - j];
            }
            w[k] = (self.c[k] - acc.div_f64(k as f64)?).div(a0)?;
        }
        Jet4 { c: w }.checked("log")
    }

    pub fn sin_cos(&self) -> Result<(Jet4, Jet4), IntervalError> {
        let mut s = [Interval::ZERO; ORDER + 1];
        let mut c = [Interval::ZERO; ORDER + 1];
        s[0] = self.c[0].sin()?;
        c[0] = self.c[0].cos()?;
        for k in 1..=ORDER {
            let mut as_ = Interval::ZERO;
            let mut ac = Interval::ZERO;
            for j in 1..=k {
                let ja = self.c[j].mul_f64(j as f64);
                as_ = as_ + ja * c[k - j];
                ac = ac + ja * s[k - j];
            }
            s[k] = as_.div_f64(k as f64)?;
            c[k] = -ac.div_f64(k as f64)?;
        }
        Ok((Jet4 { c: s }, Jet4 { c }))
    }

    pub fn sin(&self) -> Result<Jet4, IntervalError> {
        Ok(self.sin_cos()?.0)
    }

    pub fn cos(&self) -> Result<Jet4, IntervalError> {
        Ok(self.sin_cos()?.1)
    }

    pub fn tan(&self) -> Result<Jet4, IntervalError> {
        // Rejects arguments spanning a pole before dividing.
        self.c[0].tan()?;
        let (s, c) = self.sin_cos()?;
        s.div(&c)
    }

    pub fn sqrt(&self) -> Result<Jet4, IntervalError> {
        let mut w = [Interval::ZERO; ORDER + 1];
        w[0] = self.c[0].sqrt()?;
        let two_w0 = w[0].mul_f64(2.0);
        for k in 1..=ORDER {
            let mut acc = self.c[k];
            for j in 1..k {
                acc = acc - w[j] * w[k - j];
            }
            w[k] = acc.div(two_w0)?;
        }
        Jet4 { c: w }.checked("sqrt")
    }

    pub fn abs(&self) -> Result<Jet4, IntervalError> {
        let a0 = self.c[0];
        if a0.is_positive() {
            Ok(*self)
        } else if a0.is_negative() {
            Ok(-*self)
        } else {
            Err(IntervalError::DomainViolation {
                func: "abs",
                arg: a0,
            })
        }
    }

    /// `self^p = exp(p log self)`.
    pub fn powf(&self, p: Interval) -> Result<Jet4, IntervalError> {
        self.ln()?.scale(p).exp()
    }
}

impl Add for Jet4 {
    type Output = Jet4;
    fn add(self, rhs: Jet4) -> Jet4 {
        let mut c = self.c;
        for (x, y) in c.iter_mut().zip(rhs.c) {
            *x = *x + y;
        }
        Jet4 { c }
    }
}

impl Sub for Jet4 {
    type Output = Jet4;
    fn sub(self, rhs: Jet4) -> Jet4 {
        let mut c = self.c;
        for (x, y) in c.iter_mut().zip(rhs.c) {
            *x = *x - y;
        }
        Jet4 { c }
    }
}

impl Mul for Jet4 {
    type Output = Jet4;
    fn mul(self, rhs: Jet4) -> Jet4 {
        let mut w = [Interval::ZERO; ORDER + 1];
        for (k, wk) in w.iter_mut().enumerate() {
            let mut acc = Interval::ZERO;
            for j in 0..=k {
                acc = acc + self.c[j] * rhs.c[k - j];
            }
            *wk = acc;
        }
        Jet4 { c: w }
    }
}

impl Neg for Jet4 {
    type Output = Jet4;
    fn neg(self) -> Jet4 {
        Jet4 {
            c: self.c.map(|x| -x),
        }
    }
}

pub fn jet_variable(y: Interval) -> Jet4 {
    Jet4::variable(y)
}

pub fn jet_combine(op: JetOp, a: &Jet4, b: &Jet4) -> Result<Jet4, IntervalError> {
    match op {
        JetOp::Add => (*a + *b).checked("add"),
        JetOp::Sub => (*a - *b).checked("sub"),
        JetOp::Mul => (*a * *b).checked("mul"),
        JetOp::Div => a.div(b),
    }
}

pub fn jet_elem(f: JetFn, a: &Jet4) -> Result<Jet4, IntervalError> {
    match f {
        JetFn::Sin => a.sin(),
        JetFn::Cos => a.cos(),
        JetFn::Tan => a.tan(),
        JetFn::Exp => a.exp(),
        JetFn::Log => a.ln(),
        JetFn::Sqrt => a.sqrt(),
        JetFn::Abs => a.abs(),
        JetFn::PowConst(p) => a.powf(Interval::point(p)),
        JetFn::Pow(p) => a.powf(p),
    }
}

/// Arithmetic shared by plain intervals and jets, so integrands can be
/// written once and evaluated either way.
pub trait Scalar:
    Clone + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    fn constant(c: Interval) -> Self;
    fn value(&self) -> Interval;
    fn div(&self, rhs: &Self) -> Result<Self, IntervalError>;
    fn recip(&self) -> Result<Self, IntervalError>;
    fn sqr(&self) -> Self;
    fn exp(&self) -> Result<Self, IntervalError>;
    fn ln(&self) -> Result<Self, IntervalError>;
    fn sin_cos(&self) -> Result<(Self, Self), IntervalError>;
    fn sqrt(&self) -> Result<Self, IntervalError>;
    fn abs(&self) -> Result<Self, IntervalError>;
    fn powf(&self, p: Interval) -> Result<Self, IntervalError>;

    /// `self^p` for a base that may touch zero, valid when `p > 0`.
    /// Only plain intervals support this; jets are not differentiable there.
    fn pow_from_zero(&self, p: Interval) -> Result<Self, IntervalError>;

    /// Intersects the value with `[0, inf)`. Callers use this only where the
    /// exact value is known to be nonnegative on the evaluation domain.
    fn assume_nonneg(self) -> Result<Self, IntervalError>;

    fn scale(&self, s: Interval) -> Self {
        self.clone() * Self::constant(s)
    }
}

impl Scalar for Interval {
    fn constant(c: Interval) -> Self {
        c
    }
    fn value(&self) -> Interval {
        *self
    }
    fn div(&self, rhs: &Self) -> Result<Self, IntervalError> {
        Interval::div(*self, *rhs)
    }
    fn recip(&self) -> Result<Self, IntervalError> {
        Interval::recip(*self)
    }
    fn sqr(&self) -> Self {
        Interval::sqr(*self)
    }
    fn exp(&self) -> Result<Self, IntervalError> {
        Interval::exp(*self)
    }
    fn ln(&self) -> Result<Self, IntervalError> {
        Interval::ln(*self)
    }
    fn sin_cos(&self) -> Result<(Self, Self), IntervalError> {
        Ok((Interval::sin(*self)?, Interval::cos(*self)?))
    }
    fn sqrt(&self) -> Result<Self, IntervalError> {
        Interval::sqrt(*self)
    }
    fn abs(&self) -> Result<Self, IntervalError> {
        Ok(Interval::abs(*self))
    }
    fn powf(&self, p: Interval) -> Result<Self, IntervalError> {
        Interval::pow(*self, p)
    }
    fn pow_from_zero(&self, p: Interval) -> Result<Self, IntervalError> {
        if self.lo() > 0.0 {
            return Interval::pow(*self, p);
        }
        if self.lo() < 0.0 || !(p.lo() > 0.0) {
            return Err(IntervalError::DomainViolation {
                func: "pow",
                arg: *self,
            });
        }
        if self.hi() == 0.0 {
            return Ok(Interval::ZERO);
        }
        let top = Interval::point(self.hi()).pow(p)?;
        Ok(Interval::new(0.0, top.hi()))
    }
    fn assume_nonneg(self) -> Result<Self, IntervalError> {
        self.intersect(Interval::new(0.0, f64::MAX))
            .ok_or(IntervalError::DomainViolation {
                func: "nonnegative",
                arg: self,
            })
    }
}

impl Scalar for Jet4 {
    fn constant(c: Interval) -> Self {
        Jet4::constant(c)
    }
    fn value(&self) -> Interval {
        self.c[0]
    }
    fn div(&self, rhs: &Self) -> Result<Self, IntervalError> {
        Jet4::div(self, rhs)
    }
    fn recip(&self) -> Result<Self, IntervalError> {
        Jet4::recip(self)
    }
    fn sqr(&self) -> Self {
        Jet4::sqr(self)
    }
    fn exp(&self) -> Result<Self, IntervalError> {
        Jet4::exp(self)
    }
    fn ln(&self) -> Result<Self, IntervalError> {
        Jet4::ln(self)
    }
    fn sin_cos(&self) -> Result<(Self, Self), IntervalError> {
        Jet4::sin_cos(self)
    }
    fn sqrt(&self) -> Result<Self, IntervalError> {
        Jet4::sqrt(self)
    }
    fn abs(&self) -> Result<Self, IntervalError> {
        Jet4::abs(self)
    }
    fn powf(&self, p: Interval) -> Result<Self, IntervalError> {
        Jet4::powf(self, p)
    }
    fn pow_from_zero(&self, p: Interval) -> Result<Self, IntervalError> {
        Jet4::powf(self, p)
    }
    fn assume_nonneg(mut self) -> Result<Self, IntervalError> {
        self.c[0] = self.c[0].assume_nonneg()?;
        Ok(self)
    }
    fn scale(&self, s: Interval) -> Self {
        Jet4::scale(self, s)
    }
}
