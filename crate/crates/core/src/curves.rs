//! Boundary curves: the bump-sine curve used by the convexity proof and
//! ellipses, with derivatives at interval or jet arguments.
//!
//! The bump curve is `z(x) = (2E(x) - 1, sin(x - C))` with
//! `E(x) = exp(-x^2 / (pi^2 - x^2))`. Its first component has derivatives
//! `d_k(x) E(x) / (pi^2 - x^2)^(2k)` for the integer polynomials `d_k` below.
//! Near `x = ±pi` that formula cannot be evaluated with intervals, so
//! [`hull_enclosure`] bounds the derivatives there using monotonicity.

use std::f64::consts::PI;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::interval::{Interval, IntervalError};
use crate::jet::Scalar;
use crate::sign::{validate_sign, ExpectedSign, SignTask, DEFAULT_MIN_WIDTH};

/// Width of the endpoint zones `[-pi, -pi + EPS]` and `[pi - EPS, pi]`.
pub const EPS: f64 = 1.0 / 128.0;

/// Float enclosure of the zone `[pi - EPS, pi]`.
pub fn plus_zone() -> Interval {
    Interval::new((PI - EPS).next_down(), PI.next_up())
}

/// Float enclosure of the zone `[-pi, -pi + EPS]`.
pub fn minus_zone() -> Interval {
    -plus_zone()
}

/// Reach past `±pi` accepted by [`hull_enclosure`]; the overhang wraps
/// around to the opposite zone.
const WRAP_SLACK: f64 = 1e-6;

/// Point well inside each zone where the direct formula is evaluable but
/// already indistinguishable from the limit at `±pi`.
const NEAR_PI: f64 = PI - 1e-4;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CurveFamily {
    Bump { c: Interval },
    Ellipse { r1: Interval, r2: Interval },
}

impl CurveFamily {
    pub fn bump(c: Interval) -> Self {
        CurveFamily::Bump { c }
    }

    pub fn ellipse(r1: f64, r2: f64) -> Result<Self> {
        if !(r1 > 0.0 && r2 > 0.0 && r1.is_finite() && r2.is_finite()) {
            return Err(Error::InvalidInput(format!("semiaxes must be positive, got {r1}, {r2}")));
        }
        Ok(CurveFamily::Ellipse {
            r1: Interval::point(r1),
            r2: Interval::point(r2),
        })
    }

    /// `d^k z / dx^k` at `u` for every `k <= kmax`.
    pub fn derivs_upto<S: Scalar>(&self, kmax: usize, u: &S) -> Result<Vec<[S; 2]>> {
        match *self {
            CurveFamily::Bump { c } => {
                let z1 = bump_z1_upto(kmax, u)?;
                let (s, co) = (u.clone() - S::constant(c)).sin_cos()?;
                Ok(z1
                    .into_iter()
                    .enumerate()
                    .map(|(k, a)| [a, cycle(k, s.clone(), co.clone())])
                    .collect())
            }
            CurveFamily::Ellipse { .. } => (0..=kmax).map(|k| self.deriv(k, u)).collect(),
        }
    }

    /// Both components of `d^k z / dx^k` at `u`. For the bump curve `u` must
    /// stay strictly inside `(-pi, pi)`.
    pub fn deriv<S: Scalar>(&self, k: usize, u: &S) -> Result<[S; 2]> {
        match *self {
            CurveFamily::Bump { c } => {
                let z1 = bump_z1(k, u)?;
                let (s, co) = (u.clone() - S::constant(c)).sin_cos()?;
                Ok([z1, cycle(k, s, co)])
            }
            CurveFamily::Ellipse { r1, r2 } => {
                let (s, co) = u.sin_cos()?;
                let x = cycle(k + 1, s.clone(), co.clone()).scale(r1);
                let y = cycle(k, s, co).scale(r2);
                Ok([x, y])
            }
        }
    }
}

/// `d^k/dx^k sin` expressed through `sin` and `cos` of the same argument.
fn cycle<S: Scalar>(k: usize, s: S, c: S) -> S {
    match k % 4 {
        0 => s,
        1 => c,
        2 => -s,
        _ => -c,
    }
}

const PI_POWERS: usize = 19;

fn pi_powers() -> &'static [Interval; PI_POWERS] {
    static P: OnceLock<[Interval; PI_POWERS]> = OnceLock::new();
    P.get_or_init(|| {
        let mut p = [Interval::ONE; PI_POWERS];
        for k in 1..PI_POWERS {
            p[k] = p[k - 1] * Interval::pi();
        }
        p
    })
}

/// `d_k(x) = scale * pi^2 * x^odd * sum_j coef_j pi^(2(n-j)) x^(2j)`.
struct DPoly {
    scale: f64,
    odd: bool,
    coef: &'static [f64],
}

const D_POLYS: [DPoly; 6] = [
    DPoly { scale: -4.0, odd: true, coef: &[1.0] },
    DPoly { scale: -4.0, odd: false, coef: &[1.0, 0.0, -3.0] },
    DPoly { scale: -8.0, odd: true, coef: &[3.0, -10.0, 3.0, 6.0] },
    DPoly { scale: -8.0, odd: false, coef: &[3.0, -6.0, -58.0, 132.0, -45.0, -30.0] },
    DPoly {
        scale: -16.0,
        odd: true,
        coef: &[15.0, -170.0, 264.0, 300.0, -765.0, 270.0, 90.0],
    },
    DPoly {
        scale: -16.0,
        odd: false,
        coef: &[15.0, -270.0, -1005.0, 7102.0, -9645.0, -930.0, 8505.0, -3150.0, -630.0],
    },
];

/// Evaluates `d_k`, `1 <= k <= 6`, by Horner's rule in `x^2`.
pub fn d_poly<S: Scalar>(k: usize, x: &S) -> S {
    assert!((1..=6).contains(&k), "d_k is tabulated for k = 1..6");
    let p = &D_POLYS[k - 1];
    let pw = pi_powers();
    let n = p.coef.len() - 1;
    let t = x.sqr();
    let mut acc = S::constant(Interval::point(p.coef[n]));
    for j in (0..n).rev() {
        acc = acc * t.clone() + S::constant(pw[2 * (n - j)].mul_f64(p.coef[j]));
    }
    if p.odd {
        acc = acc * x.clone();
    }
    acc.scale(pw[2].mul_f64(p.scale))
}

/// `k_C(x) = 4 pi^2 ((pi^4 - 3x^4) cos(C - x) - x (pi^2 - x^2)^2 sin(C - x))`,
/// the curvature numerator of the bump curve divided by `E / (pi^2 - x^2)^4`.
pub fn k_poly<S: Scalar>(c: Interval, x: &S) -> Result<S> {
    let pw = pi_powers();
    let x2 = x.sqr();
    let (s, co) = (S::constant(c) - x.clone()).sin_cos()?;
    let a = S::constant(pw[4]) - x2.sqr().scale(Interval::point(3.0));
    let q = S::constant(pw[2]) - x2;
    let b = x.clone() * q.sqr();
    Ok((a * co - b * s).scale(pw[2].mul_f64(4.0)))
}

fn pi_sq_minus<S: Scalar>(u: &S) -> Result<S> {
    let q = S::constant(pi_powers()[2]) - u.sqr();
    if !q.value().is_positive() {
        return Err(IntervalError::DomainViolation {
            func: "bump curve direct formula",
            arg: u.value(),
        }
        .into());
    }
    Ok(q)
}

/// `d^k z1 / dx^k` at `u` by the closed form, `k <= 6`.
pub fn bump_z1<S: Scalar>(k: usize, u: &S) -> Result<S> {
    let q = pi_sq_minus(u)?;
    let e = (-(u.sqr().div(&q)?)).exp()?;
    if k == 0 {
        return Ok(e.scale(Interval::point(2.0)) - S::constant(Interval::ONE));
    }
    let mut qk = q.sqr();
    for _ in 1..k {
        qk = qk * q.sqr();
    }
    Ok((d_poly(k, u) * e).div(&qk)?)
}

/// `d^k z1 / dx^k` at `u` for every `k <= kmax`, sharing the exponential.
pub fn bump_z1_upto<S: Scalar>(kmax: usize, u: &S) -> Result<Vec<S>> {
    let q = pi_sq_minus(u)?;
    let e = (-(u.sqr().div(&q)?)).exp()?;
    let q2 = q.sqr();
    let mut out = Vec::with_capacity(kmax + 1);
    out.push(e.scale(Interval::point(2.0)) - S::constant(Interval::ONE));
    let mut e_over = e;
    for k in 1..=kmax {
        e_over = e_over.div(&q2)?;
        out.push(d_poly(k, u) * e_over.clone());
    }
    Ok(out)
}

/// The bump exponential `E(x) = exp(1 - 1/(1 - (x/pi)^2))`.
pub fn bump_exp<S: Scalar>(u: &S) -> Result<S> {
    let q = pi_sq_minus(u)?;
    Ok((-(u.sqr().div(&q)?)).exp()?)
}

/// Shifts `x` by a multiple of `2 pi` so its midpoint lies in `[-pi, pi]`.
pub fn reduce_periodic(x: Interval) -> Interval {
    let k = (x.mid() / (2.0 * PI)).round();
    if k == 0.0 {
        x
    } else {
        x - Interval::two_pi().mul_f64(k)
    }
}

/// Interval enclosure of `d^k z / dx^k` over `x` by the direct formula.
pub fn curve_deriv(c: &CurveFamily, k: usize, x: Interval, periodic: bool) -> Result<(Interval, Interval)> {
    if k > 6 {
        return Err(Error::InvalidInput(format!("derivative order {k} exceeds 6")));
    }
    let x = if periodic { reduce_periodic(x) } else { x };
    let [a, b] = c.deriv(k, &x)?;
    Ok((a, b))
}

/// Polynomial whose sign on a domain is certified.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CurvePoly {
    KC(Interval),
    D(usize),
}

pub fn curve_poly(p: CurvePoly, x: Interval) -> Result<Interval> {
    match p {
        CurvePoly::KC(c) => k_poly(c, &x),
        CurvePoly::D(k) => Ok(d_poly(k, &x)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Zone {
    Minus,
    Plus,
}

impl Zone {
    pub fn interval(self) -> Interval {
        match self {
            Zone::Minus => minus_zone(),
            Zone::Plus => plus_zone(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Zone::Minus => "minus",
            Zone::Plus => "plus",
        }
    }
}

/// Sign of `d_k` on an endpoint zone: even orders are positive on both zones,
/// odd orders positive near `-pi` and negative near `pi`.
pub fn zone_sign(k: usize, zone: Zone) -> ExpectedSign {
    if k % 2 == 0 || zone == Zone::Minus {
        ExpectedSign::Positive
    } else {
        ExpectedSign::Negative
    }
}

/// One of the polynomial sign facts backing the endpoint enclosures.
#[derive(Debug, Clone, PartialEq)]
pub struct CurveSignTask {
    pub name: String,
    pub poly: CurvePoly,
    pub domain: Interval,
    pub expected: ExpectedSign,
}

impl CurveSignTask {
    pub fn run(&self, min_width: f64) -> crate::sign::SignReport {
        let poly = self.poly;
        let f = move |x: Interval| curve_poly(poly, x);
        validate_sign(&SignTask {
            f: &f,
            domain: self.domain,
            min_width,
            expected: self.expected,
        })
    }
}

/// The curvature positivity facts for `C = 0.15, 0.45` and the twelve zone
/// sign facts for `d_1..d_6`.
pub fn curve_sign_tasks() -> Vec<CurveSignTask> {
    let whole = Interval::new(-PI.next_up(), PI.next_up());
    let mut v = Vec::new();
    for c in ["0.15", "0.45"] {
        v.push(CurveSignTask {
            name: format!("kC:{c}"),
            poly: CurvePoly::KC(c.parse().expect("literal")),
            domain: whole,
            expected: ExpectedSign::Positive,
        });
    }
    for k in 1..=6 {
        for zone in [Zone::Minus, Zone::Plus] {
            v.push(zone_task(k, zone));
        }
    }
    v
}

fn zone_task(k: usize, zone: Zone) -> CurveSignTask {
    CurveSignTask {
        name: format!("d{k}:{}", zone.name()),
        poly: CurvePoly::D(k),
        domain: zone.interval(),
        expected: zone_sign(k, zone),
    }
}

/// Whether the sign of `d_k` on `zone` has been certified. Computed once.
fn zone_fact(k: usize, zone: Zone) -> bool {
    static FACTS: OnceLock<[[bool; 2]; 7]> = OnceLock::new();
    let facts = FACTS.get_or_init(|| {
        let mut f = [[false; 2]; 7];
        for (k, row) in f.iter_mut().enumerate().skip(1) {
            for (i, zone) in [Zone::Minus, Zone::Plus].into_iter().enumerate() {
                let r = zone_task(k, zone).run(DEFAULT_MIN_WIDTH);
                row[i] = r.outcome == zone_sign(k, zone).outcome();
            }
        }
        f
    });
    facts[k][(zone == Zone::Plus) as usize]
}

fn z1_point(k: usize, x: f64) -> Option<Interval> {
    bump_z1(k, &Interval::point(x)).ok()
}

fn z1_limit(k: usize) -> Interval {
    if k == 0 {
        Interval::point(-1.0)
    } else {
        Interval::ZERO
    }
}

/// Enclosure of `d^k z1 / dx^k` over `x` inside an endpoint zone, `k <= 5`.
///
/// On a zone the `k`-th derivative is monotone because `d_{k+1}` has a fixed
/// sign there, so the range over `[a, b]` is the hull of the values at `a`
/// and `b`. Values at points too close to `±pi` for the direct formula are
/// replaced by the limit at `±pi` together with the value at a point slightly
/// further in, which brackets them by the same monotonicity.
pub fn hull_enclosure(curve: &CurveFamily, k: usize, x: Interval) -> Result<Interval> {
    if !matches!(curve, CurveFamily::Bump { .. }) || k > 5 {
        return Err(Error::ZoneViolation(x));
    }
    let (zone, s) = if x.lo() >= plus_zone().lo() && x.hi() <= PI + WRAP_SLACK {
        (Zone::Plus, 1.0)
    } else if x.hi() <= minus_zone().hi() && x.lo() >= -PI - WRAP_SLACK {
        (Zone::Minus, -1.0)
    } else {
        return Err(Error::ZoneViolation(x));
    };
    let other = if zone == Zone::Plus { Zone::Minus } else { Zone::Plus };
    if !zone_fact(k + 1, zone) {
        return Err(Error::ZoneViolation(x));
    }
    // Work in the orientation where the zone end sits at +pi.
    let (inner, outer) = if s > 0.0 { (x.lo(), x.hi()) } else { (-x.hi(), -x.lo()) };
    let at = |t: f64| z1_point(k, s * t);
    let limit = z1_limit(k);
    let mut h = match at(inner) {
        Some(v) => v,
        None if NEAR_PI < inner => limit.hull(at(NEAR_PI).ok_or(Error::ZoneViolation(x))?),
        None => return Err(Error::ZoneViolation(x)),
    };
    match at(outer) {
        Some(v) => h = h.hull(v),
        None => {
            h = h.hull(limit);
            if outer > PI {
                if !zone_fact(k + 1, other) {
                    return Err(Error::ZoneViolation(x));
                }
                h = h.hull(z1_point(k, -s * NEAR_PI).ok_or(Error::ZoneViolation(x))?);
            }
        }
    }
    Ok(h)
}

/// Enclosure of `d^k z1 / dx^k` over any `x ⊆ [-pi, pi]`, splitting off the
/// endpoint zones and using [`hull_enclosure`] there.
pub fn bump_z1_enclosure(k: usize, x: Interval) -> Result<Interval> {
    let curve = CurveFamily::bump(Interval::ZERO);
    if let Ok(v) = bump_z1(k, &x) {
        return Ok(v);
    }
    let mz = minus_zone();
    let pz = plus_zone();
    let mut acc: Option<Interval> = None;
    let mut add = |v: Interval| acc = Some(acc.map_or(v, |a| a.hull(v)));
    if let Some(part) = x.intersect(Interval::new(-PI - WRAP_SLACK, mz.hi())) {
        add(hull_enclosure(&curve, k, part)?);
    }
    if let Some(part) = x.intersect(Interval::new(mz.hi(), pz.lo())) {
        add(bump_z1(k, &part)?);
    }
    if let Some(part) = x.intersect(Interval::new(pz.lo(), PI + WRAP_SLACK)) {
        add(hull_enclosure(&curve, k, part)?);
    }
    acc.ok_or(Error::ZoneViolation(x))
}

fn robust_deriv(c: &CurveFamily, k: usize, x: Interval) -> Result<(Interval, Interval)> {
    match *c {
        CurveFamily::Bump { c: phase } => {
            let x = reduce_periodic(x);
            let z1 = bump_z1_enclosure(k, x)?;
            let (s, co) = Scalar::sin_cos(&(x - phase))?;
            Ok((z1, cycle(k, s, co)))
        }
        CurveFamily::Ellipse { .. } => curve_deriv(c, k, x, false),
    }
}

/// Numerator `-z1'' z2' + z2'' z1'` of the curvature over `x`.
pub fn curvature_numerator(c: &CurveFamily, x: Interval) -> Result<Interval> {
    let (a1, a2) = robust_deriv(c, 1, x)?;
    let (b1, b2) = robust_deriv(c, 2, x)?;
    Ok(b2 * a1 - b1 * a2)
}

/// Signed curvature over `x`.
pub fn curvature(c: &CurveFamily, x: Interval) -> Result<Interval> {
    let (a1, a2) = robust_deriv(c, 1, x)?;
    let num = curvature_numerator(c, x)?;
    let speed2 = a1.sqr() + a2.sqr();
    if !speed2.is_positive() {
        return Err(Error::DegenerateTangent(speed2));
    }
    Ok(num.div(speed2 * speed2.sqrt()?)?)
}

/// Axis ratio `R = (R1^2 - R2^2)/(R1^2 + R2^2)` of an ellipse, in `(0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisRatio(Interval);

impl AxisRatio {
    pub fn new(r: Interval) -> Result<Self> {
        if r.lo() > 0.0 && r.hi() < 1.0 {
            Ok(AxisRatio(r))
        } else {
            Err(Error::InvalidInput(format!("axis ratio {r} not inside (0, 1)")))
        }
    }

    pub fn from_semiaxes(r1: f64, r2: f64) -> Result<Self> {
        let a = Interval::point(r1).sqr();
        let b = Interval::point(r2).sqr();
        let r = (a - b).div(a + b)?;
        AxisRatio::new(if r.hi() < 0.0 { -r } else { r })
    }

    pub fn value(self) -> Interval {
        self.0
    }
}
