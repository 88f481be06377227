//! Integrands for the time derivative of curvature at `x = pi` on the bump
//! curve, and the bound on the part of the integral near the singularity.
//!
//! With `y` the integration variable, write
//! `D_k = z^(k)(pi) - z^(k)(pi - y)`, `S_k = z^(k)(pi - y)` and `N = |D_0|`.
//! Each target yields a pair `(A, B)`, the integrands of `z_xt` and `z_xxt`,
//! and the scalar integrand is `-<A, z_xx(pi)^⊥> + <B, z_x(pi)^⊥>`, i.e. the
//! curvature derivative multiplied by `|z_x|^3`, with velocity constants
//! dropped. The algebra is written once over [`KernelAlgebra`] so the same
//! expressions produce interval values, Taylor jets and the majorants used on
//! the window `|y| <= w`.

pub mod rotation;

pub use rotation::{ellipse_rotation_check, ellipse_rotation_integrand, ellipse_rotation_report, RotationReport};

use std::f64::consts::PI;
use std::sync::atomic::{AtomicUsize, Ordering};

use crate::curves::{self, CurveFamily, EPS};
use crate::error::{Error, Result};
use crate::interval::{Interval, IntervalError};
use crate::jet::Scalar;
use crate::quadrature::ScalarIntegrand;

pub const ALPHA_CR: f64 = 0.04;
pub const ALPHA_BR: f64 = 1.95;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Regime {
    Vortex,
    SmallAlpha,
    BigAlpha,
    VeryBigAlpha,
}

impl Regime {
    pub fn name(self) -> &'static str {
        match self {
            Regime::Vortex => "vortex",
            Regime::SmallAlpha => "small_alpha",
            Regime::BigAlpha => "big_alpha",
            Regime::VeryBigAlpha => "very_big_alpha",
        }
    }

    pub fn default_target(self) -> Target {
        match self {
            Regime::Vortex | Regime::BigAlpha => Target::IScaled,
            Regime::SmallAlpha => Target::DIScaled,
            Regime::VeryBigAlpha => Target::ITildeScaled,
        }
    }
}

/// `I` (the curvature derivative), its `alpha` derivative, or `I` with the
/// counter-terms that keep it defined up to `alpha = 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Target {
    IScaled,
    DIScaled,
    ITildeScaled,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegrandSpec {
    pub regime: Regime,
    pub alpha: Interval,
    pub curve: CurveFamily,
    pub target: Target,
}

impl IntegrandSpec {
    pub fn new(regime: Regime, alpha: Interval, c: Interval) -> Result<Self> {
        IntegrandSpec {
            regime,
            alpha,
            curve: CurveFamily::bump(c),
            target: regime.default_target(),
        }
        .validated()
    }

    /// Same curve and `alpha`, different target. The vortex kernel only has
    /// the plain target.
    pub fn with_target(self, target: Target) -> Result<Self> {
        IntegrandSpec { target, ..self }.validated()
    }

    fn validated(self) -> Result<Self> {
        if !matches!(self.curve, CurveFamily::Bump { .. }) {
            return Err(Error::InvalidInput("curvature targets need the bump curve".into()));
        }
        if self.regime == Regime::Vortex && self.target != Target::IScaled {
            return Err(Error::InvalidInput("vortex kernel has only the I target".into()));
        }
        if self.alpha.lo() < 0.0 || self.alpha.hi() >= 2.0 {
            return Err(Error::InvalidInput(format!("alpha {} outside [0, 2)", self.alpha)));
        }
        Ok(self)
    }

    pub fn phase(&self) -> Interval {
        match self.curve {
            CurveFamily::Bump { c } => c,
            CurveFamily::Ellipse { .. } => unreachable!("validated"),
        }
    }
}

/// Operations the kernel expressions need.
pub trait KernelAlgebra: Clone {
    fn lift(c: Interval) -> Self;
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn scaled(&self, c: Interval) -> Self;
}

impl<S: Scalar> KernelAlgebra for S {
    fn lift(c: Interval) -> Self {
        S::constant(c)
    }
    fn plus(&self, o: &Self) -> Self {
        self.clone() + o.clone()
    }
    fn minus(&self, o: &Self) -> Self {
        self.clone() - o.clone()
    }
    fn times(&self, o: &Self) -> Self {
        self.clone() * o.clone()
    }
    fn scaled(&self, c: Interval) -> Self {
        Scalar::scale(self, c)
    }
}

type V2<T> = [T; 2];

fn dot<T: KernelAlgebra>(a: &V2<T>, b: &V2<T>) -> T {
    a[0].times(&b[0]).plus(&a[1].times(&b[1]))
}

fn vmul<T: KernelAlgebra>(v: &V2<T>, s: &T) -> V2<T> {
    [v[0].times(s), v[1].times(s)]
}

fn vadd<T: KernelAlgebra>(a: &V2<T>, b: &V2<T>) -> V2<T> {
    [a[0].plus(&b[0]), a[1].plus(&b[1])]
}

fn vsub<T: KernelAlgebra>(a: &V2<T>, b: &V2<T>) -> V2<T> {
    [a[0].minus(&b[0]), a[1].minus(&b[1])]
}

/// Inputs of the kernel expressions at one `y`.
#[derive(Debug, Clone)]
pub struct KernelTerms<T> {
    /// `D_0 .. D_3`.
    pub d: [V2<T>; 4],
    pub s1: V2<T>,
    pub s2: V2<T>,
    /// `N^-2`.
    pub n_inv2: T,
    /// `N^-alpha`.
    pub n_alpha: T,
    /// `log N`.
    pub log_n: T,
    /// `sgn(y) |2 tan(y/2)|^(1 - alpha)`.
    pub sigma: T,
}

/// Quantities at `x = pi` that do not depend on `y`.
#[derive(Debug, Clone)]
struct Frame {
    /// `z^(k)(pi)`, `k = 0..4`.
    zp: [V2<Interval>; 5],
    a_perp: V2<Interval>,
    b_perp: V2<Interval>,
    /// Counter-terms multiplying `sigma` in the extended target.
    tilde_a: V2<Interval>,
    tilde_b: V2<Interval>,
}

fn perp(v: &V2<Interval>) -> V2<Interval> {
    [-v[1], v[0]]
}

impl Frame {
    fn new(c: Interval, alpha: Interval) -> Result<Self> {
        let (s, co) = Scalar::sin_cos(&(Interval::pi() - c))?;
        let z2 = [s, co, -s, -co, s];
        let z1 = [-Interval::ONE, Interval::ZERO, Interval::ZERO, Interval::ZERO, Interval::ZERO];
        let zp: [V2<Interval>; 5] = std::array::from_fn(|k| [z1[k], z2[k]]);
        let [a, b, cc, d] = [zp[1], zp[2], zp[3], zp[4]];
        let na2 = dot(&a, &a);
        let half = alpha.mul_f64(0.5);
        let na_a = na2.pow(-half)?;
        let na_a2 = na_a.div(na2)?;
        let na_a4 = na_a2.div(na2)?;
        let ba = dot(&b, &a);
        let bb = dot(&b, &b);
        let ca = dot(&cc, &a);
        let ap2 = alpha * (alpha + Interval::point(2.0));
        let tilde_a = vsub(&vmul(&cc, &na_a), &vmul(&b, &(alpha * ba * na_a2)));
        let coef_b = ap2 * ba.sqr() * na_a4 - alpha * (bb + ca) * na_a2;
        let tilde_b = vadd(
            &vsub(&vmul(&d, &na_a), &vmul(&cc, &(alpha.mul_f64(2.0) * ba * na_a2))),
            &vmul(&b, &coef_b),
        );
        Ok(Frame {
            zp,
            a_perp: perp(&a),
            b_perp: perp(&b),
            tilde_a,
            tilde_b,
        })
    }
}

/// The `(A, B)` integrand pair for `target`.
pub fn kernel_pair<T: KernelAlgebra>(
    regime: Regime,
    target: Target,
    alpha: Interval,
    t: &KernelTerms<T>,
    tilde: (&V2<Interval>, &V2<Interval>),
) -> (V2<T>, V2<T>) {
    let [d0, d1, d2, d3] = &t.d;
    if regime == Regime::Vortex {
        let p = dot(d0, &t.s1).times(&t.n_inv2);
        let q = dot(d0, d1).times(&t.n_inv2);
        let a = vsub(&vmul(&t.s1, &q), &vmul(d1, &p));
        let c1 = dot(d1, d1)
            .plus(&dot(d0, d2))
            .times(&t.n_inv2)
            .minus(&q.times(&q).scaled(Interval::point(2.0)));
        let b = vadd(
            &vsub(&vmul(&t.s2, &q.scaled(Interval::point(2.0))), &vmul(d2, &p)),
            &vmul(&t.s1, &c1),
        );
        return (a, b);
    }
    let al = T::lift(alpha);
    let na = &t.n_alpha;
    let na2 = na.times(&t.n_inv2);
    let na4 = na2.times(&t.n_inv2);
    let p1 = dot(d1, d0);
    let p11_p20 = dot(d1, d1).plus(&dot(d2, d0));
    let ap2 = alpha * (alpha + Interval::point(2.0));
    let p1sq_na4 = p1.times(&p1).times(&na4);
    match target {
        Target::IScaled | Target::ITildeScaled => {
            let a = vsub(&vmul(d2, na), &vmul(d1, &al.times(&p1).times(&na2)));
            let c1 = p1sq_na4.scaled(ap2).minus(&al.times(&p11_p20).times(&na2));
            let b = vadd(
                &vsub(&vmul(d3, na), &vmul(d2, &al.times(&p1).times(&na2).scaled(Interval::point(2.0)))),
                &vmul(d1, &c1),
            );
            if target == Target::IScaled {
                return (a, b);
            }
            let (ta, tb) = tilde;
            let sa = [t.sigma.scaled(ta[0]), t.sigma.scaled(ta[1])];
            let sb = [t.sigma.scaled(tb[0]), t.sigma.scaled(tb[1])];
            (vsub(&a, &sa), vsub(&b, &sb))
        }
        Target::DIScaled => {
            let one = T::lift(Interval::ONE);
            let al_l1 = al.times(&t.log_n).minus(&one);
            let na_l = na.times(&t.log_n);
            let a = vsub(&vmul(d1, &p1.times(&na2).times(&al_l1)), &vmul(d2, &na_l));
            let two_a2 = alpha.mul_f64(2.0) + Interval::point(2.0);
            let c1 = p11_p20
                .times(&na2)
                .times(&al_l1)
                .plus(&p1sq_na4.times(&T::lift(two_a2).minus(&t.log_n.scaled(ap2))));
            let c2 = p1.times(&na2).times(&al_l1).scaled(Interval::point(2.0));
            let b = vsub(&vadd(&vmul(d2, &c2), &vmul(d1, &c1)), &vmul(d3, &na_l));
            (a, b)
        }
    }
}

fn contract<T: KernelAlgebra>(a: &V2<T>, b: &V2<T>, a_perp: &V2<Interval>, b_perp: &V2<Interval>) -> T {
    let ab = a[0].scaled(b_perp[0]).plus(&a[1].scaled(b_perp[1]));
    let ba = b[0].scaled(a_perp[0]).plus(&b[1].scaled(a_perp[1]));
    ba.minus(&ab)
}

/// Evaluator for one [`IntegrandSpec`], with the `y`-independent parts
/// precomputed.
#[derive(Debug)]
pub struct KtIntegrand {
    spec: IntegrandSpec,
    frame: Frame,
    window: f64,
    window_hits: AtomicUsize,
}

impl KtIntegrand {
    pub fn new(spec: IntegrandSpec) -> Result<Self> {
        let frame = Frame::new(spec.phase(), spec.alpha)?;
        Ok(KtIntegrand {
            spec,
            frame,
            window: 0.0,
            window_hits: AtomicUsize::new(0),
        })
    }

    /// Counts evaluations whose argument reaches inside `|y| < w`.
    pub fn with_window(mut self, w: f64) -> Self {
        self.window = w;
        self
    }

    pub fn window_hits(&self) -> usize {
        self.window_hits.load(Ordering::Relaxed)
    }

    pub fn spec(&self) -> &IntegrandSpec {
        &self.spec
    }

    fn terms<S: Scalar>(&self, y: &S) -> Result<KernelTerms<S>> {
        let yv = y.value();
        if yv.mig() < self.window {
            self.window_hits.fetch_add(1, Ordering::Relaxed);
        }
        // z(pi - y), reduced to the fundamental period.
        let (u, positive) = if yv.is_positive() {
            (S::constant(Interval::pi()) - y.clone(), true)
        } else if yv.is_negative() {
            (-S::constant(Interval::pi()) - y.clone(), false)
        } else {
            return Err(IntervalError::DomainViolation {
                func: "arc-chord at y = 0",
                arg: yv,
            }
            .into());
        };
        let zs = self.spec.curve.derivs_upto(3, &u)?;
        let zp = &self.frame.zp;
        let d: [V2<S>; 4] = std::array::from_fn(|k| {
            [
                S::constant(zp[k][0]) - zs[k][0].clone(),
                S::constant(zp[k][1]) - zs[k][1].clone(),
            ]
        });
        let n2 = d[0][0].sqr() + d[0][1].sqr();
        let n_inv2 = n2.recip()?;
        let alpha = self.spec.alpha;
        let vortex = self.spec.regime == Regime::Vortex;
        let n_alpha = if vortex {
            S::constant(Interval::ONE)
        } else {
            n2.powf(-alpha.mul_f64(0.5))?
        };
        let log_n = if self.spec.target == Target::DIScaled {
            n2.ln()?.scale(Interval::point(0.5))
        } else {
            S::constant(Interval::ZERO)
        };
        let sigma = if self.spec.target == Target::ITildeScaled {
            sigma(y, positive, alpha)?
        } else {
            S::constant(Interval::ZERO)
        };
        Ok(KernelTerms {
            s1: zs[1].clone(),
            s2: zs[2].clone(),
            d,
            n_inv2,
            n_alpha,
            log_n,
            sigma,
        })
    }
}

/// `sgn(y) |2 tan(y/2)|^(1 - alpha)` as `(2 sin(t/2))^(1-alpha) cos(t/2)^(alpha-1)`
/// with `t = |y|`, which stays finite at `t = pi`.
fn sigma<S: Scalar>(y: &S, positive: bool, alpha: Interval) -> Result<S> {
    let t = if positive { y.clone() } else { -y.clone() };
    let (sh, ch) = t.scale(Interval::point(0.5)).sin_cos()?;
    // cos(t/2) >= 0 for t <= pi; arguments beyond pi only arise from the
    // float enclosure of the endpoint and are not part of the domain.
    let ch = ch.assume_nonneg()?;
    let e = Interval::ONE - alpha;
    let base = sh.scale(Interval::point(2.0)).powf(e)?;
    let tail = if (-e).lo() > 0.0 {
        ch.pow_from_zero(-e)?
    } else {
        ch.powf(-e)?
    };
    let s = base * tail;
    Ok(if positive { s } else { -s })
}

impl ScalarIntegrand for KtIntegrand {
    fn eval<S: Scalar>(&self, y: &S) -> Result<S> {
        let t = self.terms(y)?;
        let (a, b) = kernel_pair(
            self.spec.regime,
            self.spec.target,
            self.spec.alpha,
            &t,
            (&self.frame.tilde_a, &self.frame.tilde_b),
        );
        Ok(contract(&a, &b, &self.frame.a_perp, &self.frame.b_perp))
    }
}

/// Pointwise integrand of `spec` at `y`.
pub fn kt_scaled_integrand<S: Scalar>(spec: &IntegrandSpec, y: &S) -> Result<S> {
    KtIntegrand::new(*spec)?.eval(y)
}

/// The `(A, B)` pair itself at a point, for cross-checks.
pub fn kernel_pair_at(spec: &IntegrandSpec, y: Interval) -> Result<(V2<Interval>, V2<Interval>)> {
    let k = KtIntegrand::new(*spec)?;
    let t = k.terms(&y)?;
    Ok(kernel_pair(
        spec.regime,
        spec.target,
        spec.alpha,
        &t,
        (&k.frame.tilde_a, &k.frame.tilde_b),
    ))
}

/// Counter-term vectors of the extended target, `(tilde_A, tilde_B)`.
pub fn tilde_counter_terms(spec: &IntegrandSpec) -> Result<(V2<Interval>, V2<Interval>)> {
    let f = Frame::new(spec.phase(), spec.alpha)?;
    Ok((f.tilde_a, f.tilde_b))
}

/// One term `coef |y|^pow |log |y||^logs` of a [`Majorant`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MajorantTerm {
    /// Upper bound, nonnegative.
    pub coef: f64,
    /// Lower bound on the exponent; valid since `|y| < 1` on the window.
    pub pow: f64,
    pub logs: u8,
}

/// An upper bound `|v(y)| <= sum coef |y|^pow |log|y||^logs` valid for
/// `0 < |y| <= w < 1`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Majorant {
    pub terms: Vec<MajorantTerm>,
}

fn up_add(a: f64, b: f64) -> f64 {
    (Interval::point(a) + Interval::point(b)).hi()
}

fn up_mul(a: f64, b: f64) -> f64 {
    (Interval::point(a) * Interval::point(b)).hi()
}

fn down_add(a: f64, b: f64) -> f64 {
    (Interval::point(a) + Interval::point(b)).lo()
}

impl Majorant {
    pub fn term(coef: f64, pow: f64, logs: u8) -> Self {
        let mut m = Majorant::default();
        m.push(MajorantTerm { coef, pow, logs });
        m
    }

    fn push(&mut self, t: MajorantTerm) {
        if t.coef == 0.0 {
            return;
        }
        match self.terms.iter_mut().find(|s| s.pow == t.pow && s.logs == t.logs) {
            Some(s) => s.coef = up_add(s.coef, t.coef),
            None => self.terms.push(t),
        }
    }

    /// Upper bound on `∫_{0 < |y| <= w} |v(y)| dy`.
    pub fn integrate_window(&self, w: f64) -> Result<f64> {
        if !(w > 0.0 && w < 1.0) {
            return Err(Error::InvalidInput(format!("window half-width {w} must lie in (0, 1)")));
        }
        let mut total = Interval::ZERO;
        for t in &self.terms {
            total = total + Interval::point(t.coef) * power_log_integral(t.pow, t.logs, w)?.mul_f64(2.0);
        }
        Ok(total.checked("window integral")?.hi())
    }
}

/// `∫_0^w y^p (-log y)^q dy` for `w < 1`, `p > -1`, `q <= 2`.
pub fn power_log_integral(p: f64, q: u8, w: f64) -> Result<Interval> {
    if !(p > -1.0) {
        return Err(Error::NonEvaluable(Interval::new(0.0, w)));
    }
    let p1 = Interval::point(p) + Interval::ONE;
    let wi = Interval::point(w);
    let base = wi.pow(p1)?.div(p1)?;
    let lw = wi.ln()?;
    let inv = p1.recip()?;
    Ok(match q {
        0 => base,
        1 => base * (inv - lw),
        2 => base * (lw.sqr() - lw * inv.mul_f64(2.0) + inv.sqr().mul_f64(2.0)),
        _ => return Err(Error::InvalidInput(format!("log power {q} unsupported"))),
    })
}

impl KernelAlgebra for Majorant {
    fn lift(c: Interval) -> Self {
        Majorant::term(c.mag(), 0.0, 0)
    }
    fn plus(&self, o: &Self) -> Self {
        let mut m = self.clone();
        for t in &o.terms {
            m.push(*t);
        }
        m
    }
    fn minus(&self, o: &Self) -> Self {
        self.plus(o)
    }
    fn times(&self, o: &Self) -> Self {
        let mut m = Majorant::default();
        for a in &self.terms {
            for b in &o.terms {
                m.push(MajorantTerm {
                    coef: up_mul(a.coef, b.coef),
                    pow: down_add(a.pow, b.pow),
                    logs: a.logs + b.logs,
                });
            }
        }
        m
    }
    fn scaled(&self, c: Interval) -> Self {
        let s = c.mag();
        let mut m = Majorant::default();
        for t in &self.terms {
            m.push(MajorantTerm {
                coef: up_mul(t.coef, s),
                ..*t
            });
        }
        m
    }
}

/// Bounds on the curve near `x = pi` used by the window majorants.
#[derive(Debug, Clone, PartialEq)]
pub struct WindowBounds {
    /// `sup |d^k z_i / dx^k|` over `[pi - w, pi + w]`, `k = 0..4`.
    pub sup: [[f64; 2]; 5],
    /// Lower bound on `|z2'|` over the same range; `N >= m0 |y|`.
    pub m0: f64,
    /// Upper bound on `|z'|`; `N <= m1 |y|`.
    pub m1: f64,
}

pub fn window_bounds(curve: &CurveFamily, w: f64) -> Result<WindowBounds> {
    let c = match *curve {
        CurveFamily::Bump { c } => c,
        CurveFamily::Ellipse { .. } => return Err(Error::InvalidInput("window bounds need the bump curve".into())),
    };
    if !(w > 0.0 && w <= EPS) {
        return Err(Error::ZoneViolation(Interval::new(-w.abs(), w.abs())));
    }
    let plus = Interval::new((PI - w).next_down(), PI.next_up());
    let minus = -plus;
    let arg = Interval::pi() + Interval::new(-w, w) - c;
    let (s, co) = Scalar::sin_cos(&arg)?;
    let z2 = [s, co, -s, -co, s];
    let mut sup = [[0.0; 2]; 5];
    for k in 0..5 {
        let a = curves::hull_enclosure(curve, k, plus)?;
        let b = curves::hull_enclosure(curve, k, minus)?;
        sup[k] = [a.mag().max(b.mag()), z2[k].mag()];
    }
    let m0 = co.mig();
    if !(m0 > 0.0) {
        return Err(Error::DegenerateTangent(co));
    }
    let m1 = (Interval::point(sup[1][0]).sqr() + Interval::point(sup[1][1]).sqr())
        .sqrt()?
        .hi();
    Ok(WindowBounds { sup, m0, m1 })
}

/// Majorants of the kernel inputs on the window.
pub fn window_terms(spec: &IntegrandSpec, b: &WindowBounds, w: f64) -> Result<KernelTerms<Majorant>> {
    let d: [V2<Majorant>; 4] =
        std::array::from_fn(|k| [0, 1].map(|i| Majorant::term(b.sup[k + 1][i], 1.0, 0)));
    let s1 = [0, 1].map(|i| Majorant::term(b.sup[1][i], 0.0, 0));
    let s2 = [0, 1].map(|i| Majorant::term(b.sup[2][i], 0.0, 0));
    let m0 = Interval::point(b.m0);
    let alpha = spec.alpha;
    let n_inv2 = Majorant::term(m0.sqr().recip()?.hi(), -2.0, 0);
    let n_alpha = Majorant::term(m0.pow(-alpha)?.hi(), (-alpha).lo(), 0);
    let kappa = Interval::point(b.m0)
        .ln()?
        .abs()
        .hull(Interval::point(b.m1).ln()?.abs())
        .hi();
    let log_n = Majorant::term(1.0, 0.0, 1).plus(&Majorant::term(kappa, 0.0, 0));
    let e = Interval::ONE - alpha;
    let tau = Interval::point(w * 0.5)
        .tan()?
        .mul_f64(2.0)
        .div_f64(w)?;
    let sigma = Majorant::term(tau.pow(e)?.hi().max(1.0), e.lo(), 0);
    Ok(KernelTerms {
        d,
        s1,
        s2,
        n_inv2,
        n_alpha,
        log_n,
        sigma,
    })
}

/// Enclosure of the integral of the target over the window `[left, right]`,
/// which must be symmetric about 0 and fit inside the endpoint zones after
/// the shift `x - y`.
pub fn singular_residual(spec: &IntegrandSpec, left: f64, right: f64) -> Result<Interval> {
    if left != -right || !(right > 0.0) {
        return Err(Error::InvalidInput(format!("window [{left}, {right}] must be symmetric")));
    }
    let w = right;
    let bounds = window_bounds(&spec.curve, w)?;
    let t = window_terms(spec, &bounds, w)?;
    let frame = Frame::new(spec.phase(), spec.alpha)?;
    let (a, b) = kernel_pair(spec.regime, spec.target, spec.alpha, &t, (&frame.tilde_a, &frame.tilde_b));
    let m = contract(&a, &b, &frame.a_perp, &frame.b_perp);
    let s = m.integrate_window(w)?;
    Ok(Interval::new(-s, s))
}
