//! Independent evaluation of the scaled curvature-derivative integrands at
//! `x = pi` on the bump curve, in 128-bit arithmetic, and their integrals by
//! adaptive Gauss-Kronrod quadrature.
//!
//! Nothing here uses the interval library: the curve derivatives come from
//! `E = exp(g)`, `g = 1 - pi^2/(pi^2 - u^2)` with hand-differentiated `g`.

#![allow(dead_code)]

use std::cell::RefCell;
use std::ops::{Add, Div, Mul, Neg, Sub};

use astro_float::{BigFloat, Consts, RoundingMode, Sign};

const P: usize = 128;
const RM: RoundingMode = RoundingMode::ToEven;

thread_local! {
    static CC: RefCell<Consts> = RefCell::new(Consts::new().expect("constants cache"));
}

#[derive(Clone, Debug)]
pub struct B(BigFloat);

impl B {
    pub fn of(v: f64) -> B {
        B(BigFloat::from_f64(v, P))
    }
    fn pi() -> B {
        CC.with(|c| B(c.borrow_mut().pi(P, RM)))
    }
    fn with(f: impl FnOnce(&mut Consts) -> BigFloat) -> B {
        CC.with(|c| B(f(&mut c.borrow_mut())))
    }
    fn sin(&self) -> B {
        B::with(|c| self.0.sin(P, RM, c))
    }
    fn cos(&self) -> B {
        B::with(|c| self.0.cos(P, RM, c))
    }
    fn tan(&self) -> B {
        B::with(|c| self.0.tan(P, RM, c))
    }
    fn exp(&self) -> B {
        B::with(|c| self.0.exp(P, RM, c))
    }
    fn ln(&self) -> B {
        B::with(|c| self.0.ln(P, RM, c))
    }
    fn sqrt(&self) -> B {
        B(self.0.sqrt(P, RM))
    }
    fn abs(&self) -> B {
        B(self.0.abs())
    }
    /// `self^p` for `self > 0`.
    fn powf(&self, p: f64) -> B {
        (self.ln() * B::of(p)).exp()
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn signum(&self) -> f64 {
        if self.0.is_zero() {
            0.0
        } else if self.0.is_negative() {
            -1.0
        } else {
            1.0
        }
    }
    /// `lo <= self <= hi`, compared exactly.
    pub fn inside(&self, lo: f64, hi: f64) -> bool {
        B::of(lo).0 <= self.0 && self.0 <= B::of(hi).0
    }

    pub fn to_f64(&self) -> f64 {
        match self.0.as_raw_parts() {
            None => f64::NAN,
            Some((m, _, s, e, _)) => {
                let top = *m.last().expect("mantissa") as f64;
                let v = top * 2f64.powi(e - 64);
                if s == Sign::Neg {
                    -v
                } else {
                    v
                }
            }
        }
    }
}

macro_rules! binop {
    ($tr:ident, $f:ident) => {
        impl $tr for B {
            type Output = B;
            fn $f(self, o: B) -> B {
                B(self.0.$f(&o.0, P, RM))
            }
        }
        impl $tr for &B {
            type Output = B;
            fn $f(self, o: &B) -> B {
                B(self.0.$f(&o.0, P, RM))
            }
        }
    };
}
binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl Neg for B {
    type Output = B;
    fn neg(self) -> B {
        B(self.0.neg())
    }
}

type V = [B; 2];

fn v_sub(a: &V, b: &V) -> V {
    [&a[0] - &b[0], &a[1] - &b[1]]
}
fn v_scale(a: &V, s: &B) -> V {
    [&a[0] * s, &a[1] * s]
}
fn v_add(a: &V, b: &V) -> V {
    [&a[0] + &b[0], &a[1] + &b[1]]
}
fn dot(a: &V, b: &V) -> B {
    &a[0] * &b[0] + &a[1] * &b[1]
}
fn perp(a: &V) -> V {
    [-(a[1].clone()), a[0].clone()]
}

/// Derivatives `0..=4` of the bump curve at `u ∈ [-pi, pi]`.
fn curve(u: &B, c: f64) -> [V; 5] {
    let pi = B::pi();
    let pi2 = &pi * &pi;
    let q = &pi2 - &(u * u);
    let z1: [B; 5] = if q.signum() <= 0.0 {
        [B::of(-1.0), B::of(0.0), B::of(0.0), B::of(0.0), B::of(0.0)]
    } else {
        let e = (B::of(1.0) - &pi2 / &q).exp();
        let q2 = &q * &q;
        let g1 = B::of(-2.0) * pi2.clone() * u.clone() / q2.clone();
        let g2 = B::of(-2.0) * pi2.clone() * (&pi2 + &(B::of(3.0) * u.clone() * u.clone())) / (&q2 * &q);
        let g3 = B::of(-24.0) * pi2.clone() * u.clone() * (&pi2 + &(u * u)) / (&q2 * &q2);
        let g1s = &g1 * &g1;
        // the fourth derivative is only used at u = ±pi, where it vanishes
        let two = B::of(2.0);
        [
            &two * &e - B::of(1.0),
            &two * &(&g1 * &e),
            &two * &(&(&g2 + &g1s) * &e),
            &two * &(&(&(&g3 + &(B::of(3.0) * g1.clone() * g2.clone())) + &(&g1s * &g1)) * &e),
            B::of(0.0),
        ]
    };
    let a = u - &B::of(c);
    let (s, co) = (a.sin(), a.cos());
    let z2 = [s.clone(), co.clone(), -s.clone(), -co.clone(), s];
    let mut out: [V; 5] = std::array::from_fn(|_| [B::of(0.0), B::of(0.0)]);
    for k in 0..5 {
        out[k] = [z1[k].clone(), z2[k].clone()];
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Target {
    Vortex,
    I,
    DI,
    ITilde,
}

/// Pointwise scaled integrand at `y ∈ [-pi, pi] \ {0}`.
pub fn integrand(y: f64, c: f64, alpha: f64, target: Target) -> f64 {
    integrand_big(&B::of(y), y, c, alpha, target).to_f64()
}

/// Same as [`integrand`] without rounding the result to `f64`.
pub fn integrand_exact(y: f64, c: f64, alpha: f64, target: Target) -> B {
    integrand_big(&B::of(y), y, c, alpha, target)
}

fn integrand_big(yb: &B, y: f64, c: f64, al: f64, target: Target) -> B {
    let pi = B::pi();
    let zx = curve(&pi, c);
    let mut u = &pi - yb;
    if u.signum() > 0.0 && (&u - &pi).signum() > 0.0 {
        u = &u - &(B::of(2.0) * pi.clone());
    }
    let zy = curve(&u, c);
    let (a, b, cc, d) = (&zx[1], &zx[2], &zx[3], &zx[4]);
    let d0 = v_sub(&zx[0], &zy[0]);
    let d1 = v_sub(a, &zy[1]);
    let d2 = v_sub(b, &zy[2]);
    let d3 = v_sub(cc, &zy[3]);
    let (s1, s2) = (&zy[1], &zy[2]);
    let n2 = dot(&d0, &d0);
    let n = n2.sqrt();
    let (ra, rb);
    if target == Target::Vortex {
        let p = dot(&d0, s1) / n2.clone();
        let q = dot(&d0, &d1) / n2.clone();
        ra = v_add(&v_scale(&d1, &-p.clone()), &v_scale(s1, &q));
        let t = v_add(&v_scale(&d2, &-p), &v_scale(s2, &(B::of(2.0) * q.clone())));
        let coef = dot(&d1, &d1) / n2.clone() + dot(&d0, &d2) / n2.clone() - B::of(2.0) * q.clone() * q;
        rb = v_add(&t, &v_scale(s1, &coef));
    } else {
        let alb = B::of(al);
        let p1 = dot(&d1, &d0);
        let na = n.powf(-al);
        let n2a = n.powf(-2.0 - al);
        let n4a = n.powf(-4.0 - al);
        let d11 = dot(&d1, &d1);
        let d20 = dot(&d2, &d0);
        match target {
            Target::I | Target::ITilde => {
                let mut aa = v_sub(&v_scale(&d2, &na), &v_scale(&d1, &(&alb * &p1 * n2a.clone())));
                let mut bb = v_scale(&d3, &na);
                bb = v_sub(&bb, &v_scale(&d2, &(B::of(2.0 * al) * p1.clone() * n2a.clone())));
                bb = v_sub(&bb, &v_scale(&d1, &(&alb * &d11 * n2a.clone())));
                bb = v_add(&bb, &v_scale(&d1, &(B::of(al * (al + 2.0)) * p1.clone() * p1.clone() * n4a.clone())));
                bb = v_sub(&bb, &v_scale(&d1, &(&alb * &d20 * n2a.clone())));
                if target == Target::ITilde {
                    let sig = B::of(y.signum()) * (B::of(2.0) * (yb / &B::of(2.0)).tan()).abs().powf(1.0 - al);
                    let na_ = dot(a, a).sqrt();
                    let ba = dot(b, a);
                    let bbb = dot(b, b);
                    let ca = dot(cc, a);
                    let pa = na_.powf(-al);
                    let p2 = na_.powf(-2.0 - al);
                    let p4 = na_.powf(-4.0 - al);
                    let ta = v_sub(&v_scale(cc, &pa), &v_scale(b, &(&alb * &ba * p2.clone())));
                    let mut tb = v_scale(d, &pa);
                    tb = v_sub(&tb, &v_scale(cc, &(B::of(2.0 * al) * ba.clone() * p2.clone())));
                    tb = v_sub(&tb, &v_scale(b, &(&alb * &bbb * p2.clone())));
                    tb = v_add(&tb, &v_scale(b, &(B::of(al * (al + 2.0)) * ba.clone() * ba.clone() * p4)));
                    tb = v_sub(&tb, &v_scale(b, &(&alb * &ca * p2)));
                    aa = v_sub(&aa, &v_scale(&ta, &sig));
                    bb = v_sub(&bb, &v_scale(&tb, &sig));
                }
                ra = aa;
                rb = bb;
            }
            Target::DI => {
                let l = n.ln();
                let mut aa = v_scale(&d1, &-(&p1 * &n2a));
                aa = v_sub(&aa, &v_scale(&d2, &(&na * &l)));
                aa = v_add(&aa, &v_scale(&d1, &(&alb * &p1 * n2a.clone() * l.clone())));
                let mut bb = v_scale(&d2, &(B::of(-2.0) * p1.clone() * n2a.clone()));
                bb = v_sub(&bb, &v_scale(&d1, &(&d11 * &n2a)));
                bb = v_add(&bb, &v_scale(&d1, &(B::of(2.0 * al + 2.0) * p1.clone() * p1.clone() * n4a.clone())));
                bb = v_sub(&bb, &v_scale(&d1, &(&d20 * &n2a)));
                bb = v_sub(&bb, &v_scale(&d3, &(&na * &l)));
                bb = v_add(&bb, &v_scale(&d2, &(B::of(2.0 * al) * p1.clone() * n2a.clone() * l.clone())));
                bb = v_add(&bb, &v_scale(&d1, &(&alb * &d11 * n2a.clone() * l.clone())));
                bb = v_sub(&bb, &v_scale(&d1, &(B::of(al * (al + 2.0)) * p1.clone() * p1.clone() * n4a * l.clone())));
                bb = v_add(&bb, &v_scale(&d1, &(&alb * &d20 * n2a * l)));
                ra = aa;
                rb = bb;
            }
            Target::Vortex => unreachable!(),
        }
    }
    -dot(&ra, &perp(b)) + dot(&rb, &perp(a))
}

const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

/// 15-point Kronrod estimate and its difference from the embedded 7-point
/// Gauss estimate.
fn gk15(f: &impl Fn(f64) -> f64, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut k = WGK[7] * fc;
    let mut g = WG[3] * fc;
    for j in 0..7 {
        let dx = h * XGK[j];
        let s = f(c - dx) + f(c + dx);
        k += WGK[j] * s;
        if j % 2 == 1 {
            g += WG[j / 2] * s;
        }
    }
    (k * h, (k - g).abs() * h)
}

/// Adaptive Gauss-Kronrod integration to absolute tolerance `tol`.
pub fn integrate(f: &impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    let mut stack = vec![(a, b, tol)];
    let mut total = 0.0;
    while let Some((lo, hi, t)) = stack.pop() {
        let (v, err) = gk15(f, lo, hi);
        let mid = 0.5 * (lo + hi);
        if err <= t || hi - lo < 1e-14 || !(lo < mid && mid < hi) {
            total += v;
        } else {
            stack.push((lo, mid, 0.5 * t));
            stack.push((mid, hi, 0.5 * t));
        }
    }
    total
}

/// `∫_{-pi}^{pi}` of the scaled integrand, split at the singularity.
pub fn integral(c: f64, alpha: f64, target: Target, tol: f64) -> f64 {
    let f = |y: f64| integrand(y, c, alpha, target);
    let pi = std::f64::consts::PI;
    integrate(&f, -pi, 0.0, 0.5 * tol) + integrate(&f, 0.0, pi, 0.5 * tol)
}
