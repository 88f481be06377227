//! Positivity of the ellipse rotation defect
//!
//! `g(y) = s^{2-α} c^{2-α} (c^α - s^α) ((1 - R cos y)^{-(α/2+1)} - (1 + R cos y)^{-(α/2+1)})`
//!
//! on `[0, π/2]`, with `s = sin(y/2)`, `c = cos(y/2)`. A positive integral of
//! `g` rules out rigid rotation of the ellipse with axis ratio `R`.

use std::f64::consts::FRAC_PI_2;

use crate::curves::{AxisRatio, EPS};
use crate::error::{Error, Result};
use crate::interval::{Interval, SignOutcome};
use crate::jet::Scalar;
use crate::sign::{validate_sign, ExpectedSign, SignReport, SignTask, DEFAULT_MIN_WIDTH};

fn upper_end() -> f64 {
    FRAC_PI_2.next_up()
}

fn check_alpha(alpha: Interval) -> Result<()> {
    if alpha.lo() > 0.0 && alpha.hi() < 2.0 {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!("alpha {alpha} not inside (0, 2)")))
    }
}

fn half_angle(y: Interval) -> Result<(Interval, Interval)> {
    let h = y.mul_f64(0.5);
    Ok((h.sin()?.assume_nonneg()?, h.cos()?))
}

/// Encloses `g` on `y`, which must lie in `[0, π/2]`.
pub fn ellipse_rotation_integrand(alpha: Interval, r: AxisRatio, y: Interval) -> Result<Interval> {
    check_alpha(alpha)?;
    if y.lo() < 0.0 || y.hi() > upper_end() {
        return Err(Error::InvalidInput(format!("y = {y} outside [0, pi/2]")));
    }
    let (s, c) = half_angle(y)?;
    let two_minus = Interval::point(2.0) - alpha;
    let front = s.pow_from_zero(two_minus)? * c.pow(two_minus)?;
    let gap = c.pow(alpha)? - s.pow_from_zero(alpha)?;
    let rc = r.value() * y.cos()?;
    let e = -(alpha.mul_f64(0.5) + Interval::ONE);
    let kernel = (Interval::ONE - rc).pow(e)? - (Interval::ONE + rc).pow(e)?;
    Ok((front * gap * kernel).checked("rotation integrand")?)
}

/// Certificates behind [`ellipse_rotation_check`].
#[derive(Debug, Clone, PartialEq)]
pub struct RotationReport {
    pub outcome: SignOutcome,
    /// `g > 0` on `[δ, π/2 - δ]`.
    pub interior: SignReport,
    /// `c - s > 0` and `cos y > 0` on `[0, δ]`: every factor of `g` is
    /// nonnegative there.
    pub near_zero: [SignReport; 2],
    /// `(c - s)' < 0` and `(cos y)' < 0` on `[π/2 - δ, π/2]`: both factors
    /// decrease to their zero at `π/2`, so `g ≥ 0` there.
    pub near_half_pi: [SignReport; 2],
}

fn run(f: &(dyn Fn(Interval) -> Result<Interval> + Sync), domain: Interval, min_width: f64, expected: ExpectedSign) -> SignReport {
    validate_sign(&SignTask {
        f,
        domain,
        min_width,
        expected,
    })
}

pub fn ellipse_rotation_report(alpha: Interval, r: AxisRatio, min_width: f64) -> Result<RotationReport> {
    check_alpha(alpha)?;
    let interior_dom = Interval::new(EPS, FRAC_PI_2 - EPS);
    let zero_dom = Interval::new(0.0, EPS);
    let half_dom = Interval::new(FRAC_PI_2 - EPS, upper_end());

    let g = |y: Interval| ellipse_rotation_integrand(alpha, r, y);
    let gap = |y: Interval| half_angle(y).map(|(s, c)| c - s);
    let cos = |y: Interval| Ok(y.cos()?);
    let gap_slope = |y: Interval| half_angle(y).map(|(s, c)| -(s + c).mul_f64(0.5));
    let cos_slope = |y: Interval| Ok(-y.sin()?);

    let interior = run(&g, interior_dom, min_width, ExpectedSign::Positive);
    let near_zero = [
        run(&gap, zero_dom, min_width, ExpectedSign::Positive),
        run(&cos, zero_dom, min_width, ExpectedSign::Positive),
    ];
    let near_half_pi = [
        run(&gap_slope, half_dom, min_width, ExpectedSign::Negative),
        run(&cos_slope, half_dom, min_width, ExpectedSign::Negative),
    ];
    let ok = interior.outcome == SignOutcome::AllPositive
        && near_zero.iter().all(|r| r.outcome == SignOutcome::AllPositive)
        && near_half_pi.iter().all(|r| r.outcome == SignOutcome::AllNegative);
    Ok(RotationReport {
        outcome: if ok {
            SignOutcome::AllPositive
        } else {
            SignOutcome::Indeterminate
        },
        interior,
        near_zero,
        near_half_pi,
    })
}

/// `AllPositive` when the integral of `g` over `[0, π/2]` is certified
/// positive.
pub fn ellipse_rotation_check(alpha: Interval, r: AxisRatio) -> Result<SignOutcome> {
    Ok(ellipse_rotation_report(alpha, r, DEFAULT_MIN_WIDTH)?.outcome)
}
