//! Randomized containment check of interval operations against 256-bit
//! arithmetic from `astro-float`.

use alphapatch_core::Interval;
use astro_float::{BigFloat, Consts, RoundingMode};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const P: usize = 256;
const RM: RoundingMode = RoundingMode::ToEven;

#[derive(Debug, Default, Clone, Copy)]
pub struct Tally {
    pub checked: usize,
    /// Operations that returned an error (poles, domain edges, overflow).
    pub refused: usize,
}

#[derive(Debug, Clone, Copy)]
enum Op {
    Add,
    Sub,
    Mul,
    Div,
    Sqr,
    Powi(u32),
    Sqrt,
    Exp,
    Ln,
    Sin,
    Cos,
    Tan,
    Pow,
    Abs,
    Neg,
}

const OPS: [Op; 15] = [
    Op::Add,
    Op::Sub,
    Op::Mul,
    Op::Div,
    Op::Sqr,
    Op::Powi(0),
    Op::Sqrt,
    Op::Exp,
    Op::Ln,
    Op::Sin,
    Op::Cos,
    Op::Tan,
    Op::Pow,
    Op::Abs,
    Op::Neg,
];

fn big(x: f64) -> BigFloat {
    BigFloat::from_f64(x, P)
}

/// Value with a random sign and a magnitude spread over `10^lo..10^hi`.
fn magnitude(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    10f64.powf(rng.gen_range(lo..hi))
}

fn signed(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    let m = magnitude(rng, lo, hi);
    if rng.gen_bool(0.5) {
        m
    } else {
        -m
    }
}

/// Interval around `c`: a point, a few ulps, or a relative width up to 1.
fn around(rng: &mut ChaCha8Rng, c: f64) -> Interval {
    match rng.gen_range(0..4) {
        0 => Interval::point(c),
        1 => {
            let mut lo = c;
            let mut hi = c;
            for _ in 0..rng.gen_range(1..4) {
                lo = lo.next_down();
                hi = hi.next_up();
            }
            Interval::new(lo, hi)
        }
        _ => {
            let w = c.abs() * 10f64.powf(rng.gen_range(-15.0..0.0));
            let t = rng.gen_range(0.0..1.0);
            Interval::new(c - t * w, c + (1.0 - t) * w)
        }
    }
}

/// Interval inside `[lo, hi]`.
fn inside(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> Interval {
    let a = rng.gen_range(lo..hi);
    let b = rng.gen_range(lo..hi);
    let (a, b) = if a <= b { (a, b) } else { (b, a) };
    match rng.gen_range(0..3) {
        0 => Interval::point(a),
        1 => Interval::new(a, (a + (b - a) * 1e-6).min(hi)),
        _ => Interval::new(a, b),
    }
}

/// Point of `x`: an endpoint or an interior value.
fn sample(rng: &mut ChaCha8Rng, x: Interval) -> f64 {
    match rng.gen_range(0..4) {
        0 => x.lo(),
        1 => x.hi(),
        _ => {
            let t: f64 = rng.gen_range(0.0..1.0);
            (x.lo() + t * (x.hi() - x.lo())).clamp(x.lo(), x.hi())
        }
    }
}

fn contains(x: Interval, v: &BigFloat) -> bool {
    !v.is_nan() && big(x.lo()) <= *v && *v <= big(x.hi())
}

/// Runs operations until `target` successful evaluations have been
/// compared. Returns the first violation as an error.
pub fn run(target: usize, seed: u64) -> Result<Tally, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cc = Consts::new().map_err(|e| format!("{e:?}"))?;
    let mut tally = Tally::default();
    while tally.checked < target {
        let op = match OPS[rng.gen_range(0..OPS.len())] {
            Op::Powi(_) => Op::Powi(rng.gen_range(0..9)),
            o => o,
        };
        let (x, y) = match op {
            Op::Add | Op::Sub | Op::Mul | Op::Div => {
                let cx = signed(&mut rng, -30.0, 30.0);
                let cy = signed(&mut rng, -30.0, 30.0);
                (around(&mut rng, cx), around(&mut rng, cy))
            }
            Op::Sqr | Op::Powi(_) | Op::Abs | Op::Neg => {
                let c = signed(&mut rng, -20.0, 20.0);
                let x = if rng.gen_bool(0.2) { inside(&mut rng, -c.abs(), c.abs()) } else { around(&mut rng, c) };
                (x, Interval::ZERO)
            }
            Op::Sqrt | Op::Ln => {
                let c = magnitude(&mut rng, -30.0, 30.0);
                (around(&mut rng, c), Interval::ZERO)
            }
            Op::Exp => (inside(&mut rng, -700.0, 700.0), Interval::ZERO),
            Op::Sin | Op::Cos | Op::Tan => {
                let x = if rng.gen_bool(0.8) {
                    inside(&mut rng, -20.0, 20.0)
                } else {
                    let c = signed(&mut rng, -3.0, 5.0);
                    around(&mut rng, c)
                };
                (x, Interval::ZERO)
            }
            Op::Pow => (inside(&mut rng, 1e-3, 1e3), inside(&mut rng, -4.0, 4.0)),
        };
        let r = match op {
            Op::Add => Ok(x + y),
            Op::Sub => Ok(x - y),
            Op::Mul => Ok(x * y),
            Op::Div => x.div(y),
            Op::Sqr => Ok(x.sqr()),
            Op::Powi(n) => Ok(x.powi(n)),
            Op::Sqrt => x.sqrt(),
            Op::Exp => x.exp(),
            Op::Ln => x.ln(),
            Op::Sin => x.sin(),
            Op::Cos => x.cos(),
            Op::Tan => x.tan(),
            Op::Pow => x.pow(y),
            Op::Abs => Ok(x.abs()),
            Op::Neg => Ok(-x),
        };
        let Ok(r) = r else {
            tally.refused += 1;
            continue;
        };
        for _ in 0..2 {
            let (a, b) = (sample(&mut rng, x), sample(&mut rng, y));
            let (ba, bb) = (big(a), big(b));
            let exact = match op {
                Op::Add => ba.add(&bb, P, RM),
                Op::Sub => ba.sub(&bb, P, RM),
                Op::Mul => ba.mul(&bb, P, RM),
                Op::Div => ba.div(&bb, P, RM),
                Op::Sqr => ba.mul(&ba, P, RM),
                Op::Powi(n) => ba.powi(n as usize, P, RM),
                Op::Sqrt => ba.sqrt(P, RM),
                Op::Exp => ba.exp(P, RM, &mut cc),
                Op::Ln => ba.ln(P, RM, &mut cc),
                Op::Sin => ba.sin(P, RM, &mut cc),
                Op::Cos => ba.cos(P, RM, &mut cc),
                Op::Tan => ba.tan(P, RM, &mut cc),
                Op::Pow => ba.pow(&bb, P, RM, &mut cc),
                Op::Abs => ba.abs(),
                Op::Neg => ba.neg(),
            };
            if !contains(r, &exact) {
                return Err(format!("{op:?}: x = {x}, y = {y}, at ({a:e}, {b:e}) result {r} misses the exact value"));
            }
            tally.checked += 1;
        }
    }
    Ok(tally)
}
