//! Agreement between the jet derivatives of the bump exponential and the
//! tabulated `d_k` formulas, and finite-difference checks of the latter.

use alphapatch_core::curves::bump_z1;
use alphapatch_core::{Interval, Jet4};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Random points where the closed-form derivatives are evaluable.
pub fn points(n: usize, seed: u64) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let r = std::f64::consts::PI - alphapatch_core::curves::EPS;
    (0..n).map(|_| rng.gen_range(-r..r)).collect()
}

/// For each point and `k = 1..=5`, the jet of `z1` (or of `z1'` for
/// `k = 5`) must overlap the tabulated formula for `z1^(k)`. Returns the
/// number of comparisons.
pub fn jets_match_tables(pts: &[f64]) -> Result<usize, String> {
    let mut n = 0;
    for &x in pts {
        let j0 = bump_z1(0, &Jet4::variable(Interval::point(x))).map_err(|e| e.to_string())?;
        let j1 = bump_z1(1, &Jet4::variable(Interval::point(x))).map_err(|e| e.to_string())?;
        for k in 1..=5 {
            let jet = if k <= 4 { j0.d(k) } else { j1.d(4) };
            let table = bump_z1(k, &Interval::point(x)).map_err(|e| e.to_string())?;
            if !jet.overlaps(table) {
                return Err(format!("k = {k}, x = {x}: jet {jet} vs table {table}"));
            }
            if k <= 4 && !j1.d(k - 1).overlaps(table) {
                return Err(format!("k = {k}, x = {x}: shifted jet {} vs table {table}", j1.d(k - 1)));
            }
            n += 1;
        }
    }
    Ok(n)
}

fn at(k: usize, x: f64) -> Result<Interval, String> {
    bump_z1(k, &Interval::point(x)).map_err(|e| e.to_string())
}

/// Central difference of `z1^(k-1)` at step `h`, evaluated in interval
/// arithmetic, against the enclosure of `z1^(k)` for `k = 1..=4`. The
/// truncation budget is `h^2/6 max|z1^(k+2)|` over `[x - h, x + h]`.
pub fn finite_differences(pts: &[f64], h: f64) -> Result<usize, String> {
    let mut n = 0;
    for &x in pts {
        let (xp, xm) = (x + h, x - h);
        let step = Interval::point(xp) - Interval::point(xm);
        for k in 1..=4 {
            let fd = (at(k - 1, xp)? - at(k - 1, xm)?).div(step).map_err(|e| e.to_string())?;
            let around = Interval::new(xm, xp);
            let third = bump_z1(k + 2, &around).map_err(|e| e.to_string())?.mag();
            let half = 0.5 * (xp - xm);
            let budget = (half * half / 6.0 * third) * (1.0 + 1e-12);
            let exact = at(k, x)?;
            let widened = Interval::new(exact.lo() - budget, exact.hi() + budget);
            if !widened.overlaps(fd) {
                return Err(format!("k = {k}, x = {x}: difference {fd} outside {exact} ± {budget:e}"));
            }
            n += 1;
        }
    }
    Ok(n)
}
