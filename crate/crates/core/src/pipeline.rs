//! Work-queue driver certifying the sign of the curvature derivative over
//! ranges of `alpha`.

use std::collections::VecDeque;
use std::f64::consts::PI;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use crate::curves::EPS;
use crate::error::{Error, Result};
use crate::integrands::{singular_residual, IntegrandSpec, KtIntegrand, Regime, Target, ALPHA_BR, ALPHA_CR};
use crate::interval::{Interval, SignOutcome};
use crate::quadrature::{adaptive_integrate, Integrand, Tolerance};

pub const DEFAULT_SPLIT_THRESHOLD: f64 = 5e-6;

/// One unit of work: an `alpha` range for one phase `C`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParameterSet {
    pub left: Interval,
    pub right: Interval,
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_depth: u32,
    pub alpha: Interval,
    pub c: Interval,
}

impl ParameterSet {
    pub fn new(c: Interval, alpha: Interval) -> Self {
        let t = Tolerance::default();
        ParameterSet {
            left: Interval::point(-EPS),
            right: Interval::point(EPS),
            abs_tol: t.abs_tol,
            rel_tol: t.rel_tol,
            max_depth: t.max_depth,
            alpha,
            c,
        }
    }

    pub fn with_alpha(&self, alpha: Interval) -> Self {
        ParameterSet { alpha, ..*self }
    }

    pub fn tolerance(&self) -> Tolerance {
        Tolerance {
            abs_tol: self.abs_tol,
            rel_tol: self.rel_tol,
            max_depth: self.max_depth,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegionVerdict {
    pub ps: ParameterSet,
    pub outcome: SignOutcome,
    pub enclosure: Interval,
    pub regime: Regime,
}

/// Chooses the validation strategy for `alpha`. `[0, a]` with `a <= 0.04`
/// belongs to the small-alpha regime, whose target is also defined at 0.
pub fn regime_select(alpha: Interval) -> Result<Regime> {
    if alpha.lo() < 0.0 || alpha.hi() >= 2.0 {
        return Err(Error::InvalidInput(format!("alpha {alpha} outside [0, 2)")));
    }
    if alpha.hi() == 0.0 {
        Ok(Regime::Vortex)
    } else if alpha.hi() <= ALPHA_CR {
        Ok(Regime::SmallAlpha)
    } else if alpha.lo() < ALPHA_CR {
        Err(Error::StraddlesBoundary(alpha, ALPHA_CR))
    } else if alpha.hi() <= ALPHA_BR {
        Ok(Regime::BigAlpha)
    } else if alpha.lo() < ALPHA_BR {
        Err(Error::StraddlesBoundary(alpha, ALPHA_BR))
    } else {
        Ok(Regime::VeryBigAlpha)
    }
}

/// Pieces of a target enclosure over the full period.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnclosureParts {
    pub right: Interval,
    pub left: Interval,
    /// `[f64::PI, pi]` and its mirror, which the float grid cannot reach.
    pub slivers: Interval,
    pub residual: Interval,
    pub total: Interval,
    pub subintervals: usize,
    pub max_depth_hit: bool,
}

/// Encloses the integral of `spec`'s target over `[-pi, pi]`: adaptive
/// quadrature on `[-pi, left] ∪ [right, pi]` plus the window residual.
pub fn target_enclosure(ps: &ParameterSet, spec: IntegrandSpec) -> Result<EnclosureParts> {
    let w = ps.right.hi();
    if ps.left.lo() != -w || !ps.left.is_point() || !ps.right.is_point() {
        return Err(Error::InvalidInput(format!(
            "window [{}, {}] must be symmetric points",
            ps.left, ps.right
        )));
    }
    let f = KtIntegrand::new(spec)?.with_window(w);
    let tol = ps.tolerance();
    let r = adaptive_integrate(&f, w, PI, tol)?;
    let l = adaptive_integrate(&f, -PI, -w, tol)?;
    let tail = Interval::new(PI, PI.next_up());
    let len = Interval::new(0.0, PI.next_up() - PI);
    let slivers = (f.eval_interval(tail)? + f.eval_interval(-tail)?) * len;
    let residual = singular_residual(&spec, -w, w)?;
    debug_assert_eq!(f.window_hits(), 0);
    let total = (r.enclosure + l.enclosure + slivers + residual).checked("enclosure")?;
    Ok(EnclosureParts {
        right: r.enclosure,
        left: l.enclosure,
        slivers,
        residual,
        total,
        subintervals: r.subinterval_count + l.subinterval_count,
        max_depth_hit: r.max_depth_hit || l.max_depth_hit,
    })
}

/// Encloses the regime's target for `ps` and reads off its sign.
///
/// For a nondegenerate `alpha` range where the direct enclosure is
/// inconclusive, the mean-value form `I(m) + DI(A)(A - m)` with `m` the
/// midpoint is tried as well and intersected with it.
pub fn process(ps: &ParameterSet) -> Result<RegionVerdict> {
    let regime = regime_select(ps.alpha)?;
    let spec = IntegrandSpec::new(regime, ps.alpha, ps.c)?;
    let mut enc = target_enclosure(ps, spec)?.total;
    let mean_value_applies = matches!(regime, Regime::BigAlpha | Regime::VeryBigAlpha) && !ps.alpha.is_point();
    if SignOutcome::of(enc) == SignOutcome::Indeterminate && mean_value_applies {
        let m = ps.alpha.mid();
        let at_mid = IntegrandSpec::new(regime, Interval::point(m), ps.c)?;
        let slope = spec.with_target(Target::DIScaled)?;
        let i_mid = target_enclosure(ps, at_mid)?.total;
        let di = target_enclosure(ps, slope)?.total;
        let mv = i_mid + di * (ps.alpha - Interval::point(m));
        enc = enc.intersect(mv).unwrap_or(enc);
    }
    Ok(RegionVerdict {
        ps: *ps,
        outcome: SignOutcome::of(enc),
        enclosure: enc,
        regime,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Verdict {
    Positive,
    Negative,
    Indeterminate,
    NonEvaluable,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Positive => "positive",
            Verdict::Negative => "negative",
            Verdict::Indeterminate => "indeterminate",
            Verdict::NonEvaluable => "non_evaluable",
        }
    }
}

/// Jump of the scalar across the boundary (`±2π`) under which a row's
/// certified sign means the curvature at `x = π` turns negative forward in
/// time. The stripped constant is `jump/(2π)` for the vortex kernel and
/// `-jump` times a positive factor otherwise.
pub fn convexity_loss_jump(regime: Regime, verdict: Verdict) -> Option<f64> {
    let positive_constant = match regime {
        Regime::Vortex => std::f64::consts::TAU,
        _ => -std::f64::consts::TAU,
    };
    match verdict {
        Verdict::Negative => Some(positive_constant),
        Verdict::Positive => Some(-positive_constant),
        Verdict::Indeterminate | Verdict::NonEvaluable => None,
    }
}

/// One line of a region file.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegionRow {
    pub c: Interval,
    pub alpha: Interval,
    pub regime: Option<Regime>,
    pub enclosure: Option<Interval>,
    pub verdict: Verdict,
}

impl RegionRow {
    fn from_verdict(v: &RegionVerdict) -> Self {
        let verdict = match v.outcome {
            SignOutcome::AllPositive => Verdict::Positive,
            SignOutcome::AllNegative => Verdict::Negative,
            SignOutcome::Indeterminate => Verdict::Indeterminate,
        };
        RegionRow {
            c: v.ps.c,
            alpha: v.ps.alpha,
            regime: Some(v.regime),
            enclosure: Some(v.enclosure),
            verdict,
        }
    }

    pub fn csv_line(&self) -> String {
        let (lo, hi) = self
            .enclosure
            .map_or(("nan".into(), "nan".into()), |e| (format!("{:.16e}", e.lo()), format!("{:.16e}", e.hi())));
        format!(
            "{:.16e},{:.16e},{:.16e},{},{},{},{}",
            self.c.mid(),
            self.alpha.lo(),
            self.alpha.hi(),
            self.regime.map_or("none", Regime::name),
            lo,
            hi,
            self.verdict.name()
        )
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct QueueOutput {
    pub positive: Vec<RegionRow>,
    pub negative: Vec<RegionRow>,
    /// Undecided rows, including ones whose integrand could not be evaluated.
    pub indeterminate: Vec<RegionRow>,
}

impl QueueOutput {
    pub fn all_rows(&self) -> impl Iterator<Item = &RegionRow> {
        self.positive.iter().chain(&self.negative).chain(&self.indeterminate)
    }

    pub fn has_non_evaluable(&self) -> bool {
        self.indeterminate.iter().any(|r| r.verdict == Verdict::NonEvaluable)
    }
}

fn split_at(ps: &ParameterSet, x: f64) -> [ParameterSet; 2] {
    [
        ps.with_alpha(Interval::new(ps.alpha.lo(), x)),
        ps.with_alpha(Interval::new(x, ps.alpha.hi())),
    ]
}

fn drain(mut queue: VecDeque<ParameterSet>, split_threshold: f64) -> Vec<RegionRow> {
    let mut rows = Vec::new();
    while let Some(ps) = queue.pop_front() {
        let result = match process(&ps) {
            Err(Error::StraddlesBoundary(_, x)) => {
                queue.extend(split_at(&ps, x));
                continue;
            }
            r => r,
        };
        let row = match result {
            Ok(v) => RegionRow::from_verdict(&v),
            Err(_) => RegionRow {
                c: ps.c,
                alpha: ps.alpha,
                regime: regime_select(ps.alpha).ok(),
                enclosure: None,
                verdict: Verdict::NonEvaluable,
            },
        };
        let undecided = matches!(row.verdict, Verdict::Indeterminate | Verdict::NonEvaluable);
        let m = ps.alpha.mid();
        if undecided && ps.alpha.width() > split_threshold && ps.alpha.lo() < m && m < ps.alpha.hi() {
            queue.extend(split_at(&ps, m));
        } else {
            rows.push(row);
        }
    }
    rows
}

/// Processes every set, splitting undecided ones while their `alpha` range is
/// wider than `split_threshold`. Initial sets are dealt round-robin to
/// `workers` threads, each with its own FIFO queue; rows are sorted by
/// `(C, alpha)` so the output does not depend on the worker count.
pub fn run_queue(initial: &[ParameterSet], split_threshold: f64, workers: usize) -> QueueOutput {
    let workers = workers.max(1).min(initial.len().max(1));
    let mut shards = vec![VecDeque::new(); workers];
    for (i, ps) in initial.iter().enumerate() {
        shards[i % workers].push_back(*ps);
    }
    let mut rows: Vec<RegionRow> = std::thread::scope(|s| {
        let handles: Vec<_> = shards
            .into_iter()
            .map(|q| s.spawn(move || drain(q, split_threshold)))
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("worker panicked"))
            .collect()
    });
    rows.sort_by(|a, b| {
        (a.c.lo(), a.alpha.lo(), a.alpha.hi())
            .partial_cmp(&(b.c.lo(), b.alpha.lo(), b.alpha.hi()))
            .expect("finite endpoints")
    });
    let mut out = QueueOutput::default();
    for r in rows {
        match r.verdict {
            Verdict::Positive => out.positive.push(r),
            Verdict::Negative => out.negative.push(r),
            Verdict::Indeterminate | Verdict::NonEvaluable => out.indeterminate.push(r),
        }
    }
    out
}

pub const REGION_HEADER: &str = "C,alpha_lo,alpha_hi,regime,enc_lo,enc_hi,verdict";

pub fn write_rows<W: Write>(out: &mut W, rows: &[RegionRow]) -> io::Result<()> {
    writeln!(out, "{REGION_HEADER}")?;
    for r in rows {
        writeln!(out, "{}", r.csv_line())?;
    }
    Ok(())
}

/// Writes `positive.csv`, `negative.csv` and `indeterminate.csv`.
pub fn write_region_files(dir: &Path, out: &QueueOutput) -> io::Result<Vec<PathBuf>> {
    fs::create_dir_all(dir)?;
    let mut paths = Vec::new();
    for (name, rows) in [
        ("positive.csv", &out.positive),
        ("negative.csv", &out.negative),
        ("indeterminate.csv", &out.indeterminate),
    ] {
        let p = dir.join(name);
        let mut f = io::BufWriter::new(fs::File::create(&p)?);
        write_rows(&mut f, rows)?;
        f.flush()?;
        paths.push(p);
    }
    Ok(paths)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn regimes() {
        assert_eq!(regime_select(Interval::ZERO).unwrap(), Regime::Vortex);
        assert_eq!(regime_select(Interval::new(0.01, 0.02)).unwrap(), Regime::SmallAlpha);
        assert_eq!(regime_select(Interval::new(0.0, 0.02)).unwrap(), Regime::SmallAlpha);
        assert_eq!(regime_select(Interval::new(0.5, 0.6)).unwrap(), Regime::BigAlpha);
        assert_eq!(regime_select(Interval::new(1.96, 1.97)).unwrap(), Regime::VeryBigAlpha);
        assert!(matches!(
            regime_select(Interval::new(0.03, 0.05)),
            Err(Error::StraddlesBoundary(_, x)) if x == ALPHA_CR
        ));
        assert!(matches!(
            regime_select(Interval::new(1.9, 1.96)),
            Err(Error::StraddlesBoundary(_, x)) if x == ALPHA_BR
        ));
        assert!(regime_select(Interval::new(1.99, 2.0)).is_err());
    }

    #[test]
    fn jump_choice() {
        let tau = std::f64::consts::TAU;
        assert_eq!(convexity_loss_jump(Regime::Vortex, Verdict::Negative), Some(tau));
        assert_eq!(convexity_loss_jump(Regime::BigAlpha, Verdict::Negative), Some(-tau));
        assert_eq!(convexity_loss_jump(Regime::VeryBigAlpha, Verdict::Positive), Some(tau));
        assert_eq!(convexity_loss_jump(Regime::SmallAlpha, Verdict::Indeterminate), None);
    }

    #[test]
    fn empty_queue() {
        let out = run_queue(&[], DEFAULT_SPLIT_THRESHOLD, 4);
        assert_eq!(out, QueueOutput::default());
    }

    #[test]
    fn csv_line_format() {
        let r = RegionRow {
            c: Interval::around(0.15),
            alpha: Interval::new(0.5, 0.5001),
            regime: Some(Regime::BigAlpha),
            enclosure: Some(Interval::new(0.1, 0.2)),
            verdict: Verdict::Positive,
        };
        let line = r.csv_line();
        let f: Vec<&str> = line.split(',').collect();
        assert_eq!(f.len(), 7);
        assert_eq!(f[0].parse::<f64>().unwrap(), 0.15);
        assert_eq!(f[2].parse::<f64>().unwrap(), 0.5001);
        assert_eq!(f[6], "positive");
    }
}
