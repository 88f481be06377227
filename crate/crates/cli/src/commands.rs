use std::fs;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use clap::Args;
use serde::{Deserialize, Serialize};

use alphapatch_core::curves::{curve_sign_tasks, AxisRatio};
use alphapatch_core::integrands::ellipse_rotation_report;
use alphapatch_core::pipeline::{convexity_loss_jump, run_queue, write_region_files, ParameterSet, DEFAULT_SPLIT_THRESHOLD};
use alphapatch_core::sign::{write_certificate_csv, SignReport, CERTIFICATE_HEADER, DEFAULT_MIN_WIDTH};
use alphapatch_core::{Interval, SignOutcome};
use alphapatch_sim::output::{write_diagnostics, write_snapshots};
use alphapatch_sim::{evolve, InitialCurve, SimConfig};

use crate::manifest::{config_hash, now, write_manifest, RunManifest};
use crate::Common;

/// Runs `body`, then writes the manifest. `body` returns whether every
/// expectation held and the files it produced.
fn with_manifest<C: Serialize>(
    command: &str,
    common: &Common,
    config: &C,
    body: impl FnOnce() -> Result<(bool, Vec<PathBuf>)>,
) -> Result<bool> {
    let started = now();
    let hash = config_hash(config)?;
    let (ok, outputs) = body()?;
    let m = RunManifest {
        command: command.to_string(),
        config_hash: hash,
        config: serde_json::to_value(config)?,
        started,
        finished: now(),
        outputs,
        exit_code: if ok { 0 } else { 1 },
    };
    let path = write_manifest(&common.out_dir, &m)?;
    println!("manifest: {}", path.display());
    Ok(ok)
}

fn parse_list(s: &str) -> Result<Vec<f64>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<f64>().map_err(|e| anyhow!("bad number {t:?}: {e}")))
        .collect()
}

/// `lo:hi` or a single value, both taken as binary floats.
fn parse_alpha(s: &str) -> Result<Interval> {
    let (lo, hi) = match s.split_once(':') {
        Some((a, b)) => (a.trim().parse::<f64>()?, b.trim().parse::<f64>()?),
        None => {
            let v = s.trim().parse::<f64>()?;
            (v, v)
        }
    };
    Interval::try_new(lo, hi).map_err(|e| anyhow!("bad alpha interval {s:?}: {e}"))
}

fn certificate_file(dir: &Path, stem: &str, parts: &[(&str, &SignReport)]) -> Result<PathBuf> {
    fs::create_dir_all(dir)?;
    let path = dir.join(format!("{}.csv", stem.replace(':', "_")));
    let mut f = BufWriter::new(fs::File::create(&path).with_context(|| format!("creating {}", path.display()))?);
    writeln!(f, "{CERTIFICATE_HEADER}")?;
    for (name, rep) in parts {
        write_certificate_csv(&mut f, name, &rep.certificate)?;
    }
    f.flush()?;
    Ok(path)
}

fn describe_failure(rep: &SignReport) -> String {
    match rep.witness {
        Some(w) => match w.enclosure {
            Some(e) => format!("{} on {} (enclosure {e})", rep.outcome.as_str(), w.sub),
            None => format!("{} on {} (not evaluable)", rep.outcome.as_str(), w.sub),
        },
        None => rep.outcome.as_str().to_string(),
    }
}

#[derive(Args, Debug)]
pub struct LemmaArgs {
    #[command(flatten)]
    pub common: Common,
    /// Smallest subinterval width before a piece is declared undecided.
    #[arg(long, default_value_t = DEFAULT_MIN_WIDTH)]
    pub min_width: f64,
    /// Run only the named tasks, e.g. `kC:0.45` or `d3:plus`.
    #[arg(long, value_delimiter = ',')]
    pub only: Vec<String>,
}

#[derive(Serialize)]
struct LemmaConfig<'a> {
    min_width: f64,
    only: &'a [String],
}

pub fn prove_lemma(a: &LemmaArgs) -> Result<bool> {
    let cfg = LemmaConfig {
        min_width: a.min_width,
        only: &a.only,
    };
    with_manifest("prove-lemma", &a.common, &cfg, || {
        let all = curve_sign_tasks();
        for name in &a.only {
            if !all.iter().any(|t| &t.name == name) {
                bail!("unknown task {name:?}");
            }
        }
        let dir = a.common.out_dir.join("lemma");
        let mut ok = true;
        let mut outputs = Vec::new();
        for task in all.iter().filter(|t| a.only.is_empty() || a.only.contains(&t.name)) {
            let rep = task.run(a.min_width);
            let pass = rep.outcome == task.expected.outcome();
            outputs.push(certificate_file(&dir, &task.name, &[(&task.name, &rep)])?);
            if pass {
                println!("PASS {} {} ({} pieces)", task.name, rep.outcome.as_str(), rep.certificate.len());
            } else {
                ok = false;
                println!("FAIL {} expected {}: {}", task.name, task.expected.outcome().as_str(), describe_failure(&rep));
            }
        }
        Ok((ok, outputs))
    })
}

#[derive(Args, Debug)]
pub struct RotationArgs {
    #[command(flatten)]
    pub common: Common,
    /// Comma-separated alpha values in (0, 2); may be empty.
    #[arg(long, default_value = "0.5,1,1.5")]
    pub alpha: String,
    /// Comma-separated axis ratios R = (R1² - R2²)/(R1² + R2²) in (0, 1).
    #[arg(long, default_value = "0.1,0.5,0.9")]
    pub ratio: String,
    #[arg(long, default_value_t = DEFAULT_MIN_WIDTH)]
    pub min_width: f64,
}

#[derive(Serialize)]
struct RotationConfig {
    alpha: Vec<f64>,
    ratio: Vec<f64>,
    min_width: f64,
}

pub fn prove_rotation(a: &RotationArgs) -> Result<bool> {
    let cfg = RotationConfig {
        alpha: parse_list(&a.alpha)?,
        ratio: parse_list(&a.ratio)?,
        min_width: a.min_width,
    };
    with_manifest("prove-rotation", &a.common, &cfg, || {
        let dir = a.common.out_dir.join("rotation");
        let mut ok = true;
        let mut outputs = Vec::new();
        for &al in &cfg.alpha {
            for &r in &cfg.ratio {
                let ratio = AxisRatio::new(Interval::around(r));
                let rep = ratio.and_then(|ratio| ellipse_rotation_report(Interval::point(al), ratio, a.min_width));
                let rep = match rep {
                    Ok(rep) => rep,
                    Err(e) => {
                        ok = false;
                        println!("FAIL alpha={al} R={r}: {e}");
                        continue;
                    }
                };
                let stem = format!("alpha_{al}_R_{r}");
                let parts = [
                    ("interior", &rep.interior),
                    ("gap_near_zero", &rep.near_zero[0]),
                    ("cos_near_zero", &rep.near_zero[1]),
                    ("gap_slope_near_half_pi", &rep.near_half_pi[0]),
                    ("cos_slope_near_half_pi", &rep.near_half_pi[1]),
                ];
                outputs.push(certificate_file(&dir, &stem, &parts)?);
                if rep.outcome == SignOutcome::AllPositive {
                    println!("PASS alpha={al} R={r} positive");
                } else {
                    ok = false;
                    let bad = parts
                        .iter()
                        .find(|(_, p)| p.witness.is_some())
                        .map_or("unknown".to_string(), |(n, p)| format!("{n}: {}", describe_failure(p)));
                    println!("FAIL alpha={al} R={r} {bad}");
                }
            }
        }
        Ok((ok, outputs))
    })
}

#[derive(Args, Debug)]
pub struct ConvexityArgs {
    #[command(flatten)]
    pub common: Common,
    /// Phase C of the bump curve.
    #[arg(long, default_value_t = 0.15)]
    pub c_phase: f64,
    /// Comma-separated alpha intervals `lo:hi` (or single values). Defaults
    /// to the probe set for C = 0.15 or C = 0.45.
    #[arg(long)]
    pub alpha: Option<String>,
    #[arg(long, default_value_t = 1e-6)]
    pub abs_tol: f64,
    #[arg(long, default_value_t = 1e-6)]
    pub rel_tol: f64,
    #[arg(long, default_value_t = 13)]
    pub max_depth: u32,
    #[arg(long, default_value_t = DEFAULT_SPLIT_THRESHOLD)]
    pub split_threshold: f64,
    /// Worker threads; defaults to the available cores.
    #[arg(long)]
    pub workers: Option<usize>,
    /// Sweep all of [0, 2) in slices of 0.01 instead of the probes. Takes
    /// days of CPU time.
    #[arg(long, conflicts_with = "alpha")]
    pub full_sweep: bool,
}

/// `[0, 0]` followed by slices of width 0.01 covering `[0, 1.999]`.
pub fn sweep_slices() -> Vec<Interval> {
    let mut v = vec![Interval::ZERO];
    for k in 0..200 {
        let hi = if k == 199 { 1.999 } else { (k + 1) as f64 / 100.0 };
        v.push(Interval::new(k as f64 / 100.0, hi));
    }
    v
}

pub fn default_probes(c: f64) -> Option<&'static [(f64, f64)]> {
    const LOW: &[(f64, f64)] = &[(0.0, 0.0), (0.02, 0.0201), (0.05, 0.0501), (0.5, 0.5001), (1.0, 1.0001), (1.96, 1.9601)];
    const HIGH: &[(f64, f64)] = &[(0.0, 0.0), (1.0, 1.0001)];
    if c == 0.15 {
        Some(LOW)
    } else if c == 0.45 {
        Some(HIGH)
    } else {
        None
    }
}

#[derive(Serialize)]
struct ConvexityConfig {
    c_phase: f64,
    alpha: Vec<(f64, f64)>,
    abs_tol: f64,
    rel_tol: f64,
    max_depth: u32,
    split_threshold: f64,
}

pub fn prove_convexity(a: &ConvexityArgs) -> Result<bool> {
    let alphas: Vec<Interval> = match &a.alpha {
        _ if a.full_sweep => sweep_slices(),
        Some(s) => s.split(',').filter(|t| !t.trim().is_empty()).map(parse_alpha).collect::<Result<_>>()?,
        None => default_probes(a.c_phase)
            .ok_or_else(|| anyhow!("no default alpha probes for C = {}; pass --alpha", a.c_phase))?
            .iter()
            .map(|&(lo, hi)| Interval::new(lo, hi))
            .collect(),
    };
    let workers = a
        .workers
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let cfg = ConvexityConfig {
        c_phase: a.c_phase,
        alpha: alphas.iter().map(|x| (x.lo(), x.hi())).collect(),
        abs_tol: a.abs_tol,
        rel_tol: a.rel_tol,
        max_depth: a.max_depth,
        split_threshold: a.split_threshold,
    };
    with_manifest("prove-convexity", &a.common, &cfg, || {
        let c = Interval::around(a.c_phase);
        let initial: Vec<ParameterSet> = alphas
            .iter()
            .map(|&al| ParameterSet {
                abs_tol: a.abs_tol,
                rel_tol: a.rel_tol,
                max_depth: a.max_depth,
                ..ParameterSet::new(c, al)
            })
            .collect();
        let out = run_queue(&initial, a.split_threshold, workers);
        for r in out.all_rows() {
            let regime = r.regime.map_or("none", |g| g.name());
            let enc = r.enclosure.map_or("-".to_string(), |e| e.to_string());
            let jump = match r.regime.and_then(|g| convexity_loss_jump(g, r.verdict)) {
                Some(j) => format!("; jump {}2π loses convexity forward in time", if j > 0.0 { "+" } else { "-" }),
                None => String::new(),
            };
            println!("C={} alpha={} {regime} {} {enc}{jump}", a.c_phase, r.alpha, r.verdict.name());
        }
        let paths = write_region_files(&a.common.out_dir, &out)?;
        let non_eval = out.has_non_evaluable();
        if non_eval {
            println!("FAIL some regions could not be evaluated");
        }
        let ok = out.indeterminate.is_empty() && !non_eval;
        println!(
            "{} positive={} negative={} indeterminate={}",
            if ok { "PASS" } else { "FAIL" },
            out.positive.len(),
            out.negative.len(),
            out.indeterminate.len()
        );
        Ok((ok, paths))
    })
}

#[derive(Args, Debug)]
pub struct SimulateArgs {
    #[command(flatten)]
    pub common: Common,
    /// Flat `key = value` configuration file.
    #[arg(long)]
    pub config: PathBuf,
    /// Overrides `alpha` from the configuration file.
    #[arg(long)]
    pub alpha: Option<f64>,
}

/// Contents of a simulation configuration file. Every key is optional.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SimulateFile {
    pub n: usize,
    /// `circle`, `ellipse` or `bump`.
    pub curve: String,
    pub radius: f64,
    pub r1: f64,
    pub r2: f64,
    pub c: f64,
    pub alpha: f64,
    pub jump: f64,
    pub filter_strength: f64,
    pub filter_order: u32,
    pub rk_abs_tol: f64,
    pub rk_rel_tol: f64,
    pub t_final: f64,
    pub snapshot_interval: f64,
    pub arc_chord_fraction: f64,
}

impl Default for SimulateFile {
    fn default() -> Self {
        let s = SimConfig::default();
        SimulateFile {
            n: 512,
            curve: "ellipse".into(),
            radius: 1.0,
            r1: 1.0,
            r2: 3.0,
            c: 0.15,
            alpha: s.alpha,
            jump: s.jump,
            filter_strength: s.filter_strength,
            filter_order: s.filter_order,
            rk_abs_tol: s.rk_abs_tol,
            rk_rel_tol: s.rk_rel_tol,
            t_final: s.t_final,
            snapshot_interval: s.snapshot_interval,
            arc_chord_fraction: s.arc_chord_fraction,
        }
    }
}

impl SimulateFile {
    pub fn sim_config(&self) -> SimConfig {
        SimConfig {
            alpha: self.alpha,
            jump: self.jump,
            filter_strength: self.filter_strength,
            filter_order: self.filter_order,
            rk_abs_tol: self.rk_abs_tol,
            rk_rel_tol: self.rk_rel_tol,
            t_final: self.t_final,
            snapshot_interval: self.snapshot_interval,
            arc_chord_fraction: self.arc_chord_fraction,
        }
    }

    pub fn initial_curve(&self) -> Result<InitialCurve> {
        Ok(match self.curve.as_str() {
            "circle" => InitialCurve::Circle { radius: self.radius },
            "ellipse" => InitialCurve::Ellipse { r1: self.r1, r2: self.r2 },
            "bump" => InitialCurve::Bump { c: self.c },
            other => bail!("unknown curve {other:?}"),
        })
    }
}

pub fn simulate(a: &SimulateArgs) -> Result<bool> {
    let text = fs::read_to_string(&a.config).with_context(|| format!("reading {}", a.config.display()))?;
    let mut file: SimulateFile = toml::from_str(&text).with_context(|| format!("parsing {}", a.config.display()))?;
    if let Some(al) = a.alpha {
        file.alpha = al;
    }
    with_manifest("simulate", &a.common, &file, || {
        let cfg = file.sim_config();
        let state = file.initial_curve()?.sample(file.n)?;
        let ev = evolve(&state, &cfg)?;
        fs::create_dir_all(&a.common.out_dir)?;
        let snap = a.common.out_dir.join("snapshots.csv");
        let diag = a.common.out_dir.join("diagnostics.csv");
        let mut w = BufWriter::new(fs::File::create(&snap)?);
        write_snapshots(&mut w, &ev.snapshots)?;
        w.flush()?;
        let mut w = BufWriter::new(fs::File::create(&diag)?);
        write_diagnostics(&mut w, &ev.diagnostics)?;
        w.flush()?;
        match ev.diagnostics.iter().find(|(_, d)| d.min_curvature < 0.0) {
            Some((t, d)) => println!("convexity lost by t = {t} (min curvature {:.6e})", d.min_curvature),
            None => println!("curve stayed convex at every snapshot"),
        }
        let (a0, a1) = (ev.diagnostics[0].1.area, ev.diagnostics.last().expect("initial diagnostics").1.area);
        println!(
            "final t = {}, relative area drift {:.3e}, max speed variation {:.3e}",
            ev.last().time,
            (a1 - a0) / a0,
            ev.max_speed_variation
        );
        let ok = match &ev.stop {
            Some(e) => {
                println!("halted: {e}");
                false
            }
            None => true,
        };
        Ok((ok, vec![snap, diag]))
    })
}
