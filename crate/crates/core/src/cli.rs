//! Command-line front end for the `dirsum` binary.
//!
//! Exit codes: `0` success, `1` a failed validation or invariant (rejected
//! weight array, oracle discrepancy, failing sweep), `2` bad input.

use std::fs::File;
use std::io::{self, BufReader, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::coefficients::{read_coefficients, write_coefficients, Measure, TaylorPoly, UnitPoint};
use crate::dirac::{converge_dirac, tail_sum, vandermonde_correct};
use crate::douglas::{difference_quotient, mu_norm_sq, multi_decompose};
use crate::error::{Error, Result};
use crate::oracle::{quadrature_norm, QuadratureGrid, REFINEMENT_TOLERANCE};
use crate::summation::{converge_weighted, counterexample_report, lemma47_check, write_records};
use crate::weights::{fejer_ramp, validate, Variant, WeightArray};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED_CHECK: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "dirsum", version, about = "Weighted Dirichlet space norms, decompositions and summation experiments")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WeightKind {
    Boxcar,
    Tapered,
    Fejer,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Shifted,
    Base,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Shifted => Variant::Shifted,
            VariantArg::Base => Variant::Base,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepKind {
    /// Local-versus-uniform comparison inequality on random q.
    Lemma47,
    /// Interpolation residuals of the Vandermonde correction.
    Interpolation,
    /// Tail sums against difference-quotient coefficients.
    Tail,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// D_{μ,m}(f) from the coefficient series, optionally checked by quadrature.
    Norm {
        #[arg(long)]
        measure: String,
        #[arg(long)]
        order: usize,
        #[arg(long)]
        input: PathBuf,
        /// Also integrate the area definition and report the discrepancy.
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value_t = 128)]
        radial_nodes: usize,
        #[arg(long, default_value_t = 512)]
        angular_nodes: usize,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
    /// f = α + (z−λ)g at one point, or the multi-point split at several.
    Decompose {
        #[arg(long)]
        input: PathBuf,
        /// Comma-separated angles in radians.
        #[arg(long)]
        points: String,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
    /// Closed-form and direct norms of the partial-sum counterexample.
    Counterexample {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// ‖f − p_n‖² over a range of n: weighted sums with --weights, otherwise
    /// the interpolation correction for a point-mass measure.
    Converge {
        #[arg(long)]
        measure: String,
        #[arg(long)]
        order: usize,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        n_lo: usize,
        #[arg(long)]
        n_hi: usize,
        /// `boxcar`, `tapered:EPS`, or `table:PATH`.
        #[arg(long)]
        weights: Option<String>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Vandermonde correction coefficients and interpolation residuals.
    Interpolate {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        points: String,
        #[arg(long)]
        order: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Audit a weight array against the four array conditions.
    ValidateWeights {
        #[arg(long, value_enum)]
        kind: WeightKind,
        #[arg(long)]
        order: usize,
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = VariantArg::Shifted)]
        variant: VariantArg,
        #[arg(long, default_value_t = 0.5)]
        eps: f64,
        #[arg(long = "claimed-M")]
        claimed_m: Option<f64>,
        #[arg(long = "claimed-L")]
        claimed_l: Option<f64>,
        #[arg(long, default_value_t = 1e-6)]
        tol_col: f64,
        /// `n,k,re,im` table for --kind table.
        #[arg(long)]
        table: Option<PathBuf>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Seeded randomized invariant sweep.
    Sweep {
        #[arg(long, value_enum)]
        kind: SweepKind,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

/// Parses `sigma` or `points:θ1:c1[,θ2:c2,...]`.
pub fn parse_measure(spec: &str) -> Result<Measure> {
    let spec = spec.trim();
    if spec == "sigma" {
        return Ok(Measure::Uniform);
    }
    let Some(list) = spec.strip_prefix("points:") else {
        return Err(Error::Parse(format!("unknown measure {spec:?}")));
    };
    let mut atoms = Vec::new();
    for item in list.split(',') {
        let (theta, mass) = item
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected θ:c, found {item:?}")))?;
        let theta: f64 = theta
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad angle {theta:?}")))?;
        let mass: f64 = mass
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad mass {mass:?}")))?;
        atoms.push((UnitPoint::new(theta)?, mass));
    }
    Measure::point_masses(atoms)
}

/// Parses a comma-separated list of angles.
pub fn parse_points(spec: &str) -> Result<Vec<UnitPoint>> {
    spec.split(',')
        .map(|s| {
            let theta: f64 = s
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad angle {s:?}")))?;
            UnitPoint::new(theta)
        })
        .collect()
}

fn parse_weights(spec: &str, m: usize) -> Result<WeightArray> {
    let spec = spec.trim();
    if spec == "boxcar" {
        return WeightArray::boxcar(Variant::Shifted, m);
    }
    if let Some(eps) = spec.strip_prefix("tapered:") {
        let eps: f64 = eps
            .parse()
            .map_err(|_| Error::Parse(format!("bad taper {eps:?}")))?;
        return WeightArray::tapered(Variant::Shifted, m, eps);
    }
    if let Some(path) = spec.strip_prefix("table:") {
        let file = File::open(path)?;
        return WeightArray::table_from_csv(BufReader::new(file), Variant::Shifted, m, f64::INFINITY, f64::INFINITY);
    }
    Err(Error::Parse(format!("unknown weight spec {spec:?}")))
}

fn load(path: &Path) -> Result<TaylorPoly> {
    read_coefficients(BufReader::new(File::open(path)?))
}

fn check_order(m: usize) -> Result<()> {
    if m == 0 {
        return Err(Error::InvalidOrder(m));
    }
    Ok(())
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::InvariantViolation(_) | Error::NonConvergent { .. } => EXIT_FAILED_CHECK,
        _ => EXIT_INPUT,
    }
}

/// Sink for the primary output: the `--output` file, or stdout.
fn emit(output: &Option<PathBuf>, write: impl FnOnce(&mut dyn Write) -> Result<()>) -> Result<()> {
    match output {
        Some(path) => {
            let mut file = io::BufWriter::new(File::create(path)?);
            write(&mut file)?;
            file.flush()?;
        }
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            write(&mut lock)?;
        }
    }
    Ok(())
}

fn emit_json<T: Serialize>(output: &Option<PathBuf>, value: &T) -> Result<()> {
    emit(output, |w| {
        serde_json::to_writer_pretty(&mut *w, value)?;
        writeln!(w)?;
        Ok(())
    })
}

/// Summary line: stdout when the data went to a file, stderr otherwise.
fn summary(output: &Option<PathBuf>, line: &str) {
    if output.is_some() {
        println!("{line}");
    } else {
        eprintln!("{line}");
    }
}

#[derive(Serialize)]
struct NormOutput {
    measure: String,
    order: usize,
    series: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    quadrature: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    quadrature_error_estimate: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    discrepancy: Option<f64>,
}

#[derive(Serialize)]
struct CoefficientRow {
    k: usize,
    re: f64,
    im: f64,
}

fn rows(f: &TaylorPoly) -> Vec<CoefficientRow> {
    f.terms()
        .filter(|t| t.1 != Complex64::new(0.0, 0.0))
        .map(|(k, c)| CoefficientRow { k, re: c.re, im: c.im })
        .collect()
}

#[derive(Serialize)]
struct DecomposeOutput {
    points: Vec<f64>,
    residual: Vec<CoefficientRow>,
    core: Vec<CoefficientRow>,
    reconstruction_error: f64,
}

#[derive(Serialize)]
struct ResidualRow {
    theta: f64,
    residual: f64,
}

#[derive(Serialize)]
struct InterpolateOutput {
    order: usize,
    n: usize,
    base_degree: usize,
    correction: Vec<CoefficientRow>,
    polynomial: Vec<CoefficientRow>,
    residuals: Vec<ResidualRow>,
}

#[derive(Serialize)]
struct SweepOutput {
    kind: String,
    seed: u64,
    trials: usize,
    failures: usize,
    worst: f64,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_from_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(config) => run(config),
        Err(e) => {
            let _ = e.print();
            if e.use_stderr() {
                EXIT_INPUT
            } else {
                EXIT_OK
            }
        }
    }
}

/// Runs a parsed configuration and returns the process exit code.
pub fn run(config: RunConfig) -> i32 {
    match dispatch(config.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn dispatch(command: Command) -> Result<i32> {
    match command {
        Command::Norm {
            measure,
            order,
            input,
            oracle,
            radial_nodes,
            angular_nodes,
            output,
            format,
        } => {
            check_order(order)?;
            let mu = parse_measure(&measure)?;
            let f = load(&input)?;
            let grid = QuadratureGrid::new(radial_nodes, angular_nodes, true)?;
            let series = mu_norm_sq(&f, &mu, order);
            let mut out = NormOutput {
                measure,
                order,
                series,
                quadrature: None,
                quadrature_error_estimate: None,
                discrepancy: None,
            };
            let mut code = EXIT_OK;
            if oracle {
                let q = quadrature_norm(&f, &mu, order, &grid)?;
                let discrepancy = (q.value - series).abs();
                out.quadrature = Some(q.value);
                out.quadrature_error_estimate = Some(q.error_estimate);
                out.discrepancy = Some(discrepancy);
                if discrepancy > REFINEMENT_TOLERANCE * series.abs().max(q.value.abs()) {
                    code = EXIT_FAILED_CHECK;
                }
            }
            if output.is_none() {
                match (out.quadrature, out.discrepancy) {
                    (Some(q), Some(d)) => println!("series={series} quadrature={q} discrepancy={d}"),
                    _ => println!("{series}"),
                }
            } else {
                match format {
                    OutputFormat::Json => emit_json(&output, &out)?,
                    OutputFormat::Csv => emit(&output, |w| {
                        let mut wtr = csv::Writer::from_writer(w);
                        wtr.write_record(["measure", "order", "series", "quadrature", "discrepancy"])?;
                        wtr.write_record([
                            out.measure.clone(),
                            order.to_string(),
                            series.to_string(),
                            out.quadrature.map(|v| v.to_string()).unwrap_or_default(),
                            out.discrepancy.map(|v| v.to_string()).unwrap_or_default(),
                        ])?;
                        wtr.flush()?;
                        Ok(())
                    })?,
                }
                summary(&output, &format!("norm {series}"));
            }
            Ok(code)
        }
        Command::Decompose {
            input,
            points,
            output,
            format,
        } => {
            let f = load(&input)?;
            let pts = parse_points(&points)?;
            let (residual, core) = if pts.len() == 1 {
                let d = difference_quotient(&f, &pts[0]);
                (TaylorPoly::from_terms([(0, d.alpha)])?, d.quotient)
            } else {
                let d = multi_decompose(&f, &pts)?;
                (d.residual, d.core)
            };
            let rebuilt = &residual + &(&crate::douglas::node_polynomial(&pts) * &core);
            let err = rebuilt.max_abs_diff(&f);
            if err > 1e-10 * (1.0 + f.max_abs()) {
                return Err(Error::InvariantViolation(format!("reconstruction error {err:e}")));
            }
            match format {
                OutputFormat::Json => emit_json(
                    &output,
                    &DecomposeOutput {
                        points: pts.iter().map(|p| p.theta()).collect(),
                        residual: rows(&residual),
                        core: rows(&core),
                        reconstruction_error: err,
                    },
                )?,
                OutputFormat::Csv => emit(&output, |w| write_coefficients(&core, w))?,
            }
            summary(
                &output,
                &format!("decompose: {} point(s), core degree {:?}, reconstruction error {err:e}", pts.len(), core.degree()),
            );
            Ok(EXIT_OK)
        }
        Command::Counterexample { order, n_max, output } => {
            check_order(order)?;
            let reports = (0..=n_max)
                .map(|n| counterexample_report(order, n))
                .collect::<Result<Vec<_>>>()?;
            emit(&output, |w| {
                let mut wtr = csv::Writer::from_writer(w);
                wtr.write_record(["n", "closed_S", "closed_f", "direct_S", "direct_f", "ratio"])?;
                for r in &reports {
                    wtr.write_record([
                        r.n.to_string(),
                        r.closed_s.to_string(),
                        r.closed_f.to_string(),
                        r.direct_s.to_string(),
                        r.direct_f.to_string(),
                        r.ratio.to_string(),
                    ])?;
                }
                wtr.flush()?;
                Ok(())
            })?;
            let last = reports.last().map(|r| r.ratio).unwrap_or(0.0);
            summary(&output, &format!("counterexample m={order}: ratio at n={n_max} is {last}"));
            Ok(EXIT_OK)
        }
        Command::Converge {
            measure,
            order,
            input,
            n_lo,
            n_hi,
            weights,
            output,
        } => {
            check_order(order)?;
            if n_lo > n_hi {
                return Err(Error::Parse(format!("empty range [{n_lo}, {n_hi}]")));
            }
            let mu = parse_measure(&measure)?;
            let f = load(&input)?;
            let records = match (&weights, &mu) {
                (Some(spec), _) => converge_weighted(&f, &mu, order, &parse_weights(spec, order)?, n_lo, n_hi)?,
                (None, Measure::PointMasses(_)) => converge_dirac(&f, &mu, order, n_lo, n_hi)?,
                (None, Measure::Uniform) => {
                    return Err(Error::Parse("the uniform measure needs --weights".into()));
                }
            };
            emit(&output, |w| write_records(&records, w))?;
            let last = records.last().map(|r| r.norm_sq).unwrap_or(0.0);
            summary(&output, &format!("converge: {} records, final norm_sq {last}", records.len()));
            Ok(EXIT_OK)
        }
        Command::Interpolate {
            input,
            points,
            order,
            n,
            output,
        } => {
            check_order(order)?;
            let f = load(&input)?;
            let pts = parse_points(&points)?;
            let (corrected, system) = vandermonde_correct(&f, &pts, order, n)?;
            let j0 = corrected.base_degree + 1;
            let correction: Vec<CoefficientRow> = system
                .solution
                .iter()
                .enumerate()
                .map(|(i, c)| CoefficientRow { k: j0 + i, re: c.re, im: c.im })
                .collect();
            let residuals: Vec<ResidualRow> = pts
                .iter()
                .zip(corrected.interpolation_residuals(&f))
                .map(|(p, r)| ResidualRow { theta: p.theta(), residual: r })
                .collect();
            if output.is_none() {
                for c in &correction {
                    println!("b[{}] = {} {:+}i", c.k, c.re, c.im);
                }
                for r in &residuals {
                    println!("residual at theta={}: {:e}", r.theta, r.residual);
                }
            } else {
                emit_json(
                    &output,
                    &InterpolateOutput {
                        order,
                        n,
                        base_degree: corrected.base_degree,
                        correction,
                        polynomial: rows(&corrected.poly),
                        residuals,
                    },
                )?;
                summary(&output, &format!("interpolate: {} point(s), base degree {}", pts.len(), corrected.base_degree));
            }
            Ok(EXIT_OK)
        }
        Command::ValidateWeights {
            kind,
            order,
            n_max,
            variant,
            eps,
            claimed_m,
            claimed_l,
            tol_col,
            table,
            output,
        } => {
            check_order(order)?;
            let variant = Variant::from(variant);
            let mut array = match kind {
                WeightKind::Boxcar => WeightArray::boxcar(variant, order)?,
                WeightKind::Tapered => WeightArray::tapered(variant, order, eps)?,
                WeightKind::Fejer => fejer_ramp(variant, order, n_max + 1, 0.0)?,
                WeightKind::Table => {
                    let path = table.ok_or_else(|| Error::Parse("--kind table needs --table".into()))?;
                    WeightArray::table_from_csv(BufReader::new(File::open(path)?), variant, order, 1.0, 0.0)?
                }
            };
            if let Some(mv) = claimed_m {
                array.claimed_m = mv;
            }
            if let Some(lv) = claimed_l {
                array.claimed_l = lv;
            }
            let report = validate(&array, n_max, tol_col)?;
            emit_json(&output, &report)?;
            let failing: Vec<&str> = [
                (!report.cond_support_ok).then_some("support"),
                (!report.cond_bounded_ok).then_some("bounded"),
                (!report.cond_column_ok).then_some("column_limit"),
                (!report.cond_difference_ok).then_some("difference"),
            ]
            .into_iter()
            .flatten()
            .collect();
            let first = report
                .witnesses
                .first()
                .map(|w| format!(" first witness {} at (n={}, k={})", w.condition, w.n, w.k))
                .unwrap_or_default();
            let line = if report.pass {
                format!(
                    "validate-weights: pass (M={}, L={})",
                    report.empirical_m, report.empirical_l
                )
            } else {
                format!("validate-weights: FAIL [{}]{first}", failing.join(", "))
            };
            summary(&output, &line);
            Ok(if report.pass { EXIT_OK } else { EXIT_FAILED_CHECK })
        }
        Command::Sweep {
            kind,
            trials,
            seed,
            output,
        } => {
            let out = sweep(kind, trials, seed)?;
            emit_json(&output, &out)?;
            summary(
                &output,
                &format!("sweep {:?} seed={seed}: {}/{} failures", kind, out.failures, out.trials),
            );
            Ok(if out.failures == 0 { EXIT_OK } else { EXIT_FAILED_CHECK })
        }
    }
}

fn random_poly(rng: &mut ChaCha8Rng, lo: usize, hi: usize) -> Result<TaylorPoly> {
    TaylorPoly::from_terms((lo..=hi).map(|k| (k, Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))))
}

fn random_point(rng: &mut ChaCha8Rng) -> Result<UnitPoint> {
    UnitPoint::new(rng.gen_range(0.0..std::f64::consts::TAU))
}

fn sweep(kind: SweepKind, trials: usize, seed: u64) -> Result<SweepOutput> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = 0;
    let mut worst: f64 = 0.0;
    for _ in 0..trials {
        match kind {
            SweepKind::Lemma47 => {
                let m = rng.gen_range(1..=4);
                let n = rng.gen_range(0..=20);
                let q = random_poly(&mut rng, m + 1, n + m + 1)?;
                let c = lemma47_check(&q, &random_point(&mut rng)?, m, n)?;
                if c.rhs > 0.0 {
                    worst = worst.max(c.lhs / c.rhs);
                }
                failures += usize::from(!c.ok);
            }
            SweepKind::Interpolation => {
                let s = rng.gen_range(1..=5);
                let m = rng.gen_range(1..=3);
                let n = rng.gen_range(s..=s + 10);
                let deg = rng.gen_range(m..=m + 20);
                let f = random_poly(&mut rng, m, deg)?;
                let pts = spread_points(&mut rng, s)?;
                match vandermonde_correct(&f, &pts, m, n) {
                    Ok((p, _)) => {
                        for (pt, r) in pts.iter().zip(p.interpolation_residuals(&f)) {
                            let rel = r / (1.0 + f.boundary_value(pt).norm());
                            worst = worst.max(rel);
                        }
                    }
                    Err(Error::InvariantViolation(_)) => failures += 1,
                    Err(e) => return Err(e),
                }
            }
            SweepKind::Tail => {
                let deg = rng.gen_range(1..=40);
                let f = random_poly(&mut rng, 0, deg)?;
                let p = random_point(&mut rng)?;
                let j0 = rng.gen_range(1..=deg);
                let q = difference_quotient(&f, &p).quotient;
                let diff = (tail_sum(&f, &p, j0) - q.coeff(j0 - 1)).norm();
                worst = worst.max(diff);
                failures += usize::from(diff > 1e-12);
            }
        }
    }
    Ok(SweepOutput {
        kind: format!("{kind:?}").to_lowercase(),
        seed,
        trials,
        failures,
        worst,
    })
}

/// `s` random angles with pairwise separation at least `0.2` rad.
pub fn spread_points(rng: &mut impl Rng, s: usize) -> Result<Vec<UnitPoint>> {
    let mut pts: Vec<UnitPoint> = Vec::with_capacity(s);
    while pts.len() < s {
        let cand = UnitPoint::new(rng.gen_range(0.0..std::f64::consts::TAU))?;
        if pts.iter().all(|p| p.angular_distance(&cand) >= 0.2) {
            pts.push(cand);
        }
    }
    Ok(pts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn measure_specs() {
        assert_eq!(parse_measure("sigma").unwrap(), Measure::Uniform);
        let one = parse_measure("points:0:1").unwrap();
        assert_eq!(one.atoms().len(), 1);
        assert_eq!(one.atoms()[0].mass, 1.0);
        let two = parse_measure("points:0:1,3.14159265:2").unwrap();
        assert_eq!(two.atoms().len(), 2);
        assert!((two.atoms()[1].point.value().re + 1.0).abs() < 1e-15);
        assert_eq!(two.atoms()[1].mass, 2.0);
    }

    #[test]
    fn bad_measure_specs() {
        assert!(matches!(parse_measure("lebesgue"), Err(Error::Parse(_))));
        assert!(matches!(parse_measure("points:0"), Err(Error::Parse(_))));
        assert!(matches!(parse_measure("points:0:-1"), Err(Error::NonPositiveMass(_))));
        assert!(matches!(parse_measure("points:0:1,0:2"), Err(Error::DuplicatePoints(0, 1))));
        assert!(matches!(parse_measure("points:x:1"), Err(Error::Parse(_))));
    }

    #[test]
    fn weight_specs() {
        assert_eq!(parse_weights("boxcar", 2).unwrap().claimed_l, 0.0);
        assert_eq!(parse_weights("tapered:0.25", 2).unwrap().claimed_l, 0.25);
        assert!(parse_weights("fejer", 2).is_err());
    }

    #[test]
    fn error_classes() {
        assert_eq!(exit_code(&Error::Parse("x".into())), EXIT_INPUT);
        assert_eq!(exit_code(&Error::DuplicatePoints(0, 1)), EXIT_INPUT);
        assert_eq!(exit_code(&Error::InvariantViolation("x".into())), EXIT_FAILED_CHECK);
        assert_eq!(exit_code(&Error::NonConvergent { coarse: 1.0, fine: 2.0 }), EXIT_FAILED_CHECK);
    }

    #[test]
    fn sweeps_are_deterministic() {
        let a = serde_json::to_string(&sweep(SweepKind::Lemma47, 50, 7).unwrap()).unwrap();
        let b = serde_json::to_string(&sweep(SweepKind::Lemma47, 50, 7).unwrap()).unwrap();
        assert_eq!(a, b);
        assert_eq!(sweep(SweepKind::Tail, 100, 1).unwrap().failures, 0);
        assert_eq!(sweep(SweepKind::Interpolation, 50, 3).unwrap().failures, 0);
    }
}
