//! Command-line surface of `capcover`: argument definitions and the
//! subcommands, writing to any output stream so they can be tested in-process.

pub mod format;

use std::io::{self, Write};
use std::path::{Path, PathBuf};

use capcover::catalog::{all_entries, CATALOG_SIZES};
use capcover::optimize::{code_to_params, multi_start, perturb, run_converge, ConvergeResult};
use capcover::{
    approx_radius, build_code, catalog_entry, covering_radius, cross_check_table, suggested_height, verify_entry, ConvergeOptions,
    SphericalCode, SymmetryScheme,
};
use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

pub use format::{detect, fmt17, parse_code_file, write_circles, write_code, write_off, Format, ParseError};

/// Largest accepted gap between computed and recorded radius in `check-table`.
pub const TABLE_TOLERANCE_DEG: f64 = 1e-8;

#[derive(Debug, Parser)]
#[command(name = "capcover", version, about = "Equal-cap coverings of the sphere")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Covering radius of a code file.
    Radius {
        file: PathBuf,
        #[arg(long, value_enum)]
        format: Option<Format>,
        /// Also print radians, height and the farthest point.
        #[arg(long)]
        full: bool,
    },
    /// Emit a catalog code, or list the catalog without --n.
    Catalog {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value = "xyz")]
        format: Format,
        /// Write cap boundary circles at the covering radius to this file.
        #[arg(long)]
        circles: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run every check on catalog entries.
    Verify {
        #[arg(long, conflicts_with = "all", required_unless_present = "all")]
        n: Option<usize>,
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[arg(long)]
        json: bool,
    },
    /// Computed radii beside the reference and recorded columns.
    CheckTable {
        #[arg(long)]
        csv: bool,
    },
    /// Converge a code to a local optimum.
    Optimize {
        file: PathBuf,
        #[arg(long, value_enum)]
        format: Option<Format>,
        /// Scheme id; defaults to the catalog scheme for the code's size.
        #[arg(long)]
        scheme: Option<String>,
        #[arg(long, default_value_t = 500)]
        iters: usize,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        /// Perturbation magnitude in radians applied before each start.
        #[arg(long, default_value_t = 0.0)]
        perturb: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        starts: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "xyz")]
        out_format: Format,
        #[arg(long)]
        verbose: bool,
    },
    /// The fitted radius estimate r(n).
    Approx {
        #[arg(long)]
        n: usize,
    },
    /// Data for plots.
    Export {
        #[arg(long, value_enum)]
        plot: Plot,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Plot {
    RadiusVsN,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error("{0}")]
    Catalog(#[from] capcover::CatalogError),
    #[error("{0}")]
    Approx(#[from] capcover::ApproxError),
    #[error("{0}")]
    Voronoi(#[from] capcover::VoronoiError),
    #[error("{0}")]
    Scheme(#[from] capcover::optimize::SchemeError),
    #[error("{0}")]
    Converge(String),
    #[error("{0}")]
    Output(#[from] io::Error),
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|source| CliError::Io { path: path.into(), source })
}

fn load(path: &Path, format: Option<Format>) -> Result<SphericalCode, CliError> {
    parse_code_file(&read(path)?, format).map_err(|source| CliError::Parse { path: path.into(), source })
}

/// Runs one command. `Ok` carries the exit code: 0, or 1 when a check failed.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    match &cli.command {
        Command::Radius { file, format, full } => radius(&load(file, *format)?, *full, out),
        Command::Catalog { n: None, .. } => list(out),
        Command::Catalog { n: Some(n), format, circles, out: path } => catalog(*n, *format, circles.as_deref(), path.as_deref(), out),
        Command::Verify { n, all, tol, json } => verify(*n, *all, *tol, *json, out),
        Command::CheckTable { csv } => check_table(*csv, out),
        Command::Optimize { file, format, scheme, iters, tol, perturb, seed, starts, out: path, out_format, verbose } => {
            let code = load(file, *format)?;
            let opts = ConvergeOptions { max_iters: *iters, tol: *tol, ..ConvergeOptions::default() };
            let run = OptimizeRun { scheme: scheme.as_deref(), opts, perturb: *perturb, seed: *seed, starts: (*starts).max(1), verbose: *verbose };
            optimize(&code, &run, path.as_deref(), *out_format, out, err)
        }
        Command::Approx { n } => approx(*n, out),
        Command::Export { plot: Plot::RadiusVsN, out: path } => {
            write_file(path, &radius_vs_n()?)?;
            Ok(0)
        }
    }
}

fn radius(code: &SphericalCode, full: bool, out: &mut dyn Write) -> Result<i32, CliError> {
    let cov = covering_radius(code)?;
    writeln!(out, "{:.10}", cov.degrees())?;
    if full {
        let [x, y, z] = cov.witness_vertex.to_array();
        writeln!(out, "radians {}", fmt17(cov.angular_radius()))?;
        writeln!(out, "height {}", fmt17(cov.cap.height()))?;
        writeln!(out, "planar-radius {}", fmt17(cov.cap.planar_radius()))?;
        writeln!(out, "farthest-point {} {} {}", fmt17(x), fmt17(y), fmt17(z))?;
        let caps: Vec<String> = cov.witness_caps.iter().map(|c| (c + 1).to_string()).collect();
        writeln!(out, "nearest-caps {}", caps.join(" "))?;
    }
    Ok(0)
}

fn list(out: &mut dyn Write) -> Result<i32, CliError> {
    for e in all_entries() {
        writeln!(out, "{:>3} {:<20} {:<17} {}", e.n, e.status.label(), e.scheme_id, fmt_deg(e.recorded_degrees))?;
    }
    Ok(0)
}

fn catalog(n: usize, format: Format, circles: Option<&Path>, path: Option<&Path>, out: &mut dyn Write) -> Result<i32, CliError> {
    let code = build_code(&catalog_entry(n)?)?;
    let text = write_code(&code, format);
    match path {
        Some(p) => write_file(p, &text)?,
        None => out.write_all(text.as_bytes())?,
    }
    if let Some(p) = circles {
        write_file(p, &write_circles(&code, covering_radius(&code)?.angular_radius()))?;
    }
    Ok(0)
}

fn verify(n: Option<usize>, all: bool, tol: f64, json: bool, out: &mut dyn Write) -> Result<i32, CliError> {
    let entries = if all { all_entries() } else { vec![catalog_entry(n.expect("clap requires --n without --all"))?] };
    let reports: Vec<_> = entries.iter().map(|e| verify_entry(e, tol)).collect();
    let ok = reports.iter().all(|r| r.passed());
    if json {
        serde_json::to_writer_pretty(&mut *out, &reports).map_err(io::Error::other)?;
        writeln!(out)?;
    } else {
        for r in &reports {
            let computed = r.computed_degrees.map_or("-".to_string(), fmt_deg);
            writeln!(out, "{:>3} {} {} {}", r.n, if r.passed() { "PASS" } else { "FAIL" }, computed, r.status.label())?;
            for c in r.failures() {
                writeln!(out, "      {}: {:e} > {:e} ({})", c.name, c.measured, c.limit, c.detail)?;
            }
        }
        let failed = reports.iter().filter(|r| !r.passed()).count();
        writeln!(out, "{} of {} entries pass", reports.len() - failed, reports.len())?;
    }
    Ok(if ok { 0 } else { 1 })
}

fn fmt_deg(d: f64) -> String {
    format!("{d:.10}")
}

fn check_table(csv: bool, out: &mut dyn Write) -> Result<i32, CliError> {
    let rows = cross_check_table()?;
    let reference = |r: Option<f64>| r.map_or(String::new(), |v| format!("{v:.6}"));
    if csv {
        writeln!(out, "n,reference_deg,computed_deg,recorded_deg,deviation_deg,status")?;
    } else {
        writeln!(out, "{:>3}  {:>11}  {:>15}  {:>15}  {:>9}  status", "n", "reference", "computed", "recorded", "deviation")?;
    }
    let mut bad = 0;
    for r in &rows {
        let dev = r.computed_degrees - r.recorded_degrees;
        if dev.abs() > TABLE_TOLERANCE_DEG {
            bad += 1;
        }
        if csv {
            writeln!(
                out,
                "{},{},{},{},{:.3e},{}",
                r.n,
                reference(r.reference_degrees),
                fmt_deg(r.computed_degrees),
                fmt_deg(r.recorded_degrees),
                dev,
                r.status.label()
            )?;
        } else {
            let marked = format!("{}{}", fmt_deg(r.computed_degrees), r.status.marker());
            writeln!(
                out,
                "{:>3}  {:>11}  {:<15}  {:>15}  {:>9.1e}  {}",
                r.n,
                reference(r.reference_degrees),
                marked,
                fmt_deg(r.recorded_degrees),
                dev,
                r.status.label()
            )?;
        }
    }
    if !csv {
        writeln!(out, "† local minimum   * needs investigation   ⋄ lower than the reference")?;
    }
    Ok(if bad == 0 { 0 } else { 1 })
}

struct OptimizeRun<'a> {
    scheme: Option<&'a str>,
    opts: ConvergeOptions<f64>,
    perturb: f64,
    seed: u64,
    starts: usize,
    verbose: bool,
}

/// The requested scheme, or the catalog scheme for the code's size when the
/// code lies on it, or the generic scheme.
fn pick_scheme(code: &SphericalCode, id: Option<&str>, err: &mut dyn Write) -> Result<SymmetryScheme, CliError> {
    if let Some(id) = id {
        return Ok(SymmetryScheme::by_id(id, code.len())?);
    }
    let s = SymmetryScheme::for_catalog(code.len());
    if s.is_generic() || code_to_params(&s, code).is_ok() {
        return Ok(s);
    }
    writeln!(err, "note: code is off the {} scheme; using the generic scheme", s.id())?;
    Ok(SymmetryScheme::generic(code.len()))
}

fn optimize(
    code: &SphericalCode,
    run: &OptimizeRun,
    path: Option<&Path>,
    out_format: Format,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, CliError> {
    let scheme = pick_scheme(code, run.scheme, err)?;
    let seeds: Vec<u64> = (0..run.starts as u64).map(|k| run.seed + k).collect();
    let best: ConvergeResult<f64> = if run.starts > 1 {
        let outcomes = multi_start(code, &scheme, run.perturb, &seeds, &run.opts);
        for o in &outcomes {
            match &o.result {
                Ok(r) => writeln!(out, "start seed={} radius={} iterations={}", o.seed, fmt_deg(r.covering.degrees()), r.iterations)?,
                Err(e) => writeln!(out, "start seed={} failed: {e}", o.seed)?,
            }
        }
        outcomes
            .into_iter()
            .find_map(|o| o.result.ok())
            .ok_or_else(|| CliError::Converge("every start failed".into()))?
    } else {
        run_converge(&perturb(code, run.perturb, run.seed), &scheme, &run.opts).map_err(|e| CliError::Converge(e.to_string()))?
    };
    if run.verbose {
        for (k, r) in best.history.iter().enumerate() {
            writeln!(out, "iteration {} radius={}", k + 1, fmt_deg(r.to_degrees()))?;
        }
    }
    writeln!(out, "scheme {}", scheme.id())?;
    writeln!(out, "initial {}", fmt_deg(best.initial_radius.to_degrees()))?;
    writeln!(out, "final {}", fmt_deg(best.covering.degrees()))?;
    writeln!(out, "height {}", fmt17(best.height()))?;
    writeln!(out, "iterations {}", best.iterations)?;
    writeln!(out, "converged {}", best.converged)?;
    if let Some(p) = path {
        write_file(p, &write_code(&best.code, out_format))?;
    }
    Ok(0)
}

fn approx(n: usize, out: &mut dyn Write) -> Result<i32, CliError> {
    let theta = approx_radius(n)?;
    writeln!(out, "n {n}")?;
    writeln!(out, "radius-rad {}", fmt17(theta))?;
    writeln!(out, "radius-deg {}", fmt_deg(theta.to_degrees()))?;
    writeln!(out, "suggested-height {}", fmt17(suggested_height(n)?))?;
    Ok(0)
}

/// CSV of n, the catalog radius where there is one, and the estimate.
pub fn radius_vs_n() -> Result<String, CliError> {
    let mut s = String::from("n,catalog_deg,approx_deg\n");
    for n in 2..=capcover::approx::MAX_N {
        let cat = if CATALOG_SIZES.contains(&n) {
            fmt_deg(covering_radius(&build_code(&catalog_entry(n)?)?)?.degrees())
        } else {
            String::new()
        };
        let est = approx_radius(n).map(|r| fmt_deg(r.to_degrees())).unwrap_or_default();
        s.push_str(&format!("{n},{cat},{est}\n"));
    }
    Ok(s)
}
