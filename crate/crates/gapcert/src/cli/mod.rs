//! Command-line front end: construct annuli, certify them, sweep families,
//! and export plot-ready tables.
//!
//! Exit codes: 0 success / all gates pass, 1 certification failure, 2 usage
//! error, 3 numerical failure.

pub mod output;

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::catenoid::{geometry, Catenoid, CatenoidModel, CriticalCatenoid};
use crate::error::Error;
use crate::numerics::NumericsConfig;
use crate::pinch::{self, Gates};
use crate::profile::{self, ProfileSolution};
use output::{FamilyRow, Format, SurfaceRow};

/// Angular resolution of exported surface grids.
const EXPORT_THETA_NODES: usize = 32;
/// Angular resolution of certification grids.
const CERTIFY_THETA_NODES: usize = 16;

#[derive(Parser, Debug)]
#[command(
    name = "gapcert",
    about = "Free-boundary rotational minimal annuli in space-form balls, \
             with curvature pinching certification",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Shoot the hyperbolic profile equation from a neck value c.
    Shoot(ConstructArgs),
    /// Invert the shooting map: find c whose ball radius matches --radius.
    Solve(ConstructArgs),
    /// Construct a surface and print its certification report.
    Verify(ConstructArgs),
    /// Sweep a family parameter and print one row per member.
    Family(FamilyArgs),
    /// Export a profile or surface grid to a file.
    Export(ExportArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Space {
    Euclidean,
    Hyperbolic,
    Spherical,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GridKind {
    Profile,
    Surface,
}

#[derive(Args, Debug)]
struct ConstructArgs {
    /// Ambient space form.
    #[arg(long, value_enum)]
    space: Space,
    /// Neck value of the profile construction (hyperbolic, in (0, 1)).
    #[arg(long)]
    c: Option<f64>,
    /// Parameter of the closed-form catenoid families.
    #[arg(long = "a", allow_negative_numbers = true)]
    a_param: Option<f64>,
    /// Geodesic ball radius to solve for.
    #[arg(long)]
    radius: Option<f64>,
    /// Meridian grid density (>= 16).
    #[arg(long)]
    samples: Option<usize>,
    /// Table format for --out.
    #[arg(long)]
    format: Option<Format>,
    /// Write the constructed grid to this path.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Optional key = value configuration file.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct FamilyArgs {
    #[arg(long, value_enum)]
    space: Space,
    /// Profile sweep range (hyperbolic).
    #[arg(long = "c-min")]
    c_min: Option<f64>,
    #[arg(long = "c-max")]
    c_max: Option<f64>,
    /// Catenoid-parameter sweep range.
    #[arg(long = "a-min", allow_negative_numbers = true)]
    a_min: Option<f64>,
    #[arg(long = "a-max", allow_negative_numbers = true)]
    a_max: Option<f64>,
    /// Number of family members.
    #[arg(long)]
    steps: usize,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    format: Option<Format>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ExportArgs {
    #[arg(long, value_enum)]
    space: Space,
    #[arg(long)]
    c: Option<f64>,
    #[arg(long = "a", allow_negative_numbers = true)]
    a_param: Option<f64>,
    #[arg(long)]
    radius: Option<f64>,
    /// Which grid to export.
    #[arg(long, value_enum, default_value = "profile")]
    grid: GridKind,
    /// Output path (required).
    #[arg(long)]
    out: PathBuf,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    format: Option<Format>,
    #[arg(long)]
    config: Option<PathBuf>,
}

/// Failures mapped to process exit codes.
#[derive(Debug)]
pub enum CliError {
    /// Bad flags or config contents (exit 2).
    Usage(String),
    /// Gates failed on an otherwise successful construction (exit 1).
    Certification,
    /// Construction or evaluation failure (exit 3).
    Numerical(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        CliError::Numerical(e)
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Settings merged from defaults, the optional config file, and flags.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub samples: usize,
    pub format: Format,
    pub numerics: NumericsConfig,
}

impl Default for RunConfig {
    fn default() -> RunConfig {
        RunConfig {
            samples: 400,
            format: Format::Csv,
            numerics: NumericsConfig::default(),
        }
    }
}

impl RunConfig {
    fn assemble(
        config: Option<&Path>,
        samples: Option<usize>,
        format: Option<Format>,
    ) -> CliResult<RunConfig> {
        let mut run = RunConfig::default();
        if let Some(path) = config {
            run.apply_file(path)?;
        }
        if let Some(samples) = samples {
            run.samples = samples;
        }
        if let Some(format) = format {
            run.format = format;
        }
        if run.samples < 16 {
            return Err(CliError::Usage(format!(
                "--samples must be at least 16, got {}",
                run.samples
            )));
        }
        run.numerics
            .validate()
            .map_err(|e| CliError::Usage(e.to_string()))?;
        Ok(run)
    }

    /// Apply `key = value` lines; flags given on the command line win.
    fn apply_file(&mut self, path: &Path) -> CliResult<()> {
        let text = std::fs::read_to_string(path).map_err(|e| {
            CliError::Usage(format!("cannot read config file {}: {e}", path.display()))
        })?;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(CliError::Usage(format!(
                    "config line {} is not 'key = value': '{raw}'",
                    lineno + 1
                )));
            };
            let key = key.trim();
            let value = value.trim();
            let parse_f64 = || {
                value.parse::<f64>().map_err(|e| {
                    CliError::Usage(format!("config key {key}: bad float '{value}': {e}"))
                })
            };
            match key {
                "ode_rel_tol" => self.numerics.ode_rel_tol = parse_f64()?,
                "ode_abs_tol" => self.numerics.ode_abs_tol = parse_f64()?,
                "quad_tol" => self.numerics.quad_tol = parse_f64()?,
                "root_tol" => self.numerics.root_tol = parse_f64()?,
                "fd_step" => self.numerics.fd_step = parse_f64()?,
                "max_steps" => {
                    self.numerics.max_steps = value.parse().map_err(|e| {
                        CliError::Usage(format!("config key max_steps: '{value}': {e}"))
                    })?
                }
                "samples" => {
                    self.samples = value.parse().map_err(|e| {
                        CliError::Usage(format!("config key samples: '{value}': {e}"))
                    })?
                }
                "format" => {
                    self.format = value.parse().map_err(CliError::Usage)?;
                }
                other => {
                    return Err(CliError::Usage(format!("unknown config key '{other}'")));
                }
            }
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct ShootSummary {
    c: f64,
    t_max: f64,
    #[serde(rename = "R")]
    radius: f64,
    max_minimality_residual: f64,
}

fn profile_summary(solution: &ProfileSolution) -> CliResult<ShootSummary> {
    let mut residual = 0.0f64;
    for p in &solution.samples {
        let (km, kp) = pinch::conformal_curvatures(p.t, p.f, p.fp, p.fpp)?;
        residual = residual.max((km + kp).abs());
    }
    Ok(ShootSummary {
        c: solution.c,
        t_max: solution.t_max,
        radius: solution.radius,
        max_minimality_residual: residual,
    })
}

fn exactly_one_parameter(args: &ConstructArgs) -> CliResult<()> {
    let given = [args.c, args.a_param, args.radius]
        .iter()
        .filter(|v| v.is_some())
        .count();
    if given != 1 {
        return Err(CliError::Usage(
            "exactly one of --c, --a, --radius must be given".into(),
        ));
    }
    Ok(())
}

fn check_neck(c: f64) -> CliResult<f64> {
    if c > 0.0 && c < 1.0 {
        Ok(c)
    } else {
        Err(CliError::Usage(format!("--c must lie in (0, 1), got {c}")))
    }
}

fn write_table(path: &Path, text: &str) -> CliResult<()> {
    std::fs::write(path, text).map_err(|e| CliError::Numerical(Error::Io(e)))
}

fn profile_table(solution: &ProfileSolution, format: Format) -> CliResult<String> {
    Ok(match format {
        Format::Csv => output::profile_csv(solution),
        Format::Json => {
            let rows: Vec<serde_json::Value> = solution
                .samples
                .iter()
                .map(|s| serde_json::json!({"t": s.t, "f": s.f, "fp": s.fp, "fpp": s.fpp}))
                .collect();
            output::to_json(&rows)?
        }
    })
}

fn surface_table(rows: &[SurfaceRow], format: Format) -> CliResult<String> {
    Ok(match format {
        Format::Csv => output::surface_csv(rows),
        Format::Json => output::to_json(&rows)?,
    })
}

fn cmd_shoot<W: Write>(args: &ConstructArgs, invert: bool, out: &mut W) -> CliResult<()> {
    if args.space != Space::Hyperbolic {
        return Err(CliError::Usage(
            "profile shooting is hyperbolic-only; the Euclidean regression runs through \
             verify/export"
                .into(),
        ));
    }
    let run = RunConfig::assemble(args.config.as_deref(), args.samples, args.format)?;
    let solution = if invert {
        let radius = args.radius.ok_or_else(|| {
            CliError::Usage("solve needs --radius (shoot takes --c instead)".into())
        })?;
        if args.c.is_some() || args.a_param.is_some() {
            return Err(CliError::Usage("solve takes only --radius".into()));
        }
        if !(radius.is_finite() && radius > 0.0) {
            return Err(CliError::Usage(format!(
                "--radius must be positive, got {radius}"
            )));
        }
        profile::solve_for_radius(radius, run.samples, &run.numerics)?
    } else {
        let c = args
            .c
            .ok_or_else(|| CliError::Usage("shoot needs --c".into()))?;
        if args.radius.is_some() || args.a_param.is_some() {
            return Err(CliError::Usage("shoot takes only --c".into()));
        }
        profile::solve_profile(check_neck(c)?, run.samples, &run.numerics)?
    };
    let summary = profile_summary(&solution)?;
    writeln!(out, "{}", output::to_json(&summary)?).map_err(Error::Io)?;
    if let Some(path) = &args.out {
        write_table(path, &profile_table(&solution, run.format)?)?;
        writeln!(out, "wrote {}", path.display()).map_err(Error::Io)?;
    }
    Ok(())
}

fn certification_grid(samples: usize) -> usize {
    // Meridian resolution of parametric certification grids.
    samples.clamp(65, 257)
}

fn cmd_verify<W: Write>(args: &ConstructArgs, out: &mut W) -> CliResult<()> {
    let run = RunConfig::assemble(args.config.as_deref(), args.samples, args.format)?;
    let (report, gates) = match args.space {
        Space::Hyperbolic => {
            exactly_one_parameter(args)?;
            if let Some(a) = args.a_param {
                let cat = Catenoid::new(CatenoidModel::Hyperbolic, a, &run.numerics)?;
                (
                    pinch::certify_catenoid(
                        &cat,
                        certification_grid(run.samples),
                        CERTIFY_THETA_NODES,
                    )?,
                    Gates::parametric(),
                )
            } else {
                let solution = match (args.c, args.radius) {
                    (Some(c), None) => {
                        profile::solve_profile(check_neck(c)?, run.samples, &run.numerics)?
                    }
                    (None, Some(r)) => profile::solve_for_radius(r, run.samples, &run.numerics)?,
                    _ => unreachable!("exactly_one_parameter"),
                };
                (pinch::certify_profile(&solution)?, Gates::profile())
            }
        }
        Space::Spherical => {
            let Some(a) = args.a_param else {
                return Err(CliError::Usage(
                    "spherical surfaces are parametrized by --a in (-1/2, 0)".into(),
                ));
            };
            if args.c.is_some() || args.radius.is_some() {
                return Err(CliError::Usage("spherical verify takes only --a".into()));
            }
            let cat = Catenoid::new(CatenoidModel::Spherical, a, &run.numerics)?;
            (
                pinch::certify_catenoid(
                    &cat,
                    certification_grid(run.samples),
                    CERTIFY_THETA_NODES,
                )?,
                Gates::parametric(),
            )
        }
        Space::Euclidean => {
            if args.c.is_some() || args.a_param.is_some() || args.radius.is_some() {
                return Err(CliError::Usage(
                    "the Euclidean regression is the critical catenoid of the unit ball and \
                     takes no construction parameter"
                        .into(),
                ));
            }
            let cat = CriticalCatenoid::new(&run.numerics)?;
            (
                pinch::certify_critical_catenoid(
                    &cat,
                    certification_grid(run.samples),
                    CERTIFY_THETA_NODES,
                )?,
                Gates::parametric(),
            )
        }
    };
    writeln!(out, "{}", output::to_json(&report)?).map_err(Error::Io)?;
    if report.passes(&gates) {
        Ok(())
    } else {
        Err(CliError::Certification)
    }
}

fn sweep_params(lo: f64, hi: f64, steps: usize) -> CliResult<Vec<f64>> {
    if steps == 0 {
        return Err(CliError::Usage("--steps must be at least 1".into()));
    }
    if !(lo.is_finite() && hi.is_finite()) || hi < lo {
        return Err(CliError::Usage(format!(
            "empty or inverted range [{lo}, {hi}]"
        )));
    }
    if steps == 1 {
        return Ok(vec![lo]);
    }
    Ok((0..steps)
        .map(|i| lo + (hi - lo) * i as f64 / (steps - 1) as f64)
        .collect())
}

fn family_row_profile(c: f64, run: &RunConfig) -> CliResult<FamilyRow> {
    let solution = profile::solve_profile(c, run.samples, &run.numerics)?;
    let report = pinch::certify_profile(&solution)?;
    Ok(FamilyRow {
        param: c,
        t_max_or_s0: solution.t_max,
        radius: solution.radius,
        neck_r: solution.neck_radius,
        sup_q: report.sup_q,
        pass: report.passes(&Gates::profile()),
    })
}

fn family_row_catenoid(model: CatenoidModel, a: f64, run: &RunConfig) -> CliResult<FamilyRow> {
    let cat = Catenoid::new(model, a, &run.numerics)?;
    let report =
        pinch::certify_catenoid(&cat, certification_grid(run.samples), CERTIFY_THETA_NODES)?;
    Ok(FamilyRow {
        param: a,
        t_max_or_s0: cat.s0,
        radius: cat.radius,
        neck_r: cat.neck_radius(),
        sup_q: report.sup_q,
        pass: report.passes(&Gates::parametric()),
    })
}

fn cmd_family<W: Write>(args: &FamilyArgs, out: &mut W) -> CliResult<()> {
    let run = RunConfig::assemble(args.config.as_deref(), args.samples, args.format)?;
    let c_range = match (args.c_min, args.c_max) {
        (Some(lo), Some(hi)) => Some((lo, hi)),
        (None, None) => None,
        _ => {
            return Err(CliError::Usage(
                "--c-min and --c-max must be given together".into(),
            ))
        }
    };
    let a_range = match (args.a_min, args.a_max) {
        (Some(lo), Some(hi)) => Some((lo, hi)),
        (None, None) => None,
        _ => {
            return Err(CliError::Usage(
                "--a-min and --a-max must be given together".into(),
            ))
        }
    };
    // Members evaluate in parallel; rows stay ordered by parameter.
    let rows: Vec<FamilyRow> = match (args.space, c_range, a_range) {
        (Space::Hyperbolic, Some((lo, hi)), None) => {
            if lo <= 0.0 || hi >= 1.0 {
                return Err(CliError::Usage(format!(
                    "profile sweep needs 0 < c-min <= c-max < 1, got [{lo}, {hi}]"
                )));
            }
            sweep_params(lo, hi, args.steps)?
                .par_iter()
                .map(|&c| family_row_profile(c, &run))
                .collect::<CliResult<_>>()?
        }
        (Space::Hyperbolic, None, Some((lo, hi))) => sweep_params(lo, hi, args.steps)?
            .par_iter()
            .map(|&a| family_row_catenoid(CatenoidModel::Hyperbolic, a, &run))
            .collect::<CliResult<_>>()?,
        (Space::Spherical, None, Some((lo, hi))) => sweep_params(lo, hi, args.steps)?
            .par_iter()
            .map(|&a| family_row_catenoid(CatenoidModel::Spherical, a, &run))
            .collect::<CliResult<_>>()?,
        (Space::Euclidean, _, _) => {
            return Err(CliError::Usage(
                "the Euclidean family has a single member; use verify --space euclidean".into(),
            ))
        }
        (_, Some(_), Some(_)) => {
            return Err(CliError::Usage(
                "give either a c-range or an a-range, not both".into(),
            ))
        }
        (Space::Hyperbolic, None, None) | (Space::Spherical, None, None) => {
            return Err(CliError::Usage(
                "family needs --c-min/--c-max or --a-min/--a-max".into(),
            ))
        }
        (Space::Spherical, Some(_), None) => {
            return Err(CliError::Usage(
                "spherical families are parametrized by --a-min/--a-max".into(),
            ))
        }
    };
    let text = match run.format {
        Format::Csv => output::family_csv(&rows),
        Format::Json => {
            let mut t = output::to_json(&rows)?;
            t.push('\n');
            t
        }
    };
    write!(out, "{text}").map_err(Error::Io)?;
    if let Some(path) = &args.out {
        write_table(path, &text)?;
        writeln!(out, "wrote {}", path.display()).map_err(Error::Io)?;
    }
    Ok(())
}

fn surface_rows_quadric(cat: &Catenoid, samples: usize) -> CliResult<Vec<SurfaceRow>> {
    let grid = geometry::surface_grid(cat, samples, EXPORT_THETA_NODES, geometry::SURFACE_FD_STEP)?;
    Ok(grid
        .iter()
        .map(|p| SurfaceRow::new(p.s, p.theta, &p.sample))
        .collect())
}

fn cmd_export<W: Write>(args: &ExportArgs, out: &mut W) -> CliResult<()> {
    let run = RunConfig::assemble(args.config.as_deref(), args.samples, args.format)?;
    let construct = ConstructArgs {
        space: args.space,
        c: args.c,
        a_param: args.a_param,
        radius: args.radius,
        samples: args.samples,
        format: args.format,
        out: None,
        config: args.config.clone(),
    };
    let text = match args.grid {
        GridKind::Profile => {
            if args.space != Space::Hyperbolic {
                return Err(CliError::Usage(
                    "profile grids exist for the hyperbolic construction only".into(),
                ));
            }
            exactly_one_parameter(&construct)?;
            let solution = match (args.c, args.radius) {
                (Some(c), None) => {
                    profile::solve_profile(check_neck(c)?, run.samples, &run.numerics)?
                }
                (None, Some(r)) => profile::solve_for_radius(r, run.samples, &run.numerics)?,
                _ => {
                    return Err(CliError::Usage(
                        "profile export takes --c or --radius".into(),
                    ))
                }
            };
            profile_table(&solution, run.format)?
        }
        GridKind::Surface => match args.space {
            Space::Hyperbolic => {
                let Some(a) = args.a_param else {
                    return Err(CliError::Usage(
                        "hyperbolic surface grids come from the quadric model: give --a > 1/2"
                            .into(),
                    ));
                };
                let cat = Catenoid::new(CatenoidModel::Hyperbolic, a, &run.numerics)?;
                surface_table(&surface_rows_quadric(&cat, run.samples)?, run.format)?
            }
            Space::Spherical => {
                let Some(a) = args.a_param else {
                    return Err(CliError::Usage(
                        "spherical surface grids need --a in (-1/2, 0)".into(),
                    ));
                };
                let cat = Catenoid::new(CatenoidModel::Spherical, a, &run.numerics)?;
                surface_table(&surface_rows_quadric(&cat, run.samples)?, run.format)?
            }
            Space::Euclidean => {
                if args.c.is_some() || args.a_param.is_some() || args.radius.is_some() {
                    return Err(CliError::Usage(
                        "the Euclidean surface is the critical catenoid and takes no parameter"
                            .into(),
                    ));
                }
                let cat = CriticalCatenoid::new(&run.numerics)?;
                let grid = geometry::critical_surface_grid(
                    &cat,
                    run.samples,
                    EXPORT_THETA_NODES,
                    geometry::SURFACE_FD_STEP,
                )?;
                let rows: Vec<SurfaceRow> = grid
                    .iter()
                    .map(|p| SurfaceRow::new(p.s, p.theta, &p.sample))
                    .collect();
                surface_table(&rows, run.format)?
            }
        },
    };
    write_table(&args.out, &text)?;
    writeln!(out, "wrote {}", args.out.display()).map_err(Error::Io)?;
    Ok(())
}

/// Run a parsed command against a writer (testable entry point).
fn execute<W: Write>(cli: Cli, out: &mut W) -> CliResult<()> {
    match &cli.command {
        Command::Shoot(args) => cmd_shoot(args, false, out),
        Command::Solve(args) => cmd_shoot(args, true, out),
        Command::Verify(args) => cmd_verify(args, out),
        Command::Family(args) => cmd_family(args, out),
        Command::Export(args) => cmd_export(args, out),
    }
}

/// Run from raw arguments; returns the process exit code and writes
/// diagnostics to stderr.
pub fn run_from_args<I, T, W>(args: I, out: &mut W) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
    W: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are successes.
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli, out) {
        Ok(()) => 0,
        Err(CliError::Certification) => {
            eprintln!("certification gates failed");
            1
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            2
        }
        Err(CliError::Numerical(e)) => {
            eprintln!("numerical failure: {e}");
            3
        }
    }
}

/// Entry point for the binary.
pub fn main_entry() -> u8 {
    let mut stdout = std::io::stdout().lock();
    run_from_args(std::env::args_os(), &mut stdout)
}
