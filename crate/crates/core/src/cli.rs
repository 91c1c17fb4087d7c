//! Command-line front end: table and figure data as CSV.
//!
//! Exit codes: 0 success, 2 argument error, 3 domain error, 4 a lower bound
//! came out above its upper bound.

use std::ffi::OsString;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::bounds::{
    lower_bound, theorem1_bounds, upper_bound, upper_bound_optimized, DEFAULT_NU_RANGE,
    DEFAULT_NU_STEPS,
};
use crate::error::Error;
use crate::kinetic::{p_log, p_lower, p_schrodinger, PKind, TABLE1};
use crate::oracle::{
    salpeter_ground, schrodinger_ground, ultrarelativistic_ground, OracleSettings, SpectralResult,
};
use crate::potential::{PotentialSum, PowerTerm, Problem};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_ORDERING: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "salpeter-bounds",
    version,
    about = "Ground-state energy bounds for H = beta*sqrt(m^2 + p^2) + V(r)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Component eigenvalues and P-numbers for q = -1, 0, 1, 2 at unit coupling
    Table1(OutputArgs),
    /// Lower and upper bounds over a mass grid
    Bounds(BoundsArgs),
    /// Data behind one of the preset figures
    Figure(FigureArgs),
    /// Rayleigh-Ritz ground state of a single Hamiltonian
    Oracle(OracleArgs),
}

#[derive(Debug, Args)]
struct OutputArgs {
    /// Write CSV here instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct PotentialArgs {
    #[arg(long, default_value_t = 1.0)]
    beta: f64,
    /// a in -a/r
    #[arg(long, default_value_t = 0.0)]
    coulomb: f64,
    /// b in b*ln(r)
    #[arg(long, default_value_t = 0.0)]
    log: f64,
    /// c in c*r
    #[arg(long, default_value_t = 0.0)]
    linear: f64,
    /// d in d*r^2
    #[arg(long, default_value_t = 0.0)]
    quadratic: f64,
    /// Extra power term a*sgn(q)*r^q as q:a (repeatable)
    #[arg(long = "power", value_name = "Q:A")]
    powers: Vec<PowerSpec>,
}

#[derive(Debug, Args)]
struct BoundsArgs {
    #[command(flatten)]
    potential: PotentialArgs,
    /// Mass grid start:stop:count, endpoints inclusive
    #[arg(long, default_value = "0:10:21")]
    mass: MassGrid,
    /// Fixed trial exponent for the upper bound
    #[arg(long, conflicts_with = "nu_optimize")]
    nu: Option<f64>,
    /// Minimize the upper bound over nu (the default when --nu is absent)
    #[arg(long)]
    nu_optimize: bool,
    /// Add a Rayleigh-Ritz column
    #[arg(long)]
    with_oracle: bool,
    #[arg(long, default_value_t = 25)]
    oracle_dim: usize,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct FigureArgs {
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
    id: u8,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KineticChoice {
    /// p^2
    Schrodinger,
    /// p
    Ultrarelativistic,
    /// beta*sqrt(m^2 + p^2)
    Salpeter,
}

#[derive(Debug, Args)]
struct OracleArgs {
    #[command(flatten)]
    potential: PotentialArgs,
    #[arg(long, value_enum)]
    kinetic: KineticChoice,
    /// Mass grid (salpeter only)
    #[arg(long, default_value = "1:1:1")]
    mass: MassGrid,
    #[arg(long, default_value_t = 25)]
    oracle_dim: usize,
    #[arg(long)]
    output: Option<PathBuf>,
}

/// An extra `q:a` power term from the command line.
#[derive(Debug, Clone, Copy, PartialEq)]
struct PowerSpec(f64, f64);

impl FromStr for PowerSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (q, a) = s
            .split_once(':')
            .ok_or_else(|| format!("expected q:a, got '{s}'"))?;
        let parse = |t: &str| t.trim().parse::<f64>().map_err(|e| format!("'{t}': {e}"));
        Ok(PowerSpec(parse(q)?, parse(a)?))
    }
}

/// Inclusive mass grid `start:stop:count`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MassGrid {
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

impl MassGrid {
    pub fn values(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.start];
        }
        let step = (self.stop - self.start) / (self.count - 1) as f64;
        (0..self.count)
            .map(|i| {
                if i == self.count - 1 {
                    self.stop
                } else {
                    self.start + step * i as f64
                }
            })
            .collect()
    }
}

impl FromStr for MassGrid {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        let [start, stop, count] = parts[..] else {
            return Err(format!("expected start:stop:count, got '{s}'"));
        };
        let start: f64 = start.trim().parse().map_err(|e| format!("start: {e}"))?;
        let stop: f64 = stop.trim().parse().map_err(|e| format!("stop: {e}"))?;
        let count: usize = count.trim().parse().map_err(|e| format!("count: {e}"))?;
        if count == 0 {
            return Err("mass grid needs at least one point".into());
        }
        if !(start >= 0.0) || !stop.is_finite() || stop < start {
            return Err(format!(
                "mass grid needs 0 <= start <= stop, got {start}:{stop}"
            ));
        }
        if count == 1 && stop != start {
            return Err("a one-point mass grid needs start == stop".into());
        }
        Ok(MassGrid { start, stop, count })
    }
}

impl fmt::Display for MassGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.start, self.stop, self.count)
    }
}

/// How the upper-bound trial exponent is chosen.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum NuChoice {
    Fixed(f64),
    Optimize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundsConfig {
    pub beta: f64,
    pub potential: PotentialSum,
    pub mass_grid: MassGrid,
    pub nu: NuChoice,
    /// Basis size of the oracle column, if requested.
    pub oracle_dim: Option<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OracleConfig {
    pub kinetic: KineticChoice,
    pub beta: f64,
    pub potential: PotentialSum,
    pub mass_grid: MassGrid,
    pub oracle_dim: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub enum RunCommand {
    Table1,
    Bounds(BoundsConfig),
    Figure { id: u8 },
    Oracle(OracleConfig),
}

/// A parsed and validated invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: RunCommand,
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum CliError {
    /// `--help` or `--version`; not a failure.
    Info(String),
    Usage(String),
    Domain(Error),
    Ordering {
        m: f64,
        lower: f64,
        upper: f64,
    },
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Info(_) => EXIT_OK,
            CliError::Usage(_) | CliError::Io(_) => EXIT_USAGE,
            CliError::Domain(_) => EXIT_DOMAIN,
            CliError::Ordering { .. } => EXIT_ORDERING,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Info(s) | CliError::Usage(s) => f.write_str(s.trim_end()),
            CliError::Domain(Error::CouplingTooLarge { v }) => write!(
                f,
                "error: Coulomb coupling v = a/beta = {v} must be below 1/2 for the relativistic bounds to exist"
            ),
            CliError::Domain(e) => write!(f, "error: {e}"),
            CliError::Ordering { m, lower, upper } => write!(
                f,
                "internal error: lower bound {lower} exceeds upper bound {upper} at m = {m}"
            ),
            CliError::Io(s) => write!(f, "error: {s}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

fn build_potential(args: &PotentialArgs) -> Result<PotentialSum, CliError> {
    let mut terms = Vec::new();
    for (q, a) in [
        (-1.0, args.coulomb),
        (1.0, args.linear),
        (2.0, args.quadratic),
    ] {
        if a != 0.0 {
            terms.push(PowerTerm::new(q, a)?);
        }
    }
    for &PowerSpec(q, a) in &args.powers {
        if q == 0.0 {
            return Err(CliError::Usage("use --log for the q = 0 term".into()));
        }
        terms.push(PowerTerm::new(q, a)?);
    }
    if !(args.log >= 0.0) {
        return Err(Error::domain(format!(
            "log coefficient must be non-negative, got {}",
            args.log
        ))
        .into());
    }
    Ok(PotentialSum::new(terms, args.log)?)
}

/// Parses `argv` (program name first) into a validated configuration.
/// The Hamiltonian is checked before any computation starts.
pub fn parse_args<I, T>(argv: I) -> Result<RunConfig, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv).map_err(|e| {
        use clap::error::ErrorKind::*;
        match e.kind() {
            DisplayHelp | DisplayVersion | DisplayHelpOnMissingArgumentOrSubcommand => {
                CliError::Info(e.to_string())
            }
            _ => CliError::Usage(e.to_string()),
        }
    })?;
    let config = match cli.command {
        Command::Table1(o) => RunConfig {
            command: RunCommand::Table1,
            output: o.output,
        },
        Command::Figure(f) => RunConfig {
            command: RunCommand::Figure { id: f.id },
            output: f.output,
        },
        Command::Bounds(b) => {
            let potential = build_potential(&b.potential)?;
            Problem::new(b.potential.beta, b.mass.start, potential.clone())?;
            let nu = match b.nu {
                Some(nu) if !(nu > 0.0 && nu <= 5.0) => {
                    return Err(CliError::Usage(format!(
                        "--nu must lie in (0, 5], got {nu}"
                    )))
                }
                Some(nu) => NuChoice::Fixed(nu),
                None => NuChoice::Optimize,
            };
            check_oracle_dim(b.oracle_dim)?;
            RunConfig {
                command: RunCommand::Bounds(BoundsConfig {
                    beta: b.potential.beta,
                    potential,
                    mass_grid: b.mass,
                    nu,
                    oracle_dim: b.with_oracle.then_some(b.oracle_dim),
                }),
                output: b.output,
            }
        }
        Command::Oracle(o) => {
            let potential = build_potential(&o.potential)?;
            if o.kinetic == KineticChoice::Salpeter {
                Problem::new(o.potential.beta, o.mass.start, potential.clone())?;
            }
            check_oracle_dim(o.oracle_dim)?;
            RunConfig {
                command: RunCommand::Oracle(OracleConfig {
                    kinetic: o.kinetic,
                    beta: o.potential.beta,
                    potential,
                    mass_grid: o.mass,
                    oracle_dim: o.oracle_dim,
                }),
                output: o.output,
            }
        }
    };
    Ok(config)
}

fn check_oracle_dim(dim: usize) -> Result<(), CliError> {
    if (2..=128).contains(&dim) {
        Ok(())
    } else {
        Err(CliError::Usage(format!(
            "--oracle-dim must lie in [2, 128], got {dim}"
        )))
    }
}

/// Formats to 9 significant digits, fixed-point for moderate magnitudes.
pub fn format_sig(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{x:.8e}");
    let exp: i32 = sci[sci.find('e').expect("exponent") + 1..]
        .parse()
        .expect("integer exponent");
    if (-5..9).contains(&exp) {
        format!("{x:.*}", (8 - exp) as usize)
    } else {
        sci
    }
}

fn cell(x: Option<f64>) -> String {
    x.map(format_sig).unwrap_or_default()
}

/// A CSV table with a `#` comment line echoing the configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct CsvTable {
    pub comment: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl CsvTable {
    pub fn to_csv(&self) -> String {
        let mut out = format!("# {}\n{}\n", self.comment, self.columns.join(","));
        for row in &self.rows {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    /// Numeric value of `column` in every row (`None` for blank cells).
    pub fn column(&self, column: &str) -> Option<Vec<Option<f64>>> {
        let idx = self.columns.iter().position(|c| c == column)?;
        Some(self.rows.iter().map(|r| r[idx].parse().ok()).collect())
    }
}

fn columns(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

/// Eigenvalues and P-numbers at v = 1, published next to recomputed.
/// Oracle failures leave the computed cells blank.
pub fn run_table1() -> CsvTable {
    let settings = OracleSettings::default();
    let rows = TABLE1
        .par_iter()
        .map(|row| {
            let q = row.q;
            let potential = if q == 0.0 {
                Ok(PotentialSum::pure_log())
            } else {
                PotentialSum::pure_power(q)
            };
            let e1 = if row.e1.is_some() {
                potential
                    .as_ref()
                    .ok()
                    .and_then(|v| ultrarelativistic_ground(v, &settings).ok())
                    .map(|r| r.energy)
            } else {
                None
            };
            let e2 = potential
                .as_ref()
                .ok()
                .and_then(|v| schrodinger_ground(v, 1.0, &settings).ok())
                .map(|r| r.energy);
            let p1 = e1.and_then(|e| {
                if q == 0.0 {
                    p_log(PKind::RelativisticLower, e).ok()
                } else {
                    p_lower(q, e).ok()
                }
            });
            let p2 = e2.and_then(|e| {
                if q == 0.0 {
                    p_log(PKind::Schrodinger, e).ok()
                } else {
                    p_schrodinger(q, e).ok()
                }
            });
            vec![
                format_sig(q),
                cell(row.e1),
                cell(e1),
                cell(row.p1),
                cell(p1),
                cell(Some(row.e2)),
                cell(e2),
                cell(Some(row.p2)),
                cell(p2),
            ]
        })
        .collect();
    CsvTable {
        comment: format!(
            "salpeter-bounds table1 v=1 oracle_dim={} quadrature_order={}",
            settings.basis_dim, settings.quadrature_order
        ),
        columns: columns(&[
            "q",
            "E1_paper",
            "E1_computed",
            "P1_paper",
            "P1_computed",
            "E2_paper",
            "E2_computed",
            "P2_paper",
            "P2_computed",
        ]),
        rows,
    }
}

fn bounds_row(config: &BoundsConfig, m: f64) -> Result<Vec<String>, CliError> {
    let problem = Problem::new(config.beta, m, config.potential.clone())?;
    let lower = lower_bound(&problem)?.value;
    let upper = match config.nu {
        NuChoice::Fixed(nu) => upper_bound(&problem, nu)?,
        NuChoice::Optimize => upper_bound_optimized(&problem, DEFAULT_NU_RANGE, DEFAULT_NU_STEPS)?,
    };
    if lower > upper.value {
        return Err(CliError::Ordering {
            m,
            lower,
            upper: upper.value,
        });
    }
    let mut row = vec![
        format_sig(m),
        format_sig(lower),
        format_sig(upper.value),
        cell(upper.nu),
    ];
    if let Some(dim) = config.oracle_dim {
        row.push(format_sig(
            salpeter_ground(&problem, &OracleSettings::with_dim(dim))?.energy,
        ));
    }
    Ok(row)
}

fn describe_nu(nu: NuChoice) -> String {
    match nu {
        NuChoice::Fixed(nu) => nu.to_string(),
        NuChoice::Optimize => "optimized".into(),
    }
}

/// One row per mass: m, lower, upper, nu_used and optionally the oracle.
/// Rows are computed in parallel and emitted in grid order.
pub fn run_bounds(config: &BoundsConfig) -> Result<CsvTable, CliError> {
    let rows = config
        .mass_grid
        .values()
        .par_iter()
        .map(|&m| bounds_row(config, m))
        .collect::<Result<Vec<_>, _>>()?;
    let mut names = vec!["m", "lower", "upper", "nu_used"];
    if config.oracle_dim.is_some() {
        names.push("oracle");
    }
    Ok(CsvTable {
        comment: format!(
            "salpeter-bounds bounds beta={} V=\"{}\" mass={} nu={} oracle_dim={}",
            config.beta,
            config.potential,
            config.mass_grid,
            describe_nu(config.nu),
            config
                .oracle_dim
                .map_or_else(|| "none".to_string(), |d| d.to_string())
        ),
        columns: columns(&names),
        rows,
    })
}

/// The bounds configuration behind figures 2 to 4.
pub fn figure_config(id: u8) -> Option<BoundsConfig> {
    let (potential, mass_grid, nu, oracle_dim) = match id {
        2 => (
            PotentialSum::from_coefficients(0.1, 0.0, 0.25, 0.0),
            MassGrid {
                start: 0.0,
                stop: 10.0,
                count: 21,
            },
            1.6,
            Some(25),
        ),
        3 => (
            PotentialSum::from_coefficients(0.1, 0.0, 0.25, 0.0),
            MassGrid {
                start: 0.0,
                stop: 50.0,
                count: 26,
            },
            1.6,
            None,
        ),
        4 => (
            PotentialSum::from_coefficients(0.1, 0.25, 0.25, 0.25),
            MassGrid {
                start: 0.0,
                stop: 10.0,
                count: 21,
            },
            1.4,
            None,
        ),
        _ => return None,
    };
    Some(BoundsConfig {
        beta: 1.0,
        potential: potential.expect("preset potential is valid"),
        mass_grid,
        nu: NuChoice::Fixed(nu),
        oracle_dim,
    })
}

/// Figure 1: single-power bounds for V = r against m.
fn run_figure1() -> Result<CsvTable, CliError> {
    let grid = MassGrid {
        start: 0.0,
        stop: 10.0,
        count: 21,
    };
    let potential = PotentialSum::pure_power(1.0)?;
    let rows = grid
        .values()
        .par_iter()
        .map(|&m| {
            let (lo, hi) = theorem1_bounds(&Problem::new(1.0, m, potential.clone())?)?;
            if lo.value > hi.value {
                return Err(CliError::Ordering {
                    m,
                    lower: lo.value,
                    upper: hi.value,
                });
            }
            Ok(vec![
                format_sig(m),
                format_sig(lo.value),
                format_sig(hi.value),
            ])
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(CsvTable {
        comment: format!("salpeter-bounds figure id=1 beta=1 V=\"{potential}\" mass={grid}"),
        columns: columns(&["m", "lower", "upper"]),
        rows,
    })
}

pub fn run_figure(id: u8) -> Result<CsvTable, CliError> {
    if id == 1 {
        return run_figure1();
    }
    let config = figure_config(id)
        .ok_or_else(|| CliError::Usage(format!("figure id must be 1..=4, got {id}")))?;
    let mut table = run_bounds(&config)?;
    table.comment = format!(
        "salpeter-bounds figure id={id} {}",
        table.comment.trim_start_matches("salpeter-bounds ")
    );
    Ok(table)
}

fn oracle_row(kinetic: KineticChoice, m: Option<f64>, r: SpectralResult) -> Vec<String> {
    vec![
        kinetic
            .to_possible_value()
            .map(|v| v.get_name().to_string())
            .unwrap_or_default(),
        cell(m),
        format_sig(r.energy),
        format_sig(r.residual),
        r.settings_used.basis_dim.to_string(),
        format_sig(r.settings_used.scale),
    ]
}

pub fn run_oracle(config: &OracleConfig) -> Result<CsvTable, CliError> {
    let settings = OracleSettings::with_dim(config.oracle_dim);
    let rows = match config.kinetic {
        KineticChoice::Schrodinger => vec![oracle_row(
            config.kinetic,
            None,
            schrodinger_ground(&config.potential, 1.0, &settings)?,
        )],
        KineticChoice::Ultrarelativistic => vec![oracle_row(
            config.kinetic,
            None,
            ultrarelativistic_ground(&config.potential, &settings)?,
        )],
        KineticChoice::Salpeter => config
            .mass_grid
            .values()
            .par_iter()
            .map(|&m| {
                let problem = Problem::new(config.beta, m, config.potential.clone())?;
                Ok(oracle_row(
                    config.kinetic,
                    Some(m),
                    salpeter_ground(&problem, &settings)?,
                ))
            })
            .collect::<Result<Vec<_>, CliError>>()?,
    };
    Ok(CsvTable {
        comment: format!(
            "salpeter-bounds oracle kinetic={:?} beta={} V=\"{}\" mass={} oracle_dim={}",
            config.kinetic, config.beta, config.potential, config.mass_grid, config.oracle_dim
        ),
        columns: columns(&["kinetic", "m", "energy", "residual", "basis_dim", "scale"]),
        rows,
    })
}

pub fn execute(config: &RunConfig) -> Result<CsvTable, CliError> {
    match &config.command {
        RunCommand::Table1 => Ok(run_table1()),
        RunCommand::Bounds(b) => run_bounds(b),
        RunCommand::Figure { id } => run_figure(*id),
        RunCommand::Oracle(o) => run_oracle(o),
    }
}

/// Parses, runs and writes output; returns the process exit code.
pub fn main_with_args<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let result = parse_args(argv).and_then(|config| {
        let csv = execute(&config)?.to_csv();
        match &config.output {
            Some(path) => std::fs::write(path, csv)
                .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display()))),
            None => {
                print!("{csv}");
                Ok(())
            }
        }
    });
    match result {
        Ok(()) => EXIT_OK,
        Err(CliError::Info(text)) => {
            print!("{text}");
            EXIT_OK
        }
        Err(e) => {
            eprintln!("{e}");
            e.exit_code()
        }
    }
}
