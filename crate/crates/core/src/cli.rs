//! Command-line front end: argument parsing, run configuration and dispatch.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::complex::EmbeddedComplex;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::filtration::{compute_persistence, lower_star_filtration, rips_filtration, Filtration, Interval};
use crate::io;
use crate::optimize::{
    opt_homologous_cycle, opt_homology_basis, opt_pers_hom_reps, shorten_cycle, subsample_sites, OptimalCycleResult,
    Options,
};
use crate::oracle::{
    enumerate_class, exact_min_basis, exact_min_persistent_rep, exact_optimal_homologous_cycle, is_representative,
    Measure, OracleBudget,
};
use crate::radius::r_exact;
use crate::report::{Check, Report, ResultRecord, SiteSummary, Verification};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_VALIDATION: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "cyclerad", version, about = "Localized homology cycles under the l2-radius")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Smallest-radius cycle homologous to a given cycle.
    Localize(ProblemArgs),
    /// Minimum homology basis.
    Basis(ProblemArgs),
    /// Smallest-radius representatives of persistence bars.
    Persistent(ProblemArgs),
    /// Compare the algorithm with the exhaustive oracle on a small input.
    Verify {
        #[command(flatten)]
        args: ProblemArgs,
        /// Maximum number of vertices the oracle accepts.
        #[arg(long, default_value_t = 12)]
        budget: usize,
    },
}

#[derive(Debug, Args)]
pub struct ProblemArgs {
    /// Homology dimension.
    #[arg(short, default_value_t = 1)]
    pub p: usize,
    /// OFF mesh.
    #[arg(long)]
    pub complex: Option<PathBuf>,
    /// Cycle file, one simplex per line.
    #[arg(long)]
    pub cycle: Option<PathBuf>,
    /// CSV point cloud.
    #[arg(long)]
    pub points: Option<PathBuf>,
    /// Vietoris-Rips scale for `--points`.
    #[arg(long)]
    pub rips: Option<f64>,
    /// Largest simplex dimension of the Rips complex.
    #[arg(long, default_value_t = 2)]
    pub maxdim: usize,
    /// Filtration file.
    #[arg(long)]
    pub filtration: Option<PathBuf>,
    /// Use the last CSV column as a scalar and filter the Rips complex by lower star.
    #[arg(long)]
    pub lower_star: bool,
    /// Bars to represent: `positive` (default), `all`, or `top:k` by persistence.
    #[arg(long, default_value = "positive")]
    pub bars: String,
    /// Fraction of vertices used as sites.
    #[arg(long, default_value_t = 1.0)]
    pub sites: f64,
    /// Worker threads; 1 runs sequentially.
    #[arg(long)]
    pub threads: Option<usize>,
    /// Post-process 1-cycles by homologous path swaps.
    #[arg(long)]
    pub shorten: bool,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Write each 1-cycle as an OBJ polyline into this directory.
    #[arg(long)]
    pub export_obj: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Problem {
    Localize,
    Basis,
    Persistent,
    Verify,
}

#[derive(Clone, Debug, PartialEq)]
pub enum FiltrationSource {
    Rips { points: PathBuf, max_scale: f64, max_dim: usize },
    LowerStar { points: PathBuf, max_scale: f64, max_dim: usize },
    File(PathBuf),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BarSelection {
    Positive,
    All,
    Top(usize),
}

impl std::str::FromStr for BarSelection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "positive" => Ok(Self::Positive),
            "all" => Ok(Self::All),
            _ => s
                .strip_prefix("top:")
                .and_then(|k| k.parse().ok())
                .map(Self::Top)
                .ok_or_else(|| Error::Unsupported(format!("`positive`, `all` or `top:k` for --bars, got {s:?}"))),
        }
    }
}

/// Everything a run needs, validated.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub problem: Problem,
    pub p: usize,
    pub complex: Option<PathBuf>,
    pub cycle: Option<PathBuf>,
    pub filtration: Option<FiltrationSource>,
    pub bars: BarSelection,
    pub site_fraction: f64,
    pub threads: Option<usize>,
    pub shorten: bool,
    pub out: Option<PathBuf>,
    pub export_obj: Option<PathBuf>,
    pub budget: usize,
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<Self> {
        let (problem, args, budget) = match cli.command {
            Command::Localize(a) => (Problem::Localize, a, 0),
            Command::Basis(a) => (Problem::Basis, a, 0),
            Command::Persistent(a) => (Problem::Persistent, a, 0),
            Command::Verify { args, budget } => (Problem::Verify, args, budget),
        };
        let filtration = match (&args.points, args.rips, &args.filtration) {
            (Some(_), _, Some(_)) => {
                return Err(Error::Unsupported("exactly one of --points or --filtration".into()));
            }
            (Some(points), Some(max_scale), None) if args.lower_star => {
                Some(FiltrationSource::LowerStar { points: points.clone(), max_scale, max_dim: args.maxdim })
            }
            (Some(points), Some(max_scale), None) => {
                Some(FiltrationSource::Rips { points: points.clone(), max_scale, max_dim: args.maxdim })
            }
            (Some(_), None, None) => return Err(Error::Unsupported("--rips SCALE with --points".into())),
            (None, _, Some(path)) => Some(FiltrationSource::File(path.clone())),
            (None, _, None) => None,
        };
        let config = Self {
            problem,
            p: args.p,
            complex: args.complex,
            cycle: args.cycle,
            filtration,
            bars: args.bars.parse()?,
            site_fraction: args.sites,
            threads: args.threads,
            shorten: args.shorten,
            out: args.out,
            export_obj: args.export_obj,
            budget,
        };
        config.validate()?;
        Ok(config)
    }

    /// What a `verify` run checks, inferred from the inputs given.
    pub fn mode(&self) -> Problem {
        match self.problem {
            Problem::Verify if self.filtration.is_some() => Problem::Persistent,
            Problem::Verify if self.cycle.is_some() => Problem::Localize,
            Problem::Verify => Problem::Basis,
            p => p,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.site_fraction > 0.0 && self.site_fraction <= 1.0) {
            return Err(Error::Unsupported(format!("--sites in (0, 1], got {}", self.site_fraction)));
        }
        if self.threads == Some(0) {
            return Err(Error::Unsupported("--threads at least 1".into()));
        }
        match self.mode() {
            Problem::Localize | Problem::Basis if self.p == 0 => Err(Error::Unsupported("-p at least 1".into())),
            Problem::Localize if self.complex.is_none() || self.cycle.is_none() => {
                Err(Error::Unsupported("--complex and --cycle".into()))
            }
            Problem::Basis if self.complex.is_none() => Err(Error::Unsupported("--complex".into())),
            Problem::Persistent if self.filtration.is_none() => {
                Err(Error::Unsupported("--points with --rips, or --filtration".into()))
            }
            _ => Ok(()),
        }
    }
}

/// Exit status for an error: input problems map to 2, budget and validation
/// failures to 3.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::BudgetExceeded(_) | Error::InvalidInterval(_) => EXIT_VALIDATION,
        Error::Internal(_) => EXIT_FAILURE,
        _ => EXIT_INPUT,
    }
}

/// Runs a configuration, writing the report and any OBJ files. Returns the
/// process exit code; errors are printed to stderr.
pub fn run(config: &RunConfig) -> i32 {
    match run_inner(config) {
        Ok(report) => {
            if report.verification.as_ref().is_some_and(|v| !v.passed) {
                eprintln!("cyclerad: verification failed");
                EXIT_VALIDATION
            } else {
                EXIT_OK
            }
        }
        Err(e) => {
            eprintln!("cyclerad: {e}");
            exit_code(&e)
        }
    }
}

fn run_inner(config: &RunConfig) -> Result<Report> {
    let mut report = with_threads(config.threads, || execute(config))??;
    if let Some(dir) = &config.export_obj {
        export_obj(config, dir, &mut report)?;
    }
    let json = report.to_json();
    match &config.out {
        Some(path) => io::write_string(path, &json)?,
        None => print!("{json}"),
    }
    Ok(report)
}

#[cfg(feature = "parallel")]
fn with_threads<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match threads {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| Error::Internal(e.to_string()))?;
            Ok(pool.install(f))
        }
        None => Ok(f()),
    }
}

#[cfg(not(feature = "parallel"))]
fn with_threads<T: Send>(_threads: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    Ok(f())
}

fn execution(config: &RunConfig) -> Execution {
    if config.threads == Some(1) {
        Execution::Sequential
    } else {
        Execution::default()
    }
}

fn load_filtration(source: &FiltrationSource) -> Result<Filtration> {
    match source {
        FiltrationSource::Rips { points, max_scale, max_dim } => {
            let (cloud, _) = io::read_csv_points(points, false)?;
            rips_filtration(cloud, *max_scale, *max_dim)
        }
        FiltrationSource::LowerStar { points, max_scale, max_dim } => {
            let (cloud, scalars) = io::read_csv_points(points, true)?;
            let complex = rips_filtration(cloud, *max_scale, *max_dim)?.complex().clone();
            lower_star_filtration(complex, &scalars.unwrap())
        }
        FiltrationSource::File(path) => io::read_filtration(path),
    }
}

fn check_dimension(complex: &EmbeddedComplex, p: usize) -> Result<()> {
    if p > complex.max_dim() {
        return Err(Error::DimensionOutOfRange { p, max: complex.max_dim() });
    }
    Ok(())
}

fn options(config: &RunConfig, complex: &EmbeddedComplex) -> (Options, SiteSummary) {
    let n = complex.n_vertices();
    let mut opts = Options { sites: None, execution: execution(config) };
    let mut count = n;
    if config.site_fraction < 1.0 {
        let sites = subsample_sites(n, config.site_fraction);
        count = sites.len();
        opts.sites = Some(sites);
    }
    let summary = SiteSummary { count, fraction: config.site_fraction, two_approximation: count == n };
    (opts, summary)
}

fn select_bars(filtration: &Filtration, p: usize, selection: BarSelection) -> Vec<Interval> {
    let bars = compute_persistence(filtration, p).barcode.intervals;
    match selection {
        BarSelection::All => bars,
        BarSelection::Positive => bars.into_iter().filter(|iv| iv.persistence() > 0.0).collect(),
        BarSelection::Top(k) => {
            let mut bars: Vec<Interval> = bars.into_iter().filter(|iv| iv.persistence() > 0.0).collect();
            bars.sort_by(|a, b| b.persistence().total_cmp(&a.persistence()).then(a.birth.cmp(&b.birth)));
            bars.truncate(k);
            bars.sort_by_key(|iv| iv.birth);
            bars
        }
    }
}

fn maybe_shorten(
    config: &RunConfig,
    complex: &EmbeddedComplex,
    results: Vec<OptimalCycleResult>,
) -> Result<Vec<OptimalCycleResult>> {
    if !config.shorten {
        return Ok(results);
    }
    results
        .into_iter()
        .map(|r| if r.dim == 1 { shorten_cycle(&r, complex) } else { Ok(r) })
        .collect()
}

/// Computes the report for a configuration without touching the output files.
pub fn execute(config: &RunConfig) -> Result<Report> {
    let budget = OracleBudget::with_max_vertices(config.budget);
    let problem = match config.problem {
        Problem::Localize => "localize",
        Problem::Basis => "basis",
        Problem::Persistent => "persistent",
        Problem::Verify => "verify",
    };
    let verify = config.problem == Problem::Verify;
    match config.mode() {
        Problem::Localize => {
            let complex = io::read_off(config.complex.as_ref().unwrap())?;
            check_dimension(&complex, config.p)?;
            let zeta = io::read_cycle(config.cycle.as_ref().unwrap(), &complex, config.p)?;
            let (opts, sites) = options(config, &complex);
            let result = opt_homologous_cycle(&complex, config.p, &zeta, &opts)?;
            let verification = if verify {
                let exact = exact_optimal_homologous_cycle(&complex, config.p, &zeta, &budget)?;
                let class_min = enumerate_class(&complex, config.p, &zeta, &budget)?
                    .iter()
                    .map(|z| if z.is_zero() { 0.0 } else { r_exact(config.p, z, &complex).unwrap().radius })
                    .fold(f64::INFINITY, f64::min);
                Some(Verification::new(
                    "localize",
                    config.budget,
                    vec![
                        Check::ratio("sphere scan agrees with class enumeration", exact.radius, class_min, 1.0, 1.0),
                        Check::ratio("r_P within twice the exact optimum", result.r_v, exact.radius, 1.0, 2.0),
                    ],
                ))
            } else {
                None
            };
            let results = maybe_shorten(config, &complex, vec![result])?;
            Ok(Report {
                problem,
                p: config.p,
                sites,
                results: results.iter().map(|r| ResultRecord::new(&complex, r)).collect(),
                total_weight: None,
                verification,
            })
        }
        Problem::Basis => {
            let complex = io::read_off(config.complex.as_ref().unwrap())?;
            check_dimension(&complex, config.p)?;
            let (opts, sites) = options(config, &complex);
            let basis = opt_homology_basis(&complex, config.p, &opts)?;
            let verification = if verify {
                let by_sites = exact_min_basis(&complex, config.p, Measure::Sites, &budget)?;
                let exact = exact_min_basis(&complex, config.p, Measure::Exact, &budget)?;
                Some(Verification::new(
                    "basis",
                    config.budget,
                    vec![
                        Check::ratio("weight equals the lightest basis under r_P", basis.total_weight, by_sites.optimum, 1.0, 1.0),
                        Check::ratio("weight within twice the exact optimum", basis.total_weight, exact.optimum, 1.0, 2.0),
                    ],
                ))
            } else {
                None
            };
            let results = maybe_shorten(config, &complex, basis.cycles)?;
            Ok(Report {
                problem,
                p: config.p,
                sites,
                results: results.iter().map(|r| ResultRecord::new(&complex, r)).collect(),
                total_weight: Some(basis.total_weight),
                verification,
            })
        }
        Problem::Persistent | Problem::Verify => {
            let filtration = load_filtration(config.filtration.as_ref().unwrap())?;
            let complex = filtration.complex();
            check_dimension(complex, config.p)?;
            let (opts, sites) = options(config, complex);
            let bars = select_bars(&filtration, config.p, config.bars);
            let results = opt_pers_hom_reps(&filtration, &bars, &opts)?;
            let verification = if verify {
                let mut checks = Vec::new();
                for (iv, r) in bars.iter().zip(&results) {
                    let exact = exact_min_persistent_rep(&filtration, iv, &budget)?;
                    let tag = format!("bar [{}, {:?})", iv.birth, iv.death.index());
                    checks.push(Check::holds(format!("{tag}: output represents the bar"), is_representative(&filtration, iv, &r.cycle)));
                    checks.push(Check::ratio(format!("{tag}: r_P equals the oracle minimum"), r.r_v, exact.r_sites, 1.0, 1.0));
                    checks.push(Check::ratio(format!("{tag}: r_P within twice the exact optimum"), r.r_v, exact.r_exact, 1.0, 2.0));
                }
                Some(Verification::new("persistent", config.budget, checks))
            } else {
                None
            };
            let results = maybe_shorten(config, complex, results)?;
            Ok(Report {
                problem,
                p: config.p,
                sites,
                results: results.iter().map(|r| ResultRecord::new(complex, r)).collect(),
                total_weight: None,
                verification,
            })
        }
    }
}

fn export_obj(config: &RunConfig, dir: &Path, report: &mut Report) -> Result<()> {
    std::fs::create_dir_all(dir).map_err(|source| Error::Io { path: dir.to_path_buf(), source })?;
    let complex = match config.mode() {
        Problem::Persistent => load_filtration(config.filtration.as_ref().unwrap())?.complex().clone(),
        _ => io::read_off(config.complex.as_ref().unwrap())?,
    };
    for (k, record) in report.results.iter_mut().enumerate() {
        if record.dim != 1 || record.cycle.is_empty() {
            continue;
        }
        let chain = complex.chain_from_simplices(1, &record.cycle)?;
        let path = dir.join(format!("cycle-{k}.obj"));
        io::write_string(&path, &io::write_obj(&complex, &chain))?;
        record.obj = Some(path.display().to_string());
    }
    Ok(())
}

/// Parses process arguments and runs. Argument errors exit with status 2.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    match RunConfig::from_cli(cli) {
        Ok(config) => run(&config),
        Err(e) => {
            eprintln!("cyclerad: {e}");
            exit_code(&e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(args: &[&str]) -> Result<RunConfig> {
        let mut full = vec!["cyclerad"];
        full.extend_from_slice(args);
        RunConfig::from_cli(Cli::try_parse_from(full).unwrap())
    }

    #[test]
    fn parses_bar_selection() {
        assert_eq!("top:3".parse::<BarSelection>().unwrap(), BarSelection::Top(3));
        assert_eq!("all".parse::<BarSelection>().unwrap(), BarSelection::All);
        assert!("top:x".parse::<BarSelection>().is_err());
    }

    #[test]
    fn config_validation() {
        assert!(config(&["localize", "--complex", "a.off"]).is_err());
        assert!(config(&["basis", "--complex", "a.off", "-p", "0"]).is_err());
        assert!(config(&["persistent"]).is_err());
        assert!(config(&["persistent", "--points", "p.csv"]).is_err());
        assert!(config(&["persistent", "--points", "p.csv", "--rips", "1", "--filtration", "f.flt"]).is_err());
        assert!(config(&["basis", "--complex", "a.off", "--sites", "0"]).is_err());
        let c = config(&["persistent", "--points", "p.csv", "--rips", "2.0", "--bars", "top:2"]).unwrap();
        assert_eq!(c.bars, BarSelection::Top(2));
        assert!(matches!(c.filtration, Some(FiltrationSource::Rips { max_dim: 2, .. })));
        let v = config(&["verify", "--complex", "a.off", "--cycle", "c.txt"]).unwrap();
        assert_eq!((v.mode(), v.budget), (Problem::Localize, 12));
        assert_eq!(config(&["verify", "--complex", "a.off"]).unwrap().mode(), Problem::Basis);
    }
}
