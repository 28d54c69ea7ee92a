//! `dbweno` — benchmark CLI for the data-bounded WENO library.
//!
//! Subcommands: `converge`, `boundedness`, `region`, `solve`. Every flag may
//! also be supplied through a TOML config file (`--config PATH`, one
//! top-level `key = value` per flag name); explicit command-line flags take
//! precedence over the file. CSV goes to `--out PATH` or stdout, and
//! `--plot-script PATH` additionally writes a gnuplot script referencing
//! the CSV.

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use dbweno_cli::experiments::{
    boundedness_table, converge_report, region_table, solve_experiment, ApproxMode, FluxKind,
    TestFunction,
};
use dbweno_cli::output;
use dbweno_core::WeightFamily;
use std::fs;
use std::path::{Path, PathBuf};

#[derive(Parser)]
#[command(
    name = "dbweno",
    version,
    about = "Data-bounded WENO benchmarks: convergence tables, boundedness audits, weight regions, and conservation-law runs"
)]
struct Cli {
    /// TOML config file; any flag may be given as `key = value` (underscores
    /// or dashes). Command-line flags win over config entries.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Interface-error convergence study on sin(pi x) (reproduces the
    /// reference error tables).
    Converge(ConvergeArgs),
    /// Per-interface data-boundedness audit with Lagrange baselines.
    Boundedness(BoundednessArgs),
    /// Admissible weight-region table plus one weight family, sampled in r.
    Region(RegionArgs),
    /// Conservation-law run with the data-bounded WENO3 flux.
    Solve(SolveArgs),
}

#[derive(Args)]
struct ConvergeArgs {
    /// Approximation order: 3 or 4 [default: 3]
    #[arg(long)]
    order: Option<u8>,
    /// interp (point values) or recon (cell averages) [default: interp]
    #[arg(long)]
    mode: Option<String>,
    /// Comma-separated doubling grid sizes [default: 40,80,160,320,640,1280]
    #[arg(long)]
    n: Option<String>,
    /// Test function; the convergence study supports sine [default: sine]
    #[arg(long)]
    function: Option<String>,
    /// Output CSV path (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also emit a gnuplot script referencing the CSV
    #[arg(long)]
    plot_script: Option<PathBuf>,
}

#[derive(Args)]
struct BoundednessArgs {
    /// sine, runge, or step [default: runge]
    #[arg(long)]
    function: Option<String>,
    /// interp or recon [default: interp]
    #[arg(long)]
    mode: Option<String>,
    /// Number of grid points [default: 20]
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    plot_script: Option<PathBuf>,
}

#[derive(Args)]
struct RegionArgs {
    /// Weight family name (interp-beta, interp-mu, recon-beta, recon-mu,
    /// eta-beta, eta-mu, rational-beta, rational-mu, scheme-omega1,
    /// scheme-omega2, scheme-omega-k) [default: interp-beta]
    #[arg(long)]
    family: Option<String>,
    /// η parameter for the eta families [default: 1]
    #[arg(long)]
    eta: Option<f64>,
    /// k parameter for scheme-omega-k, in [1.5, 2] [default: 2]
    #[arg(long)]
    k: Option<f64>,
    /// Left end of the sampled r range [default: -10]
    #[arg(long, allow_hyphen_values = true)]
    rmin: Option<f64>,
    /// Right end of the sampled r range [default: 10]
    #[arg(long, allow_hyphen_values = true)]
    rmax: Option<f64>,
    /// Sampling step in r [default: 0.01]
    #[arg(long)]
    rstep: Option<f64>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    plot_script: Option<PathBuf>,
}

#[derive(Args)]
struct SolveArgs {
    /// advection or burgers [default: advection]
    #[arg(long)]
    flux: Option<String>,
    /// Initial condition: sine, runge, or step [default: sine]
    #[arg(long)]
    function: Option<String>,
    /// Number of cells [default: 200]
    #[arg(long)]
    n: Option<usize>,
    /// Final time [default: 2]
    #[arg(long)]
    tfinal: Option<f64>,
    /// CFL number in (0, 1) [default: 0.4]
    #[arg(long)]
    cfl: Option<f64>,
    /// Scheme weight family: scheme-omega1, scheme-omega2, or
    /// scheme-omega-k [default: scheme-omega1]
    #[arg(long)]
    family: Option<String>,
    /// k parameter for scheme-omega-k [default: 2]
    #[arg(long)]
    k: Option<f64>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    plot_script: Option<PathBuf>,
}

/// TOML config values, consulted when a flag was not given on the command
/// line.
struct Config(toml::Table);

impl Config {
    fn load(path: Option<&Path>) -> Result<Self> {
        let table = match path {
            None => toml::Table::new(),
            Some(p) => {
                let text = fs::read_to_string(p)
                    .with_context(|| format!("reading config file {}", p.display()))?;
                text.parse::<toml::Table>()
                    .with_context(|| format!("parsing config file {}", p.display()))?
            }
        };
        Ok(Self(table))
    }

    fn get(&self, key: &str) -> Option<&toml::Value> {
        self.0
            .get(key)
            .or_else(|| self.0.get(&key.replace('_', "-")))
    }

    fn string(&self, key: &str) -> Option<String> {
        self.get(key).and_then(|v| v.as_str()).map(str::to_owned)
    }

    fn f64(&self, key: &str) -> Option<f64> {
        self.get(key)
            .and_then(|v| v.as_float().or_else(|| v.as_integer().map(|i| i as f64)))
    }

    fn usize(&self, key: &str) -> Option<usize> {
        self.get(key).and_then(|v| v.as_integer()).map(|i| i as usize)
    }

    fn u8(&self, key: &str) -> Option<u8> {
        self.get(key).and_then(|v| v.as_integer()).map(|i| i as u8)
    }

    /// Grid-size list: a TOML array of integers or a comma-separated string.
    fn n_list(&self, key: &str) -> Option<String> {
        match self.get(key) {
            Some(toml::Value::Array(items)) => Some(
                items
                    .iter()
                    .filter_map(|v| v.as_integer())
                    .map(|i| i.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
            ),
            Some(toml::Value::String(s)) => Some(s.clone()),
            Some(toml::Value::Integer(i)) => Some(i.to_string()),
            _ => None,
        }
    }

    fn path(&self, key: &str) -> Option<PathBuf> {
        self.string(key).map(PathBuf::from)
    }
}

fn parse_n_list(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<usize>()
                .with_context(|| format!("invalid grid size {tok:?}"))
        })
        .collect()
}

/// Writes `csv` to `out` (or stdout), plus an optional plot script.
fn emit(kind: &str, csv: &str, out: Option<&Path>, plot: Option<&Path>) -> Result<()> {
    match out {
        Some(p) => fs::write(p, csv).with_context(|| format!("writing {}", p.display()))?,
        None => print!("{csv}"),
    }
    if let Some(script_path) = plot {
        let csv_ref = out
            .map(|p| p.display().to_string())
            .unwrap_or_else(|| "data.csv".to_string());
        fs::write(script_path, output::plot_script(kind, &csv_ref))
            .with_context(|| format!("writing {}", script_path.display()))?;
    }
    Ok(())
}

fn run_converge(args: ConvergeArgs, cfg: &Config) -> Result<()> {
    let order = args.order.or_else(|| cfg.u8("order")).unwrap_or(3);
    let mode_name = args
        .mode
        .or_else(|| cfg.string("mode"))
        .unwrap_or_else(|| "interp".into());
    let mode = ApproxMode::from_name(&mode_name)?;
    let function = args
        .function
        .or_else(|| cfg.string("function"))
        .unwrap_or_else(|| "sine".into());
    if TestFunction::from_name(&function)? != TestFunction::Sine {
        bail!("the convergence study is defined for --function sine");
    }
    let n_text = args
        .n
        .or_else(|| cfg.n_list("n"))
        .unwrap_or_else(|| "40,80,160,320,640,1280".into());
    let ns = parse_n_list(&n_text)?;
    let report = converge_report(order, mode, &ns)?;
    let csv = output::converge_csv(&report);
    emit(
        "converge",
        &csv,
        args.out.or_else(|| cfg.path("out")).as_deref(),
        args.plot_script.or_else(|| cfg.path("plot_script")).as_deref(),
    )
}

fn run_boundedness(args: BoundednessArgs, cfg: &Config) -> Result<()> {
    let function = TestFunction::from_name(
        &args
            .function
            .or_else(|| cfg.string("function"))
            .unwrap_or_else(|| "runge".into()),
    )?;
    let mode = ApproxMode::from_name(
        &args
            .mode
            .or_else(|| cfg.string("mode"))
            .unwrap_or_else(|| "interp".into()),
    )?;
    let n = args.n.or_else(|| cfg.usize("n")).unwrap_or(20);
    let (rows, summary) = boundedness_table(function, n, mode)?;
    let csv = output::boundedness_csv(&rows, &summary);
    emit(
        "boundedness",
        &csv,
        args.out.or_else(|| cfg.path("out")).as_deref(),
        args.plot_script.or_else(|| cfg.path("plot_script")).as_deref(),
    )
}

fn run_region(args: RegionArgs, cfg: &Config) -> Result<()> {
    let name = args
        .family
        .or_else(|| cfg.string("family"))
        .unwrap_or_else(|| "interp-beta".into());
    let eta = args.eta.or_else(|| cfg.f64("eta"));
    let k = args.k.or_else(|| cfg.f64("k"));
    let family = WeightFamily::from_name(&name, eta, k)?;
    let rmin = args.rmin.or_else(|| cfg.f64("rmin")).unwrap_or(-10.0);
    let rmax = args.rmax.or_else(|| cfg.f64("rmax")).unwrap_or(10.0);
    let rstep = args.rstep.or_else(|| cfg.f64("rstep")).unwrap_or(0.01);
    let rows = region_table(&family, rmin, rmax, rstep)?;
    let csv = output::region_csv(&rows);
    emit(
        "region",
        &csv,
        args.out.or_else(|| cfg.path("out")).as_deref(),
        args.plot_script.or_else(|| cfg.path("plot_script")).as_deref(),
    )
}

fn run_solve(args: SolveArgs, cfg: &Config) -> Result<()> {
    let flux = FluxKind::from_name(
        &args
            .flux
            .or_else(|| cfg.string("flux"))
            .unwrap_or_else(|| "advection".into()),
    )?;
    let function = TestFunction::from_name(
        &args
            .function
            .or_else(|| cfg.string("function"))
            .unwrap_or_else(|| "sine".into()),
    )?;
    let n = args.n.or_else(|| cfg.usize("n")).unwrap_or(200);
    let tfinal = args.tfinal.or_else(|| cfg.f64("tfinal")).unwrap_or(2.0);
    let cfl = args.cfl.or_else(|| cfg.f64("cfl")).unwrap_or(0.4);
    let name = args
        .family
        .or_else(|| cfg.string("family"))
        .unwrap_or_else(|| "scheme-omega1".into());
    let k = args.k.or_else(|| cfg.f64("k"));
    let family = WeightFamily::from_name(&name, None, k)?;
    let out_data = solve_experiment(flux, function, n, tfinal, cfl, family)?;
    let csv = output::solve_csv(&out_data);
    emit(
        "solve",
        &csv,
        args.out.or_else(|| cfg.path("out")).as_deref(),
        args.plot_script.or_else(|| cfg.path("plot_script")).as_deref(),
    )
}

fn main() -> Result<()> {
    let cli = Cli::parse();
    let cfg = Config::load(cli.config.as_deref())?;
    match cli.cmd {
        Command::Converge(args) => run_converge(args, &cfg),
        Command::Boundedness(args) => run_boundedness(args, &cfg),
        Command::Region(args) => run_region(args, &cfg),
        Command::Solve(args) => run_solve(args, &cfg),
    }
}
