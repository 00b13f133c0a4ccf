use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kdinv::{InvariantSelection, SolverBudget};
use kdinv_cli::golden::GoldenTable;
use kdinv_cli::{
    run_compute, run_export_hypergraph, run_perfect, run_table, run_verify, CliError, CliResult,
    Family, Format, GraphSource, Method, RunConfig, VerifyConfig,
};

/// Exact k,d-independence, chromatic, clique and domination numbers.
#[derive(Debug, Parser)]
#[command(name = "kdinv", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Plain)]
    format: FormatArg,

    /// Vertex limit for the exact solvers.
    #[arg(long, global = true, env = "KDINV_BUDGET_N")]
    budget_n: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute invariants of one instance.
    Compute {
        #[command(flatten)]
        instance: InstanceArgs,
        /// Comma-separated subset of alpha,chi,omega,gamma (or all).
        #[arg(long, default_value = "all")]
        invariants: String,
        /// Also evaluate every bound against the exact values.
        #[arg(long)]
        bounds: bool,
    },
    /// Export the geodesic hypergraph.
    Hypergraph {
        #[command(flatten)]
        instance: InstanceArgs,
        /// Write here instead of stdout.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Decide k,d-perfection.
    Perfect {
        #[command(flatten)]
        instance: InstanceArgs,
        /// Vertex limit for the brute-force check.
        #[arg(long, default_value_t = kdinv::perfection::DEFAULT_PERFECTION_MAX_N)]
        max_n: usize,
    },
    /// Tabulate the non-3,d-perfect cycles.
    Table {
        #[arg(long, default_value_t = 2)]
        d_min: usize,
        #[arg(long, default_value_t = 10)]
        d_max: usize,
        #[arg(long, default_value_t = 49)]
        n_max: usize,
    },
    /// Cross-check closed forms, classifiers and bounds. Runs paths, cycles,
    /// powers and corpus when no suite is named.
    Verify {
        #[arg(long, value_enum, value_delimiter = ',')]
        families: Vec<SuiteFamily>,
        #[arg(long, value_enum)]
        table: Option<TableName>,
        #[arg(long)]
        powers: bool,
        #[arg(long)]
        corpus: bool,
        #[arg(long, default_value_t = 12)]
        n_max: usize,
        #[arg(long, default_value_t = 10)]
        d_max: usize,
        #[arg(long, default_value_t = 2)]
        ell_max: usize,
        /// Largest cycle compared with brute-force perfection.
        #[arg(long, default_value_t = 10)]
        perfection_n_max: usize,
        /// Golden table file replacing the embedded one.
        #[arg(long)]
        golden: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
struct InstanceArgs {
    /// Graph file (`n m` header, then `u v` edges, 0-based).
    #[arg(long, conflicts_with = "family", required_unless_present = "family")]
    graph: Option<PathBuf>,
    #[arg(long, value_enum, requires = "n")]
    family: Option<FamilyArg>,
    /// Order of the family member.
    #[arg(long)]
    n: Option<usize>,
    /// Exponent for `--family path-power`.
    #[arg(long)]
    ell: Option<usize>,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    d: usize,
    /// Apply this graph power before computing.
    #[arg(long, default_value_t = 1)]
    power: usize,
    /// Use closed forms only.
    #[arg(long, conflicts_with = "brute")]
    closed_form: bool,
    /// Use the exact solvers only.
    #[arg(long)]
    brute: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Markdown,
    Plain,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyArg {
    Path,
    Cycle,
    PathPower,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteFamily {
    Paths,
    Cycles,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TableName {
    ThreeD,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
            FormatArg::Markdown => Format::Markdown,
            FormatArg::Plain => Format::Plain,
        }
    }
}

fn solver_budget(budget_n: Option<usize>) -> CliResult<SolverBudget> {
    match budget_n {
        None => Ok(SolverBudget::default()),
        Some(0) => Err(CliError::Usage("--budget-n must be positive".into())),
        Some(n) => Ok(SolverBudget::uniform(n)),
    }
}

fn run_config(
    a: InstanceArgs,
    cli_format: FormatArg,
    budget_n: Option<usize>,
) -> CliResult<RunConfig> {
    let source = match (a.graph, a.family) {
        (Some(path), _) => {
            if a.n.is_some() || a.ell.is_some() {
                return Err(CliError::Usage(
                    "--n and --ell apply to --family only".into(),
                ));
            }
            GraphSource::File(path)
        }
        (None, Some(f)) => {
            let family = match f {
                FamilyArg::Path => Family::Path,
                FamilyArg::Cycle => Family::Cycle,
                FamilyArg::PathPower => Family::PathPower,
            };
            let ell = match (family, a.ell) {
                (Family::PathPower, Some(ell)) => ell,
                (Family::PathPower, None) => {
                    return Err(CliError::Usage("--family path-power needs --ell".into()))
                }
                (_, Some(_)) => {
                    return Err(CliError::Usage(
                        "--ell applies to --family path-power only".into(),
                    ))
                }
                (_, None) => 1,
            };
            GraphSource::Family {
                family,
                n: a.n.expect("clap enforces --n"),
                ell,
            }
        }
        (None, None) => unreachable!("clap enforces a graph source"),
    };
    let mut cfg = RunConfig::new(source, a.k, a.d);
    cfg.power = a.power;
    cfg.format = cli_format.into();
    cfg.solver_budget = solver_budget(budget_n)?;
    cfg.method = if a.brute {
        Method::Brute
    } else if a.closed_form {
        Method::ClosedForm
    } else {
        Method::Auto
    };
    Ok(cfg)
}

fn print_notices(notices: &[String]) {
    for n in notices {
        eprintln!("notice: {n}");
    }
}

fn run(cli: Cli) -> CliResult<()> {
    let format = cli.format;
    match cli.command {
        Command::Compute {
            instance,
            invariants,
            bounds,
        } => {
            let mut cfg = run_config(instance, format, cli.budget_n)?;
            cfg.invariants = InvariantSelection::parse(&invariants)?;
            cfg.bounds = bounds;
            let (out, notices) = run_compute(&cfg)?;
            print_notices(&notices);
            print!("{out}");
        }
        Command::Hypergraph { instance, output } => {
            let cfg = run_config(instance, format, cli.budget_n)?;
            let out = run_export_hypergraph(&cfg)?;
            match output {
                Some(path) => std::fs::write(&path, out).map_err(|source| CliError::Write {
                    path: path.display().to_string(),
                    source,
                })?,
                None => print!("{out}"),
            }
        }
        Command::Perfect { instance, max_n } => {
            let mut cfg = run_config(instance, format, cli.budget_n)?;
            cfg.perfection_max_n = max_n;
            let (out, notices) = run_perfect(&cfg)?;
            print_notices(&notices);
            print!("{out}");
        }
        Command::Table {
            d_min,
            d_max,
            n_max,
        } => {
            print!("{}", run_table(d_min, d_max, n_max, format.into())?);
        }
        Command::Verify {
            families,
            table,
            powers,
            corpus,
            n_max,
            d_max,
            ell_max,
            perfection_n_max,
            golden,
        } => {
            let golden = match golden {
                Some(path) => {
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
                    GoldenTable::parse(&text).map_err(CliError::Usage)?
                }
                None => GoldenTable::embedded(),
            };
            let mut cfg = VerifyConfig {
                paths: families.contains(&SuiteFamily::Paths),
                cycles: families.contains(&SuiteFamily::Cycles),
                powers,
                table: table.is_some(),
                corpus,
                n_max,
                d_max,
                ell_max,
                perfection_n_max,
                golden,
                solver_budget: solver_budget(cli.budget_n)?,
                ..VerifyConfig::default()
            };
            if !(cfg.paths || cfg.cycles || cfg.powers || cfg.table || cfg.corpus) {
                cfg.paths = true;
                cfg.cycles = true;
                cfg.powers = true;
                cfg.corpus = true;
            }
            let summary = run_verify(&cfg)?;
            print!("{}", summary.render());
            if !summary.passed() {
                return Err(CliError::VerifyFailed(summary.failures()));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
