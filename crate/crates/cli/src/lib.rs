//! Library side of the `kdinv` command-line tool: graph file I/O, instance
//! construction, closed-form/solver dispatch, verification suites and report
//! rendering. `main.rs` only parses arguments and maps errors to exit codes.

pub mod compute;
pub mod golden;
pub mod io;
pub mod render;
pub mod verify;

use std::path::PathBuf;

use kdinv::{HypergraphBudget, InvariantSelection, KdError, SolverBudget};
use serde::Serialize;
use thiserror::Error;

pub use compute::{run_compute, run_export_hypergraph, run_perfect, run_table};
pub use io::{parse_graph_file, parse_graph_str, render_graph, ParseError};
pub use verify::{run_verify, VerifyConfig, VerifySummary};

/// Version of the JSON output layout.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error(transparent)]
    Kd(#[from] KdError),

    #[error("{0}")]
    Usage(String),

    #[error("{path}: {source}")]
    Write {
        path: String,
        source: std::io::Error,
    },

    #[error("verification failed: {0} check(s) did not pass")]
    VerifyFailed(usize),
}

impl CliError {
    /// 2 when a size budget was exceeded, 1 otherwise.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Kd(e) if e.is_budget() => 2,
            _ => 1,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Path,
    Cycle,
    PathPower,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphSource {
    File(PathBuf),
    Family {
        family: Family,
        n: usize,
        ell: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Closed form where one applies, solver otherwise.
    Auto,
    ClosedForm,
    Brute,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    Json,
    Csv,
    Markdown,
    #[default]
    Plain,
}

/// One fully validated instance request.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub source: GraphSource,
    pub k: usize,
    pub d: usize,
    /// Graph power applied before computing.
    pub power: usize,
    pub invariants: InvariantSelection,
    pub method: Method,
    pub format: Format,
    pub bounds: bool,
    pub solver_budget: SolverBudget,
    pub hypergraph_budget: HypergraphBudget,
    /// Vertex limit for brute-force perfection checks.
    pub perfection_max_n: usize,
}

impl RunConfig {
    pub fn new(source: GraphSource, k: usize, d: usize) -> Self {
        RunConfig {
            source,
            k,
            d,
            power: 1,
            invariants: InvariantSelection::ALL,
            method: Method::Auto,
            format: Format::Plain,
            bounds: false,
            solver_budget: SolverBudget::default(),
            hypergraph_budget: HypergraphBudget::default(),
            perfection_max_n: kdinv::perfection::DEFAULT_PERFECTION_MAX_N,
        }
    }

    pub fn validate(&self) -> CliResult<()> {
        if self.solver_budget.max_n == 0 || self.solver_budget.max_n_chromatic == 0 {
            return Err(CliError::Usage("solver budget must be positive".into()));
        }
        if self.perfection_max_n == 0 {
            return Err(CliError::Usage(
                "perfection vertex limit must be positive".into(),
            ));
        }
        if let GraphSource::Family { family, n, ell } = self.source {
            let min = if family == Family::Cycle { 3 } else { 1 };
            if n < min {
                return Err(CliError::Usage(format!(
                    "family needs --n >= {min}, got {n}"
                )));
            }
            if ell == 0 {
                return Err(CliError::Usage("--ell must be at least 1".into()));
            }
        }
        kdinv::Params::with_power(self.k, self.d, self.power)?;
        Ok(())
    }
}
