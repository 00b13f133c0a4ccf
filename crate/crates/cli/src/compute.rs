//! `compute`, `hypergraph`, `perfect` and `table`.

use kdinv::closed_forms::{
    alpha_cycle, alpha_path, alpha_path_power, canonical_cycle_coloring,
    canonical_independent_set_path, canonical_path_coloring, chi_cycle, chi_path, chi_path_power,
    j_representation, omega_cycle, omega_path,
};
use kdinv::perfection::{
    is_cycle_perfect, is_kd_perfect_bruteforce, table_3d_perfect, PerfectionTable,
};
use kdinv::{
    bounds::bound_report, build_geodesic_hypergraph, compute_all, cycle_graph, path_graph,
    BoundReport, ColoringAssignment, Graph, InvariantSelection, KdError, Params, VertexSet,
};
use serde::Serialize;

use crate::{io, CliError, CliResult, Family, GraphSource, Method, RunConfig, SCHEMA_VERSION};

/// A graph ready for computation, with enough provenance to pick closed forms.
#[derive(Debug, Clone)]
pub struct Instance {
    pub graph: Graph,
    pub description: String,
    /// Family, order and total power exponent when the graph is a family member.
    pub family: Option<(Family, usize, usize)>,
    pub one_based: bool,
}

impl Instance {
    pub fn load(source: &GraphSource, power: usize) -> CliResult<Self> {
        match *source {
            GraphSource::File(ref path) => {
                let base = io::parse_graph_file(path)?;
                let graph = if power > 1 { base.power(power)? } else { base };
                let mut description = path.display().to_string();
                if power > 1 {
                    description = format!("({description})^{power}");
                }
                Ok(Instance {
                    graph,
                    description,
                    family: None,
                    one_based: false,
                })
            }
            GraphSource::Family { family, n, ell } => {
                let (base, ell) = match family {
                    Family::Path => (path_graph(n)?, power),
                    Family::PathPower => (path_graph(n)?, ell * power),
                    Family::Cycle => (cycle_graph(n)?, power),
                };
                let graph = if ell > 1 { base.power(ell)? } else { base };
                let stem = if family == Family::Cycle { "C" } else { "P" };
                let description = if ell > 1 {
                    format!("{stem}_{n}^{ell}")
                } else {
                    format!("{stem}_{n}")
                };
                Ok(Instance {
                    graph,
                    description,
                    family: Some((family, n, ell)),
                    one_based: family != Family::Cycle,
                })
            }
        }
    }

    fn labels(&self, set: &VertexSet) -> Vec<usize> {
        if self.one_based {
            set.labels_one_based()
        } else {
            set.as_slice().to_vec()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Invariant {
    Alpha,
    Chi,
    Omega,
    Gamma,
}

impl Invariant {
    pub const ALL: [Invariant; 4] = [
        Invariant::Alpha,
        Invariant::Chi,
        Invariant::Omega,
        Invariant::Gamma,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Invariant::Alpha => "alpha",
            Invariant::Chi => "chi",
            Invariant::Omega => "omega",
            Invariant::Gamma => "gamma",
        }
    }

    fn selected(self, sel: &InvariantSelection) -> bool {
        match self {
            Invariant::Alpha => sel.alpha,
            Invariant::Chi => sel.chi,
            Invariant::Omega => sel.omega,
            Invariant::Gamma => sel.gamma,
        }
    }

    fn select(self, sel: &mut InvariantSelection) {
        match self {
            Invariant::Alpha => sel.alpha = true,
            Invariant::Chi => sel.chi = true,
            Invariant::Omega => sel.omega = true,
            Invariant::Gamma => sel.gamma = true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    Set(VertexSet),
    Coloring(ColoringAssignment),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum WitnessOut {
    IndependentSet { vertices: Vec<usize> },
    Coloring { colors: Vec<usize> },
    Clique { vertices: Vec<usize> },
    DominatingSet { vertices: Vec<usize> },
}

impl WitnessOut {
    /// Space-separated members or per-vertex colors.
    pub fn compact(&self) -> String {
        let items = match self {
            WitnessOut::IndependentSet { vertices }
            | WitnessOut::Clique { vertices }
            | WitnessOut::DominatingSet { vertices } => vertices,
            WitnessOut::Coloring { colors } => colors,
        };
        items
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn kind(&self) -> &'static str {
        match self {
            WitnessOut::IndependentSet { .. } => "independent-set",
            WitnessOut::Coloring { .. } => "coloring",
            WitnessOut::Clique { .. } => "clique",
            WitnessOut::DominatingSet { .. } => "dominating-set",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    ClosedForm,
    Solver,
}

impl Source {
    pub fn as_str(self) -> &'static str {
        match self {
            Source::ClosedForm => "closed-form",
            Source::Solver => "solver",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct InvariantValue {
    pub name: &'static str,
    pub value: usize,
    pub source: Source,
    pub witness: Option<WitnessOut>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ComputeReport {
    pub schema: u32,
    pub graph: String,
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub d: usize,
    pub vertex_labels: &'static str,
    pub invariants: Vec<InvariantValue>,
    pub notices: Vec<String>,
    pub bounds: Option<BoundReport>,
}

fn arc(len: usize) -> VertexSet {
    (0..len).collect()
}

/// Closed-form value and canonical certificate for one family member, or the
/// reason none applies.
pub fn closed_form(
    family: Family,
    n: usize,
    ell: usize,
    k: usize,
    d: usize,
    inv: Invariant,
) -> Result<(usize, Option<Certificate>), String> {
    let trivial = k > d + 1;
    let err = |e: KdError| e.to_string();
    match (family, ell > 1, inv) {
        (_, _, Invariant::Gamma) => Err("no closed form for the domination number".into()),
        (Family::Cycle, true, _) => Err("no closed form for powers of cycles".into()),
        (Family::Path | Family::PathPower, false, Invariant::Alpha) => {
            let v = alpha_path(n, k, d).map_err(err)?;
            let set = if trivial {
                arc(n)
            } else {
                canonical_independent_set_path(n, k, d).map_err(err)?
            };
            Ok((v, Some(Certificate::Set(set))))
        }
        (Family::Path | Family::PathPower, false, Invariant::Chi) => {
            let v = chi_path(n, k, d).map_err(err)?;
            let col = canonical_path_coloring(n, d + 1, k - 1).map_err(err)?;
            Ok((v, Some(Certificate::Coloring(col))))
        }
        (Family::Path | Family::PathPower, false, Invariant::Omega) => {
            let v = omega_path(n, k, d).map_err(err)?;
            Ok((v, Some(Certificate::Set(arc(v)))))
        }
        (Family::Path | Family::PathPower, true, Invariant::Alpha) => {
            Ok((alpha_path_power(n, k, d, ell).map_err(err)?, None))
        }
        (Family::Path | Family::PathPower, true, Invariant::Chi) => {
            Ok((chi_path_power(n, k, d, ell).map_err(err)?, None))
        }
        (Family::Path | Family::PathPower, true, Invariant::Omega) => {
            Err("no closed form for the clique number of path powers".into())
        }
        (Family::Cycle, false, inv) => {
            // Geodesics in C_n never exceed length floor(n/2).
            let d = d.min(n / 2);
            match inv {
                Invariant::Alpha => {
                    let v = alpha_cycle(n, k, d).map_err(err)?;
                    let set = if k > d + 1 {
                        arc(n)
                    } else {
                        j_representation(n, v, 0).map_err(err)?
                    };
                    Ok((v, Some(Certificate::Set(set))))
                }
                Invariant::Chi => {
                    let v = chi_cycle(n, k, d).map_err(err)?;
                    let col = if k > d + 1 {
                        ColoringAssignment::new(vec![1; n]).map_err(err)?
                    } else {
                        canonical_cycle_coloring(n, k, d).map_err(err)?
                    };
                    Ok((v, Some(Certificate::Coloring(col))))
                }
                Invariant::Omega => {
                    let v = omega_cycle(n, k, d).map_err(err)?;
                    Ok((v, Some(Certificate::Set(arc(v)))))
                }
                Invariant::Gamma => unreachable!(),
            }
        }
    }
}

fn witness(inv: Invariant, cert: Certificate, inst: &Instance) -> WitnessOut {
    match (inv, cert) {
        (_, Certificate::Coloring(c)) => WitnessOut::Coloring {
            colors: c.colors().to_vec(),
        },
        (Invariant::Alpha, Certificate::Set(s)) => WitnessOut::IndependentSet {
            vertices: inst.labels(&s),
        },
        (Invariant::Omega, Certificate::Set(s)) => WitnessOut::Clique {
            vertices: inst.labels(&s),
        },
        (_, Certificate::Set(s)) => WitnessOut::DominatingSet {
            vertices: inst.labels(&s),
        },
    }
}

pub fn compute_report(cfg: &RunConfig) -> CliResult<ComputeReport> {
    cfg.validate()?;
    let inst = Instance::load(&cfg.source, cfg.power)?;
    let params = Params::new(cfg.k, cfg.d)?;
    let mut notices = Vec::new();
    let mut values = Vec::new();
    let mut need = InvariantSelection::default();
    for inv in Invariant::ALL
        .into_iter()
        .filter(|i| i.selected(&cfg.invariants))
    {
        let attempt = match (cfg.method, inst.family) {
            (Method::Brute, _) => None,
            (_, Some((family, n, ell))) => Some(closed_form(family, n, ell, cfg.k, cfg.d, inv)),
            (Method::ClosedForm, None) => {
                return Err(CliError::Usage(
                    "--closed-form needs a --family graph; use --brute for graph files".into(),
                ))
            }
            (Method::Auto, None) => None,
        };
        match attempt {
            Some(Ok((value, cert))) => values.push(InvariantValue {
                name: inv.name(),
                value,
                source: Source::ClosedForm,
                witness: cert.map(|c| witness(inv, c, &inst)),
            }),
            Some(Err(reason)) if cfg.method == Method::ClosedForm => {
                return Err(CliError::Usage(format!("{}: {reason}", inv.name())));
            }
            Some(Err(reason)) => {
                notices.push(format!("{}: {reason}; using the exact solver", inv.name()));
                inv.select(&mut need);
            }
            None => inv.select(&mut need),
        }
    }
    if need != InvariantSelection::default() {
        let r = compute_all(
            &inst.graph,
            params,
            need,
            &cfg.hypergraph_budget,
            &cfg.solver_budget,
        )?;
        let solved = [
            (
                Invariant::Alpha,
                r.alpha,
                r.independent_set.map(Certificate::Set),
            ),
            (Invariant::Chi, r.chi, r.coloring.map(Certificate::Coloring)),
            (Invariant::Omega, r.omega, r.clique.map(Certificate::Set)),
            (
                Invariant::Gamma,
                r.gamma,
                r.dominating_set.map(Certificate::Set),
            ),
        ];
        for (inv, value, cert) in solved {
            if let Some(value) = value {
                values.push(InvariantValue {
                    name: inv.name(),
                    value,
                    source: Source::Solver,
                    witness: cert.map(|c| witness(inv, c, &inst)),
                });
            }
        }
        values.sort_by_key(|v| Invariant::ALL.iter().position(|i| i.name() == v.name));
    }
    let bounds = if cfg.bounds {
        Some(bound_report(
            &inst.graph,
            params,
            &cfg.hypergraph_budget,
            &cfg.solver_budget,
        )?)
    } else {
        None
    };
    Ok(ComputeReport {
        schema: SCHEMA_VERSION,
        graph: inst.description.clone(),
        n: inst.graph.n(),
        m: inst.graph.edge_count(),
        k: cfg.k,
        d: cfg.d,
        vertex_labels: if inst.one_based {
            "one-based"
        } else {
            "zero-based"
        },
        invariants: values,
        notices,
        bounds,
    })
}

/// Runs `compute` and returns the rendered report plus notices for stderr.
pub fn run_compute(cfg: &RunConfig) -> CliResult<(String, Vec<String>)> {
    let report = compute_report(cfg)?;
    let notices = report.notices.clone();
    Ok((crate::render::compute(&report, cfg.format), notices))
}

/// The geodesic hypergraph in export format.
pub fn run_export_hypergraph(cfg: &RunConfig) -> CliResult<String> {
    cfg.validate()?;
    let inst = Instance::load(&cfg.source, cfg.power)?;
    let h = build_geodesic_hypergraph(
        &inst.graph,
        Params::new(cfg.k, cfg.d)?,
        &cfg.hypergraph_budget,
    )?;
    Ok(h.to_export_string())
}

#[derive(Debug, Clone, Serialize)]
pub struct CounterexampleOut {
    pub vertices: Vec<usize>,
    pub chi: usize,
    pub omega: usize,
    pub clique_bound: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct PerfectReport {
    pub schema: u32,
    pub graph: String,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub source: Source,
    pub perfect: bool,
    pub vertex_labels: &'static str,
    pub counterexample: Option<CounterexampleOut>,
    pub notices: Vec<String>,
}

pub fn perfect_report(cfg: &RunConfig) -> CliResult<PerfectReport> {
    cfg.validate()?;
    let inst = Instance::load(&cfg.source, cfg.power)?;
    let params = Params::new(cfg.k, cfg.d)?;
    let mut notices = Vec::new();
    let classified = if params.is_trivial() {
        notices.push(
            "k > d + 1: the hypergraph has no edges, so every induced subgraph has chi = 1".into(),
        );
        Some(true)
    } else if cfg.method == Method::Brute {
        None
    } else {
        match inst.family {
            Some((Family::Cycle, n, 1)) => Some(is_cycle_perfect(n, cfg.k, cfg.d)?),
            Some((Family::Path | Family::PathPower, _, 1)) => Some(true),
            Some(_) if cfg.method == Method::ClosedForm => {
                return Err(CliError::Usage(
                    "no perfection classifier for graph powers".into(),
                ))
            }
            None if cfg.method == Method::ClosedForm => {
                return Err(CliError::Usage(
                    "--closed-form needs a --family graph; use --brute for graph files".into(),
                ))
            }
            Some(_) => {
                notices.push("no perfection classifier for graph powers; using brute force".into());
                None
            }
            None => None,
        }
    };
    let (source, perfect, counterexample) = match classified {
        Some(p) => (Source::ClosedForm, p, None),
        None => {
            let v = is_kd_perfect_bruteforce(&inst.graph, cfg.k, cfg.d, cfg.perfection_max_n)?;
            let ce = v.counterexample.map(|c| CounterexampleOut {
                vertices: inst.labels(&c.vertices),
                chi: c.chi,
                omega: c.omega,
                clique_bound: c.clique_bound,
            });
            (Source::Solver, v.perfect, ce)
        }
    };
    Ok(PerfectReport {
        schema: SCHEMA_VERSION,
        graph: inst.description,
        n: inst.graph.n(),
        k: cfg.k,
        d: cfg.d,
        source,
        perfect,
        vertex_labels: if inst.one_based {
            "one-based"
        } else {
            "zero-based"
        },
        counterexample,
        notices,
    })
}

pub fn run_perfect(cfg: &RunConfig) -> CliResult<(String, Vec<String>)> {
    let report = perfect_report(cfg)?;
    let notices = report.notices.clone();
    Ok((crate::render::perfect(&report, cfg.format), notices))
}

#[derive(Debug, Clone, Serialize)]
struct TableJson<'a> {
    schema: u32,
    #[serde(flatten)]
    table: &'a PerfectionTable,
}

pub fn run_table(
    d_min: usize,
    d_max: usize,
    n_max: usize,
    format: crate::Format,
) -> CliResult<String> {
    let table = table_3d_perfect(d_min, d_max, n_max)?;
    Ok(match format {
        crate::Format::Csv => table.to_csv(),
        crate::Format::Json => {
            let body = TableJson {
                schema: SCHEMA_VERSION,
                table: &table,
            };
            serde_json::to_string_pretty(&body).expect("serializable") + "\n"
        }
        crate::Format::Markdown | crate::Format::Plain => table.to_markdown(),
    })
}
