//! Exact α, χ, ω and γ of a k-uniform hypergraph, with certificates.
//!
//! Applied to the geodesic hypergraph these are the k,d-independence,
//! chromatic, clique and domination numbers of the underlying graph. All
//! searches are deterministic: the same input always yields the same witness.

mod clique;
mod coloring;
mod domination;
mod independent;

use serde::{Deserialize, Serialize};

use crate::error::{KdError, Result};
use crate::graph::{Graph, Mask, Params, VertexSet};
use crate::hypergraph::{build_geodesic_hypergraph, Hypergraph, HypergraphBudget};

/// Vertex-count limits for the exponential solvers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolverBudget {
    /// Limit for independence, clique and domination.
    pub max_n: usize,
    /// Limit for the chromatic number.
    pub max_n_chromatic: usize,
}

impl Default for SolverBudget {
    fn default() -> Self {
        SolverBudget {
            max_n: 30,
            max_n_chromatic: 24,
        }
    }
}

impl SolverBudget {
    /// Same limit for every solver.
    pub fn uniform(max_n: usize) -> Self {
        SolverBudget {
            max_n,
            max_n_chromatic: max_n,
        }
    }

    fn check(limit: usize, n: usize, what: &'static str) -> Result<()> {
        if n > limit {
            return Err(KdError::TooLarge {
                what,
                size: n as u128,
                limit: limit as u128,
            });
        }
        Ok(())
    }
}

/// A total vertex coloring with colors `1..=c`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ColoringAssignment {
    colors: Vec<usize>,
}

impl ColoringAssignment {
    /// `colors[v]` is the color of vertex `v`; colors must be at least 1.
    pub fn new(colors: Vec<usize>) -> Result<Self> {
        if let Some(v) = colors.iter().position(|&c| c == 0) {
            return Err(KdError::param(format!(
                "vertex {v} has color 0; colors start at 1"
            )));
        }
        Ok(ColoringAssignment { colors })
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Number of distinct colors in use.
    pub fn num_colors(&self) -> usize {
        let mut seen: Vec<usize> = self.colors.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    /// Color classes in increasing color order; empty colors are skipped.
    pub fn classes(&self) -> Vec<VertexSet> {
        let max = self.colors.iter().copied().max().unwrap_or(0);
        (1..=max)
            .map(|c| {
                self.colors
                    .iter()
                    .enumerate()
                    .filter(|&(_, &col)| col == c)
                    .map(|(v, _)| v)
                    .collect::<VertexSet>()
            })
            .filter(|s| !s.is_empty())
            .collect()
    }
}

pub fn max_independent_set(h: &Hypergraph, budget: &SolverBudget) -> Result<(usize, VertexSet)> {
    SolverBudget::check(budget.max_n, h.n(), "independent-set instance")?;
    Ok(independent::solve(h))
}

/// Chromatic number with an optimal coloring. `lower` is a known lower bound
/// (pass 1 when nothing is known); a wrong bound gives a wrong answer.
pub fn chromatic_number_from(
    h: &Hypergraph,
    lower: usize,
    budget: &SolverBudget,
) -> Result<(usize, ColoringAssignment)> {
    SolverBudget::check(budget.max_n_chromatic, h.n(), "chromatic instance")?;
    let (chi, colors) = coloring::solve(h, lower);
    let colors = colors.into_iter().map(|c| c + 1).collect();
    Ok((chi, ColoringAssignment { colors }))
}

pub fn chromatic_number(
    h: &Hypergraph,
    budget: &SolverBudget,
) -> Result<(usize, ColoringAssignment)> {
    chromatic_number_from(h, 1, budget)
}

pub fn max_clique(h: &Hypergraph, budget: &SolverBudget) -> Result<(usize, VertexSet)> {
    SolverBudget::check(budget.max_n, h.n(), "clique instance")?;
    Ok(clique::solve(h))
}

pub fn min_dominating_set(h: &Hypergraph, budget: &SolverBudget) -> Result<(usize, VertexSet)> {
    SolverBudget::check(budget.max_n, h.n(), "domination instance")?;
    Ok(domination::solve(h))
}

/// No edge of `h` lies inside `set`.
pub fn is_independent(h: &Hypergraph, set: &VertexSet) -> bool {
    if set.iter().any(|v| v >= h.n()) {
        return false;
    }
    let m = set.to_mask();
    h.edge_masks().iter().all(|&e| e & !m != 0)
}

/// Every k-subset of `set` is an edge of `h`.
pub fn is_clique(h: &Hypergraph, set: &VertexSet) -> bool {
    if set.iter().any(|v| v >= h.n()) {
        return false;
    }
    let members = set.as_slice();
    let mut ok = true;
    if members.len() >= h.k() {
        subsets_of(members, h.k(), &mut |m| ok &= h.has_mask(m));
    }
    ok
}

/// Every vertex outside `set` has an edge through it whose other members lie in `set`.
pub fn is_dominating(h: &Hypergraph, set: &VertexSet) -> bool {
    if set.iter().any(|v| v >= h.n()) {
        return false;
    }
    let m = set.to_mask();
    (0..h.n()).all(|v| {
        m & (1 << v) != 0
            || h.incident_masks(v)
                .iter()
                .any(|&e| e & !(1u64 << v) & !m == 0)
    })
}

/// Total on the vertices and every color class independent.
pub fn is_proper_coloring(h: &Hypergraph, coloring: &ColoringAssignment) -> bool {
    coloring.len() == h.n() && coloring.classes().iter().all(|c| is_independent(h, c))
}

fn subsets_of(members: &[usize], k: usize, f: &mut impl FnMut(u64)) {
    fn rec(members: &[usize], from: usize, left: usize, acc: u64, f: &mut impl FnMut(u64)) {
        if left == 0 {
            f(acc);
            return;
        }
        for i in from..=(members.len() - left) {
            rec(members, i + 1, left - 1, acc | (1 << members[i]), f);
        }
    }
    rec(members, 0, k, 0, f);
}

/// A witness to check with [`verify_witness`].
#[derive(Debug, Clone, Copy)]
pub enum Witness<'a> {
    Independent(&'a VertexSet),
    Coloring(&'a ColoringAssignment),
    Clique(&'a VertexSet),
    Dominating(&'a VertexSet),
}

pub fn verify_witness(h: &Hypergraph, witness: Witness<'_>) -> bool {
    match witness {
        Witness::Independent(s) => is_independent(h, s),
        Witness::Coloring(c) => is_proper_coloring(h, c),
        Witness::Clique(s) => is_clique(h, s),
        Witness::Dominating(s) => is_dominating(h, s),
    }
}

/// Which invariants [`compute_all`] should compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct InvariantSelection {
    pub alpha: bool,
    pub chi: bool,
    pub omega: bool,
    pub gamma: bool,
}

impl InvariantSelection {
    pub const ALL: InvariantSelection = InvariantSelection {
        alpha: true,
        chi: true,
        omega: true,
        gamma: true,
    };

    /// Parses a comma-separated list such as `alpha,chi` (or `all`).
    pub fn parse(list: &str) -> Result<Self> {
        let mut sel = InvariantSelection::default();
        for item in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            match item.to_ascii_lowercase().as_str() {
                "alpha" => sel.alpha = true,
                "chi" => sel.chi = true,
                "omega" => sel.omega = true,
                "gamma" => sel.gamma = true,
                "all" => sel = Self::ALL,
                other => return Err(KdError::param(format!("unknown invariant `{other}`"))),
            }
        }
        if sel == InvariantSelection::default() {
            return Err(KdError::param("no invariant selected"));
        }
        Ok(sel)
    }
}

/// Exact invariants of one instance with their certificates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub edges: usize,
    pub alpha: Option<usize>,
    pub chi: Option<usize>,
    pub omega: Option<usize>,
    pub gamma: Option<usize>,
    pub independent_set: Option<VertexSet>,
    pub coloring: Option<ColoringAssignment>,
    pub clique: Option<VertexSet>,
    pub dominating_set: Option<VertexSet>,
}

/// Builds the geodesic hypergraph of `g` (raised to `params.ell` first when
/// that exceeds 1) once and runs the selected solvers on it.
///
/// When the chromatic number is requested alongside α and ω, the search
/// starts from `max(ceil(n/α), ceil(ω/(k-1)))`.
pub fn compute_all(
    g: &Graph,
    params: Params,
    which: InvariantSelection,
    hyper_budget: &HypergraphBudget,
    budget: &SolverBudget,
) -> Result<InvariantReport> {
    let powered;
    let g = if params.ell > 1 {
        powered = g.power(params.ell)?;
        &powered
    } else {
        g
    };
    let h = build_geodesic_hypergraph(g, params, hyper_budget)?;
    let n = h.n();
    let mut report = InvariantReport {
        n,
        k: params.k,
        d: params.d,
        edges: h.edge_count(),
        alpha: None,
        chi: None,
        omega: None,
        gamma: None,
        independent_set: None,
        coloring: None,
        clique: None,
        dominating_set: None,
    };
    if which.alpha {
        let (a, s) = max_independent_set(&h, budget)?;
        report.alpha = Some(a);
        report.independent_set = Some(s);
    }
    if which.omega {
        let (w, s) = max_clique(&h, budget)?;
        report.omega = Some(w);
        report.clique = Some(s);
    }
    if which.gamma {
        let (g, s) = min_dominating_set(&h, budget)?;
        report.gamma = Some(g);
        report.dominating_set = Some(s);
    }
    if which.chi {
        let mut lower = 1;
        if let Some(a) = report.alpha.filter(|&a| a > 0) {
            lower = lower.max(n.div_ceil(a));
        }
        if let Some(w) = report.omega {
            lower = lower.max(w.div_ceil(params.k - 1));
        }
        let (c, col) = chromatic_number_from(&h, lower, budget)?;
        report.chi = Some(c);
        report.coloring = Some(col);
    }
    Ok(report)
}

/// Extends `seed` to a maximal independent set, trying vertices in `order`.
pub fn greedy_maximal_independent(h: &Hypergraph, seed: &VertexSet, order: &[usize]) -> VertexSet {
    let mut set = seed.to_mask();
    for &v in order {
        let with = set | (1 << v);
        if set & (1 << v) == 0 && h.incident_masks(v).iter().all(|&e| e & !with != 0) {
            set = with;
        }
    }
    VertexSet::from_iter(Mask(set).iter())
}
