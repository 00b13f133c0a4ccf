//! Inequalities between the k,d-invariants, as checkable predicates.

use serde::{Deserialize, Serialize};

use crate::error::{KdError, Result};
use crate::graph::{Graph, Params};
use crate::hypergraph::{build_geodesic_hypergraph, Hypergraph, HypergraphBudget};
use crate::solvers::{
    chromatic_number_from, max_clique, max_independent_set, min_dominating_set, SolverBudget,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasicBounds {
    pub chi_lower_counting: usize,
    pub chi_upper_partition: usize,
    pub chi_lower_clique: usize,
}

/// `ceil(n/alpha)`, `ceil((n-alpha)/(k-1)) + 1` and `ceil(omega/(k-1))`.
pub fn basic_bounds(n: usize, alpha: usize, omega: usize, k: usize) -> Result<BasicBounds> {
    if alpha == 0 || k < 2 || alpha > n {
        return Err(KdError::param(format!(
            "need 1 <= alpha <= n and k >= 2, got n={n}, alpha={alpha}, k={k}"
        )));
    }
    Ok(BasicBounds {
        chi_lower_counting: n.div_ceil(alpha),
        chi_upper_partition: (n - alpha).div_ceil(k - 1) + 1,
        chi_lower_clique: omega.div_ceil(k - 1),
    })
}

pub fn greedy_hypergraph_bound(h: &Hypergraph) -> usize {
    h.max_degree() + 1
}

/// `Delta(G^(d-k+2)) + 1`, valid for `1 <= k - 1 <= d`.
pub fn greedy_metric_bound(g: &Graph, k: usize, d: usize) -> Result<usize> {
    if k < 2 || k > d + 1 {
        return Err(KdError::param(format!(
            "need 1 <= k - 1 <= d, got k={k}, d={d}"
        )));
    }
    Ok(g.power(d + 2 - k)?.max_degree() + 1)
}

/// `n - gamma + (k - 1)`, an upper bound on the clique number.
pub fn clique_domination_bound(n: usize, gamma: usize, k: usize) -> usize {
    (n + k - 1).saturating_sub(gamma)
}

/// One named inequality and whether the exact values satisfy it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub name: String,
    pub bound: usize,
    pub exact: usize,
    pub holds: bool,
}

/// Every bound on one instance next to the exact invariants.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub alpha: usize,
    pub chi: usize,
    pub omega: usize,
    pub gamma: usize,
    pub chi_lower_counting: usize,
    pub chi_upper_partition: usize,
    pub chi_lower_clique: usize,
    pub chi_upper_hypergraph_greedy: usize,
    pub chi_upper_metric_greedy: Option<usize>,
    pub omega_upper_domination: usize,
    pub checks: Vec<BoundCheck>,
}

impl BoundReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &BoundCheck> {
        self.checks.iter().filter(|c| !c.holds)
    }
}

fn lower(name: &str, bound: usize, exact: usize) -> BoundCheck {
    BoundCheck {
        name: name.into(),
        bound,
        exact,
        holds: bound <= exact,
    }
}

fn upper(name: &str, bound: usize, exact: usize) -> BoundCheck {
    BoundCheck {
        name: name.into(),
        bound,
        exact,
        holds: exact <= bound,
    }
}

/// Computes all four invariants exactly on `G^ell` and evaluates every bound.
pub fn bound_report(
    g: &Graph,
    params: Params,
    hb: &HypergraphBudget,
    sb: &SolverBudget,
) -> Result<BoundReport> {
    let target = if params.ell > 1 {
        g.power(params.ell)?
    } else {
        g.clone()
    };
    let (k, d, n) = (params.k, params.d, target.n());
    let h = build_geodesic_hypergraph(&target, params, hb)?;
    let (alpha, _) = max_independent_set(&h, sb)?;
    let (omega, _) = max_clique(&h, sb)?;
    let (gamma, _) = min_dominating_set(&h, sb)?;
    let basic = if n == 0 {
        BasicBounds {
            chi_lower_counting: 0,
            chi_upper_partition: 0,
            chi_lower_clique: 0,
        }
    } else {
        basic_bounds(n, alpha, omega, k)?
    };
    let (chi, _) =
        chromatic_number_from(&h, basic.chi_lower_counting.max(basic.chi_lower_clique), sb)?;
    let hyper = greedy_hypergraph_bound(&h);
    let metric = if params.is_trivial() {
        None
    } else {
        Some(greedy_metric_bound(&target, k, d)?)
    };
    let dom = clique_domination_bound(n, gamma, k);

    let mut checks = Vec::new();
    if n > 0 {
        checks.push(lower("chi_lower_counting", basic.chi_lower_counting, chi));
        checks.push(upper("chi_upper_partition", basic.chi_upper_partition, chi));
        checks.push(lower("chi_lower_clique", basic.chi_lower_clique, chi));
        checks.push(upper("chi_upper_hypergraph_greedy", hyper, chi));
    }
    if let Some(m) = metric {
        checks.push(upper("chi_upper_metric_greedy", m, chi));
    }
    checks.push(upper("omega_upper_domination", dom, omega));

    Ok(BoundReport {
        n,
        k,
        d,
        alpha,
        chi,
        omega,
        gamma,
        chi_lower_counting: basic.chi_lower_counting,
        chi_upper_partition: basic.chi_upper_partition,
        chi_lower_clique: basic.chi_lower_clique,
        chi_upper_hypergraph_greedy: hyper,
        chi_upper_metric_greedy: metric,
        omega_upper_domination: dom,
        checks,
    })
}

/// Both sides of `alpha(G^ell) <= alpha'(G)` and `chi(G^ell) >= chi'(G)`,
/// where the primed invariants use `k' = (k-2) ell + 2` and `d' = d ell`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerInequalityReport {
    pub lhs_alpha: usize,
    pub rhs_alpha: usize,
    pub lhs_chi: usize,
    pub rhs_chi: usize,
    pub alpha_holds: bool,
    pub chi_holds: bool,
    pub alpha_strict: bool,
    pub chi_strict: bool,
}

pub fn power_inequality_report(
    g: &Graph,
    k: usize,
    d: usize,
    ell: usize,
    hb: &HypergraphBudget,
    sb: &SolverBudget,
) -> Result<PowerInequalityReport> {
    let params = Params::with_power(k, d, ell)?;
    if params.is_trivial() {
        return Err(KdError::param(format!("need k <= d + 1, got k={k}, d={d}")));
    }
    let power = g.power(ell)?;
    let h_pow = build_geodesic_hypergraph(&power, Params::new(k, d)?, hb)?;
    let h_lift = build_geodesic_hypergraph(g, Params::new((k - 2) * ell + 2, d * ell)?, hb)?;
    let (lhs_alpha, _) = max_independent_set(&h_pow, sb)?;
    let (rhs_alpha, _) = max_independent_set(&h_lift, sb)?;
    let (lhs_chi, _) = chromatic_number_from(&h_pow, 1, sb)?;
    let (rhs_chi, _) = chromatic_number_from(&h_lift, 1, sb)?;
    Ok(PowerInequalityReport {
        lhs_alpha,
        rhs_alpha,
        lhs_chi,
        rhs_chi,
        alpha_holds: lhs_alpha <= rhs_alpha,
        chi_holds: lhs_chi >= rhs_chi,
        alpha_strict: lhs_alpha < rhs_alpha,
        chi_strict: lhs_chi > rhs_chi,
    })
}
