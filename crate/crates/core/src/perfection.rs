//! k,d-perfection: a brute-force checker over induced subgraphs and the
//! closed-form classification of perfect cycles.

use std::collections::HashSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::closed_forms::{chi_cycle, omega_cycle};
use crate::error::{KdError, Result};
use crate::graph::{Graph, Params, VertexSet};
use crate::hypergraph::{build_geodesic_hypergraph, HypergraphBudget};
use crate::solvers::{chromatic_number_from, max_clique, SolverBudget};

/// An induced subgraph whose chromatic number exceeds `ceil(omega / (k-1))`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub vertices: VertexSet,
    pub chi: usize,
    pub omega: usize,
    pub clique_bound: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PerfectionVerdict {
    pub perfect: bool,
    pub counterexample: Option<Counterexample>,
}

/// Default vertex limit for [`is_kd_perfect_bruteforce`].
pub const DEFAULT_PERFECTION_MAX_N: usize = 14;

/// Vertex sets of all connected induced subgraphs, ordered by size and then
/// by bitmask. Each set is grown from its minimum vertex.
pub fn connected_induced_subsets(g: &Graph) -> Result<Vec<VertexSet>> {
    if g.n() > 64 {
        return Err(KdError::TooLarge {
            what: "subgraph enumeration vertex count",
            size: g.n() as u128,
            limit: 64,
        });
    }
    let nbr: Vec<u64> = (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | (1 << w)))
        .collect();
    let mut seen = HashSet::new();
    let mut stack = Vec::new();
    for root in 0..g.n() {
        let above = !((1u64 << root) - 1) & !(1u64 << root);
        stack.push(1u64 << root);
        while let Some(set) = stack.pop() {
            if !seen.insert(set) {
                continue;
            }
            let frontier =
                crate::graph::Mask(set).iter().fold(0u64, |m, v| m | nbr[v]) & !set & above;
            for w in crate::graph::Mask(frontier).iter() {
                let next = set | (1 << w);
                if !seen.contains(&next) {
                    stack.push(next);
                }
            }
        }
    }
    let mut sets: Vec<u64> = seen.into_iter().collect();
    sets.sort_unstable_by_key(|&m| (m.count_ones(), m));
    Ok(sets.into_iter().map(VertexSet::from_mask).collect())
}

/// Checks `chi = ceil(omega / (k-1))` on every connected induced subgraph,
/// with distances recomputed inside the subgraph.
///
/// Both sides of the equality are maxima over components for a disjoint
/// union, so connected subgraphs suffice. The reported counterexample is the
/// first violator in the order of [`connected_induced_subsets`].
pub fn is_kd_perfect_bruteforce(
    g: &Graph,
    k: usize,
    d: usize,
    max_n: usize,
) -> Result<PerfectionVerdict> {
    let params = Params::new(k, d)?;
    if params.is_trivial() {
        return Err(KdError::param(format!("need k <= d + 1, got k={k}, d={d}")));
    }
    if g.n() > max_n {
        return Err(KdError::TooLarge {
            what: "perfection check vertex count",
            size: g.n() as u128,
            limit: max_n as u128,
        });
    }
    let hb = HypergraphBudget::default();
    let sb = SolverBudget::uniform(64);
    for set in connected_induced_subsets(g)? {
        let (sub, _) = g.induced_subgraph(&set)?;
        let h = build_geodesic_hypergraph(&sub, params, &hb)?;
        let (omega, _) = max_clique(&h, &sb)?;
        let bound = omega.div_ceil(k - 1);
        let (chi, _) = chromatic_number_from(&h, bound, &sb)?;
        if chi != bound {
            return Ok(PerfectionVerdict {
                perfect: false,
                counterexample: Some(Counterexample {
                    vertices: set,
                    chi,
                    omega,
                    clique_bound: bound,
                }),
            });
        }
    }
    Ok(PerfectionVerdict {
        perfect: true,
        counterexample: None,
    })
}

/// Whether `C_n` is 2,d-perfect: `n <= 2d + 1` or `(d + 1) | n`.
/// `C_3` (and smaller) count as perfect.
pub fn is_cycle_2d_perfect(n: usize, d: usize) -> bool {
    n <= 2 * d + 1 || n.is_multiple_of(d + 1)
}

/// Whether `C_n` is k,d-perfect for `k >= 3`, `d >= k - 1`, `n >= 4`.
///
/// Every proper induced subgraph of a cycle is a union of paths, which are
/// perfect, so only `chi(C_n) = ceil(omega(C_n) / (k-1))` matters.
///
/// For `n >= 2d + 2`, with `q = (d+1)/(k-1)` kept as an exact fraction:
/// integer `q` gives perfection iff `q | n`, and fractional `q` fails exactly
/// on the windows `m ceil(q) < n < (m+1) q` for integers
/// `1 <= m < (q-1)/(ceil(q)-q)`.
///
/// For `n <= 2d + 1` all geodesics of `C_n` count, so both sides are taken
/// at `L = floor(n/2)`: the clique number is `L + 1` (all of `C_4` when
/// `n = 4`) and the chromatic number is the cycle formula at `d = L`. This
/// is not always perfect: `C_7` with `k = 3`, `d = 3` has `chi = 3` but
/// `omega = 4`.
pub fn is_cycle_kd_perfect(n: usize, k: usize, d: usize) -> Result<bool> {
    if k < 3 || d + 1 < k || n < 4 {
        return Err(KdError::param(format!(
            "need k >= 3, d >= k - 1 and n >= 4, got n={n}, k={k}, d={d}"
        )));
    }
    if n <= 2 * d + 1 {
        let half = n / 2;
        if k > half + 1 {
            return Ok(true);
        }
        let omega = omega_cycle(n, k, half)?;
        return Ok(chi_cycle(n, k, half)? == omega.div_ceil(k - 1));
    }
    let (num, den) = (d + 1, k - 1);
    if num % den == 0 {
        return Ok(n.is_multiple_of(num / den));
    }
    let ceil_q = num.div_ceil(den);
    // m < (q-1)/(ceil(q)-q)  <=>  m (ceil(q) den - num) < num - den
    let gap = ceil_q * den - num;
    let in_window = (1..)
        .take_while(|&m| m * gap < num - den)
        .any(|m| m * ceil_q < n && n * den < (m + 1) * num);
    Ok(!in_window)
}

/// Classification for any valid `2 <= k <= d + 1` and `n >= 3`.
pub fn is_cycle_perfect(n: usize, k: usize, d: usize) -> Result<bool> {
    let params = Params::new(k, d)?;
    if params.is_trivial() {
        return Err(KdError::param(format!("need k <= d + 1, got k={k}, d={d}")));
    }
    if n < 3 {
        return Err(KdError::param(format!(
            "cycle needs at least 3 vertices, got {n}"
        )));
    }
    if n == 3 {
        return Ok(true);
    }
    if k == 2 {
        Ok(is_cycle_2d_perfect(n, d))
    } else {
        is_cycle_kd_perfect(n, k, d)
    }
}

/// Non-perfect cycle lengths for one value of `d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub d: usize,
    pub non_perfect: Vec<usize>,
}

/// 3,d-perfection of `C_n` for `3 <= n <= n_max` over a range of `d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PerfectionTable {
    pub n_max: usize,
    pub rows: Vec<TableRow>,
}

impl PerfectionTable {
    /// CSV with columns `d,n,perfect`, one line per `(d, n)`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("d,n,perfect\n");
        for row in &self.rows {
            for n in 3..=self.n_max {
                let _ = writeln!(out, "{},{},{}", row.d, n, !row.non_perfect.contains(&n));
            }
        }
        out
    }

    pub fn to_markdown(&self) -> String {
        let mut out = format!(
            "| d | C_n not 3,d-perfect (3 <= n <= {}) |\n|---|---|\n",
            self.n_max
        );
        for row in &self.rows {
            let cell = if row.non_perfect.is_empty() {
                "none".to_string()
            } else {
                let items: Vec<String> = row.non_perfect.iter().map(usize::to_string).collect();
                format!("{{{}}}", items.join(", "))
            };
            let _ = writeln!(out, "| {} | {} |", row.d, cell);
        }
        out
    }
}

pub fn table_3d_perfect(d_min: usize, d_max: usize, n_max: usize) -> Result<PerfectionTable> {
    if d_min < 2 || d_min > d_max {
        return Err(KdError::param(format!(
            "need 2 <= d_min <= d_max, got {d_min}..{d_max}"
        )));
    }
    let rows = (d_min..=d_max)
        .map(|d| {
            let non_perfect = (3..=n_max)
                .filter(|&n| !is_cycle_perfect(n, 3, d).expect("parameters validated"))
                .collect();
            TableRow { d, non_perfect }
        })
        .collect();
    Ok(PerfectionTable { n_max, rows })
}
