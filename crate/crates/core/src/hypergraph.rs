//! The k-uniform geodesic hypergraph of a graph and basic hypergraph queries.
//!
//! A k-subset is an edge when it lies on one shortest path of length at most
//! `d`. Membership is decided from the distance matrix alone: a set lies on a
//! geodesic exactly when, listed by distance from one of its extreme members,
//! consecutive distances telescope to the distance between the extremes.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::error::{KdError, Result};
use crate::graph::{DistanceMatrix, Graph, Mask, Params, VertexSet};

/// Limits on hypergraph construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HypergraphBudget {
    /// Largest vertex count accepted; never more than 64.
    pub max_n: usize,
    /// Largest `C(n, k)` accepted.
    pub max_candidates: u128,
}

impl Default for HypergraphBudget {
    fn default() -> Self {
        HypergraphBudget {
            max_n: 64,
            max_candidates: binomial(64, 7),
        }
    }
}

impl HypergraphBudget {
    fn check(&self, n: usize, k: usize) -> Result<()> {
        let max_n = self.max_n.min(64);
        if n > max_n {
            return Err(KdError::TooLarge {
                what: "hypergraph vertex count",
                size: n as u128,
                limit: max_n as u128,
            });
        }
        let candidates = binomial(n, k);
        if candidates > self.max_candidates {
            return Err(KdError::TooLarge {
                what: "k-subset candidate count",
                size: candidates,
                limit: self.max_candidates,
            });
        }
        Ok(())
    }
}

/// `C(n, k)` without overflow for the ranges used here.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// A k-uniform hypergraph on at most 64 vertices.
///
/// Edges are stored as bitmasks, ordered lexicographically by their sorted
/// vertex lists.
#[derive(Debug, Clone)]
pub struct Hypergraph {
    n: usize,
    k: usize,
    edges: Vec<u64>,
    incident: Vec<Vec<u64>>,
    lookup: HashSet<u64>,
}

/// The hypergraph built by [`build_geodesic_hypergraph`].
pub type GeodesicHypergraph = Hypergraph;

impl PartialEq for Hypergraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.k == other.k && self.edges == other.edges
    }
}

impl Eq for Hypergraph {}

impl Hypergraph {
    /// Builds a k-uniform hypergraph from vertex lists. Duplicates collapse.
    pub fn from_edges(n: usize, k: usize, edges: &[Vec<usize>]) -> Result<Self> {
        if n > 64 {
            return Err(KdError::TooLarge {
                what: "hypergraph vertex count",
                size: n as u128,
                limit: 64,
            });
        }
        let mut masks = Vec::with_capacity(edges.len());
        for (index, e) in edges.iter().enumerate() {
            let set = VertexSet::new(e.clone());
            if set.len() != k {
                return Err(KdError::param(format!(
                    "edge #{index} has {} distinct vertices, expected {k}",
                    set.len()
                )));
            }
            set.check_range(n)?;
            masks.push(set.to_mask());
        }
        Ok(Self::from_masks(n, k, masks))
    }

    pub(crate) fn from_masks(n: usize, k: usize, mut edges: Vec<u64>) -> Self {
        edges.sort_unstable_by_key(|&m| lex_key(m));
        edges.dedup();
        let mut incident = vec![Vec::new(); n];
        for &e in &edges {
            for v in Mask(e).iter() {
                incident[v].push(e);
            }
        }
        let lookup = edges.iter().copied().collect();
        Hypergraph {
            n,
            k,
            edges,
            incident,
            lookup,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as sorted vertex lists, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        self.edges.iter().map(|&m| Mask(m).iter().collect())
    }

    pub fn contains_edge(&self, e: &VertexSet) -> bool {
        e.len() == self.k && e.iter().all(|v| v < self.n) && self.lookup.contains(&e.to_mask())
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incident[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.incident.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub(crate) fn edge_masks(&self) -> &[u64] {
        &self.edges
    }

    pub(crate) fn incident_masks(&self, v: usize) -> &[u64] {
        &self.incident[v]
    }

    pub(crate) fn has_mask(&self, m: u64) -> bool {
        self.lookup.contains(&m)
    }

    /// The k-uniform hypergraph whose edges are exactly the k-subsets that are
    /// not edges of `self`.
    pub fn uniform_complement(&self, budget: &HypergraphBudget) -> Result<Hypergraph> {
        budget.check(self.n, self.k)?;
        let mut edges = Vec::new();
        for_each_k_subset(self.n, self.k, |m| {
            if !self.lookup.contains(&m) {
                edges.push(m);
            }
        });
        Ok(Hypergraph::from_masks(self.n, self.k, edges))
    }

    /// Text export: a `n k m` header followed by one sorted edge per line.
    pub fn to_export_string(&self) -> String {
        let mut out = format!("{} {} {}\n", self.n, self.k, self.edges.len());
        for e in self.edges() {
            let line: Vec<String> = e.iter().map(usize::to_string).collect();
            let _ = writeln!(out, "{}", line.join(" "));
        }
        out
    }
}

fn lex_key(m: u64) -> Vec<usize> {
    Mask(m).iter().collect()
}

/// Calls `f` on every k-subset of `0..n` as a bitmask.
pub(crate) fn for_each_k_subset(n: usize, k: usize, mut f: impl FnMut(u64)) {
    fn rec(start: usize, n: usize, left: usize, acc: u64, f: &mut impl FnMut(u64)) {
        if left == 0 {
            f(acc);
            return;
        }
        for v in start..=(n - left) {
            rec(v + 1, n, left - 1, acc | (1 << v), f);
        }
    }
    if k <= n {
        rec(0, n, k, 0, &mut f);
    }
}

/// True when some ordering of `e` walks a shortest path of length at most `d`.
pub fn is_geodesic_subset(dm: &DistanceMatrix, e: &VertexSet, d: usize) -> bool {
    let members = e.as_slice();
    let Some(&first) = members.first() else {
        return false;
    };
    if members.iter().any(|&v| dm.get(first, v).is_none()) {
        return false;
    }
    members.iter().any(|&start| {
        let mut order: Vec<usize> = members.to_vec();
        order.sort_by_key(|&v| dm.raw(start, v));
        let end = *order.last().unwrap();
        let span = dm.raw(start, end) as usize;
        span <= d
            && order
                .windows(2)
                .map(|w| dm.raw(w[0], w[1]) as usize)
                .sum::<usize>()
                == span
    })
}

/// Builds the k-uniform geodesic hypergraph of `g` for the given parameters.
///
/// Each geodesic is generated from its endpoint pair: for `u, v` at distance
/// `t` with `k - 1 <= t <= d`, the interior vertices of the metric interval are
/// chained in order of distance from `u`.
pub fn build_geodesic_hypergraph(
    g: &Graph,
    params: Params,
    budget: &HypergraphBudget,
) -> Result<Hypergraph> {
    let (n, k, d) = (g.n(), params.k, params.d);
    if params.is_trivial() || k > n {
        if n > 64 {
            budget.check(n, 0)?;
        }
        return Ok(Hypergraph::from_masks(n, k, Vec::new()));
    }
    budget.check(n, k)?;
    let dm = g.distances();
    let mut edges = Vec::new();
    let mut interior = Vec::new();
    let mut chain = Vec::with_capacity(k);
    for u in 0..n {
        for v in (u + 1)..n {
            let t = match dm.get(u, v) {
                Some(t) if t >= k - 1 && t <= d => t as u32,
                _ => continue,
            };
            let ends = (1u64 << u) | (1u64 << v);
            if k == 2 {
                edges.push(ends);
                continue;
            }
            interior.clear();
            interior.extend(
                (0..n).filter(|&w| {
                    w != u && w != v && dm.raw(u, w).saturating_add(dm.raw(w, v)) == t
                }),
            );
            interior.sort_by_key(|&w| dm.raw(u, w));
            chain.clear();
            chain.push(u);
            extend_chains(&dm, &interior, 0, k - 2, &mut chain, ends, &mut edges);
        }
    }
    Ok(Hypergraph::from_masks(n, k, edges))
}

/// Appends every way of extending `chain` by `left` interval vertices
/// (taken in increasing distance from the chain's start) along one geodesic.
fn extend_chains(
    dm: &DistanceMatrix,
    interior: &[usize],
    from: usize,
    left: usize,
    chain: &mut Vec<usize>,
    acc: u64,
    out: &mut Vec<u64>,
) {
    if left == 0 {
        out.push(acc);
        return;
    }
    let start = chain[0];
    let last = *chain.last().unwrap();
    let reach = dm.raw(start, last);
    for i in from..interior.len() {
        if interior.len() - i < left {
            break;
        }
        let w = interior[i];
        let dw = dm.raw(start, w);
        if dw > reach && dm.raw(last, w) == dw - reach {
            chain.push(w);
            extend_chains(dm, interior, i + 1, left - 1, chain, acc | (1 << w), out);
            chain.pop();
        }
    }
}

/// Every shortest path of length `1..=d`, as a vertex sequence, each undirected
/// path listed once (from its smaller endpoint). Intended as a test oracle.
pub fn enumerate_geodesics_up_to(g: &Graph, d: usize) -> Result<Vec<Vec<usize>>> {
    const LIMIT: usize = 16;
    if g.n() > LIMIT {
        return Err(KdError::TooLarge {
            what: "geodesic enumeration vertex count",
            size: g.n() as u128,
            limit: LIMIT as u128,
        });
    }
    let dm = g.distances();
    let mut out = Vec::new();
    for s in 0..g.n() {
        for t in (s + 1)..g.n() {
            if dm.get(s, t).is_some_and(|len| len <= d) {
                let mut path = vec![s];
                walk_geodesics(g, &dm, t, &mut path, &mut out);
            }
        }
    }
    Ok(out)
}

fn walk_geodesics(
    g: &Graph,
    dm: &DistanceMatrix,
    target: usize,
    path: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let cur = *path.last().unwrap();
    if cur == target {
        out.push(path.clone());
        return;
    }
    let remaining = dm.raw(cur, target);
    for &w in g.neighbors(cur) {
        if dm.raw(w, target) + 1 == remaining {
            path.push(w);
            walk_geodesics(g, dm, target, path, out);
            path.pop();
        }
    }
}
