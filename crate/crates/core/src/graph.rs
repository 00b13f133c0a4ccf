//! Finite simple undirected graphs, geodesic distances, powers and subgraphs.
//!
//! Vertices are always `0..n`. Path and cycle constructors follow the same
//! 0-based labelling; rendering with the 1-based path convention is left to
//! callers (see [`VertexSet::labels_one_based`]).

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{KdError, Result};

/// A finite simple undirected graph on the vertices `0..n`.
///
/// Adjacency lists are kept sorted and duplicate-free, so two graphs compare
/// equal exactly when they have the same vertex count and edge set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse; out-of-range endpoints and self-loops are rejected
    /// with the index of the offending pair.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for (index, &(u, v)) in edges.iter().enumerate() {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(KdError::VertexOutOfRange { vertex, n, index });
                }
            }
            if u == v {
                return Err(KdError::SelfLoop { vertex: u, index });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj })
    }

    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an adjacency predicate over unordered pairs `u < v`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut adj = vec![Vec::new(); n];
        for u in 0..n {
            for v in (u + 1)..n {
                if adjacent(u, v) {
                    adj[u].push(v);
                    adj[v].push(u);
                }
            }
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { adj }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// Maximum vertex degree; 0 for the empty graph.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return true;
        }
        bfs_from(self, 0).iter().all(|&d| d != INFINITY)
    }

    /// Breadth-first all-pairs geodesic distances.
    pub fn distances(&self) -> DistanceMatrix {
        let n = self.n();
        let mut dist = Vec::with_capacity(n * n);
        for s in 0..n {
            dist.extend(bfs_from(self, s));
        }
        DistanceMatrix { n, dist }
    }

    /// The `ell`-th power: same vertices, `u ~ v` iff `1 <= dist(u, v) <= ell`.
    pub fn power(&self, ell: usize) -> Result<Graph> {
        if ell == 0 {
            return Err(KdError::param("graph power exponent must be at least 1"));
        }
        if ell == 1 {
            return Ok(self.clone());
        }
        let dm = self.distances();
        Ok(Graph::from_fn(self.n(), |u, v| {
            dm.get(u, v).is_some_and(|t| t <= ell)
        }))
    }

    /// Subgraph induced by `set`, together with the map from new indices back
    /// to the vertices of `self`. Vertices keep their relative order.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        set.check_range(self.n())?;
        let map: Vec<usize> = set.iter().collect();
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let adj = map
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter_map(|&w| (index[w] != usize::MAX).then_some(index[w]))
                    .collect()
            })
            .collect();
        Ok((Graph { adj }, map))
    }

    /// Largest finite distance, or `None` when the graph is disconnected or empty.
    pub fn diameter(&self) -> Option<usize> {
        if self.n() == 0 || !self.is_connected() {
            return None;
        }
        let dm = self.distances();
        (0..self.n())
            .flat_map(|u| (0..self.n()).map(move |v| (u, v)))
            .filter_map(|(u, v)| dm.get(u, v))
            .max()
    }
}

const INFINITY: u32 = u32::MAX;

fn bfs_from(g: &Graph, s: usize) -> Vec<u32> {
    let mut dist = vec![INFINITY; g.n()];
    let mut queue = VecDeque::new();
    dist[s] = 0;
    queue.push_back(s);
    while let Some(u) = queue.pop_front() {
        let du = dist[u];
        for &w in g.neighbors(u) {
            if dist[w] == INFINITY {
                dist[w] = du + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// The path `P_n` on `0..n` with edges `{i, i+1}`.
pub fn path_graph(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(KdError::param("path needs at least one vertex"));
    }
    Ok(Graph::from_fn(n, |u, v| v == u + 1))
}

/// The cycle `C_n` on `0..n` with edges `{i, (i+1) mod n}`.
pub fn cycle_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(KdError::param(format!(
            "cycle needs at least 3 vertices, got {n}"
        )));
    }
    Ok(Graph::from_fn(n, |u, v| {
        v == u + 1 || (u == 0 && v == n - 1)
    }))
}

pub fn complete_graph(n: usize) -> Graph {
    Graph::from_fn(n, |_, _| true)
}

/// The star `K_{1,m}` with center 0 and leaves `1..=m`.
pub fn star_graph(m: usize) -> Graph {
    Graph::from_fn(m + 1, |u, _| u == 0)
}

/// All-pairs geodesic distances with a sentinel for unreachable pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Distance between `u` and `v`, or `None` when they lie in different components.
    #[inline]
    pub fn get(&self, u: usize, v: usize) -> Option<usize> {
        let t = self.dist[u * self.n + v];
        (t != INFINITY).then_some(t as usize)
    }

    #[inline]
    pub(crate) fn raw(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }
}

/// Checks that `phi` maps `g` into `host` preserving every pairwise distance,
/// unreachable pairs included.
pub fn is_isometric_embedding(g: &Graph, host: &Graph, phi: &[usize]) -> Result<bool> {
    if phi.len() != g.n() {
        return Err(KdError::param(format!(
            "vertex map has {} entries for a graph on {} vertices",
            phi.len(),
            g.n()
        )));
    }
    if let Some((index, &vertex)) = phi.iter().enumerate().find(|(_, &v)| v >= host.n()) {
        return Err(KdError::VertexOutOfRange {
            vertex,
            n: host.n(),
            index,
        });
    }
    let dg = g.distances();
    let dh = host.distances();
    Ok((0..g.n()).all(|u| (u..g.n()).all(|v| dg.raw(u, v) == dh.raw(phi[u], phi[v]))))
}

/// Validated `k`, `d` and power exponent `ell`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    pub k: usize,
    pub d: usize,
    pub ell: usize,
}

impl Params {
    pub fn new(k: usize, d: usize) -> Result<Self> {
        Self::with_power(k, d, 1)
    }

    pub fn with_power(k: usize, d: usize, ell: usize) -> Result<Self> {
        if k < 2 {
            return Err(KdError::param(format!("k must be at least 2, got {k}")));
        }
        if d < 1 {
            return Err(KdError::param("d must be at least 1"));
        }
        if ell < 1 {
            return Err(KdError::param("power exponent must be at least 1"));
        }
        Ok(Params { k, d, ell })
    }

    /// `k > d + 1`: no geodesic of length at most `d` carries `k` vertices.
    pub fn is_trivial(&self) -> bool {
        self.k > self.d + 1
    }
}

/// A sorted, duplicate-free set of vertex ids.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        VertexSet(members)
    }

    pub fn full(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    pub fn from_mask(mask: u64) -> Self {
        VertexSet(Mask(mask).iter().collect())
    }

    /// Bitmask form; every member must be below 64.
    pub fn to_mask(&self) -> u64 {
        self.0.iter().fold(0, |m, &v| m | (1u64 << v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// Members shifted to 1-based labels, the convention used for paths.
    pub fn labels_one_based(&self) -> Vec<usize> {
        self.0.iter().map(|v| v + 1).collect()
    }

    pub(crate) fn check_range(&self, n: usize) -> Result<()> {
        match self.0.last() {
            Some(&v) if v >= n => Err(KdError::VertexOutOfRange {
                vertex: v,
                n,
                index: self.0.len() - 1,
            }),
            _ => Ok(()),
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter.into_iter().collect())
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Vertex subset of a graph with at most 64 vertices, as a bitmask.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct Mask(pub u64);

impl Mask {
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut m = self.0;
        std::iter::from_fn(move || {
            if m == 0 {
                None
            } else {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                Some(v)
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_rejects_bad_edges() {
        assert_eq!(
            Graph::new(3, &[(0, 3)]),
            Err(KdError::VertexOutOfRange {
                vertex: 3,
                n: 3,
                index: 0
            })
        );
        assert_eq!(
            Graph::new(3, &[(0, 1), (2, 2)]),
            Err(KdError::SelfLoop {
                vertex: 2,
                index: 1
            })
        );
    }

    #[test]
    fn build_collapses_duplicates() {
        let g = Graph::new(3, &[(0, 1), (1, 2), (1, 0), (2, 1)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g, path_graph(3).unwrap());
        let iso = Graph::new(2, &[]).unwrap();
        assert_eq!(iso.edge_count(), 0);
        assert_eq!(iso.distances().get(0, 1), None);
    }

    #[test]
    fn families() {
        assert!(path_graph(0).is_err());
        assert_eq!(path_graph(1).unwrap().edge_count(), 0);
        let p4 = path_graph(4).unwrap();
        assert_eq!(p4.edge_count(), 3);
        assert_eq!(p4.distances().get(0, 3), Some(3));
        assert_eq!(path_graph(23).unwrap().n(), 23);

        assert!(cycle_graph(2).is_err());
        assert_eq!(cycle_graph(3).unwrap(), complete_graph(3));
        let c5 = cycle_graph(5).unwrap().distances();
        assert_eq!(c5.get(0, 2), Some(2));
        assert_eq!(c5.get(0, 3), Some(2));
        assert_eq!(cycle_graph(16).unwrap().distances().get(0, 9), Some(7));
    }

    #[test]
    fn powers() {
        let c5 = cycle_graph(5).unwrap();
        assert_eq!(c5.power(2).unwrap(), complete_graph(5));
        assert_eq!(path_graph(3).unwrap().power(2).unwrap(), complete_graph(3));
        assert_eq!(c5.power(1).unwrap(), c5);
        assert!(c5.power(0).is_err());
    }

    #[test]
    fn induced_subgraphs() {
        let c5 = cycle_graph(5).unwrap();
        let (h, map) = c5
            .induced_subgraph(&VertexSet::new(vec![0, 1, 2, 3]))
            .unwrap();
        assert_eq!(h, path_graph(4).unwrap());
        assert_eq!(map, vec![0, 1, 2, 3]);

        let c10 = cycle_graph(10).unwrap();
        let (h, _) = c10
            .induced_subgraph(&VertexSet::new(vec![0, 1, 2, 5, 6, 7]))
            .unwrap();
        assert_eq!(h, Graph::new(6, &[(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap());
        assert!(!h.is_connected());

        let (h, _) = c10.induced_subgraph(&VertexSet::full(10)).unwrap();
        assert_eq!(h, c10);
        assert!(c10.induced_subgraph(&VertexSet::new(vec![10])).is_err());
    }

    #[test]
    fn isometric_embeddings() {
        let c6 = cycle_graph(6).unwrap();
        assert!(is_isometric_embedding(&c6, &c6, &[0, 1, 2, 3, 4, 5]).unwrap());
        let p3 = path_graph(3).unwrap();
        assert!(is_isometric_embedding(&p3, &c6, &[2, 3, 4]).unwrap());
        let p4 = path_graph(4).unwrap();
        let c4 = cycle_graph(4).unwrap();
        assert!(!is_isometric_embedding(&p4, &c4, &[0, 1, 2, 3]).unwrap());
        assert!(is_isometric_embedding(&p3, &c4, &[0, 1, 4]).is_err());
        assert!(is_isometric_embedding(&p3, &c4, &[0, 1]).is_err());
    }

    #[test]
    fn max_degrees() {
        assert_eq!(star_graph(5).max_degree(), 5);
        assert_eq!(cycle_graph(9).unwrap().max_degree(), 2);
        assert_eq!(path_graph(1).unwrap().max_degree(), 0);
    }

    #[test]
    fn params_validation() {
        assert!(Params::new(1, 3).is_err());
        assert!(Params::new(2, 0).is_err());
        assert!(Params::with_power(2, 1, 0).is_err());
        assert!(Params::new(5, 2).unwrap().is_trivial());
        assert!(!Params::new(3, 2).unwrap().is_trivial());
    }

    #[test]
    fn vertex_set_normalizes() {
        let s = VertexSet::new(vec![5, 1, 3, 1]);
        assert_eq!(s.as_slice(), &[1, 3, 5]);
        assert_eq!(VertexSet::from_mask(s.to_mask()), s);
        assert_eq!(s.labels_one_based(), vec![2, 4, 6]);
        assert_eq!(s.to_string(), "{1,3,5}");
    }
}
