//! Brute-force reference implementations that share no code with the library
//! beyond the `Graph` adjacency lists.

#![allow(dead_code)]

use kdinv::Graph;

pub const INF: usize = usize::MAX / 4;

/// Floyd-Warshall distances.
pub fn distances(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut d = vec![vec![INF; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for (u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for m in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][m] + d[m][j] < d[i][j] {
                    d[i][j] = d[i][m] + d[m][j];
                }
            }
        }
    }
    d
}

fn permutations(items: &mut Vec<usize>, i: usize, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
    if i == items.len() {
        return f(items);
    }
    for j in i..items.len() {
        items.swap(i, j);
        if permutations(items, i + 1, f) {
            items.swap(i, j);
            return true;
        }
        items.swap(i, j);
    }
    false
}

/// Some ordering of `set` walks a shortest path of length at most `d`.
pub fn on_short_geodesic(dist: &[Vec<usize>], set: &[usize], d: usize) -> bool {
    let mut items = set.to_vec();
    permutations(&mut items, 0, &mut |p| {
        let walk: usize = p.windows(2).map(|w| dist[w[0]][w[1]]).sum();
        let ends = dist[p[0]][p[p.len() - 1]];
        walk == ends && ends <= d
    })
}

fn members(mask: u64) -> Vec<usize> {
    (0..64).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Edge masks of the geodesic hypergraph by testing every k-subset.
pub fn hyperedges(g: &Graph, k: usize, d: usize) -> Vec<u64> {
    let n = g.n();
    let dist = distances(g);
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << n) {
        if mask.count_ones() as usize == k && on_short_geodesic(&dist, &members(mask), d) {
            out.push(mask);
        }
    }
    out
}

pub fn independent(edges: &[u64], set: u64) -> bool {
    edges.iter().all(|&e| e & set != e)
}

pub fn alpha(n: usize, edges: &[u64]) -> usize {
    (0u64..1 << n)
        .filter(|&s| independent(edges, s))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Fewest independent sets covering all vertices, by subset DP.
pub fn chi(n: usize, edges: &[u64]) -> usize {
    let full = (1u64 << n) - 1;
    let indep: Vec<bool> = (0..=full).map(|s| independent(edges, s)).collect();
    let mut best = vec![usize::MAX; (full + 1) as usize];
    best[0] = 0;
    for s in 1..=full {
        let low = s & s.wrapping_neg();
        let rest = s & !low;
        let mut sub = rest;
        loop {
            let class = sub | low;
            if indep[class as usize] {
                let prev = best[(s & !class) as usize];
                if prev != usize::MAX && prev + 1 < best[s as usize] {
                    best[s as usize] = prev + 1;
                }
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    best[full as usize]
}

pub fn is_clique(edges: &[u64], k: usize, set: u64) -> bool {
    let m = members(set);
    let mut ok = true;
    for_k_subsets(&m, k, &mut |sub| ok &= edges.contains(&sub));
    ok
}

fn for_k_subsets(items: &[usize], k: usize, f: &mut impl FnMut(u64)) {
    fn rec(items: &[usize], k: usize, acc: u64, f: &mut impl FnMut(u64)) {
        if k == 0 {
            f(acc);
        } else if items.len() >= k {
            rec(&items[1..], k - 1, acc | 1 << items[0], f);
            rec(&items[1..], k, acc, f);
        }
    }
    rec(items, k, 0, f);
}

pub fn omega(n: usize, k: usize, edges: &[u64]) -> usize {
    (0u64..1 << n)
        .filter(|&s| is_clique(edges, k, s))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

pub fn dominating(n: usize, edges: &[u64], set: u64) -> bool {
    (0..n).all(|v| {
        set >> v & 1 == 1
            || edges
                .iter()
                .any(|&e| e >> v & 1 == 1 && (e & !(1 << v)) & !set == 0)
    })
}

pub fn gamma(n: usize, edges: &[u64]) -> usize {
    (0u64..1 << n)
        .filter(|&s| dominating(n, edges, s))
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap_or(0)
}

/// All four invariants by exhaustive search.
pub fn invariants(g: &Graph, k: usize, d: usize) -> (usize, usize, usize, usize) {
    let e = hyperedges(g, k, d);
    let n = g.n();
    (alpha(n, &e), chi(n, &e), omega(n, k, &e), gamma(n, &e))
}

/// Classical chromatic and clique numbers of a graph, for `n <= 10`.
pub fn classical_chi_omega(g: &Graph) -> (usize, usize) {
    let edges: Vec<u64> = g.edges().map(|(u, v)| 1 << u | 1 << v).collect();
    (chi(g.n(), &edges), omega(g.n(), 2, &edges))
}

/// Every graph on `n` labelled vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let m = pairs.len();
    (0u64..1 << m).map(move |bits| {
        let edges: Vec<(usize, usize)> = (0..m)
            .filter(|&i| bits >> i & 1 == 1)
            .map(|i| pairs[i])
            .collect();
        Graph::new(n, &edges).unwrap()
    })
}

pub fn edge_masks(h: &kdinv::Hypergraph) -> Vec<u64> {
    let mut v: Vec<u64> = h
        .edges()
        .map(|e| e.iter().fold(0u64, |m, &x| m | 1 << x))
        .collect();
    v.sort_unstable();
    v
}
