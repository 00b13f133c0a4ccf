//! Named test graphs, a seeded random corpus and all small trees.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{KdError, Result};
use crate::graph::Graph;

/// Seed of the default random corpus.
pub const CORPUS_SEED: u64 = 0x6b64_696e_7630_0001;

/// Eight vertices: path 0-1-2-3-4 with a second route 1-5-6-7-3.
/// `chi^3_2` of its square is 3 while `chi^4_4` of the graph itself is 2.
pub fn fixture8() -> Graph {
    Graph::new(
        8,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (1, 5),
            (5, 6),
            (6, 7),
            (7, 3),
        ],
    )
    .expect("valid edge list")
}

/// `K_n` with the perfect matching `{2i, 2i+1}` removed.
pub fn complete_minus_perfect_matching(n: usize) -> Result<Graph> {
    if !n.is_multiple_of(2) {
        return Err(KdError::param(format!(
            "need an even vertex count, got {n}"
        )));
    }
    Ok(Graph::from_fn(n, |u, v| u / 2 != v / 2))
}

/// `count` connected random graphs on `min_n..=max_n` vertices. Each graph
/// draws an edge probability in `[0.2, 0.6)` and is resampled until connected.
pub fn random_connected_corpus(
    count: usize,
    min_n: usize,
    max_n: usize,
    seed: u64,
) -> Result<Vec<Graph>> {
    if min_n == 0 || min_n > max_n {
        return Err(KdError::param(format!(
            "need 1 <= min_n <= max_n, got {min_n}..{max_n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(min_n..=max_n);
        let p: f64 = rng.gen_range(0.2..0.6);
        loop {
            let g = Graph::from_fn(n, |_, _| rng.gen_bool(p));
            if g.is_connected() {
                out.push(g);
                break;
            }
        }
    }
    Ok(out)
}

/// The 50-graph corpus on 4 to 12 vertices used by the property suites.
pub fn default_corpus() -> Vec<Graph> {
    random_connected_corpus(50, 4, 12, CORPUS_SEED).expect("valid corpus parameters")
}

fn centers(t: &Graph) -> Vec<usize> {
    let n = t.n();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut deg: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in t.neighbors(v) {
                deg[w] -= 1;
                if deg[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer
}

fn encode(t: &Graph, v: usize, parent: Option<usize>) -> String {
    let mut kids: Vec<String> = t
        .neighbors(v)
        .iter()
        .filter(|&&w| Some(w) != parent)
        .map(|&w| encode(t, w, Some(v)))
        .collect();
    kids.sort_unstable();
    format!("({})", kids.concat())
}

/// Canonical string of a tree, equal for exactly the isomorphic trees.
pub fn tree_canonical_form(t: &Graph) -> String {
    centers(t)
        .into_iter()
        .map(|c| encode(t, c, None))
        .min()
        .unwrap_or_default()
}

/// One representative of every isomorphism class of trees on `1..=max_n`
/// vertices, grown by attaching leaves.
pub fn nonisomorphic_trees(max_n: usize) -> Vec<Graph> {
    if max_n == 0 {
        return Vec::new();
    }
    let mut layer = vec![Graph::empty(1)];
    let mut all = layer.clone();
    for n in 2..=max_n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for t in &layer {
            let mut edges: Vec<(usize, usize)> = t.edges().collect();
            for v in 0..t.n() {
                edges.push((v, n - 1));
                let grown = Graph::new(n, &edges).expect("valid tree");
                edges.pop();
                if seen.insert(tree_canonical_form(&grown)) {
                    next.push(grown);
                }
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_counts() {
        let trees = nonisomorphic_trees(10);
        let mut counts = [0usize; 11];
        for t in &trees {
            assert!(t.is_connected());
            assert_eq!(t.edge_count() + 1, t.n());
            counts[t.n()] += 1;
        }
        assert_eq!(&counts[1..], &[1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
        assert_eq!(trees.len(), 201);
    }

    #[test]
    fn canonical_form_ignores_labels() {
        let a = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (1, 4)]).unwrap();
        let b = Graph::new(5, &[(4, 3), (3, 2), (2, 1), (3, 0)]).unwrap();
        let c = Graph::new(5, &[(0, 1), (0, 2), (0, 3), (3, 4)]).unwrap();
        assert_eq!(tree_canonical_form(&a), tree_canonical_form(&b));
        assert_eq!(tree_canonical_form(&a), tree_canonical_form(&c));
        let path = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_ne!(tree_canonical_form(&a), tree_canonical_form(&path));
    }

    #[test]
    fn corpus_is_reproducible_and_connected() {
        let a = default_corpus();
        assert_eq!(a, default_corpus());
        assert_eq!(a.len(), 50);
        assert!(a
            .iter()
            .all(|g| g.is_connected() && (4..=12).contains(&g.n())));
        assert_ne!(
            a,
            random_connected_corpus(50, 4, 12, CORPUS_SEED + 1).unwrap()
        );
    }

    #[test]
    fn fixed_graphs() {
        let g = fixture8();
        assert_eq!((g.n(), g.edge_count()), (8, 8));
        let h = complete_minus_perfect_matching(6).unwrap();
        assert_eq!(h.edge_count(), 12);
        assert!(!h.is_adjacent(0, 1) && h.is_adjacent(1, 2));
        assert!(complete_minus_perfect_matching(5).is_err());
    }
}
