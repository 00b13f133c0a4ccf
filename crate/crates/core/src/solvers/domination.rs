use std::collections::HashSet;

use crate::graph::VertexSet;
use crate::hypergraph::Hypergraph;

/// Minimum dominating set: every vertex outside `D` lies in an edge whose
/// other members all belong to `D`.
///
/// Branches on the lowest-index undominated vertex `v`: either `v` joins `D`
/// or, for some edge `e` through `v`, all of `e - v` does. A vertex with no
/// incident edge therefore always ends up in `D`.
pub(super) fn solve(h: &Hypergraph) -> (usize, VertexSet) {
    let n = h.n();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut search = Search {
        h,
        best: n,
        best_set: all,
        seen: HashSet::new(),
    };
    search.run(0);
    (search.best, VertexSet::from_mask(search.best_set))
}

struct Search<'a> {
    h: &'a Hypergraph,
    best: usize,
    best_set: u64,
    seen: HashSet<u64>,
}

impl Search<'_> {
    fn dominated(&self, set: u64, v: usize) -> bool {
        set & (1 << v) != 0
            || self
                .h
                .incident_masks(v)
                .iter()
                .any(|&e| e & !(1u64 << v) & !set == 0)
    }

    fn run(&mut self, set: u64) {
        let size = set.count_ones() as usize;
        if size >= self.best || !self.seen.insert(set) {
            return;
        }
        let Some(v) = (0..self.h.n()).find(|&v| !self.dominated(set, v)) else {
            self.best = size;
            self.best_set = set;
            return;
        };
        if size + 1 >= self.best {
            return;
        }
        let mut options: Vec<u64> = self
            .h
            .incident_masks(v)
            .iter()
            .map(|&e| e & !(1u64 << v) & !set)
            .collect();
        options.push(1 << v);
        options.sort_by_key(|&m| (m.count_ones(), m));
        options.dedup();
        for add in options {
            self.run(set | add);
        }
    }
}
