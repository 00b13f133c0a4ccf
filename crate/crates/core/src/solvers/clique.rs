use crate::graph::{Mask, VertexSet};
use crate::hypergraph::Hypergraph;

/// Maximum clique: a set all of whose k-subsets are edges.
///
/// Any set of fewer than `k` vertices qualifies vacuously, so the search only
/// has to filter extensions. A candidate `w` stays compatible with
/// `Q + v` when every `(k-2)`-subset of `Q` together with `v, w` is an edge.
pub(super) fn solve(h: &Hypergraph) -> (usize, VertexSet) {
    let n = h.n();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut search = Search {
        h,
        best: 0,
        best_set: 0,
    };
    search.run(0, all);
    (search.best, VertexSet::from_mask(search.best_set))
}

struct Search<'a> {
    h: &'a Hypergraph,
    best: usize,
    best_set: u64,
}

impl Search<'_> {
    fn run(&mut self, clique: u64, mut candidates: u64) {
        let size = clique.count_ones() as usize;
        if size > self.best {
            self.best = size;
            self.best_set = clique;
        }
        while candidates != 0 {
            if size + candidates.count_ones() as usize <= self.best {
                return;
            }
            let v = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            let next = Mask(candidates)
                .iter()
                .filter(|&w| self.compatible(clique, v, w))
                .fold(0u64, |m, w| m | (1 << w));
            self.run(clique | (1 << v), next);
        }
    }

    fn compatible(&self, clique: u64, v: usize, w: usize) -> bool {
        let k = self.h.k();
        let members: Vec<usize> = Mask(clique).iter().collect();
        if members.len() < k - 2 {
            return true;
        }
        let base = (1u64 << v) | (1u64 << w);
        every_subset(&members, k - 2, 0, base, &mut |m| self.h.has_mask(m))
    }
}

fn every_subset(
    members: &[usize],
    left: usize,
    from: usize,
    acc: u64,
    test: &mut impl FnMut(u64) -> bool,
) -> bool {
    if left == 0 {
        return test(acc);
    }
    (from..=members.len() - left)
        .all(|i| every_subset(members, left - 1, i + 1, acc | (1 << members[i]), test))
}
