use crate::graph::VertexSet;
use crate::hypergraph::Hypergraph;

/// Maximum independent set of `h`, found as the complement of a minimum
/// transversal.
///
/// Each node branches on the unhit edge with the fewest undecided vertices:
/// branch `i` excludes its `i`-th undecided vertex and keeps the earlier ones,
/// so the branches partition the search space. An edge with one undecided
/// vertex and no excluded one forces that vertex out. The bound packs
/// pairwise-disjoint residual edges, each of which costs one more exclusion.
pub(super) fn solve(h: &Hypergraph) -> (usize, VertexSet) {
    let n = h.n();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut search = Search {
        h,
        all,
        best: 0,
        best_set: 0,
    };
    search.run(0, 0);
    (search.best, VertexSet::from_mask(search.best_set))
}

struct Search<'a> {
    h: &'a Hypergraph,
    all: u64,
    best: usize,
    best_set: u64,
}

impl Search<'_> {
    /// `kept` vertices are in the set, `out` are excluded, the rest undecided.
    fn run(&mut self, mut kept: u64, mut out: u64) {
        let edges = self.h.edge_masks();
        // Unit propagation; `branch` ends up as the unhit edge with the
        // smallest undecided residual.
        let branch = loop {
            let undecided = self.all & !kept & !out;
            let mut forced = 0u64;
            let mut branch: Option<u64> = None;
            for &e in edges {
                if e & out != 0 {
                    continue;
                }
                let r = e & undecided;
                match r.count_ones() {
                    0 => return,
                    1 => forced |= r,
                    c => {
                        if branch.is_none_or(|b| c < b.count_ones()) {
                            branch = Some(r);
                        }
                    }
                }
            }
            if forced == 0 {
                break branch;
            }
            out |= forced;
        };
        let limit = self.all.count_ones() as usize - out.count_ones() as usize;
        if limit <= self.best {
            return;
        }
        let Some(branch) = branch else {
            self.best = limit;
            self.best_set = self.all & !out;
            return;
        };
        if limit - self.packing(kept, out) <= self.best {
            return;
        }
        let mut rest = branch;
        while rest != 0 {
            let v = rest.trailing_zeros();
            rest &= rest - 1;
            self.run(kept, out | (1 << v));
            kept |= 1 << v;
        }
    }

    /// Pairwise-disjoint undecided residuals of unhit edges, taking the
    /// two-vertex residuals first.
    fn packing(&self, kept: u64, out: u64) -> usize {
        let undecided = self.all & !kept & !out;
        let mut used = 0u64;
        let mut count = 0;
        for cap in [2, self.h.k() as u32] {
            for &e in self.h.edge_masks() {
                let r = e & undecided;
                if e & out == 0 && r.count_ones() <= cap && r & used == 0 {
                    used |= r;
                    count += 1;
                }
            }
        }
        count
    }
}
