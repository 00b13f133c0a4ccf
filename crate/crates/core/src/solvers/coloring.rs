use crate::hypergraph::Hypergraph;

/// Smallest proper coloring of `h`, trying `c = lower, lower + 1, ...`.
///
/// Returns 0-based colors. Each feasibility test is an exhaustive backtrack in
/// a fixed vertex order where a vertex may open at most one new color, so a
/// failure at `c` proves `chi > c`.
pub(super) fn solve(h: &Hypergraph, lower: usize) -> (usize, Vec<usize>) {
    let n = h.n();
    if n == 0 {
        return (0, Vec::new());
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(h.degree(v)), v));
    let mut c = lower.max(1);
    loop {
        let mut search = Search {
            h,
            order: &order,
            classes: vec![0; c],
            color: vec![usize::MAX; n],
        };
        if search.run(0, 0) {
            return (c, search.color);
        }
        c += 1;
    }
}

struct Search<'a> {
    h: &'a Hypergraph,
    order: &'a [usize],
    classes: Vec<u64>,
    color: Vec<usize>,
}

impl Search<'_> {
    fn fits(&self, v: usize, class: usize) -> bool {
        let with = self.classes[class] | (1 << v);
        self.h.incident_masks(v).iter().all(|&e| e & !with != 0)
    }

    fn run(&mut self, pos: usize, used: usize) -> bool {
        if pos == self.order.len() {
            return true;
        }
        let v = self.order[pos];
        let limit = (used + 1).min(self.classes.len());
        for class in 0..limit {
            if self.fits(v, class) {
                self.classes[class] |= 1 << v;
                self.color[v] = class;
                if self.run(pos + 1, used.max(class + 1)) {
                    return true;
                }
                self.classes[class] &= !(1 << v);
            }
        }
        self.color[v] = usize::MAX;
        false
    }
}
