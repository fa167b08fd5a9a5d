//! Depth-first branch and bound for capacity-constrained vertex sets:
//! maximise `|B|` subject to `|nb(v) ∩ B| <= cap` for every vertex, where `nb`
//! is either the closed neighbourhood (`L_k`, `ρ = L_1`) or the open one (`ρₒ`).

use super::branching_order;
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug)]
pub(crate) struct Capacity {
    closed: bool,
    cap: usize,
}

impl Capacity {
    pub(crate) fn closed(cap: usize) -> Self {
        Capacity { closed: true, cap }
    }

    pub(crate) fn open(cap: usize) -> Self {
        Capacity { closed: false, cap }
    }
}

struct Search<'a> {
    g: &'a Graph,
    kind: Capacity,
    order: Vec<usize>,
    counts: Vec<usize>,
    best: VertexSet,
    target: usize,
}

impl Search<'_> {
    #[inline]
    fn nb(&self, v: usize) -> VertexSet {
        if self.kind.closed {
            self.g.closed_nbr(v)
        } else {
            self.g.nbr(v)
        }
    }

    /// Vertices whose addition no longer fits once `full` is saturated.
    fn blocked_by(&self, full: VertexSet) -> VertexSet {
        full.iter()
            .fold(VertexSet::EMPTY, |acc, v| acc.union(self.nb(v)))
    }

    /// Adds `u`; returns the vertices that became saturated.
    fn include(&mut self, u: usize) -> VertexSet {
        let mut newly_full = VertexSet::EMPTY;
        for v in self.nb(u) {
            self.counts[v] += 1;
            if self.counts[v] == self.kind.cap {
                newly_full.insert(v);
            }
        }
        newly_full
    }

    fn exclude(&mut self, u: usize) {
        for v in self.nb(u) {
            self.counts[v] -= 1;
        }
    }

    /// Cover the candidates by disjoint groups `nb(v) ∩ cand`; group `v`
    /// contributes at most its residual capacity.
    fn upper_bound(&self, cand: VertexSet) -> usize {
        let mut rest = cand;
        let mut bound = 0;
        while let Some(u) = rest.first() {
            let hub = self
                .nb(u)
                .iter()
                .max_by_key(|&v| (self.nb(v).intersection(rest).len(), std::cmp::Reverse(v)));
            match hub {
                Some(v) => {
                    let group = self.nb(v).intersection(rest);
                    bound += group.len().min(self.kind.cap - self.counts[v]);
                    rest = rest.difference(group);
                }
                None => {
                    // isolated vertex under open neighbourhoods: unconstrained
                    bound += 1;
                    rest.remove(u);
                }
            }
        }
        bound
    }

    fn dfs(&mut self, mut pos: usize, chosen: VertexSet, cand: VertexSet) {
        if self.best.len() >= self.target {
            return;
        }
        if chosen.len() > self.best.len() {
            self.best = chosen;
        }
        if cand.is_empty() || chosen.len() + self.upper_bound(cand) <= self.best.len() {
            return;
        }
        while !cand.contains(self.order[pos]) {
            pos += 1;
        }
        let u = self.order[pos];

        let newly_full = self.include(u);
        let blocked = self.blocked_by(newly_full);
        self.dfs(pos + 1, chosen.with(u), cand.without(u).difference(blocked));
        self.exclude(u);

        self.dfs(pos + 1, chosen, cand.without(u));
    }
}

/// Largest feasible set containing `forced_in` and avoiding `forced_out`,
/// stopping early once a set of size `target` is found. `None` if `forced_in`
/// itself is infeasible.
fn search(
    g: &Graph,
    kind: Capacity,
    forced_in: VertexSet,
    forced_out: VertexSet,
    target: usize,
) -> Option<VertexSet> {
    let mut s = Search {
        g,
        kind,
        order: branching_order(g),
        counts: vec![0; g.n()],
        best: VertexSet::EMPTY,
        target,
    };
    let mut full = VertexSet::EMPTY;
    for u in forced_in {
        if !s.nb(u).intersection(full).is_empty() {
            return None;
        }
        full = full.union(s.include(u));
    }
    let cand = g
        .vertices()
        .difference(forced_in)
        .difference(forced_out)
        .difference(s.blocked_by(full));

    // Greedy seed in branching order.
    let mut seed = forced_in;
    let mut seed_full = full;
    let mut counts = s.counts.clone();
    for &u in &s.order {
        if cand.contains(u) && s.nb(u).intersection(seed_full).is_empty() {
            seed.insert(u);
            for v in s.nb(u) {
                counts[v] += 1;
                if counts[v] == kind.cap {
                    seed_full.insert(v);
                }
            }
        }
    }
    s.best = seed;
    s.dfs(0, forced_in, cand);
    Some(s.best)
}

/// Maximum feasible set; ties broken towards the lexicographically smallest.
pub(crate) fn maximum(g: &Graph, kind: Capacity) -> VertexSet {
    let n = g.n();
    let optimum = search(g, kind, VertexSet::EMPTY, VertexSet::EMPTY, n + 1)
        .expect("empty forced set is feasible");
    let opt = optimum.len();

    // Decide vertices 0, 1, ... in turn, keeping each one whenever an optimum
    // containing the decisions so far still exists.
    let mut known = optimum;
    let mut forced_in = VertexSet::EMPTY;
    let mut forced_out = VertexSet::EMPTY;
    for v in 0..n {
        if known.contains(v) {
            forced_in.insert(v);
            continue;
        }
        match search(g, kind, forced_in.with(v), forced_out, opt) {
            Some(s) if s.len() >= opt => {
                known = s;
                forced_in.insert(v);
            }
            _ => forced_out.insert(v),
        }
    }
    debug_assert_eq!(forced_in.len(), opt);
    forced_in
}
