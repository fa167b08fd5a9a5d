//! Minimum dominating sets by branching on the undominated vertex with the
//! fewest remaining candidate dominators.

use super::branching_order;
use crate::graph::{Graph, VertexSet};

struct Search<'a> {
    g: &'a Graph,
    best: Option<VertexSet>,
    target: usize,
}

impl Search<'_> {
    fn done(&self) -> bool {
        self.best.is_some_and(|b| b.len() <= self.target)
    }

    fn dfs(&mut self, chosen: VertexSet, dominated: VertexSet, excluded: VertexSet) {
        if self.done() {
            return;
        }
        let all = self.g.vertices();
        let undominated = all.difference(dominated);
        if undominated.is_empty() {
            if self.best.map_or(true, |b| chosen.len() < b.len()) {
                self.best = Some(chosen);
            }
            return;
        }
        let allowed = all.difference(excluded).difference(chosen);
        let max_cover = allowed
            .iter()
            .map(|w| self.g.closed_nbr(w).intersection(undominated).len())
            .max()
            .unwrap_or(0);
        if max_cover == 0 {
            return;
        }
        let lower = chosen.len() + undominated.len().div_ceil(max_cover);
        if self.best.is_some_and(|b| lower >= b.len()) {
            return;
        }

        let (_, u) = undominated
            .iter()
            .map(|u| (self.g.closed_nbr(u).intersection(allowed).len(), u))
            .min()
            .expect("undominated is non-empty");
        let mut options: Vec<usize> = self.g.closed_nbr(u).intersection(allowed).to_vec();
        options.sort_by_key(|&w| {
            (
                std::cmp::Reverse(self.g.closed_nbr(w).intersection(undominated).len()),
                w,
            )
        });
        let mut excluded = excluded;
        for w in options {
            self.dfs(
                chosen.with(w),
                dominated.union(self.g.closed_nbr(w)),
                excluded,
            );
            excluded.insert(w);
        }
    }
}

fn greedy(g: &Graph, forced_in: VertexSet, forced_out: VertexSet) -> Option<VertexSet> {
    let order = branching_order(g);
    let mut chosen = forced_in;
    let mut dominated = forced_in
        .iter()
        .fold(VertexSet::EMPTY, |acc, v| acc.union(g.closed_nbr(v)));
    while dominated != g.vertices() {
        let undominated = g.vertices().difference(dominated);
        let pick = order
            .iter()
            .copied()
            .filter(|&w| !forced_out.contains(w) && !chosen.contains(w))
            .max_by_key(|&w| {
                (
                    g.closed_nbr(w).intersection(undominated).len(),
                    std::cmp::Reverse(w),
                )
            })?;
        if g.closed_nbr(pick).intersection(undominated).is_empty() {
            return None;
        }
        chosen.insert(pick);
        dominated = dominated.union(g.closed_nbr(pick));
    }
    Some(chosen)
}

fn search(
    g: &Graph,
    forced_in: VertexSet,
    forced_out: VertexSet,
    target: usize,
) -> Option<VertexSet> {
    let mut s = Search {
        g,
        best: greedy(g, forced_in, forced_out),
        target,
    };
    let dominated = forced_in
        .iter()
        .fold(VertexSet::EMPTY, |acc, v| acc.union(g.closed_nbr(v)));
    s.dfs(forced_in, dominated, forced_out);
    s.best
}

/// Minimum dominating set; ties broken towards the lexicographically smallest.
pub(crate) fn minimum(g: &Graph) -> VertexSet {
    let n = g.n();
    let optimum =
        search(g, VertexSet::EMPTY, VertexSet::EMPTY, 0).expect("the full vertex set dominates");
    let opt = optimum.len();

    let mut known = optimum;
    let mut forced_in = VertexSet::EMPTY;
    let mut forced_out = VertexSet::EMPTY;
    for v in 0..n {
        if known.contains(v) {
            forced_in.insert(v);
            continue;
        }
        match search(g, forced_in.with(v), forced_out, opt) {
            Some(s) if s.len() <= opt => {
                known = s;
                forced_in.insert(v);
            }
            _ => forced_out.insert(v),
        }
    }
    debug_assert_eq!(forced_in.len(), opt);
    forced_in
}
