//! Immutable simple graphs on at most 64 vertices, stored as one `u64`
//! adjacency row per vertex.
//!
//! Every solver in this crate reduces to set intersection and popcount over
//! these rows, so [`VertexSet`] is a bitmask as well.

pub(crate) mod canon;
mod clique;
pub(crate) mod shape;

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use canon::{canonical_code, canonical_code_with_cap, CANONICAL_CAP};
pub use clique::{clique_number, maximum_cliques};
pub use shape::{recognize_shape, Shape};

/// Largest vertex count representable with one-word adjacency rows.
pub const MAX_VERTICES: usize = 64;

#[inline]
fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline]
fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        bit(n) - 1
    }
}

/// A set of vertex indices.
///
/// Ordering is lexicographic on the sorted member lists, so `{0, 3} < {1, 2}`
/// and `{0} < {0, 1}`. Solvers use this order to pick deterministic witnesses.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// All vertices `0..n`.
    pub fn full(n: usize) -> Self {
        VertexSet(low_mask(n))
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(bit(v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 & bit(v) != 0
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= bit(v);
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !bit(v);
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | bit(v))
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !bit(v))
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let members = Vec::<usize>::deserialize(d)?;
        if let Some(&v) = members.iter().find(|&&v| v >= MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!("vertex {v} out of range")));
        }
        Ok(members.into_iter().collect())
    }
}

/// Iterator over the members of a [`VertexSet`] in increasing order.
#[derive(Clone)]
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

/// Edge counts of the cut induced by a vertex set `B`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgePartition {
    /// Edges with both ends in `B`.
    pub inside: usize,
    /// Edges between `B` and its complement.
    pub cross: usize,
    /// Edges with both ends outside `B`.
    pub outside: usize,
}

impl EdgePartition {
    pub fn total(&self) -> usize {
        self.inside + self.cross + self.outside
    }
}

/// Graph diameter; disconnected graphs have an infinite diameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl Diameter {
    pub fn finite(self) -> Option<usize> {
        match self {
            Diameter::Finite(d) => Some(d),
            Diameter::Infinite => None,
        }
    }
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => write!(f, "inf"),
        }
    }
}

/// An immutable simple undirected graph with vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from adjacency bit rows, validating symmetry and loops.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        let mask = low_mask(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                return Err(Error::InvalidVertexSet { n });
            }
            if row & bit(v) != 0 {
                return Err(Error::SelfLoop(v));
            }
            for u in VertexSet(row) {
                if rows[u] & bit(v) == 0 {
                    return Err(Error::Asymmetric(v, u));
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
    }

    /// Copy of the graph with one extra vertex adjacent to `neighbors`.
    pub(crate) fn with_new_vertex(&self, neighbors: VertexSet) -> Result<Graph> {
        let mut rows = self.adj.clone();
        rows.push(0);
        let mut g = Graph::empty(self.n + 1)?;
        g.adj = rows;
        for u in neighbors {
            g.add_edge(u, self.n);
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParams(format!(
                "cycle needs at least 3 vertices, got {n}"
            )));
        }
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        Ok(g)
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        let mut g = Graph::empty(a + b)?;
        for u in 0..a {
            for v in a..a + b {
                g.add_edge(u, v);
            }
        }
        Ok(g)
    }

    /// The star `K_{1,leaves}` centred at vertex 0.
    pub fn star(leaves: usize) -> Result<Self> {
        Graph::complete_bipartite(1, leaves)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            VertexSet(self.adj[u] & !low_mask(u + 1))
                .iter()
                .map(move |v| (u, v))
        })
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    pub fn check_set(&self, s: VertexSet) -> Result<()> {
        if s.is_subset(self.vertices()) {
            Ok(())
        } else {
            Err(Error::InvalidVertexSet { n: self.n })
        }
    }

    /// Open neighbourhood `N(v)`.
    pub fn neighbors(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(VertexSet(self.adj[v]))
    }

    /// Closed neighbourhood `N[v]`.
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(VertexSet(self.adj[v] | bit(v)))
    }

    // Unchecked variants for the hot loops; callers guarantee `v < n`.
    #[inline]
    pub(crate) fn nbr(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub(crate) fn closed_nbr(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v] | bit(v))
    }

    /// Union of the open neighbourhoods of `s`.
    pub(crate) fn nbr_of_set(&self, s: VertexSet) -> VertexSet {
        s.iter()
            .fold(VertexSet::EMPTY, |acc, v| acc.union(self.nbr(v)))
    }

    pub fn complement(&self) -> Graph {
        let mask = low_mask(self.n);
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(v, &row)| !row & mask & !bit(v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Breadth-first distances from `source`; `None` marks unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Result<Vec<Option<usize>>> {
        self.check_vertex(source)?;
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut frontier = VertexSet::singleton(source);
        let mut seen = frontier;
        let mut d = 0;
        while !frontier.is_empty() {
            d += 1;
            let next = self.nbr_of_set(frontier).difference(seen);
            for v in next {
                dist[v] = Some(d);
            }
            seen = seen.union(next);
            frontier = next;
        }
        Ok(dist)
    }

    /// Largest shortest-path distance over all vertex pairs.
    pub fn diameter(&self) -> Result<Diameter> {
        if self.n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut best = 0;
        for s in 0..self.n {
            for d in self.distances_from(s)? {
                match d {
                    Some(d) => best = best.max(d),
                    None => return Ok(Diameter::Infinite),
                }
            }
        }
        Ok(Diameter::Finite(best))
    }

    /// A shortest path realising the diameter between the lexicographically
    /// smallest pair of vertices at maximum distance.
    ///
    /// Each step back from the far end takes the smallest-index predecessor.
    pub fn diametral_path(&self) -> Result<Vec<usize>> {
        let diam = self.diameter()?.finite().ok_or(Error::Disconnected)?;
        for a in 0..self.n {
            let dist = self.distances_from(a)?;
            if let Some(b) = (a..self.n).find(|&b| dist[b] == Some(diam)) {
                let mut path = vec![b];
                let mut cur = b;
                for d in (0..diam).rev() {
                    cur = self
                        .nbr(cur)
                        .iter()
                        .find(|&u| dist[u] == Some(d))
                        .ok_or_else(|| Error::Internal("broken BFS layer".into()))?;
                    path.push(cur);
                }
                path.reverse();
                return Ok(path);
            }
        }
        Err(Error::Internal("no pair realises the diameter".into()))
    }

    /// `(Δ, δ)`.
    pub fn degree_extremes(&self) -> Result<(usize, usize)> {
        if self.n == 0 {
            return Err(Error::EmptyGraph);
        }
        let degs = (0..self.n).map(|v| self.degree(v));
        let max = degs.clone().max().unwrap_or(0);
        let min = degs.min().unwrap_or(0);
        Ok((max, min))
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<_> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn isolated_vertex(&self) -> Option<usize> {
        (0..self.n).find(|&v| self.adj[v] == 0)
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges().all(|(u, v)| self.adj[u] & self.adj[v] == 0)
    }

    /// True iff every vertex of `G[s]` has degree at most one inside `s`.
    pub fn is_two_independent(&self, s: VertexSet) -> Result<bool> {
        self.check_set(s)?;
        Ok(s.iter().all(|v| self.nbr(v).intersection(s).len() <= 1))
    }

    /// Subgraph induced by `s`, plus the map from new indices to old ones.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_set(s)?;
        let map = s.to_vec();
        let mut g = Graph::empty(map.len())?;
        for (i, &u) in map.iter().enumerate() {
            for (j, &v) in map.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        Ok((g, map))
    }

    pub fn is_connected(&self) -> Result<bool> {
        if self.n == 0 {
            return Err(Error::EmptyGraph);
        }
        Ok(self.component_of(0) == self.vertices())
    }

    pub(crate) fn component_of(&self, v: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(v);
        let mut frontier = seen;
        while !frontier.is_empty() {
            frontier = self.nbr_of_set(frontier).difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    /// Splits the edge set against `B` (inside, across, outside).
    pub fn edge_partition(&self, b: VertexSet) -> Result<EdgePartition> {
        self.check_set(b)?;
        let mut inside2 = 0;
        let mut cross = 0;
        let mut outside2 = 0;
        let rest = self.vertices().difference(b);
        for v in 0..self.n {
            let row = self.nbr(v);
            if b.contains(v) {
                inside2 += row.intersection(b).len();
                cross += row.intersection(rest).len();
            } else {
                outside2 += row.intersection(rest).len();
            }
        }
        Ok(EdgePartition {
            inside: inside2 / 2,
            cross,
            outside: outside2 / 2,
        })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// Ceiling division for a possibly negative numerator and positive divisor.
pub(crate) fn ceil_div(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    -((-a).div_euclid(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p4() -> Graph {
        Graph::path(4).unwrap()
    }

    #[test]
    fn neighborhoods() {
        assert_eq!(p4().neighbors(1).unwrap().to_vec(), vec![0, 2]);
        assert_eq!(
            Graph::complete(3).unwrap().neighbors(0).unwrap().to_vec(),
            vec![1, 2]
        );
        assert!(Graph::empty(1).unwrap().neighbors(0).unwrap().is_empty());
        assert!(matches!(
            p4().neighbors(4),
            Err(Error::VertexOutOfRange { vertex: 4, n: 4 })
        ));

        assert_eq!(p4().closed_neighborhood(1).unwrap().to_vec(), vec![0, 1, 2]);
        assert_eq!(
            Graph::empty(1)
                .unwrap()
                .closed_neighborhood(0)
                .unwrap()
                .to_vec(),
            vec![0]
        );
        assert_eq!(
            Graph::star(3)
                .unwrap()
                .closed_neighborhood(0)
                .unwrap()
                .len(),
            4
        );
    }

    #[test]
    fn complement_examples() {
        assert_eq!(Graph::complete(4).unwrap().complement().m(), 0);
        let c = p4().complement();
        let mut e: Vec<_> = c.edges().collect();
        e.sort();
        assert_eq!(e, vec![(0, 2), (0, 3), (1, 3)]);
        let g = Graph::cycle(5).unwrap();
        assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn diameter_examples() {
        assert_eq!(
            Graph::path(7).unwrap().diameter().unwrap(),
            Diameter::Finite(6)
        );
        assert_eq!(
            Graph::cycle(4).unwrap().diameter().unwrap(),
            Diameter::Finite(2)
        );
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(two_k2.diameter().unwrap(), Diameter::Infinite);
        assert_eq!(
            Graph::empty(1).unwrap().diameter().unwrap(),
            Diameter::Finite(0)
        );
        assert!(matches!(
            Graph::empty(0).unwrap().diameter(),
            Err(Error::EmptyGraph)
        ));
    }

    #[test]
    fn diametral_path_is_smallest_pair() {
        let g = Graph::cycle(6).unwrap();
        assert_eq!(g.diametral_path().unwrap(), vec![0, 1, 2, 3]);
        assert_eq!(Graph::empty(1).unwrap().diametral_path().unwrap(), vec![0]);
    }

    #[test]
    fn degrees() {
        assert_eq!(Graph::star(3).unwrap().degree_extremes().unwrap(), (3, 1));
        assert_eq!(Graph::cycle(5).unwrap().degree_extremes().unwrap(), (2, 2));
        assert_eq!(p4().degree_extremes().unwrap(), (2, 1));
        assert!(Graph::empty(0).unwrap().degree_extremes().is_err());
    }

    #[test]
    fn triangle_freeness() {
        assert!(Graph::cycle(5).unwrap().is_triangle_free());
        assert!(!Graph::complete(3).unwrap().is_triangle_free());
        assert!(Graph::complete_bipartite(2, 3).unwrap().is_triangle_free());
    }

    #[test]
    fn two_independence() {
        let g = p4();
        assert!(g.is_two_independent([0, 1].into_iter().collect()).unwrap());
        assert!(!g
            .is_two_independent([0, 1, 2].into_iter().collect())
            .unwrap());
        assert!(g.is_two_independent(VertexSet::EMPTY).unwrap());
        assert!(g.is_two_independent(VertexSet::singleton(9)).is_err());
    }

    #[test]
    fn induced() {
        let c4 = Graph::cycle(4).unwrap();
        let (h, map) = c4
            .induced_subgraph([0, 1, 2].into_iter().collect())
            .unwrap();
        assert_eq!(map, vec![0, 1, 2]);
        assert_eq!(h, Graph::path(3).unwrap());
        let (h, _) = c4.induced_subgraph(c4.vertices()).unwrap();
        assert_eq!(h, c4);
        let (h, _) = c4.induced_subgraph(VertexSet::singleton(2)).unwrap();
        assert_eq!(h, Graph::empty(1).unwrap());
    }

    #[test]
    fn connectivity() {
        assert!(Graph::empty(1).unwrap().is_connected().unwrap());
        assert!(!Graph::from_edges(4, &[(0, 1), (2, 3)])
            .unwrap()
            .is_connected()
            .unwrap());
        assert!(Graph::cycle(6).unwrap().is_connected().unwrap());
    }

    #[test]
    fn edge_partition_examples() {
        let c4 = Graph::cycle(4).unwrap();
        let p = c4.edge_partition([0, 1].into_iter().collect()).unwrap();
        assert_eq!((p.inside, p.cross, p.outside), (1, 2, 1));
        let p = c4.edge_partition(VertexSet::EMPTY).unwrap();
        assert_eq!((p.inside, p.cross, p.outside), (0, 0, 4));
        let p = c4.edge_partition(c4.vertices()).unwrap();
        assert_eq!((p.inside, p.cross, p.outside), (4, 0, 0));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            Graph::from_edges(3, &[(1, 1)]),
            Err(Error::SelfLoop(1))
        ));
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
        assert!(matches!(
            Graph::from_rows(vec![0b10, 0]),
            Err(Error::Asymmetric(0, 1))
        ));
        assert!(Graph::empty(65).is_err());
    }

    #[test]
    fn vertex_set_order_is_lexicographic() {
        let a: VertexSet = [0, 3].into_iter().collect();
        let b: VertexSet = [1, 2].into_iter().collect();
        assert!(a < b);
        assert!(VertexSet::singleton(0) < a);
    }

    #[test]
    fn ceil_div_handles_negatives() {
        assert_eq!(ceil_div(7, 3), 3);
        assert_eq!(ceil_div(6, 3), 2);
        assert_eq!(ceil_div(-1, 3), 0);
        assert_eq!(ceil_div(-4, 3), -1);
    }
}
