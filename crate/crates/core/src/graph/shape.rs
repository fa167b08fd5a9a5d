use serde::{Deserialize, Serialize};

use super::{Graph, VertexSet};

/// The named shapes the extremal characterizations refer to.
///
/// One graph can carry several tags: `C4` is also `K_{2,2}`, `K2` is `P2`,
/// `K_{1,1}` and `K2` at once.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Shape {
    Complete(usize),
    Path(usize),
    Cycle(usize),
    /// `K_{a,b}` with `a <= b`. `K_{0,q}` is the edgeless graph on `q` vertices.
    CompleteBipartite(usize, usize),
}

/// Classifies `g` by degree counts plus a direct structural check.
pub fn recognize_shape(g: &Graph) -> Vec<Shape> {
    let n = g.n();
    let m = g.m();
    let mut tags = Vec::new();
    let connected = n > 0 && g.component_of(0) == g.vertices();

    if n >= 1 && m == n * (n - 1) / 2 {
        tags.push(Shape::Complete(n));
    }
    if connected && m + 1 == n && g.max_degree() <= 2 {
        tags.push(Shape::Path(n));
    }
    if connected && n >= 3 && (0..n).all(|v| g.degree(v) == 2) {
        tags.push(Shape::Cycle(n));
    }
    if let Some((a, b)) = complete_bipartite_parts(g, connected) {
        tags.push(Shape::CompleteBipartite(a, b));
    }
    tags
}

fn complete_bipartite_parts(g: &Graph, connected: bool) -> Option<(usize, usize)> {
    let n = g.n();
    if g.m() == 0 {
        return Some((0, n));
    }
    if !connected {
        return None;
    }
    let right = g.nbr(0);
    let left = g.vertices().difference(right);
    let ok = left.iter().all(|v| g.nbr(v) == right) && right.iter().all(|v| g.nbr(v) == left);
    ok.then(|| {
        let (a, b) = (left.len(), right.len());
        (a.min(b), a.max(b))
    })
}

/// True iff `g` is `K_{floor(n/2), ceil(n/2)}`.
pub(crate) fn is_balanced_complete_bipartite(g: &Graph) -> bool {
    let n = g.n();
    recognize_shape(g).contains(&Shape::CompleteBipartite(n / 2, n - n / 2))
}

#[allow(dead_code)]
pub(crate) fn is_clique(g: &Graph, s: VertexSet) -> bool {
    s.iter().all(|v| s.without(v).is_subset(g.nbr(v)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c4_reports_cycle_and_k22() {
        let tags = recognize_shape(&Graph::cycle(4).unwrap());
        assert!(tags.contains(&Shape::Cycle(4)));
        assert!(tags.contains(&Shape::CompleteBipartite(2, 2)));
    }

    #[test]
    fn k23() {
        let tags = recognize_shape(&Graph::complete_bipartite(2, 3).unwrap());
        assert_eq!(tags, vec![Shape::CompleteBipartite(2, 3)]);
    }

    #[test]
    fn star_plus_edge_has_no_shape() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2)]).unwrap();
        assert!(recognize_shape(&g).is_empty());
    }

    #[test]
    fn small_degenerate_cases() {
        let k1 = recognize_shape(&Graph::empty(1).unwrap());
        assert!(k1.contains(&Shape::Complete(1)));
        assert!(k1.contains(&Shape::Path(1)));
        assert!(k1.contains(&Shape::CompleteBipartite(0, 1)));
        assert_eq!(
            recognize_shape(&Graph::empty(3).unwrap()),
            vec![Shape::CompleteBipartite(0, 3)]
        );
        let p5 = recognize_shape(&Graph::path(5).unwrap());
        assert_eq!(p5, vec![Shape::Path(5)]);
        assert!(is_balanced_complete_bipartite(
            &Graph::complete_bipartite(3, 4).unwrap()
        ));
        assert!(!is_balanced_complete_bipartite(
            &Graph::complete_bipartite(2, 5).unwrap()
        ));
    }

    #[test]
    fn complete_shape_matches_full_clique() {
        for n in 1..7 {
            let g = Graph::complete(n).unwrap();
            assert!(recognize_shape(&g).contains(&Shape::Complete(n)));
            assert!(is_clique(&g, g.vertices()));
        }
    }
}
