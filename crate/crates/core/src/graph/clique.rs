//! Maximum cliques by Bron–Kerbosch with Tomita pivoting over bit rows.

use super::{Graph, VertexSet};
use crate::error::{Error, Result};

fn bron_kerbosch(
    g: &Graph,
    r: VertexSet,
    mut p: VertexSet,
    mut x: VertexSet,
    out: &mut dyn FnMut(VertexSet),
) {
    if p.is_empty() {
        if x.is_empty() {
            out(r);
        }
        return;
    }
    // Pivot on the vertex of P ∪ X covering most of P.
    let pivot = p
        .union(x)
        .iter()
        .max_by_key(|&u| g.nbr(u).intersection(p).len())
        .expect("P is non-empty");
    for v in p.difference(g.nbr(pivot)) {
        let nv = g.nbr(v);
        bron_kerbosch(g, r.with(v), p.intersection(nv), x.intersection(nv), out);
        p.remove(v);
        x.insert(v);
    }
}

/// Every maximal clique of `g`.
pub(crate) fn maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    let mut found = Vec::new();
    bron_kerbosch(
        g,
        VertexSet::EMPTY,
        g.vertices(),
        VertexSet::EMPTY,
        &mut |c| found.push(c),
    );
    found
}

/// All cliques of size `ω(G)`, in lexicographic order.
pub fn maximum_cliques(g: &Graph) -> Result<Vec<VertexSet>> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let all = maximal_cliques(g);
    let omega = all.iter().map(|c| c.len()).max().unwrap_or(0);
    let mut max: Vec<_> = all.into_iter().filter(|c| c.len() == omega).collect();
    max.sort();
    Ok(max)
}

/// `ω(G)` with the lexicographically smallest maximum clique as witness.
pub fn clique_number(g: &Graph) -> Result<(usize, VertexSet)> {
    let cliques = maximum_cliques(g)?;
    let first = cliques[0];
    Ok((first.len(), first))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::shape::is_clique;

    fn brute_max_cliques(g: &Graph) -> Vec<VertexSet> {
        let n = g.n();
        let mut best = 0;
        let mut out = Vec::new();
        for bits in 0u64..(1 << n) {
            let s = VertexSet::from_bits(bits);
            if !is_clique(g, s) {
                continue;
            }
            if s.len() > best {
                best = s.len();
                out.clear();
            }
            if s.len() == best {
                out.push(s);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn examples() {
        let k5 = Graph::complete(5).unwrap();
        assert_eq!(clique_number(&k5).unwrap(), (5, k5.vertices()));
        let (w, s) = clique_number(&Graph::cycle(5).unwrap()).unwrap();
        assert_eq!(w, 2);
        assert_eq!(s.to_vec(), vec![0, 1]);

        assert_eq!(
            maximum_cliques(&Graph::complete(4).unwrap()).unwrap().len(),
            1
        );
        assert_eq!(maximum_cliques(&Graph::cycle(4).unwrap()).unwrap().len(), 4);
        assert!(clique_number(&Graph::empty(0).unwrap()).is_err());
    }

    #[test]
    fn k4_plus_vertex_on_two_clique_vertices() {
        let g = Graph::complete(4)
            .unwrap()
            .with_new_vertex([0, 1].into_iter().collect())
            .unwrap();
        assert_eq!(brute_max_cliques(&g), vec![VertexSet::full(4)]);
        assert_eq!(clique_number(&g).unwrap(), (4, VertexSet::full(4)));
        let g = Graph::complete(4)
            .unwrap()
            .with_new_vertex(VertexSet::singleton(1))
            .unwrap();
        assert_eq!(clique_number(&g).unwrap().0, 4);
    }

    #[test]
    fn bowtie_has_two_triangles() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let cliques = maximum_cliques(&g).unwrap();
        assert_eq!(cliques, brute_max_cliques(&g));
        assert_eq!(cliques.len(), 2);
    }

    #[test]
    fn agrees_with_brute_force_on_labeled_graphs() {
        // every labeled graph on 5 vertices
        for bits in 0u32..(1 << 10) {
            let mut edges = Vec::new();
            let mut k = 0;
            for j in 1..5 {
                for i in 0..j {
                    if bits >> k & 1 == 1 {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            let g = Graph::from_edges(5, &edges).unwrap();
            assert_eq!(maximum_cliques(&g).unwrap(), brute_max_cliques(&g));
        }
    }
}
