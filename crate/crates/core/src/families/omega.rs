use serde::{Deserialize, Serialize};

use super::{FamilyMembership, FamilyTag, Role};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Parameters for `Ω` and `Ω′`.
///
/// Vertices `0..t` and `t..2t` are the two sides of `K_{t,t}`. The outside
/// vertices follow from `2t`: for `Ω`, copy `i` of `K2` is `2t+2i, 2t+2i+1`; for
/// `Ω′`, copy `i` of `K1` is `2t+i`. `attachment[u]` is the index (relative to
/// `2t`) of the outside vertex joined to `u`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OmegaParams {
    pub t: usize,
    pub p: usize,
    pub attachment: Vec<usize>,
}

fn build(params: &OmegaParams, outside_per_copy: usize) -> Result<Graph> {
    let OmegaParams {
        t,
        p,
        ref attachment,
    } = *params;
    if t == 0 || p == 0 {
        return Err(Error::InvalidParams("t and p must be positive".into()));
    }
    if attachment.len() != 2 * t {
        return Err(Error::InvalidParams(format!(
            "attachment has {} entries, expected {}",
            attachment.len(),
            2 * t
        )));
    }
    let outside = outside_per_copy * p;
    if let Some(&bad) = attachment.iter().find(|&&a| a >= outside) {
        return Err(Error::InvalidParams(format!(
            "attachment target {bad} outside 0..{outside}"
        )));
    }
    let mut g = Graph::empty(2 * t + outside)?;
    for a in 0..t {
        for b in t..2 * t {
            g.add_edge(a, b);
        }
    }
    if outside_per_copy == 2 {
        for i in 0..p {
            g.add_edge(2 * t + 2 * i, 2 * t + 2 * i + 1);
        }
    }
    for (u, &a) in attachment.iter().enumerate() {
        g.add_edge(u, 2 * t + a);
    }
    if !g.is_triangle_free() {
        return Err(Error::InvalidParams("attachment creates a triangle".into()));
    }
    if let Some(v) = g.isolated_vertex() {
        return Err(Error::InvalidParams(format!(
            "vertex {v} receives no attachment"
        )));
    }
    Ok(g)
}

/// `K_{t,t} ∪ pK2` with one edge from each `K_{t,t}` vertex to a `K2` vertex.
pub fn gen_omega(params: &OmegaParams) -> Result<Graph> {
    build(params, 2)
}

/// `K_{t,t} ∪ pK1` with one edge from each `K_{t,t}` vertex to a `K1`.
pub fn gen_omega_prime(params: &OmegaParams) -> Result<Graph> {
    build(params, 1)
}

/// Searches for `T = X ∪ Y` inducing `K_{s,s}` such that every vertex of `T`
/// has exactly one neighbour outside `T` and the outside set `B` induces a
/// perfect matching (`matched`) or no edges.
fn search(g: &Graph, matched: bool) -> Option<(VertexSet, VertexSet, VertexSet)> {
    if g.n() == 0 || !g.is_triangle_free() {
        return None;
    }
    let all = g.vertices();
    let outside_ok = |b: VertexSet| -> bool {
        if b.is_empty() {
            return false;
        }
        b.iter().all(|v| {
            let inner = g.nbr(v).intersection(b).len();
            if matched {
                inner == 1
            } else {
                inner == 0
            }
        })
    };
    // s = 0: the whole graph is B. Only pK2 for Ω; no K_{t,t} vertex to attach.
    if matched && outside_ok(all) {
        return Some((VertexSet::default(), VertexSet::default(), all));
    }
    for a in 0..g.n() {
        for b in g.nbr(a) {
            let side2 = g.nbr(a).without(b);
            let Some(c) = side2.first() else { continue };
            for d in g.nbr(c) {
                let side1 = g.nbr(c).without(d);
                if !side1.contains(a) || side1.len() != side2.len() {
                    continue;
                }
                if !side1.intersection(side2).is_empty() {
                    continue;
                }
                let t = side1.union(side2);
                let rest = all.difference(t);
                let bipartite = side1.iter().all(|x| g.nbr(x).intersection(t) == side2)
                    && side2.iter().all(|y| g.nbr(y).intersection(t) == side1);
                let attached = t.iter().all(|v| g.nbr(v).intersection(rest).len() == 1);
                if bipartite && attached && outside_ok(rest) {
                    let (x, y) = if side1 < side2 {
                        (side1, side2)
                    } else {
                        (side2, side1)
                    };
                    return Some((x, y, rest));
                }
            }
        }
    }
    None
}

fn membership(
    tag: FamilyTag,
    found: Option<(VertexSet, VertexSet, VertexSet)>,
) -> FamilyMembership {
    match found {
        Some((x, y, b)) => FamilyMembership::member(
            tag,
            [
                ("X", Role::Set(x)),
                ("Y", Role::Set(y)),
                ("B", Role::Set(b)),
            ],
        ),
        None => FamilyMembership::non_member(tag),
    }
}

/// Membership in `Ω`. Roles: `X`, `Y` (the sides of `K_{t,t}`) and `B` (the
/// `pK2` vertices).
///
/// The degenerate `t = 0` case `pK2` is accepted: it has no `K_{t,t}` part but
/// meets the open packing bound with equality.
pub fn recognize_omega(g: &Graph) -> FamilyMembership {
    membership(FamilyTag::Omega, search(g, true))
}

/// Membership in `Ω′`. Roles as for [`recognize_omega`], with `B` independent.
pub fn recognize_omega_prime(g: &Graph) -> FamilyMembership {
    membership(FamilyTag::OmegaPrime, search(g, false))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::canonical_code;

    fn params(t: usize, p: usize, attachment: &[usize]) -> OmegaParams {
        OmegaParams {
            t,
            p,
            attachment: attachment.to_vec(),
        }
    }

    #[test]
    fn c4_from_one_k2() {
        let g = gen_omega(&params(1, 1, &[0, 1])).unwrap();
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(canonical_code(&g).unwrap(), canonical_code(&c4).unwrap());
    }

    #[test]
    fn shared_target_on_adjacent_pair_is_a_triangle() {
        assert!(gen_omega(&params(1, 1, &[0, 0])).is_err());
        assert!(gen_omega_prime(&params(1, 1, &[0, 0])).is_err());
        assert!(gen_omega_prime(&params(2, 1, &[0, 0, 0, 0])).is_err());
    }

    #[test]
    fn p4_from_two_k1() {
        let g = gen_omega_prime(&params(1, 2, &[0, 1])).unwrap();
        let p4 = Graph::path(4).unwrap();
        assert_eq!(canonical_code(&g).unwrap(), canonical_code(&p4).unwrap());
    }

    #[test]
    fn sizes() {
        let g = gen_omega(&params(2, 1, &[0, 0, 1, 1])).unwrap();
        assert_eq!((g.n(), g.m()), (6, 9));
        let g = gen_omega_prime(&params(2, 2, &[0, 0, 1, 1])).unwrap();
        assert_eq!((g.n(), g.m()), (6, 8));
    }

    #[test]
    fn bad_params() {
        assert!(gen_omega(&params(0, 1, &[])).is_err());
        assert!(gen_omega(&params(1, 0, &[0, 0])).is_err());
        assert!(gen_omega(&params(1, 1, &[0])).is_err());
        assert!(gen_omega(&params(1, 1, &[0, 2])).is_err());
        // K1 number 2 would be isolated.
        assert!(gen_omega_prime(&params(1, 3, &[0, 1])).is_err());
    }

    #[test]
    fn recognition_examples() {
        let c4 = Graph::cycle(4).unwrap();
        assert!(recognize_omega(&c4).member);
        let p4 = Graph::path(4).unwrap();
        assert!(!recognize_omega(&p4).member);
        assert!(recognize_omega_prime(&p4).member);
        let k2 = Graph::complete(2).unwrap();
        assert!(recognize_omega(&k2).member);
        let k33 = Graph::complete_bipartite(3, 3).unwrap();
        assert!(!recognize_omega_prime(&k33).member);
    }

    #[test]
    fn k33_is_in_omega() {
        // One side of K_{2,2} goes to one end of the K2, the other side to the other end.
        let k33 = Graph::complete_bipartite(3, 3).unwrap();
        let found = recognize_omega(&k33);
        assert!(found.member);
        let g = gen_omega(&params(2, 1, &[1, 1, 0, 0])).unwrap();
        assert_eq!(canonical_code(&g).unwrap(), canonical_code(&k33).unwrap());
    }

    #[test]
    fn roles_describe_the_structure() {
        let g = gen_omega(&params(2, 2, &[0, 2, 1, 3])).unwrap();
        let m = recognize_omega(&g);
        assert!(m.member);
        let Role::Set(b) = m.roles["B"] else { panic!() };
        assert_eq!(b.len(), 4);
        let Role::Set(x) = m.roles["X"] else { panic!() };
        assert_eq!(x.len(), 2);
    }
}
