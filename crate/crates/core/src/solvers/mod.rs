//! Exact packing, open packing, `k`-limited packing and domination numbers.
//!
//! Every optimum comes with a witness set. The branch-and-bound solvers and the
//! brute-force oracle both return the lexicographically smallest optimal set, so
//! their outputs can be compared for equality and frozen in golden files.

mod brute;
mod domination;
mod packing;
mod report;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub use brute::{brute_force_optimum, BRUTE_FORCE_CAP};
pub use report::{compute_report, InvariantReport};

/// The packing-type invariants, used to select a validator or a solver.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Invariant {
    /// 2-packing: pairwise disjoint closed neighbourhoods.
    Packing,
    /// Pairwise disjoint open neighbourhoods.
    OpenPacking,
    /// `|N[v] ∩ B| <= k` for every vertex `v`.
    LimitedPacking(usize),
    Domination,
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Invariant::Packing => write!(f, "rho"),
            Invariant::OpenPacking => write!(f, "rho_o"),
            Invariant::LimitedPacking(k) => write!(f, "L_{k}"),
            Invariant::Domination => write!(f, "gamma"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    BranchAndBound,
    BruteForce,
}

/// An exact optimum together with a set attaining it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantResult {
    pub value: usize,
    pub witness: VertexSet,
    pub method: Method,
}

/// Closed neighbourhoods of the members of `b` are pairwise disjoint.
pub fn is_packing(g: &Graph, b: VertexSet) -> Result<bool> {
    g.check_set(b)?;
    let members = b.to_vec();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            if !g.closed_nbr(u).intersection(g.closed_nbr(v)).is_empty() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Every vertex has at most one neighbour in `b`.
pub fn is_open_packing(g: &Graph, b: VertexSet) -> Result<bool> {
    g.check_set(b)?;
    Ok((0..g.n()).all(|v| g.nbr(v).intersection(b).len() <= 1))
}

pub fn is_k_limited_packing(g: &Graph, b: VertexSet, k: usize) -> Result<bool> {
    if k < 1 {
        return Err(Error::InvalidK(k));
    }
    g.check_set(b)?;
    Ok((0..g.n()).all(|v| g.closed_nbr(v).intersection(b).len() <= k))
}

pub fn is_dominating(g: &Graph, b: VertexSet) -> Result<bool> {
    g.check_set(b)?;
    Ok((0..g.n()).all(|v| b.contains(v) || !g.nbr(v).intersection(b).is_empty()))
}

/// Runs the validator matching `invariant`.
pub fn validate(g: &Graph, invariant: Invariant, b: VertexSet) -> Result<bool> {
    match invariant {
        Invariant::Packing => is_packing(g, b),
        Invariant::OpenPacking => is_open_packing(g, b),
        Invariant::LimitedPacking(k) => is_k_limited_packing(g, b, k),
        Invariant::Domination => is_dominating(g, b),
    }
}

fn check_size(g: &Graph) -> Result<()> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    Ok(())
}

fn bnb_result(witness: VertexSet) -> InvariantResult {
    InvariantResult {
        value: witness.len(),
        witness,
        method: Method::BranchAndBound,
    }
}

/// `ρ(G)`.
pub fn packing_number(g: &Graph) -> Result<InvariantResult> {
    check_size(g)?;
    Ok(bnb_result(packing::maximum(
        g,
        packing::Capacity::closed(1),
    )))
}

/// `ρₒ(G)`.
pub fn open_packing_number(g: &Graph) -> Result<InvariantResult> {
    check_size(g)?;
    Ok(bnb_result(packing::maximum(g, packing::Capacity::open(1))))
}

/// `L_k(G)` for any `k >= 1`.
pub fn limited_packing_number(g: &Graph, k: usize) -> Result<InvariantResult> {
    if k < 1 {
        return Err(Error::InvalidK(k));
    }
    check_size(g)?;
    Ok(bnb_result(packing::maximum(
        g,
        packing::Capacity::closed(k),
    )))
}

/// `γ(G)`.
pub fn domination_number(g: &Graph) -> Result<InvariantResult> {
    check_size(g)?;
    Ok(bnb_result(domination::minimum(g)))
}

/// Dispatches to the branch-and-bound solver for `invariant`.
pub fn solve(g: &Graph, invariant: Invariant) -> Result<InvariantResult> {
    match invariant {
        Invariant::Packing => packing_number(g),
        Invariant::OpenPacking => open_packing_number(g),
        Invariant::LimitedPacking(k) => limited_packing_number(g, k),
        Invariant::Domination => domination_number(g),
    }
}

/// Branching order shared by the solvers: descending degree, then index.
fn branching_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn packing_validator() {
        let p7 = Graph::path(7).unwrap();
        assert!(is_packing(&p7, set(&[0, 3, 6])).unwrap());
        assert!(!is_packing(&Graph::cycle(4).unwrap(), set(&[0, 2])).unwrap());
        assert!(is_packing(&p7, set(&[4])).unwrap());
        assert!(is_packing(&p7, VertexSet::EMPTY).unwrap());
        assert!(is_packing(&p7, set(&[7])).is_err());
    }

    #[test]
    fn open_packing_validator() {
        assert!(is_open_packing(&Graph::complete(2).unwrap(), set(&[0, 1])).unwrap());
        assert!(!is_open_packing(&Graph::path(3).unwrap(), set(&[0, 2])).unwrap());
        assert!(is_open_packing(&Graph::path(4).unwrap(), set(&[0, 1])).unwrap());
    }

    #[test]
    fn limited_packing_validator() {
        let p4 = Graph::path(4).unwrap();
        assert!(is_k_limited_packing(&p4, set(&[0, 1, 3]), 2).unwrap());
        assert!(!is_k_limited_packing(&p4, p4.vertices(), 2).unwrap());
        assert!(matches!(
            is_k_limited_packing(&p4, VertexSet::EMPTY, 0),
            Err(Error::InvalidK(0))
        ));
    }

    #[test]
    fn domination_validator() {
        let star = Graph::star(3).unwrap();
        assert!(is_dominating(&star, set(&[0])).unwrap());
        let p4 = Graph::path(4).unwrap();
        assert!(!is_dominating(&p4, set(&[0])).unwrap());
        assert!(is_dominating(&p4, p4.vertices()).unwrap());
    }

    #[test]
    fn solver_examples() {
        assert_eq!(
            open_packing_number(&Graph::star(3).unwrap()).unwrap().value,
            2
        );
        assert_eq!(
            open_packing_number(&Graph::path(4).unwrap()).unwrap().value,
            2
        );
        assert_eq!(
            domination_number(&Graph::path(7).unwrap()).unwrap().value,
            3
        );
        assert_eq!(
            limited_packing_number(&Graph::path(4).unwrap(), 2)
                .unwrap()
                .value,
            3
        );
        assert_eq!(packing_number(&Graph::cycle(5).unwrap()).unwrap().value, 1);
        assert!(packing_number(&Graph::empty(0).unwrap()).is_err());
        assert!(limited_packing_number(&Graph::path(3).unwrap(), 0).is_err());
    }

    #[test]
    fn path_packing_number() {
        for m in 1..=30 {
            let r = packing_number(&Graph::path(m).unwrap()).unwrap();
            assert_eq!(r.value, m.div_ceil(3), "P_{m}");
            assert!(is_packing(&Graph::path(m).unwrap(), r.witness).unwrap());
        }
    }

    #[test]
    fn witnesses_are_lexicographically_smallest() {
        // P7: optimal packings of size 3 are exactly {0,3,6}.
        let r = packing_number(&Graph::path(7).unwrap()).unwrap();
        assert_eq!(r.witness.to_vec(), vec![0, 3, 6]);
        // C6: {0,3} is the smallest of three optimal packings.
        let r = packing_number(&Graph::cycle(6).unwrap()).unwrap();
        assert_eq!(r.witness.to_vec(), vec![0, 3]);
        let r = domination_number(&Graph::path(5).unwrap()).unwrap();
        assert_eq!(r.witness.to_vec(), vec![0, 3]);
    }
}
