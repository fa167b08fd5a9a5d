use super::{validate, Invariant, InvariantResult, Method};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Hard cap for the subset enumeration.
pub const BRUTE_FORCE_CAP: usize = 20;

/// Exact optimum by checking all `2^n` subsets with the plain validators.
///
/// Ground truth for tests: it shares nothing with the branch-and-bound code
/// beyond the validator definitions. Ties go to the lexicographically smallest set.
pub fn brute_force_optimum(g: &Graph, invariant: Invariant) -> Result<InvariantResult> {
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > BRUTE_FORCE_CAP {
        return Err(Error::TooManyVertices {
            n,
            max: BRUTE_FORCE_CAP,
        });
    }
    if let Invariant::LimitedPacking(0) = invariant {
        return Err(Error::InvalidK(0));
    }
    let minimize = invariant == Invariant::Domination;
    let mut best: Option<VertexSet> = None;
    for bits in 0u64..(1u64 << n) {
        let s = VertexSet::from_bits(bits);
        if !validate(g, invariant, s)? {
            continue;
        }
        let better = match best {
            None => true,
            Some(b) if s.len() == b.len() => s < b,
            Some(b) => (s.len() < b.len()) == minimize,
        };
        if better {
            best = Some(s);
        }
    }
    let witness = best.expect("the empty set packs and the full set dominates");
    Ok(InvariantResult {
        value: witness.len(),
        witness,
        method: Method::BruteForce,
    })
}
