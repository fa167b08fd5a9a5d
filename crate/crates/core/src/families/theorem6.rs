use serde::Serialize;

use super::{recognize_pi1, recognize_pi2, recognize_pi2_loose_h, FamilyTag};
use crate::error::{Error, Result};
use crate::graph::{clique_number, Graph};
use crate::solvers::open_packing_number;

/// Outcome of testing `ρₒ(G) = n - ω(G)` against family membership.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Theorem6Verdict {
    pub n: usize,
    pub omega: usize,
    pub rho_o: usize,
    /// `ρₒ = n - ω`.
    pub lhs: bool,
    /// `G ∈ Π₁` when `ω = 2`, `G ∈ Π₂` when `ω >= 3`.
    pub rhs: bool,
    pub agree: bool,
    /// Matching families (`PI1` or the `PI2_*` tags).
    pub families: Vec<FamilyTag>,
    /// Family (h) matches only under the looser reading of `w`.
    pub loose_h_only: bool,
}

/// Compares the equality `ρₒ(G) = n - ω(G)` with membership in `Π₁ ∪ Π₂`.
///
/// Requires `G` connected with `n >= 3`. Disagreements are reported in the
/// verdict, never as errors.
pub fn verify_theorem6(g: &Graph) -> Result<Theorem6Verdict> {
    let n = g.n();
    if n < 3 {
        return Err(Error::InvalidParams(format!(
            "need at least 3 vertices, got {n}"
        )));
    }
    if !g.is_connected()? {
        return Err(Error::Disconnected);
    }
    let (omega, _) = clique_number(g)?;
    let rho_o = open_packing_number(g)?.value;
    let lhs = rho_o + omega == n;
    let (families, loose_h_only) = if omega == 2 {
        let pi1 = recognize_pi1(g);
        (
            if pi1.member {
                vec![FamilyTag::Pi1]
            } else {
                Vec::new()
            },
            false,
        )
    } else {
        let tags: Vec<FamilyTag> = recognize_pi2(g).into_iter().map(|m| m.tag).collect();
        let loose = !tags.contains(&FamilyTag::Pi2H) && recognize_pi2_loose_h(g).member;
        (tags, loose)
    };
    let rhs = !families.is_empty();
    Ok(Theorem6Verdict {
        n,
        omega,
        rho_o,
        lhs,
        rhs,
        agree: lhs == rhs,
        families,
        loose_h_only,
    })
}
