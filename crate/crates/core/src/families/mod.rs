//! Generators and recognisers for the extremal graph families.
//!
//! - `Ω` / `Ω′`: triangle-free graphs meeting the open packing / packing upper
//!   bounds in terms of `n` and `m`.
//! - `Π₁` / `Π₂`: connected graphs with `ρₒ = n - ω`, for `ω = 2` / `ω >= 3`.
//! - The Nordhaus–Gaddum sharpness construction.
//!
//! Recognisers do a structural search and never consult the bound they
//! characterize, so a tightness check and a membership test are independent.

mod ng_sharp;
mod omega;
mod pi;
mod theorem6;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::VertexSet;

pub use ng_sharp::{gen_ng_sharp, NgSharp};
pub use omega::{gen_omega, gen_omega_prime, recognize_omega, recognize_omega_prime, OmegaParams};
pub use pi::{
    gen_pi1, gen_pi2, recognize_pi1, recognize_pi2, recognize_pi2_loose_h, validate_pi2_roles,
    Anchored, Pi2Instance, Pi2Params, Pi2Roles,
};
pub use theorem6::{verify_theorem6, Theorem6Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum FamilyTag {
    Omega,
    OmegaPrime,
    Pi1,
    Pi2A,
    Pi2B,
    Pi2C,
    Pi2D,
    Pi2E,
    Pi2F,
    Pi2G,
    Pi2H,
    Pi2I,
    Pi2J,
}

impl FamilyTag {
    pub const PI2: [FamilyTag; 10] = [
        FamilyTag::Pi2A,
        FamilyTag::Pi2B,
        FamilyTag::Pi2C,
        FamilyTag::Pi2D,
        FamilyTag::Pi2E,
        FamilyTag::Pi2F,
        FamilyTag::Pi2G,
        FamilyTag::Pi2H,
        FamilyTag::Pi2I,
        FamilyTag::Pi2J,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FamilyTag::Omega => "OMEGA",
            FamilyTag::OmegaPrime => "OMEGA_PRIME",
            FamilyTag::Pi1 => "PI1",
            FamilyTag::Pi2A => "PI2_A",
            FamilyTag::Pi2B => "PI2_B",
            FamilyTag::Pi2C => "PI2_C",
            FamilyTag::Pi2D => "PI2_D",
            FamilyTag::Pi2E => "PI2_E",
            FamilyTag::Pi2F => "PI2_F",
            FamilyTag::Pi2G => "PI2_G",
            FamilyTag::Pi2H => "PI2_H",
            FamilyTag::Pi2I => "PI2_I",
            FamilyTag::Pi2J => "PI2_J",
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for FamilyTag {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        let all = [FamilyTag::Omega, FamilyTag::OmegaPrime, FamilyTag::Pi1];
        all.into_iter()
            .chain(FamilyTag::PI2)
            .find(|t| t.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| crate::Error::InvalidParams(format!("unknown family `{s}`")))
    }
}

/// A named vertex or vertex set certifying membership.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Role {
    Vertex(usize),
    Set(VertexSet),
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Role::Vertex(v) => write!(f, "{v}"),
            Role::Set(s) => write!(f, "{s}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyMembership {
    pub tag: FamilyTag,
    pub member: bool,
    pub roles: BTreeMap<String, Role>,
}

impl FamilyMembership {
    pub(crate) fn non_member(tag: FamilyTag) -> Self {
        FamilyMembership {
            tag,
            member: false,
            roles: BTreeMap::new(),
        }
    }

    pub(crate) fn member(
        tag: FamilyTag,
        roles: impl IntoIterator<Item = (&'static str, Role)>,
    ) -> Self {
        let roles = roles.into_iter().map(|(k, v)| (k.to_string(), v)).collect();
        FamilyMembership {
            tag,
            member: true,
            roles,
        }
    }
}

impl fmt::Display for FamilyMembership {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {}",
            self.tag,
            if self.member { "member" } else { "non-member" }
        )?;
        for (k, v) in &self.roles {
            write!(f, " {k}={v}")?;
        }
        Ok(())
    }
}
