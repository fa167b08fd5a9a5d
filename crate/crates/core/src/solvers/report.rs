use serde::{Serialize, Serializer};

use super::{
    domination_number, limited_packing_number, open_packing_number, packing_number, InvariantResult,
};
use crate::error::Result;
use crate::graph::{clique_number, Diameter, Graph, VertexSet};

/// Every invariant of one graph, each with a certifying set where one exists.
#[derive(Clone, Debug, Serialize)]
pub struct InvariantReport {
    pub n: usize,
    pub m: usize,
    pub rho: InvariantResult,
    pub rho_o: InvariantResult,
    pub l1: InvariantResult,
    pub l2: InvariantResult,
    pub gamma: InvariantResult,
    pub omega: usize,
    pub omega_witness: VertexSet,
    pub max_degree: usize,
    pub min_degree: usize,
    #[serde(serialize_with = "serialize_diameter")]
    pub diameter: Diameter,
    pub triangle_free: bool,
    pub connected: bool,
}

fn serialize_diameter<S: Serializer>(d: &Diameter, s: S) -> std::result::Result<S::Ok, S::Error> {
    match d {
        Diameter::Finite(v) => s.serialize_u64(*v as u64),
        Diameter::Infinite => s.serialize_str("inf"),
    }
}

pub fn compute_report(g: &Graph) -> Result<InvariantReport> {
    let (max_degree, min_degree) = g.degree_extremes()?;
    let (omega, omega_witness) = clique_number(g)?;
    Ok(InvariantReport {
        n: g.n(),
        m: g.m(),
        rho: packing_number(g)?,
        rho_o: open_packing_number(g)?,
        l1: limited_packing_number(g, 1)?,
        l2: limited_packing_number(g, 2)?,
        gamma: domination_number(g)?,
        omega,
        omega_witness,
        max_degree,
        min_degree,
        diameter: g.diameter()?,
        triangle_free: g.is_triangle_free(),
        connected: g.is_connected()?,
    })
}
