//! Checkers for the packing bounds. Each returns a [`BoundCheck`] holding both
//! sides of the inequality, whether it holds, whether it is tight, and the
//! outcome of any attached characterization of the equality case.
//!
//! Precondition failures (a triangle, a disconnected graph, ...) surface as
//! [`Error`] values so callers can count them as not applicable.

mod value;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use value::{Surd, Value};

use crate::error::{Error, Result};
use crate::families::{recognize_omega, recognize_omega_prime};
use crate::graph::{ceil_div, shape, Diameter, Graph, VertexSet};
use crate::solvers::{
    domination_number, is_k_limited_packing, is_packing, limited_packing_number,
    open_packing_number, packing_number,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum BoundId {
    /// `m <= floor(n^2/4)` for triangle-free graphs.
    Mantel,
    /// `ρₒ <= n + 1 - sqrt(4m - 2n + 1)`, triangle-free, no isolated vertex.
    Thm2Open,
    /// `ρ <= n + 2 - 2 sqrt(1 + m)`, triangle-free, no isolated vertex.
    Thm2Pack,
    /// `γ >= ceil((diam + 1) / 3)`.
    Eq11Gamma,
    /// `ceil((k diam + k) / 3) <= L_k` for `k` in {1, 2}.
    Prop3Lk,
    /// `ρ = 1` iff `diam <= 2`.
    ObsRho1,
    /// Nordhaus–Gaddum sum and product bounds on `ρ`.
    Thm4Ng,
    /// `ρₒ <= n - Δ + 1`.
    Lem5Open,
    /// `L_2(G) + L_2(complement) <= n + 2`.
    L2Ng,
}

impl BoundId {
    pub const ALL: [BoundId; 9] = [
        BoundId::Mantel,
        BoundId::Thm2Open,
        BoundId::Thm2Pack,
        BoundId::Eq11Gamma,
        BoundId::Prop3Lk,
        BoundId::ObsRho1,
        BoundId::Thm4Ng,
        BoundId::Lem5Open,
        BoundId::L2Ng,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            BoundId::Mantel => "MANTEL",
            BoundId::Thm2Open => "THM2_OPEN",
            BoundId::Thm2Pack => "THM2_PACK",
            BoundId::Eq11Gamma => "EQ11_GAMMA",
            BoundId::Prop3Lk => "PROP3_LK",
            BoundId::ObsRho1 => "OBS_RHO1",
            BoundId::Thm4Ng => "THM4_NG",
            BoundId::Lem5Open => "LEM5_OPEN",
            BoundId::L2Ng => "L2_NG",
        }
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BoundId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BoundId::ALL
            .into_iter()
            .find(|b| b.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownCheck(s.to_string()))
    }
}

/// How `lhs` and `rhs` are related when the bound holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    Le,
    Ge,
    Eq,
    /// `lhs` and `rhs` are the two sides of a biconditional; see `holds`.
    Iff,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Le => "<=",
            Relation::Ge => ">=",
            Relation::Eq => "==",
            Relation::Iff => "<=>",
        })
    }
}

/// One sub-inequality of a multi-part bound.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Clause {
    pub name: String,
    pub lhs: Value,
    pub relation: Relation,
    pub rhs: Value,
    pub holds: bool,
    pub tight: bool,
}

impl Clause {
    fn new(name: &str, lhs: Value, relation: Relation, rhs: Value) -> Result<Self> {
        let (holds, tight) = evaluate(&lhs, relation, &rhs)?;
        Ok(Clause {
            name: name.to_string(),
            lhs,
            relation,
            rhs,
            holds,
            tight,
        })
    }
}

/// A single evaluation of one bound on one graph.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundCheck {
    pub bound: BoundId,
    pub lhs: Value,
    pub relation: Relation,
    pub rhs: Value,
    pub holds: bool,
    pub tight: bool,
    /// Result of the assertion attached to the bound: the equality
    /// characterization, or validation of a constructed witness. `None` when
    /// the bound has no such assertion.
    pub consistent: Option<bool>,
    pub clauses: Vec<Clause>,
    pub context: BTreeMap<String, i64>,
    pub witness: Option<VertexSet>,
}

impl BoundCheck {
    fn from_sides(bound: BoundId, lhs: Value, relation: Relation, rhs: Value) -> Result<Self> {
        let (holds, tight) = evaluate(&lhs, relation, &rhs)?;
        Ok(BoundCheck {
            bound,
            lhs,
            relation,
            rhs,
            holds,
            tight,
            consistent: None,
            clauses: Vec::new(),
            context: BTreeMap::new(),
            witness: None,
        })
    }

    fn ctx(mut self, key: &str, value: impl TryInto<i64>) -> Self {
        let v = value.try_into().unwrap_or(i64::MAX);
        self.context.insert(key.to_string(), v);
        self
    }

    /// The bound failed, or its attached characterization did.
    pub fn is_violation(&self) -> bool {
        !self.holds || self.consistent == Some(false)
    }
}

impl fmt::Display for BoundCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} {} {}  holds={} tight={}",
            self.bound, self.lhs, self.relation, self.rhs, self.holds, self.tight
        )?;
        if let Some(c) = self.consistent {
            write!(f, " consistent={c}")?;
        }
        for c in &self.clauses {
            write!(
                f,
                "\n  {}: {} {} {}  holds={} tight={}",
                c.name, c.lhs, c.relation, c.rhs, c.holds, c.tight
            )?;
        }
        if !self.context.is_empty() {
            let parts: Vec<String> = self
                .context
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            write!(f, "\n  context: {}", parts.join(" "))?;
        }
        if let Some(w) = self.witness {
            write!(f, "\n  witness: {w}")?;
        }
        Ok(())
    }
}

fn evaluate(lhs: &Value, relation: Relation, rhs: &Value) -> Result<(bool, bool)> {
    let ord = lhs
        .cmp_exact(rhs)
        .ok_or_else(|| Error::Internal(format!("cannot compare {lhs} with {rhs}")))?;
    let holds = match relation {
        Relation::Le => ord != Ordering::Greater,
        Relation::Ge => ord != Ordering::Less,
        Relation::Eq => ord == Ordering::Equal,
        Relation::Iff => {
            return Err(Error::Internal(
                "biconditional needs explicit evaluation".into(),
            ))
        }
    };
    Ok((holds, ord == Ordering::Equal))
}

fn connected_diameter(g: &Graph) -> Result<usize> {
    g.diameter()?.finite().ok_or(Error::Disconnected)
}

fn require_triangle_free_no_isolated(g: &Graph) -> Result<()> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !g.is_triangle_free() {
        return Err(Error::HasTriangle);
    }
    if let Some(v) = g.isolated_vertex() {
        return Err(Error::IsolatedVertex(v));
    }
    Ok(())
}

fn int(v: usize) -> i64 {
    v as i64
}

/// `|E(G)| <= floor(n^2/4)` with equality iff `G = K_{floor(n/2), ceil(n/2)}`.
///
/// `n` in {0, 1} is accepted: the right side is 0 and the edgeless graph
/// counts as `K_{0,n}`.
pub fn check_mantel(g: &Graph) -> Result<BoundCheck> {
    if !g.is_triangle_free() {
        return Err(Error::HasTriangle);
    }
    let n = g.n();
    let m = g.m();
    let mut check =
        BoundCheck::from_sides(BoundId::Mantel, m.into(), Relation::Le, (n * n / 4).into())?
            .ctx("n", n)
            .ctx("m", m);
    check.consistent = Some(check.tight == shape::is_balanced_complete_bipartite(g));
    Ok(check)
}

/// Open packing bound for triangle-free graphs without isolated vertices;
/// tight exactly on the family Ω.
pub fn check_thm2_open(g: &Graph) -> Result<BoundCheck> {
    require_triangle_free_no_isolated(g)?;
    let (n, m) = (int(g.n()), int(g.m()));
    let radicand = 4 * m - 2 * n + 1;
    if radicand < 0 {
        return Err(Error::Internal(format!(
            "negative radicand {radicand} with no isolated vertex"
        )));
    }
    let rho_o = open_packing_number(g)?;
    let rhs = Surd {
        int: n + 1,
        coeff: -1,
        radicand,
    };
    let split = g.edge_partition(rho_o.witness)?;
    let mut check = BoundCheck::from_sides(
        BoundId::Thm2Open,
        rho_o.value.into(),
        Relation::Le,
        Value::Surd(rhs),
    )?
    .ctx("n", n)
    .ctx("m", m)
    .ctx("edges_inside", split.inside)
    .ctx("edges_cross", split.cross)
    .ctx("edges_outside", split.outside);
    check.witness = Some(rho_o.witness);
    check.consistent = Some(check.tight == recognize_omega(g).member);
    Ok(check)
}

/// Packing bound for triangle-free graphs without isolated vertices; tight
/// exactly on the family Ω′.
pub fn check_thm2_pack(g: &Graph) -> Result<BoundCheck> {
    require_triangle_free_no_isolated(g)?;
    let (n, m) = (int(g.n()), int(g.m()));
    let rho = packing_number(g)?;
    let rhs = Surd {
        int: n + 2,
        coeff: -2,
        radicand: 1 + m,
    };
    let split = g.edge_partition(rho.witness)?;
    let mut check = BoundCheck::from_sides(
        BoundId::Thm2Pack,
        rho.value.into(),
        Relation::Le,
        Value::Surd(rhs),
    )?
    .ctx("n", n)
    .ctx("m", m)
    .ctx("edges_inside", split.inside)
    .ctx("edges_cross", split.cross)
    .ctx("edges_outside", split.outside);
    check.witness = Some(rho.witness);
    check.consistent = Some(check.tight == recognize_omega_prime(g).member);
    Ok(check)
}

/// `γ(G) >= ceil((diam + 1) / 3)` for connected graphs.
pub fn check_gamma_diameter(g: &Graph) -> Result<BoundCheck> {
    let diam = connected_diameter(g)?;
    let gamma = domination_number(g)?;
    let rhs = ceil_div(int(diam) + 1, 3);
    let mut check = BoundCheck::from_sides(
        BoundId::Eq11Gamma,
        gamma.value.into(),
        Relation::Ge,
        rhs.into(),
    )?
    .ctx("diam", diam);
    check.witness = Some(gamma.witness);
    Ok(check)
}

/// Every third vertex of `path` (k = 1), or the path minus every third
/// vertex starting from the third (k = 2).
pub fn diametral_witness(path: &[usize], k: usize) -> VertexSet {
    path.iter()
        .enumerate()
        .filter(|&(i, _)| if k == 1 { i % 3 == 0 } else { (i + 1) % 3 != 0 })
        .map(|(_, &v)| v)
        .collect()
}

/// `ceil((k diam + k) / 3) <= L_k(G)` for connected `G` and `k` in {1, 2}.
///
/// Also builds the witness from a diametral path and validates it; the
/// outcome lands in `consistent`.
pub fn check_prop3(g: &Graph, k: usize) -> Result<BoundCheck> {
    if !(1..=2).contains(&k) {
        return Err(Error::InvalidParams(format!("k must be 1 or 2, got {k}")));
    }
    let diam = connected_diameter(g)?;
    let lk = limited_packing_number(g, k)?;
    let kk = int(k);
    let lower = ceil_div(kk * int(diam) + kk, 3);
    let path = g.diametral_path()?;
    let witness = diametral_witness(&path, k);
    let valid = if k == 1 {
        is_packing(g, witness)?
    } else {
        is_k_limited_packing(g, witness, 2)?
    };
    let mut check = BoundCheck::from_sides(
        BoundId::Prop3Lk,
        lower.into(),
        Relation::Le,
        lk.value.into(),
    )?
    .ctx("k", k)
    .ctx("diam", diam)
    .ctx("witness_size", witness.len());
    check.consistent = Some(valid && int(witness.len()) == lower);
    check.witness = Some(witness);
    Ok(check)
}

/// `ρ(G) = 1` iff `diam(G) <= 2`, for connected graphs.
pub fn check_obs_rho1(g: &Graph) -> Result<BoundCheck> {
    let diam = connected_diameter(g)?;
    let rho = packing_number(g)?;
    let holds = (rho.value == 1) == (diam <= 2);
    Ok(BoundCheck {
        bound: BoundId::ObsRho1,
        lhs: rho.value.into(),
        relation: Relation::Iff,
        rhs: diam.into(),
        holds,
        tight: holds && rho.value == 1,
        consistent: None,
        clauses: Vec::new(),
        context: BTreeMap::from([
            ("diam".to_string(), int(diam)),
            ("rho".to_string(), int(rho.value)),
        ]),
        witness: Some(rho.witness),
    })
}

/// Nordhaus–Gaddum bounds for `ρ` when `G` and its complement are connected
/// and the larger diameter is at least 3.
///
/// With both diameters equal to 3 the clause is `ρ + ρ̄ = ρ ρ̄ = 4`; otherwise
/// the sum and product bounds in `M = max diam` and `Δ' = min Δ`. The
/// intermediate single-graph bound `ρ <= n - ceil((2 diam + 3Δ - 8)/3)` for the
/// graph of larger diameter is recorded in the context, not asserted.
pub fn check_thm4(g: &Graph) -> Result<BoundCheck> {
    let h = g.complement();
    let d = match g.diameter()? {
        Diameter::Finite(d) => d,
        Diameter::Infinite => return Err(Error::Disconnected),
    };
    let dc = h
        .diameter()?
        .finite()
        .ok_or(Error::ComplementDisconnected)?;
    let big_m = d.max(dc);
    if big_m < 3 {
        return Err(Error::DiameterTooSmall(big_m));
    }
    let n = int(g.n());
    let rho = packing_number(g)?.value;
    let rho_c = packing_number(&h)?.value;
    let delta = g.max_degree();
    let delta_c = h.max_degree();
    let delta_prime = delta.min(delta_c);
    let sum = rho + rho_c;
    let product = rho * rho_c;

    let (clauses, lhs, rhs) = if d == dc {
        if d != 3 {
            return Err(Error::Internal(format!(
                "G and complement both connected with diameter {d}"
            )));
        }
        let sum_clause = Clause::new("sum", sum.into(), Relation::Eq, 4usize.into())?;
        let product_clause = Clause::new("product", product.into(), Relation::Eq, 4usize.into())?;
        (
            vec![sum_clause, product_clause],
            Value::from(sum),
            Value::from(4usize),
        )
    } else {
        let mm = int(big_m);
        let dp = int(delta_prime);
        let sum_bound = n - ceil_div(2 * mm + 3 * dp - 11, 3);
        let product_bound = n - ceil_div(2 * mm + 3 * dp - 8, 3);
        let sum_clause = Clause::new("sum", sum.into(), Relation::Le, sum_bound.into())?;
        let product_clause = Clause::new(
            "product",
            product.into(),
            Relation::Le,
            product_bound.into(),
        )?;
        (
            vec![sum_clause, product_clause],
            Value::from(sum),
            Value::from(sum_bound),
        )
    };
    let holds = clauses.iter().all(|c| c.holds);
    let tight = clauses.iter().all(|c| c.tight);
    let relation = clauses[0].relation;

    // Intermediate bound for the graph realising M.
    let (far_diam, far_delta, far_rho) = if d >= dc {
        (d, delta, rho)
    } else {
        (dc, delta_c, rho_c)
    };
    let single_bound = n - ceil_div(2 * int(far_diam) + 3 * int(far_delta) - 8, 3);

    let mut check = BoundCheck {
        bound: BoundId::Thm4Ng,
        lhs,
        relation,
        rhs,
        holds,
        tight,
        consistent: None,
        clauses,
        context: BTreeMap::new(),
        witness: None,
    }
    .ctx("n", n)
    .ctx("diam", d)
    .ctx("diam_complement", dc)
    .ctx("max_diam", big_m)
    .ctx("max_degree", delta)
    .ctx("max_degree_complement", delta_c)
    .ctx("delta_prime", delta_prime)
    .ctx("rho", rho)
    .ctx("rho_complement", rho_c)
    .ctx("sum", sum)
    .ctx("product", product)
    .ctx("single_graph_bound", single_bound)
    .ctx(
        "single_graph_bound_holds",
        i64::from(int(far_rho) <= single_bound),
    );
    check
        .context
        .insert("both_diam_three".into(), i64::from(d == dc));
    Ok(check)
}

/// `ρₒ(G) <= n - Δ + 1` for connected graphs, tight iff `Δ = n - 1` and `δ = 1`.
pub fn check_lemma5(g: &Graph) -> Result<BoundCheck> {
    connected_diameter(g)?;
    let (delta, min_deg) = g.degree_extremes()?;
    let n = g.n();
    let rho_o = open_packing_number(g)?;
    let rhs = int(n) - int(delta) + 1;
    let mut check = BoundCheck::from_sides(
        BoundId::Lem5Open,
        rho_o.value.into(),
        Relation::Le,
        rhs.into(),
    )?
    .ctx("n", n)
    .ctx("max_degree", delta)
    .ctx("min_degree", min_deg);
    check.consistent = Some(check.tight == (delta + 1 == n && min_deg == 1));
    check.witness = Some(rho_o.witness);
    Ok(check)
}

/// `L_2(G) + L_2(complement) <= n + 2`; no connectivity requirement.
pub fn check_l2_ng(g: &Graph) -> Result<BoundCheck> {
    let h = g.complement();
    let a = limited_packing_number(g, 2)?.value;
    let b = limited_packing_number(&h, 2)?.value;
    let n = g.n();
    Ok(
        BoundCheck::from_sides(BoundId::L2Ng, (a + b).into(), Relation::Le, (n + 2).into())?
            .ctx("n", n)
            .ctx("l2", a)
            .ctx("l2_complement", b)
            .ctx("connected", i64::from(g.is_connected()?))
            .ctx("complement_connected", i64::from(h.is_connected()?)),
    )
}

/// Runs the checker for `bound`; `k` is used by [`BoundId::Prop3Lk`] only.
pub fn check(g: &Graph, bound: BoundId, k: usize) -> Result<BoundCheck> {
    match bound {
        BoundId::Mantel => check_mantel(g),
        BoundId::Thm2Open => check_thm2_open(g),
        BoundId::Thm2Pack => check_thm2_pack(g),
        BoundId::Eq11Gamma => check_gamma_diameter(g),
        BoundId::Prop3Lk => check_prop3(g, k),
        BoundId::ObsRho1 => check_obs_rho1(g),
        BoundId::Thm4Ng => check_thm4(g),
        BoundId::Lem5Open => check_lemma5(g),
        BoundId::L2Ng => check_l2_ng(g),
    }
}

#[cfg(test)]
mod tests;
