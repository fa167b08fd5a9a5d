use serde::{Deserialize, Serialize};

use super::{FamilyMembership, FamilyTag, Role};
use crate::error::{Error, Result};
use crate::graph::{canonical_code, clique_number, maximum_cliques, Graph, VertexSet};

/// `P4`, `P5`, `P6`, `C4`.
pub fn gen_pi1() -> Vec<Graph> {
    vec![
        Graph::path(4).expect("small"),
        Graph::path(5).expect("small"),
        Graph::path(6).expect("small"),
        Graph::cycle(4).expect("small"),
    ]
}

pub fn recognize_pi1(g: &Graph) -> FamilyMembership {
    let n = g.n();
    let plausible = (4..=6).contains(&n) && (g.m() == n - 1 || (n == 4 && g.m() == 4));
    let hit = plausible && {
        let code = canonical_code(g).expect("n <= 6");
        gen_pi1()
            .iter()
            .any(|h| canonical_code(h).expect("n <= 6") == code)
    };
    if hit {
        FamilyMembership::member(FamilyTag::Pi1, [])
    } else {
        FamilyMembership::non_member(FamilyTag::Pi1)
    }
}

/// The distinguished vertices of a `Π₂` member.
///
/// `s` is the maximum clique `S`. Family (a) uses `x` for the vertex of degree
/// `n - 1` and `y` for a pendant vertex; the other families use the names from
/// their definitions.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Pi2Roles {
    pub s: VertexSet,
    pub x: Option<usize>,
    pub y: Option<usize>,
    pub z: Option<usize>,
    pub w: Option<usize>,
    pub t: Option<usize>,
}

impl Pi2Roles {
    fn to_membership(self, tag: FamilyTag) -> FamilyMembership {
        let mut roles = vec![("S", Role::Set(self.s))];
        for (name, v) in [
            ("x", self.x),
            ("y", self.y),
            ("z", self.z),
            ("w", self.w),
            ("t", self.t),
        ] {
            if let Some(v) = v {
                roles.push((name, Role::Vertex(v)));
            }
        }
        FamilyMembership::member(tag, roles)
    }

    /// The non-clique roles `y, z, w, t` that are set, if they are distinct.
    fn extras(&self) -> Option<VertexSet> {
        let mut set = VertexSet::default();
        let mut count = 0;
        for v in [self.y, self.z, self.w, self.t].into_iter().flatten() {
            set.insert(v);
            count += 1;
        }
        (set.len() == count).then_some(set)
    }
}

/// Clique size `omega` and a vertex `x` of the clique, plus the clique
/// neighbours of the added vertex `y`. Shared by families (d) through (i).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Anchored {
    pub omega: usize,
    pub x: usize,
    pub y_neighbors: VertexSet,
}

/// Parameters for each `Π₂` family. The clique `S` is always `0..omega`; the
/// added vertices follow in the order `y, z, w, t` (family (a): `q`, then the
/// pendant vertex).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Pi2Params {
    /// Vertex `0` is joined to everything. `q` is joined to `0` and to
    /// `q_neighbors`, a subset of `1..omega` missing at least one vertex.
    A {
        omega: usize,
        q_neighbors: VertexSet,
    },
    /// Vertex `omega + i` is joined to `attachments[i]`; `matching` pairs up
    /// some of these vertices (indices relative to `omega`).
    B {
        omega: usize,
        attachments: Vec<VertexSet>,
        matching: Vec<(usize, usize)>,
    },
    C {
        omega: usize,
        y_neighbors: VertexSet,
    },
    D(Anchored),
    E(Anchored),
    F(Anchored),
    G(Anchored),
    H(Anchored),
    I(Anchored),
    J {
        omega: usize,
        x: usize,
        z_neighbors: VertexSet,
    },
}

impl Pi2Params {
    pub fn tag(&self) -> FamilyTag {
        match self {
            Pi2Params::A { .. } => FamilyTag::Pi2A,
            Pi2Params::B { .. } => FamilyTag::Pi2B,
            Pi2Params::C { .. } => FamilyTag::Pi2C,
            Pi2Params::D(_) => FamilyTag::Pi2D,
            Pi2Params::E(_) => FamilyTag::Pi2E,
            Pi2Params::F(_) => FamilyTag::Pi2F,
            Pi2Params::G(_) => FamilyTag::Pi2G,
            Pi2Params::H(_) => FamilyTag::Pi2H,
            Pi2Params::I(_) => FamilyTag::Pi2I,
            Pi2Params::J { .. } => FamilyTag::Pi2J,
        }
    }

    fn omega(&self) -> usize {
        match self {
            Pi2Params::A { omega, .. }
            | Pi2Params::B { omega, .. }
            | Pi2Params::C { omega, .. } => *omega,
            Pi2Params::J { omega, .. } => *omega,
            Pi2Params::D(a)
            | Pi2Params::E(a)
            | Pi2Params::F(a)
            | Pi2Params::G(a)
            | Pi2Params::H(a)
            | Pi2Params::I(a) => a.omega,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pi2Instance {
    pub tag: FamilyTag,
    pub graph: Graph,
    pub roles: Pi2Roles,
}

fn join(g: &mut Graph, v: usize, set: VertexSet) {
    for u in set {
        g.add_edge(v, u);
    }
}

/// Builds a member of the requested `Π₂` family and re-validates it.
pub fn gen_pi2(params: &Pi2Params) -> Result<Pi2Instance> {
    let omega = params.omega();
    if omega < 3 {
        return Err(Error::InvalidParams(format!(
            "omega must be at least 3, got {omega}"
        )));
    }
    let clique = VertexSet::full(omega);
    let check_in_clique = |set: VertexSet, what: &str| -> Result<()> {
        if set.is_subset(clique) {
            Ok(())
        } else {
            Err(Error::InvalidParams(format!(
                "{what} {set} not inside 0..{omega}"
            )))
        }
    };
    let extra = match params {
        Pi2Params::A { .. } => 2,
        Pi2Params::B { attachments, .. } => attachments.len(),
        Pi2Params::C { .. } => 1,
        Pi2Params::D(_) | Pi2Params::E(_) | Pi2Params::F(_) | Pi2Params::J { .. } => 2,
        Pi2Params::G(_) | Pi2Params::H(_) => 3,
        Pi2Params::I(_) => 4,
    };
    let mut g = Graph::complete(omega)?;
    for _ in 0..extra {
        g = g.with_new_vertex(VertexSet::default())?;
    }
    let (y, z, w) = (omega, omega + 1, omega + 2);
    let mut roles = Pi2Roles {
        s: clique,
        ..Pi2Roles::default()
    };
    match params {
        Pi2Params::A { q_neighbors, .. } => {
            check_in_clique(*q_neighbors, "q_neighbors")?;
            if q_neighbors.contains(0) {
                return Err(Error::InvalidParams(
                    "q_neighbors must not contain the apex 0".into(),
                ));
            }
            join(&mut g, y, q_neighbors.with(0));
            g.add_edge(z, 0);
            roles.x = Some(0);
            roles.y = Some(z);
        }
        Pi2Params::B {
            attachments,
            matching,
            ..
        } => {
            for (i, &att) in attachments.iter().enumerate() {
                check_in_clique(att, "attachment")?;
                join(&mut g, omega + i, att);
            }
            for &(a, b) in matching {
                if a >= extra || b >= extra || a == b {
                    return Err(Error::InvalidParams(format!(
                        "bad matching pair ({a}, {b})"
                    )));
                }
                g.add_edge(omega + a, omega + b);
            }
        }
        Pi2Params::C { y_neighbors, .. } => {
            check_in_clique(*y_neighbors, "y_neighbors")?;
            join(&mut g, y, *y_neighbors);
            roles.y = Some(y);
        }
        Pi2Params::D(a)
        | Pi2Params::E(a)
        | Pi2Params::F(a)
        | Pi2Params::G(a)
        | Pi2Params::H(a)
        | Pi2Params::I(a) => {
            check_in_clique(a.y_neighbors, "y_neighbors")?;
            if a.x >= omega {
                return Err(Error::InvalidParams(format!(
                    "x = {} not inside 0..{omega}",
                    a.x
                )));
            }
            let x = a.x;
            join(&mut g, y, a.y_neighbors);
            roles.x = Some(x);
            roles.y = Some(y);
            roles.z = Some(z);
            match params {
                Pi2Params::D(_) => g.add_edge(z, x),
                Pi2Params::F(_) => {
                    g.add_edge(y, z);
                    g.add_edge(z, x);
                }
                _ => g.add_edge(y, z),
            }
            if matches!(params, Pi2Params::H(_) | Pi2Params::I(_)) {
                g.add_edge(z, w);
                roles.w = Some(w);
            }
            let t = match params {
                Pi2Params::G(_) => Some(omega + 2),
                Pi2Params::I(_) => Some(omega + 3),
                _ => None,
            };
            if let Some(t) = t {
                g.add_edge(t, x);
                roles.t = Some(t);
            }
        }
        Pi2Params::J { x, z_neighbors, .. } => {
            check_in_clique(*z_neighbors, "z_neighbors")?;
            if !z_neighbors.contains(*x) {
                return Err(Error::InvalidParams("z_neighbors must contain x".into()));
            }
            join(&mut g, z, *z_neighbors);
            g.add_edge(y, z);
            roles.x = Some(*x);
            roles.y = Some(y);
            roles.z = Some(z);
        }
    }
    let tag = params.tag();
    if !validate_pi2_roles(&g, tag, &roles) {
        return Err(Error::InvalidParams(format!(
            "parameters do not produce a {tag} member: {params:?}"
        )));
    }
    Ok(Pi2Instance {
        tag,
        graph: g,
        roles,
    })
}

struct Ctx<'a> {
    g: &'a Graph,
    omega: usize,
}

impl<'a> Ctx<'a> {
    /// `None` unless `g` is connected with `n >= 3` and `ω >= 3`.
    fn new(g: &'a Graph) -> Option<Self> {
        if g.n() < 3 || !g.is_connected().ok()? {
            return None;
        }
        let (omega, _) = clique_number(g).ok()?;
        (omega >= 3).then_some(Ctx { g, omega })
    }

    fn check(&self, tag: FamilyTag, r: &Pi2Roles, loose_h: bool) -> bool {
        let g = self.g;
        let s = r.s;
        if s.len() != self.omega || !s.is_subset(g.vertices()) {
            return false;
        }
        if !s.iter().all(|v| s.without(v).is_subset(g.nbr(v))) {
            return false;
        }
        let rest = g.vertices().difference(s);
        let nb = |v: usize| g.nbr(v);
        let blanket = s.iter().all(|v| nb(v).intersection(rest).len() <= 1);
        let Some(extras) = r.extras() else {
            return false;
        };
        let only = |roles: &[Option<usize>]| -> Option<Vec<usize>> {
            let vs: Option<Vec<usize>> = roles.iter().copied().collect();
            let vs = vs?;
            (vs.iter().copied().collect::<VertexSet>() == rest && extras == rest).then_some(vs)
        };
        let x_in_s = r.x.filter(|&x| s.contains(x));
        let set = |vs: &[usize]| -> VertexSet { vs.iter().copied().collect() };

        // y outside S, not adjacent to x, adjacent to z, with a neighbour in S.
        let e_core = |x: usize, y: usize, z: usize| -> bool {
            !g.has_edge(x, y) && g.has_edge(y, z) && !nb(y).intersection(s).is_empty()
        };

        match tag {
            FamilyTag::Pi2A => {
                let n = g.n();
                let (max, min) = (g.max_degree(), g.min_degree());
                let (Some(x), Some(y)) = (x_in_s, r.y) else {
                    return false;
                };
                min == 1
                    && max == n - 1
                    && max == self.omega + 1
                    && g.degree(x) == n - 1
                    && !s.contains(y)
                    && g.degree(y) == 1
                    && r.z.is_none()
                    && r.w.is_none()
                    && r.t.is_none()
            }
            FamilyTag::Pi2B => {
                !rest.is_empty()
                    && extras.is_empty()
                    && r.x.is_none()
                    && rest.iter().all(|v| nb(v).intersection(rest).len() <= 1)
                    && blanket
            }
            FamilyTag::Pi2C => {
                r.x.is_none()
                    && only(&[r.y]).is_some_and(|v| nb(v[0]).intersection(s).len() >= 2)
                    && blanket
            }
            FamilyTag::Pi2D => {
                let (Some(x), Some(vs)) = (x_in_s, only(&[r.y, r.z])) else {
                    return false;
                };
                let (y, z) = (vs[0], vs[1]);
                !nb(y).is_empty() && nb(y).is_subset(s.without(x)) && nb(z) == set(&[x]) && blanket
            }
            FamilyTag::Pi2E | FamilyTag::Pi2F => {
                let (Some(x), Some(vs)) = (x_in_s, only(&[r.y, r.z])) else {
                    return false;
                };
                let (y, z) = (vs[0], vs[1]);
                let z_nb = if tag == FamilyTag::Pi2E {
                    set(&[y])
                } else {
                    set(&[x, y])
                };
                e_core(x, y, z) && nb(z) == z_nb && blanket
            }
            FamilyTag::Pi2G => {
                let (Some(x), Some(vs)) = (x_in_s, only(&[r.y, r.z, r.t])) else {
                    return false;
                };
                let (y, z, t) = (vs[0], vs[1], vs[2]);
                e_core(x, y, z) && nb(z) == set(&[y]) && nb(t) == set(&[x]) && blanket
            }
            FamilyTag::Pi2H | FamilyTag::Pi2I => {
                let roles: &[Option<usize>] = if tag == FamilyTag::Pi2H {
                    &[r.y, r.z, r.w]
                } else {
                    &[r.y, r.z, r.w, r.t]
                };
                let (Some(x), Some(vs)) = (x_in_s, only(roles)) else {
                    return false;
                };
                let (y, z, w) = (vs[0], vs[1], vs[2]);
                let t_ok = vs.get(3).map_or(true, |&t| nb(t) == set(&[x]));
                let zw = if loose_h && tag == FamilyTag::Pi2H {
                    nb(z).intersection(s).is_empty() && nb(w).intersection(s).is_empty()
                } else {
                    nb(z) == set(&[y, w]) && nb(w) == set(&[z])
                };
                e_core(x, y, z) && zw && t_ok && blanket
            }
            FamilyTag::Pi2J => {
                let (Some(x), Some(vs)) = (x_in_s, only(&[r.y, r.z])) else {
                    return false;
                };
                let (y, z) = (vs[0], vs[1]);
                g.has_edge(y, z) && g.has_edge(x, z) && nb(y).intersection(s).is_empty() && blanket
            }
            _ => false,
        }
    }

    /// First role assignment (in a fixed order) satisfying `tag` for clique `s`.
    fn find(&self, tag: FamilyTag, s: VertexSet, loose_h: bool) -> Option<Pi2Roles> {
        let g = self.g;
        let rest = g.vertices().difference(s).to_vec();
        let base = Pi2Roles {
            s,
            ..Pi2Roles::default()
        };
        let try_roles = |r: Pi2Roles| self.check(tag, &r, loose_h).then_some(r);
        match tag {
            FamilyTag::Pi2A => {
                let x = s.iter().find(|&v| g.degree(v) + 1 == g.n())?;
                let y = (0..g.n()).find(|&v| g.degree(v) == 1)?;
                try_roles(Pi2Roles {
                    x: Some(x),
                    y: Some(y),
                    ..base
                })
            }
            FamilyTag::Pi2B => try_roles(base),
            FamilyTag::Pi2C => (rest.len() == 1).then(|| {
                try_roles(Pi2Roles {
                    y: Some(rest[0]),
                    ..base
                })
            })?,
            _ => {
                let names: &[char] = match tag {
                    FamilyTag::Pi2D | FamilyTag::Pi2E | FamilyTag::Pi2F | FamilyTag::Pi2J => {
                        &['y', 'z']
                    }
                    FamilyTag::Pi2G => &['y', 'z', 't'],
                    FamilyTag::Pi2H => &['y', 'z', 'w'],
                    FamilyTag::Pi2I => &['y', 'z', 'w', 't'],
                    _ => return None,
                };
                if rest.len() != names.len() {
                    return None;
                }
                for perm in permutations(&rest) {
                    for x in s {
                        let mut r = Pi2Roles { x: Some(x), ..base };
                        for (&name, &v) in names.iter().zip(&perm) {
                            match name {
                                'y' => r.y = Some(v),
                                'z' => r.z = Some(v),
                                'w' => r.w = Some(v),
                                _ => r.t = Some(v),
                            }
                        }
                        if let Some(r) = try_roles(r) {
                            return Some(r);
                        }
                    }
                }
                None
            }
        }
    }

    fn recognize(&self, tag: FamilyTag, loose_h: bool) -> Option<Pi2Roles> {
        let cliques = maximum_cliques(self.g).ok()?;
        cliques.into_iter().find_map(|s| self.find(tag, s, loose_h))
    }
}

/// All orderings of `items`, in lexicographic order of positions.
fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

/// Re-checks the defining conditions of `tag` on explicit roles. Requires `g`
/// connected with `n >= 3`, `ω(g) >= 3` and `roles.s` a maximum clique.
pub fn validate_pi2_roles(g: &Graph, tag: FamilyTag, roles: &Pi2Roles) -> bool {
    Ctx::new(g).is_some_and(|ctx| ctx.check(tag, roles, false))
}

/// Every `Π₂` family containing `g`, each with one certifying role
/// assignment. Empty unless `g` is connected, `n >= 3` and `ω >= 3`.
///
/// Each family is tried against every maximum clique `S`. Family (h) uses the
/// figure reading: `w` is a pendant vertex on `z`.
pub fn recognize_pi2(g: &Graph) -> Vec<FamilyMembership> {
    let Some(ctx) = Ctx::new(g) else {
        return Vec::new();
    };
    FamilyTag::PI2
        .into_iter()
        .filter_map(|tag| ctx.recognize(tag, false).map(|r| r.to_membership(tag)))
        .collect()
}

/// Family (h) under the looser prose reading, where `w` only has to avoid `S`.
/// Graphs matching this but not [`recognize_pi2`]'s (h) are worth logging.
pub fn recognize_pi2_loose_h(g: &Graph) -> FamilyMembership {
    Ctx::new(g)
        .and_then(|ctx| ctx.recognize(FamilyTag::Pi2H, true))
        .map_or_else(
            || FamilyMembership::non_member(FamilyTag::Pi2H),
            |r| r.to_membership(FamilyTag::Pi2H),
        )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solvers::open_packing_number;

    fn vs(items: &[usize]) -> VertexSet {
        items.iter().copied().collect()
    }

    fn anchored(omega: usize, x: usize, y: &[usize]) -> Anchored {
        Anchored {
            omega,
            x,
            y_neighbors: vs(y),
        }
    }

    fn tags(g: &Graph) -> Vec<FamilyTag> {
        recognize_pi2(g).into_iter().map(|m| m.tag).collect()
    }

    fn tight(g: &Graph) -> bool {
        let (omega, _) = clique_number(g).unwrap();
        open_packing_number(g).unwrap().value + omega == g.n()
    }

    #[test]
    fn pi1_members() {
        let graphs = gen_pi1();
        assert_eq!(graphs.len(), 4);
        for g in &graphs {
            assert!(recognize_pi1(g).member);
            assert!(tight(g));
        }
        assert!(!recognize_pi1(&Graph::path(7).unwrap()).member);
        assert!(!recognize_pi1(&Graph::star(3).unwrap()).member);
    }

    #[test]
    fn diamond_is_c() {
        let inst = gen_pi2(&Pi2Params::C {
            omega: 3,
            y_neighbors: vs(&[0, 1]),
        })
        .unwrap();
        assert_eq!((inst.graph.n(), inst.graph.m()), (4, 5));
        assert!(tight(&inst.graph));
        assert!(tags(&inst.graph).contains(&FamilyTag::Pi2C));
    }

    #[test]
    fn family_a_has_two_extra_vertices() {
        let inst = gen_pi2(&Pi2Params::A {
            omega: 4,
            q_neighbors: vs(&[1]),
        })
        .unwrap();
        let g = &inst.graph;
        assert_eq!(g.n(), 6);
        assert_eq!(g.max_degree(), 5);
        assert_eq!(g.min_degree(), 1);
        assert!(tight(g));
        assert!(tags(g).contains(&FamilyTag::Pi2A));
        assert!(gen_pi2(&Pi2Params::A {
            omega: 4,
            q_neighbors: vs(&[1, 2, 3])
        })
        .is_err());
    }

    #[test]
    fn k4_plus_pendant_is_not_a() {
        let g = Graph::complete(4)
            .unwrap()
            .with_new_vertex(vs(&[0]))
            .unwrap();
        assert!(!tags(&g).contains(&FamilyTag::Pi2A));
    }

    #[test]
    fn k5_matches_nothing() {
        assert!(tags(&Graph::complete(5).unwrap()).is_empty());
    }

    #[test]
    fn j_example() {
        let inst = gen_pi2(&Pi2Params::J {
            omega: 3,
            x: 0,
            z_neighbors: vs(&[0]),
        })
        .unwrap();
        assert_eq!(inst.graph.n(), 5);
        assert_eq!(open_packing_number(&inst.graph).unwrap().value, 2);
        assert!(tags(&inst.graph).contains(&FamilyTag::Pi2J));
    }

    #[test]
    fn anchored_families_round_trip() {
        let a = anchored(4, 0, &[1, 2]);
        let all = [
            Pi2Params::D(a.clone()),
            Pi2Params::E(a.clone()),
            Pi2Params::F(a.clone()),
            Pi2Params::G(a.clone()),
            Pi2Params::H(a.clone()),
            Pi2Params::I(a),
        ];
        for p in &all {
            let inst = gen_pi2(p).unwrap();
            assert!(
                validate_pi2_roles(&inst.graph, inst.tag, &inst.roles),
                "{:?}",
                p.tag()
            );
            assert!(tags(&inst.graph).contains(&inst.tag), "{:?}", p.tag());
            assert!(tight(&inst.graph), "{:?}", p.tag());
        }
    }

    #[test]
    fn invalid_parameters() {
        assert!(gen_pi2(&Pi2Params::C {
            omega: 2,
            y_neighbors: vs(&[0, 1])
        })
        .is_err());
        assert!(gen_pi2(&Pi2Params::C {
            omega: 3,
            y_neighbors: vs(&[0])
        })
        .is_err());
        assert!(gen_pi2(&Pi2Params::C {
            omega: 3,
            y_neighbors: vs(&[0, 1, 2])
        })
        .is_err());
        assert!(gen_pi2(&Pi2Params::D(anchored(3, 0, &[0, 1]))).is_err());
        assert!(gen_pi2(&Pi2Params::E(anchored(3, 0, &[]))).is_err());
        assert!(gen_pi2(&Pi2Params::J {
            omega: 3,
            x: 0,
            z_neighbors: vs(&[1])
        })
        .is_err());
    }

    #[test]
    fn loose_h_reading_accepts_w_on_y() {
        // y on S, z and w both hanging from y.
        let mut g = Graph::complete(3).unwrap();
        g = g.with_new_vertex(vs(&[1])).unwrap();
        g = g.with_new_vertex(vs(&[3])).unwrap();
        g = g.with_new_vertex(vs(&[3])).unwrap();
        assert!(!tags(&g).contains(&FamilyTag::Pi2H));
        assert!(recognize_pi2_loose_h(&g).member);
    }

    #[test]
    fn permutations_are_complete() {
        assert_eq!(permutations(&[1, 2, 3]).len(), 6);
        assert_eq!(permutations(&[5]), vec![vec![5]]);
    }
}
