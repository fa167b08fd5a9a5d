use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{ceil_div, Graph};
use crate::solvers::packing_number;

/// A graph built by [`gen_ng_sharp`] together with the quantities that make
/// it extremal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NgSharp {
    pub graph: Graph,
    /// Far ends of the two attached paths.
    pub x: usize,
    pub y: usize,
    pub diam: usize,
    pub max_degree: usize,
    pub rho: usize,
    pub rho_complement: usize,
}

#[derive(Serialize)]
struct Summary {
    n: usize,
    m: usize,
    x: usize,
    y: usize,
    diam: usize,
    max_degree: usize,
    rho: usize,
    rho_complement: usize,
}

impl Serialize for NgSharp {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        Summary {
            n: self.graph.n(),
            m: self.graph.m(),
            x: self.x,
            y: self.y,
            diam: self.diam,
            max_degree: self.max_degree,
            rho: self.rho,
            rho_complement: self.rho_complement,
        }
        .serialize(s)
    }
}

/// Star `K_{1,t}` with centre `0` and leaves `1..=t`, a path of length `len_x`
/// hanging from leaf `1` and a path of length `len_y` hanging from leaf `2`.
///
/// A path of length `l` has `l + 1` vertices; the one nearest the star is
/// joined to the leaf. With `len_y = 0` there is no second path and `y` is
/// leaf `2` itself. No edges are added among the leaves, so leaves `1`, `2` are
/// non-adjacent and leaf `3` is adjacent to neither.
///
/// The result is checked against `ρ(H) = n - ceil((2 diam + 3Δ - 8) / 3)` and
/// `ρ(complement) = 1`; a mismatch is a [`Error::Verification`].
pub fn gen_ng_sharp(t: usize, len_x: usize, len_y: usize) -> Result<NgSharp> {
    if t < 3 {
        return Err(Error::InvalidParams(format!(
            "t must be at least 3, got {t}"
        )));
    }
    if len_x < 3 || len_x % 3 != 0 {
        return Err(Error::InvalidParams(format!(
            "len_x must be a positive multiple of 3, got {len_x}"
        )));
    }
    if len_y > len_x {
        return Err(Error::InvalidParams(format!(
            "len_y = {len_y} exceeds len_x = {len_x}"
        )));
    }
    let path_y = if len_y == 0 { 0 } else { len_y + 1 };
    let n = 1 + t + (len_x + 1) + path_y;
    let mut g = Graph::empty(n)?;
    for leaf in 1..=t {
        g.add_edge(0, leaf);
    }
    let attach = |g: &mut Graph, leaf: usize, start: usize, count: usize| -> usize {
        let mut prev = leaf;
        for v in start..start + count {
            g.add_edge(prev, v);
            prev = v;
        }
        prev
    };
    let x = attach(&mut g, 1, t + 1, len_x + 1);
    let y = attach(&mut g, 2, t + len_x + 2, path_y);

    let diam = g.diameter()?.finite().ok_or(Error::Disconnected)?;
    let max_degree = g.max_degree();
    let rho = packing_number(&g)?.value;
    let rho_complement = packing_number(&g.complement())?.value;
    let expected = n as i64 - ceil_div(2 * diam as i64 + 3 * max_degree as i64 - 8, 3);
    if rho as i64 != expected || rho_complement != 1 {
        return Err(Error::Verification(format!(
            "rho = {rho} (expected {expected}), rho(complement) = {rho_complement} (expected 1)"
        )));
    }
    Ok(NgSharp {
        graph: g,
        x,
        y,
        diam,
        max_degree,
        rho,
        rho_complement,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_instances() {
        let h = gen_ng_sharp(3, 3, 1).unwrap();
        assert_eq!(h.graph.n(), 10);
        assert_eq!((h.diam, h.max_degree, h.rho), (8, 3, 4));
        let h = gen_ng_sharp(3, 3, 0).unwrap();
        assert_eq!(h.y, 2);
    }

    #[test]
    fn preconditions() {
        assert!(gen_ng_sharp(3, 4, 0).is_err());
        assert!(gen_ng_sharp(2, 3, 0).is_err());
        assert!(gen_ng_sharp(3, 3, 4).is_err());
        assert!(gen_ng_sharp(3, 0, 0).is_err());
    }

    #[test]
    fn larger_instances() {
        for t in 3..=5 {
            for len_x in [3, 6] {
                for len_y in 0..=len_x {
                    gen_ng_sharp(t, len_x, len_y).unwrap();
                }
            }
        }
    }
}
