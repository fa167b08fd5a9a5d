//! Isomorphism-free enumeration of small graphs.
//!
//! Level `n` is built from level `n - 1` by adding one vertex with every possible
//! neighbour set and keeping one canonical representative per class. Every
//! connected graph has a vertex whose removal leaves it connected, so growing
//! connected graphs by a vertex with at least one neighbour reaches every
//! connected class; allowing the empty neighbour set reaches every graph.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::{canon, canonical_code_with_cap, Graph, VertexSet};

/// Largest order the enumerator supports.
pub const ENUMERATE_MAX_N: usize = 8;

/// Number of connected graphs on `n = 1..=8` vertices up to isomorphism.
pub const CONNECTED_COUNTS: [usize; 8] = [1, 1, 2, 6, 21, 112, 853, 11117];

/// Number of graphs on `n = 1..=8` vertices up to isomorphism.
pub const ALL_COUNTS: [usize; 8] = [1, 2, 4, 11, 34, 156, 1044, 12346];

fn check_order(n: usize) -> Result<()> {
    if (1..=ENUMERATE_MAX_N).contains(&n) {
        Ok(())
    } else {
        Err(Error::InvalidParams(format!(
            "enumeration supports 1 <= n <= {ENUMERATE_MAX_N}, got {n}"
        )))
    }
}

fn grow(level: &[Graph], connected: bool) -> Vec<Graph> {
    let k = level.first().map_or(0, Graph::n);
    let first_mask = if connected { 1 } else { 0 };
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for g in level {
        for bits in first_mask..(1u64 << k) {
            let h = g
                .with_new_vertex(VertexSet::from_bits(bits))
                .expect("n stays within the bitset width");
            let canonical = canon::canonical_form(&h);
            let code = canonical_code_with_cap(&canonical, ENUMERATE_MAX_N).expect("n <= 8");
            if seen.insert(code.clone()) {
                out.push((code, canonical));
            }
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out.into_iter().map(|(_, g)| g).collect()
}

fn levels(n: usize, connected: bool) -> Result<Vec<Vec<Graph>>> {
    check_order(n)?;
    let mut levels = vec![vec![Graph::empty(1)?]];
    while levels.len() < n {
        let next = grow(levels.last().expect("non-empty"), connected);
        levels.push(next);
    }
    Ok(levels)
}

/// One representative per isomorphism class of connected graphs on `n` vertices.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    Ok(levels(n, true)?.pop().expect("n >= 1"))
}

/// Connected classes for every order `1..=n`, concatenated in order of size.
pub fn enumerate_connected_up_to(n: usize) -> Result<Vec<Graph>> {
    Ok(levels(n, true)?.into_iter().flatten().collect())
}

/// One representative per isomorphism class of all graphs on `n` vertices.
pub fn enumerate_all(n: usize) -> Result<Vec<Graph>> {
    Ok(levels(n, false)?.pop().expect("n >= 1"))
}

/// All classes for every order `1..=n`.
pub fn enumerate_all_up_to(n: usize) -> Result<Vec<Graph>> {
    Ok(levels(n, false)?.into_iter().flatten().collect())
}
