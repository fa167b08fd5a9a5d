//! Exact computation of packing-type graph invariants and verification of their
//! extremal bounds over small graphs.
//!
//! The crate is organised in layers:
//!
//! - [`graph`]: bitset graphs on at most 64 vertices with the structural primitives
//!   (neighbourhoods, complement, diameter, cliques, shapes, canonical codes).
//! - [`solvers`]: exact `ρ`, `ρₒ`, `L_k` and `γ` by branch and bound, each paired with
//!   a brute-force oracle.
//! - [`bounds`]: one checker per inequality, returning a [`bounds::BoundCheck`]
//!   verdict with exact tightness detection.
//! - [`families`]: generators and recognisers for the extremal graph families.
//! - [`corpus`]: graph6 I/O, isomorphism-free enumeration of small graphs and the
//!   sweep harness.
//! - [`cli`]: the `graphlab` command line.
//!
//! ```
//! use graphlab::graph::Graph;
//! use graphlab::solvers::open_packing_number;
//!
//! let p4 = Graph::path(4).unwrap();
//! assert_eq!(open_packing_number(&p4).unwrap().value, 2);
//! ```

pub mod bounds;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod families;
pub mod graph;
pub mod solvers;

pub use error::{Error, Result};
pub use graph::{Diameter, Graph, VertexSet};
