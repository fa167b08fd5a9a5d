//! Exact packing, open packing, limited packing and domination numbers.
//!
//! `cargo run --example compute_invariants -- 'Ch'` (any graph6 string).

use graphlab::corpus::parse_graph6;
use graphlab::solvers::{compute_report, solve, Invariant};
use graphlab::Graph;

fn main() -> graphlab::Result<()> {
    let graphs: Vec<(String, Graph)> = match std::env::args().nth(1) {
        Some(text) => vec![(text.clone(), parse_graph6(&text)?)],
        None => vec![
            ("P7".into(), Graph::path(7)?),
            ("C6".into(), Graph::cycle(6)?),
            ("Petersen".into(), petersen()?),
        ],
    };
    for (name, g) in graphs {
        let r = compute_report(&g)?;
        println!("{name}: n={} m={} diam={}", r.n, r.m, r.diameter);
        println!("  rho   = {} via {}", r.rho.value, r.rho.witness);
        println!("  rho_o = {} via {}", r.rho_o.value, r.rho_o.witness);
        println!("  L2    = {} via {}", r.l2.value, r.l2.witness);
        println!("  gamma = {} via {}", r.gamma.value, r.gamma.witness);
        println!("  omega = {} via {}", r.omega, r.omega_witness);
        let l3 = solve(&g, Invariant::LimitedPacking(3))?;
        println!("  L3    = {} via {}", l3.value, l3.witness);
    }
    Ok(())
}

fn petersen() -> graphlab::Result<Graph> {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::from_edges(10, &edges)
}
