//! Which connected graphs have open packing number n - omega, and how the
//! structural characterization compares with the solver.

use graphlab::families::{gen_pi2, recognize_pi2, verify_theorem6, Anchored, FamilyTag, Pi2Params};
use graphlab::{Graph, VertexSet};

fn main() -> graphlab::Result<()> {
    let s = |v: &[usize]| v.iter().copied().collect::<VertexSet>();
    let samples = [
        Pi2Params::C {
            omega: 4,
            y_neighbors: s(&[0, 1]),
        },
        Pi2Params::E(Anchored {
            omega: 4,
            x: 0,
            y_neighbors: s(&[1, 2]),
        }),
        Pi2Params::H(Anchored {
            omega: 3,
            x: 0,
            y_neighbors: s(&[1]),
        }),
        Pi2Params::J {
            omega: 3,
            x: 0,
            z_neighbors: s(&[0, 1]),
        },
    ];
    for params in &samples {
        let inst = gen_pi2(params)?;
        let v = verify_theorem6(&inst.graph)?;
        println!(
            "{}: n={} omega={} rho_o={} agree={} recognized as {}",
            inst.tag,
            v.n,
            v.omega,
            v.rho_o,
            v.agree,
            tags(&v.families)
        );
    }

    // The claw: rho_o = n - omega, yet it is in neither family.
    let claw = Graph::star(3)?;
    let v = verify_theorem6(&claw)?;
    println!(
        "claw: rho_o={} n-omega={} families=[{}] agree={}",
        v.rho_o,
        v.n - v.omega,
        tags(&v.families),
        v.agree
    );

    // A clique with a single pendant vertex.
    let mut edges: Vec<(usize, usize)> = Graph::complete(4)?.edges().collect();
    edges.push((0, 4));
    let g = Graph::from_edges(5, &edges)?;
    let v = verify_theorem6(&g)?;
    println!(
        "K4 + pendant: rho_o={} n-omega={} agree={}",
        v.rho_o,
        v.n - v.omega,
        v.agree
    );
    for m in recognize_pi2(&g) {
        println!("  {m}");
    }
    Ok(())
}

fn tags(families: &[FamilyTag]) -> String {
    families
        .iter()
        .map(|t| t.as_str())
        .collect::<Vec<_>>()
        .join(", ")
}
