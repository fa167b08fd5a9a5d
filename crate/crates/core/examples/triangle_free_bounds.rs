//! Edge and packing bounds for triangle-free graphs, and the families that
//! meet them.

use graphlab::bounds::{check_mantel, check_thm2_open, check_thm2_pack};
use graphlab::families::{gen_omega, gen_omega_prime, recognize_omega, OmegaParams};
use graphlab::Graph;

fn main() -> graphlab::Result<()> {
    for g in [Graph::complete_bipartite(3, 4)?, Graph::cycle(7)?] {
        println!("{}\n", check_mantel(&g)?);
    }

    // K_{2,2} plus one K2: each side goes to a different end.
    let omega = gen_omega(&OmegaParams {
        t: 2,
        p: 1,
        attachment: vec![0, 0, 1, 1],
    })?;
    println!("Omega member, n={} m={}", omega.n(), omega.m());
    println!("{}\n", check_thm2_open(&omega)?);

    let prime = gen_omega_prime(&OmegaParams {
        t: 2,
        p: 2,
        attachment: vec![0, 0, 1, 1],
    })?;
    println!("Omega' member, n={} m={}", prime.n(), prime.m());
    println!("{}\n", check_thm2_pack(&prime)?);

    let c6 = Graph::cycle(6)?;
    println!("C6: {}", recognize_omega(&c6));
    println!("{}", check_thm2_open(&c6)?);
    Ok(())
}
