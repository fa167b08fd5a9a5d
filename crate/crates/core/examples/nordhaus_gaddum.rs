//! Packing numbers of a graph and its complement.

use graphlab::bounds::{check_l2_ng, check_thm4};
use graphlab::families::gen_ng_sharp;
use graphlab::Graph;

fn main() -> graphlab::Result<()> {
    let p4 = Graph::path(4)?;
    let c = check_thm4(&p4)?;
    println!(
        "P4: rho + rho' = {}, rho * rho' = {}",
        c.context["sum"], c.context["product"]
    );
    println!("{}\n", check_l2_ng(&p4)?);

    let p7 = Graph::path(7)?;
    println!("{}\n", check_thm4(&p7)?);

    // Long diametral path with bushy ends: the single-graph bound is met.
    for (len_x, len_y) in [(3, 0), (6, 3)] {
        let h = gen_ng_sharp(3, len_x, len_y)?;
        println!(
            "sharp t=3 len_x={len_x} len_y={len_y}: n={} diam={} max_degree={} rho={} rho'={}",
            h.graph.n(),
            h.diam,
            h.max_degree,
            h.rho,
            h.rho_complement
        );
    }
    Ok(())
}
