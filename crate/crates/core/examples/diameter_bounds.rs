//! Lower bounds on limited packings and domination from a diametral path.

use graphlab::bounds::{check_gamma_diameter, check_obs_rho1, check_prop3, diametral_witness};
use graphlab::Graph;

fn main() -> graphlab::Result<()> {
    let g = Graph::path(10)?;
    let path = g.diametral_path()?;
    println!("diametral path {path:?}");
    for k in [1, 2] {
        println!("k={k}: witness {}", diametral_witness(&path, k));
        println!("{}\n", check_prop3(&g, k)?);
    }
    println!("{}\n", check_gamma_diameter(&g)?);

    for (name, g) in [("C5", Graph::cycle(5)?), ("P5", Graph::path(5)?)] {
        let c = check_obs_rho1(&g)?;
        println!("{name}: rho=1 iff diam<=2 holds={}", c.holds);
    }
    Ok(())
}
