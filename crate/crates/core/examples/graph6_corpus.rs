//! Writing and reading graph6 corpora.

use graphlab::corpus::{enumerate_connected, load_corpus, parse_graph6, to_graph6, write_corpus};
use graphlab::graph::canonical_code;
use graphlab::Graph;

fn main() -> graphlab::Result<()> {
    let graphs = enumerate_connected(5)?;
    let path = std::env::temp_dir().join("graphlab-connected-5.g6");
    write_corpus(&path, &graphs)?;
    let back = load_corpus(&path)?;
    println!("wrote and read {} graphs at {}", back.len(), path.display());
    assert_eq!(graphs, back);

    for g in back.iter().take(5) {
        println!("{}  n={} m={}", to_graph6(g)?, g.n(), g.m());
    }

    // Two labellings of P4 share a canonical code.
    let a = parse_graph6("Ch")?;
    let b = Graph::from_edges(4, &[(2, 0), (0, 3), (3, 1)])?;
    println!(
        "{} ~ {}: {}",
        to_graph6(&a)?,
        to_graph6(&b)?,
        canonical_code(&a)? == canonical_code(&b)?
    );
    Ok(())
}
