//! Checks every bound on all connected graphs up to a given order.
//!
//! `cargo run --release --example exhaustive_sweep -- 7`

use graphlab::corpus::{enumerate_connected_up_to, run_sweep, CheckId};

fn main() -> graphlab::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(6);
    let graphs = enumerate_connected_up_to(n)?;
    let report = run_sweep(&format!("connected-n{n}"), &graphs, &CheckId::ALL)?;
    println!("{}", report.summary());
    for f in &report.findings {
        println!(
            "finding {} {}: expected {}; observed {}",
            f.check, f.graph6, f.expected, f.observed
        );
    }
    for note in report.notes.iter().take(10) {
        println!("note {} {}: {}", note.check, note.graph6, note.message);
    }
    Ok(())
}
