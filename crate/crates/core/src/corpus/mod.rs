//! graph6 serialization, small-graph enumeration and the sweep harness.

mod enumerate;
mod graph6;
mod io;
mod sweep;

pub use enumerate::{
    enumerate_all, enumerate_all_up_to, enumerate_connected, enumerate_connected_up_to, ALL_COUNTS,
    CONNECTED_COUNTS, ENUMERATE_MAX_N,
};
pub use graph6::{parse_graph6, to_graph6, Graph6Error, Graph6Record, GRAPH6_MAX_N};
pub use io::{load_corpus, load_corpus_records, write_corpus, write_report};
pub use sweep::{run_sweep, CheckId, Finding, Note, ReportRow, SweepReport, Tally, Verdict};
