use std::fs;
use std::io::{BufWriter, Write};
use std::path::Path;

use serde::Serialize;

use super::graph6::{parse_graph6, to_graph6, Graph6Record};
use super::sweep::SweepReport;
use crate::error::{Error, Result};
use crate::graph::Graph;

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> Error + '_ {
    move |source| Error::Io {
        path: path.to_path_buf(),
        source,
    }
}

/// Reads a corpus file: one graph6 string per line, blank lines and lines
/// starting with `#` ignored.
pub fn load_corpus_records(path: &Path) -> Result<Vec<Graph6Record>> {
    let text = fs::read_to_string(path).map_err(io_err(path))?;
    let source = path.display().to_string();
    Ok(text
        .lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'))
        .map(|(line, text)| Graph6Record {
            text: text.to_string(),
            source: source.clone(),
            line,
        })
        .collect())
}

/// Loads and decodes a corpus file. The first malformed line is an error
/// naming the file and line.
pub fn load_corpus(path: &Path) -> Result<Vec<Graph>> {
    load_corpus_records(path)?
        .into_iter()
        .map(|r| {
            parse_graph6(&r.text).map_err(|source| Error::CorpusLine {
                path: path.to_path_buf(),
                line: r.line,
                source,
            })
        })
        .collect()
}

pub fn write_corpus(path: &Path, graphs: &[Graph]) -> Result<()> {
    let file = fs::File::create(path).map_err(io_err(path))?;
    let mut out = BufWriter::new(file);
    for g in graphs {
        writeln!(out, "{}", to_graph6(g)?).map_err(io_err(path))?;
    }
    out.flush().map_err(io_err(path))
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum Line<'a, H, R, F, N> {
    Header(&'a H),
    Row(&'a R),
    Finding(&'a F),
    Note(&'a N),
}

/// Writes the report as JSON lines: a header with the tallies, one row per
/// (graph, check) pair, then the findings and notes. Runtime is left out so
/// equal inputs give byte-identical files.
pub fn write_report(report: &SweepReport, path: &Path) -> Result<()> {
    let file = fs::File::create(path).map_err(io_err(path))?;
    let mut out = BufWriter::new(file);
    render_report(report, &mut out).map_err(io_err(path))?;
    out.flush().map_err(io_err(path))
}

pub(crate) fn render_report(report: &SweepReport, out: &mut impl Write) -> std::io::Result<()> {
    type L<'a> = Line<'a, super::sweep::Header, super::ReportRow, super::Finding, super::Note>;
    let header = report.header();
    let mut emit = |line: &L<'_>| -> std::io::Result<()> {
        serde_json::to_writer(&mut *out, line)?;
        out.write_all(b"\n")
    };
    emit(&Line::Header(&header))?;
    for row in &report.rows {
        emit(&Line::Row(row))?;
    }
    for f in &report.findings {
        emit(&Line::Finding(f))?;
    }
    for n in &report.notes {
        emit(&Line::Note(n))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.g6");
        let graphs = vec![
            Graph::path(4).unwrap(),
            Graph::complete(4).unwrap(),
            Graph::empty(1).unwrap(),
        ];
        write_corpus(&path, &graphs).unwrap();
        assert_eq!(load_corpus(&path).unwrap(), graphs);
    }

    #[test]
    fn comments_and_blank_lines() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.g6");
        fs::write(&path, "# header\n\nCh\n  C~  \n# end\n").unwrap();
        let records = load_corpus_records(&path).unwrap();
        assert_eq!(records.len(), 2);
        assert_eq!((records[0].line, records[1].line), (3, 4));
        assert_eq!(load_corpus(&path).unwrap().len(), 2);
    }

    #[test]
    fn errors_carry_location() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.g6");
        fs::write(&path, "Ch\nC\n").unwrap();
        let err = load_corpus(&path).unwrap_err();
        assert!(matches!(err, Error::CorpusLine { line: 2, .. }), "{err}");
        let missing = dir.path().join("missing.g6");
        assert!(matches!(load_corpus(&missing), Err(Error::Io { .. })));
    }
}
