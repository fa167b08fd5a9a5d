//! The `graphlab` command line.
//!
//! ```text
//! graphlab compute Ch --witness
//! graphlab bounds Ch --check THM4_NG
//! graphlab family --edges 0-1,1-2,0-2,0-3,1-3
//! graphlab verify --enumerate 6 --check all --report sweep.jsonl
//! graphlab gen --family omega --t 1 --p 1 --attach 0:0,1:1
//! ```
//!
//! Exit status is 0 on success, 1 when a bound or sweep produced findings and
//! 2 on usage, parse or I/O errors. `GRAPHLAB_MAX_N` (default 24) caps the
//! order of graphs handed to the exact solvers.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value as Json};

use crate::bounds::{self, BoundCheck, BoundId};
use crate::corpus::{
    enumerate_all_up_to, enumerate_connected_up_to, load_corpus, parse_graph6, run_sweep,
    to_graph6, write_report, CheckId,
};
use crate::error::{Error, Result};
use crate::families::{
    gen_ng_sharp, gen_omega, gen_omega_prime, gen_pi1, gen_pi2, recognize_omega,
    recognize_omega_prime, recognize_pi1, recognize_pi2, Anchored, FamilyMembership, FamilyTag,
    OmegaParams, Pi2Params,
};
use crate::graph::{Graph, VertexSet};
use crate::solvers::{compute_report, InvariantReport};

/// Default cap on the order of graphs given to the exact solvers.
pub const DEFAULT_MAX_N: usize = 24;
pub const MAX_N_ENV: &str = "GRAPHLAB_MAX_N";

#[derive(Parser, Debug)]
#[command(
    name = "graphlab",
    version,
    about = "Exact packing invariants and their extremal bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print every invariant of a graph.
    Compute {
        #[command(flatten)]
        input: Input,
        /// Show the optimal sets.
        #[arg(long)]
        witness: bool,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate bound checkers on a graph.
    Bounds {
        #[command(flatten)]
        input: Input,
        /// A bound id (MANTEL, THM2_OPEN, ..., PROP3_LK) or `all`.
        #[arg(long, default_value = "all")]
        check: String,
        /// `k` for PROP3_LK; both values are run when omitted.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// List the extremal families containing a graph.
    Family {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        json: bool,
    },
    /// Sweep checks over a corpus file or all small graphs.
    Verify {
        #[arg(
            long,
            conflicts_with = "enumerate",
            required_unless_present = "enumerate"
        )]
        corpus: Option<PathBuf>,
        /// Enumerate connected graphs on 1..=N vertices (N <= 8).
        #[arg(long)]
        enumerate: Option<usize>,
        /// With --enumerate, include disconnected graphs.
        #[arg(long)]
        all_graphs: bool,
        /// Comma-separated check ids or `all`.
        #[arg(long, default_value = "all")]
        check: String,
        /// Write the JSON-lines report here.
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Print graph6 strings for members of a family.
    Gen(GenArgs),
}

#[derive(Args, Debug)]
struct Input {
    /// A graph in graph6.
    graph6: Option<String>,
    /// A corpus file with one graph6 per line.
    #[arg(long, conflicts_with_all = ["graph6", "edges"])]
    file: Option<PathBuf>,
    /// Edge list such as `0-1,1-2`.
    #[arg(long, conflicts_with = "graph6")]
    edges: Option<String>,
    /// Vertex count for --edges (default: largest endpoint + 1).
    #[arg(long, requires = "edges")]
    n: Option<usize>,
}

#[derive(Args, Debug)]
struct GenArgs {
    /// omega, omega_prime, pi1, pi2_a .. pi2_j, or ng_sharp.
    #[arg(long)]
    family: String,
    /// K_{t,t} half-size (omega families) or star size (ng_sharp).
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    p: Option<usize>,
    /// `u:target` pairs for every K_{t,t} vertex, e.g. `0:0,1:1`.
    #[arg(long)]
    attach: Option<String>,
    /// Clique size for the PI2 families.
    #[arg(long)]
    omega: Option<usize>,
    #[arg(long)]
    x: Option<usize>,
    /// Clique neighbours of the added vertex, e.g. `0,1`. For pi2_a these are
    /// the neighbours of `q` besides the apex; for pi2_j those of `z`.
    #[arg(long)]
    neighbors: Option<String>,
    /// pi2_b: clique neighbourhoods of the added vertices, `;`-separated.
    #[arg(long)]
    attachments: Option<String>,
    /// pi2_b: edges among the added vertices, e.g. `0-1`.
    #[arg(long)]
    matching: Option<String>,
    #[arg(long)]
    len_x: Option<usize>,
    #[arg(long, default_value_t = 0)]
    len_y: usize,
    #[arg(long)]
    json: bool,
}

/// Runs the command line on `args` (including the program name) and returns
/// the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn max_n() -> Result<usize> {
    match std::env::var(MAX_N_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::InvalidParams(format!("{MAX_N_ENV}={v} is not a number"))),
        Err(_) => Ok(DEFAULT_MAX_N),
    }
}

fn guard(graphs: &[Graph]) -> Result<()> {
    let max = max_n()?;
    match graphs.iter().find(|g| g.n() > max) {
        Some(g) => Err(Error::TooManyVertices { n: g.n(), max }),
        None => Ok(()),
    }
}

fn parse_edges(text: &str, n: Option<usize>) -> Result<Graph> {
    let mut edges = Vec::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (a, b) = item
            .split_once('-')
            .ok_or_else(|| Error::InvalidParams(format!("edge `{item}` is not of the form u-v")))?;
        let parse = |s: &str| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| Error::InvalidParams(format!("bad vertex `{s}` in `{item}`")))
        };
        edges.push((parse(a)?, parse(b)?));
    }
    let n = n.unwrap_or_else(|| edges.iter().map(|&(a, b)| a.max(b) + 1).max().unwrap_or(0));
    Graph::from_edges(n, &edges)
}

/// The graphs named by the input flags, with their labels for display.
fn read_input(input: &Input) -> Result<(Vec<Graph>, bool)> {
    let graphs = if let Some(path) = &input.file {
        (load_corpus(path)?, true)
    } else if let Some(edges) = &input.edges {
        (vec![parse_edges(edges, input.n)?], false)
    } else if let Some(text) = &input.graph6 {
        (vec![parse_graph6(text)?], false)
    } else {
        return Err(Error::InvalidParams(
            "give a graph6 string, --file or --edges".into(),
        ));
    };
    guard(&graphs.0)?;
    Ok(graphs)
}

fn emit_json(out: &mut dyn Write, items: Vec<Json>, batch: bool) -> Result<()> {
    let doc = if batch {
        Json::Array(items)
    } else {
        items.into_iter().next().unwrap_or(Json::Null)
    };
    writeln!(out, "{doc}").map_err(stdout_err)
}

fn stdout_err(source: std::io::Error) -> Error {
    Error::Io {
        path: PathBuf::from("<stdout>"),
        source,
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Compute {
            input,
            witness,
            json,
        } => cmd_compute(&input, witness, json, out),
        Command::Bounds {
            input,
            check,
            k,
            json,
        } => cmd_bounds(&input, &check, k, json, out),
        Command::Family { input, json } => cmd_family(&input, json, out),
        Command::Verify {
            corpus,
            enumerate,
            all_graphs,
            check,
            report,
            json,
        } => cmd_verify(corpus, enumerate, all_graphs, &check, report, json, out),
        Command::Gen(args) => cmd_gen(&args, out),
    }
}

fn write_invariants(
    out: &mut dyn Write,
    r: &InvariantReport,
    witness: bool,
) -> std::io::Result<()> {
    let show = |value: usize, set: VertexSet| {
        if witness {
            format!("{value} {set}")
        } else {
            value.to_string()
        }
    };
    writeln!(out, "n = {}  m = {}", r.n, r.m)?;
    writeln!(out, "rho = {}", show(r.rho.value, r.rho.witness))?;
    writeln!(out, "rho_o = {}", show(r.rho_o.value, r.rho_o.witness))?;
    writeln!(out, "L1 = {}", show(r.l1.value, r.l1.witness))?;
    writeln!(out, "L2 = {}", show(r.l2.value, r.l2.witness))?;
    writeln!(out, "gamma = {}", show(r.gamma.value, r.gamma.witness))?;
    writeln!(out, "omega = {}", show(r.omega, r.omega_witness))?;
    writeln!(
        out,
        "max_degree = {}  min_degree = {}",
        r.max_degree, r.min_degree
    )?;
    writeln!(out, "diam = {}", r.diameter)?;
    writeln!(
        out,
        "triangle_free = {}  connected = {}",
        r.triangle_free, r.connected
    )
}

fn cmd_compute(input: &Input, witness: bool, json: bool, out: &mut dyn Write) -> Result<i32> {
    let (graphs, batch) = read_input(input)?;
    let mut items = Vec::new();
    for (i, g) in graphs.iter().enumerate() {
        let r = compute_report(g)?;
        if json {
            let mut v = serde_json::to_value(&r).map_err(|e| Error::Internal(e.to_string()))?;
            v["graph6"] = json!(to_graph6(g)?);
            items.push(v);
        } else {
            if batch {
                writeln!(out, "{}# {}", if i > 0 { "\n" } else { "" }, to_graph6(g)?)
                    .map_err(stdout_err)?;
            }
            write_invariants(out, &r, witness).map_err(stdout_err)?;
        }
    }
    if json {
        emit_json(out, items, batch)?;
    }
    Ok(0)
}

fn bound_jobs(check: &str, k: Option<usize>) -> Result<Vec<(BoundId, usize)>> {
    let ids: Vec<BoundId> = if check.eq_ignore_ascii_case("all") {
        BoundId::ALL.to_vec()
    } else {
        check
            .split(',')
            .map(|s| s.trim().parse())
            .collect::<Result<_>>()?
    };
    let mut jobs = Vec::new();
    for id in ids {
        if id == BoundId::Prop3Lk {
            match k {
                Some(k) => jobs.push((id, k)),
                None => jobs.extend([(id, 1), (id, 2)]),
            }
        } else {
            jobs.push((id, 0));
        }
    }
    Ok(jobs)
}

fn is_precondition(e: &Error) -> bool {
    matches!(
        e,
        Error::Disconnected
            | Error::ComplementDisconnected
            | Error::HasTriangle
            | Error::IsolatedVertex(_)
            | Error::DiameterTooSmall(_)
            | Error::EmptyGraph
    )
}

fn thm4_line(c: &BoundCheck) -> String {
    let get = |k: &str| c.context.get(k).copied().unwrap_or_default();
    let clause = if get("both_diam_three") == 1 {
        "diam3-both"
    } else {
        "diameters-differ"
    };
    format!(
        "sum={} product={} clause={}, {}",
        get("sum"),
        get("product"),
        clause,
        if c.holds { "holds" } else { "fails" }
    )
}

fn cmd_bounds(
    input: &Input,
    check: &str,
    k: Option<usize>,
    json: bool,
    out: &mut dyn Write,
) -> Result<i32> {
    let (graphs, batch) = read_input(input)?;
    let jobs = bound_jobs(check, k)?;
    let mut violated = false;
    let mut items = Vec::new();
    for (i, g) in graphs.iter().enumerate() {
        let g6 = to_graph6(g)?;
        if batch && !json {
            writeln!(out, "{}# {g6}", if i > 0 { "\n" } else { "" }).map_err(stdout_err)?;
        }
        let mut results = Vec::new();
        for &(id, k) in &jobs {
            let label = if id == BoundId::Prop3Lk {
                format!("{id}(k={k})")
            } else {
                id.to_string()
            };
            match bounds::check(g, id, k) {
                Ok(c) => {
                    violated |= c.is_violation();
                    if json {
                        results.push(json!({ "label": label, "applicable": true, "result": c }));
                    } else {
                        writeln!(out, "{c}").map_err(stdout_err)?;
                        if id == BoundId::Thm4Ng {
                            writeln!(out, "  {}", thm4_line(&c)).map_err(stdout_err)?;
                        }
                    }
                }
                Err(e) if is_precondition(&e) => {
                    if json {
                        results.push(
                            json!({ "label": label, "applicable": false, "reason": e.to_string() }),
                        );
                    } else {
                        writeln!(out, "{label}: not applicable ({e})").map_err(stdout_err)?;
                    }
                }
                Err(e) => return Err(e),
            }
        }
        if json {
            items.push(json!({ "graph6": g6, "checks": results }));
        }
    }
    if json {
        emit_json(out, items, batch)?;
    }
    Ok(i32::from(violated))
}

fn memberships(g: &Graph) -> Vec<FamilyMembership> {
    let mut found: Vec<FamilyMembership> = [
        recognize_omega(g),
        recognize_omega_prime(g),
        recognize_pi1(g),
    ]
    .into_iter()
    .filter(|m| m.member)
    .collect();
    found.extend(recognize_pi2(g));
    found
}

fn cmd_family(input: &Input, json: bool, out: &mut dyn Write) -> Result<i32> {
    let (graphs, batch) = read_input(input)?;
    let mut items = Vec::new();
    for (i, g) in graphs.iter().enumerate() {
        let found = memberships(g);
        let g6 = to_graph6(g)?;
        if json {
            items.push(json!({ "graph6": g6, "families": found }));
            continue;
        }
        if batch {
            writeln!(out, "{}# {g6}", if i > 0 { "\n" } else { "" }).map_err(stdout_err)?;
        }
        if found.is_empty() {
            writeln!(out, "none").map_err(stdout_err)?;
        }
        for m in &found {
            writeln!(out, "{m}").map_err(stdout_err)?;
        }
    }
    if json {
        emit_json(out, items, batch)?;
    }
    Ok(0)
}

fn cmd_verify(
    corpus: Option<PathBuf>,
    enumerate: Option<usize>,
    all_graphs: bool,
    check: &str,
    report: Option<PathBuf>,
    json: bool,
    out: &mut dyn Write,
) -> Result<i32> {
    let checks = CheckId::parse_list(check)?;
    let (id, graphs) = match (corpus, enumerate) {
        (Some(path), _) => (path.display().to_string(), load_corpus(&path)?),
        (None, Some(n)) if all_graphs => (format!("all-n{n}"), enumerate_all_up_to(n)?),
        (None, Some(n)) => (format!("connected-n{n}"), enumerate_connected_up_to(n)?),
        (None, None) => return Err(Error::InvalidParams("give --corpus or --enumerate".into())),
    };
    guard(&graphs)?;
    let result = run_sweep(&id, &graphs, &checks)?;
    if let Some(path) = &report {
        write_report(&result, path)?;
    }
    if json {
        let mut header =
            serde_json::to_value(result.header()).map_err(|e| Error::Internal(e.to_string()))?;
        header["findings"] =
            serde_json::to_value(&result.findings).map_err(|e| Error::Internal(e.to_string()))?;
        header["notes"] =
            serde_json::to_value(&result.notes).map_err(|e| Error::Internal(e.to_string()))?;
        writeln!(out, "{header}").map_err(stdout_err)?;
    } else {
        writeln!(out, "{}", result.summary()).map_err(stdout_err)?;
        for f in &result.findings {
            writeln!(
                out,
                "finding {} {}: expected {}; observed {}",
                f.check, f.graph6, f.expected, f.observed
            )
            .map_err(stdout_err)?;
        }
        writeln!(out, "elapsed: {:.2?}", result.elapsed).map_err(stdout_err)?;
        if let Some(path) = &report {
            writeln!(out, "report: {}", path.display()).map_err(stdout_err)?;
        }
    }
    Ok(i32::from(result.has_findings()))
}

fn parse_set(text: &str) -> Result<VertexSet> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .map_err(|_| Error::InvalidParams(format!("bad vertex `{s}`")))
        })
        .collect::<Result<Vec<_>>>()
        .and_then(|vs| {
            if let Some(&v) = vs.iter().find(|&&v| v >= 64) {
                return Err(Error::InvalidParams(format!("vertex {v} out of range")));
            }
            Ok(vs.into_iter().collect())
        })
}

fn need<T: Copy>(v: Option<T>, flag: &str) -> Result<T> {
    v.ok_or_else(|| Error::InvalidParams(format!("--{flag} is required for this family")))
}

fn omega_params(args: &GenArgs) -> Result<OmegaParams> {
    let t = need(args.t, "t")?;
    let p = need(args.p, "p")?;
    let text = args
        .attach
        .as_deref()
        .ok_or_else(|| Error::InvalidParams("--attach is required".into()))?;
    let mut attachment = vec![None; 2 * t];
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (u, a) = item.split_once(':').ok_or_else(|| {
            Error::InvalidParams(format!("attachment `{item}` is not of the form u:target"))
        })?;
        let u: usize = u
            .trim()
            .parse()
            .map_err(|_| Error::InvalidParams(format!("bad vertex in `{item}`")))?;
        let a: usize = a
            .trim()
            .parse()
            .map_err(|_| Error::InvalidParams(format!("bad target in `{item}`")))?;
        let slot = attachment
            .get_mut(u)
            .ok_or_else(|| Error::InvalidParams(format!("vertex {u} is not in K_{{t,t}}")))?;
        if slot.replace(a).is_some() {
            return Err(Error::InvalidParams(format!("vertex {u} attached twice")));
        }
    }
    let attachment = attachment
        .into_iter()
        .enumerate()
        .map(|(u, a)| {
            a.ok_or_else(|| Error::InvalidParams(format!("vertex {u} has no attachment")))
        })
        .collect::<Result<_>>()?;
    Ok(OmegaParams { t, p, attachment })
}

fn pi2_params(tag: FamilyTag, args: &GenArgs) -> Result<Pi2Params> {
    let omega = need(args.omega, "omega")?;
    let neighbors = || parse_set(args.neighbors.as_deref().unwrap_or(""));
    let anchored = || -> Result<Anchored> {
        Ok(Anchored {
            omega,
            x: need(args.x, "x")?,
            y_neighbors: neighbors()?,
        })
    };
    Ok(match tag {
        FamilyTag::Pi2A => Pi2Params::A {
            omega,
            q_neighbors: neighbors()?,
        },
        FamilyTag::Pi2B => {
            let attachments = args
                .attachments
                .as_deref()
                .unwrap_or("")
                .split(';')
                .map(parse_set)
                .collect::<Result<Vec<_>>>()?;
            let matching = match args.matching.as_deref() {
                Some(m) => parse_edges(m, None)?.edges().collect(),
                None => Vec::new(),
            };
            Pi2Params::B {
                omega,
                attachments,
                matching,
            }
        }
        FamilyTag::Pi2C => Pi2Params::C {
            omega,
            y_neighbors: neighbors()?,
        },
        FamilyTag::Pi2D => Pi2Params::D(anchored()?),
        FamilyTag::Pi2E => Pi2Params::E(anchored()?),
        FamilyTag::Pi2F => Pi2Params::F(anchored()?),
        FamilyTag::Pi2G => Pi2Params::G(anchored()?),
        FamilyTag::Pi2H => Pi2Params::H(anchored()?),
        FamilyTag::Pi2I => Pi2Params::I(anchored()?),
        FamilyTag::Pi2J => Pi2Params::J {
            omega,
            x: need(args.x, "x")?,
            z_neighbors: neighbors()?,
        },
        _ => return Err(Error::Internal(format!("{tag} is not a PI2 family"))),
    })
}

fn cmd_gen(args: &GenArgs, out: &mut dyn Write) -> Result<i32> {
    let family = args.family.replace('-', "_");
    let mut lines: Vec<(String, Json)> = Vec::new();
    if family.eq_ignore_ascii_case("ng_sharp") {
        let h = gen_ng_sharp(need(args.t, "t")?, need(args.len_x, "len-x")?, args.len_y)?;
        lines.push((
            to_graph6(&h.graph)?,
            serde_json::to_value(&h).map_err(|e| Error::Internal(e.to_string()))?,
        ));
    } else {
        let tag: FamilyTag = family.parse()?;
        match tag {
            FamilyTag::Omega | FamilyTag::OmegaPrime => {
                let params = omega_params(args)?;
                let g = if tag == FamilyTag::Omega {
                    gen_omega(&params)?
                } else {
                    gen_omega_prime(&params)?
                };
                lines.push((to_graph6(&g)?, json!({ "params": params })));
            }
            FamilyTag::Pi1 => {
                for g in gen_pi1() {
                    lines.push((to_graph6(&g)?, Json::Null));
                }
            }
            _ => {
                let inst = gen_pi2(&pi2_params(tag, args)?)?;
                lines.push((to_graph6(&inst.graph)?, json!({ "roles": inst.roles })));
            }
        }
    }
    for (g6, extra) in lines {
        if args.json {
            let mut v = json!({ "family": family.to_ascii_uppercase(), "graph6": g6 });
            if let Json::Object(map) = extra {
                v.as_object_mut().expect("object literal").extend(map);
            }
            writeln!(out, "{v}").map_err(stdout_err)?;
        } else {
            writeln!(out, "{g6}").map_err(stdout_err)?;
        }
    }
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("graphlab").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn edges_parse() {
        let g = parse_edges("0-1, 1-2", None).unwrap();
        assert_eq!((g.n(), g.m()), (3, 2));
        assert_eq!(parse_edges("0-1", Some(4)).unwrap().n(), 4);
        assert!(parse_edges("0-", None).is_err());
        assert!(parse_edges("01", None).is_err());
    }

    #[test]
    fn bound_job_expansion() {
        assert_eq!(bound_jobs("all", None).unwrap().len(), 10);
        assert_eq!(
            bound_jobs("PROP3_LK", Some(2)).unwrap(),
            vec![(BoundId::Prop3Lk, 2)]
        );
        assert!(bound_jobs("XYZ", None).is_err());
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_args(&[]).0, 2);
        assert_eq!(run_args(&["compute"]).0, 2);
        assert_eq!(run_args(&["compute", "!!"]).0, 2);
        assert_eq!(run_args(&["--help"]).0, 0);
    }

    #[test]
    fn omega_attach_parse() {
        let args = GenArgs::parse_from_for_test(&[
            "--family", "omega", "--t", "1", "--p", "1", "--attach", "0:0,1:1",
        ]);
        let p = omega_params(&args).unwrap();
        assert_eq!(p.attachment, vec![0, 1]);
    }

    impl GenArgs {
        fn parse_from_for_test(args: &[&str]) -> GenArgs {
            #[derive(Parser)]
            struct Wrap {
                #[command(flatten)]
                args: GenArgs,
            }
            Wrap::parse_from(std::iter::once("gen").chain(args.iter().copied())).args
        }
    }
}
