use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use super::graph6::to_graph6;
use crate::bounds::{self, BoundCheck, Value};
use crate::error::{Error, Result};
use crate::families::{verify_theorem6, Theorem6Verdict};
use crate::graph::{maximum_cliques, Graph};

/// One sweepable check: a bound checker (with `PROP3_LK` split by `k`) or the
/// `ρₒ = n - ω` characterization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CheckId {
    Mantel,
    Thm2Open,
    Thm2Pack,
    Eq11Gamma,
    #[serde(rename = "PROP3_K1")]
    Prop3K1,
    #[serde(rename = "PROP3_K2")]
    Prop3K2,
    ObsRho1,
    Thm4Ng,
    Lem5Open,
    L2Ng,
    Thm6,
}

impl CheckId {
    pub const ALL: [CheckId; 11] = [
        CheckId::Mantel,
        CheckId::Thm2Open,
        CheckId::Thm2Pack,
        CheckId::Eq11Gamma,
        CheckId::Prop3K1,
        CheckId::Prop3K2,
        CheckId::ObsRho1,
        CheckId::Thm4Ng,
        CheckId::Lem5Open,
        CheckId::L2Ng,
        CheckId::Thm6,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckId::Mantel => "MANTEL",
            CheckId::Thm2Open => "THM2_OPEN",
            CheckId::Thm2Pack => "THM2_PACK",
            CheckId::Eq11Gamma => "EQ11_GAMMA",
            CheckId::Prop3K1 => "PROP3_K1",
            CheckId::Prop3K2 => "PROP3_K2",
            CheckId::ObsRho1 => "OBS_RHO1",
            CheckId::Thm4Ng => "THM4_NG",
            CheckId::Lem5Open => "LEM5_OPEN",
            CheckId::L2Ng => "L2_NG",
            CheckId::Thm6 => "THM6",
        }
    }

    /// Parses a comma-separated list of ids, or `all`. `PROP3_LK` expands to
    /// both values of `k`. The result is sorted and deduplicated.
    pub fn parse_list(text: &str) -> Result<Vec<CheckId>> {
        let mut out = Vec::new();
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            if item.eq_ignore_ascii_case("all") {
                out.extend(CheckId::ALL);
            } else if item.eq_ignore_ascii_case("PROP3_LK") {
                out.extend([CheckId::Prop3K1, CheckId::Prop3K2]);
            } else {
                out.push(item.parse()?);
            }
        }
        if out.is_empty() {
            return Err(Error::UnknownCheck(text.to_string()));
        }
        out.sort();
        out.dedup();
        Ok(out)
    }

    fn run(self, g: &Graph) -> Result<Outcome> {
        let bound = |c: Result<BoundCheck>| c.map(Outcome::Bound);
        match self {
            CheckId::Mantel => bound(bounds::check_mantel(g)),
            CheckId::Thm2Open => bound(bounds::check_thm2_open(g)),
            CheckId::Thm2Pack => bound(bounds::check_thm2_pack(g)),
            CheckId::Eq11Gamma => bound(bounds::check_gamma_diameter(g)),
            CheckId::Prop3K1 => bound(bounds::check_prop3(g, 1)),
            CheckId::Prop3K2 => bound(bounds::check_prop3(g, 2)),
            CheckId::ObsRho1 => bound(bounds::check_obs_rho1(g)),
            CheckId::Thm4Ng => bound(bounds::check_thm4(g)),
            CheckId::Lem5Open => bound(bounds::check_lemma5(g)),
            CheckId::L2Ng => bound(bounds::check_l2_ng(g)),
            CheckId::Thm6 => verify_theorem6(g).map(Outcome::Theorem6),
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckId::ALL
            .into_iter()
            .find(|c| c.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownCheck(s.to_string()))
    }
}

enum Outcome {
    Bound(BoundCheck),
    Theorem6(Theorem6Verdict),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Held,
    Failed,
    NotApplicable,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub applicable: usize,
    pub held: usize,
    /// Held with equality (for `THM6`: `ρₒ = n - ω`).
    pub tight: usize,
    pub failed: usize,
    pub not_applicable: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportRow {
    pub check: CheckId,
    pub graph6: String,
    pub verdict: Verdict,
    pub lhs: Option<Value>,
    pub rhs: Option<Value>,
    pub tight: Option<bool>,
    /// Why the check did not apply.
    pub reason: Option<String>,
}

/// A failed instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub graph6: String,
    pub check: CheckId,
    pub expected: String,
    pub observed: String,
    pub diagnostics: BTreeMap<String, String>,
}

/// Something worth recording that is not a failure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Note {
    pub graph6: String,
    pub check: CheckId,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Header {
    pub corpus: String,
    pub graphs: usize,
    pub checks: Vec<CheckId>,
    pub tallies: BTreeMap<CheckId, Tally>,
    pub findings: usize,
    pub notes: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepReport {
    pub corpus: String,
    pub graphs: usize,
    pub checks: Vec<CheckId>,
    pub tallies: BTreeMap<CheckId, Tally>,
    pub findings: Vec<Finding>,
    pub notes: Vec<Note>,
    pub rows: Vec<ReportRow>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SweepReport {
    pub fn header(&self) -> Header {
        Header {
            corpus: self.corpus.clone(),
            graphs: self.graphs,
            checks: self.checks.clone(),
            tallies: self.tallies.clone(),
            findings: self.findings.len(),
            notes: self.notes.len(),
        }
    }

    pub fn tally(&self, check: CheckId) -> Tally {
        self.tallies.get(&check).copied().unwrap_or_default()
    }

    pub fn has_findings(&self) -> bool {
        !self.findings.is_empty()
    }

    pub fn findings_for(&self, check: CheckId) -> impl Iterator<Item = &Finding> {
        self.findings.iter().filter(move |f| f.check == check)
    }

    pub fn notes_for(&self, check: CheckId) -> impl Iterator<Item = &Note> {
        self.notes.iter().filter(move |n| n.check == check)
    }

    /// The report as JSON lines, exactly as [`super::write_report`] writes it.
    pub fn to_json_lines(&self) -> String {
        let mut buf = Vec::new();
        super::io::render_report(self, &mut buf).expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("serde_json emits UTF-8")
    }

    /// Human-readable table of tallies.
    pub fn summary(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "corpus {} ({} graphs)", self.corpus, self.graphs);
        let _ = writeln!(
            s,
            "{:<11} {:>10} {:>8} {:>8} {:>8} {:>8}",
            "check", "applicable", "held", "tight", "failed", "n/a"
        );
        for (check, t) in &self.tallies {
            let _ = writeln!(
                s,
                "{:<11} {:>10} {:>8} {:>8} {:>8} {:>8}",
                check.as_str(),
                t.applicable,
                t.held,
                t.tight,
                t.failed,
                t.not_applicable
            );
        }
        let _ = write!(
            s,
            "findings: {}  notes: {}",
            self.findings.len(),
            self.notes.len()
        );
        s
    }
}

/// Precondition failures count as not applicable; anything else is a bug.
fn not_applicable_reason(e: &Error) -> Option<String> {
    match e {
        Error::Disconnected
        | Error::ComplementDisconnected
        | Error::HasTriangle
        | Error::IsolatedVertex(_)
        | Error::DiameterTooSmall(_)
        | Error::EmptyGraph
        | Error::InvalidParams(_) => Some(e.to_string()),
        _ => None,
    }
}

fn bound_finding(graph6: &str, check: CheckId, c: &BoundCheck) -> Finding {
    let (expected, observed) = if !c.holds {
        (
            format!("lhs {} rhs", c.relation),
            format!("lhs = {}, rhs = {}", c.lhs, c.rhs),
        )
    } else {
        (
            "attached characterization agrees".to_string(),
            format!("tight = {}, characterization disagrees", c.tight),
        )
    };
    let mut diagnostics: BTreeMap<String, String> = c
        .context
        .iter()
        .map(|(k, v)| (k.clone(), v.to_string()))
        .collect();
    for clause in &c.clauses {
        diagnostics.insert(
            format!("clause_{}", clause.name),
            format!(
                "{} {} {} holds={}",
                clause.lhs, clause.relation, clause.rhs, clause.holds
            ),
        );
    }
    if let Some(w) = c.witness {
        diagnostics.insert("witness".into(), w.to_string());
    }
    Finding {
        graph6: graph6.to_string(),
        check,
        expected,
        observed,
        diagnostics,
    }
}

fn theorem6_diagnostics(g: &Graph, v: &Theorem6Verdict) -> BTreeMap<String, String> {
    let mut d = BTreeMap::new();
    d.insert("n".into(), v.n.to_string());
    d.insert("omega".into(), v.omega.to_string());
    d.insert("rho_o".into(), v.rho_o.to_string());
    d.insert("max_degree".into(), g.max_degree().to_string());
    d.insert("min_degree".into(), g.min_degree().to_string());
    let fams: Vec<&str> = v.families.iter().map(|f| f.as_str()).collect();
    d.insert("families".into(), format!("[{}]", fams.join(",")));
    d.insert("loose_h_only".into(), v.loose_h_only.to_string());
    if let Ok(cliques) = maximum_cliques(g) {
        let list: Vec<String> = cliques.iter().map(|c| c.to_string()).collect();
        d.insert("maximum_cliques".into(), list.join(" "));
        if let Some(s) = cliques.first() {
            let rest = g.vertices().difference(*s);
            let nbrs: Vec<String> = rest.iter().map(|r| format!("{r}:{}", g.nbr(r))).collect();
            d.insert("outside_first_clique".into(), nbrs.join(" "));
        }
    }
    d
}

/// Runs every check in `checks` on every graph. Findings never stop the sweep;
/// rows follow corpus order, then check order.
pub fn run_sweep(corpus: &str, graphs: &[Graph], checks: &[CheckId]) -> Result<SweepReport> {
    let start = Instant::now();
    let mut checks = checks.to_vec();
    checks.sort();
    checks.dedup();
    let mut tallies: BTreeMap<CheckId, Tally> =
        checks.iter().map(|&c| (c, Tally::default())).collect();
    let mut rows = Vec::with_capacity(graphs.len() * checks.len());
    let mut findings = Vec::new();
    let mut notes = Vec::new();

    for g in graphs {
        let graph6 = to_graph6(g)?;
        for &check in &checks {
            let tally = tallies.get_mut(&check).expect("initialised above");
            let outcome = match check.run(g) {
                Ok(o) => o,
                Err(e) => match not_applicable_reason(&e) {
                    Some(reason) => {
                        tally.not_applicable += 1;
                        rows.push(ReportRow {
                            check,
                            graph6: graph6.clone(),
                            verdict: Verdict::NotApplicable,
                            lhs: None,
                            rhs: None,
                            tight: None,
                            reason: Some(reason),
                        });
                        continue;
                    }
                    None => return Err(e),
                },
            };
            tally.applicable += 1;
            let (ok, tight, lhs, rhs) = match &outcome {
                Outcome::Bound(c) => {
                    if !c.is_violation() {
                        if check == CheckId::Thm4Ng
                            && c.context.get("single_graph_bound_holds") == Some(&0)
                        {
                            notes.push(Note {
                                graph6: graph6.clone(),
                                check,
                                message: "single-graph bound for the larger-diameter graph fails"
                                    .into(),
                            });
                        }
                    } else {
                        findings.push(bound_finding(&graph6, check, c));
                    }
                    (!c.is_violation(), c.tight, c.lhs, c.rhs)
                }
                Outcome::Theorem6(v) => {
                    if v.loose_h_only {
                        notes.push(Note {
                            graph6: graph6.clone(),
                            check,
                            message: format!(
                                "matches family (h) only under the loose reading (rho_o = n - omega: {})",
                                v.lhs
                            ),
                        });
                    }
                    if !v.agree {
                        findings.push(Finding {
                            graph6: graph6.clone(),
                            check,
                            expected: format!("rho_o = n - omega iff member (member: {})", v.rhs),
                            observed: format!("rho_o = {}, n - omega = {}", v.rho_o, v.n - v.omega),
                            diagnostics: theorem6_diagnostics(g, v),
                        });
                    }
                    let lhs = Value::from(v.rho_o);
                    let rhs = Value::from(v.n - v.omega);
                    (v.agree, v.lhs, lhs, rhs)
                }
            };
            if ok {
                tally.held += 1;
                if tight {
                    tally.tight += 1;
                }
            } else {
                tally.failed += 1;
            }
            rows.push(ReportRow {
                check,
                graph6: graph6.clone(),
                verdict: if ok { Verdict::Held } else { Verdict::Failed },
                lhs: Some(lhs),
                rhs: Some(rhs),
                tight: Some(tight),
                reason: None,
            });
        }
    }

    Ok(SweepReport {
        corpus: corpus.to_string(),
        graphs: graphs.len(),
        checks,
        tallies,
        findings,
        notes,
        rows,
        elapsed: start.elapsed(),
    })
}
