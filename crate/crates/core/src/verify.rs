//! End-to-end checks of the equal-growth and distinct-growth tree families.
//!
//! Every check records what was expected and what was computed; nothing is
//! silently skipped. Checks marked as not required are reported alongside but
//! do not decide the verdict.

use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, limb_occurrences, root_orbits};
use crate::error::Result;
use crate::graph::{builtin_tree, RootedTree, SimpleGraph};
use crate::growth::GrowthContext;
use crate::spectral::cospectral;
use crate::trees::enumerate_trees;

pub const REPORT_SCHEMA: &str = "geogrow.verification/v1";

/// Length-8 start-with-root counts of the distinct-growth pair.
pub const CLAIMED_LENGTH8: (u64, u64) = (8_919_523, 8_919_522);
/// Degree at which the two growth series are claimed to first differ.
pub const CLAIMED_FIRST_DEGREE: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    /// Every failed required check has been marked with a documented cause.
    MismatchDocumented,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub computed: String,
    pub passed: bool,
    pub required: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
    /// Known cause of a failure, set with [`VerificationReport::document`].
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub documented: Option<String>,
}

impl Check {
    fn new(name: &str, expected: impl ToString, computed: impl ToString, passed: bool) -> Self {
        Check {
            name: name.into(),
            expected: expected.to_string(),
            computed: computed.to_string(),
            passed,
            required: true,
            note: None,
            documented: None,
        }
    }

    fn optional(mut self) -> Self {
        self.required = false;
        self
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema: String,
    pub claim: String,
    pub inputs: Vec<String>,
    pub checks: Vec<Check>,
    pub verdict: Verdict,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    fn finish(claim: &str, inputs: Vec<String>, checks: Vec<Check>, started: Instant) -> Self {
        let mut report = VerificationReport {
            schema: REPORT_SCHEMA.into(),
            claim: claim.into(),
            inputs,
            checks,
            verdict: Verdict::Pass,
            elapsed_ms: started.elapsed().as_millis() as u64,
        };
        report.verdict = report.compute_verdict();
        report
    }

    fn compute_verdict(&self) -> Verdict {
        let failed: Vec<&Check> = self.checks.iter().filter(|c| c.required && !c.passed).collect();
        if failed.is_empty() {
            Verdict::Pass
        } else if failed.iter().all(|c| c.documented.is_some()) {
            Verdict::MismatchDocumented
        } else {
            Verdict::Fail
        }
    }

    /// Attach a known cause to a failed check. Returns false if the check does
    /// not exist or passed.
    pub fn document(&mut self, check: &str, cause: &str) -> bool {
        let Some(c) = self.checks.iter_mut().find(|c| c.name == check && !c.passed) else {
            return false;
        };
        c.documented = Some(cause.into());
        self.verdict = self.compute_verdict();
        true
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Plain-text rendering, one line per check.
    pub fn render(&self) -> String {
        let mut out = format!("{}: {:?} ({} ms)\n", self.claim, self.verdict, self.elapsed_ms);
        for i in &self.inputs {
            out.push_str(&format!("  input: {i}\n"));
        }
        for c in &self.checks {
            let mark = match (c.passed, c.required) {
                (true, _) => "ok  ",
                (false, true) => "FAIL",
                (false, false) => "info",
            };
            out.push_str(&format!("  [{mark}] {}: expected {}, computed {}\n", c.name, c.expected, c.computed));
            if let Some(n) = &c.note {
                out.push_str(&format!("         note: {n}\n"));
            }
            if let Some(d) = &c.documented {
                out.push_str(&format!("         documented: {d}\n"));
            }
        }
        out
    }
}

/// Every rooted tree on `2..=k` vertices, one per rooted isomorphism class.
pub fn rooted_trees_up_to(k: usize) -> Result<Vec<RootedTree>> {
    let mut out = Vec::new();
    for j in 2..=k {
        for t in enumerate_trees(j)? {
            for r in root_orbits(&t)? {
                out.push(RootedTree::new(t.clone(), r)?);
            }
        }
    }
    Ok(out)
}

/// Per-coalescence outcome of the equal-growth sweep.
#[derive(Clone, Debug)]
struct SweepRow {
    tau: String,
    non_isomorphic: bool,
    cospectral: bool,
    complements: bool,
    line_graphs: bool,
    growth_equal: bool,
    line_of_complements: bool,
    complement_of_lines: bool,
}

fn sweep_row(tau: &RootedTree, t1: &RootedTree, t2: &RootedTree) -> Result<SweepRow> {
    let g1 = tau.coalesce(t1);
    let g2 = tau.coalesce(t2);
    let (a, b) = (g1.graph(), g2.graph());
    Ok(SweepRow {
        tau: tau.to_edge_list(),
        non_isomorphic: canonical_form(a)? != canonical_form(b)?,
        cospectral: cospectral(a, b),
        complements: cospectral(&a.complement(), &b.complement()),
        line_graphs: cospectral(&a.line_graph(), &b.line_graph()),
        growth_equal: GrowthContext::new(a)?.geodesic_series()? == GrowthContext::new(b)?.geodesic_series()?,
        line_of_complements: cospectral(&a.complement().line_graph(), &b.complement().line_graph()),
        complement_of_lines: cospectral(&a.line_graph().complement(), &b.line_graph().complement()),
    })
}

fn tally(name: &str, rows: &[SweepRow], pick: impl Fn(&SweepRow) -> bool) -> Check {
    let good = rows.iter().filter(|r| pick(r)).count();
    let check = Check::new(name, format!("{} of {}", rows.len(), rows.len()), format!("{good} of {}", rows.len()), good == rows.len());
    match rows.iter().find(|r| !pick(r)) {
        Some(r) => check.with_note(format!("first failure at tau = {}", r.tau.replace('\n', "; "))),
        None => check,
    }
}

/// The equal-growth sweep for the built-in McKay pair.
pub fn verify_equal_growth(tau_max: usize) -> Result<VerificationReport> {
    verify_equal_growth_with(&builtin_tree("mckay-t1")?, &builtin_tree("mckay-t2")?, tau_max)
}

/// For every rooted tree `tau` on `2..=tau_max` vertices, compares
/// `tau . t1` with `tau . t2`.
pub fn verify_equal_growth_with(t1: &RootedTree, t2: &RootedTree, tau_max: usize) -> Result<VerificationReport> {
    let started = Instant::now();
    let taus = rooted_trees_up_to(tau_max)?;
    let rows: Vec<SweepRow> = taus.par_iter().map(|tau| sweep_row(tau, t1, t2)).collect::<Result<_>>()?;
    let mut checks = vec![
        tally("non-isomorphic", &rows, |r| r.non_isomorphic),
        tally("co-spectral", &rows, |r| r.cospectral),
        tally("complements co-spectral", &rows, |r| r.complements),
        tally("line graphs co-spectral", &rows, |r| r.line_graphs),
        tally("equal geodesic growth", &rows, |r| r.growth_equal),
    ];
    checks.push(tally("line graphs of complements co-spectral", &rows, |r| r.line_of_complements).optional());
    checks.push(tally("complements of line graphs co-spectral", &rows, |r| r.complement_of_lines).optional());
    let inputs = vec![
        format!("t1: {}", t1.to_edge_list().replace('\n', "; ")),
        format!("t2: {}", t2.to_edge_list().replace('\n', "; ")),
        format!("rooted tau on 2..={tau_max} vertices: {}", rows.len()),
    ];
    Ok(VerificationReport::finish("equal-growth-family", inputs, checks, started))
}

/// Counts of geodesics of length `0..=len` starting with the root.
pub fn start_with_root_counts(t: &RootedTree, len: usize) -> Result<Vec<BigInt>> {
    let ctx = GrowthContext::new(t.graph())?;
    let mut counts = vec![BigInt::from(0)];
    counts.extend(ctx.start0_tail_stream(t.root())?.take(len));
    Ok(counts)
}

fn fmt_counts(c: &[BigInt]) -> String {
    let v: Vec<String> = c.iter().map(|x| x.to_string()).collect();
    format!("[{}]", v.join(", "))
}

/// One way of reading which trees the length-8 counts describe.
#[derive(Clone, Debug)]
struct Reading {
    name: &'static str,
    counts: (Vec<BigInt>, Vec<BigInt>),
}

impl Reading {
    fn matches(&self) -> bool {
        let (a, b) = &self.counts;
        a[..8] == b[..8] && a[8] == BigInt::from(CLAIMED_LENGTH8.0) && b[8] == BigInt::from(CLAIMED_LENGTH8.1)
    }
}

/// The distinct-growth check for the built-in Godsil pair as drawn.
pub fn verify_distinct_growth() -> Result<VerificationReport> {
    verify_distinct_growth_with(&builtin_tree("godsil-s1")?, &builtin_tree("godsil-s2")?)
}

/// Start-with-root counts, growth of `P2 . s_i`, and the spectral split.
pub fn verify_distinct_growth_with(s1: &RootedTree, s2: &RootedTree) -> Result<VerificationReport> {
    let started = Instant::now();
    let p2 = RootedTree::path_from_end(2);
    let (g1, g2) = (p2.coalesce(s1), p2.coalesce(s2));
    let mut checks = Vec::new();

    // Which trees do the printed counts describe?
    let readings = [
        Reading { name: "s_i alone", counts: (start_with_root_counts(s1, 8)?, start_with_root_counts(s2, 8)?) },
        Reading { name: "P2 . s_i", counts: (start_with_root_counts(&g1, 8)?, start_with_root_counts(&g2, 8)?) },
    ];
    let matched = readings.iter().find(|r| r.matches());
    let shown = matched.unwrap_or(&readings[0]);
    let (a, b) = &shown.counts;
    let reading_note = match matched {
        Some(r) => format!("reading that matched: {}", r.name),
        None => format!(
            "no reading matched; s_i alone: {} vs {}; P2 . s_i: {} vs {}",
            fmt_counts(&readings[0].counts.0),
            fmt_counts(&readings[0].counts.1),
            fmt_counts(&readings[1].counts.0),
            fmt_counts(&readings[1].counts.1)
        ),
    };
    let first_count_diff = a.iter().zip(b).position(|(x, y)| x != y);
    checks.push(
        Check::new(
            "start-with-root counts agree up to length 7",
            "first difference at length 8",
            match first_count_diff {
                Some(r) => format!("first difference at length {r}"),
                None => "no difference up to length 8".into(),
            },
            a[..8] == b[..8],
        )
        .with_note(reading_note.clone()),
    );
    checks.push(Check::new(
        "length-8 start-with-root counts",
        format!("{} vs {}", CLAIMED_LENGTH8.0, CLAIMED_LENGTH8.1),
        format!("{} vs {}", a[8], b[8]),
        a[8] == BigInt::from(CLAIMED_LENGTH8.0) && b[8] == BigInt::from(CLAIMED_LENGTH8.1),
    ));

    // Growth of the coalescences with P2.
    let c1 = GrowthContext::new(g1.graph())?;
    let c2 = GrowthContext::new(g2.graph())?;
    let (r1, r2) = (c1.geodesic_series()?, c2.geodesic_series()?);
    checks.push(Check::new("growth series differ for tau = P2", "distinct", if r1 == r2 { "equal" } else { "distinct" }, r1 != r2));
    let terms = CLAIMED_FIRST_DEGREE + 2;
    let (x1, x2) = (r1.taylor(terms), r2.taylor(terms));
    let first = x1.iter().zip(&x2).position(|(x, y)| x != y);
    checks.push(Check::new(
        "first differing growth coefficient",
        format!("degree {CLAIMED_FIRST_DEGREE}"),
        first.map_or("none".into(), |d| format!("degree {d}")),
        first == Some(CLAIMED_FIRST_DEGREE),
    ));
    let gap = &x1[CLAIMED_FIRST_DEGREE] - &x2[CLAIMED_FIRST_DEGREE];
    let predicted = BigInt::from(2 * p2.graph().degree(p2.root())) * (&a[8] - &b[8]);
    checks.push(
        Check::new(
            "degree-10 gap equals 2 deg_tau(0) times the length-8 gap",
            &predicted,
            &gap,
            gap == predicted,
        )
        .with_note(match first {
            Some(d) => format!("gap at the first differing degree {d} is {}", &x1[d] - &x2[d]),
            None => "series agree on all computed terms".into(),
        }),
    );

    // Spectral side conditions over all rooted tau on up to 6 vertices.
    let taus = rooted_trees_up_to(6)?;
    let spectral: Vec<(String, bool, bool)> = taus
        .par_iter()
        .map(|tau| {
            let (h1, h2) = (tau.coalesce(s1), tau.coalesce(s2));
            let cs = cospectral(h1.graph(), h2.graph());
            let cc = cospectral(&h1.graph().complement(), &h2.graph().complement());
            (tau.to_edge_list().replace('\n', "; "), cs, cc)
        })
        .collect();
    for (name, pick) in [("co-spectral for all tau up to 6 vertices", 1), ("complements co-spectral for all tau up to 6 vertices", 2)] {
        let ok = |row: &(String, bool, bool)| if pick == 1 { row.1 } else { row.2 };
        let good = spectral.iter().filter(|r| ok(r)).count();
        let mut c = Check::new(name, format!("{} of {}", spectral.len(), spectral.len()), format!("{good} of {}", spectral.len()), good == spectral.len());
        if let Some(r) = spectral.iter().find(|r| !ok(r)) {
            c = c.with_note(format!("first failure at tau = {}", r.0));
        }
        checks.push(c);
    }
    let (h1, h2) = (g1.graph(), g2.graph());
    let lines = cospectral(&h1.line_graph(), &h2.line_graph());
    checks.push(Check::new("line graphs not co-spectral for tau = P2", "not co-spectral", if lines { "co-spectral" } else { "not co-spectral" }, !lines));
    let lc = cospectral(&h1.complement().line_graph(), &h2.complement().line_graph());
    checks.push(Check::new("line graphs of complements not co-spectral for tau = P2", "not co-spectral", if lc { "co-spectral" } else { "not co-spectral" }, !lc).optional());
    let cl = cospectral(&h1.line_graph().complement(), &h2.line_graph().complement());
    checks.push(Check::new("complements of line graphs not co-spectral for tau = P2", "not co-spectral", if cl { "co-spectral" } else { "not co-spectral" }, !cl).optional());

    let non_iso = canonical_form(h1)? != canonical_form(h2)?;
    checks.push(Check::new("non-isomorphic for tau = P2", "distinct canonical forms", if non_iso { "distinct" } else { "equal" }, non_iso));
    let sigma = builtin_tree("godsil-sigma")?;
    let (l1, l2) = (limb_occurrences(h1, &sigma)?, limb_occurrences(h2, &sigma)?);
    checks.push(Check::new("sigma occurs as a limb more often in the first tree", "first > second", format!("{l1} vs {l2}"), l1 > l2).optional());

    let inputs = vec![
        format!("s1: {}", s1.to_edge_list().replace('\n', "; ")),
        format!("s2: {}", s2.to_edge_list().replace('\n', "; ")),
        "tau for growth and line graphs: P2 rooted at an end".into(),
    ];
    Ok(VerificationReport::finish("distinct-growth-family", inputs, checks, started))
}

/// Co-spectrality of two graphs and optionally of their complements and line graphs.
pub fn verify_cospectral(a: &SimpleGraph, b: &SimpleGraph, complement: bool, line_graph: bool) -> VerificationReport {
    let started = Instant::now();
    let mut checks = Vec::new();
    let mut add = |name: &str, x: &SimpleGraph, y: &SimpleGraph| {
        let ok = cospectral(x, y);
        checks.push(Check::new(name, "co-spectral", if ok { "co-spectral" } else { "not co-spectral" }, ok));
    };
    add("graphs co-spectral", a, b);
    if complement {
        add("complements co-spectral", &a.complement(), &b.complement());
    }
    if line_graph {
        add("line graphs co-spectral", &a.line_graph(), &b.line_graph());
    }
    let inputs = vec![format!("a: {} vertices", a.vertex_count()), format!("b: {} vertices", b.vertex_count())];
    VerificationReport::finish("cospectral", inputs, checks, started)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rooted_tree_counts() {
        // Rooted trees on 2..=4 vertices: 1 + 2 + 4.
        assert_eq!(rooted_trees_up_to(4).unwrap().len(), 7);
    }

    #[test]
    fn sweep_on_p2_only() {
        let r = verify_equal_growth(2).unwrap();
        assert!(r.passed(), "{}", r.render());
    }

    #[test]
    fn sweep_negative_control() {
        // Move the edge 13-15 of the second tree to 12-15.
        let t2 = builtin_tree("mckay-t2").unwrap();
        let mut edges: Vec<_> = t2.graph().edges().iter().copied().filter(|&e| e != (13, 15)).collect();
        edges.push((12, 15));
        let bad = RootedTree::new(SimpleGraph::new(16, edges).unwrap(), 0).unwrap();
        let r = verify_equal_growth_with(&builtin_tree("mckay-t1").unwrap(), &bad, 2).unwrap();
        assert!(!r.check("equal geodesic growth").unwrap().passed);
        assert_ne!(r.verdict, Verdict::Pass);
    }

    #[test]
    fn cospectral_report() {
        let r = verify_cospectral(&SimpleGraph::path(3), &SimpleGraph::star_graph(2), true, true);
        assert!(r.passed());
        let r = verify_cospectral(&SimpleGraph::path(4), &SimpleGraph::star_graph(3), false, false);
        assert_eq!(r.verdict, Verdict::Fail);
    }

    #[test]
    fn json_round_trip() {
        let r = verify_cospectral(&SimpleGraph::path(2), &SimpleGraph::path(2), false, false);
        let s = serde_json::to_string(&r).unwrap();
        assert!(s.contains(r#""schema":"geogrow.verification/v1""#));
        let back: VerificationReport = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
    }
}
