//! Machine-readable run reports and bound tables.
//!
//! Every graph inside a report is embedded as graph6. Timing lives in `wall_ms` fields only, so two
//! runs with the same [`RunConfig`] produce identical reports once those fields are dropped.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::bounds::BoundId;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::invariants::{
    chromatic_number, is_triangle_free, max_matching, min_vertex_cover, odd_cycle_transversal,
    odd_girth, verify::verify_certificate, Certificate,
};
use crate::lemmas::{BipartizationTrace, ClassifierVerdict};
use crate::search::{SearchReport, Verdict};

pub const SCHEMA_VERSION: u32 = 1;

/// Process exit codes shared by the command-line front end.
pub mod exit {
    pub const SUCCESS: i32 = 0;
    pub const INTERNAL: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const CAPACITY: i32 = 3;
    pub const BOUND_VIOLATED: i32 = 4;
}

/// The command and every parameter that influences its output.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct RunConfig {
    pub command: String,
    pub params: BTreeMap<String, String>,
    pub jobs: usize,
    pub enumerate_ceiling: usize,
    pub max_edges_ceiling: usize,
    pub out: Option<String>,
    pub seed: Option<u64>,
}

/// Invariants of one graph with their certificates.
///
/// Solver fields are `None` when the solver hit its capacity limit; `partial` is then set and the
/// failure is listed in `errors`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub graph: String,
    pub n: usize,
    pub e: usize,
    pub min_degree: usize,
    pub triangle_free: bool,
    pub chi: Option<usize>,
    pub d2: Option<usize>,
    pub nu: usize,
    pub tau: Option<usize>,
    /// `None` for bipartite graphs.
    pub odd_girth: Option<usize>,
    pub certificates: Vec<Certificate>,
    pub partial: bool,
    pub errors: Vec<ErrorItem>,
}

/// Computes every invariant of `g`, keeping going past capacity errors.
pub fn invariant_report(g: &Graph) -> InvariantReport {
    let mut rep = InvariantReport {
        graph: to_graph6(g),
        n: g.n(),
        e: g.edge_count(),
        min_degree: g.min_degree(),
        triangle_free: is_triangle_free(g),
        chi: None,
        d2: None,
        nu: 0,
        tau: None,
        odd_girth: odd_girth(g),
        certificates: Vec::new(),
        partial: false,
        errors: Vec::new(),
    };
    match chromatic_number(g) {
        Ok(c) => {
            rep.chi = Some(c.chi);
            rep.certificates.push(c.certificate());
        }
        Err(e) => rep.errors.push(ErrorItem::new(None, &e)),
    }
    match odd_cycle_transversal(g) {
        Ok(o) => {
            rep.d2 = Some(o.d2);
            rep.certificates.push(o.certificate());
        }
        Err(e) => rep.errors.push(ErrorItem::new(None, &e)),
    }
    let m = max_matching(g);
    rep.nu = m.nu;
    rep.certificates.push(m.certificate());
    match min_vertex_cover(g) {
        Ok(c) => {
            rep.tau = Some(c.tau);
            rep.certificates.push(c.certificate());
        }
        Err(e) => rep.errors.push(ErrorItem::new(None, &e)),
    }
    rep.partial = !rep.errors.is_empty();
    rep
}

impl InvariantReport {
    /// Re-checks every certificate against `g` with the independent verifiers.
    pub fn audit(&self, g: &Graph) -> std::result::Result<(), String> {
        self.certificates
            .iter()
            .try_for_each(|c| verify_certificate(g, c))
    }
}

/// A failure recorded as a report item rather than a crash.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorItem {
    pub n: Option<usize>,
    /// `parse`, `domain`, `capacity`, `precondition` or `internal`.
    pub kind: String,
    pub message: String,
    pub best_known: Option<usize>,
}

impl ErrorItem {
    pub fn new(n: Option<usize>, e: &Error) -> Self {
        let (kind, best_known) = match e {
            Error::Parse { .. } => ("parse", None),
            Error::Domain(_) => ("domain", None),
            Error::Capacity { best_known, .. } => ("capacity", *best_known),
            Error::Precondition(_) => ("precondition", None),
            Error::Internal(_) => ("internal", None),
        };
        ErrorItem {
            n,
            kind: kind.to_string(),
            message: e.to_string(),
            best_known,
        }
    }
}

/// Closed-form bound values over a range of orders.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundTable {
    pub bounds: Vec<BoundId>,
    pub r: Option<usize>,
    pub rows: Vec<BoundRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundRow {
    pub n: usize,
    /// One entry per bound, `None` where the closed form is undefined.
    pub values: Vec<Option<u64>>,
}

impl BoundTable {
    pub fn new(
        bounds: Vec<BoundId>,
        r: Option<usize>,
        range: std::ops::RangeInclusive<usize>,
    ) -> Self {
        let rows = range
            .map(|n| BoundRow {
                n,
                values: bounds.iter().map(|b| b.evaluate(n, r).ok()).collect(),
            })
            .collect();
        BoundTable { bounds, r, rows }
    }

    /// CSV with header `n,<bound>,...`; undefined cells are empty.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n");
        for b in &self.bounds {
            out.push(',');
            out.push_str(b.name());
        }
        out.push('\n');
        for row in &self.rows {
            let _ = write!(out, "{}", row.n);
            for v in &row.values {
                out.push(',');
                if let Some(v) = v {
                    let _ = write!(out, "{v}");
                }
            }
            out.push('\n');
        }
        out
    }
}

/// One result inside a report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum ReportItem {
    Graph {
        name: String,
        graph: String,
        n: usize,
        e: usize,
    },
    Invariants(InvariantReport),
    Search(SearchReport),
    Bipartization {
        graph: String,
        trace: BipartizationTrace,
    },
    Classification {
        graph: String,
        verdict: ClassifierVerdict,
        verified: bool,
    },
    BoundTable(BoundTable),
    Check {
        name: String,
        passed: bool,
        detail: String,
    },
    Error(ErrorItem),
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Timing {
    pub wall_ms: f64,
}

/// Aggregate outcome and the exit code it maps to.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Summary {
    pub items: usize,
    pub bound_violations: usize,
    pub capacity_errors: usize,
    /// Parse, domain and precondition failures.
    pub input_errors: usize,
    pub internal_errors: usize,
    pub failed_checks: usize,
    pub exit_code: i32,
}

impl Summary {
    fn count_error(&mut self, e: &ErrorItem) {
        match e.kind.as_str() {
            "capacity" => self.capacity_errors += 1,
            "internal" => self.internal_errors += 1,
            _ => self.input_errors += 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: RunConfig,
    pub items: Vec<ReportItem>,
    pub timing: Timing,
    pub summary: Summary,
}

impl Report {
    pub fn new(command: RunConfig) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            command,
            items: Vec::new(),
            timing: Timing::default(),
            summary: Summary::default(),
        }
    }

    pub fn push(&mut self, item: ReportItem) {
        self.items.push(item);
    }

    /// Recomputes the summary. Exit code precedence: violated bound, capacity, bad input, then
    /// internal failures.
    pub fn finish(&mut self, wall_ms: f64) {
        let mut s = Summary {
            items: self.items.len(),
            ..Summary::default()
        };
        for item in &self.items {
            match item {
                ReportItem::Search(r) if r.verdict == Some(Verdict::BoundViolated) => {
                    s.bound_violations += 1
                }
                ReportItem::Invariants(r) => {
                    r.errors.iter().for_each(|e| s.count_error(e));
                }
                ReportItem::Error(e) => s.count_error(e),
                ReportItem::Check { passed: false, .. } => s.failed_checks += 1,
                ReportItem::Classification {
                    verified: false, ..
                } => s.failed_checks += 1,
                _ => {}
            }
        }
        s.exit_code = if s.bound_violations > 0 {
            exit::BOUND_VIOLATED
        } else if s.capacity_errors > 0 {
            exit::CAPACITY
        } else if s.input_errors > 0 {
            exit::USAGE
        } else if s.internal_errors + s.failed_checks > 0 {
            exit::INTERNAL
        } else {
            exit::SUCCESS
        };
        self.summary = s;
        self.timing.wall_ms = wall_ms;
    }

    /// Graph6 of every graph embedded in the report, in item order.
    pub fn graphs(&self) -> Vec<&str> {
        let mut out = Vec::new();
        for item in &self.items {
            match item {
                ReportItem::Graph { graph, .. }
                | ReportItem::Bipartization { graph, .. }
                | ReportItem::Classification { graph, .. } => out.push(graph.as_str()),
                ReportItem::Invariants(r) => out.push(r.graph.as_str()),
                ReportItem::Search(r) => out.extend(r.witnesses.iter().map(String::as_str)),
                _ => {}
            }
        }
        out
    }
}

/// Checks every certificate of an invariant report; `Err` names the first failure.
pub fn audit_invariants(g: &Graph) -> Result<InvariantReport> {
    let rep = invariant_report(g);
    rep.audit(g).map_err(Error::Internal)?;
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete, cycle, grotzsch};

    #[test]
    fn invariants_of_known_graphs() {
        let r = audit_invariants(&grotzsch()).unwrap();
        assert_eq!((r.e, r.chi, r.triangle_free), (20, Some(4), true));
        let c7 = audit_invariants(&cycle(7).unwrap()).unwrap();
        assert_eq!((c7.nu, c7.tau, c7.odd_girth), (3, Some(4), Some(7)));
        let k2 = audit_invariants(&complete(2)).unwrap();
        assert_eq!((k2.chi, k2.d2, k2.odd_girth), (Some(2), Some(0), None));
    }

    #[test]
    fn bound_table_csv() {
        let t = BoundTable::new(vec![BoundId::Mantel, BoundId::Chi4], None, 3..=4);
        assert_eq!(t.to_csv(), "n,mantel,chi4\n3,2,\n4,4,5\n");
    }

    #[test]
    fn summary_exit_codes() {
        let mut r = Report::new(RunConfig::default());
        r.finish(0.0);
        assert_eq!(r.summary.exit_code, exit::SUCCESS);
        r.push(ReportItem::Error(ErrorItem::new(
            Some(20),
            &Error::Capacity {
                what: "max_edges",
                limit: 13,
                best_known: Some(70),
            },
        )));
        r.finish(0.0);
        assert_eq!(r.summary.exit_code, exit::CAPACITY);
    }
}
