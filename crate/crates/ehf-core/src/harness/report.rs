//! Suite identities and the aggregate verification report.

use crate::format::{to_graph6, Format};
use crate::graph::Graph;
use serde_json::{json, Value};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SuiteId {
    Subgraphs,
    Main,
    HtEhf,
    GetLocal,
    TreeStruct,
    SkewPyr,
    MajorClique,
    Funnies,
    SplendidPrism,
    PyrStrip,
    GrowStrips,
    GetClique,
    Trichotomy,
    StripToBip,
}

impl SuiteId {
    pub const ALL: [SuiteId; 14] = [
        SuiteId::Subgraphs,
        SuiteId::Main,
        SuiteId::HtEhf,
        SuiteId::GetLocal,
        SuiteId::TreeStruct,
        SuiteId::SkewPyr,
        SuiteId::MajorClique,
        SuiteId::Funnies,
        SuiteId::SplendidPrism,
        SuiteId::PyrStrip,
        SuiteId::GrowStrips,
        SuiteId::GetClique,
        SuiteId::Trichotomy,
        SuiteId::StripToBip,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SuiteId::Subgraphs => "SUBGRAPHS",
            SuiteId::Main => "MAIN",
            SuiteId::HtEhf => "HT_EHF",
            SuiteId::GetLocal => "GETLOCAL",
            SuiteId::TreeStruct => "TREESTRUCT",
            SuiteId::SkewPyr => "SKEWPYR",
            SuiteId::MajorClique => "MAJORCLIQUE",
            SuiteId::Funnies => "FUNNIES",
            SuiteId::SplendidPrism => "SPLENDIDPRISM",
            SuiteId::PyrStrip => "PYRSTRIP",
            SuiteId::GrowStrips => "GROWSTRIPS",
            SuiteId::GetClique => "GETCLIQUE",
            SuiteId::Trichotomy => "TRICHOTOMY",
            SuiteId::StripToBip => "STRIPTOBIP",
        }
    }
}

impl FromStr for SuiteId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let up = s.to_ascii_uppercase();
        SuiteId::ALL
            .into_iter()
            .find(|id| id.name() == up)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

impl fmt::Display for SuiteId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One failed instance: the graph it happened on, a human-readable witness,
/// and whether the verdict leans on an uncertified (locally-maximal only)
/// search result.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub graph: String,
    pub witness: String,
    pub caveat: bool,
}

/// Mutable counting state threaded through a suite run. Chunks tally
/// independently and merge, so parallel and serial runs agree.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub inapplicable: u64,
    pub passes: u64,
    pub fails: u64,
    pub budget_hits: u64,
    pub violations: Vec<Violation>,
}

impl Tally {
    pub fn new() -> Self {
        Tally::default()
    }

    pub fn pass(&mut self) {
        self.passes += 1;
    }

    pub fn inapplicable(&mut self) {
        self.inapplicable += 1;
    }

    pub fn budget_hit(&mut self) {
        self.budget_hits += 1;
    }

    pub fn fail(&mut self, g: &Graph, witness: impl Into<String>, caveat: bool) {
        self.fails += 1;
        self.violations.push(Violation {
            graph: to_graph6(g),
            witness: witness.into(),
            caveat,
        });
    }

    pub fn merge(&mut self, other: Tally) {
        self.inapplicable += other.inapplicable;
        self.passes += other.passes;
        self.fails += other.fails;
        self.budget_hits += other.budget_hits;
        self.violations.extend(other.violations);
    }
}

/// Aggregate outcome of one suite run. `instances_tested` is always the sum
/// of the four disposition counters, and every fail carries a violation.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub suite: SuiteId,
    pub instances_tested: u64,
    pub inapplicable: u64,
    pub passes: u64,
    pub fails: u64,
    pub budget_hits: u64,
    pub violations: Vec<Violation>,
    pub wall_ms: u128,
}

impl VerificationReport {
    pub fn from_tally(suite: SuiteId, tally: Tally, wall_ms: u128) -> Self {
        debug_assert_eq!(tally.fails as usize, tally.violations.len());
        VerificationReport {
            suite,
            instances_tested: tally.inapplicable + tally.passes + tally.fails + tally.budget_hits,
            inapplicable: tally.inapplicable,
            passes: tally.passes,
            fails: tally.fails,
            budget_hits: tally.budget_hits,
            violations: tally.violations,
            wall_ms,
        }
    }

    /// Fails that do not hide behind a locally-maximal caveat. Any nonzero
    /// value here is a genuine counterexample claim.
    pub fn caveat_free_fails(&self) -> u64 {
        self.violations.iter().filter(|v| !v.caveat).count() as u64
    }

    pub fn to_json(&self) -> Value {
        let mut v = self.stable_value();
        v["wall_ms"] = json!(self.wall_ms as u64);
        v
    }

    /// Everything except wall time: the part two identical runs must agree
    /// on byte for byte.
    pub fn stable_json(&self) -> String {
        self.stable_value().to_string()
    }

    fn stable_value(&self) -> Value {
        json!({
            "suite": self.suite.name(),
            "instances_tested": self.instances_tested,
            "inapplicable": self.inapplicable,
            "passes": self.passes,
            "fails": self.fails,
            "budget_hits": self.budget_hits,
            "violations": self.violations.iter().map(|v| json!({
                "graph": v.graph,
                "witness": v.witness,
                "caveat": v.caveat,
            })).collect::<Vec<_>>(),
        })
    }

    pub fn to_table(&self) -> String {
        let mut out = format!(
            "{:<13} tested {:>9}  inapplicable {:>9}  pass {:>9}  fail {:>5}  budget {:>5}  ({} ms)",
            self.suite.name(),
            self.instances_tested,
            self.inapplicable,
            self.passes,
            self.fails,
            self.budget_hits,
            self.wall_ms,
        );
        for v in &self.violations {
            let tag = if v.caveat { " [caveat]" } else { "" };
            out.push_str(&format!("\n  violation{tag} on {}: {}", v.graph, v.witness));
        }
        out
    }
}

/// Used by the CLI to echo a violation's graph in the caller's format.
pub fn violation_graph(v: &Violation) -> Result<Graph, crate::format::ParseError> {
    crate::format::parse_graph(&v.graph, Format::Graph6).map(|d| d.graph)
}
