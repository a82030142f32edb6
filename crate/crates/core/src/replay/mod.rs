//! Replays the closed-form values and bounds against computation, producing
//! self-contained reports.

mod expectations;
mod identities;
mod suite;

use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use serde::{Deserialize, Serialize};

pub use expectations::{
    cycle_depth_bound, expected_value, grid_product_bound, Expectation, Form, Quantity, Verdict,
};
pub use identities::{colon_identity_checks, ColonIdentity};
pub use suite::run_suite;

use crate::error::{Error, Result};
use crate::homological::FieldChar;
use crate::ideal::ModuleKind;
use crate::serial::ModuleDoc;

pub const REPORT_SCHEMA: &str = "sdepth-report/1";

/// Bumped whenever a change could alter a computed value or witness.
pub const ALGORITHM_VERSION: u32 = 1;

/// The replay suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    M1,
    M2,
    M3,
    Aux,
    Pairs,
    Conjecture,
    Bounds,
    /// The `m = 4` datapoints; needs [`Limits::allow_stretch`].
    Stretch,
    /// Colon and sum identities only.
    Identities,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::M1,
        Suite::M2,
        Suite::M3,
        Suite::Aux,
        Suite::Pairs,
        Suite::Conjecture,
        Suite::Bounds,
        Suite::Stretch,
        Suite::Identities,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::M1 => "m1",
            Suite::M2 => "m2",
            Suite::M3 => "m3",
            Suite::Aux => "aux",
            Suite::Pairs => "pairs",
            Suite::Conjecture => "conjecture",
            Suite::Bounds => "bounds",
            Suite::Stretch => "stretch",
            Suite::Identities => "identities",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Resource limits for a suite run.
#[derive(Clone, Debug)]
pub struct Limits {
    /// Largest ambient variable count for enumerated instances.
    pub max_vars: usize,
    /// Per-computation budget for Stanley depth searches.
    pub budget: Duration,
    pub field: FieldChar,
    /// Second characteristic for depth rows; disagreements go into notes.
    pub check_field: Option<FieldChar>,
    pub allow_stretch: bool,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_vars: 12,
            budget: Duration::from_secs(60),
            field: FieldChar::default(),
            check_field: Some(FieldChar::new(FieldChar::LARGE).expect("prime")),
            allow_stretch: false,
        }
    }
}

/// The limits as recorded in a report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LimitsDoc {
    pub max_vars: usize,
    pub budget_ms: u64,
    pub field: FieldChar,
    pub check_field: Option<FieldChar>,
    pub allow_stretch: bool,
}

impl From<&Limits> for LimitsDoc {
    fn from(l: &Limits) -> Self {
        LimitsDoc {
            max_vars: l.max_vars,
            budget_ms: l.budget.as_millis() as u64,
            field: l.field,
            check_field: l.check_field,
            allow_stretch: l.allow_stretch,
        }
    }
}

/// Proven bounds on a computed quantity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bracket {
    pub lower: usize,
    pub upper: usize,
}

impl Bracket {
    pub fn exact(v: usize) -> Self {
        Bracket { lower: v, upper: v }
    }
}

impl fmt::Display for Bracket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lower == self.upper {
            write!(f, "{}", self.lower)
        } else {
            write!(f, "[{}, {}]", self.lower, self.upper)
        }
    }
}

/// One checked statement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    /// Unique within a report.
    pub id: String,
    /// What kind of check this is, e.g. `closed_form` or `colon_depth`.
    pub check: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    pub module: ModuleKind,
    pub quantity: Quantity,
    pub expected: Form,
    pub claim: String,
    /// `None` when the computation itself failed; the row is then a `Fail`.
    pub computed: Option<Bracket>,
    pub budget_hit: bool,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    /// The module the computation ran on.
    pub input: ModuleDoc,
    /// The other side of a comparison, when there is one.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reference: Option<ModuleDoc>,
}

impl Row {
    /// The verdict implied by `expected` and `computed`.
    pub fn judged(&self) -> Verdict {
        match self.computed {
            Some(b) => self.expected.judge(b.lower, b.upper),
            None => Verdict::Fail,
        }
    }
}

/// Timing and provenance, kept apart so the rest of a report is
/// reproducible byte for byte.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Header {
    pub tool_version: String,
    pub algorithm_version: u32,
    pub generated_unix: u64,
    pub elapsed_ms: u64,
    /// Per row, in row order.
    pub row_elapsed_ms: Vec<u64>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub inconclusive: usize,
    /// Depth rows whose value changed with the characteristic.
    pub char_disagreements: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub header: Header,
    pub suite: Suite,
    pub limits: LimitsDoc,
    pub rows: Vec<Row>,
    pub summary: Summary,
}

impl Report {
    pub fn from_json(text: &str) -> Result<Self> {
        let report: Report = serde_json::from_str(text)?;
        if report.schema != REPORT_SCHEMA {
            return Err(Error::Parse(format!(
                "report schema {:?} is not supported",
                report.schema
            )));
        }
        if report.header.row_elapsed_ms.len() != report.rows.len() {
            return Err(Error::Parse("row timings do not match the rows".into()));
        }
        Ok(report)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// The report without its header, for diffing runs.
    pub fn body_json(&self) -> String {
        let mut body = serde_json::to_value(self).expect("report serializes");
        if let Some(obj) = body.as_object_mut() {
            obj.remove("header");
        }
        serde_json::to_string_pretty(&body).expect("report serializes")
    }

    /// One line per row; timing is left out.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "id",
            "check",
            "family",
            "module",
            "quantity",
            "expected",
            "computed",
            "budget_hit",
            "verdict",
            "note",
        ])
        .expect("in-memory write");
        for r in &self.rows {
            w.write_record([
                r.id.clone(),
                r.check.clone(),
                r.family.clone().unwrap_or_default(),
                r.module.name().to_string(),
                r.quantity.name().to_string(),
                r.expected.to_string(),
                r.computed.map_or_else(|| "error".into(), |b| b.to_string()),
                r.budget_hit.to_string(),
                format!("{:?}", r.verdict).to_lowercase(),
                r.note.clone().unwrap_or_default(),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("csv is utf-8")
    }

    /// Indices of rows whose stored verdict disagrees with their own data.
    pub fn inconsistent_rows(&self) -> Vec<usize> {
        self.rows
            .iter()
            .enumerate()
            .filter(|(_, r)| r.judged() != r.verdict)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn has_failures(&self) -> bool {
        self.summary.fail > 0
    }
}

pub(crate) fn summarize(rows: &[Row]) -> Summary {
    let mut s = Summary::default();
    for r in rows {
        match r.verdict {
            Verdict::Pass => s.pass += 1,
            Verdict::Fail => s.fail += 1,
            Verdict::Inconclusive => s.inconclusive += 1,
        }
        if r.note
            .as_deref()
            .is_some_and(|n| n.contains(CHAR_DISAGREEMENT))
        {
            s.char_disagreements += 1;
        }
    }
    s
}

pub(crate) const CHAR_DISAGREEMENT: &str = "characteristic-dependent";
