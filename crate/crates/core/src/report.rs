//! Machine-readable result document shared by the CLI and the tests.

use serde::{Deserialize, Serialize};

use crate::conventions::{frozen, Conventions};
use crate::homology::{Grading, TriGradedSpace};
use crate::laurent::Laurent2;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputEcho {
    pub command: String,
    pub word: String,
    /// Word the computation actually ran on, when it differs.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub presentation: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    pub max_degree: i32,
    pub margin: u32,
    pub simplify: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DocConventions {
    #[serde(flatten)]
    pub frozen: Conventions,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grading: Option<Grading>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Match,
    Mismatch,
    NotCompared,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub status: Status,
    /// `(sign, a-exponent, q-exponent)` with `euler = sign·a^·q^·oracle`,
    /// after the frozen change of variables for HOMFLY tables.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub monomial: Option<(i64, i32, i32)>,
    pub stabilized: bool,
    pub last_degree: i32,
    pub detail: String,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timing {
    pub total_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub input: InputEcho,
    pub conventions: DocConventions,
    pub table: Vec<[i64; 4]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub euler: Option<Laurent2>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<Laurent2>,
    pub verdict: Verdict,
    pub timing: Timing,
}

impl ResultDocument {
    pub fn from_table(input: InputEcho, t: &TriGradedSpace) -> Self {
        ResultDocument {
            input,
            conventions: DocConventions { frozen: frozen(), grading: Some(t.grading) },
            table: t.table(),
            euler: Some(t.euler()),
            oracle: None,
            verdict: Verdict {
                status: Status::NotCompared,
                monomial: None,
                stabilized: !t.truncated,
                last_degree: t.last_degree,
                detail: String::new(),
            },
            timing: Timing::default(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    pub fn render_text(&self) -> String {
        let mut s = format!("{} {}\n", self.input.command, self.input.word);
        if let Some(p) = &self.input.presentation {
            s.push_str(&format!("computed on {p}\n"));
        }
        if !self.table.is_empty() {
            s.push_str("   k    i    j  dim\n");
            for [k, i, j, d] in &self.table {
                s.push_str(&format!("{k:>4} {i:>4} {j:>4} {d:>4}\n"));
            }
        }
        if let Some(e) = &self.euler {
            s.push_str(&format!("euler: {e}\n"));
        }
        if let Some(o) = &self.oracle {
            s.push_str(&format!("oracle: {o}\n"));
        }
        let v = &self.verdict;
        let status = match v.status {
            Status::Match => "match",
            Status::Mismatch => "MISMATCH",
            Status::NotCompared => "not compared",
        };
        s.push_str(&format!("verdict: {status}"));
        if let Some((sg, a, q)) = v.monomial {
            s.push_str(&format!(" (monomial {sg} a^{a} q^{q})"));
        }
        if !v.detail.is_empty() {
            s.push_str(&format!(" {}", v.detail));
        }
        s.push('\n');
        if !v.stabilized {
            s.push_str(&format!("warning: window ended at degree {} before stabilizing\n", v.last_degree));
        }
        s.push_str(&format!("time: {} ms\n", self.timing.total_ms));
        s
    }
}
