//! Machine-readable experiment reports.
//!
//! Everything except [`Timing`] is a pure function of the config (seed
//! included), so two runs of the same config produce byte-identical
//! [`ExperimentReport::comparable_json`].

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use polyalg_core::linalg::Inertia;
use polyalg_core::{RadicalScalar, Rational};
use serde::{Deserialize, Serialize};

use crate::config::{Command, ExperimentConfig};
use crate::error::{HarnessError, Result};

/// An exact value with a decimal approximation for readers.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Num {
    pub exact: String,
    pub approx: f64,
}

impl From<&RadicalScalar> for Num {
    fn from(x: &RadicalScalar) -> Self {
        Num { exact: x.to_string(), approx: x.to_f64() }
    }
}

impl From<&Rational> for Num {
    fn from(q: &Rational) -> Self {
        Num::from(&RadicalScalar::from_rational(q.clone()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Signature {
    pub positive: usize,
    pub zero: usize,
    pub negative: usize,
}

impl From<Inertia> for Signature {
    fn from(i: Inertia) -> Self {
        Signature { positive: i.positive, zero: i.zero, negative: i.negative }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// Every checked statement held.
    Pass,
    /// A proven statement failed; the offending trials carry replay data.
    Violation,
    /// Exploratory output for conjectural statements, internally consistent.
    Informational,
    /// Some trials could not be decided, e.g. a hypothesis never held.
    Inconclusive,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Violation => 1,
            _ => 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub verdict: Verdict,
    pub trials: usize,
    pub passed: usize,
    pub failed: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

/// Normalization constants in force for the report's dimension.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CalibrationUsed {
    pub n: usize,
    /// Ratio of each route to the χ oracle, by route name.
    pub constants: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub command: Command,
    pub config: ExperimentConfig,
    pub results: Vec<serde_json::Value>,
    pub summary: Summary,
    pub calibration: CalibrationUsed,
    pub timing: Timing,
}

impl ExperimentReport {
    pub fn exit_code(&self) -> i32 {
        self.summary.verdict.exit_code()
    }

    /// The deterministic part of the report.
    pub fn comparable_json(&self) -> Result<String> {
        let mut v = serde_json::to_value(self)?;
        if let Some(obj) = v.as_object_mut() {
            obj.remove("timing");
        }
        Ok(serde_json::to_string_pretty(&v)?)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        let text = self.to_json()? + "\n";
        std::fs::write(path, text).map_err(|source| HarnessError::Write { path: path.into(), source })
    }

    /// Short plain-text table for the terminal.
    pub fn text_summary(&self) -> String {
        let s = &self.summary;
        let mut out = String::new();
        let _ = writeln!(out, "{:<12} {:>6} {:>6} {:>6}  verdict", "command", "trials", "passed", "failed");
        let _ = writeln!(
            out,
            "{:<12} {:>6} {:>6} {:>6}  {:?}",
            self.command.name(),
            s.trials,
            s.passed,
            s.failed,
            s.verdict
        );
        for note in &s.notes {
            let _ = writeln!(out, "  note: {note}");
        }
        let _ = writeln!(out, "  elapsed: {} ms", self.timing.elapsed_ms);
        out
    }
}
