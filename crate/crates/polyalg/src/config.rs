//! Experiment configuration: JSON in, validated [`ExperimentConfig`] out.
//!
//! The schema is shipped as `docs/config.schema.json`.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use polyalg_core::geometry::Polytope;
use polyalg_core::scalar::parse_rational;
use polyalg_core::Rational;
use serde::{Deserialize, Serialize};

use crate::error::{HarnessError, Result};

/// Largest ambient dimension the harness accepts.
pub const MAX_DIM: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
#[value(rename_all = "snake_case")]
pub enum Command {
    Lattice,
    #[value(alias = "algebra-table")]
    AlgebraTable,
    Lefschetz,
    #[value(alias = "hodge-riemann")]
    HodgeRiemann,
    #[value(alias = "af-fuzz")]
    AfFuzz,
    #[value(alias = "oracle-calibrate")]
    OracleCalibrate,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Lattice => "lattice",
            Command::AlgebraTable => "algebra_table",
            Command::Lefschetz => "lefschetz",
            Command::HodgeRiemann => "hodge_riemann",
            Command::AfFuzz => "af_fuzz",
            Command::OracleCalibrate => "oracle_calibrate",
        }
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    #[default]
    Exact,
    Float,
}

impl FromStr for Mode {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(Mode::Exact),
            "float" => Ok(Mode::Float),
            other => Err(HarnessError::Config(format!("unknown mode {other:?}"))),
        }
    }
}

/// Parameters of a seeded random arrangement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RandomLines {
    pub count: usize,
    #[serde(default = "default_bound")]
    pub bound: i64,
    /// Overrides the top-level seed for arrangement draws.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

fn default_bound() -> i64 {
    5
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RandomLinesDraw {
    pub random: RandomLines,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Lines {
    Explicit(Vec<Vec<i64>>),
    Random(RandomLinesDraw),
}

/// A coordinate: an integer or a rational string such as `"-3/4"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coord {
    Int(i64),
    Text(String),
}

impl Coord {
    pub fn to_rational(&self) -> Result<Rational> {
        match self {
            Coord::Int(v) => Ok(Rational::from_integer((*v).into())),
            Coord::Text(s) => parse_rational(s).map_err(|e| HarnessError::Config(format!("bad coordinate {s:?}: {e}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExplicitBody {
    pub vertices: Vec<Vec<Coord>>,
}

impl ExplicitBody {
    pub fn to_polytope(&self, n: usize) -> Result<Polytope> {
        let pts = self
            .vertices
            .iter()
            .map(|v| v.iter().map(Coord::to_rational).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        if let Some(p) = pts.iter().find(|p| p.len() != n) {
            return Err(HarnessError::Config(format!("vertex of length {} in dimension {n}", p.len())));
        }
        let p = Polytope::hull(&pts, n).map_err(|e| HarnessError::Config(format!("bad body: {e}")))?;
        if !p.is_full_dimensional() {
            return Err(HarnessError::Config("body is not full-dimensional".into()));
        }
        Ok(p)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NamedBodies {
    /// The unit cube `[−½, ½]ⁿ`.
    Cube,
    /// Symmetric bodies built from the arrangement's lines with random
    /// positive coefficients.
    ZonotopeFromLines,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Bodies {
    Named(NamedBodies),
    Explicit(Vec<ExplicitBody>),
}

impl Default for Bodies {
    fn default() -> Self {
        Bodies::Named(NamedBodies::ZonotopeFromLines)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    /// Must agree with the command given on the command line, when present.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub command: Option<Command>,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lines: Option<Lines>,
    #[serde(default)]
    pub bodies: Bodies,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default = "default_trials")]
    pub trials: usize,
    #[serde(default)]
    pub mode: Mode,
    /// Relative tolerance of float mode; ignored in exact mode.
    #[serde(default = "default_tolerance")]
    pub tolerance: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<PathBuf>,
    #[serde(default)]
    pub seed: u64,
    /// Number of random points per generated polytope (default `2n + 2`).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<usize>,
    /// Redraw budget for trials whose hypothesis fails.
    #[serde(default = "default_redraws")]
    pub max_redraws: usize,
}

fn default_trials() -> usize {
    1
}

fn default_tolerance() -> f64 {
    1e-9
}

fn default_redraws() -> usize {
    20
}

impl ExperimentConfig {
    /// Minimal config for `command` in dimension `n`, all defaults.
    pub fn new(command: Command, n: usize) -> Self {
        Self {
            command: Some(command),
            n,
            lines: None,
            bodies: Bodies::default(),
            k: None,
            trials: 1,
            mode: Mode::Exact,
            tolerance: default_tolerance(),
            output: None,
            seed: 0,
            points: None,
            max_redraws: default_redraws(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| HarnessError::Config(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| HarnessError::Read { path: path.into(), source })?;
        Self::from_json(&text)
    }

    pub fn command(&self) -> Result<Command> {
        self.command.ok_or_else(|| HarnessError::Config("no command given".into()))
    }

    pub fn points(&self) -> usize {
        self.points.unwrap_or(2 * self.n + 2)
    }

    /// Checks everything that does not need computation.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(HarnessError::Config(msg));
        let command = self.command()?;
        let n = self.n;
        if n == 0 || n > MAX_DIM {
            return bad(format!("n must lie in 1..={MAX_DIM}, got {n}"));
        }
        if self.trials == 0 {
            return bad("trials must be positive".into());
        }
        if self.mode == Mode::Float && !(self.tolerance.is_finite() && self.tolerance > 0.0) {
            return bad(format!("tolerance must be positive and finite, got {}", self.tolerance));
        }
        if let Some(m) = self.points {
            if m <= n {
                return bad(format!("points must exceed n = {n}"));
            }
        }
        match &self.lines {
            Some(Lines::Explicit(lines)) => {
                if let Some(l) = lines.iter().find(|l| l.len() != n) {
                    return bad(format!("line {l:?} has length {} in dimension {n}", l.len()));
                }
                polyalg_core::arrangement::LineArrangement::from_i64(lines, n)
                    .map_err(|e| HarnessError::Config(format!("invalid arrangement: {e}")))?;
            }
            Some(Lines::Random(RandomLinesDraw { random })) => {
                if random.count < n {
                    return bad(format!("{} random lines cannot span dimension {n}", random.count));
                }
                if random.bound < 1 {
                    return bad("bound must be at least 1".into());
                }
                // nonzero vectors up to sign bound the number of lines
                let avail = (2 * random.bound + 1).checked_pow(n as u32).map_or(i64::MAX, |v| (v - 1) / 2);
                if random.count as i64 > avail {
                    return bad(format!("bound {} too small for {} lines", random.bound, random.count));
                }
            }
            None => {}
        }
        if let Bodies::Explicit(bodies) = &self.bodies {
            if bodies.is_empty() {
                return bad("explicit body list is empty".into());
            }
            for b in bodies {
                b.to_polytope(n)?;
            }
        }
        match command {
            Command::Lattice | Command::AlgebraTable => {}
            Command::Lefschetz => {
                if let Some(k) = self.k {
                    if 2 * k > n {
                        return bad(format!("k = {k} exceeds n / 2"));
                    }
                }
            }
            Command::HodgeRiemann => {
                let k = self.k.unwrap_or(1);
                if n < 2 || k == 0 || 2 * k > n {
                    return bad(format!("hodge_riemann needs n >= 2 and 1 <= k <= n / 2, got n = {n}, k = {k}"));
                }
            }
            Command::AfFuzz => {
                if n < 2 {
                    return bad("af_fuzz needs n >= 2".into());
                }
                if let Bodies::Explicit(bodies) = &self.bodies {
                    for b in bodies {
                        if !b.to_polytope(n)?.is_centrally_symmetric() {
                            return bad("af_fuzz bodies must be centrally symmetric".into());
                        }
                    }
                }
            }
            Command::OracleCalibrate => {
                if !(2..=3).contains(&n) {
                    return bad(format!("oracle_calibrate supports n in {{2, 3}}, got {n}"));
                }
            }
        }
        Ok(())
    }
}
