//! Scenario files.
//!
//! ```text
//! file     := line*
//! line     := blank | comment | entry | section
//! comment  := "#" any*
//! entry    := key ":" value
//! section  := "[task " task-name "]"
//! ```
//!
//! Header keys (before the first section): `name`, `description`,
//! `characteristic`, `variables`, `ideal`, `prime` (repeatable, declares a
//! minimal prime of `R`), `seed` (repeatable, extra discovery seed).
//!
//! Value forms:
//!
//! * ideal: `(g1, g2, ..)` or `g1, g2`; `0` is the zero ideal
//! * ideal list: ideals separated by `;`
//! * multiplicative set: `one`, `rcirc`, `complement I1; I2; ..`, `powers f`
//!
//! Each task accepts its own keys; anything else is rejected. Keys starting
//! with `expect.` are checked after the task runs.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use charp_core::ffpoly::{parse_polynomial, Characteristic, PolyRing, Polynomial};
use charp_core::frobpure::RingPresentation;
use charp_core::idealkit::Ideal;
use charp_core::stight::MultSet;
use charp_core::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScenarioError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl fmt::Display for ScenarioError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.col, self.msg)
    }
}

impl std::error::Error for ScenarioError {}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TaskKind {
    FpureCheck,
    SpecialIdeals,
    STestIdeal,
    Realize,
    TightClosure,
    Chain,
    SkewmodCrosscheck,
}

impl TaskKind {
    pub const ALL: [TaskKind; 7] = [
        TaskKind::FpureCheck,
        TaskKind::SpecialIdeals,
        TaskKind::STestIdeal,
        TaskKind::Realize,
        TaskKind::TightClosure,
        TaskKind::Chain,
        TaskKind::SkewmodCrosscheck,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TaskKind::FpureCheck => "fpure-check",
            TaskKind::SpecialIdeals => "special-ideals",
            TaskKind::STestIdeal => "s-test-ideal",
            TaskKind::Realize => "realize",
            TaskKind::TightClosure => "tight-closure",
            TaskKind::Chain => "chain",
            TaskKind::SkewmodCrosscheck => "skewmod-crosscheck",
        }
    }

    fn keys(self) -> &'static [(&'static str, ValueKind)] {
        use ValueKind::*;
        match self {
            TaskKind::FpureCheck => &[("expect.fpure", Bool), ("expect.u", Poly)],
            TaskKind::SpecialIdeals => &[
                ("expect.primes", IdealList),
                ("expect.primes-include", IdealList),
                ("expect.members", Int),
            ],
            TaskKind::STestIdeal => &[
                ("s", Mult),
                ("expect.ideal", IdealValue),
                ("expect.element", Poly),
            ],
            TaskKind::Realize => &[
                ("target", TargetValue),
                ("expect.s", Mult),
                ("expect.roundtrip", Bool),
            ],
            TaskKind::TightClosure => &[
                ("r", Poly),
                ("a_test", IdealValue),
                ("s", Mult),
                ("levels", Int),
                ("expect.verdict", Verdict),
                ("expect.certificate", Poly),
            ],
            TaskKind::Chain => &[("max-steps", Int), ("expect.chain", IdealList)],
            TaskKind::SkewmodCrosscheck => &[
                ("a_test", IdealValue),
                ("s", Mult),
                ("levels", Int),
                ("degree", Int),
                ("expect.agree", Bool),
                ("expect.delta-dim", Int),
            ],
        }
    }
}

impl std::str::FromStr for TaskKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        TaskKind::ALL
            .iter()
            .copied()
            .find(|k| k.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = TaskKind::ALL.iter().map(|k| k.name()).collect();
                format!("unknown task `{s}` (expected one of {})", names.join(", "))
            })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum ValueKind {
    Bool,
    Int,
    Poly,
    IdealValue,
    IdealList,
    Mult,
    Verdict,
    /// An ideal or the word `all` (every lattice member).
    TargetValue,
}

/// A raw value with its source position (1-based line and column).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Field {
    pub value: String,
    pub line: usize,
    pub col: usize,
}

#[derive(Clone, Debug)]
pub struct TaskSpec {
    pub kind: TaskKind,
    pub line: usize,
    pub params: BTreeMap<String, Field>,
}

#[derive(Clone, Debug)]
pub struct Scenario {
    pub name: Option<String>,
    pub description: Option<String>,
    pub characteristic: u64,
    pub variables: Vec<String>,
    pub ideal: Field,
    pub primes: Vec<Field>,
    pub seeds: Vec<Field>,
    pub tasks: Vec<TaskSpec>,
    ring: Arc<PolyRing>,
}

fn err(line: usize, col: usize, msg: impl Into<String>) -> ScenarioError {
    ScenarioError {
        line,
        col,
        msg: msg.into(),
    }
}

/// Shifts a core parse error to file coordinates.
fn lift(e: Error, f: &Field) -> ScenarioError {
    match e {
        Error::Syntax { pos, msg } => err(f.line, f.col + pos, msg),
        Error::UnknownVariable { name, pos } => {
            err(f.line, f.col + pos, format!("unknown variable `{name}`"))
        }
        other => err(f.line, f.col, other.to_string()),
    }
}

impl Scenario {
    pub fn parse(text: &str) -> Result<Scenario, ScenarioError> {
        let mut header: BTreeMap<String, Field> = BTreeMap::new();
        let mut primes = Vec::new();
        let mut seeds = Vec::new();
        let mut tasks: Vec<TaskSpec> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim_start();
            let indent = raw.len() - trimmed.len();
            let content = trimmed.trim_end();
            if content.is_empty() || content.starts_with('#') {
                continue;
            }
            if let Some(rest) = content.strip_prefix('[') {
                let inner = rest
                    .strip_suffix(']')
                    .ok_or_else(|| err(line, indent + 1, "section header must end with `]`"))?;
                let name = inner
                    .trim()
                    .strip_prefix("task ")
                    .ok_or_else(|| err(line, indent + 2, "expected `[task <name>]`"))?
                    .trim();
                let kind: TaskKind = name
                    .parse()
                    .map_err(|m: String| err(line, indent + 1 + inner.find(name).unwrap_or(0) + 1, m))?;
                tasks.push(TaskSpec {
                    kind,
                    line,
                    params: BTreeMap::new(),
                });
                continue;
            }
            let colon = content
                .find(':')
                .ok_or_else(|| err(line, indent + 1, "expected `key: value`"))?;
            let key = content[..colon].trim().to_string();
            let value_raw = &content[colon + 1..];
            let lead = value_raw.len() - value_raw.trim_start().len();
            // strip trailing comments
            let value = match value_raw.find(" #") {
                Some(i) => &value_raw[..i],
                None => value_raw,
            }
            .trim()
            .to_string();
            let field = Field {
                value,
                line,
                col: indent + colon + 2 + lead,
            };
            let key_col = indent + 1;
            match tasks.last_mut() {
                None => match key.as_str() {
                    "prime" => primes.push(field),
                    "seed" => seeds.push(field),
                    "name" | "description" | "characteristic" | "variables" | "ideal" => {
                        if header.insert(key.clone(), field).is_some() {
                            return Err(err(line, key_col, format!("duplicate key `{key}`")));
                        }
                    }
                    _ => return Err(err(line, key_col, format!("unknown field `{key}`"))),
                },
                Some(task) => {
                    if !task.kind.keys().iter().any(|(k, _)| *k == key) {
                        return Err(err(
                            line,
                            key_col,
                            format!("unknown field `{key}` for task {}", task.kind.name()),
                        ));
                    }
                    if task.params.insert(key.clone(), field).is_some() {
                        return Err(err(line, key_col, format!("duplicate key `{key}`")));
                    }
                }
            }
        }
        let need = |k: &str| -> Result<Field, ScenarioError> {
            header
                .get(k)
                .cloned()
                .ok_or_else(|| err(1, 1, format!("missing required field `{k}`")))
        };
        let p_field = need("characteristic")?;
        let characteristic: u64 = p_field
            .value
            .parse()
            .map_err(|_| err(p_field.line, p_field.col, "characteristic must be an integer"))?;
        let field = Characteristic::new(characteristic)
            .map_err(|e| err(p_field.line, p_field.col, e.to_string()))?;
        let v_field = need("variables")?;
        let variables: Vec<String> = v_field
            .value
            .split(',')
            .map(|s| s.trim().to_string())
            .filter(|s| !s.is_empty())
            .collect();
        let ring = PolyRing::new(field, &variables)
            .map_err(|e| err(v_field.line, v_field.col, e.to_string()))?;
        let ideal = need("ideal")?;
        let scenario = Scenario {
            name: header.get("name").map(|f| f.value.clone()),
            description: header.get("description").map(|f| f.value.clone()),
            characteristic,
            variables,
            ideal,
            primes,
            seeds,
            tasks,
            ring,
        };
        scenario.validate()?;
        Ok(scenario)
    }

    fn validate(&self) -> Result<(), ScenarioError> {
        self.parse_ideal(&self.ideal)?;
        for f in self.primes.iter().chain(&self.seeds) {
            self.parse_ideal(f)?;
        }
        for t in &self.tasks {
            for (key, kind) in t.kind.keys() {
                let Some(f) = t.params.get(*key) else { continue };
                match kind {
                    ValueKind::Bool => {
                        parse_bool(f)?;
                    }
                    ValueKind::Int => {
                        parse_int(f)?;
                    }
                    ValueKind::Poly => {
                        self.parse_poly(f)?;
                    }
                    ValueKind::IdealValue => {
                        self.parse_ideal(f)?;
                    }
                    ValueKind::IdealList => {
                        self.parse_ideal_list(f)?;
                    }
                    ValueKind::Mult => {
                        self.parse_mult(f)?;
                    }
                    ValueKind::Verdict => {
                        parse_verdict(f)?;
                    }
                    ValueKind::TargetValue => {
                        if f.value != "all" {
                            self.parse_ideal(f)?;
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn parse_poly(&self, f: &Field) -> Result<Polynomial, ScenarioError> {
        parse_polynomial(&f.value, &self.ring).map_err(|e| lift(e, f))
    }

    pub fn parse_ideal(&self, f: &Field) -> Result<Ideal, ScenarioError> {
        Ideal::parse(&self.ring, &f.value).map_err(|e| lift(e, f))
    }

    pub fn parse_ideal_list(&self, f: &Field) -> Result<Vec<Ideal>, ScenarioError> {
        let mut out = Vec::new();
        let mut offset = 0;
        for part in f.value.split(';') {
            let lead = part.len() - part.trim_start().len();
            let sub = Field {
                value: part.trim().to_string(),
                line: f.line,
                col: f.col + offset + lead,
            };
            offset += part.len() + 1;
            if sub.value.is_empty() {
                continue;
            }
            out.push(self.parse_ideal(&sub)?);
        }
        Ok(out)
    }

    pub fn parse_mult(&self, f: &Field) -> Result<MultSet, ScenarioError> {
        let v = f.value.as_str();
        if v == "one" {
            return Ok(MultSet::One);
        }
        if v == "rcirc" {
            return Ok(MultSet::RCirc);
        }
        if let Some(rest) = v.strip_prefix("complement") {
            let sub = Field {
                value: rest.to_string(),
                line: f.line,
                col: f.col + "complement".len(),
            };
            let primes = self.parse_ideal_list(&sub)?;
            return Ok(MultSet::ComplementOfPrimes(primes));
        }
        if let Some(rest) = v.strip_prefix("powers ") {
            let sub = Field {
                value: rest.to_string(),
                line: f.line,
                col: f.col + "powers ".len(),
            };
            return Ok(MultSet::PowersOf(self.parse_poly(&sub)?));
        }
        Err(err(
            f.line,
            f.col,
            "expected `one`, `rcirc`, `complement I; ..` or `powers f`",
        ))
    }

    /// Defining ideal with declared primes and seeds.
    pub fn presentation(&self) -> Result<RingPresentation, ScenarioError> {
        let a = self.parse_ideal(&self.ideal)?;
        let primes = self
            .primes
            .iter()
            .map(|f| self.parse_ideal(f))
            .collect::<Result<Vec<_>, _>>()?;
        let seeds = self
            .seeds
            .iter()
            .map(|f| self.parse_ideal(f))
            .collect::<Result<Vec<_>, _>>()?;
        RingPresentation::builder(a)
            .declare_primes(primes)
            .seeds(seeds)
            .build()
            .map_err(|e| err(self.ideal.line, self.ideal.col, e.to_string()))
    }
}

pub fn parse_bool(f: &Field) -> Result<bool, ScenarioError> {
    match f.value.as_str() {
        "true" | "yes" => Ok(true),
        "false" | "no" => Ok(false),
        _ => Err(err(f.line, f.col, "expected `true` or `false`")),
    }
}

pub fn parse_int(f: &Field) -> Result<u64, ScenarioError> {
    f.value
        .parse()
        .map_err(|_| err(f.line, f.col, "expected a non-negative integer"))
}

/// Accepted verdict words.
pub const VERDICTS: [&str; 4] = ["member", "nonmember", "member-certified", "member-up-to-bound"];

pub fn parse_verdict(f: &Field) -> Result<&str, ScenarioError> {
    VERDICTS
        .iter()
        .copied()
        .find(|v| *v == f.value)
        .ok_or_else(|| err(f.line, f.col, format!("expected one of {}", VERDICTS.join(", "))))
}
