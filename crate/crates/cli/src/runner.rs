//! Executes scenario tasks and assembles the report.

use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use charp_core::ffpoly::Polynomial;
use charp_core::frobpure::{
    special_ideal_lattice, CompatibilityMode, LatticeStrategy, RingPresentation,
    SpecialIdealLattice,
};
use charp_core::idealkit::Ideal;
use charp_core::skewmod::{
    build_truncation, delta_s_truncated, gamma_x, graded_annihilator, DEFAULT_DEGREE_CAP,
    DEFAULT_TRUNCATION_LEVELS,
};
use charp_core::stight::{
    membership_in, realize_as_s_test_ideal, s_test_element, s_test_ideal, test_ideal_chain,
    LevelIdeals, MembershipVerdict, MultSet, DEFAULT_LEVELS,
};
use charp_core::Error;

use crate::scenario::{parse_bool, parse_int, parse_verdict, Field, Scenario, TaskKind, TaskSpec};

pub const COMPLETION_NOTICE: &str = "complete local rings are represented by graded polynomial \
     presentations; all fixture data is homogeneous, so lattices and chains are unaffected";

const CHAIN_NOTICE: &str = "the chain is built from big test ideals; reading it as the test ideal \
     chain relies on the two agreeing for this input";

/// Classes enumerated exhaustively by the skewmod cross-check up to this count.
const EXHAUSTIVE_CLASS_LIMIT: u64 = 4096;
const SAMPLED_CLASSES: usize = 512;

#[derive(Clone, Debug, Default)]
pub struct RunOptions {
    /// Level bound for membership and truncation tasks.
    pub levels: Option<u32>,
    pub degree_cap: Option<u32>,
    /// Also compute the lattice with the single splitting generator and diff.
    pub alt_u: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Ok,
    Falsified,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Falsified => "falsified",
            Status::Error => "error",
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Falsified => 2,
            Status::Error => 1,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    /// Everything except timings.
    pub body: Value,
    pub timings_ms: Vec<(String, f64)>,
    pub status: Status,
}

impl Report {
    pub fn determinism_hash(&self) -> String {
        let canonical = serde_json::to_string(&self.body).expect("report serializes");
        Sha256::digest(canonical.as_bytes())
            .iter()
            .map(|b| format!("{b:02x}"))
            .collect()
    }

    pub fn to_json(&self) -> String {
        let mut obj = match &self.body {
            Value::Object(m) => m.clone(),
            _ => Map::new(),
        };
        obj.insert("determinism_hash".into(), Value::String(self.determinism_hash()));
        let mut t = Map::new();
        for (k, v) in &self.timings_ms {
            t.insert(k.clone(), json!(v));
        }
        obj.insert("timings_ms".into(), Value::Object(t));
        serde_json::to_string_pretty(&Value::Object(obj)).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let b = &self.body;
        out.push_str(&format!(
            "scenario {} over F_{} [{}]\n",
            b["scenario"]["name"].as_str().unwrap_or("-"),
            b["scenario"]["characteristic"],
            b["scenario"]["ideal"].as_str().unwrap_or("")
        ));
        for task in b["tasks"].as_array().into_iter().flatten() {
            out.push_str(&format!(
                "- {} : {}\n",
                task["task"].as_str().unwrap_or("?"),
                task["status"].as_str().unwrap_or("?")
            ));
            if let Some(e) = task["error"].as_str() {
                out.push_str(&format!("    error: {e}\n"));
            }
            if let Some(Value::Object(res)) = task.get("result") {
                for (k, v) in res {
                    let shown = match v {
                        Value::String(s) => s.clone(),
                        other => other.to_string(),
                    };
                    out.push_str(&format!("    {k}: {shown}\n"));
                }
            }
            for c in task["expectations"].as_array().into_iter().flatten() {
                out.push_str(&format!(
                    "    expect {} {}\n",
                    c["key"].as_str().unwrap_or(""),
                    if c["ok"].as_bool() == Some(true) { "ok" } else { "FAILED" }
                ));
            }
            for w in task["warnings"].as_array().into_iter().flatten() {
                out.push_str(&format!("    warning: {}\n", w.as_str().unwrap_or("")));
            }
        }
        out.push_str(&format!("status: {}\n", self.status.as_str()));
        out
    }
}

struct Check {
    key: String,
    expected: Value,
    actual: Value,
    ok: bool,
}

#[derive(Default)]
struct Outcome {
    result: Map<String, Value>,
    checks: Vec<Check>,
    warnings: Vec<String>,
}

impl Outcome {
    fn check(&mut self, key: &str, expected: Value, actual: Value, ok: bool) {
        self.checks.push(Check {
            key: key.to_string(),
            expected,
            actual,
            ok,
        });
    }
}

/// Failure inside a task.
enum TaskError {
    Core(Error),
    Input(String),
}

impl From<Error> for TaskError {
    fn from(e: Error) -> Self {
        TaskError::Core(e)
    }
}

impl From<crate::scenario::ScenarioError> for TaskError {
    fn from(e: crate::scenario::ScenarioError) -> Self {
        TaskError::Input(e.to_string())
    }
}

type TaskResult<T> = std::result::Result<T, TaskError>;

struct Ctx<'a> {
    scen: &'a Scenario,
    pres: RingPresentation,
    lattice: Option<SpecialIdealLattice>,
    opts: &'a RunOptions,
}

impl Ctx<'_> {
    fn lattice(&mut self) -> TaskResult<&SpecialIdealLattice> {
        if self.lattice.is_none() {
            self.lattice = Some(special_ideal_lattice(&self.pres)?);
        }
        Ok(self.lattice.as_ref().unwrap())
    }

    fn field<'t>(&self, task: &'t TaskSpec, key: &str) -> Option<&'t Field> {
        task.params.get(key)
    }

    fn mult(&self, task: &TaskSpec) -> TaskResult<MultSet> {
        match self.field(task, "s") {
            Some(f) => Ok(self.scen.parse_mult(f)?),
            None => Ok(MultSet::RCirc),
        }
    }

    fn int_or(&self, task: &TaskSpec, key: &str, default: u64) -> TaskResult<u64> {
        match self.field(task, key) {
            Some(f) => Ok(parse_int(f)?),
            None => Ok(default),
        }
    }
}

fn canon(i: &Ideal) -> Result<String, Error> {
    i.canonical_string()
}

fn canon_all(v: &[Ideal]) -> Result<Vec<String>, Error> {
    v.iter().map(canon).collect()
}

/// Canonical text for a multiplicative set, with prime lists sorted.
pub fn mult_key(s: &MultSet) -> Result<String, Error> {
    Ok(match s {
        MultSet::One => "one".into(),
        MultSet::RCirc => "rcirc".into(),
        MultSet::PowersOf(f) => format!("powers {f}"),
        MultSet::ComplementOfPrimes(qs) => {
            let mut k = canon_all(qs)?;
            k.sort();
            if k.is_empty() {
                "complement".into()
            } else {
                format!("complement {}", k.join("; "))
            }
        }
    })
}

fn verdict_json(v: &MembershipVerdict) -> Value {
    match v {
        MembershipVerdict::NonMember { level, certificate } => json!({
            "status": "nonmember",
            "level": level,
            "certificate": certificate.to_string(),
        }),
        MembershipVerdict::MemberCertified { certificate, reason } => json!({
            "status": "member-certified",
            "reason": format!("{reason:?}"),
            "certificate": certificate.to_string(),
        }),
        MembershipVerdict::MemberUpToBound { bound, certificate } => json!({
            "status": "member-up-to-bound",
            "bound": bound,
            "certificate": certificate.to_string(),
        }),
    }
}

fn verdict_matches(word: &str, v: &MembershipVerdict) -> bool {
    match (word, v) {
        ("nonmember", MembershipVerdict::NonMember { .. }) => true,
        ("member", v) => v.is_member(),
        ("member-certified", MembershipVerdict::MemberCertified { .. }) => true,
        ("member-up-to-bound", MembershipVerdict::MemberUpToBound { .. }) => true,
        _ => false,
    }
}

fn sorted(mut v: Vec<String>) -> Vec<String> {
    v.sort();
    v
}

/// Runs every task of a scenario.
pub fn run_scenario(scen: &Scenario, opts: &RunOptions) -> Report {
    let mut timings = Vec::new();
    let started = Instant::now();
    let echo = json!({
        "name": scen.name,
        "description": scen.description,
        "characteristic": scen.characteristic,
        "variables": scen.variables,
        "ideal": scen.ideal.value,
        "declared_primes": scen.primes.iter().map(|f| f.value.clone()).collect::<Vec<_>>(),
        "seeds": scen.seeds.iter().map(|f| f.value.clone()).collect::<Vec<_>>(),
    });
    let mut body = Map::new();
    body.insert("tool".into(), json!("charp-lab"));
    body.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
    body.insert("scenario".into(), echo);
    body.insert("notices".into(), json!([COMPLETION_NOTICE]));

    let pres = match scen.presentation() {
        Ok(p) => p,
        Err(e) => {
            body.insert("tasks".into(), json!([]));
            body.insert("error".into(), json!(e.to_string()));
            body.insert("status".into(), json!(Status::Error.as_str()));
            timings.push(("total".into(), ms(started)));
            return Report {
                body: Value::Object(body),
                timings_ms: timings,
                status: Status::Error,
            };
        }
    };
    let mut ctx = Ctx {
        scen,
        pres,
        lattice: None,
        opts,
    };
    let mut status = Status::Ok;
    let mut tasks = Vec::new();
    for (i, task) in scen.tasks.iter().enumerate() {
        let t0 = Instant::now();
        let mut entry = Map::new();
        entry.insert("task".into(), json!(task.kind.name()));
        entry.insert("line".into(), json!(task.line));
        let task_status = match run_task(&mut ctx, task) {
            Ok(out) => {
                let all_ok = out.checks.iter().all(|c| c.ok);
                entry.insert("result".into(), Value::Object(out.result));
                entry.insert(
                    "expectations".into(),
                    Value::Array(
                        out.checks
                            .iter()
                            .map(|c| {
                                json!({"key": c.key, "expected": c.expected, "actual": c.actual, "ok": c.ok})
                            })
                            .collect(),
                    ),
                );
                entry.insert("warnings".into(), json!(out.warnings));
                if all_ok {
                    Status::Ok
                } else {
                    Status::Falsified
                }
            }
            Err(TaskError::Core(Error::FalsifiedExpectation(msg))) => {
                entry.insert("error".into(), json!(msg));
                Status::Falsified
            }
            Err(TaskError::Core(e)) => {
                entry.insert("error".into(), json!(e.to_string()));
                Status::Error
            }
            Err(TaskError::Input(msg)) => {
                entry.insert("error".into(), json!(msg));
                Status::Error
            }
        };
        entry.insert("status".into(), json!(task_status.as_str()));
        status = status.max(task_status);
        timings.push((format!("task{}:{}", i, task.kind.name()), ms(t0)));
        tasks.push(Value::Object(entry));
    }
    body.insert("tasks".into(), Value::Array(tasks));
    body.insert("status".into(), json!(status.as_str()));
    timings.push(("total".into(), ms(started)));
    Report {
        body: Value::Object(body),
        timings_ms: timings,
        status,
    }
}

fn ms(t: Instant) -> f64 {
    (t.elapsed().as_secs_f64() * 1e6).round() / 1e3
}

fn run_task(ctx: &mut Ctx, task: &TaskSpec) -> TaskResult<Outcome> {
    match task.kind {
        TaskKind::FpureCheck => fpure_check(ctx, task),
        TaskKind::SpecialIdeals => special_ideals(ctx, task),
        TaskKind::STestIdeal => s_test(ctx, task),
        TaskKind::Realize => realize(ctx, task),
        TaskKind::TightClosure => tight_closure(ctx, task),
        TaskKind::Chain => chain(ctx, task),
        TaskKind::SkewmodCrosscheck => skewmod_crosscheck(ctx, task),
    }
}

fn fpure_check(ctx: &mut Ctx, task: &TaskSpec) -> TaskResult<Outcome> {
    let mut out = Outcome::default();
    let u = ctx.pres.splitting_generator().map(|u| u.to_string());
    out.result.insert("f_pure".into(), json!(u.is_some()));
    out.result.insert("u".into(), json!(u));
    out.result.insert(
        "colon_generators".into(),
        json!(ctx
            .pres
            .colon_generators()
            .iter()
            .map(|g| g.to_string())
            .collect::<Vec<_>>()),
    );
    if let Some(f) = ctx.field(task, "expect.fpure") {
        let want = parse_bool(f)?;
        out.check("expect.fpure", json!(want), json!(u.is_some()), want == u.is_some());
    }
    if let Some(f) = ctx.field(task, "expect.u") {
        let want = ctx.scen.parse_poly(f)?.to_string();
        out.check("expect.u", json!(want), json!(u), u.as_deref() == Some(want.as_str()));
    }
    Ok(out)
}

fn special_ideals(ctx: &mut Ctx, task: &TaskSpec) -> TaskResult<Outcome> {
    let mut out = Outcome::default();
    let lattice = ctx.lattice()?.clone();
    let summary = lattice.summary()?;
    let structure = lattice.verify_structure()?;
    out.result.insert("primes".into(), json!(summary.primes));
    out.result.insert("members".into(), json!(summary.members));
    out.result.insert(
        "hasse_edges".into(),
        json!(summary.hasse_edges.iter().map(|(a, b)| [a, b]).collect::<Vec<_>>()),
    );
    out.result.insert("u".into(), json!(summary.u));
    out.result.insert(
        "strategy".into(),
        json!(match lattice.strategy() {
            LatticeStrategy::Exhaustive => "exhaustive",
            LatticeStrategy::Discovery => "discovery",
        }),
    );
    if lattice.strategy() == LatticeStrategy::Discovery {
        out.result
            .insert("candidates".into(), json!(canon_all(lattice.candidates())?));
    }
    out.result.insert(
        "structure".into(),
        json!({
            "ok": structure.ok(),
            "failures": structure.failures,
            "unverified_radical": structure.unverified_radical,
        }),
    );
    out.warnings.extend(lattice.warnings().iter().cloned());
    if !structure.ok() {
        out.check("structure", json!(true), json!(false), false);
    }
    if ctx.opts.alt_u {
        if let Some(u) = ctx.pres.splitting_generator().cloned() {
            let alt = ctx
                .pres
                .with_mode(CompatibilityMode::SplittingGenerator(u.clone()));
            let alt_l = special_ideal_lattice(&alt)?.summary()?;
            let only_uniform: Vec<&String> =
                summary.primes.iter().filter(|p| !alt_l.primes.contains(p)).collect();
            let only_single: Vec<&String> =
                alt_l.primes.iter().filter(|p| !summary.primes.contains(p)).collect();
            out.result.insert(
                "alt_u".into(),
                json!({
                    "u": u.to_string(),
                    "primes": alt_l.primes,
                    "members": alt_l.members.len(),
                    "only_uniform": only_uniform,
                    "only_single_u": only_single,
                }),
            );
        }
    }
    if let Some(f) = ctx.field(task, "expect.primes") {
        let want = sorted(canon_all(&ctx.scen.parse_ideal_list(f)?)?);
        let got = sorted(summary.primes.clone());
        out.check("expect.primes", json!(want), json!(got), want == got);
    }
    if let Some(f) = ctx.field(task, "expect.primes-include") {
        let want = sorted(canon_all(&ctx.scen.parse_ideal_list(f)?)?);
        let missing: Vec<&String> = want.iter().filter(|p| !summary.primes.contains(p)).collect();
        out.check(
            "expect.primes-include",
            json!(want),
            json!({"missing": missing}),
            missing.is_empty(),
        );
    }
    if let Some(f) = ctx.field(task, "expect.members") {
        let want = parse_int(f)?;
        let got = summary.members.len() as u64;
        out.check("expect.members", json!(want), json!(got), want == got);
    }
    Ok(out)
}

fn s_test(ctx: &mut Ctx, task: &TaskSpec) -> TaskResult<Outcome> {
    let mut out = Outcome::default();
    let s = ctx.mult(task)?;
    let pres = ctx.pres.clone();
    let lattice = ctx.lattice()?;
    let tau = s_test_ideal(lattice, &s, &pres)?;
    let element = s_test_element(lattice, &s, &pres)?;
    out.result.insert("s".into(), json!(mult_key(&s)?));
    out.result.insert("ideal".into(), json!(canon(&tau)?));
    out.result.insert("element".into(), json!(element.to_string()));
    if let Some(f) = ctx.field(task, "expect.ideal") {
        let want = canon(&ctx.scen.parse_ideal(f)?)?;
        let got = canon(&tau)?;
        out.check("expect.ideal", json!(want), json!(got), want == got);
    }
    if let Some(f) = ctx.field(task, "expect.element") {
        let want = ctx.scen.parse_poly(f)?.to_string();
        let got = element.to_string();
        out.check("expect.element", json!(want), json!(got), want == got);
    }
    Ok(out)
}

fn realize_one(
    lattice: &SpecialIdealLattice,
    target: &Ideal,
    pres: &RingPresentation,
) -> TaskResult<(Option<MultSet>, bool, String)> {
    match realize_as_s_test_ideal(lattice, target, pres) {
        Ok(s) => {
            let back = s_test_ideal(lattice, &s, pres)?;
            let ok = back.same_ideal(target)?;
            Ok((Some(s), ok, canon(&back)?))
        }
        Err(Error::FalsifiedExpectation(msg)) => Ok((None, false, msg)),
        Err(e) => Err(e.into()),
    }
}

fn realize(ctx: &mut Ctx, task: &TaskSpec) -> TaskResult<Outcome> {
    let mut out = Outcome::default();
    let pres = ctx.pres.clone();
    let target_field = ctx
        .field(task, "target")
        .ok_or_else(|| TaskError::Input(format!("line {}: realize needs `target`", task.line)))?
        .clone();
    let lattice = ctx.lattice()?.clone();
    let targets: Vec<Ideal> = if target_field.value == "all" {
        lattice.members().to_vec()
    } else {
        vec![ctx.scen.parse_ideal(&target_field)?]
    };
    let mut rows = Vec::new();
    let mut all_ok = true;
    let mut last_s = None;
    for t in &targets {
        let (s, ok, back) = realize_one(&lattice, t, &pres)?;
        all_ok &= ok;
        let key = match &s {
            Some(s) => json!(mult_key(s)?),
            None => Value::Null,
        };
        rows.push(json!({"target": canon(t)?, "s": key, "s_test_ideal": back, "roundtrip": ok}));
        last_s = s;
    }
    out.result.insert("realizations".into(), Value::Array(rows));
    out.result.insert("roundtrip".into(), json!(all_ok));
    if let Some(f) = ctx.field(task, "expect.roundtrip") {
        let want = parse_bool(f)?;
        out.check("expect.roundtrip", json!(want), json!(all_ok), want == all_ok);
    }
    if let Some(f) = ctx.field(task, "expect.s") {
        let want = mult_key(&ctx.scen.parse_mult(f)?)?;
        let got = match (&last_s, targets.len()) {
            (Some(s), 1) => mult_key(s)?,
            _ => String::new(),
        };
        out.check("expect.s", json!(want), json!(got), want == got);
    }
    Ok(out)
}

fn tight_closure(ctx: &mut Ctx, task: &TaskSpec) -> TaskResult<Outcome> {
    let mut out = Outcome::default();
    let need = |k: &str| {
        task.params
            .get(k)
            .cloned()
            .ok_or_else(|| TaskError::Input(format!("line {}: tight-closure needs `{k}`", task.line)))
    };
    let r = ctx.scen.parse_poly(&need("r")?)?;
    let a_test = ctx.scen.parse_ideal(&need("a_test")?)?;
    let s = ctx.mult(task)?;
    let levels = ctx.int_or(task, "levels", ctx.opts.levels.unwrap_or(DEFAULT_LEVELS) as u64)? as u32;
    let pres = ctx.pres.clone();
    let lattice = ctx.lattice()?;
    let mut levels_ctx = LevelIdeals::new(&pres, &a_test)?;
    let v = membership_in(&mut levels_ctx, &r, &s, &pres, lattice, levels)?;
    out.result.insert("r".into(), json!(r.to_string()));
    out.result.insert("a_test".into(), json!(canon(levels_ctx.test_ideal())?));
    out.result.insert("s".into(), json!(mult_key(&s)?));
    out.result.insert("levels".into(), json!(levels));
    out.result.insert("verdict".into(), verdict_json(&v));
    if let Some(f) = ctx.field(task, "expect.verdict") {
        let want = parse_verdict(f)?;
        out.check(
            "expect.verdict",
            json!(want),
            verdict_json(&v)["status"].clone(),
            verdict_matches(want, &v),
        );
    }
    if let Some(f) = ctx.field(task, "expect.certificate") {
        let want = ctx.scen.parse_poly(f)?.to_string();
        let got = v.certificate().to_string();
        out.check("expect.certificate", json!(want), json!(got), want == got);
    }
    Ok(out)
}

fn chain(ctx: &mut Ctx, task: &TaskSpec) -> TaskResult<Outcome> {
    let mut out = Outcome::default();
    let steps = ctx.int_or(task, "max-steps", 16)? as usize;
    let pres = ctx.pres.clone();
    let lattice = ctx.lattice()?.clone();
    let c = test_ideal_chain(&pres, &lattice, steps)?;
    let got = c.canonical_strings()?;
    out.result.insert("chain".into(), json!(got));
    out.result.insert(
        "steps".into(),
        Value::Array(
            c.steps
                .iter()
                .map(|s| {
                    Ok(json!({
                        "defining": canon(&s.defining)?,
                        "certificate": s.certificate.to_string(),
                        "big_test_ideal": canon(&s.big_test)?,
                        "lattice_primes": s.lattice_primes,
                    }))
                })
                .collect::<Result<Vec<_>, Error>>()?,
        ),
    );
    out.warnings.push(CHAIN_NOTICE.into());
    if let Some(f) = ctx.field(task, "expect.chain") {
        let want = canon_all(&ctx.scen.parse_ideal_list(f)?)?;
        out.check("expect.chain", json!(want), json!(got), want == got);
    }
    Ok(out)
}

/// Outcome of comparing skewmod's level-0 set with stight verdicts.
pub struct CrossCheck {
    pub certificate: Polynomial,
    pub delta_basis: Vec<Polynomial>,
    pub classes_checked: usize,
    pub exhaustive: bool,
    pub disagreements: Vec<String>,
    pub stight_members: usize,
}

/// Every class of `(R/a_test)` in degree `≤ d` (or a seeded sample) is judged
/// by both modules at the same level bound.
pub fn cross_check(
    pres: &RingPresentation,
    lattice: &SpecialIdealLattice,
    a_test: &Ideal,
    s: &MultSet,
    levels: u32,
    degree: u32,
) -> Result<CrossCheck, Error> {
    let ring = pres.ring();
    let t = build_truncation(pres, a_test, levels, degree)?;
    let (delta, certificate) = delta_s_truncated(&t, s, pres, lattice)?;
    let basis = t.basis(0).to_vec();
    let p = pres.p() as u64;
    let dim = basis.len() as u32;
    let total = p.checked_pow(dim).unwrap_or(u64::MAX);
    let exhaustive = total <= EXHAUSTIVE_CLASS_LIMIT;
    let mut coords: Vec<Vec<u32>> = Vec::new();
    if exhaustive {
        for mut idx in 0..total {
            let mut v = Vec::with_capacity(basis.len());
            for _ in 0..basis.len() {
                v.push((idx % p) as u32);
                idx /= p;
            }
            coords.push(v);
        }
    } else {
        for i in 0..basis.len() {
            let mut v = vec![0u32; basis.len()];
            v[i] = 1;
            coords.push(v);
        }
        coords.extend(delta.vectors.iter().cloned());
        let mut rng = StdRng::seed_from_u64(0x5eed);
        for _ in 0..SAMPLED_CLASSES {
            coords.push((0..basis.len()).map(|_| rng.gen_range(0..p) as u32).collect());
        }
    }
    let mut levels_ctx = LevelIdeals::new(pres, a_test)?;
    let mut disagreements = Vec::new();
    let mut stight_members = 0;
    for v in &coords {
        let terms = v
            .iter()
            .zip(&basis)
            .filter(|(c, _)| **c != 0)
            .map(|(c, m)| (m.clone(), *c))
            .collect();
        let h = Polynomial::from_terms(ring, terms);
        let verdict = membership_in(&mut levels_ctx, &h, s, pres, lattice, levels)?;
        let in_delta = delta.contains(&h, ring.field());
        if verdict.is_member() {
            stight_members += 1;
        }
        if verdict.is_member() != in_delta && disagreements.len() < 8 {
            disagreements.push(format!(
                "{h}: skewmod {} / stight {}",
                if in_delta { "in" } else { "out" },
                verdict_json(&verdict)["status"].as_str().unwrap_or("?")
            ));
        }
    }
    Ok(CrossCheck {
        certificate,
        delta_basis: delta.spanning_polynomials(ring),
        classes_checked: coords.len(),
        exhaustive,
        disagreements,
        stight_members,
    })
}

fn skewmod_crosscheck(ctx: &mut Ctx, task: &TaskSpec) -> TaskResult<Outcome> {
    let mut out = Outcome::default();
    let a_test = match ctx.field(task, "a_test") {
        Some(f) => ctx.scen.parse_ideal(f)?,
        None => ctx.pres.defining_ideal().clone(),
    };
    let s = ctx.mult(task)?;
    let levels =
        ctx.int_or(task, "levels", ctx.opts.levels.unwrap_or(DEFAULT_TRUNCATION_LEVELS) as u64)? as u32;
    let degree =
        ctx.int_or(task, "degree", ctx.opts.degree_cap.unwrap_or(DEFAULT_DEGREE_CAP) as u64)? as u32;
    let pres = ctx.pres.clone();
    let lattice = ctx.lattice()?.clone();
    let cc = cross_check(&pres, &lattice, &a_test, &s, levels, degree)?;
    let t = build_truncation(&pres, &a_test, levels, degree)?;
    let gamma: Vec<usize> = gamma_x(&t)?.iter().map(|g| g.dim()).collect();
    let ann = graded_annihilator(&t, &cc.delta_basis)?;
    let agree = cc.disagreements.is_empty();
    out.result.insert("levels".into(), json!(levels));
    out.result.insert("degree".into(), json!(degree));
    out.result.insert("certificate".into(), json!(cc.certificate.to_string()));
    out.result.insert("delta_dim".into(), json!(cc.delta_basis.len()));
    out.result.insert(
        "delta_basis".into(),
        json!(cc.delta_basis.iter().map(|h| h.to_string()).collect::<Vec<_>>()),
    );
    out.result.insert("classes_checked".into(), json!(cc.classes_checked));
    out.result.insert("exhaustive".into(), json!(cc.exhaustive));
    out.result.insert("stight_members".into(), json!(cc.stight_members));
    out.result.insert("agree".into(), json!(agree));
    out.result.insert("disagreements".into(), json!(cc.disagreements));
    out.result.insert("gamma_x_dims".into(), json!(gamma));
    out.result.insert("annihilator".into(), json!(canon_all(&ann.levels)?));
    out.result.insert("annihilator_ascending".into(), json!(ann.is_ascending()?));
    if !cc.exhaustive {
        out.warnings.push(format!(
            "classes sampled ({} of {}^{})",
            cc.classes_checked,
            pres.p(),
            t.basis(0).len()
        ));
    }
    if let Some(f) = ctx.field(task, "expect.agree") {
        let want = parse_bool(f)?;
        out.check("expect.agree", json!(want), json!(agree), want == agree);
    }
    if let Some(f) = ctx.field(task, "expect.delta-dim") {
        let want = parse_int(f)?;
        let got = cc.delta_basis.len() as u64;
        out.check("expect.delta-dim", json!(want), json!(got), want == got);
    }
    Ok(out)
}
