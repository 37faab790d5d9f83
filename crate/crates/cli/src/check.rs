//! The acceptance criteria, each reduced to a pass/fail line.

use std::fmt::Display;
use std::sync::Arc;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use charp_core::ffpoly::{PolyRing, Polynomial};
use charp_core::frobpure::{special_ideal_lattice, RingPresentation, SpecialIdealLattice};
use charp_core::idealkit::{frobenius_power, pth_root, sum, Ideal};
use charp_core::skewmod::build_truncation;
use charp_core::stight::{
    big_test_ideal, membership_in, realize_as_s_test_ideal, s_test_ideal, test_ideal_chain,
    LevelIdeals, MembershipVerdict, MultSet,
};

use crate::fixtures::{find, Fixture, FIXTURES};
use crate::random;
use crate::runner::cross_check;

pub const CRITERIA: u32 = 10;

#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub id: u32,
    pub title: &'static str,
    pub pass: bool,
    pub detail: String,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        format!(
            "criterion {:>2} {} {}: {}",
            self.id,
            if self.pass { "PASS" } else { "FAIL" },
            self.title,
            self.detail
        )
    }
}

type Outcome = Result<String, String>;

fn err<E: Display>(e: E) -> String {
    e.to_string()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

pub fn title(id: u32) -> &'static str {
    match id {
        1 => "axes lattice and chain",
        2 => "plane_line lattice and chain",
        3 => "planes chain and listed primes",
        4 => "two_planes chain and listed primes",
        5 => "fermat lattice and big test ideal",
        6 => "realization roundtrip",
        7 => "Frobenius closure triviality",
        8 => "lattice structure and p-independence",
        9 => "stight / skewmod cross-check",
        10 => "Galois connection and semilinearity",
        _ => "unknown",
    }
}

pub fn run_criterion(id: u32) -> CriterionResult {
    let outcome = match id {
        1 => c1(),
        2 => c2(),
        3 => c3(),
        4 => c4(),
        5 => c5(),
        6 => c6(),
        7 => c7(),
        8 => c8(),
        9 => c9(),
        10 => c10(),
        _ => Err(format!("no criterion {id}")),
    };
    let (pass, detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    CriterionResult {
        id,
        title: title(id),
        pass,
        detail,
    }
}

pub fn run_all() -> Vec<CriterionResult> {
    (1..=CRITERIA).map(run_criterion).collect()
}

struct Loaded {
    pres: RingPresentation,
    lattice: SpecialIdealLattice,
}

fn load_fixture(f: &Fixture) -> Result<Loaded, String> {
    let pres = f.scenario().presentation().map_err(err)?;
    let lattice = special_ideal_lattice(&pres).map_err(err)?;
    Ok(Loaded { pres, lattice })
}

fn load(name: &str) -> Result<Loaded, String> {
    load_fixture(find(name).ok_or_else(|| format!("no fixture {name}"))?)
}

fn canon_list(ring: &Arc<PolyRing>, ideals: &[&str]) -> Result<Vec<String>, String> {
    let mut v = ideals
        .iter()
        .map(|s| Ideal::parse(ring, s).and_then(|i| i.canonical_string()).map_err(err))
        .collect::<Result<Vec<_>, _>>()?;
    v.sort();
    Ok(v)
}

fn lattice_primes(l: &SpecialIdealLattice) -> Result<Vec<String>, String> {
    let mut v = l.summary().map_err(err)?.primes;
    v.sort();
    Ok(v)
}

fn chain_strings(x: &Loaded) -> Result<Vec<String>, String> {
    test_ideal_chain(&x.pres, &x.lattice, 16)
        .and_then(|c| c.canonical_strings())
        .map_err(err)
}

fn check_chain(x: &Loaded, want: &[&str]) -> Result<(), String> {
    let got = chain_strings(x)?;
    let want: Vec<String> = want
        .iter()
        .map(|s| Ideal::parse(x.pres.ring(), s).and_then(|i| i.canonical_string()))
        .collect::<Result<_, _>>()
        .map_err(err)?;
    ensure(got == want, || format!("chain {got:?}, expected {want:?}"))
}

fn exact_primes(x: &Loaded, want: &[&str]) -> Result<(), String> {
    let got = lattice_primes(&x.lattice)?;
    let want = canon_list(x.pres.ring(), want)?;
    ensure(got == want, || format!("primes {got:?}, expected {want:?}"))
}

fn included_primes(x: &Loaded, want: &[&str]) -> Result<usize, String> {
    let got = lattice_primes(&x.lattice)?;
    let want = canon_list(x.pres.ring(), want)?;
    let missing: Vec<&String> = want.iter().filter(|p| !got.contains(p)).collect();
    ensure(missing.is_empty(), || format!("missing primes {missing:?}"))?;
    Ok(got.len())
}

fn c1() -> Outcome {
    let x = load("axes")?;
    let u = x
        .pres
        .splitting_generator()
        .ok_or("no splitting generator")?
        .to_string();
    exact_primes(&x, &["X, Y", "X, Z", "Y, Z", "X, Y, Z"])?;
    check_chain(&x, &["X*Y, X*Z, Y*Z", "X, Y, Z", "1"])?;
    Ok(format!("u = {u}; 4 primes; chain 0 < m < R"))
}

fn c2() -> Outcome {
    let x = load("plane_line")?;
    exact_primes(&x, &["Y", "X, Z", "X, Y, Z"])?;
    check_chain(&x, &["X*Y, Y*Z", "X, Y, Z", "1"])?;
    Ok("3 primes; chain 0 < m < R".into())
}

const QUADRICS: &str = "X*Y, X*Z, X*W, Y*Z, Y*W, Z*W";
const TRIPLES: [&str; 4] = ["X, Y, Z", "X, Y, W", "X, Z, W", "Y, Z, W"];

fn c3() -> Outcome {
    let x = load("planes")?;
    check_chain(&x, &["X*Y*Z, X*Y*W, X*Z*W, Y*Z*W", QUADRICS, "X, Y, Z, W", "1"])?;
    let mut listed = vec!["X, Y", "X, Z", "X, W", "Y, Z", "Y, W", "Z, W"];
    listed.extend(TRIPLES);
    listed.push("X, Y, Z, W");
    let n = included_primes(&x, &listed)?;
    Ok(format!("chain exact; 11 listed primes among {n}"))
}

fn c4() -> Outcome {
    let x = load("two_planes")?;
    check_chain(&x, &["X*Y, Z*W", QUADRICS, "X, Y, Z, W", "1"])?;
    let mut listed = vec!["X, Z", "X, W", "Y, Z", "Y, W"];
    listed.extend(TRIPLES);
    listed.push("X, Y, Z, W");
    let n = included_primes(&x, &listed)?;
    Ok(format!("chain exact; 9 listed primes among {n}"))
}

fn c5() -> Outcome {
    let x = load("fermat")?;
    let deg = x
        .pres
        .splitting_generator()
        .ok_or("no splitting generator")?
        .total_degree()
        .unwrap_or(0);
    exact_primes(&x, &["X^3 + Y^3 + Z^3", "X, Y, Z"])?;
    let tau = big_test_ideal(&x.lattice, &x.pres).map_err(err)?;
    let m = x.pres.maximal_ideal();
    ensure(tau.same_ideal(m).map_err(err)?, || format!("big test ideal {tau}"))?;
    Ok(format!("u of degree {deg}; primes {{0, m}}; big test ideal m"))
}

fn c6() -> Outcome {
    let mut total = 0;
    for f in FIXTURES {
        let x = load_fixture(&f)?;
        for b in x.lattice.members() {
            let s = realize_as_s_test_ideal(&x.lattice, b, &x.pres)
                .map_err(|e| format!("{}: {b}: {e}", f.name))?;
            let back = s_test_ideal(&x.lattice, &s, &x.pres).map_err(err)?;
            ensure(back.same_ideal(b).map_err(err)?, || {
                format!("{}: {b} realized by {s} gives {back}", f.name)
            })?;
            total += 1;
        }
    }
    Ok(format!("{total} members over {} fixtures", FIXTURES.len()))
}

const C7_TEST_IDEALS: usize = 50;
const C7_ELEMENTS: usize = 20;
const C7_LEVELS: u32 = 4;

fn c7_one(x: &Loaded, fixture: usize, i: usize) -> Result<usize, String> {
    let ring = x.pres.ring();
    let a = x.pres.defining_ideal();
    let mut rng = StdRng::seed_from_u64(0x7000 + 1000 * fixture as u64 + i as u64);
    let k = rng.gen_range(1..=3);
    let mut gens = a.generators().to_vec();
    for _ in 0..k {
        let d = rng.gen_range(1..=3);
        gens.push(random::homogeneous(ring, d, &mut rng));
    }
    let a_test = Ideal::new(ring, gens);
    let mut levels = LevelIdeals::new(&x.pres, &a_test).map_err(err)?;
    let p = x.pres.p();
    for _ in 0..C7_ELEMENTS {
        let r = loop {
            let r = random::polynomial(ring, 3, &mut rng);
            if !levels.test_ideal().contains(&r).map_err(err)? {
                break r;
            }
        };
        let v = membership_in(&mut levels, &r, &MultSet::One, &x.pres, &x.lattice, C7_LEVELS)
            .map_err(err)?;
        match v {
            MembershipVerdict::NonMember { level, .. } if level <= C7_LEVELS => {}
            other => return Err(format!("r = {r}, a_test = {a_test}: {other:?}")),
        }
        let rp = r.frobenius(1).map_err(err)?;
        ensure(!levels.level(1).map_err(err)?.contains(&rp).map_err(err)?, || {
            format!("r^{p} in level 1 for r = {r}, a_test = {a_test}")
        })?;
    }
    Ok(C7_ELEMENTS)
}

fn c7() -> Outcome {
    let mut total = 0;
    for (fi, f) in FIXTURES.iter().enumerate() {
        let x = load_fixture(f)?;
        if !x.pres.is_f_pure() {
            continue;
        }
        let counts = (0..C7_TEST_IDEALS)
            .into_par_iter()
            .map(|i| c7_one(&x, fi, i).map_err(|e| format!("{}: {e}", f.name)))
            .collect::<Result<Vec<_>, _>>()?;
        total += counts.iter().sum::<usize>();
    }
    Ok(format!("{total} pairs nonmember within {C7_LEVELS} levels"))
}

fn c8() -> Outcome {
    let mut members = 0;
    let mut unverified = 0;
    for f in FIXTURES {
        let x = load_fixture(&f)?;
        let s = x.lattice.verify_structure().map_err(err)?;
        ensure(s.ok(), || format!("{}: {:?}", f.name, s.failures))?;
        members += x.lattice.members().len();
        unverified += s.unverified_radical;
        if f.stanley_reisner {
            let pres3 = f.scenario_in_characteristic(3).presentation().map_err(err)?;
            let l3 = special_ideal_lattice(&pres3).map_err(err)?;
            let (s2, s3) = (
                x.lattice.summary().map_err(err)?,
                l3.summary().map_err(err)?,
            );
            ensure(s2.primes == s3.primes && s2.members == s3.members, || {
                format!("{}: p=2 {:?} vs p=3 {:?}", f.name, s2.primes, s3.primes)
            })?;
        }
    }
    ensure(unverified == 0, || format!("{unverified} members with undecided radicality"))?;
    Ok(format!("{members} members checked; p=2 and p=3 agree"))
}

fn c9() -> Outcome {
    let x = load("axes")?;
    let ring = x.pres.ring();
    let a_test = sum(
        &Ideal::parse(ring, "X + Y").map_err(err)?,
        x.pres.defining_ideal(),
    )
    .map_err(err)?;
    let r = Polynomial::var(ring, 0);
    let mut levels = LevelIdeals::new(&x.pres, &a_test).map_err(err)?;
    let v = membership_in(&mut levels, &r, &MultSet::RCirc, &x.pres, &x.lattice, 4).map_err(err)?;
    let want = charp_core::ffpoly::parse_polynomial("X + Y + Z", ring).map_err(err)?;
    ensure(v.is_member() && *v.certificate() == want, || format!("verdict {v:?}"))?;
    let cc = cross_check(&x.pres, &x.lattice, &a_test, &MultSet::RCirc, 4, 6).map_err(err)?;
    ensure(cc.exhaustive, || "classes were sampled".into())?;
    ensure(cc.disagreements.is_empty(), || format!("disagreements {:?}", cc.disagreements))?;
    ensure(cc.certificate == want, || format!("certificate {}", cc.certificate))?;
    Ok(format!(
        "X member with certificate {want}; {} classes, {} members, delta dim {}",
        cc.classes_checked,
        cc.stight_members,
        cc.delta_basis.len()
    ))
}

pub const PROPERTY_CASES: usize = 200;

fn random_ideal(ring: &Arc<PolyRing>, rng: &mut StdRng, max_gens: usize, d: u32) -> Ideal {
    let k = rng.gen_range(1..=max_gens);
    let gens = (0..k)
        .map(|_| {
            if rng.gen_bool(0.4) {
                random::monomial(ring, d, rng)
            } else {
                random::polynomial(ring, d, rng)
            }
        })
        .collect();
    Ideal::new(ring, gens)
}

/// `I_1(J) ⊆ K` iff `J ⊆ K^[p]`, plus `J ⊆ I_1(J)^[p]`.
pub fn galois_instances(p: u64, cases: usize, seed: u64) -> Result<(usize, usize), String> {
    let ring = PolyRing::new(
        charp_core::ffpoly::Characteristic::new(p).map_err(err)?,
        &["X", "Y", "Z"],
    )
    .map_err(err)?;
    let mut rng = StdRng::seed_from_u64(seed);
    let mut holds = 0;
    for _ in 0..cases {
        let j = random_ideal(&ring, &mut rng, 3, 4);
        let root = pth_root(&j);
        let k = if rng.gen_bool(0.5) {
            sum(&root, &random_ideal(&ring, &mut rng, 2, 2)).map_err(err)?
        } else {
            random_ideal(&ring, &mut rng, 3, 2)
        };
        let left = k.contains_ideal(&root).map_err(err)?;
        let right = frobenius_power(&k, 1)
            .and_then(|kp| kp.contains_ideal(&j))
            .map_err(err)?;
        ensure(left == right, || format!("J = {j}, K = {k}: {left} vs {right}"))?;
        let unit = frobenius_power(&root, 1)
            .and_then(|rp| rp.contains_ideal(&j))
            .map_err(err)?;
        ensure(unit, || format!("J = {j} not inside I_1(J)^[p]"))?;
        holds += left as usize;
    }
    Ok((cases, holds))
}

/// `x(r·h + c·g) = r^p·x(h) + c·x(g)` on truncations of the triangle ring.
pub fn semilinearity_instances(p: u64, cases: usize, seed: u64) -> Result<usize, String> {
    let ring = PolyRing::new(
        charp_core::ffpoly::Characteristic::new(p).map_err(err)?,
        &["X", "Y", "Z"],
    )
    .map_err(err)?;
    let pres = RingPresentation::new(Ideal::parse(&ring, "X*Y, X*Z, Y*Z").map_err(err)?)
        .map_err(err)?;
    let a_test = Ideal::parse(&ring, "X + Y").map_err(err)?;
    let t = build_truncation(&pres, &a_test, 2, 4).map_err(err)?;
    let mut rng = StdRng::seed_from_u64(seed);
    for _ in 0..cases {
        let n = rng.gen_range(0..t.top());
        let r = random::polynomial(&ring, 2, &mut rng);
        let h = random::polynomial(&ring, 3, &mut rng);
        let g = random::polynomial(&ring, 3, &mut rng);
        let c = rng.gen_range(0..p as u32);
        let lhs = t.x_map(n, &(&r * &h).add_scaled(&g, c)).map_err(err)?;
        let xh = t.x_map(n, &h).map_err(err)?;
        let xg = t.x_map(n, &g).map_err(err)?;
        let rp = r.frobenius(1).map_err(err)?;
        let rhs = (&rp * &xh).add_scaled(&xg, c);
        let diff = t.reduce(n + 1, &(&lhs - &rhs)).map_err(err)?;
        ensure(diff.is_zero(), || format!("r = {r}, h = {h}, g = {g}, c = {c}, level {n}"))?;
    }
    Ok(cases)
}

fn c10() -> Outcome {
    let mut parts = Vec::new();
    for p in [2u64, 3] {
        let (n, holds) = galois_instances(p, PROPERTY_CASES, 0x6a10 + p)?;
        let m = semilinearity_instances(p, PROPERTY_CASES, 0x5e30 + p)?;
        parts.push(format!("p={p}: {n} Galois ({holds} inclusions), {m} semilinear"));
    }
    Ok(parts.join("; "))
}
