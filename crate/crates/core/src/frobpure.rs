//! Fedder certificates and the lattice of Frobenius-compatible ideals.
//!
//! For `R = A/a` put `C = (a^[p] : a)`. An ideal `b ⊇ a` is compatible when
//! `c·b ⊆ b^[p]` for every `c ∈ C` (equivalently for every generator of `C`).
//! The prime compatible ideals form a finite set, and every compatible
//! ideal is the intersection of the compatible primes above it.
//!
//! A single splitting generator `u ∈ C \ m^[p]` can also be used as the
//! multiplier. That mode is weaker in general and is kept for comparison.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ffpoly::{PolyRing, Polynomial};
use crate::idealkit::{
    colon, frobenius_power, intersect, minimal_primes_monomial, pth_root, sum, Ideal, PrimeList,
    Tri,
};

/// Step cap for [`star_closure`].
pub const STAR_CLOSURE_BUDGET: usize = 64;

/// Variable count above which the exhaustive subset search is refused.
pub const EXHAUSTIVE_VARIABLE_LIMIT: usize = 20;

/// Seeds examined by the discovery strategy before it gives up.
pub const DISCOVERY_SEED_BUDGET: usize = 256;

/// Which multipliers define compatibility.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CompatibilityMode {
    /// Every generator of `(a^[p] : a)`.
    Uniform,
    /// Only the given splitting generator.
    SplittingGenerator(Polynomial),
}

/// `R = A/a` together with its Fedder data and minimal primes.
#[derive(Clone, Debug)]
pub struct RingPresentation {
    ring: Arc<PolyRing>,
    a: Ideal,
    m: Ideal,
    colon_gens: Vec<Polynomial>,
    u: Option<Polynomial>,
    minimal_primes: PrimeList,
    mode: CompatibilityMode,
    seeds: Vec<Ideal>,
    declared_primes: Vec<Ideal>,
}

/// Builder for [`RingPresentation`].
#[derive(Clone, Debug)]
pub struct PresentationBuilder {
    a: Ideal,
    declared: Vec<Ideal>,
    seeds: Vec<Ideal>,
    check_radical: bool,
}

impl PresentationBuilder {
    /// Primes used as minimal primes of `R` when `a` is not monomial.
    /// They are flagged prime by configuration.
    pub fn declare_primes(mut self, primes: Vec<Ideal>) -> Self {
        self.declared = primes.into_iter().map(Ideal::declare_prime).collect();
        self
    }

    /// Extra seeds for the discovery strategy.
    pub fn seeds(mut self, seeds: Vec<Ideal>) -> Self {
        self.seeds = seeds;
        self
    }

    pub fn check_radical(mut self, on: bool) -> Self {
        self.check_radical = on;
        self
    }

    pub fn build(self) -> Result<RingPresentation> {
        let ring = self.a.ring().clone();
        let a = self.a.canonical()?;
        let m = Ideal::maximal(&ring);
        if !m.contains_ideal(&a)? {
            return Err(Error::Precondition(format!(
                "defining ideal {a} is not contained in the maximal ideal"
            )));
        }
        if self.check_radical && a.is_radical() == Tri::No {
            return Err(Error::Precondition(format!("defining ideal {a} is not radical")));
        }
        let minimal_primes = if a.is_monomial() {
            minimal_primes_monomial(&a)?
        } else {
            let mut declared = Vec::new();
            for q in &self.declared {
                if !q.contains_ideal(&a)? {
                    return Err(Error::Precondition(format!(
                        "declared prime {q} does not contain {a}"
                    )));
                }
                declared.push(q.canonical()?);
            }
            if declared.is_empty() {
                return Err(Error::Precondition(format!(
                    "minimal primes of {a} must be declared (not a monomial ideal)"
                )));
            }
            let list = PrimeList::new(declared)?;
            let mut meet = list.as_slice()[0].clone();
            for q in &list.as_slice()[1..] {
                meet = intersect(&meet, q)?;
            }
            if !meet.same_ideal(&a)? {
                return Err(Error::Precondition(format!(
                    "declared primes do not intersect to {a}"
                )));
            }
            list
        };
        let a_frob = frobenius_power(&a, 1)?;
        let c = colon(&a_frob, &a)?;
        let mut colon_gens = Vec::new();
        for g in c.basis()?.generators() {
            if !a_frob.contains(g)? {
                colon_gens.push(g.clone());
            }
        }
        let m_frob = frobenius_power(&m, 1)?;
        let mut u: Option<Polynomial> = None;
        for g in &colon_gens {
            if m_frob.contains(g)? {
                continue;
            }
            let better = match &u {
                None => true,
                Some(cur) => {
                    let (dg, dc) = (g.total_degree(), cur.total_degree());
                    dg < dc || (dg == dc && g.cmp_by_order(cur) == std::cmp::Ordering::Less)
                }
            };
            if better {
                u = Some(g.clone());
            }
        }
        let declared_primes = self
            .declared
            .iter()
            .map(|q| q.canonical())
            .collect::<Result<Vec<_>>>()?;
        Ok(RingPresentation {
            ring,
            a,
            m,
            colon_gens,
            u,
            minimal_primes,
            mode: CompatibilityMode::Uniform,
            seeds: self.seeds,
            declared_primes,
        })
    }
}

impl RingPresentation {
    pub fn builder(a: Ideal) -> PresentationBuilder {
        PresentationBuilder {
            a,
            declared: Vec::new(),
            seeds: Vec::new(),
            check_radical: true,
        }
    }

    /// Presentation of a monomial (or otherwise self-describing) quotient.
    pub fn new(a: Ideal) -> Result<Self> {
        Self::builder(a).build()
    }

    /// Same presentation, different compatibility rule.
    pub fn with_mode(&self, mode: CompatibilityMode) -> Self {
        let mut out = self.clone();
        out.mode = mode;
        out
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn p(&self) -> u32 {
        self.ring.p()
    }

    pub fn defining_ideal(&self) -> &Ideal {
        &self.a
    }

    pub fn maximal_ideal(&self) -> &Ideal {
        &self.m
    }

    pub fn splitting_generator(&self) -> Option<&Polynomial> {
        self.u.as_ref()
    }

    pub fn is_f_pure(&self) -> bool {
        self.u.is_some()
    }

    pub fn minimal_primes(&self) -> &PrimeList {
        &self.minimal_primes
    }

    pub fn mode(&self) -> &CompatibilityMode {
        &self.mode
    }

    pub fn seeds(&self) -> &[Ideal] {
        &self.seeds
    }

    pub fn declared_primes(&self) -> &[Ideal] {
        &self.declared_primes
    }

    /// Generators of `(a^[p] : a)` outside `a^[p]`.
    pub fn colon_generators(&self) -> &[Polynomial] {
        &self.colon_gens
    }

    fn multipliers(&self) -> Result<Vec<Polynomial>> {
        match &self.mode {
            CompatibilityMode::Uniform => {
                if self.u.is_none() {
                    return Err(Error::Precondition("ring is not certified F-pure".into()));
                }
                Ok(self.colon_gens.clone())
            }
            CompatibilityMode::SplittingGenerator(u) => Ok(vec![u.clone()]),
        }
    }
}

/// Some `u ∈ (a^[p] : a) \ m^[p]`, or `None` when the colon lies in `m^[p]`.
pub fn fedder_certificate(r: &RingPresentation) -> Option<Polynomial> {
    r.u.clone()
}

/// `b + a` is compatible with the multipliers of `r`.
pub fn is_compatible(b: &Ideal, r: &RingPresentation) -> Result<bool> {
    let mults = r.multipliers()?;
    compatible_with(b, r, &mults)
}

fn compatible_with(b: &Ideal, r: &RingPresentation, mults: &[Polynomial]) -> Result<bool> {
    let b = sum(b, &r.a)?.canonical()?;
    if b.is_unit()? {
        return Ok(true);
    }
    let bp = frobenius_power(&b, 1)?;
    for c in mults {
        for g in b.generators() {
            if !bp.contains(&c.checked_mul(g)?)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Smallest compatible ideal containing `seed + a`.
pub fn star_closure(seed: &Ideal, r: &RingPresentation) -> Result<Ideal> {
    let mults = r.multipliers()?;
    let mut cur = sum(seed, &r.a)?.canonical()?;
    for _ in 0..STAR_CLOSURE_BUDGET {
        if cur.is_unit()? {
            return Ok(cur);
        }
        let mut gens = cur.generators().to_vec();
        for c in &mults {
            let cb = cur
                .generators()
                .iter()
                .map(|g| c.checked_mul(g))
                .collect::<Result<Vec<_>>>()?;
            gens.extend(pth_root(&Ideal::new(&r.ring, cb)).generators().iter().cloned());
        }
        let next = Ideal::new(&r.ring, gens).canonical()?;
        if next.same_ideal(&cur)? {
            return Ok(cur);
        }
        cur = next;
    }
    Err(Error::ResourceLimit(format!(
        "star closure did not stabilize within {STAR_CLOSURE_BUDGET} steps"
    )))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LatticeStrategy {
    /// All variable-subset primes tested (monomial defining ideal).
    Exhaustive,
    /// Primes discovered from star closures of seeds; may be partial.
    Discovery,
}

/// The compatible ideals of `R`, stored as ideals of `A` containing `a`.
#[derive(Clone, Debug)]
pub struct SpecialIdealLattice {
    primes: Vec<Ideal>,
    members: Vec<Ideal>,
    hasse: Vec<(usize, usize)>,
    strategy: LatticeStrategy,
    candidates: Vec<Ideal>,
    warnings: Vec<String>,
    u: Option<Polynomial>,
    index: HashMap<Vec<String>, usize>,
}

/// Canonical, comparable form of an ideal.
pub fn ideal_key(i: &Ideal) -> Result<Vec<String>> {
    i.canonical_strings()
}

fn sort_ideals(v: &mut Vec<(Vec<String>, Ideal)>) {
    v.sort_by(|(ka, _), (kb, _)| {
        let unit_a = ka.len() == 1 && ka[0] == "1";
        let unit_b = kb.len() == 1 && kb[0] == "1";
        unit_a
            .cmp(&unit_b)
            .then(ka.len().cmp(&kb.len()))
            .then_with(|| ka.cmp(kb))
    });
    v.dedup_by(|x, y| x.0 == y.0);
}

impl SpecialIdealLattice {
    fn assemble(
        r: &RingPresentation,
        primes: Vec<Ideal>,
        strategy: LatticeStrategy,
        candidates: Vec<Ideal>,
        warnings: Vec<String>,
    ) -> Result<Self> {
        let mut keyed = primes
            .into_iter()
            .map(|q| Ok((ideal_key(&q)?, q.canonical()?)))
            .collect::<Result<Vec<_>>>()?;
        sort_ideals(&mut keyed);
        let primes: Vec<Ideal> = keyed.into_iter().map(|(_, q)| q).collect();

        // closure under intersection, seeded with the primes, a and (1)
        let mut seen: BTreeSet<Vec<String>> = BTreeSet::new();
        let mut members: Vec<(Vec<String>, Ideal)> = Vec::new();
        let push = |i: Ideal, seen: &mut BTreeSet<Vec<String>>, out: &mut Vec<_>| -> Result<bool> {
            let k = ideal_key(&i)?;
            if seen.insert(k.clone()) {
                out.push((k, i));
                Ok(true)
            } else {
                Ok(false)
            }
        };
        push(r.a.canonical()?, &mut seen, &mut members)?;
        push(Ideal::unit(&r.ring).canonical()?, &mut seen, &mut members)?;
        for q in &primes {
            push(q.clone(), &mut seen, &mut members)?;
        }
        let mut frontier: Vec<Ideal> = members.iter().map(|(_, i)| i.clone()).collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for b in &frontier {
                for q in &primes {
                    let meet = intersect(b, q)?;
                    if push(meet.clone(), &mut seen, &mut members)? {
                        next.push(meet);
                    }
                }
            }
            frontier = next;
        }
        sort_ideals(&mut members);
        let index = members
            .iter()
            .enumerate()
            .map(|(i, (k, _))| (k.clone(), i))
            .collect();
        let members: Vec<Ideal> = members.into_iter().map(|(_, i)| i).collect();

        let mut hasse = Vec::new();
        let n = primes.len();
        let mut below = vec![vec![false; n]; n];
        for i in 0..n {
            for j in 0..n {
                if i != j && primes[j].contains_ideal(&primes[i])? && !primes[i].contains_ideal(&primes[j])? {
                    below[i][j] = true;
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if below[i][j] && !(0..n).any(|k| below[i][k] && below[k][j]) {
                    hasse.push((i, j));
                }
            }
        }
        Ok(SpecialIdealLattice {
            primes,
            members,
            hasse,
            strategy,
            candidates,
            warnings,
            u: r.u.clone(),
            index,
        })
    }

    /// Prime members, smallest height first.
    pub fn primes(&self) -> &[Ideal] {
        &self.primes
    }

    pub fn members(&self) -> &[Ideal] {
        &self.members
    }

    /// Covering pairs `(i, j)` with `primes[i] ⊂ primes[j]`.
    pub fn hasse_edges(&self) -> &[(usize, usize)] {
        &self.hasse
    }

    pub fn strategy(&self) -> LatticeStrategy {
        self.strategy
    }

    /// Seeds and primes examined by the discovery strategy.
    pub fn candidates(&self) -> &[Ideal] {
        &self.candidates
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    pub fn splitting_generator(&self) -> Option<&Polynomial> {
        self.u.as_ref()
    }

    /// Position of `b` among the members.
    pub fn member_index(&self, b: &Ideal) -> Result<Option<usize>> {
        Ok(self.index.get(&ideal_key(b)?).copied())
    }

    pub fn is_member(&self, b: &Ideal) -> Result<bool> {
        Ok(self.member_index(b)?.is_some())
    }

    pub fn prime_index(&self, q: &Ideal) -> Result<Option<usize>> {
        let k = ideal_key(q)?;
        for (i, p) in self.primes.iter().enumerate() {
            if ideal_key(p)? == k {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }

    /// Minimal prime members containing `b`.
    pub fn minimal_primes_over(&self, b: &Ideal) -> Result<Vec<Ideal>> {
        let mut above = Vec::new();
        for q in &self.primes {
            if q.contains_ideal(b)? {
                above.push(q.clone());
            }
        }
        minimal_elements(above)
    }

    /// Canonical strings for reporting.
    pub fn summary(&self) -> Result<LatticeSummary> {
        Ok(LatticeSummary {
            primes: self
                .primes
                .iter()
                .map(|q| q.canonical_string())
                .collect::<Result<_>>()?,
            members: self
                .members
                .iter()
                .map(|q| q.canonical_string())
                .collect::<Result<_>>()?,
            hasse_edges: self.hasse.clone(),
            u: self.u.as_ref().map(|u| u.to_string()),
        })
    }

    /// Structural invariants checked over every member and pair.
    pub fn verify_structure(&self) -> Result<StructureCheck> {
        let mut check = StructureCheck::default();
        for b in &self.members {
            match b.is_radical() {
                Tri::Yes => {}
                Tri::No => check.failures.push(format!("{b} is not radical")),
                Tri::Unknown => {
                    // intersections of primes are radical
                    let meet = intersection_of(&self.primes_over(b)?, b)?;
                    if !meet.same_ideal(b)? {
                        check.unverified_radical += 1;
                    }
                }
            }
        }
        for (i, x) in self.members.iter().enumerate() {
            for y in &self.members[i + 1..] {
                let meet = intersect(x, y)?;
                if !self.is_member(&meet)? {
                    check.failures.push(format!("{x} ∩ {y} = {meet} is not a member"));
                }
            }
        }
        for b in &self.members {
            let meet = intersection_of(&self.primes_over(b)?, b)?;
            if !meet.same_ideal(b)? {
                check
                    .failures
                    .push(format!("{b} differs from the intersection of the primes above it"));
            }
        }
        Ok(check)
    }

    fn primes_over(&self, b: &Ideal) -> Result<Vec<Ideal>> {
        let mut out = Vec::new();
        for q in &self.primes {
            if q.contains_ideal(b)? {
                out.push(q.clone());
            }
        }
        Ok(out)
    }
}

fn intersection_of(ideals: &[Ideal], like: &Ideal) -> Result<Ideal> {
    let mut acc = Ideal::unit(like.ring());
    for q in ideals {
        acc = intersect(&acc, q)?;
    }
    Ok(acc)
}

/// Inclusion-minimal ideals of a list (duplicates collapse to one).
pub fn minimal_elements(ideals: Vec<Ideal>) -> Result<Vec<Ideal>> {
    let mut out: Vec<Ideal> = Vec::new();
    for (i, x) in ideals.iter().enumerate() {
        let mut minimal = true;
        for (j, y) in ideals.iter().enumerate() {
            if i == j {
                continue;
            }
            let y_in_x = x.contains_ideal(y)?;
            if y_in_x && (!y.contains_ideal(x)? || j < i) {
                minimal = false;
                break;
            }
        }
        if minimal {
            out.push(x.clone());
        }
    }
    Ok(out)
}

/// Maximal ideals of a list (duplicates collapse to one).
pub fn maximal_elements(ideals: Vec<Ideal>) -> Result<Vec<Ideal>> {
    let mut out: Vec<Ideal> = Vec::new();
    for (i, x) in ideals.iter().enumerate() {
        let mut maximal = true;
        for (j, y) in ideals.iter().enumerate() {
            if i == j {
                continue;
            }
            if y.contains_ideal(x)? && (!x.contains_ideal(y)? || j < i) {
                maximal = false;
                break;
            }
        }
        if maximal {
            out.push(x.clone());
        }
    }
    Ok(out)
}

/// Result of [`SpecialIdealLattice::verify_structure`].
#[derive(Clone, Debug, Default)]
pub struct StructureCheck {
    pub failures: Vec<String>,
    /// Members whose radicality could not be decided.
    pub unverified_radical: usize,
}

impl StructureCheck {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Lattice rendered with canonical ideal strings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeSummary {
    pub primes: Vec<String>,
    pub members: Vec<String>,
    pub hasse_edges: Vec<(usize, usize)>,
    pub u: Option<String>,
}

/// All compatible ideals of an F-pure `R`.
pub fn special_ideal_lattice(r: &RingPresentation) -> Result<SpecialIdealLattice> {
    if !r.is_f_pure() {
        return Err(Error::Precondition(
            "special ideal lattice needs an F-pure ring (no Fedder certificate)".into(),
        ));
    }
    let n = r.ring.nvars();
    if r.a.is_monomial() && n <= EXHAUSTIVE_VARIABLE_LIMIT {
        exhaustive_lattice(r)
    } else {
        discovery_lattice(r)
    }
}

fn exhaustive_lattice(r: &RingPresentation) -> Result<SpecialIdealLattice> {
    let n = r.ring.nvars();
    let mults = r.multipliers()?;
    let supports: Vec<u64> = r
        .a
        .basis()?
        .generators()
        .iter()
        .map(|g| {
            g.leading_monomial()
                .unwrap()
                .support()
                .fold(0u64, |acc, i| acc | (1 << i))
        })
        .collect();
    let subsets: Vec<u64> = (0u64..(1u64 << n))
        .filter(|s| supports.iter().all(|e| e & s != 0))
        .collect();
    let found: Vec<Result<Option<Ideal>>> = subsets
        .par_iter()
        .map(|&s| {
            let vars: Vec<usize> = (0..n).filter(|i| s & (1 << i) != 0).collect();
            let q = Ideal::from_variables(&r.ring, &vars);
            Ok(if compatible_with(&q, r, &mults)? { Some(q) } else { None })
        })
        .collect();
    let mut primes = Vec::new();
    for f in found {
        if let Some(q) = f? {
            primes.push(q);
        }
    }
    SpecialIdealLattice::assemble(r, primes, LatticeStrategy::Exhaustive, Vec::new(), Vec::new())
}

fn discovery_lattice(r: &RingPresentation) -> Result<SpecialIdealLattice> {
    let ring = &r.ring;
    let mults = r.multipliers()?;
    let mut warnings = vec![
        "discovery strategy: lattice is built from star closures of a finite candidate set and \
         may be partial"
            .to_string(),
        format!(
            "non-monomial defining ideal over F_{}: compatibility may change after extending the \
             coefficient field",
            r.p()
        ),
    ];
    let mut queue: Vec<Ideal> = Vec::new();
    queue.extend(r.minimal_primes.iter().cloned());
    queue.push(r.m.clone());
    for i in 0..ring.nvars() {
        queue.push(sum(&r.a, &Ideal::from_variables(ring, &[i]))?);
    }
    queue.extend(r.seeds.iter().cloned());

    let mut candidates: Vec<Ideal> = Vec::new();
    let mut examined: BTreeSet<Vec<String>> = BTreeSet::new();
    let mut primes: Vec<Ideal> = Vec::new();
    let mut prime_keys: BTreeSet<Vec<String>> = BTreeSet::new();
    let mut at = 0;
    while at < queue.len() {
        if examined.len() >= DISCOVERY_SEED_BUDGET {
            let rest: Vec<String> = queue[at..].iter().map(|q| q.to_string()).collect();
            warnings.push(format!("unexamined seeds: {}", rest.join("; ")));
            break;
        }
        let seed = queue[at].clone();
        at += 1;
        if !examined.insert(ideal_key(&seed)?) {
            continue;
        }
        candidates.push(seed.clone());
        let closed = star_closure(&seed, r)?;
        if closed.is_unit()? {
            continue;
        }
        let components = split_components(&closed, r, &mut warnings)?;
        for q in components {
            if !compatible_with(&q, r, &mults)? {
                continue;
            }
            if prime_keys.insert(ideal_key(&q)?) {
                for i in 0..ring.nvars() {
                    let x = Polynomial::var(ring, i);
                    if !q.contains(&x)? {
                        queue.push(sum(&q, &Ideal::from_variables(ring, &[i]))?);
                    }
                }
                primes.push(q);
            }
        }
    }
    SpecialIdealLattice::assemble(r, primes, LatticeStrategy::Discovery, candidates, warnings)
}

/// Prime components of a compatible ideal where they can be named.
fn split_components(b: &Ideal, r: &RingPresentation, warnings: &mut Vec<String>) -> Result<Vec<Ideal>> {
    match b.is_prime() {
        Tri::Yes => return Ok(vec![b.clone()]),
        Tri::No if b.is_monomial() => return Ok(minimal_primes_monomial(b)?.into_vec()),
        _ => {}
    }
    for q in r.minimal_primes.iter().chain(r.declared_primes.iter()) {
        if q.same_ideal(b)? {
            return Ok(vec![q.clone().declare_prime()]);
        }
    }
    if b.same_ideal(&r.m)? {
        return Ok(vec![r.m.clone()]);
    }
    warnings.push(format!("could not split compatible ideal {b} into prime components"));
    Ok(Vec::new())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffpoly::{parse_polynomial, Characteristic};

    fn ring(p: u64, names: &[&str]) -> Arc<PolyRing> {
        PolyRing::new(Characteristic::new(p).unwrap(), names).unwrap()
    }

    fn pres(p: u64, names: &[&str], a: &str) -> RingPresentation {
        let r = ring(p, names);
        RingPresentation::new(Ideal::parse(&r, a).unwrap()).unwrap()
    }

    fn prime_strings(l: &SpecialIdealLattice) -> Vec<String> {
        l.summary().unwrap().primes
    }

    #[test]
    fn fedder_for_the_triangle() {
        let r = pres(2, &["X", "Y", "Z"], "X*Y, X*Z, Y*Z");
        let u = fedder_certificate(&r).unwrap();
        assert_eq!(u.to_string(), "X*Y*Z");
    }

    #[test]
    fn fedder_fermat_cubic() {
        let rg = ring(7, &["X", "Y", "Z"]);
        let a = Ideal::parse(&rg, "X^3 + Y^3 + Z^3").unwrap();
        let r = RingPresentation::builder(a.clone())
            .declare_primes(vec![a])
            .build()
            .unwrap();
        let u = fedder_certificate(&r).unwrap();
        let f6 = parse_polynomial("(X^3 + Y^3 + Z^3)^6", &rg).unwrap();
        assert_eq!(u, f6);
    }

    #[test]
    fn fedder_absent_for_double_point() {
        let rg = ring(2, &["X"]);
        let a = Ideal::parse(&rg, "X^2").unwrap();
        assert!(RingPresentation::new(a.clone()).is_err());
        let r = RingPresentation::builder(a).check_radical(false).build().unwrap();
        assert!(fedder_certificate(&r).is_none());
        assert!(special_ideal_lattice(&r).is_err());
    }

    #[test]
    fn regular_ring() {
        let r = pres(2, &["X"], "0");
        assert_eq!(fedder_certificate(&r).unwrap().to_string(), "1");
        let l = special_ideal_lattice(&r).unwrap();
        assert_eq!(prime_strings(&l), vec!["(0)"]);
        assert_eq!(l.members().len(), 2);
        assert!(!is_compatible(r.maximal_ideal(), &r).unwrap());
    }

    #[test]
    fn triangle_lattice() {
        let r = pres(2, &["X", "Y", "Z"], "X*Y, X*Z, Y*Z");
        let l = special_ideal_lattice(&r).unwrap();
        assert_eq!(
            prime_strings(&l),
            vec!["(X, Y)", "(X, Z)", "(Y, Z)", "(X, Y, Z)"]
        );
        assert!(l.verify_structure().unwrap().ok());
        assert_eq!(l.hasse_edges().len(), 3);
    }

    #[test]
    fn line_and_point_lattice() {
        let r = pres(2, &["X", "Y", "Z"], "X*Y, Y*Z");
        let l = special_ideal_lattice(&r).unwrap();
        assert_eq!(prime_strings(&l), vec!["(Y)", "(X, Z)", "(X, Y, Z)"]);
        // the single generator XYZ would also admit (X, Y)
        let u = r.splitting_generator().unwrap().clone();
        let single = r.with_mode(CompatibilityMode::SplittingGenerator(u));
        let xy = Ideal::parse(r.ring(), "X, Y").unwrap();
        assert!(is_compatible(&xy, &single).unwrap());
        assert!(!is_compatible(&xy, &r).unwrap());
    }

    #[test]
    fn star_closure_is_least_compatible() {
        let r = pres(2, &["X", "Y", "Z"], "X*Y, X*Z, Y*Z");
        let seed = Ideal::parse(r.ring(), "X").unwrap();
        let c = star_closure(&seed, &r).unwrap();
        assert_eq!(c.canonical_string().unwrap(), "(Y*Z, X)");
        assert!(is_compatible(&c, &r).unwrap());
        let l = special_ideal_lattice(&r).unwrap();
        for b in l.members() {
            if b.contains_ideal(&seed).unwrap() {
                assert!(b.contains_ideal(&c).unwrap());
            }
        }
        assert!(star_closure(&c, &r).unwrap().same_ideal(&c).unwrap());
        let m = r.maximal_ideal().clone();
        assert!(star_closure(&m, &r).unwrap().same_ideal(&m).unwrap());
    }

    #[test]
    fn fermat_cubic_lattice() {
        let rg = ring(7, &["X", "Y", "Z"]);
        let a = Ideal::parse(&rg, "X^3 + Y^3 + Z^3").unwrap();
        let r = RingPresentation::builder(a.clone())
            .declare_primes(vec![a])
            .build()
            .unwrap();
        let l = special_ideal_lattice(&r).unwrap();
        assert_eq!(l.strategy(), LatticeStrategy::Discovery);
        assert_eq!(prime_strings(&l), vec!["(X^3 + Y^3 + Z^3)", "(X, Y, Z)"]);
        assert!(!l.warnings().is_empty());
        assert!(is_compatible(r.maximal_ideal(), &r).unwrap());
    }

    #[test]
    fn same_lattice_in_characteristic_three() {
        for a in ["X*Y, X*Z, Y*Z", "X*Y, Y*Z"] {
            let l2 = special_ideal_lattice(&pres(2, &["X", "Y", "Z"], a)).unwrap();
            let l3 = special_ideal_lattice(&pres(3, &["X", "Y", "Z"], a)).unwrap();
            assert_eq!(l2.summary().unwrap().members, l3.summary().unwrap().members);
        }
    }
}
