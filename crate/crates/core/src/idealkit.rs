//! Ideal algebra over `A = F_p[X_1, .., X_n]`.
//!
//! Intersections use one auxiliary variable `t`:
//! `I ∩ J = (t·I + (1 - t)·J) ∩ A`, computed with an elimination order.
//! Monomial ideals take exponent-vector shortcuts everywhere.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::ffpoly::{
    parse_polynomial_list, Monomial, MonomialOrder, PolyRing, Polynomial,
};
use crate::groebner::{groebner_basis_in, normal_form, GroebnerBasis};

/// Three-valued flag for properties that are only decided on some inputs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tri {
    Yes,
    No,
    Unknown,
}

/// A finitely generated ideal of the ambient polynomial ring.
///
/// Generators are stored monic, deduplicated and sorted. The reduced
/// Gröbner basis (ring order) is computed on first use and then cached.
#[derive(Clone, Debug)]
pub struct Ideal {
    ring: Arc<PolyRing>,
    gens: Vec<Polynomial>,
    basis: OnceLock<GroebnerBasis>,
    declared_prime: bool,
}

impl Ideal {
    pub fn new(ring: &Arc<PolyRing>, gens: Vec<Polynomial>) -> Self {
        let mut gens: Vec<Polynomial> = gens
            .into_iter()
            .filter(|g| !g.is_zero())
            .map(|g| g.monic())
            .collect();
        gens.sort_by(|a, b| b.cmp_by_order(a));
        gens.dedup();
        Ideal {
            ring: ring.clone(),
            gens,
            basis: OnceLock::new(),
            declared_prime: false,
        }
    }

    pub fn parse(ring: &Arc<PolyRing>, text: &str) -> Result<Self> {
        Ok(Self::new(ring, parse_polynomial_list(text, ring)?))
    }

    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Self::new(ring, Vec::new())
    }

    pub fn unit(ring: &Arc<PolyRing>) -> Self {
        Self::new(ring, vec![Polynomial::one(ring)])
    }

    /// The ideal generated by the listed variables.
    pub fn from_variables(ring: &Arc<PolyRing>, vars: &[usize]) -> Self {
        Self::new(ring, vars.iter().map(|&i| Polynomial::var(ring, i)).collect())
    }

    /// The homogeneous maximal ideal `(X_1, .., X_n)`.
    pub fn maximal(ring: &Arc<PolyRing>) -> Self {
        let all: Vec<usize> = (0..ring.nvars()).collect();
        Self::from_variables(ring, &all)
    }

    /// Marks the ideal as prime by configuration (used where primality
    /// cannot be decided here, e.g. an irreducible hypersurface).
    pub fn declare_prime(mut self) -> Self {
        self.declared_prime = true;
        self
    }

    pub fn is_declared_prime(&self) -> bool {
        self.declared_prime
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn basis(&self) -> Result<&GroebnerBasis> {
        if let Some(b) = self.basis.get() {
            return Ok(b);
        }
        let b = groebner_basis_in(&self.ring, &self.gens, self.ring.order())?;
        Ok(self.basis.get_or_init(|| b))
    }

    /// Same ideal, generated by its reduced Gröbner basis.
    pub fn canonical(&self) -> Result<Ideal> {
        let basis = self.basis()?.clone();
        let gens = basis.generators().to_vec();
        let out = Ideal {
            ring: self.ring.clone(),
            gens,
            basis: OnceLock::new(),
            declared_prime: self.declared_prime,
        };
        let _ = out.basis.set(basis);
        Ok(out)
    }

    pub fn contains(&self, g: &Polynomial) -> Result<bool> {
        if g.is_zero() {
            return Ok(true);
        }
        Ok(normal_form(g, self.basis()?).is_zero())
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn same_ideal(&self, other: &Ideal) -> Result<bool> {
        Ok(self.basis()?.generators() == other.basis()?.generators())
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> Result<bool> {
        if self.gens.iter().any(Polynomial::is_constant) {
            return Ok(true);
        }
        Ok(self.basis()?.is_unit_ideal())
    }

    /// All stored generators are single terms.
    pub fn is_monomial(&self) -> bool {
        self.gens.iter().all(Polynomial::is_monomial)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(Polynomial::is_homogeneous)
    }

    pub fn is_radical(&self) -> Tri {
        if self.is_zero() || self.declared_prime {
            return Tri::Yes;
        }
        if self.is_monomial() {
            let basis = self.basis().expect("monomial bases never hit the pair budget");
            let sq_free = basis
                .generators()
                .iter()
                .all(|g| g.leading_monomial().unwrap().is_square_free());
            return if sq_free { Tri::Yes } else { Tri::No };
        }
        Tri::Unknown
    }

    pub fn is_prime(&self) -> Tri {
        if self.is_zero() || self.declared_prime {
            return Tri::Yes;
        }
        if self.is_monomial() {
            let basis = self.basis().expect("monomial bases never hit the pair budget");
            if basis.is_unit_ideal() {
                return Tri::No;
            }
            let vars = basis
                .generators()
                .iter()
                .all(|g| g.leading_monomial().unwrap().degree() == 1);
            return if vars { Tri::Yes } else { Tri::No };
        }
        Tri::Unknown
    }

    /// Sorted canonical strings of the reduced Gröbner basis.
    pub fn canonical_strings(&self) -> Result<Vec<String>> {
        Ok(self
            .basis()?
            .generators()
            .iter()
            .map(|g| g.to_string())
            .collect())
    }

    /// `(g1, g2, ..)` over the reduced Gröbner basis; `(0)` for the zero ideal.
    pub fn canonical_string(&self) -> Result<String> {
        let s = self.canonical_strings()?;
        if s.is_empty() {
            Ok("(0)".into())
        } else {
            Ok(format!("({})", s.join(", ")))
        }
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens = match self.basis.get() {
            Some(b) => b.generators(),
            None => &self.gens,
        };
        if gens.is_empty() {
            return write!(f, "(0)");
        }
        let parts: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// An ordered list of distinct prime ideals.
#[derive(Clone, Debug, Default)]
pub struct PrimeList {
    primes: Vec<Ideal>,
}

impl PrimeList {
    /// Validates primality where decidable and drops duplicates.
    pub fn new(candidates: Vec<Ideal>) -> Result<Self> {
        let mut primes: Vec<Ideal> = Vec::new();
        for c in candidates {
            if c.is_prime() == Tri::No {
                return Err(Error::Precondition(format!("{c} is not prime")));
            }
            let mut dup = false;
            for q in &primes {
                if q.same_ideal(&c)? {
                    dup = true;
                    break;
                }
            }
            if !dup {
                primes.push(c);
            }
        }
        Ok(PrimeList { primes })
    }

    pub fn empty() -> Self {
        PrimeList { primes: Vec::new() }
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Ideal> {
        self.primes.iter()
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    pub fn as_slice(&self) -> &[Ideal] {
        &self.primes
    }

    pub fn into_vec(self) -> Vec<Ideal> {
        self.primes
    }
}

fn check_same_ring(a: &Ideal, b: &Ideal) -> Result<()> {
    if Arc::ptr_eq(&a.ring, &b.ring) || a.ring == b.ring {
        Ok(())
    } else {
        Err(Error::RingMismatch)
    }
}

pub fn sum(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    check_same_ring(i, j)?;
    let mut gens = i.gens.clone();
    gens.extend(j.gens.iter().cloned());
    Ok(Ideal::new(&i.ring, gens))
}

pub fn product(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    check_same_ring(i, j)?;
    let mut gens = Vec::with_capacity(i.gens.len() * j.gens.len());
    for a in &i.gens {
        for b in &j.gens {
            gens.push(a.checked_mul(b)?);
        }
    }
    Ok(Ideal::new(&i.ring, gens))
}

fn monomial_gens(i: &Ideal) -> Vec<Monomial> {
    i.basis()
        .expect("monomial bases never hit the pair budget")
        .generators()
        .iter()
        .map(|g| g.leading_monomial().unwrap().clone())
        .collect()
}

fn from_monomials(ring: &Arc<PolyRing>, monos: Vec<Monomial>) -> Result<Ideal> {
    Ideal::new(
        ring,
        monos.into_iter().map(|m| Polynomial::monomial(ring, m)).collect(),
    )
    .canonical()
}

/// `I ∩ J`.
pub fn intersect(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    check_same_ring(i, j)?;
    if i.is_zero() || j.is_zero() {
        return Ok(Ideal::zero(&i.ring));
    }
    if i.is_unit()? {
        return j.canonical();
    }
    if j.is_unit()? {
        return i.canonical();
    }
    if i.is_monomial() && j.is_monomial() {
        let (a, b) = (monomial_gens(i), monomial_gens(j));
        let mut lcms = Vec::with_capacity(a.len() * b.len());
        for x in &a {
            for y in &b {
                lcms.push(x.lcm(y));
            }
        }
        return from_monomials(&i.ring, lcms);
    }
    let ring = &i.ring;
    let big = ring.prepend_variables(&["_t"], MonomialOrder::Elimination { block: 1 });
    let t = Polynomial::var(&big, 0);
    let one_minus_t = &Polynomial::one(&big) - &t;
    let mut gens = Vec::with_capacity(i.gens.len() + j.gens.len());
    for g in &i.gens {
        gens.push(&t * &g.lift_prepend(&big, 1));
    }
    for g in &j.gens {
        gens.push(&one_minus_t * &g.lift_prepend(&big, 1));
    }
    let gb = groebner_basis_in(&big, &gens, big.order())?;
    let kept: Vec<Polynomial> = gb
        .generators()
        .iter()
        .filter_map(|g| g.drop_prepended(ring, 1))
        .collect();
    Ideal::new(ring, kept).canonical()
}

/// `(I : J) = { g : g·J ⊆ I }`.
pub fn colon(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    check_same_ring(i, j)?;
    let ring = &i.ring;
    if j.is_zero() || i.contains_ideal(j)? {
        return Ok(Ideal::unit(ring));
    }
    if i.is_monomial() && j.is_monomial() {
        let a = monomial_gens(i);
        let mut acc: Option<Ideal> = None;
        for m in monomial_gens(j) {
            let q = from_monomials(ring, a.iter().map(|x| x.quotient_saturating(&m)).collect())?;
            acc = Some(match acc {
                None => q,
                Some(prev) => intersect(&prev, &q)?,
            });
        }
        return Ok(acc.unwrap_or_else(|| Ideal::unit(ring)));
    }
    let mut acc: Option<Ideal> = None;
    for g in &j.gens {
        let q = colon_element(i, g)?;
        acc = Some(match acc {
            None => q,
            Some(prev) => intersect(&prev, &q)?,
        });
    }
    Ok(acc.unwrap_or_else(|| Ideal::unit(ring)))
}

fn colon_element(i: &Ideal, g: &Polynomial) -> Result<Ideal> {
    let ring = &i.ring;
    if i.contains(g)? {
        return Ok(Ideal::unit(ring));
    }
    let principal = Ideal::new(ring, vec![g.clone()]);
    let meet = intersect(i, &principal)?;
    let quotients = meet
        .gens
        .iter()
        .map(|h| {
            h.div_exact(g)
                .ok_or_else(|| Error::Precondition("intersection with (g) not divisible by g".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ring, quotients).canonical()
}

/// `I^[p^e]`, generated by the `p^e`-th powers of the generators of `I`.
pub fn frobenius_power(i: &Ideal, e: u32) -> Result<Ideal> {
    let gens = i
        .gens
        .iter()
        .map(|g| g.frobenius(e))
        .collect::<Result<Vec<_>>>()?;
    Ok(Ideal::new(&i.ring, gens))
}

/// The smallest ideal `K` with `J ⊆ K^[p]`.
///
/// Each generator is written as `Σ_μ h_μ^p · μ` over the monomials `μ` with
/// all exponents below `p`; the answer is generated by every `h_μ`.
pub fn pth_root(j: &Ideal) -> Ideal {
    let ring = &j.ring;
    let p = ring.p();
    let mut out = Vec::new();
    for g in &j.gens {
        let mut parts: std::collections::BTreeMap<Vec<u32>, Vec<(Monomial, u32)>> =
            std::collections::BTreeMap::new();
        for (m, c) in g.terms() {
            let rem: Vec<u32> = m.exponents().iter().map(|e| e % p).collect();
            let quo: Vec<u32> = m.exponents().iter().map(|e| e / p).collect();
            parts
                .entry(rem)
                .or_default()
                .push((Monomial::from_exponents(quo), *c));
        }
        for (_, terms) in parts {
            out.push(Polynomial::from_terms(ring, terms));
        }
    }
    Ideal::new(ring, out)
}

/// Minimal primes of a monomial ideal: one variable ideal per minimal vertex
/// cover of the supports of the minimal generators.
pub fn minimal_primes_monomial(i: &Ideal) -> Result<PrimeList> {
    if !i.is_monomial() {
        return Err(Error::NotMonomial);
    }
    let ring = &i.ring;
    if i.is_zero() {
        return Ok(PrimeList {
            primes: vec![Ideal::zero(ring)],
        });
    }
    if i.is_unit()? {
        return Ok(PrimeList::empty());
    }
    let edges: Vec<Vec<usize>> = monomial_gens(i)
        .iter()
        .map(|m| m.support().collect())
        .collect();
    let covers = minimal_vertex_covers(&edges);
    let primes = covers
        .into_iter()
        .map(|c| Ideal::from_variables(ring, &c))
        .collect();
    Ok(PrimeList { primes })
}

/// All minimal transversals of a hypergraph, sorted by size then lexicographically.
pub(crate) fn minimal_vertex_covers(edges: &[Vec<usize>]) -> Vec<Vec<usize>> {
    fn branch(edges: &[Vec<usize>], chosen: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        match edges.iter().find(|e| !e.iter().any(|v| chosen.contains(v))) {
            None => {
                let mut c = chosen.clone();
                c.sort_unstable();
                out.push(c);
            }
            Some(edge) => {
                for &v in edge {
                    chosen.push(v);
                    branch(edges, chosen, out);
                    chosen.pop();
                }
            }
        }
    }
    let mut all = Vec::new();
    branch(edges, &mut Vec::new(), &mut all);
    all.sort();
    all.dedup();
    let minimal: Vec<Vec<usize>> = all
        .iter()
        .filter(|c| {
            !all.iter()
                .any(|d| d.len() < c.len() && d.iter().all(|v| c.contains(v)))
        })
        .cloned()
        .collect();
    let mut minimal = minimal;
    minimal.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    minimal
}

/// Cap on candidates examined by [`prime_avoidance_element`].
pub const AVOIDANCE_SEARCH_LIMIT: usize = 200_000;

/// An element of `a` lying outside every ideal in `avoid`.
///
/// Candidates are `Σ c_i g_i` with `c_i ∈ F_p`, first over the generators of
/// `a` (by support size, then lexicographically), then over the generators
/// together with their products of degree two and three.
pub fn prime_avoidance_element(a: &Ideal, avoid: &[Ideal]) -> Result<Polynomial> {
    for q in avoid {
        check_same_ring(a, q)?;
        if q.contains_ideal(a)? {
            return Err(Error::Precondition(format!("{a} is contained in {q}")));
        }
    }
    if avoid.is_empty() {
        return Ok(a
            .gens
            .first()
            .cloned()
            .unwrap_or_else(|| Polynomial::zero(&a.ring)));
    }
    let outside = |g: &Polynomial| -> Result<bool> {
        for q in avoid {
            if q.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    };
    let mut budget = AVOIDANCE_SEARCH_LIMIT;
    if let Some(g) = search_combinations(&a.gens, a.gens.len(), &outside, &mut budget)? {
        return Ok(g);
    }
    let mut pool = a.gens.clone();
    for (x, g) in a.gens.iter().enumerate() {
        for h in &a.gens[x..] {
            pool.push(g.checked_mul(h)?);
        }
    }
    let n = a.gens.len();
    for x in 0..n {
        for y in x..n {
            for z in y..n {
                pool.push(a.gens[x].checked_mul(&a.gens[y])?.checked_mul(&a.gens[z])?);
            }
        }
    }
    if let Some(g) = search_combinations(&pool, 3, &outside, &mut budget)? {
        return Ok(g);
    }
    Err(Error::SearchExhausted(format!(
        "no element of {a} avoiding the given primes among F_{}-combinations of generators and \
         their products up to degree three; enlarge p or the degree bound",
        a.ring.p()
    )))
}

fn search_combinations(
    pool: &[Polynomial],
    max_support: usize,
    accept: &dyn Fn(&Polynomial) -> Result<bool>,
    budget: &mut usize,
) -> Result<Option<Polynomial>> {
    if pool.is_empty() {
        return Ok(None);
    }
    let p = pool[0].ring().p();
    for k in 1..=max_support.min(pool.len()) {
        let mut subset: Vec<usize> = (0..k).collect();
        loop {
            // coefficient vectors with leading coefficient 1, odometer order
            let mut coeffs = vec![1u32; k];
            loop {
                if *budget == 0 {
                    return Ok(None);
                }
                *budget -= 1;
                let mut cand = Polynomial::zero(pool[0].ring());
                for (idx, &s) in subset.iter().enumerate() {
                    cand = cand.add_scaled(&pool[s], coeffs[idx]);
                }
                if !cand.is_zero() && accept(&cand)? {
                    return Ok(Some(cand));
                }
                let mut pos = k;
                loop {
                    if pos <= 1 {
                        pos = 0;
                        break;
                    }
                    pos -= 1;
                    if coeffs[pos] + 1 < p {
                        coeffs[pos] += 1;
                        break;
                    }
                    coeffs[pos] = 1;
                }
                if pos == 0 {
                    break;
                }
            }
            if !next_subset(&mut subset, pool.len()) {
                break;
            }
        }
    }
    Ok(None)
}

fn next_subset(subset: &mut [usize], n: usize) -> bool {
    let k = subset.len();
    for i in (0..k).rev() {
        if subset[i] < n - k + i {
            subset[i] += 1;
            for j in i + 1..k {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// `b` has positive height in `R`, i.e. `b = R` or `b` lies in no minimal prime of `R`.
pub fn has_positive_height(b: &Ideal, minimal_primes_of_r: &PrimeList) -> Result<bool> {
    if b.is_unit()? {
        return Ok(true);
    }
    for q in minimal_primes_of_r.iter() {
        if q.contains_ideal(b)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffpoly::{parse_polynomial, Characteristic};

    fn ring(p: u64, names: &[&str]) -> Arc<PolyRing> {
        PolyRing::new(Characteristic::new(p).unwrap(), names).unwrap()
    }

    fn ideal(r: &Arc<PolyRing>, s: &str) -> Ideal {
        Ideal::parse(r, s).unwrap()
    }

    fn cs(i: &Ideal) -> String {
        i.canonical_string().unwrap()
    }

    #[test]
    fn intersections() {
        let r = ring(2, &["X", "Y", "Z"]);
        let i = intersect(
            &intersect(&ideal(&r, "X, Y"), &ideal(&r, "X, Z")).unwrap(),
            &ideal(&r, "Y, Z"),
        )
        .unwrap();
        assert_eq!(cs(&i), "(X*Y, X*Z, Y*Z)");
        let a = ideal(&r, "X+Y, Z^2");
        assert!(intersect(&a, &Ideal::unit(&r)).unwrap().same_ideal(&a).unwrap());
        assert_eq!(cs(&intersect(&ideal(&r, "X"), &ideal(&r, "Y")).unwrap()), "(X*Y)");
    }

    #[test]
    fn general_intersection_agrees_with_monomial_path() {
        // force the elimination route by disguising monomial ideals
        let r = ring(3, &["X", "Y", "Z"]);
        let i = ideal(&r, "X + Y, Y");
        let j = ideal(&r, "X*Z + Z^2, Z^2");
        let general = intersect(&i, &j).unwrap();
        let mono = intersect(&ideal(&r, "X, Y"), &ideal(&r, "X*Z, Z^2")).unwrap();
        assert!(general.same_ideal(&mono).unwrap());
    }

    #[test]
    fn colons() {
        let r = ring(2, &["X"]);
        assert_eq!(cs(&colon(&ideal(&r, "X^4"), &ideal(&r, "X^2")).unwrap()), "(X^2)");
        let r = ring(2, &["X", "Y", "Z"]);
        let i = ideal(&r, "X*Y + Z^2, Y^3");
        assert!(colon(&i, &Ideal::unit(&r)).unwrap().same_ideal(&i).unwrap());
        let c = colon(&ideal(&r, "X^2*Y^2, X^2*Z^2, Y^2*Z^2"), &ideal(&r, "X*Y, X*Z, Y*Z")).unwrap();
        assert!(c.contains(&parse_polynomial("X*Y*Z", &r).unwrap()).unwrap());
    }

    #[test]
    fn general_colon_principal() {
        let r = ring(7, &["X", "Y", "Z"]);
        let f = ideal(&r, "X^3 + Y^3 + Z^3");
        let fp = frobenius_power(&f, 1).unwrap();
        let c = colon(&fp, &f).unwrap();
        // (f^7 : f) = (f^6)
        let f6 = parse_polynomial("(X^3 + Y^3 + Z^3)^6", &r).unwrap();
        assert!(c.same_ideal(&Ideal::new(&r, vec![f6])).unwrap());
    }

    #[test]
    fn frobenius_powers() {
        let r = ring(2, &["X", "Y", "Z"]);
        let i = frobenius_power(&ideal(&r, "X*Y, X*Z, Y*Z"), 1).unwrap();
        assert_eq!(cs(&i), "(X^2*Y^2, X^2*Z^2, Y^2*Z^2)");
        assert!(i.is_monomial());
        assert!(frobenius_power(&Ideal::zero(&r), 3).unwrap().is_zero());
        let r = ring(7, &["X", "Y", "Z"]);
        let i = frobenius_power(&ideal(&r, "X^3+Y^3+Z^3"), 1).unwrap();
        assert_eq!(cs(&i), "(X^21 + Y^21 + Z^21)");
    }

    #[test]
    fn pth_roots() {
        for p in [2u64, 3, 5] {
            let r = ring(p, &["X"]);
            let x = |e: u64| ideal(&r, &format!("X^{e}"));
            assert_eq!(cs(&pth_root(&x(p))), "(X)");
            assert_eq!(cs(&pth_root(&x(p + 1))), "(X)");
            // minimality: X^(p+1) is not in (X^2)^[p]
            let sq = frobenius_power(&x(2), 1).unwrap();
            assert!(!sq.contains(&parse_polynomial(&format!("X^{}", p + 1), &r).unwrap()).unwrap());
            assert_eq!(cs(&pth_root(&x(2 * p))), "(X^2)");
        }
    }

    #[test]
    fn minimal_primes() {
        let r = ring(2, &["X", "Y", "Z"]);
        let l = minimal_primes_monomial(&ideal(&r, "X*Y, X*Z, Y*Z")).unwrap();
        let s: Vec<String> = l.iter().map(cs).collect();
        assert_eq!(s, vec!["(X, Y)", "(X, Z)", "(Y, Z)"]);
        let l = minimal_primes_monomial(&ideal(&r, "X*Y, Y*Z")).unwrap();
        let s: Vec<String> = l.iter().map(cs).collect();
        assert_eq!(s, vec!["(Y)", "(X, Z)"]);
        let l = minimal_primes_monomial(&Ideal::zero(&r)).unwrap();
        assert_eq!(l.len(), 1);
        assert!(l.as_slice()[0].is_zero());
        assert_eq!(
            minimal_primes_monomial(&ideal(&r, "X + Y")).unwrap_err(),
            Error::NotMonomial
        );
    }

    #[test]
    fn avoidance() {
        let r = ring(2, &["X", "Y", "Z"]);
        let avoid: Vec<Ideal> = ["X, Y", "X, Z", "Y, Z"].iter().map(|s| ideal(&r, s)).collect();
        let e = prime_avoidance_element(&Ideal::maximal(&r), &avoid).unwrap();
        assert_eq!(e.to_string(), "X + Y + Z");
        assert_eq!(prime_avoidance_element(&ideal(&r, "X"), &[]).unwrap().to_string(), "X");
        let e = prime_avoidance_element(&ideal(&r, "X, Y"), &[ideal(&r, "X")]).unwrap();
        assert_eq!(e.to_string(), "Y");
        assert!(matches!(
            prime_avoidance_element(&ideal(&r, "X*Y"), &[ideal(&r, "X")]),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn avoidance_needs_products_over_f2() {
        // over F_2 every linear combination of X, Y lies in (X), (Y) or (X+Y)
        let r = ring(2, &["X", "Y"]);
        let avoid: Vec<Ideal> = ["X", "Y", "X + Y"].iter().map(|s| ideal(&r, s)).collect();
        let e = prime_avoidance_element(&ideal(&r, "X, Y"), &avoid).unwrap();
        for q in &avoid {
            assert!(!q.contains(&e).unwrap());
        }
        assert!(ideal(&r, "X, Y").contains(&e).unwrap());
    }

    #[test]
    fn positive_height() {
        let r = ring(2, &["X", "Y", "Z"]);
        let mins = minimal_primes_monomial(&ideal(&r, "X*Y, X*Z, Y*Z")).unwrap();
        assert!(has_positive_height(&Ideal::maximal(&r), &mins).unwrap());
        assert!(!has_positive_height(&ideal(&r, "X, Y"), &mins).unwrap());
        assert!(has_positive_height(&Ideal::unit(&r), &mins).unwrap());
    }

    #[test]
    fn flags() {
        let r = ring(3, &["X", "Y"]);
        assert_eq!(ideal(&r, "X*Y").is_radical(), Tri::Yes);
        assert_eq!(ideal(&r, "X^2").is_radical(), Tri::No);
        assert_eq!(ideal(&r, "X, Y").is_prime(), Tri::Yes);
        assert_eq!(ideal(&r, "X*Y").is_prime(), Tri::No);
        assert_eq!(ideal(&r, "X^2 + Y").is_prime(), Tri::Unknown);
        assert_eq!(ideal(&r, "X^2 + Y").declare_prime().is_prime(), Tri::Yes);
        assert!(!ideal(&r, "X^2 + Y").is_homogeneous());
    }
}
