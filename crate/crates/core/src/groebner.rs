//! Buchberger's algorithm with the normal selection strategy, plus normal
//! forms and ideal membership.
//!
//! Only Buchberger's two classical criteria are used to discard pairs
//! (coprime leading monomials, and the chain criterion). Monomial inputs skip
//! Buchberger entirely: a minimal generating set of monomials is already a
//! reduced Gröbner basis.

use std::sync::atomic::{AtomicUsize, Ordering as AtomicOrdering};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ffpoly::{Monomial, MonomialOrder, PolyRing, Polynomial};

/// Default cap on the number of critical pairs processed per basis.
pub const DEFAULT_PAIR_BUDGET: usize = 100_000;

static PAIR_BUDGET: AtomicUsize = AtomicUsize::new(DEFAULT_PAIR_BUDGET);

/// Sets the process-wide critical pair budget.
pub fn set_pair_budget(budget: usize) {
    PAIR_BUDGET.store(budget.max(1), AtomicOrdering::Relaxed);
}

pub fn pair_budget() -> usize {
    PAIR_BUDGET.load(AtomicOrdering::Relaxed)
}

/// A Gröbner basis. The generators are sorted by decreasing leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Arc<PolyRing>,
    gens: Vec<Polynomial>,
    reduced: bool,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order()
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.gens.iter().any(|g| g.is_constant() && !g.is_zero())
    }

    pub fn is_monomial(&self) -> bool {
        self.gens.iter().all(Polynomial::is_monomial)
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.gens.iter().filter_map(Polynomial::leading_monomial)
    }

    /// True when no leading monomial of the basis divides `m`.
    pub fn is_standard(&self, m: &Monomial) -> bool {
        !self.leading_monomials().any(|l| l.divides(m))
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens` under `order`.
pub fn groebner_basis(gens: &[Polynomial], order: MonomialOrder) -> Result<GroebnerBasis> {
    let ring = match gens.first() {
        Some(g) => g.ring().clone(),
        None => {
            return Err(Error::Precondition(
                "empty generator list carries no ring; use groebner_basis_in".into(),
            ))
        }
    };
    groebner_basis_in(&ring, gens, order)
}

/// As [`groebner_basis`], with the ambient ring given explicitly (so that an
/// empty generator list is allowed).
pub fn groebner_basis_in(
    ring: &Arc<PolyRing>,
    gens: &[Polynomial],
    order: MonomialOrder,
) -> Result<GroebnerBasis> {
    let ring = if ring.order() == order {
        ring.clone()
    } else {
        ring.with_order(order)
    };
    let mut input: Vec<Polynomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if g.ring().nvars() != ring.nvars() || g.ring().field() != ring.field() {
            return Err(Error::RingMismatch);
        }
        if !g.is_zero() {
            input.push(g.to_ring(&ring).monic());
        }
    }
    if input.iter().any(|g| g.is_constant()) {
        return Ok(GroebnerBasis {
            gens: vec![Polynomial::one(&ring)],
            ring,
            reduced: true,
        });
    }
    let gens = if input.is_empty() {
        Vec::new()
    } else if input.iter().all(Polynomial::is_monomial) {
        minimal_monomials(input)
    } else {
        let basis = buchberger(&ring, input)?;
        reduce_basis(basis)
    };
    Ok(GroebnerBasis {
        ring,
        gens,
        reduced: true,
    })
}

/// Remainder of `g` on division by the basis; no term of the result is
/// divisible by a leading monomial of the basis.
pub fn normal_form(g: &Polynomial, basis: &GroebnerBasis) -> Polynomial {
    let g = if g.ring().order() == basis.order() {
        g.clone()
    } else {
        g.to_ring(&basis.ring)
    };
    if basis.is_monomial() {
        let terms = g
            .terms()
            .iter()
            .filter(|(m, _)| basis.is_standard(m))
            .cloned()
            .collect();
        return Polynomial::from_sorted_terms(g.ring(), terms);
    }
    reduce_full(&g, &basis.gens)
}

/// `g ∈ (gens)`.
pub fn ideal_member(g: &Polynomial, gens: &[Polynomial]) -> Result<bool> {
    if g.is_zero() {
        return Ok(true);
    }
    let basis = groebner_basis_in(g.ring(), gens, g.ring().order())?;
    Ok(normal_form(g, &basis).is_zero())
}

fn minimal_monomials(input: Vec<Polynomial>) -> Vec<Polynomial> {
    let ring = input[0].ring().clone();
    let order = ring.order();
    let mut monos: Vec<Monomial> = input
        .into_iter()
        .map(|g| g.leading_monomial().unwrap().clone())
        .collect();
    monos.sort_by(|a, b| order.cmp(a, b));
    monos.dedup();
    let keep: Vec<Monomial> = monos
        .iter()
        .filter(|m| !monos.iter().any(|o| o != *m && o.divides(m)))
        .cloned()
        .collect();
    let mut out: Vec<Polynomial> = keep
        .into_iter()
        .map(|m| Polynomial::monomial(&ring, m))
        .collect();
    out.sort_by(|a, b| b.cmp_by_order(a));
    out
}

/// Full reduction of `g` modulo `basis` (arbitrary, not necessarily Gröbner).
pub(crate) fn reduce_full(g: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let ring = g.ring().clone();
    let f = ring.field();
    let mut rest = g.clone();
    let mut rem: Vec<(Monomial, u32)> = Vec::new();
    while let Some((lm, lc)) = rest.leading_term() {
        let divisor = basis
            .iter()
            .find(|b| b.leading_monomial().is_some_and(|bl| bl.divides(lm)));
        match divisor {
            Some(b) => {
                let (bl, bc) = b.leading_term().unwrap();
                let m = lm.div(bl);
                let c = f.neg(f.mul(lc, f.inv(bc)));
                rest = rest.add_scaled(&b.mul_term(&m, 1), c);
            }
            None => {
                let t = rest.pop_leading().unwrap();
                rem.push(t);
            }
        }
    }
    Polynomial::from_sorted_terms(&ring, rem)
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

fn s_polynomial(a: &Polynomial, b: &Polynomial, lcm: &Monomial) -> Polynomial {
    let (la, ca) = a.leading_term().unwrap();
    let (lb, cb) = b.leading_term().unwrap();
    let f = a.ring().field();
    let left = a.mul_term(&lcm.div(la), f.inv(ca));
    let right = b.mul_term(&lcm.div(lb), f.inv(cb));
    &left - &right
}

fn add_to_basis(
    basis: &mut Vec<Polynomial>,
    pairs: &mut Vec<Pair>,
    pending: &mut Vec<Vec<bool>>,
    g: Polynomial,
) {
    let k = basis.len();
    let lg = g.leading_monomial().unwrap().clone();
    for (i, b) in basis.iter().enumerate() {
        let lcm = b.leading_monomial().unwrap().lcm(&lg);
        pairs.push(Pair { i, j: k, lcm });
        pending[i].push(true);
    }
    basis.push(g);
    pending.push(Vec::new());
}

fn buchberger(ring: &Arc<PolyRing>, input: Vec<Polynomial>) -> Result<Vec<Polynomial>> {
    let order = ring.order();
    let budget = pair_budget();
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    // pending[i][j - i - 1] for i < j: the pair (i, j) has not been treated yet
    let mut pending: Vec<Vec<bool>> = Vec::new();

    // seed with inter-reduced input, sorted for determinism
    let mut seeds = input;
    seeds.sort_by(|a, b| a.cmp_by_order(b));
    seeds.dedup();
    for g in seeds {
        let r = reduce_full(&g, &basis);
        if !r.is_zero() {
            add_to_basis(&mut basis, &mut pairs, &mut pending, r.monic());
        }
    }

    let mut processed = 0usize;
    while !pairs.is_empty() {
        // normal strategy: minimal lcm degree, ties by the term order, then indices
        let (idx, _) = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.lcm
                    .degree()
                    .cmp(&b.lcm.degree())
                    .then_with(|| order.cmp(&a.lcm, &b.lcm))
                    .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
            })
            .unwrap();
        let pair = pairs.swap_remove(idx);
        processed += 1;
        if processed > budget {
            return Err(Error::ResourceLimit(format!(
                "Groebner pair budget of {budget} exceeded"
            )));
        }
        let (i, j) = (pair.i, pair.j);
        let is_pending = |pending: &Vec<Vec<bool>>, a: usize, b: usize| {
            let (a, b) = if a < b { (a, b) } else { (b, a) };
            pending[a].get(b - a - 1).copied().unwrap_or(false)
        };
        let li = basis[i].leading_monomial().unwrap();
        let lj = basis[j].leading_monomial().unwrap();
        let skip = li.is_coprime(lj)
            || (0..basis.len()).any(|k| {
                k != i
                    && k != j
                    && basis[k].leading_monomial().unwrap().divides(&pair.lcm)
                    && !is_pending(&pending, i, k)
                    && !is_pending(&pending, j, k)
            });
        pending[i][j - i - 1] = false;
        if skip {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], &pair.lcm);
        let r = reduce_full(&s, &basis);
        if !r.is_zero() {
            if r.is_constant() {
                return Ok(vec![Polynomial::one(ring)]);
            }
            add_to_basis(&mut basis, &mut pairs, &mut pending, r.monic());
        }
    }
    Ok(basis)
}

fn reduce_basis(basis: Vec<Polynomial>) -> Vec<Polynomial> {
    if basis.len() == 1 && basis[0].is_constant() {
        return basis;
    }
    // minimal: drop elements whose leading monomial is divisible by another's
    let mut minimal: Vec<Polynomial> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let lg = g.leading_monomial().unwrap();
        let redundant = basis.iter().enumerate().any(|(l, h)| {
            let lh = h.leading_monomial().unwrap();
            l != k && lh.divides(lg) && (lh != lg || l < k)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced: Vec<Polynomial> = (0..minimal.len())
        .map(|k| {
            let others: Vec<Polynomial> = minimal
                .iter()
                .enumerate()
                .filter(|(l, _)| *l != k)
                .map(|(_, h)| h.clone())
                .collect();
            reduce_full(&minimal[k], &others).monic()
        })
        .collect();
    reduced.sort_by(|a, b| b.cmp_by_order(a));
    reduced
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffpoly::{parse_polynomial, parse_polynomial_list, Characteristic};

    fn ring(p: u64, names: &[&str]) -> Arc<PolyRing> {
        PolyRing::new(Characteristic::new(p).unwrap(), names).unwrap()
    }

    fn gb(r: &Arc<PolyRing>, s: &str) -> GroebnerBasis {
        let gens = parse_polynomial_list(s, r).unwrap();
        groebner_basis_in(r, &gens, MonomialOrder::GrevLex).unwrap()
    }

    fn strings(b: &GroebnerBasis) -> Vec<String> {
        b.generators().iter().map(|g| g.to_string()).collect()
    }

    /// Buchberger's criterion checked directly: every S-polynomial reduces to zero.
    fn assert_groebner(b: &GroebnerBasis) {
        let g = b.generators();
        for i in 0..g.len() {
            for j in i + 1..g.len() {
                let lcm = g[i]
                    .leading_monomial()
                    .unwrap()
                    .lcm(g[j].leading_monomial().unwrap());
                let s = s_polynomial(&g[i], &g[j], &lcm);
                assert!(reduce_full(&s, g).is_zero(), "S({i},{j}) does not reduce");
            }
        }
    }

    #[test]
    fn already_reduced_inputs() {
        let r = ring(2, &["X", "Y"]);
        assert_eq!(strings(&gb(&r, "X, Y")), vec!["X", "Y"]);
        assert!(gb(&r, "").is_zero_ideal());
        let r = ring(2, &["X", "Y", "Z"]);
        let b = gb(&r, "X*Y, X*Z, Y*Z");
        assert_eq!(strings(&b), vec!["X*Y", "X*Z", "Y*Z"]);
        assert_groebner(&b);
    }

    #[test]
    fn normal_forms() {
        let r = ring(2, &["X", "Y"]);
        let b = gb(&r, "X*Y");
        let g = parse_polynomial("X^2*Y", &r).unwrap();
        assert!(normal_form(&g, &b).is_zero());
        let g = parse_polynomial("X + Y", &r).unwrap();
        assert_eq!(normal_form(&g, &gb(&r, "")), g);

        let r = ring(5, &["X", "Y"]);
        let b = gb(&r, "X^2 - Y");
        let g = parse_polynomial("X^3", &r).unwrap();
        let nf = normal_form(&g, &b);
        // substitution oracle X^2 -> Y
        assert_eq!(nf, parse_polynomial("X*Y", &r).unwrap());
    }

    #[test]
    fn membership() {
        let r = ring(2, &["X", "Y", "Z"]);
        let gens = parse_polynomial_list("X*Y, X*Z, Y*Z", &r).unwrap();
        let z = parse_polynomial("Z", &r).unwrap();
        assert!(!ideal_member(&z, &gens).unwrap());
        let xyz = parse_polynomial("X*Y*Z", &r).unwrap();
        assert!(ideal_member(&xyz, &parse_polynomial_list("X*Y", &r).unwrap()).unwrap());
        let g = parse_polynomial("X^2*Y^2*Z", &r).unwrap();
        let sq = parse_polynomial_list("X^2*Y^2, X^2*Z^2, Y^2*Z^2", &r).unwrap();
        assert!(ideal_member(&g, &sq).unwrap());
    }

    #[test]
    fn cyclic_three_over_f13() {
        let r = ring(13, &["a", "b", "c"]);
        let b = gb(&r, "a+b+c, a*b+b*c+c*a, a*b*c-1");
        assert_groebner(&b);
        // the variety is the 6 permutations of cube roots of unity; c^3 = 1 lies in the ideal
        let c3 = parse_polynomial("c^3 - 1", &r).unwrap();
        assert!(normal_form(&c3, &b).is_zero());
        let c = parse_polynomial("c - 1", &r).unwrap();
        assert!(!normal_form(&c, &b).is_zero());
    }

    #[test]
    fn unit_ideal_and_budget() {
        let r = ring(3, &["x", "y"]);
        let b = gb(&r, "x*y - 1, x");
        assert!(b.is_unit_ideal());
        assert_eq!(strings(&b), vec!["1"]);

        set_pair_budget(1);
        let gens = parse_polynomial_list("x^2 + y, x*y + 1, y^3 + x", &r).unwrap();
        let res = groebner_basis_in(&r, &gens, MonomialOrder::GrevLex);
        set_pair_budget(DEFAULT_PAIR_BUDGET);
        assert!(matches!(res, Err(Error::ResourceLimit(_))));
    }

    #[test]
    fn lex_elimination() {
        let r = ring(7, &["x", "y"]);
        let gens = parse_polynomial_list("x^2 - y, x*y - 1", &r).unwrap();
        let b = groebner_basis_in(&r, &gens, MonomialOrder::Lex).unwrap();
        assert_groebner(&b);
        // y^3 = 1 is the eliminant
        let last = b.generators().last().unwrap();
        assert_eq!(last.to_string(), "y^3 + 6");
    }
}
