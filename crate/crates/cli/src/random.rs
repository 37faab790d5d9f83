//! Seeded pseudorandom polynomials and ideals.

use std::sync::Arc;

use rand::Rng;

use charp_core::ffpoly::{Monomial, PolyRing, Polynomial};

/// Monomials of exact degree `d`.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(Monomial::from_exponents(cur.clone()));
            return;
        }
        for e in 0..=left {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
    }
    if nvars == 0 {
        return if d == 0 { vec![Monomial::one(0)] } else { Vec::new() };
    }
    let mut out = Vec::new();
    rec(0, d, &mut vec![0; nvars], &mut out);
    out
}

/// Nonzero homogeneous polynomial of degree `d` with random coefficients.
pub fn homogeneous<R: Rng>(ring: &Arc<PolyRing>, d: u32, rng: &mut R) -> Polynomial {
    let mons = monomials_of_degree(ring.nvars(), d);
    loop {
        let mut terms: Vec<(Monomial, u32)> = Vec::new();
        for m in &mons {
            if rng.gen_bool(0.5) {
                terms.push((m.clone(), rng.gen_range(1..ring.p())));
            }
        }
        let f = Polynomial::from_terms(ring, terms);
        if !f.is_zero() {
            return f;
        }
    }
}

/// Random polynomial of degree `≤ d`, possibly zero.
pub fn polynomial<R: Rng>(ring: &Arc<PolyRing>, d: u32, rng: &mut R) -> Polynomial {
    let mut terms = Vec::new();
    for k in 0..=d {
        for m in monomials_of_degree(ring.nvars(), k) {
            if rng.gen_bool(0.35) {
                terms.push((m, rng.gen_range(1..ring.p())));
            }
        }
    }
    Polynomial::from_terms(ring, terms)
}

/// Random monomial of degree `≤ d`.
pub fn monomial<R: Rng>(ring: &Arc<PolyRing>, d: u32, rng: &mut R) -> Polynomial {
    let k = rng.gen_range(0..=d);
    let mons = monomials_of_degree(ring.nvars(), k);
    Polynomial::monomial(ring, mons[rng.gen_range(0..mons.len())].clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(4, 3).len(), 20);
        assert!(monomials_of_degree(2, 4).iter().all(|m| m.degree() == 4));
    }
}
