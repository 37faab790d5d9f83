use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use super::field::Characteristic;
use super::monomial::{Monomial, MonomialOrder};
use crate::error::{Error, Result};

/// Ambient polynomial ring F_p[X_1, .., X_n] together with its term order.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    field: Characteristic,
    names: Vec<String>,
    order: MonomialOrder,
}

impl PolyRing {
    /// Ring with the default graded-reverse-lexicographic order.
    pub fn new<S: AsRef<str>>(field: Characteristic, names: &[S]) -> Result<Arc<Self>> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, n) in names.iter().enumerate() {
            let mut chars = n.chars();
            let ok_head = chars
                .next()
                .map(|c| c.is_ascii_alphabetic() || c == '_')
                .unwrap_or(false);
            if !ok_head || !chars.all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(Error::InvalidVariableName(n.clone()));
            }
            if names[..i].contains(n) {
                return Err(Error::InvalidVariableName(format!("{n} (duplicate)")));
            }
        }
        Ok(Arc::new(PolyRing {
            field,
            names,
            order: MonomialOrder::GrevLex,
        }))
    }

    pub fn with_order(&self, order: MonomialOrder) -> Arc<Self> {
        Arc::new(PolyRing {
            field: self.field,
            names: self.names.clone(),
            order,
        })
    }

    /// A copy of this ring with extra variables prepended.
    pub(crate) fn prepend_variables(&self, extra: &[&str], order: MonomialOrder) -> Arc<Self> {
        let mut names: Vec<String> = extra.iter().map(|s| s.to_string()).collect();
        names.extend(self.names.iter().cloned());
        Arc::new(PolyRing {
            field: self.field,
            names,
            order,
        })
    }

    #[inline]
    pub fn field(&self) -> Characteristic {
        self.field
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.field.get()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    #[inline]
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// Polynomial over F_p with terms sorted strictly decreasing in the ring's order.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: Vec<(Monomial, u32)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring)
            && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Hash for Polynomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl Polynomial {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<PolyRing>, c: i64) -> Self {
        let c = ring.field.reduce_i64(c);
        Self::term(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Self::constant(ring, 1)
    }

    pub fn var(ring: &Arc<PolyRing>, i: usize) -> Self {
        Self::term(ring, Monomial::var(ring.nvars(), i), 1)
    }

    pub fn term(ring: &Arc<PolyRing>, m: Monomial, c: u32) -> Self {
        assert_eq!(m.nvars(), ring.nvars());
        let c = c % ring.p();
        let terms = if c == 0 { Vec::new() } else { vec![(m, c)] };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn monomial(ring: &Arc<PolyRing>, m: Monomial) -> Self {
        Self::term(ring, m, 1)
    }

    /// Builds the canonical form from arbitrary (possibly repeated) terms.
    pub fn from_terms(ring: &Arc<PolyRing>, mut terms: Vec<(Monomial, u32)>) -> Self {
        let order = ring.order;
        let f = ring.field;
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, u32)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            let c = c % f.get();
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = f.add(last.1, c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|t| t.1 != 0);
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    /// Re-sorts the terms for a ring with the same variables and a different order.
    pub fn to_ring(&self, ring: &Arc<PolyRing>) -> Self {
        assert_eq!(ring.nvars(), self.ring.nvars());
        Self::from_terms(ring, self.terms.clone())
    }

    #[inline]
    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    #[inline]
    pub fn terms(&self) -> &[(Monomial, u32)] {
        &self.terms
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1 == 1
    }

    /// A single term (coefficient arbitrary).
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => {
                let d = m.degree();
                self.terms.iter().all(|(t, _)| t.degree() == d)
            }
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn max_exponent(&self) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| m.max_exponent())
            .max()
            .unwrap_or(0)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, u32)> {
        self.terms.first().map(|(m, c)| (m, *c))
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coeff(&self) -> Option<u32> {
        self.terms.first().map(|t| t.1)
    }

    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None | Some(1) => self.clone(),
            Some(c) => self.scale(self.ring.field.inv(c)),
        }
    }

    pub fn scale(&self, c: u32) -> Self {
        let f = self.ring.field;
        let c = c % f.get();
        if c == 0 {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), f.mul(*a, c))).collect(),
        }
    }

    /// `c * m * self`; monomial multiplication preserves the order.
    pub fn mul_term(&self, m: &Monomial, c: u32) -> Self {
        let f = self.ring.field;
        let c = c % f.get();
        if c == 0 {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(t, a)| (t.mul(m), f.mul(*a, c)))
                .collect(),
        }
    }

    pub fn checked_mul_term(&self, m: &Monomial, c: u32) -> Result<Self> {
        for (t, _) in &self.terms {
            t.checked_mul(m)?;
        }
        Ok(self.mul_term(m, c))
    }

    /// `self + c * other`, by merging sorted term lists.
    pub fn add_scaled(&self, other: &Polynomial, c: u32) -> Self {
        self.check_ring(other);
        let f = self.ring.field;
        let order = self.ring.order;
        let c = c % f.get();
        if c == 0 || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match order.cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0.clone(), f.mul(b[j].1, c)));
                    j += 1;
                }
                Ordering::Equal => {
                    let s = f.add(a[i].1, f.mul(b[j].1, c));
                    if s != 0 {
                        out.push((a[i].0.clone(), s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|(m, x)| (m.clone(), f.mul(*x, c))));
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Self> {
        self.check_ring(other);
        let f = self.ring.field;
        let mut prods = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                prods.push((m1.checked_mul(m2)?, f.mul(*c1, *c2)));
            }
        }
        Ok(Self::from_terms(&self.ring, prods))
    }

    pub fn checked_pow(&self, mut k: u64) -> Result<Self> {
        let mut acc = Self::one(&self.ring);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.checked_mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// `self^(p^e)`: exponents are multiplied by `p^e`, coefficients are fixed by Fermat.
    pub fn frobenius(&self, e: u32) -> Result<Self> {
        let q = self
            .ring
            .field
            .checked_power_of_p(e)
            .ok_or(Error::ExponentOverflow)?;
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| Ok((m.checked_scale(q)?, *c)))
            .collect::<Result<Vec<_>>>()?;
        // scaling exponents is strictly monotone for every supported order
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    /// Exact division by `d`; `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Polynomial) -> Option<Polynomial> {
        self.check_ring(d);
        let (dm, dc) = d.leading_term()?;
        let dm = dm.clone();
        let f = self.ring.field;
        let inv = f.inv(dc);
        let mut rest = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rest.leading_term() {
            if !dm.divides(m) {
                return None;
            }
            let qm = m.div(&dm);
            let qc = f.mul(c, inv);
            rest = rest.add_scaled(&d.mul_term(&qm, qc), f.neg(1));
            quot.push((qm, qc));
        }
        Some(Polynomial::from_terms(&self.ring, quot))
    }

    /// Embeds into a ring with `extra` variables prepended (same order of the rest).
    pub(crate) fn lift_prepend(&self, ring: &Arc<PolyRing>, extra: usize) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0; extra];
                e.extend_from_slice(m.exponents());
                (Monomial::from_exponents(e), *c)
            })
            .collect();
        Polynomial::from_terms(ring, terms)
    }

    /// Inverse of [`Polynomial::lift_prepend`]; `None` if a dropped variable occurs.
    pub(crate) fn drop_prepended(&self, ring: &Arc<PolyRing>, extra: usize) -> Option<Polynomial> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            if m.exponents()[..extra].iter().any(|&e| e != 0) {
                return None;
            }
            terms.push((Monomial::from_exponents(m.exponents()[extra..].to_vec()), *c));
        }
        Some(Polynomial::from_terms(ring, terms))
    }

    pub(crate) fn pop_leading(&mut self) -> Option<(Monomial, u32)> {
        if self.terms.is_empty() {
            None
        } else {
            Some(self.terms.remove(0))
        }
    }

    pub(crate) fn from_sorted_terms(ring: &Arc<PolyRing>, terms: Vec<(Monomial, u32)>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.order.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    fn check_ring(&self, other: &Polynomial) {
        assert!(
            Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring,
            "polynomials from different rings"
        );
    }

    /// Order polynomials by their term lists, highest terms first.
    pub fn cmp_by_order(&self, other: &Polynomial) -> Ordering {
        let order = self.ring.order;
        for (a, b) in self.terms.iter().zip(&other.terms) {
            match order.cmp(&a.0, &b.0).then(a.1.cmp(&b.1)) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.add_scaled(rhs, 1)
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.add_scaled(rhs, self.ring.field.neg(1))
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(self.ring.field.neg(1))
    }
}

/// Panics on exponent overflow; see [`Polynomial::checked_mul`].
impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("exponent overflow")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if *c != 1 || m.is_one() {
                factors.push(c.to_string());
            }
            for (i, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.ring.names[i].clone()),
                    _ => factors.push(format!("{}^{}", self.ring.names[i], e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(p: u64, names: &[&str]) -> Arc<PolyRing> {
        PolyRing::new(Characteristic::new(p).unwrap(), names).unwrap()
    }

    #[test]
    fn canonical_form_drops_zeros_and_merges() {
        let r = ring(3, &["x", "y"]);
        let x = Monomial::var(2, 0);
        let p = Polynomial::from_terms(&r, vec![(x.clone(), 1), (x.clone(), 2)]);
        assert!(p.is_zero());
        let q = Polynomial::from_terms(&r, vec![(Monomial::one(2), 5), (x, 4)]);
        assert_eq!(q.to_string(), "x + 2");
    }

    #[test]
    fn exact_division() {
        let r = ring(5, &["x", "y"]);
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let f = &(&x * &x) - &y;
        let g = &f * &(&x + &y);
        assert_eq!(g.div_exact(&f), Some(&x + &y));
        assert_eq!((&g + &Polynomial::one(&r)).div_exact(&f), None);
    }

    #[test]
    fn pow_overflow_is_an_error() {
        let r = ring(2, &["x"]);
        let x = Polynomial::var(&r, 0);
        assert_eq!(x.frobenius(40), Err(Error::ExponentOverflow));
        assert!(x.checked_pow(1 << 20).is_ok());
    }

    #[test]
    fn rejects_bad_names() {
        let f = Characteristic::new(2).unwrap();
        assert!(PolyRing::new(f, &["1x"]).is_err());
        assert!(PolyRing::new(f, &["x", "x"]).is_err());
    }
}
