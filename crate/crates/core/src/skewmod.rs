//! Finite truncations of `⊕_n R/a^[p^n]` with the Frobenius action.
//!
//! Level `n` is `A/K_n` with `K_n = a_test^[p^n] + a`, and `x` sends the class
//! of `h` at level `n` to the class of `h^p` at level `n + 1`. Over `F_p` the
//! map `h ↦ s·h^{p^k}` is linear, so every set computed here is the kernel of
//! an explicit matrix over `F_p` on the standard monomials of degree `≤ D`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::ffpoly::{Characteristic, Monomial, Polynomial};
use crate::frobpure::{RingPresentation, SpecialIdealLattice};
use crate::groebner::normal_form;
use crate::idealkit::{colon, frobenius_power, intersect, sum, Ideal};
use crate::stight::{s_test_element, MultSet};

pub const DEFAULT_TRUNCATION_LEVELS: u32 = 4;
pub const DEFAULT_DEGREE_CAP: u32 = 6;

/// Largest accepted `p^N · D`.
pub const EXPONENT_SCALE_LIMIT: u64 = 2048;
/// Largest accepted number of basis monomials at one level.
pub const BASIS_SIZE_LIMIT: usize = 20_000;

#[derive(Clone, Debug)]
pub struct SkewTruncation {
    a: Ideal,
    a_test: Ideal,
    levels: Vec<Ideal>,
    bases: Vec<Vec<Monomial>>,
    degree_cap: u32,
    field: Characteristic,
}

/// Levels `0..=n` of `Φ(R/a_test)`, each with its standard monomials of degree `≤ d`.
pub fn build_truncation(r: &RingPresentation, a_test: &Ideal, n: u32, d: u32) -> Result<SkewTruncation> {
    let ring = r.ring();
    let p = r.p() as u64;
    let scale = p
        .checked_pow(n)
        .and_then(|q| q.checked_mul(d.max(1) as u64))
        .ok_or_else(|| Error::ResourceLimit("truncation exponent scale overflows".into()))?;
    if scale > EXPONENT_SCALE_LIMIT {
        return Err(Error::ResourceLimit(format!(
            "truncation needs exponents up to p^N·D = {scale} (limit {EXPONENT_SCALE_LIMIT}); \
             lower the level count or degree cap"
        )));
    }
    let a = r.defining_ideal().clone();
    let a_test = sum(a_test, &a)?.canonical()?;
    let all = monomials_up_to(ring.nvars(), d);
    if all.len() > BASIS_SIZE_LIMIT {
        return Err(Error::ResourceLimit(format!(
            "{} monomials of degree ≤ {d} exceed the basis limit {BASIS_SIZE_LIMIT}",
            all.len()
        )));
    }
    let mut levels = Vec::new();
    let mut bases = Vec::new();
    for e in 0..=n {
        let k = sum(&frobenius_power(&a_test, e)?, &a)?.canonical()?;
        let gb = k.basis()?;
        let basis: Vec<Monomial> = all.iter().filter(|m| gb.is_standard(m)).cloned().collect();
        levels.push(k);
        bases.push(basis);
    }
    Ok(SkewTruncation {
        a,
        a_test,
        levels,
        bases,
        degree_cap: d,
        field: ring.field(),
    })
}

fn monomials_up_to(nvars: usize, d: u32) -> Vec<Monomial> {
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == cur.len() {
            out.push(Monomial::from_exponents(cur.clone()));
            return;
        }
        for e in 0..=left {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    rec(0, d, &mut vec![0; nvars], &mut out);
    out.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
    out
}

impl SkewTruncation {
    /// Highest level `N`.
    pub fn top(&self) -> u32 {
        self.levels.len() as u32 - 1
    }

    pub fn degree_cap(&self) -> u32 {
        self.degree_cap
    }

    pub fn defining_ideal(&self) -> &Ideal {
        &self.a
    }

    pub fn test_ideal(&self) -> &Ideal {
        &self.a_test
    }

    pub fn level_ideal(&self, n: u32) -> &Ideal {
        &self.levels[n as usize]
    }

    pub fn basis(&self, n: u32) -> &[Monomial] {
        &self.bases[n as usize]
    }

    /// Normal form of `h` at level `n`.
    pub fn reduce(&self, n: u32, h: &Polynomial) -> Result<Polynomial> {
        Ok(normal_form(h, self.levels[n as usize].basis()?))
    }

    /// `x` applied to the class of `h` at level `n`.
    pub fn x_map(&self, n: u32, h: &Polynomial) -> Result<Polynomial> {
        if n >= self.top() {
            return Err(Error::Precondition(format!("level {} is past the truncation", n + 1)));
        }
        self.reduce(n + 1, &h.frobenius(1)?)
    }

    /// Kernel of `h ↦ c·h^{p^k}` from level `n` to level `n + k`.
    fn kernel(&self, n: u32, k: u32, c: &Polynomial) -> Result<ElementSet> {
        let target = self.levels[(n + k) as usize].basis()?;
        let basis = &self.bases[n as usize];
        let ring = self.a.ring();
        let mut images = Vec::with_capacity(basis.len());
        for m in basis {
            let h = Polynomial::monomial(ring, m.clone());
            images.push(normal_form(&c.checked_mul(&h.frobenius(k)?)?, target));
        }
        let vectors = kernel_mod_p(&images, self.field);
        Ok(ElementSet {
            level: n,
            basis: basis.clone(),
            vectors,
        })
    }
}

/// A subspace of one level, spanned by coordinate vectors over that level's basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementSet {
    pub level: u32,
    pub basis: Vec<Monomial>,
    /// Reduced row echelon spanning vectors.
    pub vectors: Vec<Vec<u32>>,
}

impl ElementSet {
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_zero(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn spanning_polynomials(&self, ring: &std::sync::Arc<crate::ffpoly::PolyRing>) -> Vec<Polynomial> {
        self.vectors
            .iter()
            .map(|v| {
                let terms = v
                    .iter()
                    .zip(&self.basis)
                    .filter(|(c, _)| **c != 0)
                    .map(|(c, m)| (m.clone(), *c))
                    .collect();
                Polynomial::from_terms(ring, terms)
            })
            .collect()
    }

    /// Coordinates of a normal-form polynomial; `None` if it leaves the basis.
    pub fn coordinates(&self, h: &Polynomial) -> Option<Vec<u32>> {
        let mut v = vec![0u32; self.basis.len()];
        for (m, c) in h.terms() {
            let i = self.basis.iter().position(|b| b == m)?;
            v[i] = *c;
        }
        Some(v)
    }

    /// Whether the normal-form polynomial `h` lies in the span.
    pub fn contains(&self, h: &Polynomial, field: Characteristic) -> bool {
        let Some(target) = self.coordinates(h) else {
            return false;
        };
        let mut rows = self.vectors.clone();
        let before = rank_mod_p(&mut rows, field);
        rows.push(target);
        rank_mod_p(&mut rows, field) == before
    }
}

/// Per level `n`, the elements killed by `x^{N-n}`.
pub fn gamma_x(t: &SkewTruncation) -> Result<Vec<ElementSet>> {
    let ring = t.a.ring();
    let one = Polynomial::one(ring);
    (0..=t.top())
        .map(|n| t.kernel(n, t.top() - n, &one))
        .collect()
}

/// Level-0 elements `h` with `s·x^n h = 0` for `n₀ ≤ n ≤ N`, together with `s`.
///
/// Taking `n₀ = N` is allowed, so the set is the kernel of `h ↦ s·h^{p^N}`;
/// it bounds the truncated `Δ^S` from above.
pub fn delta_s_truncated(
    t: &SkewTruncation,
    s: &MultSet,
    r: &RingPresentation,
    l: &SpecialIdealLattice,
) -> Result<(ElementSet, Polynomial)> {
    let cert = s_test_element(l, s, r)?;
    Ok((t.kernel(0, t.top(), &cert)?, cert))
}

/// As [`delta_s_truncated`] with an explicit certificate.
pub fn delta_with_certificate(t: &SkewTruncation, cert: &Polynomial) -> Result<ElementSet> {
    t.kernel(0, t.top(), cert)
}

#[derive(Clone, Debug)]
pub struct GradedAnnihilatorDatum {
    /// `b_n` for `n = 0..=N`.
    pub levels: Vec<Ideal>,
}

impl GradedAnnihilatorDatum {
    pub fn is_ascending(&self) -> Result<bool> {
        for w in self.levels.windows(2) {
            if !w[1].contains_ideal(&w[0])? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_constant(&self) -> Result<bool> {
        for w in self.levels.windows(2) {
            if !w[1].same_ideal(&w[0])? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Annihilators of the `x`-stable submodule generated by `elements` at level 0:
/// `b_n = {r : r·x^n kills it}`, truncated at level `N`.
pub fn graded_annihilator(t: &SkewTruncation, elements: &[Polynomial]) -> Result<GradedAnnihilatorDatum> {
    let ring = t.a.ring();
    let mut per_level = Vec::with_capacity(t.levels.len());
    for k in 0..=t.top() {
        let mut acc = Ideal::unit(ring);
        for h in elements {
            let hq = t.reduce(k, &h.frobenius(k)?)?;
            if hq.is_zero() {
                continue;
            }
            let c = colon(&t.levels[k as usize], &Ideal::new(ring, vec![hq]))?;
            acc = intersect(&acc, &c)?;
        }
        per_level.push(acc);
    }
    // b_n kills x^j h at level n + j for every j
    let mut levels = Vec::with_capacity(per_level.len());
    for n in 0..per_level.len() {
        let mut acc = Ideal::unit(ring);
        for c in &per_level[n..] {
            acc = intersect(&acc, c)?;
        }
        levels.push(acc.canonical()?);
    }
    Ok(GradedAnnihilatorDatum { levels })
}

fn kernel_mod_p(images: &[Polynomial], field: Characteristic) -> Vec<Vec<u32>> {
    let cols = images.len();
    let mut row_index: BTreeMap<&Monomial, usize> = BTreeMap::new();
    for img in images {
        for (m, _) in img.terms() {
            let next = row_index.len();
            row_index.entry(m).or_insert(next);
        }
    }
    let mut mat = vec![vec![0u32; cols]; row_index.len()];
    for (j, img) in images.iter().enumerate() {
        for (m, c) in img.terms() {
            mat[row_index[m]][j] = *c;
        }
    }
    let pivots = rref(&mut mat, field);
    let mut is_pivot = vec![None; cols];
    for (row, &col) in pivots.iter().enumerate() {
        is_pivot[col] = Some(row);
    }
    let mut out = Vec::new();
    for free in 0..cols {
        if is_pivot[free].is_some() {
            continue;
        }
        let mut v = vec![0u32; cols];
        v[free] = 1;
        for (row, &col) in pivots.iter().enumerate() {
            v[col] = field.neg(mat[row][free]);
        }
        out.push(v);
    }
    let mut echelon = out;
    rank_mod_p(&mut echelon, field);
    echelon
}

/// In-place reduced row echelon form; returns pivot columns by row.
fn rref(mat: &mut [Vec<u32>], field: Characteristic) -> Vec<usize> {
    let rows = mat.len();
    let cols = if rows == 0 { 0 } else { mat[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows).find(|&i| mat[i][c] != 0) else {
            continue;
        };
        mat.swap(r, piv);
        let inv = field.inv(mat[r][c]);
        for x in mat[r].iter_mut() {
            *x = field.mul(*x, inv);
        }
        let pivot_row = mat[r].clone();
        for (i, row) in mat.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let f = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = field.sub(*x, field.mul(f, y));
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

/// Row-reduces `rows` in place, drops zero rows, returns the rank.
fn rank_mod_p(rows: &mut Vec<Vec<u32>>, field: Characteristic) -> usize {
    let pivots = rref(rows, field);
    rows.truncate(pivots.len());
    pivots.len()
}
