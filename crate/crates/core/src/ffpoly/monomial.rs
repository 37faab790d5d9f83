use std::cmp::Ordering;

use crate::error::{Error, Result};

/// Exponent vector, one entry per ring variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
        }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = 1;
        m
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    #[inline]
    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn max_exponent(&self) -> u32 {
        self.exps.iter().copied().max().unwrap_or(0)
    }

    /// Variables with a positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    pub fn is_square_free(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial { exps })
    }

    /// Product; panics on exponent overflow (use [`Monomial::checked_mul`] to recover).
    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.checked_mul(other).expect("exponent overflow")
    }

    /// Multiply every exponent by `k`.
    pub fn checked_scale(&self, k: u64) -> Result<Monomial> {
        let exps = self
            .exps
            .iter()
            .map(|&e| {
                (e as u64)
                    .checked_mul(k)
                    .filter(|&v| v <= u32::MAX as u64)
                    .map(|v| v as u32)
                    .ok_or(Error::ExponentOverflow)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial { exps })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / other`; caller guarantees `other | self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    /// Exponent-wise `max(self - other, 0)`, the generator of `(self) : (other)`.
    pub fn quotient_saturating(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// Term order on monomials. Variables take precedence in declaration order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    #[default]
    GrevLex,
    Lex,
    /// Product order: grevlex on the first `block` variables, ties broken
    /// by grevlex on the rest. Eliminates the first block.
    Elimination { block: usize },
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::GrevLex => grevlex(&a.exps, &b.exps),
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::Elimination { block } => {
                let k = block.min(a.exps.len());
                grevlex(&a.exps[..k], &b.exps[..k])
                    .then_with(|| grevlex(&a.exps[k..], &b.exps[k..]))
            }
        }
    }
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                // smaller exponent in the last differing variable wins
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn grevlex_examples() {
        let o = MonomialOrder::GrevLex;
        // x > y > z in degree one
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 1, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 1, 0]), &m(&[0, 0, 1])), Ordering::Greater);
        // x*z < y^2 in grevlex, but x*z > y^2 in lex
        assert_eq!(o.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        assert_eq!(
            MonomialOrder::Lex.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])),
            Ordering::Greater
        );
        assert_eq!(o.cmp(&m(&[0, 0, 0]), &m(&[0, 0, 1])), Ordering::Less);
    }

    #[test]
    fn elimination_order_prefers_block() {
        let o = MonomialOrder::Elimination { block: 1 };
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 9, 9])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 2, 0]), &m(&[1, 0, 1])), Ordering::Greater);
    }

    #[test]
    fn overflow_is_reported() {
        let a = m(&[u32::MAX, 0]);
        assert_eq!(a.checked_mul(&m(&[1, 0])), Err(Error::ExponentOverflow));
        assert_eq!(m(&[1 << 31]).checked_scale(2), Err(Error::ExponentOverflow));
    }
}
