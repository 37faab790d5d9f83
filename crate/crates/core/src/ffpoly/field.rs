use crate::error::{Error, Result};

/// Largest supported characteristic, 2^31 - 1.
pub const MAX_CHARACTERISTIC: u64 = (1 << 31) - 1;

/// The prime `p` of the coefficient field F_p.
///
/// Residues are stored as `u32` in `0..p`; products are formed in `u64`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Characteristic(u32);

impl Characteristic {
    pub fn new(p: u64) -> Result<Self> {
        if !(2..=MAX_CHARACTERISTIC).contains(&p) || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Characteristic(p as u32))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        (s % self.0 as u64) as u32
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.0 as u64) as u32
    }

    pub fn pow(self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1u32 % self.0;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse by Fermat. Panics on zero.
    pub fn inv(self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero in F_{}", self.0);
        self.pow(a, self.0 as u64 - 2)
    }

    pub fn reduce_i64(self, v: i64) -> u32 {
        v.rem_euclid(self.0 as i64) as u32
    }

    /// `p^e`, or `None` when it does not fit in a `u64`.
    pub fn checked_power_of_p(self, e: u32) -> Option<u64> {
        (self.0 as u64).checked_pow(e)
    }
}

impl std::fmt::Display for Characteristic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composites_and_out_of_range() {
        assert_eq!(Characteristic::new(4), Err(Error::NotPrime(4)));
        assert_eq!(Characteristic::new(1), Err(Error::NotPrime(1)));
        assert!(Characteristic::new(1 << 31).is_err());
        assert!(Characteristic::new(MAX_CHARACTERISTIC).is_ok());
        for p in [2, 3, 5, 7, 13] {
            assert!(Characteristic::new(p).is_ok());
        }
    }

    #[test]
    fn inverses() {
        let f = Characteristic::new(13).unwrap();
        for a in 1..13 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
        assert_eq!(f.reduce_i64(-1), 12);
        assert_eq!(f.sub(3, 5), 11);
    }
}
