//! Exact arithmetic for multivariate polynomials over a prime field F_p.
//!
//! Polynomials are immutable canonical forms: terms sorted strictly
//! decreasing in the ring's monomial order, no zero coefficients. The
//! default order is graded reverse lexicographic with variables ranked in
//! declaration order, so printing is reproducible bit for bit.

mod field;
mod monomial;
mod parse;
mod poly;

pub use field::{Characteristic, MAX_CHARACTERISTIC};
pub use monomial::{Monomial, MonomialOrder};
pub use parse::{parse_polynomial, parse_polynomial_list};
pub use poly::{PolyRing, Polynomial};

use crate::error::Result;

/// `f^(p^e)`.
pub fn frobenius_pow_poly(f: &Polynomial, e: u32) -> Result<Polynomial> {
    f.frobenius(e)
}
