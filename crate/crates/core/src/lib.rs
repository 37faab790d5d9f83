//! Computational commutative algebra in prime characteristic.
//!
//! The crate works over quotients `R = A/a` of a polynomial ring
//! `A = F_p[X_1, .., X_n]`, with every ideal of `R` stored as an ideal of
//! `A` containing `a`. Layers, bottom up:
//!
//! * [`ffpoly`]: polynomials over F_p, monomial orders, parser.
//! * [`groebner`]: Buchberger, normal forms, membership.
//! * [`idealkit`]: ideal algebra, Frobenius powers, p-th roots, monomial primes.
//! * [`frobpure`]: Fedder certificates and the finite lattice of special ideals.
//! * [`stight`]: S-test ideals, S-tight closure membership, test ideal chains.
//! * [`skewmod`]: truncations of `⊕ R/a^[p^n]` with the Frobenius action.

pub mod error;
pub mod ffpoly;
pub mod groebner;
pub mod idealkit;
pub mod frobpure;
pub mod stight;
pub mod skewmod;

pub use error::{Error, Result};
