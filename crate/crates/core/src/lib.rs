//! Exact equations for the punctual Hilbert scheme of points in projective space.
//!
//! The crate is `no_std` and only needs `alloc`. It covers border-basis charts
//! and their commutation equations, Plücker coordinates of quotients of
//! `S_d`, quadratic equations of the Hilbert scheme inside a single
//! Grassmannian, a pointwise membership test, and the tangent-space system.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod border_basis;
mod combinat;
pub mod error;
pub mod exactpoly;
pub mod fixtures;
pub mod hilbert_equations;
pub mod monomial;
pub mod pluecker;
pub mod tangent_space;

pub use error::{Error, Result};
pub use exactpoly::{MultiPoly, Polynomial, Rational, RationalMatrix, VarName};
pub use monomial::{BorderSet, Exponent, MonomialBasis, Space};
