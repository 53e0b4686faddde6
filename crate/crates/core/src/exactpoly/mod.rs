//! Exact rational arithmetic: sparse polynomials in named variables, sparse
//! polynomials in the coordinate variables, and dense matrices.

mod matrix;
mod multipoly;
mod polynomial;
mod rational;

pub use matrix::RationalMatrix;
pub use multipoly::{canonical_equation_set, parse_varname, MultiPoly, Term, VarName};
pub use polynomial::Polynomial;
pub use rational::{format_rational, int, parse_rational, rat, Rational};
