//! Zeros of diagonal Jacobi-Angelesco multiple orthogonal polynomials.
//!
//! The fast path ([`cascade`]) climbs the Rodrigues ladder: the zeros of
//! `P_{k,k}` at raised exponents are the poles of a decreasing rational
//! function whose roots are the zeros of `P_{k+1,k+1}`. The [`gram`]
//! oracle builds the same polynomials straight from their orthogonality
//! conditions, and [`lab`] turns both into sweeps and verification reports.

// `!(x > 0.0)` style checks are deliberate: NaN has to fail them.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod polynomial;
pub mod quadrature;
pub mod weight;

pub use error::{Error, Result};
pub use polynomial::{MonicPolynomial, RealPolynomial, RootProduct, ZeroSet};
pub use weight::AngelescoParams;
pub mod gram;

pub mod cascade;
pub mod classical;
pub mod lab;
pub mod limits;
mod linalg;
pub mod report;
mod roots;
mod twosided;
