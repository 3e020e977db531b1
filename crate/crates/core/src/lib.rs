//! Exact graded commutative algebra over `k[x0, x1, x2, x3]`, line geometry in
//! projective 3-space, and the verifiers for the four-instanton construction
//! built on top of them.
//!
//! The crate only needs `alloc`. File formats, report serialization and the
//! command line live in the `instanton` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod commalg;
pub mod constructions;
pub mod error;
pub mod geometry;
pub mod groebner;

pub use algebra::field::{Field, FieldSpec, PrimeField, Rationals};
pub use algebra::monomial::{Monomial, MonomialOrder, NVARS};
pub use algebra::poly::Polynomial;
pub use error::{Error, Result};
