//! Equivariant multiplicities of flag minors for simply-laced root systems.
//!
//! The crate is organised bottom-up:
//! [`rootsys`] and [`weylwords`] provide root data and Weyl group
//! combinatorics, [`symbolics`] the exact polynomial kernel,
//! [`characters`] and [`hookformulas`] graded characters and hook
//! identities, [`lyndonwords`] good Lyndon words and determinantal words,
//! [`seedcalc`] standard seeds and their mutations, and [`catalogs`] the
//! reference tables.

pub mod catalogs;
pub mod characters;
pub mod error;
pub mod hookformulas;
pub mod lyndonwords;
pub mod rootsys;
pub mod scalar;
pub mod seedcalc;
pub mod symbolics;
pub mod weylwords;

pub use error::{Error, Result};
pub use rootsys::{build_root_system, Root, RootSystem, TypeLetter, WeightVector};
pub use symbolics::{FormProduct, LinearForm, Poly, RationalSum};
pub use weylwords::{Classification, WeylElement, Word};

/// Laurent polynomials in `q` with integer coefficients.
pub type QLaurent = characters::LaurentQ<num_bigint::BigInt>;

/// Polynomials with arbitrary-precision integer coefficients.
pub type IntPoly = Poly<num_bigint::BigInt>;
