//! Exact counting of order preserving maps and proper colorings up to
//! symmetry. A finite group acting on a poset or graph partitions its maps
//! into orbits; the counting functions here compute the polynomials behind
//! those orbit counts with exact rational arithmetic, and every formula route
//! is paired with an independent enumeration oracle so the two can be checked
//! against each other.

pub mod cli;
pub mod counting;
pub mod error;
pub mod graph;
pub mod io;
pub mod label;
pub mod permgroup;
pub mod polynomial;
pub mod poset;

pub use error::{Error, Result};

/// The one scalar type used everywhere: arbitrary-precision rationals.
pub type Rational = num_rational::BigRational;

/// Polynomial with exact rational coefficients.
pub type RationalPolynomial = polynomial::Polynomial<Rational>;

/// Default cap on objects enumerated per oracle call; override per call or
/// with the ORBIPOLY_BUDGET environment variable in the CLI.
pub const DEFAULT_BUDGET: u64 = 2_000_000;
