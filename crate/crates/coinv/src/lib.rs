//! Exact arithmetic for the coinvariant algebras of the symmetric group `S_n`
//! (type A) and the hyperoctahedral group `B_n` (type B).
//!
//! The crate implements the descent-basis machinery for both families:
//!
//! - [`groups`] — permutations, signed permutations, and their descent
//!   statistics (`Des`, `maj`, `inv`, the flag statistics `fmaj`/`fdes`, and
//!   the negative-descent multiset `NDes`);
//! - [`shapes`] — partitions, bipartitions, standard and reverse
//!   semistandard Young tableaux, and the bijections between reverse tableaux
//!   and pairs (standard tableau, sequence);
//! - [`polyring`] — sparse multivariate polynomials over an exact coefficient
//!   ring, monomial index data, descent basis monomials, and the classical
//!   symmetric bases `e`, `p`, `s`;
//! - [`straighten`] — expansion of monomials over the descent basis times
//!   elementary symmetric generators, normal forms in the coinvariant
//!   quotient, and graded traces;
//! - [`reptheory`] — conjugacy class tables, irreducible characters of `S_n`
//!   and `B_n`, descent representation characters, and multiplicities;
//! - [`series`] — truncated multivariate power series and machine
//!   verification of the multivariate identities relating the statistics to
//!   symmetric function specializations.
//!
//! All arithmetic is exact: polynomial coefficients are arbitrary-precision
//! integers and class functions are arbitrary-precision rationals.  The
//! algebra layer is generic over the coefficient ring through
//! [`polyring::Coeff`]; the aliases below fix the two rings used in practice.
//!
//! Enumerative operations carry desk-scale capacity bounds and return
//! [`Error::Capacity`] beyond them.  Setting the environment variable
//! `COINV_MAX_N` raises every such bound to the given value (at the caller's
//! risk: runtimes grow factorially).

pub mod error;
pub mod groups;
pub mod polyring;
pub mod reptheory;
pub mod series;
pub mod shapes;
pub mod straighten;

pub use error::{Error, Result};

/// Arbitrary-precision integer scalar.
pub type Int = num_bigint::BigInt;

/// Arbitrary-precision rational scalar.
pub type Rat = num_rational::BigRational;

/// Sparse multivariate polynomial with integer coefficients.
pub type IntPolynomial = polyring::MPoly<Int>;

/// Sparse multivariate polynomial with rational coefficients.
pub type RatPolynomial = polyring::MPoly<Rat>;

/// Truncated multivariate power series with integer coefficients.
pub type IntSeries = series::TruncatedSeries<Int>;

/// Truncated multivariate power series with rational coefficients.
pub type RatSeries = series::TruncatedSeries<Rat>;

/// Converts an integer scalar to a rational one.
pub fn int_to_rat(value: &Int) -> Rat {
    Rat::from_integer(value.clone())
}

/// Converts an integer polynomial to a rational polynomial.
pub fn int_poly_to_rat(poly: &IntPolynomial) -> RatPolynomial {
    poly.map_coeffs(int_to_rat)
}
