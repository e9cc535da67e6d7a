//! Exact integer, rational, polynomial and matrix arithmetic.
//!
//! Everything here is exact: integers are arbitrary precision and rationals
//! are always kept in lowest terms with a positive denominator. There is no
//! floating point anywhere in this module.

mod bernoulli;
mod cyclotomic;
mod factor;
mod fp;
mod laurent;
mod matrix;
mod modular;
mod pid;
mod poly;
mod snf;

pub use bernoulli::{bernoulli, bernoulli_standard};
pub use cyclotomic::{cyclotomic, cyclotomic_decomposition, euler_phi};
pub use factor::{factor_int_poly, Factorization};
pub use laurent::LaurentPoly;
pub use matrix::{IntMatrix, Matrix, RatMatrix};
pub use modular::{char_poly, char_poly_int, det_linear_pencil};
pub use pid::elementary_divisors_qt;
pub use poly::Poly;
pub use snf::{solve_integer_system, smith_normal_form_z, SmithForm};

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

/// Arbitrary-precision signed integer.
pub type Int = BigInt;
/// Reduced rational number with positive denominator.
pub type Rat = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("zero polynomial is not allowed here")]
    ZeroPolynomial,
    #[error("Bernoulli number B_0 is undefined in Hirzebruch indexing (k must be >= 1)")]
    BernoulliIndex,
}
