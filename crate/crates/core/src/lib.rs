//! Exact algebraic invariants of odd-dimensional knots, simple fibered links
//! and Brieskorn–Pham links, computed from Seifert matrices.
//!
//! All arithmetic is exact (arbitrary-precision integers and rationals).
//! Bernoulli numbers use Hirzebruch's all-positive indexing,
//! `B_k = |B_{2k}|` in the usual signed convention.

pub mod arith;
pub mod brieskorn;
pub mod cobordism;
pub mod even_dim;
pub mod links;
pub mod quadratic;
pub mod seifert;
pub mod sphere_groups;

mod error;

pub use arith::{Int, IntMatrix, LaurentPoly, Poly, Rat, RatMatrix};
pub use error::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;
