use thiserror::Error;

use crate::arith::{ArithError, Int};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error("Seifert matrix is singular (det A = 0): not the form of a fibered link")]
    NotFibered,
    #[error("Alexander polynomial cannot be Conway-normalized: Δ(1) = {value_at_one} (boundary is not a homology sphere)")]
    NotNormalizable { value_at_one: Int },
    #[error("Alexander polynomial has odd span {span}; no symmetric representative")]
    OddSpan { span: i64 },
    #[error("{what} requires {expected} q, got q = {q}")]
    Parity { what: &'static str, expected: &'static str, q: u32 },
    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },
    #[error("form is not alternating over F2 at ({row}, {col})")]
    NotAlternating { row: usize, col: usize },
    #[error("bilinear form over F2 is degenerate; radical contains {radical:?}")]
    Degenerate { radical: Vec<u8> },
    #[error("not an ε-form: det(A + εA^T) = {det}, expected ±1")]
    InvalidEpsForm { det: Int },
    #[error("ε mismatch: {left} vs {right}")]
    EpsMismatch { left: i8, right: i8 },
    #[error("intersection form is not unimodular (det = {det})")]
    NotUnimodular { det: Int },
    #[error("invalid Brieskorn germ: {0}")]
    InvalidGerm(String),
    #[error("{0}")]
    OutOfRange(String),
    #[error("signature {sigma} of an even unimodular form is not divisible by 8")]
    SignatureNotDivisible { sigma: i64 },
    #[error("invalid linking matrix: {0}")]
    InvalidLinkingMatrix(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("invalid torsion presentation: {0}")]
    InvalidPresentation(String),
}
