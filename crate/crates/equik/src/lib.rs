//! Exact-arithmetic invariants of finite signed-permutation groups.
//!
//! Everything in this crate is computed over the rationals (or the quadratic
//! extension `Q(sqrt 2)` inside the Clifford algebra) so that every reported
//! number is an exact integer, never a floating-point approximation. The
//! main capabilities:
//!
//! - [`partitions`]: integer partition enumeration and the counting functions
//!   `P(n)`, `p_n`, `i_n`, `j_n`, with the pentagonal-number and
//!   distinct-vs-odd generating-function identities checked exactly.
//! - [`groups`]: finite subgroups of `O(n)` generated by signed permutations,
//!   their conjugacy classes and centralizers.
//! - [`linalg`]: exact kernels, determinants and restrictions of rational
//!   matrices (the geometry behind every orientation test).
//! - [`clifford`]: the Clifford algebra `C(R^n)` over `Q(sqrt 2)`, Pin lifts
//!   of signed permutations, and commutator signs in the double cover.
//! - [`schur`]: which conjugacy classes split in the Pin-induced double
//!   cover, decided two independent ways, and the crossed-product ranks.
//! - [`ktheory`]: rank formulas for the K-theory of real representation
//!   spaces and their projective spaces, by counting oriented classes.
//! - [`lambda`]: the universal lambda-ring structure constants, Newton
//!   polynomial basis changes, and the gamma-basis module action.
//!
//! The `equik` binary exposes each capability as a subcommand; `equik verify`
//! runs the whole cross-consistency battery. The `examples/` directory has
//! one runnable program per capability.

pub mod cli;
pub mod clifford;
pub mod groups;
pub mod ktheory;
pub mod lambda;
pub mod linalg;
pub mod partitions;
pub mod schur;

use std::fmt;

/// Errors shared across the crate. Most operations are total on valid
/// inputs; errors arise from size guards and from malformed user input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A computation was rejected because it exceeds a configured guard.
    SizeLimit {
        what: &'static str,
        limit: usize,
        requested: usize,
    },
    /// Two objects live in different ambient dimensions.
    DimensionMismatch { expected: usize, found: usize },
    /// A subspace was not invariant under the matrix being restricted.
    NotInvariant,
    /// The two group elements of a commutator computation do not commute.
    NotCommuting,
    /// A basis symbol violated a precondition (e.g. non-distinct parts).
    InvalidBasis(String),
    /// A structure constant that must be integral came out fractional.
    NonIntegral(String),
    /// Malformed user input (group files, partition strings, indices).
    InvalidInput(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::SizeLimit {
                what,
                limit,
                requested,
            } => write!(f, "size limit exceeded for {what}: {requested} > {limit}"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::NotInvariant => write!(f, "subspace is not invariant under the matrix"),
            Error::NotCommuting => write!(f, "elements do not commute"),
            Error::InvalidBasis(msg) => write!(f, "invalid basis symbol: {msg}"),
            Error::NonIntegral(msg) => write!(f, "non-integral structure constant: {msg}"),
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
