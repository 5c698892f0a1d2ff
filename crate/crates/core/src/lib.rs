//! Exact computation of the polynomial identities satisfied by the
//! symmetrized Jordan diproduct `ab = a⊣b + a⊢b + b⊣a + b⊢a` in free
//! diassociative algebras.
//!
//! The crate is organised bottom-up:
//!
//! * [`magma`] enumerates and straightens commutative nonassociative monomials;
//! * [`dias`] implements diassociative monomials in normal form;
//! * [`expansion`] maps commutative monomials to diassociative polynomials and
//!   assembles expansion matrices;
//! * [`linalg`] provides exact linear algebra over `F_p`, `Q` and `Z`;
//! * [`symrep`] provides symmetric group representations and characters;
//! * [`pipeline`] runs the identity searches in degrees 3 to 7.

pub mod dias;
pub mod expansion;
pub mod golden;
pub mod linalg;
pub mod magma;
pub mod parse;
pub mod perm;
pub mod pipeline;
pub mod symrep;

pub use dias::{DiasMonomial, DiasPoly, Op};
pub use magma::{AssociationType, CommMonomial, Tree, TypeSymmetry};
pub use perm::Perm;

/// Default prime for modular computations.
pub const DEFAULT_PRIME: u64 = 1_000_003;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum Error {
    #[error("degree {degree} outside supported range {min}..={max}")]
    DegreeOutOfRange { degree: usize, min: usize, max: usize },
    #[error("monomial is not multilinear in 0..n")]
    NotMultilinear,
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("factors share argument labels")]
    OverlappingLabels,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("rows are linearly dependent")]
    DependentRows,
    #[error("invalid character: {0}")]
    InvalidCharacter(String),
    #[error("invalid modulus {0}: need an odd prime below 2^31")]
    InvalidPrime(u64),
    #[error("malformed matrix text: {0}")]
    MatrixFormat(String),
}

pub type Result<T> = std::result::Result<T, Error>;
