//! Exact-arithmetic bounds for the face dimensions of Gram spectrahedra.
//!
//! A face of the Gram spectrahedron of a sum of squares corresponds to a
//! subspace `U` of the degree-`d` forms, and its dimension is controlled by
//! the codimension of `U^2` inside the degree-`2d` forms. This crate computes
//! those codimensions exactly over the rationals and provides:
//!
//! - monomial combinatorics: orders, Borel moves, divisor pairs
//!   ([`monomial`], [`order`]);
//! - the Macaulay representation calculus with the growth, persistence and
//!   hyperplane-restriction bounds ([`macaulay`]);
//! - exact linear algebra on form subspaces: products, squares, apolarity,
//!   ideal quotients, coordinate changes, initial subspaces, lifting, Hilbert
//!   tables and base-point certificates ([`formspace`], [`hilbert`]);
//! - enumeration of strongly stable subspaces and the tables of maximal
//!   square codimensions `m(n, d, k)` ([`stable`]);
//! - a seeded harness that checks the constructive statements behind the
//!   bounds on randomized instances ([`harness`]);
//! - a file format for exchanging subspaces ([`interchange`]) and a command
//!   line fronting all of it ([`cli`]).
//!
//! Every computation is deterministic given its seed; nothing uses floating
//! point.

pub mod cli;
pub mod echelon;
pub mod formspace;
pub mod harness;
pub mod hilbert;
pub mod interchange;
pub mod macaulay;
pub mod matrix;
pub mod monomial;
pub mod order;
pub mod stable;

pub use echelon::Rat;
pub use formspace::{eval_pairing, face_dimension, Form, FormSpace};
pub use hilbert::{base_point_certificate, hilbert_table, BasePointCertificate, BasePointVerdict};
pub use monomial::Monomial;
pub use order::MonomialOrder;

/// Default master seed for all randomized entry points; override with
/// `--seed` on the command line.
pub const DEFAULT_SEED: u64 = 0x5EED_5EED;

/// Default coefficient height for random instances.
pub const DEFAULT_HEIGHT: i64 = 100;

/// Default retry budget for genericity protocols.
pub const DEFAULT_GENERICITY_BUDGET: u32 = 5;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("parse error at column {col} in `{context}`: {msg}")]
    Parse {
        context: String,
        col: usize,
        msg: String,
    },
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: u32, found: u32 },
    #[error("members have mixed degrees or variable counts")]
    MixedDegrees,
    #[error("invalid Borel move x{j}*m/x{i}: need j > i and a positive exponent")]
    BadBorelMove { i: usize, j: usize },
    #[error("invalid monomial order: {0}")]
    InvalidOrder(String),
    #[error("variable count mismatch: expected {expected}, found {found}")]
    VariableMismatch { expected: usize, found: usize },
    #[error("monomial orders differ")]
    OrderMismatch,
    #[error("linear form must be nonzero")]
    ZeroLinearForm,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("genericity failure after {attempts} attempts: {what}")]
    Genericity { attempts: u32, what: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("invalid subspace file: {0}")]
    Json(#[from] serde_json::Error),
}
