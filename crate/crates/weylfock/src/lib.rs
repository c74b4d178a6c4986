//! Exact-arithmetic computations around Weyl vertex algebras and affine Lie
//! algebras at negative integer levels.
//!
//! The crate provides five layers:
//!
//! - [`rootlie`]: root systems, weights, Chevalley structure constants, and
//!   the specific subalgebra embeddings used downstream (D5 inside E6, the
//!   symplectic series inside type A).
//! - [`charact`]: finite-dimensional characters via the Freudenthal
//!   recursion, a brute-force tensor-product oracle, and the closed-form
//!   type-A and type-D (Okada) decomposition rules.
//! - [`affine_univ`]: truncated universal affine vertex algebras with PBW
//!   bases, exact mode actions, and singular-vector verification.
//! - [`fock`]: the Weyl (beta-gamma) vertex algebra engine — Fock bases,
//!   current operators, the charge/conformal bigrading, Sugawara identity
//!   checks, singular-vector scans, and graded characters.
//! - [`branching`]: the numerical identities tying it together — lowest
//!   conformal weights, central charges, the integer fusion monoid, the
//!   finite E6 -> D5 branching, and machine-readable decomposition reports.
//!
//! Everything is computed over exact rationals; there is no floating point
//! in the crate, and all iteration orders are deterministic.

pub mod affine_univ;
pub mod branching;
pub mod charact;
pub mod fock;
pub mod linalg;
pub mod num;
pub mod qseries;
pub mod rootlie;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("unsupported label: {0}")]
    UnsupportedLabel(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("dimension bound exceeded: {0}")]
    DimensionBound(String),
    #[error("not dominant integral: {0}")]
    NonDominant(String),
    #[error("degree cutoff exceeded: {0}")]
    CutoffExceeded(String),
    #[error("critical level: {0}")]
    CriticalLevel(String),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("unresolved root label: {0}")]
    UnresolvedLabel(String),
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
    #[error("quotient series defect: {0}")]
    NonIntegralQuotient(String),
    #[error("invalid input: {0}")]
    BadInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
