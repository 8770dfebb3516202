//! Error type shared by every module of the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A matrix handed to the symmetric eigensolver is not symmetric.
    #[error("matrix is not symmetric: max |a_ij - a_ji| = {max_asym:.3e} exceeds {tol:.3e}")]
    NotSymmetric { max_asym: f64, tol: f64 },

    /// The rotation sweep limit of the eigensolver was exhausted.
    #[error("eigensolver did not converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    /// A qubit or level index outside its valid range.
    #[error("index {index} is outside 1..={limit}")]
    BadIndex { index: usize, limit: usize },

    /// An unrecognized qubit-pair label.
    #[error("unknown qubit pair '{0}' (expected 12, 23 or 13)")]
    BadPair(String),

    /// The characteristic polynomial has genuinely complex roots.
    #[error("complex eigenvalues: |Im| = {imag:.3e} exceeds {limit:.3e}")]
    ComplexRoots { imag: f64, limit: f64 },

    /// A density matrix violates its trace/positivity invariants.
    #[error("invalid quantum state: {0}")]
    InvalidState(String),

    /// Thermal operations require T > 0.
    #[error("temperature must be positive and finite, got {0}")]
    NonPositiveTemperature(f64),

    /// The analytic spectrum degenerates at J = 0.
    #[error("coupling J must be nonzero for the analytic spectrum")]
    ZeroCoupling,

    /// Closed-form and numeric concurrences disagree beyond tolerance.
    #[error(
        "closed-form concurrence {closed_form:.12e} and numeric concurrence \
         {numeric:.12e} disagree beyond {tol:.1e} at J={j}, h={h}, k={k}, T={t}"
    )]
    PathMismatch {
        closed_form: f64,
        numeric: f64,
        tol: f64,
        j: f64,
        h: f64,
        k: f64,
        t: f64,
    },

    /// A grid specification violates lo < hi, steps >= 2 or positivity.
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    /// Matrix dimensions do not match the operation's contract.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    /// A scalar argument outside its documented domain.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}
