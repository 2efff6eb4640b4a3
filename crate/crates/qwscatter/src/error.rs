//! Crate-wide error type.

use thiserror::Error;

/// Everything that can go wrong while building coins, evaluating Green
/// functions, or running a scattering route.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not unitary: defect {defect:.3e} exceeds {tol:.1e}")]
    NotUnitary { defect: f64, tol: f64 },

    #[error("coin is not of the (p, q, alpha, beta, gamma) form: {0}")]
    NotOfForm(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("quasi-energy {theta} is within {guard:.1e} of a spectral threshold")]
    InvalidQuasiEnergy { theta: f64, guard: f64 },

    #[error("state window too small: {0}")]
    WindowTooSmall(String),

    #[error("threshold singularity: |sin zeta| = {sin_zeta:.3e} underflows")]
    ThresholdSingularity { sin_zeta: f64 },

    #[error("eigenvalue solver failed to converge on a {dim}x{dim} matrix")]
    EigenSolverFailure { dim: usize },

    #[error("linear system 1 - (e^{{-i theta}} E_n)^2 is numerically singular")]
    SolveSingular,

    #[error("boundary iteration did not converge: residual {residual:.3e} after {t_max} steps")]
    NoConvergence { residual: f64, t_max: u64 },

    #[error("double-barrier denominator vanishes: |D| = {magnitude:.3e}")]
    DenominatorVanishes { magnitude: f64 },

    #[error("coin parameters do not share (p, q): {0}")]
    FormMismatch(String),

    #[error("coin field is not penetrable: |a({site})| = {magnitude:.3e}")]
    NonPenetrable { site: i64, magnitude: f64 },

    #[error("grid too coarse: zeros at {theta_a} and {theta_b} are closer than 4 grid steps")]
    GridTooCoarse { theta_a: f64, theta_b: f64 },

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit status for the CLI: 2 for validation errors, 3 for
    /// numerical failures.
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::NotUnitary { .. }
            | Error::NotOfForm(_)
            | Error::InvalidParams(_)
            | Error::InvalidQuasiEnergy { .. }
            | Error::WindowTooSmall(_)
            | Error::FormMismatch(_)
            | Error::Io(_)
            | Error::Json(_) => 2,
            Error::ThresholdSingularity { .. }
            | Error::EigenSolverFailure { .. }
            | Error::SolveSingular
            | Error::NoConvergence { .. }
            | Error::DenominatorVanishes { .. }
            | Error::NonPenetrable { .. }
            | Error::GridTooCoarse { .. } => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
