//! Error type shared by every construction in the crate.

/// Everything that can go wrong when building or combining Lorentz
/// transformations from reflections.
#[derive(thiserror::Error, Debug, Clone, Copy, PartialEq)]
pub enum Error {
    /// A vector component was NaN or infinite.
    #[error("vector components must be finite")]
    NonFinite,

    /// A timelike vector was required.
    #[error("vector is not timelike (eta(x,x) = {eta_norm:.3e})")]
    NotTimelike { eta_norm: f64 },

    /// A reflection normal was lightlike or zero; the reflection tensor
    /// diverges as eta(u,u) -> 0 and is rejected rather than regularized.
    #[error("reflection normal is lightlike or zero (|eta(u,u)| = {eta_norm:.3e})")]
    NullNormal { eta_norm: f64 },

    /// The bisector a+b of two equal-norm vectors is lightlike or zero.
    #[error("bisector a+b is lightlike or zero; no bisector reflection exists")]
    DegenerateBisector,

    /// Two vectors that must share their eta-norm do not.
    #[error("eta-norms differ: eta(x,x) = {left:.6e}, eta(x',x') = {right:.6e}")]
    NormMismatch { left: f64, right: f64 },

    /// Two causal vectors that must share a time orientation do not.
    #[error("vectors do not share a time orientation")]
    OrientationMismatch,

    /// A causal (non-spacelike) vector was required.
    #[error("vector is spacelike (eta(x,x) = {eta_norm:.3e} > 0)")]
    PositiveNorm { eta_norm: f64 },

    /// The linking problem has no solution: x and x' are lightlike and
    /// spatially antipodal with respect to the observer.
    #[error("no boost links the two vectors: x' - S_u x is lightlike")]
    NoSuchBoost,

    /// A velocity with |v| >= 1 (c = 1) was supplied.
    #[error("speed {speed} is not < 1")]
    SuperluminalVelocity { speed: f64 },

    /// The positivity identity needs v != 0 for its v^2 denominators.
    #[error("velocity must be nonzero")]
    ZeroVelocity,

    /// Rotation-plane vectors must be eta-orthogonal to the observer.
    #[error("plane vector is not orthogonal to the observer (eta(a,u) = {inner:.3e})")]
    NotOrthogonalToObserver { inner: f64 },

    /// The would-be rotation plane is degenerate (a vector is null or zero).
    #[error("rotation plane is degenerate")]
    DegeneratePlane,

    /// The transform does not fix the observer, so it is not a u-rotation.
    #[error("transform does not fix the observer (residual {residual:.3e})")]
    NotARotationForU { residual: f64 },

    /// An orthochronous transform was required.
    #[error("transform is not orthochronous for this observer")]
    NotOrthochronous,

    /// Numerical validation of a result exceeded its tolerance.
    #[error("validation failed: residual {residual:.3e} exceeds tolerance {tolerance:.3e}")]
    ValidationFailure { residual: f64, tolerance: f64 },
}

impl Error {
    /// Stable machine-readable identifier, used by the CLI error object.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NonFinite => "non_finite",
            Error::NotTimelike { .. } => "not_timelike",
            Error::NullNormal { .. } => "null_normal",
            Error::DegenerateBisector => "degenerate_bisector",
            Error::NormMismatch { .. } => "norm_mismatch",
            Error::OrientationMismatch => "orientation_mismatch",
            Error::PositiveNorm { .. } => "positive_norm",
            Error::NoSuchBoost => "no_such_boost",
            Error::SuperluminalVelocity { .. } => "superluminal_velocity",
            Error::ZeroVelocity => "zero_velocity",
            Error::NotOrthogonalToObserver { .. } => "not_orthogonal_to_observer",
            Error::DegeneratePlane => "degenerate_plane",
            Error::NotARotationForU { .. } => "not_a_rotation_for_u",
            Error::NotOrthochronous => "not_orthochronous",
            Error::ValidationFailure { .. } => "validation_failure",
        }
    }
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
