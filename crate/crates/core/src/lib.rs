//! Lorentz transformations of 4-dimensional Minkowski space built entirely
//! from hyperplane reflections.
//!
//! The crate constructs boosts as products of two reflections in timelike
//! hyperplanes, solves the problem of linking two given causal 4-vectors by
//! a boost (detecting the exceptional lightlike-antipodal case where no
//! solution exists), evaluates the Thomas rotation of a boost triangle as a
//! six-reflection product, attaches to every timelike observer the
//! positive-definite metric under which boosts are symmetric and rotations
//! orthogonal, decomposes orthochronous transforms into boost times
//! rotation without matrix square roots, and factorizes arbitrary Lorentz
//! transforms into reflections whose timelike/spacelike parity pair reads
//! off the group component.
//!
//! Conventions: signature (-+++), components ordered (t, x, y, z), c = 1,
//! active transformations, 64-bit floats throughout.

pub mod boost;
pub mod checks;
pub mod error;
pub mod factor;
pub mod frame;
pub mod matrix;
pub mod minkowski;
pub mod polar;
pub mod reflection;
pub mod rotation;
pub mod testkit;
pub mod transform;

pub use boost::{boost_from_pair, boost_linking, relative_velocity, standard_boost, BoostResult, Velocity3};
pub use error::{Error, Result};
pub use factor::{factor_into_reflections, reconstruct, FactorizationRecord};
pub use frame::{frame_components, ObserverFrame};
pub use matrix::Mat4;
pub use minkowski::{causal_class, eta_inner, normalize_timelike, CausalClass, FourVector, DEFAULT_TOL};
pub use polar::{
    check_rotation_u_orthogonal, check_u_positive, check_u_symmetric, observer_metric,
    polar_decompose, positivity_identity_check, ObserverMetric, PolarFactors,
};
pub use reflection::{bisector_reflection, hyperplane_reflection, line_reflection, Reflection};
pub use rotation::{rotation_angle, rotation_from_plane, thomas_rotation, RotationInfo};
pub use transform::{compose, is_lorentz, LorentzComponent, LorentzTransform};
