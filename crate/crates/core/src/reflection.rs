//! Hyperplane reflections S_u, line reflections -S_u, and the bisector
//! reflection that maps one of two equal-norm vectors onto the other.
//!
//! S_u negates the non-null normal u and fixes the hyperplane
//! eta-orthogonal to it; as a tensor it is delta - 2 u u^flat / eta(u,u).
//! In four dimensions both S_u and -S_u are improper.

use crate::error::{Error, Result};
use crate::matrix::Mat4;
use crate::minkowski::{causal_class, eta_inner, CausalClass, FourVector};
use crate::transform::{LorentzTransform, DEFAULT_VALIDATION_TOL};

/// A hyperplane reflection, stored as its canonicalized normal together with
/// the derived tensor.
#[derive(Clone, Copy, Debug)]
pub struct Reflection {
    normal: FourVector,
    tensor: Mat4,
    normal_class: CausalClass,
}

/// Rescales a non-null normal to |eta(u,u)| = 1 with a deterministic sign:
/// future-directed if timelike, first nonzero component positive if
/// spacelike. The reflection itself is insensitive to scale and sign; the
/// canonical form exists for stable comparison and serialization.
fn canonicalize_normal(u: &FourVector, class: CausalClass) -> FourVector {
    let s = 1.0 / eta_inner(u, u).abs().sqrt();
    let c = u.scale(s);
    let flip = if class.is_timelike() {
        c.t < 0.0
    } else {
        let first = c.as_array().into_iter().find(|v| *v != 0.0).unwrap_or(0.0);
        first < 0.0
    };
    if flip {
        -c
    } else {
        c
    }
}

/// Builds the reflection in the hyperplane eta-orthogonal to `u`.
///
/// `u` must be non-null under the tolerance policy: lightlike or zero
/// normals are rejected rather than regularized, because the tensor
/// diverges as eta(u,u) -> 0.
pub fn hyperplane_reflection(u: &FourVector, tol: f64) -> Result<Reflection> {
    let n2 = u.euclid_norm_sq();
    let q = eta_inner(u, u);
    if n2 == 0.0 || q.abs() <= tol * n2 {
        return Err(Error::NullNormal { eta_norm: q });
    }
    let class = causal_class(u, tol);
    let normal = canonicalize_normal(u, class);
    let qn = eta_inner(&normal, &normal);
    let tensor = Mat4::IDENTITY.sub(&Mat4::outer(normal.as_array(), normal.lowered()).scale(2.0 / qn));
    Ok(Reflection { normal, tensor, normal_class: class })
}

impl Reflection {
    /// The canonicalized normal.
    pub fn normal(&self) -> &FourVector {
        &self.normal
    }

    pub fn tensor(&self) -> &Mat4 {
        &self.tensor
    }

    /// Causal class of the normal. A timelike normal means the reflected
    /// hyperplane is spacelike (the map is antichronous) and vice versa.
    pub fn normal_class(&self) -> CausalClass {
        self.normal_class
    }

    /// Applies S_u by the rank-one formula x - 2 (eta(x,u)/eta(u,u)) u,
    /// which agrees with the tensor-matrix product.
    pub fn apply(&self, x: &FourVector) -> FourVector {
        let q = eta_inner(&self.normal, &self.normal);
        let c = 2.0 * eta_inner(x, &self.normal) / q;
        *x - self.normal.scale(c)
    }

    /// The reflection as a validated transform. Fails with
    /// [`Error::ValidationFailure`] for normals so close to the light cone
    /// that the tensor cannot meet the validation tolerance, which the
    /// rank-one [`Reflection::apply`] form tolerates better.
    pub fn as_transform(&self) -> Result<LorentzTransform> {
        LorentzTransform::try_new(self.tensor, DEFAULT_VALIDATION_TOL)
    }
}

/// The reflection -S_u in the line spanned by `u`: fixes the line, negates
/// the orthogonal hyperplane. Improper in dimension 4.
pub fn line_reflection(u: &FourVector, tol: f64) -> Result<LorentzTransform> {
    let s = hyperplane_reflection(u, tol)?;
    LorentzTransform::try_new(s.tensor.scale(-1.0), DEFAULT_VALIDATION_TOL)
}

/// The reflection -S_{a+b} in the bisector of the Lorentzian angle between
/// two vectors of equal eta-norm (zero allowed); it maps `b` to `a`.
pub fn bisector_reflection(a: &FourVector, b: &FourVector, tol: f64) -> Result<LorentzTransform> {
    let qa = eta_inner(a, a);
    let qb = eta_inner(b, b);
    let scale = a.euclid_norm_sq().max(b.euclid_norm_sq());
    if scale == 0.0 {
        return Err(Error::DegenerateBisector);
    }
    if (qa - qb).abs() > tol * scale {
        return Err(Error::NormMismatch { left: qa, right: qb });
    }
    let s = *a + *b;
    line_reflection(&s, tol).map_err(|e| match e {
        Error::NullNormal { .. } => Error::DegenerateBisector,
        other => other,
    })
}
