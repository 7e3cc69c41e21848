//! u-rotations from pairs of reflections with spacelike normals orthogonal
//! to the observer, rotation-angle extraction, and the Thomas rotation as a
//! six-reflection product.
//!
//! For normalized plane vectors a, b the inner product eta(a,b) is the
//! cosine of half the rotation angle of S_a S_b. A closed triangle of
//! boosts u -> u' -> u'' -> u, each built from its bisector pair, composes
//! to a proper u-rotation whose angle is the Thomas angle:
//! S_{u+u''} S_{u''} S_{u''+u'} S_{u'} S_{u'+u} S_u, with S_u acting first.

use crate::error::{Error, Result};
use crate::frame::ObserverFrame;
use crate::minkowski::{eta_inner, normalize_timelike, FourVector};
use crate::reflection::hyperplane_reflection;
use crate::transform::{LorentzComponent, LorentzTransform, DEFAULT_VALIDATION_TOL};

/// Angle below which the rotation axis is reported as undefined.
const AXIS_UNDEFINED_BELOW: f64 = 1e-9;

/// A u-rotation with its extracted angle and axis.
#[derive(Clone, Copy, Debug)]
pub struct RotationInfo {
    pub transform: LorentzTransform,
    /// The observer fixed by the rotation, normalized future-directed.
    pub observer: FourVector,
    /// Rotation angle in radians, in [0, pi].
    pub angle: f64,
    /// Unit axis in the observer's frame; `None` when the angle is
    /// numerically zero and no axis is distinguished.
    pub axis: Option<[f64; 3]>,
}

/// Reads angle and axis off the spatial block of `l` in the given frame.
/// The block must be (numerically) a proper orthogonal 3x3 matrix.
///
/// The angle comes from atan2 of the antisymmetric part's magnitude (sin)
/// against the trace (cos), which stays accurate near the identity where
/// arccos alone would amplify roundoff into sqrt-of-epsilon noise.
fn extract_angle_axis(l: &LorentzTransform, frame: &ObserverFrame) -> (f64, Option<[f64; 3]>) {
    let m = frame.matrix_in_frame(l);
    let r = |i: usize, j: usize| m.0[i + 1][j + 1];
    let trace = r(0, 0) + r(1, 1) + r(2, 2);
    let cos = (trace - 1.0) / 2.0;
    let ax = [
        (r(2, 1) - r(1, 2)) / 2.0,
        (r(0, 2) - r(2, 0)) / 2.0,
        (r(1, 0) - r(0, 1)) / 2.0,
    ];
    let sin = (ax[0] * ax[0] + ax[1] * ax[1] + ax[2] * ax[2]).sqrt();
    let angle = sin.atan2(cos);
    if angle < AXIS_UNDEFINED_BELOW {
        return (angle, None);
    }
    if angle < std::f64::consts::PI - 1e-3 {
        // The antisymmetric part sin * [n]x carries the axis; dividing by
        // sin is fine at any angle away from pi, small ones included.
        let n = sin;
        (angle, Some([ax[0] / n, ax[1] / n, ax[2] / n]))
    } else {
        // Angle at or near pi: the symmetric part is cos*I + (1-cos) n n^T,
        // so (R_sym - cos*I)/(1-cos) recovers n n^T, which is far better
        // conditioned here than the vanishing antisymmetric part.
        let denom = 1.0 - cos;
        let k = |i: usize, j: usize| {
            let sym = 0.5 * (r(i, j) + r(j, i));
            (sym - if i == j { cos } else { 0.0 }) / denom
        };
        let diags = [k(0, 0), k(1, 1), k(2, 2)];
        let best = diags
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.partial_cmp(b.1).unwrap())
            .map(|(i, _)| i)
            .unwrap();
        let mut axis = [k(0, best), k(1, best), k(2, best)];
        let n = (axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]).sqrt();
        for c in axis.iter_mut() {
            *c /= n;
        }
        // The overall sign still matters away from pi itself; take it from
        // the antisymmetric part while that is resolvable, otherwise apply
        // the deterministic rule: first nonzero component positive.
        let dot = ax[0] * axis[0] + ax[1] * axis[1] + ax[2] * axis[2];
        let flip = if dot.abs() > 1e-12 {
            dot < 0.0
        } else {
            matches!(axis.iter().find(|c| **c != 0.0), Some(first) if *first < 0.0)
        };
        if flip {
            for c in axis.iter_mut() {
                *c = -*c;
            }
        }
        (angle, Some(axis))
    }
}

/// The u-rotation S_a S_b built from two spacelike vectors orthogonal to
/// the observer. Parallel inputs (including a = b) give the identity
/// rotation; a null or zero plane vector is rejected.
pub fn rotation_from_plane(
    u: &FourVector,
    a: &FourVector,
    b: &FourVector,
    tol: f64,
) -> Result<RotationInfo> {
    let u = normalize_timelike(u)?;
    for v in [a, b] {
        let inner = eta_inner(v, &u);
        if inner.abs() > tol.max(1e-12) * v.euclid_norm() * u.euclid_norm() {
            return Err(Error::NotOrthogonalToObserver { inner });
        }
        let q = eta_inner(v, v);
        if v.euclid_norm_sq() == 0.0 || q <= tol * v.euclid_norm_sq() {
            return Err(Error::DegeneratePlane);
        }
    }
    let sa = hyperplane_reflection(a, tol)?;
    let sb = hyperplane_reflection(b, tol)?;
    let transform = LorentzTransform::try_new(sa.tensor().mul(sb.tensor()), DEFAULT_VALIDATION_TOL)?;

    // eta(a,b) of the normalized pair is the cosine of half the angle.
    let cos_half = (eta_inner(sa.normal(), sb.normal()).abs()).clamp(0.0, 1.0);
    let angle = 2.0 * cos_half.acos();

    let frame = ObserverFrame::new(&u)?;
    let axis = if angle < AXIS_UNDEFINED_BELOW {
        None
    } else {
        extract_angle_axis(&transform, &frame).1
    };
    Ok(RotationInfo { transform, observer: u, angle, axis })
}

/// Extracts angle and axis of a proper u-rotation: the angle from the trace
/// of the spatial block in u's frame, the axis from its antisymmetric part
/// (or the symmetric part at angles near pi).
pub fn rotation_angle(l: &LorentzTransform, u: &FourVector, tol: f64) -> Result<RotationInfo> {
    let u = normalize_timelike(u)?;
    let moved = l.apply(&u);
    let residual = (moved - u).euclid_norm();
    if residual > tol.max(1e-12) * (1.0 + u.euclid_norm() + moved.euclid_norm()) {
        return Err(Error::NotARotationForU { residual });
    }
    if l.classify_component() != LorentzComponent::ProperOrthochronous {
        return Err(Error::NotARotationForU { residual });
    }
    let frame = ObserverFrame::new(&u)?;
    let (angle, axis) = extract_angle_axis(l, &frame);
    Ok(RotationInfo { transform: *l, observer: u, angle, axis })
}

/// The Thomas rotation of the boost triangle u -> u' -> u'' -> u, evaluated
/// as the six-reflection product of the three bisector-built legs. The
/// result fixes u and is proper orthochronous; its angle is the Thomas
/// angle.
pub fn thomas_rotation(
    u: &FourVector,
    u1: &FourVector,
    u2: &FourVector,
) -> Result<RotationInfo> {
    let u = normalize_timelike(u)?;
    let u1 = normalize_timelike(u1)?;
    let u2 = normalize_timelike(u2)?;

    // Bisectors of future unit timelike pairs are timelike; checked anyway.
    let refl = |n: &FourVector| {
        hyperplane_reflection(n, crate::minkowski::DEFAULT_TOL).map_err(|e| match e {
            Error::NullNormal { .. } => Error::DegenerateBisector,
            other => other,
        })
    };
    let factors = [
        refl(&(u + u2))?,
        refl(&u2)?,
        refl(&(u2 + u1))?,
        refl(&u1)?,
        refl(&(u1 + u))?,
        refl(&u)?,
    ];
    let mut m = *factors[0].tensor();
    for f in &factors[1..] {
        m = m.mul(f.tensor());
    }
    let transform = LorentzTransform::try_new(m, DEFAULT_VALIDATION_TOL)?;

    // The extraction tolerance is looser than the acceptance threshold;
    // callers measure the fix residual themselves where it matters.
    rotation_angle(&transform, &u, 1e-7)
}
