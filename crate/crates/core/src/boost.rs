//! Boosts built from pairs of reflections in timelike hyperplanes.
//!
//! A u-boost is a proper orthochronous transformation that preserves a
//! timelike 2-plane containing the observer u and fixes the orthogonal
//! spacelike 2-plane vectorwise. Every u-boost is S_w S_u for a timelike w,
//! and the unique u-boost carrying a causal x to an equal-norm x' has
//! w proportional to x' - S_u x. The construction fails exactly when that
//! difference is lightlike, i.e. when x and x' are lightlike and spatially
//! antipodal with respect to u; then no u-boost exists.

use crate::error::{Error, Result};
use crate::frame::ObserverFrame;
use crate::matrix::Mat4;
use crate::minkowski::{causal_class, eta_inner, normalize_timelike, CausalClass, FourVector};
use crate::reflection::{hyperplane_reflection, Reflection};
use crate::transform::{LorentzTransform, DEFAULT_VALIDATION_TOL};

pub use crate::frame::frame_components;

/// A boost S_w S_u together with the two unit timelike vectors that define
/// its reflections. `w` bisects the Lorentzian angle between `observer` and
/// its image under the boost.
#[derive(Clone, Copy, Debug)]
pub struct BoostResult {
    pub transform: LorentzTransform,
    /// The bisector normal, normalized future-directed timelike.
    pub w: FourVector,
    /// The observer, normalized future-directed timelike.
    pub observer: FourVector,
}

/// A relative velocity in the rest frame of an observer, with c = 1.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Velocity3 {
    pub vx: f64,
    pub vy: f64,
    pub vz: f64,
}

impl Velocity3 {
    pub const ZERO: Velocity3 = Velocity3 { vx: 0.0, vy: 0.0, vz: 0.0 };

    /// Builds a velocity, rejecting |v| >= 1.
    pub fn new(vx: f64, vy: f64, vz: f64) -> Result<Velocity3> {
        let v = Velocity3 { vx, vy, vz };
        let speed = v.speed();
        if !speed.is_finite() || speed >= 1.0 {
            return Err(Error::SuperluminalVelocity { speed });
        }
        Ok(v)
    }

    pub fn from_array(a: [f64; 3]) -> Result<Velocity3> {
        Velocity3::new(a[0], a[1], a[2])
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.vx, self.vy, self.vz]
    }

    pub fn norm_sq(&self) -> f64 {
        self.vx * self.vx + self.vy * self.vy + self.vz * self.vz
    }

    pub fn speed(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn negated(&self) -> Velocity3 {
        Velocity3 { vx: -self.vx, vy: -self.vy, vz: -self.vz }
    }
}

/// The boost S_w S_u for timelike u, w (normalized internally). If w is
/// proportional to u the result is the identity.
pub fn boost_from_pair(u: &FourVector, w: &FourVector) -> Result<BoostResult> {
    let u = normalize_timelike(u)?;
    let w = normalize_timelike(w)?;
    let su = hyperplane_reflection(&u, crate::minkowski::DEFAULT_TOL)?;
    let sw = hyperplane_reflection(&w, crate::minkowski::DEFAULT_TOL)?;
    let transform = LorentzTransform::try_new(sw.tensor().mul(su.tensor()), DEFAULT_VALIDATION_TOL)?;
    Ok(BoostResult { transform, w, observer: u })
}

/// Shared validation for the linking problem. Returns the normalized
/// observer, its reflection, and the (non-degenerate branch) bisector
/// normal x' - S_u x.
fn linking_parts(
    u: &FourVector,
    x: &FourVector,
    xp: &FourVector,
    tol: f64,
) -> Result<(FourVector, Reflection, Option<FourVector>)> {
    let u = normalize_timelike(u)?;

    let qx = eta_inner(x, x);
    let qxp = eta_inner(xp, xp);
    let cx = causal_class(x, tol);
    let cxp = causal_class(xp, tol);
    if cx == CausalClass::Spacelike {
        return Err(Error::PositiveNorm { eta_norm: qx });
    }
    if cxp == CausalClass::Spacelike {
        return Err(Error::PositiveNorm { eta_norm: qxp });
    }
    let scale = x.euclid_norm_sq().max(xp.euclid_norm_sq());
    if (qx - qxp).abs() > tol * scale.max(1e-300) {
        return Err(Error::NormMismatch { left: qx, right: qxp });
    }
    if cx == CausalClass::Zero || cxp == CausalClass::Zero || cx.is_future() != cxp.is_future() {
        if x == xp {
            // Both zero: any boost works; callers take the identity branch.
            let su = hyperplane_reflection(&u, tol)?;
            return Ok((u, su, None));
        }
        return Err(Error::OrientationMismatch);
    }

    let su = hyperplane_reflection(&u, tol)?;
    if x == xp {
        // Degenerate branch: w would be proportional to u; pin it there.
        return Ok((u, su, None));
    }

    let w = *xp - su.apply(x);
    let n2 = w.euclid_norm_sq();
    let qw = eta_inner(&w, &w);
    // The exceptional case: x' - S_u x lightlike (or zero), which happens
    // exactly for spatially antipodal lightlike pairs.
    if n2 == 0.0 || qw.abs() <= tol * n2 || qw > 0.0 {
        return Err(Error::NoSuchBoost);
    }
    Ok((u, su, Some(w)))
}

/// The unique u-boost B = S_{x' - S_u x} S_u with B x = x'.
///
/// Preconditions: u timelike; x and x' nonzero with the same non-positive
/// eta-norm and the same time orientation. For x = x' the identity boost is
/// returned with w pinned to u.
pub fn boost_linking(u: &FourVector, x: &FourVector, xp: &FourVector, tol: f64) -> Result<BoostResult> {
    let (u, su, w) = linking_parts(u, x, xp, tol)?;
    match w {
        None => Ok(BoostResult { transform: LorentzTransform::identity(), w: u, observer: u }),
        Some(w) => {
            let w = normalize_timelike(&w).map_err(|_| Error::NoSuchBoost)?;
            let sw = hyperplane_reflection(&w, tol)?;
            let transform =
                LorentzTransform::try_new(sw.tensor().mul(su.tensor()), DEFAULT_VALIDATION_TOL)?;
            Ok(BoostResult { transform, w, observer: u })
        }
    }
}

/// Closed-form relative velocity of the boost linking x to x', in the rest
/// frame of u:
///
/// v = 2 (x'0 + x0)(xs' - xs) / [ (x'0 + x0)^2 + |xs' - xs|^2 ],
///
/// the relativistic double of the bisector direction. Preconditions and the
/// exceptional case are exactly those of [`boost_linking`].
pub fn relative_velocity(u: &FourVector, x: &FourVector, xp: &FourVector, tol: f64) -> Result<Velocity3> {
    let (u, _, w) = linking_parts(u, x, xp, tol)?;
    if w.is_none() {
        return Ok(Velocity3::ZERO);
    }
    let frame = ObserverFrame::new(&u)?;
    let (x0, xs) = frame.components(x);
    let (xp0, xps) = frame.components(xp);
    let a = xp0 + x0;
    let d = [xps[0] - xs[0], xps[1] - xs[1], xps[2] - xs[2]];
    let d2 = d[0] * d[0] + d[1] * d[1] + d[2] * d[2];
    let den = a * a + d2;
    Velocity3::new(
        2.0 * a * d[0] / den,
        2.0 * a * d[1] / den,
        2.0 * a * d[2] / den,
    )
}

/// Textbook symmetric boost matrix for velocity v in the frame of a rest
/// observer: m[0][0] = gamma, m[0][i] = m[i][0] = gamma v_i, spatial block
/// delta_ij + gamma^2/(1+gamma) v_i v_j. Used as the matrix-side oracle for
/// the reflection constructions.
pub fn standard_boost(v: &Velocity3) -> Result<LorentzTransform> {
    let v2 = v.norm_sq();
    if v2 >= 1.0 {
        return Err(Error::SuperluminalVelocity { speed: v.speed() });
    }
    let gamma = 1.0 / (1.0 - v2).sqrt();
    // (gamma - 1)/v^2 = gamma^2/(1 + gamma), finite as v -> 0.
    let k = gamma * gamma / (1.0 + gamma);
    let va = v.as_array();
    let mut m = Mat4::IDENTITY;
    m.0[0][0] = gamma;
    for i in 0..3 {
        m.0[0][i + 1] = gamma * va[i];
        m.0[i + 1][0] = gamma * va[i];
        for j in 0..3 {
            m.0[i + 1][j + 1] = if i == j { 1.0 } else { 0.0 } + k * va[i] * va[j];
        }
    }
    LorentzTransform::try_new(m, DEFAULT_VALIDATION_TOL)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::minkowski::DEFAULT_TOL;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    #[test]
    fn pair_with_equal_vectors_is_identity() {
        let b = boost_from_pair(&FourVector::E0, &FourVector::E0).unwrap();
        assert!(b.transform.matrix().max_diff(&Mat4::IDENTITY) < 1e-15);
    }

    #[test]
    fn pair_reproduces_standard_x_boost() {
        // w bisects e0 and (1.25, 0.75, 0, 0), so S_w S_u is the v = 0.6 boost.
        let b = boost_from_pair(&FourVector::E0, &FourVector::new(2.25, 0.75, 0.0, 0.0)).unwrap();
        let oracle = standard_boost(&Velocity3::new(0.6, 0.0, 0.0).unwrap()).unwrap();
        assert!(b.transform.matrix().max_diff(oracle.matrix()) < 1e-14);
        let u1 = b.transform.apply(&FourVector::E0);
        assert_abs_diff_eq!(u1.t, 1.25, epsilon = 1e-14);
        assert_abs_diff_eq!(u1.x, 0.75, epsilon = 1e-14);
    }

    #[test]
    fn pair_fixes_double_orthogonal_vectors() {
        let u = FourVector::new(1.2, 0.1, -0.3, 0.2);
        let w = FourVector::new(1.5, -0.4, 0.5, 0.1);
        let b = boost_from_pair(&u, &w).unwrap();
        // Build a vector orthogonal to both unit vectors: in the observer
        // frame, any spatial direction orthogonal to w's spatial part works.
        let f = ObserverFrame::new(&b.observer).unwrap();
        let (_, ws) = f.components(&b.w);
        let c1 = [0.0, ws[2], -ws[1]];
        let c2 = [-ws[2], 0.0, ws[0]];
        let n1 = c1[1] * c1[1] + c1[2] * c1[2];
        let n2 = c2[0] * c2[0] + c2[2] * c2[2];
        let ortho = if n1 >= n2 { c1 } else { c2 };
        let x = f.from_components(0.0, ortho);
        assert!(eta_inner(&x, &b.observer).abs() < 1e-12);
        assert!(eta_inner(&x, &b.w).abs() < 1e-12);
        let moved = b.transform.apply(&x);
        assert!((moved - x).euclid_norm() <= 1e-12 * x.euclid_norm().max(1.0));
    }

    #[test]
    fn linking_canonical_case() {
        let x = FourVector::E0;
        let xp = FourVector::new(1.25, 0.75, 0.0, 0.0);
        let b = boost_linking(&FourVector::E0, &x, &xp, DEFAULT_TOL).unwrap();
        let oracle = standard_boost(&Velocity3::new(0.6, 0.0, 0.0).unwrap()).unwrap();
        assert!(b.transform.matrix().max_diff(oracle.matrix()) < 1e-14);
        // w is proportional to (2.25, 0.75, 0, 0).
        let expect_w = normalize_timelike(&FourVector::new(2.25, 0.75, 0.0, 0.0)).unwrap();
        assert!((b.w - expect_w).euclid_norm() < 1e-14);
        assert!((b.transform.apply(&x) - xp).euclid_norm() < 1e-14);
    }

    #[test]
    fn linking_identity_when_endpoints_agree() {
        let x = FourVector::new(2.0, 0.3, 0.4, -0.1);
        let b = boost_linking(&FourVector::E0, &x, &x, DEFAULT_TOL).unwrap();
        assert!(b.transform.matrix().max_diff(&Mat4::IDENTITY) < 1e-15);
        assert_eq!(b.w, b.observer);
    }

    #[test]
    fn linking_works_for_lightlike_pairs() {
        // Both null and future-directed, not antipodal: w = (3,-1,2,0) is
        // timelike and the boost carries x to x'.
        let x = FourVector::new(1.0, 1.0, 0.0, 0.0);
        let xp = FourVector::new(2.0, 0.0, 2.0, 0.0);
        let b = boost_linking(&FourVector::E0, &x, &xp, DEFAULT_TOL).unwrap();
        assert!((b.transform.apply(&x) - xp).euclid_norm() < 1e-12 * xp.euclid_norm());
        assert!(eta_inner(&b.w, &b.w) < 0.0);
    }

    #[test]
    fn linking_rejects_antipodal_lightlike_pair() {
        let x = FourVector::new(1.0, 1.0, 0.0, 0.0);
        let xp = FourVector::new(1.0, -1.0, 0.0, 0.0);
        assert!(matches!(
            boost_linking(&FourVector::E0, &x, &xp, DEFAULT_TOL),
            Err(Error::NoSuchBoost)
        ));
        assert_eq!(
            relative_velocity(&FourVector::E0, &x, &xp, DEFAULT_TOL),
            Err(Error::NoSuchBoost)
        );
    }

    #[test]
    fn linking_precondition_errors() {
        let u = FourVector::E0;
        let timelike = FourVector::new(2.0, 0.5, 0.0, 0.0);
        // Spacelike input.
        assert!(matches!(
            boost_linking(&u, &FourVector::E1, &FourVector::E2, DEFAULT_TOL),
            Err(Error::PositiveNorm { .. })
        ));
        // Norm mismatch.
        assert!(matches!(
            boost_linking(&u, &timelike, &timelike.scale(2.0), DEFAULT_TOL),
            Err(Error::NormMismatch { .. })
        ));
        // Orientation mismatch.
        assert!(matches!(
            boost_linking(&u, &timelike, &-timelike, DEFAULT_TOL),
            Err(Error::OrientationMismatch)
        ));
        // Non-timelike observer.
        assert!(matches!(
            boost_linking(&FourVector::E1, &timelike, &timelike, DEFAULT_TOL),
            Err(Error::NotTimelike { .. })
        ));
    }

    #[test]
    fn velocity_canonical_case() {
        // 2 * 2.25 * 0.75 / (2.25^2 + 0.5625) = 0.6 exactly.
        let v = relative_velocity(
            &FourVector::E0,
            &FourVector::E0,
            &FourVector::new(1.25, 0.75, 0.0, 0.0),
            DEFAULT_TOL,
        )
        .unwrap();
        assert_abs_diff_eq!(v.vx, 0.6, epsilon = 1e-12);
        assert_abs_diff_eq!(v.vy, 0.0);
        assert_abs_diff_eq!(v.vz, 0.0);
    }

    #[test]
    fn velocity_zero_for_equal_endpoints() {
        let x = FourVector::new(3.0, 1.0, -1.0, 0.5);
        let v = relative_velocity(&FourVector::E0, &x, &x, DEFAULT_TOL).unwrap();
        assert_eq!(v, Velocity3::ZERO);
    }

    #[test]
    fn standard_boost_examples() {
        let id = standard_boost(&Velocity3::ZERO).unwrap();
        assert!(id.matrix().max_diff(&Mat4::IDENTITY) < 1e-15);

        let b = standard_boost(&Velocity3::new(0.6, 0.0, 0.0).unwrap()).unwrap();
        assert_abs_diff_eq!(b.matrix().0[0][0], 1.25, epsilon = 1e-15);
        assert_abs_diff_eq!(b.matrix().0[0][1], 0.75, epsilon = 1e-15);
        assert_abs_diff_eq!(b.matrix().0[1][1], 1.25, epsilon = 1e-15);
        assert_abs_diff_eq!(b.matrix().0[2][2], 1.0);

        assert!(matches!(
            Velocity3::new(1.0, 0.0, 0.0),
            Err(Error::SuperluminalVelocity { .. })
        ));
    }

    fn velocity() -> impl Strategy<Value = Velocity3> {
        (-0.9..0.9_f64, -0.9..0.9_f64, -0.9..0.9_f64)
            .prop_filter_map("subluminal", |(x, y, z)| Velocity3::new(x, y, z).ok())
    }

    proptest! {
        #[test]
        fn boost_times_inverse_boost_is_identity(v in velocity()) {
            let b = standard_boost(&v).unwrap();
            let binv = standard_boost(&v.negated()).unwrap();
            let prod = b.matrix().mul(binv.matrix());
            prop_assert!(prod.max_diff(&Mat4::IDENTITY) <= 1e-11);
        }

        #[test]
        fn frame_components_match_rest_frame(t in -5.0..5.0_f64, x in -5.0..5.0_f64,
                                             y in -5.0..5.0_f64, z in -5.0..5.0_f64) {
            let v = FourVector::new(t, x, y, z);
            let (x0, xs) = frame_components(&FourVector::E0, &v).unwrap();
            prop_assert!((x0 - t).abs() < 1e-14);
            prop_assert!((xs[0] - x).abs() < 1e-14);
            prop_assert!((xs[1] - y).abs() < 1e-14);
            prop_assert!((xs[2] - z).abs() < 1e-14);
        }
    }
}
