//! The observer metric U and the rotation-boost (polar) decomposition of
//! orthochronous Lorentz transformations.
//!
//! For a unit timelike observer u, U = eta - 2 u u / eta(u,u) (indices
//! lowered) is symmetric positive-definite and reduces to the unit matrix
//! in u's rest frame; as an operator, U = eta S_u. With respect to U every
//! u-boost is symmetric and positive definite and every u-rotation is
//! orthogonal, which is why the classical polar decomposition of an
//! orthochronous Lorentz matrix is exactly its boost-rotation split. The
//! decomposition here is built constructively from reflections
//! (B = S_{u + Lu} S_u), not from matrix square roots; the square-root
//! route lives in the test oracle.

use crate::boost::{standard_boost, Velocity3};
use crate::error::{Error, Result};
use crate::matrix::{sym_eigen, Mat4, ETA};
use crate::minkowski::{causal_class, normalize_timelike, CausalClass, FourVector};
use crate::reflection::hyperplane_reflection;
use crate::transform::{LorentzTransform, DEFAULT_VALIDATION_TOL};
use rand::Rng;

/// The positive-definite bilinear form attached to a timelike observer.
#[derive(Clone, Copy, Debug)]
pub struct ObserverMetric {
    /// Normalized future-directed observer.
    pub observer: FourVector,
    /// Components U_{mu nu}, symmetric positive-definite.
    pub tensor: Mat4,
}

impl ObserverMetric {
    /// Evaluates U(x, y).
    pub fn inner(&self, x: &FourVector, y: &FourVector) -> f64 {
        let uy = self.tensor.mul_vec(y.as_array());
        let xa = x.as_array();
        xa.iter().zip(uy.iter()).map(|(a, b)| a * b).sum()
    }

    /// Eigenvalues of the form (unsorted); all four are positive.
    pub fn eigenvalues(&self) -> [f64; 4] {
        sym_eigen(&self.tensor).0
    }
}

/// Observer metric U = eta - 2 u u / eta(u,u) with both indices lowered;
/// as an operator identity, U = eta S_u.
pub fn observer_metric(u: &FourVector) -> Result<ObserverMetric> {
    let u = normalize_timelike(u)?;
    // eta(u,u) = -1 for the normalized observer, so U = eta + 2 (eta u)(eta u)^T.
    let low = u.lowered();
    let tensor = ETA.add(&Mat4::outer(low, low).scale(2.0));
    Ok(ObserverMetric { observer: u, tensor })
}

/// The boost and rotation factors of an orthochronous transform for a given
/// observer: `input = boost * rotation`, with the rotation acting first and
/// fixing the observer.
#[derive(Clone, Copy, Debug)]
pub struct PolarFactors {
    /// U-symmetric positive factor, a u-boost.
    pub boost: LorentzTransform,
    /// U-orthogonal factor fixing the observer; improper iff the input is.
    pub rotation: LorentzTransform,
    pub observer: FourVector,
}

impl PolarFactors {
    /// The same decomposition written with the rotation on the left:
    /// `input = rotation * boost'` with `boost' = rotation^{-1} boost rotation`.
    pub fn right_order(&self) -> Result<(LorentzTransform, LorentzTransform)> {
        let rinv = self.rotation.inverse();
        let b = LorentzTransform::try_new(
            rinv.matrix().mul(self.boost.matrix()).mul(self.rotation.matrix()),
            DEFAULT_VALIDATION_TOL,
        )?;
        Ok((self.rotation, b))
    }
}

/// Splits an orthochronous `l` into boost times rotation for observer `u`:
/// the boost is the bisector construction S_{u + Lu} S_u carrying u to Lu,
/// and the rotation is its inverse composed with `l`, which fixes u.
/// Antichronous input is rejected; improper orthochronous input yields an
/// improper rotation factor.
pub fn polar_decompose(l: &LorentzTransform, u: &FourVector) -> Result<PolarFactors> {
    let u = normalize_timelike(u)?;
    let moved = l.apply(&u);
    if causal_class(&moved, crate::minkowski::DEFAULT_TOL) != CausalClass::TimelikeFuture {
        return Err(Error::NotOrthochronous);
    }
    // u + Lu is timelike future for any two future unit timelike vectors.
    let su = hyperplane_reflection(&u, crate::minkowski::DEFAULT_TOL)?;
    let sb = hyperplane_reflection(&(u + moved), crate::minkowski::DEFAULT_TOL)?;
    let boost = LorentzTransform::try_new(sb.tensor().mul(su.tensor()), DEFAULT_VALIDATION_TOL)?;
    // boost^{-1} = S_u S_{u+Lu}: reflections are involutory.
    let rotation_m = su.tensor().mul(sb.tensor()).mul(l.matrix());
    let rotation = LorentzTransform::try_new(rotation_m, DEFAULT_VALIDATION_TOL)?;
    Ok(PolarFactors { boost, rotation, observer: u })
}

/// Result of sampling U(x, By) = U(y, Bx) plus the exact operator residual.
#[derive(Clone, Copy, Debug)]
pub struct SymmetryCheck {
    /// max |U(x,By) - U(y,Bx)| / (|x| |y|) over the sampled pairs.
    pub sampled_max: f64,
    /// |UB - (UB)^T| in the entrywise max norm.
    pub operator_residual: f64,
}

/// Measures how U-symmetric `b` is for observer `u`: exact operator
/// residual |UB - (UB)^T| plus a sampled maximum over random vector pairs.
/// Zero (to roundoff) iff `b` is a u-boost.
pub fn check_u_symmetric<R: Rng + ?Sized>(
    b: &LorentzTransform,
    u: &FourVector,
    trials: usize,
    rng: &mut R,
) -> Result<SymmetryCheck> {
    let metric = observer_metric(u)?;
    let ub = metric.tensor.mul(b.matrix());
    let operator_residual = ub.max_diff(&ub.transpose());

    let mut sampled_max = 0.0_f64;
    for _ in 0..trials {
        let rand_vec = |rng: &mut R| {
            FourVector::new(
                rng.random_range(-1.0..1.0),
                rng.random_range(-1.0..1.0),
                rng.random_range(-1.0..1.0),
                rng.random_range(-1.0..1.0),
            )
        };
        let x = rand_vec(rng);
        let y = rand_vec(rng);
        let nx = x.euclid_norm();
        let ny = y.euclid_norm();
        if nx < 1e-6 || ny < 1e-6 {
            continue;
        }
        let asym = (metric.inner(&x, &b.apply(&y)) - metric.inner(&y, &b.apply(&x))).abs();
        sampled_max = sampled_max.max(asym / (nx * ny));
    }
    Ok(SymmetryCheck { sampled_max, operator_residual })
}

/// Smallest eigenvalue of the symmetric part of UB. Positive for u-boosts:
/// a boost of rapidity chi has spectrum {e^chi, e^-chi, 1, 1} in u's frame.
pub fn check_u_positive(b: &LorentzTransform, u: &FourVector) -> Result<f64> {
    let metric = observer_metric(u)?;
    let ub = metric.tensor.mul(b.matrix());
    let sym = ub.add(&ub.transpose()).scale(0.5);
    let (eigs, _) = sym_eigen(&sym);
    Ok(eigs.into_iter().fold(f64::INFINITY, f64::min))
}

/// Both sides of the boost positivity identity: the quadratic form of the
/// active boost matrix for velocity -v against the three-term closed form
///
/// gamma (t - v.x)^2 + (1/gamma) (v.x)^2 / v^2 + |x - (v.x/v^2) v|^2.
///
/// The two values agree to roundoff; returning both makes the identity an
/// executable check rather than an assertion.
pub fn positivity_identity_check(v: &Velocity3, t: f64, xs: [f64; 3]) -> Result<(f64, f64)> {
    let v2 = v.norm_sq();
    if v2 == 0.0 {
        return Err(Error::ZeroVelocity);
    }
    if v2 >= 1.0 {
        return Err(Error::SuperluminalVelocity { speed: v.speed() });
    }
    // Active interpretation: the boost matrix takes the reversed velocity.
    let b = standard_boost(&v.negated())?;
    let vec = [t, xs[0], xs[1], xs[2]];
    let bv = b.matrix().mul_vec(vec);
    let lhs: f64 = vec.iter().zip(bv.iter()).map(|(a, c)| a * c).sum();

    let gamma = 1.0 / (1.0 - v2).sqrt();
    let va = v.as_array();
    let vx = va[0] * xs[0] + va[1] * xs[1] + va[2] * xs[2];
    let mut perp2 = 0.0;
    for i in 0..3 {
        let p = xs[i] - vx / v2 * va[i];
        perp2 += p * p;
    }
    let rhs = gamma * (t - vx) * (t - vx) + (vx * vx) / (gamma * v2) + perp2;
    Ok((lhs, rhs))
}

/// Residual |R^T U R - U| of the U-orthogonality of a u-rotation, proper or
/// improper. The transform must fix the observer.
pub fn check_rotation_u_orthogonal(
    r: &LorentzTransform,
    u: &FourVector,
    tol: f64,
) -> Result<f64> {
    let metric = observer_metric(u)?;
    let un = metric.observer;
    let moved = r.apply(&un);
    let residual = (moved - un).euclid_norm();
    if residual > tol.max(1e-12) * (1.0 + un.euclid_norm() + moved.euclid_norm()) {
        return Err(Error::NotARotationForU { residual });
    }
    let rur = r.matrix().transpose().mul(&metric.tensor).mul(r.matrix());
    Ok(rur.max_diff(&metric.tensor))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boost::boost_from_pair;
    use crate::minkowski::DEFAULT_TOL;
    use crate::rotation::rotation_from_plane;
    use crate::transform::compose;
    use approx::assert_abs_diff_eq;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn rest_observer_metric_is_unit_matrix() {
        let m = observer_metric(&FourVector::E0).unwrap();
        assert!(m.tensor.max_diff(&Mat4::IDENTITY) < 1e-15);
    }

    #[test]
    fn metric_is_positive_definite_and_normalized_on_observer() {
        let m = observer_metric(&FourVector::new(1.25, 0.75, 0.0, 0.0)).unwrap();
        for e in m.eigenvalues() {
            assert!(e > 0.0);
        }
        // U(u,u) = +1 for the unit observer.
        assert_abs_diff_eq!(m.inner(&m.observer, &m.observer), 1.0, epsilon = 1e-12);
        // Operator identity U = eta S_u.
        let su = hyperplane_reflection(&m.observer, DEFAULT_TOL).unwrap();
        assert!(m.tensor.max_diff(&ETA.mul(su.tensor())) < 1e-13);
    }

    #[test]
    fn metric_components_are_unit_matrix_in_rest_frame() {
        let u = FourVector::new(2.0, 0.9, -0.4, 0.7);
        let m = observer_metric(&u).unwrap();
        let e = crate::frame::ObserverFrame::new(&u).unwrap().basis_matrix();
        let in_frame = e.transpose().mul(&m.tensor).mul(&e);
        assert!(in_frame.max_diff(&Mat4::IDENTITY) < 1e-13);
    }

    #[test]
    fn pure_boost_decomposes_trivially() {
        let b = standard_boost(&Velocity3::new(0.6, 0.0, 0.0).unwrap()).unwrap();
        let f = polar_decompose(&b, &FourVector::E0).unwrap();
        assert!(f.boost.matrix().max_diff(b.matrix()) < 1e-13);
        assert!(f.rotation.matrix().max_diff(&Mat4::IDENTITY) < 1e-13);
    }

    #[test]
    fn pure_rotation_decomposes_trivially() {
        let r = rotation_from_plane(
            &FourVector::E0,
            &FourVector::E1,
            &FourVector::new(0.0, 0.15_f64.cos(), 0.15_f64.sin(), 0.0),
            DEFAULT_TOL,
        )
        .unwrap();
        let f = polar_decompose(&r.transform, &FourVector::E0).unwrap();
        assert!(f.boost.matrix().max_diff(&Mat4::IDENTITY) < 1e-13);
        assert!(f.rotation.matrix().max_diff(r.transform.matrix()) < 1e-13);
    }

    #[test]
    fn boost_rotation_product_recovers_factors() {
        let b = standard_boost(&Velocity3::new(0.6, 0.0, 0.0).unwrap()).unwrap();
        let r = rotation_from_plane(
            &FourVector::E0,
            &FourVector::E1,
            &FourVector::new(0.0, 0.15_f64.cos(), 0.15_f64.sin(), 0.0),
            DEFAULT_TOL,
        )
        .unwrap()
        .transform;
        let l = compose(&b, &r).unwrap();
        let f = polar_decompose(&l, &FourVector::E0).unwrap();
        assert!(f.boost.matrix().max_diff(b.matrix()) < 1e-10);
        assert!(f.rotation.matrix().max_diff(r.matrix()) < 1e-10);
        let recombined = compose(&f.boost, &f.rotation).unwrap();
        assert!(recombined.matrix().max_diff(l.matrix()) < 1e-10);
    }

    #[test]
    fn right_order_reverses_the_product() {
        let b = standard_boost(&Velocity3::new(0.4, 0.2, 0.0).unwrap()).unwrap();
        let r = rotation_from_plane(
            &FourVector::E0,
            &FourVector::E1,
            &FourVector::new(0.0, 0.4_f64.cos(), 0.4_f64.sin(), 0.0),
            DEFAULT_TOL,
        )
        .unwrap()
        .transform;
        let l = compose(&b, &r).unwrap();
        let f = polar_decompose(&l, &FourVector::E0).unwrap();
        let (rot, boost_right) = f.right_order().unwrap();
        let recombined = compose(&rot, &boost_right).unwrap();
        assert!(recombined.matrix().max_diff(l.matrix()) < 1e-10);
    }

    #[test]
    fn antichronous_input_is_rejected() {
        let mut m = Mat4::IDENTITY;
        m.0[0][0] = -1.0;
        m.0[1][1] = -1.0;
        let pt = LorentzTransform::new(m).unwrap();
        assert_eq!(
            polar_decompose(&pt, &FourVector::E0).unwrap_err(),
            Error::NotOrthochronous
        );
    }

    #[test]
    fn u_symmetry_separates_boosts_from_rotations() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let id = LorentzTransform::identity();
        let c = check_u_symmetric(&id, &FourVector::E0, 100, &mut rng).unwrap();
        assert_eq!(c.operator_residual, 0.0);

        let u = FourVector::new(1.1, 0.2, -0.3, 0.1);
        let b = boost_from_pair(&u, &FourVector::new(1.4, -0.2, 0.5, 0.0)).unwrap();
        let c = check_u_symmetric(&b.transform, &u, 200, &mut rng).unwrap();
        assert!(c.operator_residual < 1e-11, "residual {}", c.operator_residual);
        assert!(c.sampled_max < 1e-11);

        let r = rotation_from_plane(
            &FourVector::E0,
            &FourVector::E1,
            &FourVector::new(0.0, 0.3_f64.cos(), 0.3_f64.sin(), 0.0),
            DEFAULT_TOL,
        )
        .unwrap();
        let c = check_u_symmetric(&r.transform, &FourVector::E0, 200, &mut rng).unwrap();
        assert!(c.operator_residual > 1e-3);
    }

    #[test]
    fn positivity_spectrum_of_standard_boost() {
        let id = LorentzTransform::identity();
        assert_abs_diff_eq!(check_u_positive(&id, &FourVector::E0).unwrap(), 1.0, epsilon = 1e-13);

        let b = standard_boost(&Velocity3::new(0.6, 0.0, 0.0).unwrap()).unwrap();
        // gamma (1 - v) = 1.25 * 0.4 = 0.5.
        assert_abs_diff_eq!(
            check_u_positive(&b, &FourVector::E0).unwrap(),
            0.5,
            epsilon = 1e-12
        );

        let mut m = Mat4::IDENTITY;
        m.0[0][0] = -1.0;
        let t = LorentzTransform::new(m).unwrap();
        assert_abs_diff_eq!(
            check_u_positive(&t, &FourVector::E0).unwrap(),
            -1.0,
            epsilon = 1e-13
        );
    }

    #[test]
    fn positivity_identity_worked_example() {
        let v = Velocity3::new(0.6, 0.0, 0.0).unwrap();
        let (lhs, rhs) = positivity_identity_check(&v, 1.0, [1.0, 0.0, 0.0]).unwrap();
        // Terms 0.2 + 0.8 + 0.
        assert_abs_diff_eq!(lhs, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(rhs, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn positivity_identity_degenerate_inputs() {
        let v = Velocity3::new(0.3, 0.4, 0.0).unwrap();
        // xs = 0: only the first term survives, gamma t^2 on both sides.
        let (lhs, rhs) = positivity_identity_check(&v, 1.0, [0.0, 0.0, 0.0]).unwrap();
        let gamma = 1.0 / (1.0 - 0.25_f64).sqrt();
        assert_abs_diff_eq!(lhs, gamma, epsilon = 1e-12);
        assert_abs_diff_eq!(rhs, gamma, epsilon = 1e-12);
        // xs perpendicular to v with t = 0: only |xs|^2 survives.
        let (lhs, rhs) = positivity_identity_check(&v, 0.0, [0.0, 0.0, 2.0]).unwrap();
        assert_abs_diff_eq!(lhs, 4.0, epsilon = 1e-12);
        assert_abs_diff_eq!(rhs, 4.0, epsilon = 1e-12);
        // v = 0 is rejected.
        assert_eq!(
            positivity_identity_check(&Velocity3::ZERO, 1.0, [1.0, 0.0, 0.0]).unwrap_err(),
            Error::ZeroVelocity
        );
    }

    #[test]
    fn rotations_are_u_orthogonal() {
        let id = LorentzTransform::identity();
        assert_eq!(
            check_rotation_u_orthogonal(&id, &FourVector::E0, DEFAULT_TOL).unwrap(),
            0.0
        );

        // A single reflection with spacelike normal orthogonal to u.
        let s = hyperplane_reflection(&FourVector::E1, DEFAULT_TOL)
            .unwrap()
            .as_transform()
            .unwrap();
        assert!(check_rotation_u_orthogonal(&s, &FourVector::E0, DEFAULT_TOL).unwrap() < 1e-12);

        let r = rotation_from_plane(
            &FourVector::E0,
            &FourVector::E1,
            &FourVector::new(0.0, 1.0, 0.7, -0.2),
            DEFAULT_TOL,
        )
        .unwrap();
        assert!(
            check_rotation_u_orthogonal(&r.transform, &FourVector::E0, DEFAULT_TOL).unwrap()
                < 1e-10
        );

        // A boost does not fix u at all.
        let b = standard_boost(&Velocity3::new(0.5, 0.0, 0.0).unwrap()).unwrap();
        assert!(matches!(
            check_rotation_u_orthogonal(&b, &FourVector::E0, DEFAULT_TOL),
            Err(Error::NotARotationForU { .. })
        ));
    }

    #[test]
    fn operator_identity_ub_equals_conjugated_w() {
        // UB = S_u^T W S_u for B = S_w S_u.
        let u = FourVector::new(1.5, 0.5, -0.2, 0.3);
        let w = FourVector::new(2.0, -0.4, 0.8, 0.1);
        let b = boost_from_pair(&u, &w).unwrap();
        let um = observer_metric(&u).unwrap();
        let wm = observer_metric(&w).unwrap();
        let su = hyperplane_reflection(&b.observer, DEFAULT_TOL).unwrap();
        let lhs = um.tensor.mul(b.transform.matrix());
        let rhs = su.tensor().transpose().mul(&wm.tensor).mul(su.tensor());
        assert!(lhs.max_diff(&rhs) < 1e-12, "diff {}", lhs.max_diff(&rhs));
    }
}
