//! Orthonormal frame adapted to a timelike observer: a deterministic
//! eta-orthonormal tetrad (u, f1, f2, f3) built by Gram-Schmidt, used to
//! read off rest-frame components and rest-frame matrices of transforms.

use crate::error::Result;
use crate::matrix::{Mat4, ETA};
use crate::minkowski::{eta_inner, normalize_timelike, FourVector};
use crate::transform::LorentzTransform;

/// An eta-orthonormal basis (u, f1, f2, f3) with u the future-directed unit
/// observer and f1..f3 spacelike units orthogonal to u and to each other.
#[derive(Clone, Copy, Debug)]
pub struct ObserverFrame {
    basis: [FourVector; 4],
}

/// Gram-Schmidt seeds. The primary seeds (e1, e2, e3) never degenerate for a
/// timelike observer; the alternates exist to honor the documented fallback.
const SEEDS: [[FourVector; 3]; 2] = [
    [FourVector::E1, FourVector::E2, FourVector::E3],
    [FourVector::E2, FourVector::E3, FourVector::E1],
];

const DEGENERACY_FLOOR: f64 = 1e-8;

impl ObserverFrame {
    /// Builds the frame for (any multiple of) a timelike observer.
    pub fn new(observer: &FourVector) -> Result<ObserverFrame> {
        let u = normalize_timelike(observer)?;
        for seeds in SEEDS {
            if let Some(frame) = Self::gram_schmidt(&u, &seeds) {
                return Ok(frame);
            }
        }
        unreachable!("Gram-Schmidt cannot degenerate for a unit timelike observer")
    }

    fn gram_schmidt(u: &FourVector, seeds: &[FourVector; 3]) -> Option<ObserverFrame> {
        let mut basis = [*u, FourVector::ZERO, FourVector::ZERO, FourVector::ZERO];
        for (k, seed) in seeds.iter().enumerate() {
            // eta(u,u) = -1, eta(f_j,f_j) = +1 for the spacelike legs.
            let mut v = *seed + u.scale(eta_inner(seed, u));
            for f in basis.iter().take(k + 1).skip(1) {
                v = v - f.scale(eta_inner(&v, f));
            }
            let n2 = eta_inner(&v, &v);
            if n2 <= DEGENERACY_FLOOR {
                return None;
            }
            basis[k + 1] = v.scale(1.0 / n2.sqrt());
        }
        Some(ObserverFrame { basis })
    }

    pub fn observer(&self) -> &FourVector {
        &self.basis[0]
    }

    pub fn basis(&self) -> &[FourVector; 4] {
        &self.basis
    }

    /// Components (x0, xs) of `x` in this frame: x = x0 u + sum xs_i f_i,
    /// so x0 = -eta(x, u). Orthonormality gives -x0^2 + |xs|^2 = eta(x,x).
    pub fn components(&self, x: &FourVector) -> (f64, [f64; 3]) {
        let x0 = -eta_inner(x, &self.basis[0]);
        let xs = [
            eta_inner(x, &self.basis[1]),
            eta_inner(x, &self.basis[2]),
            eta_inner(x, &self.basis[3]),
        ];
        (x0, xs)
    }

    /// Rebuilds the frame-free vector from rest-frame components.
    pub fn from_components(&self, x0: f64, xs: [f64; 3]) -> FourVector {
        self.basis[0].scale(x0)
            + self.basis[1].scale(xs[0])
            + self.basis[2].scale(xs[1])
            + self.basis[3].scale(xs[2])
    }

    /// Basis matrix E with the tetrad as columns. E is itself a proper
    /// orthochronous Lorentz matrix mapping e0 -> u.
    pub fn basis_matrix(&self) -> Mat4 {
        let mut e = Mat4::ZERO;
        for (col, f) in self.basis.iter().enumerate() {
            let a = f.as_array();
            for row in 0..4 {
                e.0[row][col] = a[row];
            }
        }
        e
    }

    /// Matrix of `L` in this frame: E^{-1} L E with E^{-1} = eta E^T eta.
    pub fn matrix_in_frame(&self, l: &LorentzTransform) -> Mat4 {
        let e = self.basis_matrix();
        let e_inv = ETA.mul(&e.transpose()).mul(&ETA);
        e_inv.mul(l.matrix()).mul(&e)
    }

    /// Inverse of [`ObserverFrame::matrix_in_frame`]: lifts a rest-frame
    /// matrix back to a frame-free transform.
    pub fn transform_from_frame(&self, frame_matrix: &Mat4, tol: f64) -> Result<LorentzTransform> {
        let e = self.basis_matrix();
        let e_inv = ETA.mul(&e.transpose()).mul(&ETA);
        LorentzTransform::try_new(e.mul(frame_matrix).mul(&e_inv), tol)
    }
}

/// Rest-frame components of `x` for observer `u`: (x0, spatial triple).
/// The spatial triad is the deterministic Gram-Schmidt completion of u.
pub fn frame_components(u: &FourVector, x: &FourVector) -> Result<(f64, [f64; 3])> {
    Ok(ObserverFrame::new(u)?.components(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use approx::assert_abs_diff_eq;

    #[test]
    fn rest_observer_frame_is_standard_basis() {
        let f = ObserverFrame::new(&FourVector::E0).unwrap();
        assert!(f.basis_matrix().max_diff(&Mat4::IDENTITY) < 1e-15);
        let (x0, xs) = f.components(&FourVector::new(1.0, 2.0, 3.0, 4.0));
        assert_abs_diff_eq!(x0, 1.0);
        assert_abs_diff_eq!(xs[0], 2.0);
        assert_abs_diff_eq!(xs[1], 3.0);
        assert_abs_diff_eq!(xs[2], 4.0);
    }

    #[test]
    fn observer_has_unit_components() {
        let u = FourVector::new(2.0, 0.9, -0.4, 0.3);
        let f = ObserverFrame::new(&u).unwrap();
        let (x0, xs) = f.components(f.observer());
        assert_abs_diff_eq!(x0, 1.0, epsilon = 1e-13);
        assert!(xs.iter().all(|c| c.abs() < 1e-13));
    }

    #[test]
    fn frame_preserves_eta() {
        let u = FourVector::new(3.0, 1.0, -2.0, 0.5);
        let f = ObserverFrame::new(&u).unwrap();
        let x = FourVector::new(0.3, -1.7, 2.2, 0.9);
        let (x0, xs) = f.components(&x);
        let q = -x0 * x0 + xs[0] * xs[0] + xs[1] * xs[1] + xs[2] * xs[2];
        assert_abs_diff_eq!(q, eta_inner(&x, &x), epsilon = 1e-12);
        // Round trip.
        let back = f.from_components(x0, xs);
        assert!((back - x).euclid_norm() < 1e-12);
    }

    #[test]
    fn basis_matrix_is_proper_orthochronous() {
        for u in [
            FourVector::new(1.0, 0.0, 0.0, 0.0),
            FourVector::new(5.0, -3.0, 2.0, 1.0),
            FourVector::new(1.1, 0.0, 0.0, 0.45),
        ] {
            let f = ObserverFrame::new(&u).unwrap();
            let e = LorentzTransform::new(f.basis_matrix()).unwrap();
            assert!(e.det() > 0.0);
            assert!(e.matrix().0[0][0] > 0.0);
        }
    }

    #[test]
    fn rejects_non_timelike_observer() {
        assert!(matches!(
            ObserverFrame::new(&FourVector::E1),
            Err(Error::NotTimelike { .. })
        ));
    }
}
