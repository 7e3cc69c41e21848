//! General 4x4 Lorentz operators: composition, application, eta-orthogonality
//! validation, and classification into the four group components.

use crate::error::{Error, Result};
use crate::matrix::{Mat4, ETA};
use crate::minkowski::FourVector;

/// Default absolute tolerance on |m^T eta m - eta| accepted at construction.
/// Loose enough to absorb products of up to ~8 reflection factors.
pub const DEFAULT_VALIDATION_TOL: f64 = 1e-9;

/// A validated Lorentz transformation, stored as an explicit matrix.
/// Row index = output component, column = input; time index 0.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LorentzTransform {
    m: Mat4,
    tol: f64,
}

/// The four connected components of the Lorentz group, determined by
/// (sign det m, sign m[0][0]).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LorentzComponent {
    /// det > 0, m[0][0] > 0.
    ProperOrthochronous,
    /// det < 0, m[0][0] > 0.
    ImproperOrthochronous,
    /// det < 0, m[0][0] < 0.
    ImproperAntichronous,
    /// det > 0, m[0][0] < 0.
    ProperAntichronous,
}

impl LorentzComponent {
    pub fn name(self) -> &'static str {
        match self {
            LorentzComponent::ProperOrthochronous => "proper_orthochronous",
            LorentzComponent::ImproperOrthochronous => "improper_orthochronous",
            LorentzComponent::ImproperAntichronous => "improper_antichronous",
            LorentzComponent::ProperAntichronous => "proper_antichronous",
        }
    }

    pub fn is_proper(self) -> bool {
        matches!(
            self,
            LorentzComponent::ProperOrthochronous | LorentzComponent::ProperAntichronous
        )
    }

    pub fn is_orthochronous(self) -> bool {
        matches!(
            self,
            LorentzComponent::ProperOrthochronous | LorentzComponent::ImproperOrthochronous
        )
    }
}

/// True iff |m^T eta m - eta| <= tol in the entrywise max norm.
pub fn is_lorentz(m: &Mat4, tol: f64) -> bool {
    m.is_finite() && eta_residual_of(m) <= tol
}

/// The eta-orthogonality residual |m^T eta m - eta|.
pub fn eta_residual_of(m: &Mat4) -> f64 {
    m.transpose().mul(&ETA).mul(m).max_diff(&ETA)
}

impl LorentzTransform {
    /// Validates eta-orthogonality of `m` to `tol` and wraps it.
    pub fn try_new(m: Mat4, tol: f64) -> Result<LorentzTransform> {
        if !m.is_finite() {
            return Err(Error::NonFinite);
        }
        let residual = eta_residual_of(&m);
        if residual <= tol {
            Ok(LorentzTransform { m, tol })
        } else {
            Err(Error::ValidationFailure { residual, tolerance: tol })
        }
    }

    /// Validates with the default tolerance.
    pub fn new(m: Mat4) -> Result<LorentzTransform> {
        LorentzTransform::try_new(m, DEFAULT_VALIDATION_TOL)
    }

    pub fn identity() -> LorentzTransform {
        LorentzTransform { m: Mat4::IDENTITY, tol: DEFAULT_VALIDATION_TOL }
    }

    pub fn matrix(&self) -> &Mat4 {
        &self.m
    }

    pub fn validation_tol(&self) -> f64 {
        self.tol
    }

    /// The residual |m^T eta m - eta| of the stored matrix.
    pub fn eta_residual(&self) -> f64 {
        eta_residual_of(&self.m)
    }

    pub fn det(&self) -> f64 {
        self.m.det()
    }

    /// Matrix-vector application.
    pub fn apply(&self, x: &FourVector) -> FourVector {
        FourVector::from_array(self.m.mul_vec(x.as_array()))
    }

    /// The group inverse eta m^T eta. This is exact for the stored matrix
    /// (only transposition and sign flips), so no revalidation is performed.
    pub fn inverse(&self) -> LorentzTransform {
        LorentzTransform { m: ETA.mul(&self.m.transpose()).mul(&ETA), tol: self.tol }
    }

    /// Classifies by (sign det, sign m[0][0]). For a valid Lorentz matrix
    /// |m[0][0]| >= 1, so the signs are well separated from zero.
    pub fn classify_component(&self) -> LorentzComponent {
        let proper = self.det() > 0.0;
        let orthochronous = self.m.0[0][0] > 0.0;
        match (proper, orthochronous) {
            (true, true) => LorentzComponent::ProperOrthochronous,
            (false, true) => LorentzComponent::ImproperOrthochronous,
            (false, false) => LorentzComponent::ImproperAntichronous,
            (true, false) => LorentzComponent::ProperAntichronous,
        }
    }
}

/// Matrix product A B (B acts first), revalidated at the looser of the two
/// stored tolerances.
pub fn compose(a: &LorentzTransform, b: &LorentzTransform) -> Result<LorentzTransform> {
    LorentzTransform::try_new(a.m.mul(&b.m), a.tol.max(b.tol))
}
