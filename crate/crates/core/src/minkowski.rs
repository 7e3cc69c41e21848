//! Minkowski 4-vectors, the metric of signature (-+++), and causal
//! classification. Everything else in the crate builds on this module.
//!
//! Components are ordered (t, x, y, z), time first, and the speed of light
//! is 1 throughout.

use crate::error::{Error, Result};

/// Default relative tolerance of the lightlike test: a vector counts as null
/// when |eta(x,x)| <= tol * |x|^2 with |.| the Euclidean 4-norm.
pub const DEFAULT_TOL: f64 = 1e-10;

/// Components of the metric diag(-1, +1, +1, +1).
pub const METRIC_SIGNATURE: [f64; 4] = [-1.0, 1.0, 1.0, 1.0];

/// A real 4-vector with time component first. All components are finite;
/// construction rejects NaN and infinity.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FourVector {
    pub t: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

/// Causal type of a 4-vector under the tolerance policy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CausalClass {
    TimelikeFuture,
    TimelikePast,
    LightlikeFuture,
    LightlikePast,
    Spacelike,
    Zero,
}

impl CausalClass {
    pub fn is_timelike(self) -> bool {
        matches!(self, CausalClass::TimelikeFuture | CausalClass::TimelikePast)
    }

    pub fn is_lightlike(self) -> bool {
        matches!(self, CausalClass::LightlikeFuture | CausalClass::LightlikePast)
    }

    /// Timelike or lightlike (non-spacelike, nonzero).
    pub fn is_causal(self) -> bool {
        self.is_timelike() || self.is_lightlike()
    }

    pub fn is_future(self) -> bool {
        matches!(self, CausalClass::TimelikeFuture | CausalClass::LightlikeFuture)
    }

    pub fn name(self) -> &'static str {
        match self {
            CausalClass::TimelikeFuture => "timelike_future",
            CausalClass::TimelikePast => "timelike_past",
            CausalClass::LightlikeFuture => "lightlike_future",
            CausalClass::LightlikePast => "lightlike_past",
            CausalClass::Spacelike => "spacelike",
            CausalClass::Zero => "zero",
        }
    }
}

impl FourVector {
    /// Builds a 4-vector; panics if any component is NaN or infinite.
    /// Use [`FourVector::try_new`] at input boundaries.
    pub fn new(t: f64, x: f64, y: f64, z: f64) -> FourVector {
        assert!(
            t.is_finite() && x.is_finite() && y.is_finite() && z.is_finite(),
            "FourVector components must be finite"
        );
        FourVector { t, x, y, z }
    }

    /// Fallible constructor for untrusted input.
    pub fn try_new(t: f64, x: f64, y: f64, z: f64) -> Result<FourVector> {
        if t.is_finite() && x.is_finite() && y.is_finite() && z.is_finite() {
            Ok(FourVector { t, x, y, z })
        } else {
            Err(Error::NonFinite)
        }
    }

    pub const ZERO: FourVector = FourVector { t: 0.0, x: 0.0, y: 0.0, z: 0.0 };
    pub const E0: FourVector = FourVector { t: 1.0, x: 0.0, y: 0.0, z: 0.0 };
    pub const E1: FourVector = FourVector { t: 0.0, x: 1.0, y: 0.0, z: 0.0 };
    pub const E2: FourVector = FourVector { t: 0.0, x: 0.0, y: 1.0, z: 0.0 };
    pub const E3: FourVector = FourVector { t: 0.0, x: 0.0, y: 0.0, z: 1.0 };

    pub fn from_array(a: [f64; 4]) -> FourVector {
        FourVector::new(a[0], a[1], a[2], a[3])
    }

    pub fn try_from_array(a: [f64; 4]) -> Result<FourVector> {
        FourVector::try_new(a[0], a[1], a[2], a[3])
    }

    pub fn as_array(&self) -> [f64; 4] {
        [self.t, self.x, self.y, self.z]
    }

    /// Covector eta x, i.e. the index-lowered components (-t, x, y, z).
    pub fn lowered(&self) -> [f64; 4] {
        [-self.t, self.x, self.y, self.z]
    }

    /// Squared Euclidean 4-norm t^2 + x^2 + y^2 + z^2 (no metric), used by
    /// the tolerance policy and residual scaling.
    pub fn euclid_norm_sq(&self) -> f64 {
        self.t * self.t + self.x * self.x + self.y * self.y + self.z * self.z
    }

    pub fn euclid_norm(&self) -> f64 {
        self.euclid_norm_sq().sqrt()
    }

    /// eta(self, self).
    pub fn eta_norm_sq(&self) -> f64 {
        eta_inner(self, self)
    }

    pub fn scale(&self, s: f64) -> FourVector {
        FourVector::new(s * self.t, s * self.x, s * self.y, s * self.z)
    }

    /// Causal classification with the default tolerance.
    pub fn causal_class(&self) -> CausalClass {
        causal_class(self, DEFAULT_TOL)
    }
}

impl std::ops::Add for FourVector {
    type Output = FourVector;
    fn add(self, rhs: FourVector) -> FourVector {
        FourVector::new(self.t + rhs.t, self.x + rhs.x, self.y + rhs.y, self.z + rhs.z)
    }
}

impl std::ops::Sub for FourVector {
    type Output = FourVector;
    fn sub(self, rhs: FourVector) -> FourVector {
        FourVector::new(self.t - rhs.t, self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }
}

impl std::ops::Neg for FourVector {
    type Output = FourVector;
    fn neg(self) -> FourVector {
        FourVector::new(-self.t, -self.x, -self.y, -self.z)
    }
}

impl std::ops::Mul<FourVector> for f64 {
    type Output = FourVector;
    fn mul(self, v: FourVector) -> FourVector {
        v.scale(self)
    }
}

/// The Minkowski inner product eta(x, y) = -x.t y.t + x.x y.x + x.y y.y + x.z y.z.
pub fn eta_inner(x: &FourVector, y: &FourVector) -> f64 {
    -x.t * y.t + x.x * y.x + x.y * y.y + x.z * y.z
}

/// Classifies `x` by the sign of eta(x,x) relative to `tol * |x|^2` and the
/// sign of its time component. `Zero` means the exact zero vector.
pub fn causal_class(x: &FourVector, tol: f64) -> CausalClass {
    debug_assert!(tol >= 0.0);
    let n2 = x.euclid_norm_sq();
    if n2 == 0.0 {
        return CausalClass::Zero;
    }
    let q = eta_inner(x, x);
    if q.abs() <= tol * n2 {
        if x.t > 0.0 {
            CausalClass::LightlikeFuture
        } else {
            CausalClass::LightlikePast
        }
    } else if q < 0.0 {
        if x.t > 0.0 {
            CausalClass::TimelikeFuture
        } else {
            CausalClass::TimelikePast
        }
    } else {
        CausalClass::Spacelike
    }
}

/// Rescales a timelike vector to unit eta-norm, flipping a past-directed
/// input so the result is future-directed: eta(u,u) = -1 and u.t > 0.
pub fn normalize_timelike(x: &FourVector) -> Result<FourVector> {
    let class = causal_class(x, DEFAULT_TOL);
    if !class.is_timelike() {
        return Err(Error::NotTimelike { eta_norm: eta_inner(x, x) });
    }
    let s = 1.0 / (-eta_inner(x, x)).sqrt();
    let u = x.scale(if x.t > 0.0 { s } else { -s });
    Ok(u)
}
