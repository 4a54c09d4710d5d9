//! Quaternion algebra and slice decomposition.
//!
//! A quaternion `q = x0 + x1 i + x2 j + x3 k` that is not real splits
//! uniquely as `q = x + I y` with `y > 0` and `I` a unit imaginary
//! quaternion; the plane `R + R I` is the slice through `I`. Everything
//! here is plain immutable data and pure functions.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Validation tolerance for imaginary-unit invariants.
const UNIT_TOL: f64 = 1e-12;

/// Element of the quaternions over the basis `{1, i, j, k}`.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct Quaternion {
    pub x0: f64,
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
}

impl Quaternion {
    pub const ZERO: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Quaternion = Quaternion::new(1.0, 0.0, 0.0, 0.0);

    #[inline]
    pub const fn new(x0: f64, x1: f64, x2: f64, x3: f64) -> Self {
        Self { x0, x1, x2, x3 }
    }

    #[inline]
    pub const fn from_real(x: f64) -> Self {
        Self::new(x, 0.0, 0.0, 0.0)
    }

    /// Real part `Re(q)`.
    #[inline]
    pub fn re(&self) -> f64 {
        self.x0
    }

    /// Imaginary part `Im(q)` as a quaternion with zero real part.
    #[inline]
    pub fn im(&self) -> Quaternion {
        Quaternion::new(0.0, self.x1, self.x2, self.x3)
    }

    /// Conjugate `Re(q) - Im(q)`.
    #[inline]
    pub fn conj(&self) -> Quaternion {
        Quaternion::new(self.x0, -self.x1, -self.x2, -self.x3)
    }

    #[inline]
    pub fn norm_sqr(&self) -> f64 {
        self.x0 * self.x0 + self.x1 * self.x1 + self.x2 * self.x2 + self.x3 * self.x3
    }

    /// Modulus `sqrt(x0^2 + x1^2 + x2^2 + x3^2)`.
    #[inline]
    pub fn modulus(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// Euclidean norm of the imaginary part.
    #[inline]
    pub fn im_norm(&self) -> f64 {
        (self.x1 * self.x1 + self.x2 * self.x2 + self.x3 * self.x3).sqrt()
    }

    /// Euclidean inner product of the components.
    #[inline]
    pub fn dot(&self, other: &Quaternion) -> f64 {
        self.x0 * other.x0 + self.x1 * other.x1 + self.x2 * other.x2 + self.x3 * other.x3
    }

    #[inline]
    pub fn is_finite(&self) -> bool {
        self.x0.is_finite() && self.x1.is_finite() && self.x2.is_finite() && self.x3.is_finite()
    }

    /// `q^n` by repeated multiplication.
    pub fn powu(&self, n: u32) -> Quaternion {
        let mut out = Quaternion::ONE;
        for _ in 0..n {
            out = out * *self;
        }
        out
    }

    /// Slice decomposition `q = x + I y` with `y = |Im q| > 0`.
    ///
    /// Real quaternions carry no preferred unit and yield
    /// [`Error::RealQuaternion`]; callers must supply one explicitly.
    pub fn slice_coords(&self) -> Result<SliceCoords> {
        let y = self.im_norm();
        if y == 0.0 {
            return Err(Error::RealQuaternion);
        }
        let unit = ImaginaryUnit(Quaternion::new(
            0.0,
            self.x1 / y,
            self.x2 / y,
            self.x3 / y,
        ));
        Ok(SliceCoords {
            x: self.x0,
            y,
            unit,
        })
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    #[inline]
    fn add(self, rhs: Quaternion) -> Quaternion {
        Quaternion::new(
            self.x0 + rhs.x0,
            self.x1 + rhs.x1,
            self.x2 + rhs.x2,
            self.x3 + rhs.x3,
        )
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    #[inline]
    fn sub(self, rhs: Quaternion) -> Quaternion {
        Quaternion::new(
            self.x0 - rhs.x0,
            self.x1 - rhs.x1,
            self.x2 - rhs.x2,
            self.x3 - rhs.x3,
        )
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    #[inline]
    fn neg(self) -> Quaternion {
        Quaternion::new(-self.x0, -self.x1, -self.x2, -self.x3)
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;
    #[inline]
    fn mul(self, rhs: Quaternion) -> Quaternion {
        let (a0, a1, a2, a3) = (self.x0, self.x1, self.x2, self.x3);
        let (b0, b1, b2, b3) = (rhs.x0, rhs.x1, rhs.x2, rhs.x3);
        Quaternion::new(
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        )
    }
}

impl Mul<f64> for Quaternion {
    type Output = Quaternion;
    #[inline]
    fn mul(self, rhs: f64) -> Quaternion {
        Quaternion::new(self.x0 * rhs, self.x1 * rhs, self.x2 * rhs, self.x3 * rhs)
    }
}

impl Mul<Quaternion> for f64 {
    type Output = Quaternion;
    #[inline]
    fn mul(self, rhs: Quaternion) -> Quaternion {
        rhs * self
    }
}

impl Div<f64> for Quaternion {
    type Output = Quaternion;
    #[inline]
    fn div(self, rhs: f64) -> Quaternion {
        Quaternion::new(self.x0 / rhs, self.x1 / rhs, self.x2 / rhs, self.x3 / rhs)
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}i + {}j + {}k", self.x0, self.x1, self.x2, self.x3)
    }
}

impl Serialize for Quaternion {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        [self.x0, self.x1, self.x2, self.x3].serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Quaternion {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let [x0, x1, x2, x3] = <[f64; 4]>::deserialize(deserializer)?;
        Ok(Quaternion::new(x0, x1, x2, x3))
    }
}

/// Unit purely imaginary quaternion; parameterizes a slice.
///
/// Construction validates `Re = 0`, `|u| = 1`, and `u^2 = -1` to 1e-12.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ImaginaryUnit(Quaternion);

impl ImaginaryUnit {
    pub const I: ImaginaryUnit = ImaginaryUnit(Quaternion::new(0.0, 1.0, 0.0, 0.0));
    pub const J: ImaginaryUnit = ImaginaryUnit(Quaternion::new(0.0, 0.0, 1.0, 0.0));
    pub const K: ImaginaryUnit = ImaginaryUnit(Quaternion::new(0.0, 0.0, 0.0, 1.0));

    pub fn new(q: Quaternion) -> Result<Self> {
        if !q.is_finite() {
            return Err(Error::InvalidImaginaryUnit {
                reason: "components not finite",
            });
        }
        if q.x0.abs() > UNIT_TOL {
            return Err(Error::InvalidImaginaryUnit {
                reason: "real part not zero",
            });
        }
        if (q.modulus() - 1.0).abs() > UNIT_TOL {
            return Err(Error::InvalidImaginaryUnit {
                reason: "modulus not one",
            });
        }
        let sq = q * q;
        if (sq + Quaternion::ONE).modulus() > UNIT_TOL {
            return Err(Error::InvalidImaginaryUnit {
                reason: "square not -1",
            });
        }
        Ok(ImaginaryUnit(Quaternion::new(0.0, q.x1, q.x2, q.x3)))
    }

    /// Unit in the direction `(x1, x2, x3)`, normalized for the caller.
    pub fn from_imag(x1: f64, x2: f64, x3: f64) -> Result<Self> {
        let n = (x1 * x1 + x2 * x2 + x3 * x3).sqrt();
        if n == 0.0 || !n.is_finite() {
            return Err(Error::InvalidImaginaryUnit {
                reason: "zero or non-finite direction",
            });
        }
        Ok(ImaginaryUnit(Quaternion::new(0.0, x1 / n, x2 / n, x3 / n)))
    }

    #[inline]
    pub fn as_quaternion(&self) -> Quaternion {
        self.0
    }

    /// Point `x + I y` of the slice through this unit.
    #[inline]
    pub fn embed(&self, x: f64, y: f64) -> Quaternion {
        Quaternion::new(x, self.0.x1 * y, self.0.x2 * y, self.0.x3 * y)
    }

    /// Dot product of the imaginary parts as vectors in R^3.
    #[inline]
    pub fn imag_dot(&self, other: &ImaginaryUnit) -> f64 {
        self.0.x1 * other.0.x1 + self.0.x2 * other.0.x2 + self.0.x3 * other.0.x3
    }

    /// Deterministic unit orthogonal to this one.
    ///
    /// Gram-Schmidt applied to the first of `(i, j, k)` whose dot with
    /// this unit stays below 0.9 in absolute value, which keeps the
    /// projection step well-conditioned.
    pub fn orthogonal(&self) -> ImaginaryUnit {
        let u = [self.0.x1, self.0.x2, self.0.x3];
        for basis in [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]] {
            let d = basis[0] * u[0] + basis[1] * u[1] + basis[2] * u[2];
            if d.abs() < 0.9 {
                let v = [basis[0] - d * u[0], basis[1] - d * u[1], basis[2] - d * u[2]];
                let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
                return ImaginaryUnit(Quaternion::new(0.0, v[0] / n, v[1] / n, v[2] / n));
            }
        }
        // |u| = 1 guarantees at least one basis dot below 0.9 in
        // absolute value (all three cannot exceed it simultaneously).
        unreachable!("a unit vector cannot be near-parallel to every basis axis")
    }
}

impl Neg for ImaginaryUnit {
    type Output = ImaginaryUnit;
    #[inline]
    fn neg(self) -> ImaginaryUnit {
        ImaginaryUnit(-self.0)
    }
}

impl fmt::Display for ImaginaryUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Slice coordinates `(x, y, unit)` of a non-real quaternion.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SliceCoords {
    pub x: f64,
    pub y: f64,
    pub unit: ImaginaryUnit,
}

impl SliceCoords {
    /// Reconstruct the source quaternion `x + I y`.
    #[inline]
    pub fn embed(&self) -> Quaternion {
        self.unit.embed(self.x, self.y)
    }
}
