//! Scalar arithmetic for the noncommutative division algebra of quaternions.
//!
//! A quaternion is written `re + i·i + j·j + k·k` with the unit table
//! `i² = j² = k² = -1`, `ij = -ji = k`, `jk = -kj = i`, `ki = -ik = j`.
//! Multiplication is associative and distributive but not commutative.

use crate::error::{Error, Result};
use num_complex::Complex64;
use std::ops::{Add, Mul, Neg, Sub};

/// Modulus below which a quaternion is treated as zero when inverting,
/// so that `1/|q|²` cannot overflow.
pub const INVERSE_ZERO_THRESHOLD: f64 = 1e-300;

/// A quaternion with four double-precision components.
///
/// All public constructors reject non-finite components. Values are
/// immutable and `Copy`; they can be shared freely across threads.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Quaternion {
    /// Coefficient of 1.
    pub re: f64,
    /// Coefficient of the unit i.
    pub i: f64,
    /// Coefficient of the unit j.
    pub j: f64,
    /// Coefficient of the unit k.
    pub k: f64,
}

pub const ZERO: Quaternion = Quaternion { re: 0.0, i: 0.0, j: 0.0, k: 0.0 };
pub const ONE: Quaternion = Quaternion { re: 1.0, i: 0.0, j: 0.0, k: 0.0 };
pub const I: Quaternion = Quaternion { re: 0.0, i: 1.0, j: 0.0, k: 0.0 };
pub const J: Quaternion = Quaternion { re: 0.0, i: 0.0, j: 1.0, k: 0.0 };
pub const K: Quaternion = Quaternion { re: 0.0, i: 0.0, j: 0.0, k: 1.0 };

impl Quaternion {
    pub const ZERO: Quaternion = ZERO;
    pub const ONE: Quaternion = ONE;
    pub const I: Quaternion = I;
    pub const J: Quaternion = J;
    pub const K: Quaternion = K;

    /// Builds `re + i·i + j·j + k·k`.
    ///
    /// Panics if any component is NaN or infinite.
    pub fn new(re: f64, i: f64, j: f64, k: f64) -> Self {
        let q = Quaternion { re, i, j, k };
        assert!(q.is_finite(), "quaternion components must be finite: {q:?}");
        q
    }

    /// Embeds a real number.
    pub fn real(re: f64) -> Self {
        Self::new(re, 0.0, 0.0, 0.0)
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.i.is_finite() && self.j.is_finite() && self.k.is_finite()
    }

    /// `q̄`: real part kept, imaginary part negated.
    ///
    /// Satisfies `conjugate(conjugate(q)) = q` and
    /// `conjugate(p·q) = conjugate(q)·conjugate(p)`.
    pub fn conjugate(&self) -> Self {
        Quaternion { re: self.re, i: -self.i, j: -self.j, k: -self.k }
    }

    /// `|q| = sqrt(re² + i² + j² + k²)`.
    pub fn modulus(&self) -> f64 {
        self.modulus_sq().sqrt()
    }

    /// `|q|²`, i.e. the real part of `q·q̄`.
    pub fn modulus_sq(&self) -> f64 {
        self.re * self.re + self.i * self.i + self.j * self.j + self.k * self.k
    }

    /// The unique two-sided inverse `q⁻¹ = q̄ / |q|²`.
    ///
    /// Fails with [`Error::ZeroDivisor`] when `|q|` is below
    /// [`INVERSE_ZERO_THRESHOLD`].
    pub fn inverse(&self) -> Result<Self> {
        let m = self.modulus();
        if m < INVERSE_ZERO_THRESHOLD {
            return Err(Error::ZeroDivisor);
        }
        let s = 1.0 / (m * m);
        let c = self.conjugate();
        Ok(Quaternion { re: c.re * s, i: c.i * s, j: c.j * s, k: c.k * s })
    }

    /// Splits `q = α + β·j` into the complex pair `(α, β)` with
    /// `α = re + i·i` and `β = j + k·i`.
    pub fn to_complex_pair(&self) -> (Complex64, Complex64) {
        (Complex64::new(self.re, self.i), Complex64::new(self.j, self.k))
    }

    /// Inverse of [`to_complex_pair`](Self::to_complex_pair); exact.
    pub fn from_complex_pair(alpha: Complex64, beta: Complex64) -> Self {
        Quaternion { re: alpha.re, i: alpha.im, j: beta.re, k: beta.im }
    }

    /// Componentwise comparison with a caller-supplied absolute tolerance.
    pub fn approx_eq(&self, other: &Quaternion, tol: f64) -> bool {
        (self.re - other.re).abs() <= tol
            && (self.i - other.i).abs() <= tol
            && (self.j - other.j).abs() <= tol
            && (self.k - other.k).abs() <= tol
    }

    /// Right multiplication by a real scalar (reals commute with quaternions).
    pub fn scale(&self, s: f64) -> Self {
        Quaternion { re: self.re * s, i: self.i * s, j: self.j * s, k: self.k * s }
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, rhs: Quaternion) -> Quaternion {
        Quaternion {
            re: self.re + rhs.re,
            i: self.i + rhs.i,
            j: self.j + rhs.j,
            k: self.k + rhs.k,
        }
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, rhs: Quaternion) -> Quaternion {
        Quaternion {
            re: self.re - rhs.re,
            i: self.i - rhs.i,
            j: self.j - rhs.j,
            k: self.k - rhs.k,
        }
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion { re: -self.re, i: -self.i, j: -self.j, k: -self.k }
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;

    /// Hamilton product in the order `self · rhs`.
    fn mul(self, rhs: Quaternion) -> Quaternion {
        let (a0, a1, a2, a3) = (self.re, self.i, self.j, self.k);
        let (b0, b1, b2, b3) = (rhs.re, rhs.i, rhs.j, rhs.k);
        Quaternion {
            re: a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            i: a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            j: a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            k: a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        }
    }
}
