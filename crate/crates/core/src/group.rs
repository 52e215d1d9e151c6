//! The groups `GL(ℂ×ℂ)` and `SL(ℂ×ℂ)`, their isomorphism with
//! `GL(2,ℝ)`/`SL(2,ℝ)`, and the `±1` cocycle of the projective
//! representation.
//!
//! An element is a pair `(s, t)` with `|s| ≠ |t|`; the product is
//!
//! ```text
//! (s₁, t₁)·(s₂, t₂) = (s₁s₂ + t̄₁t₂, t₁s₂ + s̄₁t₂)
//! ```
//!
//! and `|s|² - |t|²` is multiplicative, so `SL(ℂ×ℂ)` (where it equals one)
//! is a subgroup.

use core::fmt;

use num_complex::Complex64;
use num_traits::Float;

use crate::error::{Error, Result};
use crate::scalar::{principal_sqrt, Sign};

/// Tolerance for group-membership tests.
pub const TOL_GROUP: f64 = 1e-12;

/// A complex pair `(s, t)`.
///
/// [`GroupElement::gl`] and [`GroupElement::sl`] validate membership.
/// [`GroupElement::pair`] builds an unvalidated symbol; the kernels and
/// operators accept those because they only need `s ≠ 0` and `|t| < 2|s|`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GroupElement {
    s: Complex64,
    t: Complex64,
}

impl GroupElement {
    pub const IDENTITY: GroupElement = GroupElement {
        s: Complex64::new(1.0, 0.0),
        t: Complex64::new(0.0, 0.0),
    };

    /// Unvalidated pair.
    pub const fn pair(s: Complex64, t: Complex64) -> Self {
        GroupElement { s, t }
    }

    /// Element of `GL(ℂ×ℂ)`.
    pub fn gl(s: Complex64, t: Complex64) -> Result<Self> {
        let g = GroupElement { s, t };
        g.require_gl()?;
        Ok(g)
    }

    /// Element of `SL(ℂ×ℂ)`.
    pub fn sl(s: Complex64, t: Complex64) -> Result<Self> {
        let g = GroupElement { s, t };
        g.require_sl()?;
        Ok(g)
    }

    /// `(e^{iα}, 0)`, the image of the rotation by `α`.
    pub fn rotation(alpha: f64) -> Self {
        GroupElement::pair(Complex64::from_polar(1.0, alpha), Complex64::new(0.0, 0.0))
    }

    pub fn s(&self) -> Complex64 {
        self.s
    }

    pub fn t(&self) -> Complex64 {
        self.t
    }

    /// `|s|² - |t|²`, the determinant of the corresponding real matrix.
    pub fn det(&self) -> f64 {
        self.s.norm_sqr() - self.t.norm_sqr()
    }

    pub fn is_gl(&self) -> bool {
        Float::abs(self.det()) > TOL_GROUP
    }

    pub fn is_sl(&self) -> bool {
        Float::abs(self.det() - 1.0) <= TOL_GROUP
    }

    pub fn require_gl(&self) -> Result<()> {
        if self.is_gl() && self.is_finite() {
            Ok(())
        } else {
            Err(Error::DegenerateElement { det: self.det() })
        }
    }

    pub fn require_sl(&self) -> Result<()> {
        self.require_gl()?;
        if self.is_sl() {
            Ok(())
        } else {
            Err(Error::NotSpecialLinear {
                excess: self.det() - 1.0,
            })
        }
    }

    fn is_finite(&self) -> bool {
        self.s.is_finite() && self.t.is_finite()
    }

    /// Group product `self · other`.
    pub fn compose(&self, other: &GroupElement) -> Result<GroupElement> {
        self.require_gl()?;
        other.require_gl()?;
        Ok(self.compose_raw(other))
    }

    /// The product formula without membership checks. The kernel
    /// composition law uses it for pairs that only satisfy `|s| > |t|`.
    pub(crate) fn compose_raw(&self, other: &GroupElement) -> GroupElement {
        GroupElement {
            s: self.s * other.s + self.t.conj() * other.t,
            t: self.t * other.s + self.s.conj() * other.t,
        }
    }

    /// `(s̄, -t) / (|s|² - |t|²)`.
    pub fn inverse(&self) -> Result<GroupElement> {
        self.require_gl()?;
        let det = self.det();
        Ok(GroupElement {
            s: self.s.conj() / det,
            t: -self.t / det,
        })
    }

    /// `(s̄, -t)`, the symbol of the adjoint operator.
    pub fn adjoint_symbol(&self) -> GroupElement {
        GroupElement {
            s: self.s.conj(),
            t: -self.t,
        }
    }

    /// Largest componentwise distance to `other`.
    pub fn distance(&self, other: &GroupElement) -> f64 {
        Float::max((self.s - other.s).norm(), (self.t - other.t).norm())
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.s, self.t)
    }
}

/// A real 2×2 matrix `[[a, b], [c, d]]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RealMatrix2 {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

impl RealMatrix2 {
    pub const IDENTITY: RealMatrix2 = RealMatrix2::new(1.0, 0.0, 0.0, 1.0);

    pub const fn new(a: f64, b: f64, c: f64, d: f64) -> Self {
        RealMatrix2 { a, b, c, d }
    }

    /// `[[cos α, sin α], [-sin α, cos α]]`.
    pub fn rotation(alpha: f64) -> Self {
        let (sin, cos) = Float::sin_cos(alpha);
        RealMatrix2::new(cos, sin, -sin, cos)
    }

    /// `[[1/r, 0], [0, r]]`, the scaling `f(x) ↦ √r f(rx)`.
    pub fn dilation(r: f64) -> Self {
        RealMatrix2::new(1.0 / r, 0.0, 0.0, r)
    }

    /// `[[1, b], [0, 1]]`, the Fresnel transform.
    pub fn fresnel(b: f64) -> Self {
        RealMatrix2::new(1.0, b, 0.0, 1.0)
    }

    /// `[[1, 0], [τ, 1]]`, chirp multiplication by `e^{iτx²}`.
    pub fn chirp(tau: f64) -> Self {
        RealMatrix2::new(1.0, 0.0, tau, 1.0)
    }

    pub fn det(&self) -> f64 {
        self.a * self.d - self.b * self.c
    }

    pub fn is_gl(&self) -> bool {
        Float::abs(self.det()) > TOL_GROUP
    }

    pub fn is_sl(&self) -> bool {
        Float::abs(self.det() - 1.0) <= TOL_GROUP
    }

    pub fn mul(&self, rhs: &RealMatrix2) -> RealMatrix2 {
        RealMatrix2::new(
            self.a * rhs.a + self.b * rhs.c,
            self.a * rhs.b + self.b * rhs.d,
            self.c * rhs.a + self.d * rhs.c,
            self.c * rhs.b + self.d * rhs.d,
        )
    }

    pub fn inverse(&self) -> Result<RealMatrix2> {
        let det = self.det();
        if Float::abs(det) <= TOL_GROUP {
            return Err(Error::SingularMatrix { det });
        }
        Ok(RealMatrix2::new(
            self.d / det,
            -self.b / det,
            -self.c / det,
            self.a / det,
        ))
    }

    /// Largest entrywise distance to `other`.
    pub fn distance(&self, other: &RealMatrix2) -> f64 {
        [self.a - other.a, self.b - other.b, self.c - other.c, self.d - other.d]
            .iter()
            .fold(0.0, |m, v| Float::max(m, Float::abs(*v)))
    }
}

/// The isomorphism `GL(2,ℝ) → GL(ℂ×ℂ)`:
/// `((a + d) + i(b - c), (a - d) + i(b + c)) / 2`.
pub fn phi(m: &RealMatrix2) -> Result<GroupElement> {
    let det = m.det();
    if Float::abs(det) <= TOL_GROUP {
        return Err(Error::SingularMatrix { det });
    }
    Ok(GroupElement::pair(
        Complex64::new(0.5 * (m.a + m.d), 0.5 * (m.b - m.c)),
        Complex64::new(0.5 * (m.a - m.d), 0.5 * (m.b + m.c)),
    ))
}

/// Inverse of [`phi`]: `[[Re(s+t), Im(s+t)], [-Im(s-t), Re(s-t)]]`.
pub fn phi_inverse(g: &GroupElement) -> Result<RealMatrix2> {
    g.require_gl()?;
    let sum = g.s + g.t;
    let diff = g.s - g.t;
    Ok(RealMatrix2::new(sum.re, sum.im, -diff.im, diff.re))
}

/// The unimodular factor relating `T^{g₁} T^{g₂}` to `T^{g₁·g₂}`:
///
/// ```text
/// C = √(s₁s₂ + t̄₁t₂) / (√s₁ √s₂) · √(s₁s₂ / (s₁s₂ + t̄₁t₂))
/// ```
///
/// Requires both factors in `SL(ℂ×ℂ)`.
pub fn cocycle(g1: &GroupElement, g2: &GroupElement) -> Result<Sign> {
    g1.require_sl()?;
    g2.require_sl()?;
    composition_sign(g1, g2)
}

/// The cocycle expression evaluated for any pair with nonzero `s₁, s₂`
/// and `s₁s₂ + t̄₁t₂ ≠ 0`; the value is `±1` analytically.
pub(crate) fn composition_sign(g1: &GroupElement, g2: &GroupElement) -> Result<Sign> {
    let prod = g1.s * g2.s;
    let s = prod + g1.t.conj() * g2.t;
    let c = principal_sqrt(s) / (principal_sqrt(g1.s) * principal_sqrt(g2.s)) * principal_sqrt(prod / s);
    Sign::from_unit(c)
}
