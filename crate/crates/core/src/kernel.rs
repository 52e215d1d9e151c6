//! The kernels `K^(s,t)(z, w) = s^{-1/2} exp[(tz² - conj(tw²) + 2zw̄)/(2s)]`.

use num_complex::Complex64;
use num_traits::Float;

use crate::error::{Error, Result};
use crate::group::{composition_sign, GroupElement};
use crate::scalar::{principal_sqrt, Sign};

/// A kernel `K^(s,t)`, valid for `s ≠ 0` and `|t| < 2|s|`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CanonicalKernel {
    g: GroupElement,
    inv_sqrt_s: Complex64,
}

impl CanonicalKernel {
    pub fn new(g: GroupElement) -> Result<Self> {
        let (s, t) = (g.s(), g.t());
        if s.norm() == 0.0 {
            return Err(Error::ZeroS);
        }
        if !(t.norm() < 2.0 * s.norm()) {
            return Err(Error::DomainViolation {
                s_abs: s.norm(),
                t_abs: t.norm(),
            });
        }
        Ok(CanonicalKernel {
            g,
            inv_sqrt_s: principal_sqrt(s).inv(),
        })
    }

    pub fn params(&self) -> GroupElement {
        self.g
    }

    /// `K^(s,t)(z, w)`.
    pub fn eval(&self, z: Complex64, w: Complex64) -> Complex64 {
        self.inv_sqrt_s * self.exponent(z, w).exp()
    }

    /// `(tz² - conj(tw²) + 2zw̄)/(2s)`.
    pub fn exponent(&self, z: Complex64, w: Complex64) -> Complex64 {
        let (s, t) = (self.g.s(), self.g.t());
        (t * z * z - (t * w * w).conj() + 2.0 * z * w.conj()) / (2.0 * s)
    }

    /// `K_w^(s,t) = K^(s,t)(·, w)`.
    pub fn at(&self, w: Complex64) -> impl Fn(Complex64) -> Complex64 + '_ {
        move |z| self.eval(z, w)
    }

    /// The sign `c = √s̄ / conj(√s)` with `conj K^(s,t)(z,w) = c K^(s̄,-t)(w,z)`.
    ///
    /// The value is computed, not looked up; it comes out `-1` exactly on
    /// the negative reals, where `√s̄ = √s` sits on the upper side of the cut.
    pub fn sign(&self) -> Result<Sign> {
        conjugation_sign(self.g.s())
    }

    /// `|s| > |t|`, i.e. every `K_w^(s,t)` lies in `F²`.
    pub fn in_fock(&self) -> bool {
        in_fock(&self.g)
    }

    /// `‖K_w^(s,t)‖`, closed form.
    pub fn norm(&self, w: Complex64) -> Result<f64> {
        Ok(Float::exp(self.ln_norm(w)?))
    }

    /// `ln ‖K_w^(s,t)‖`:
    /// `-¼ ln D + |w|²/(2D) + Re[q w²]`, `D = |s|²-|t|²`,
    /// `q = t(|t|²+1-|s|²)/(2s̄D)`.
    pub fn ln_norm(&self, w: Complex64) -> Result<f64> {
        self.require_in_fock()?;
        let d = self.g.det();
        Ok(-0.25 * Float::ln(d) + w.norm_sqr() / (2.0 * d) + (self.norm_quadratic_coeff() * w * w).re)
    }

    fn norm_quadratic_coeff(&self) -> Complex64 {
        let (s, t) = (self.g.s(), self.g.t());
        let d = self.g.det();
        t * (t.norm_sqr() + 1.0 - s.norm_sqr()) / (2.0 * s.conj() * d)
    }

    /// `ln(‖K_u^(s,t)‖ / ‖K_u‖)` along the ray `u = r e^{iθ*}` on which
    /// `Re[q u²] = |q| r²`, together with `θ*`.
    ///
    /// The exponent is `(1/(2D) + |q| - 1/2) r² - ¼ ln D`; it grows without
    /// bound when `D < 1`, which is how unboundedness shows up numerically.
    pub fn growth_along_ray(&self, r: f64) -> Result<(f64, f64)> {
        self.require_in_fock()?;
        let q = self.norm_quadratic_coeff();
        let theta = if q.norm() == 0.0 { 0.0 } else { -0.5 * q.arg() };
        let u = Complex64::from_polar(r, theta);
        Ok((self.ln_norm(u)? - 0.5 * r * r, theta))
    }

    fn require_in_fock(&self) -> Result<()> {
        if self.in_fock() {
            Ok(())
        } else {
            Err(Error::NotInFock {
                s_abs: self.g.s().norm(),
                t_abs: self.g.t().norm(),
            })
        }
    }
}

/// `|s| > |t|`.
pub fn in_fock(g: &GroupElement) -> bool {
    g.s().norm() > g.t().norm()
}

/// `√s̄ / conj(√s)`, snapped to `±1`.
pub fn conjugation_sign(s: Complex64) -> Result<Sign> {
    if s.norm() == 0.0 {
        return Err(Error::ZeroS);
    }
    Sign::from_unit(principal_sqrt(s.conj()) / principal_sqrt(s).conj())
}

/// The closed form of `∫ K^(s₁,t₁)(z,w) K^(s₂,t₂)(w,u) dλ(w)`:
/// `c · K^(s,t)(z,u) · exp[α z² - β ū²]` with `(s,t) = (s₁,t₁)·(s₂,t₂)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct KernelComposition {
    pub product: GroupElement,
    pub sign: Sign,
    /// `α = t₂(|t₁|²+1-|s₁|²) / (2s₁s)`.
    pub z2_coeff: Complex64,
    /// `β = t̄₁(|t₂|²+1-|s₂|²) / (2s₂s)`.
    pub ubar2_coeff: Complex64,
}

impl KernelComposition {
    /// `exp[α z² - β ū²]`; identically one when both factors are in `SL(ℂ×ℂ)`.
    pub fn extra_factor(&self, z: Complex64, u: Complex64) -> Complex64 {
        (self.z2_coeff * z * z - self.ubar2_coeff * u.conj() * u.conj()).exp()
    }

    pub fn eval(&self, z: Complex64, u: Complex64) -> Result<Complex64> {
        let k = CanonicalKernel::new(self.product)?;
        Ok(self.sign.complex() * k.eval(z, u) * self.extra_factor(z, u))
    }
}

/// Composition law for two kernels with `|sₖ| > |tₖ|`.
pub fn kernel_compose(g1: &GroupElement, g2: &GroupElement) -> Result<KernelComposition> {
    for g in [g1, g2] {
        if g.s().norm() == 0.0 {
            return Err(Error::ZeroS);
        }
        if !in_fock(g) {
            return Err(Error::NotInFock {
                s_abs: g.s().norm(),
                t_abs: g.t().norm(),
            });
        }
    }
    let product = g1.compose_raw(g2);
    let s = product.s();
    let sign = composition_sign(g1, g2)?;
    let excess1 = g1.t().norm_sqr() + 1.0 - g1.s().norm_sqr();
    let excess2 = g2.t().norm_sqr() + 1.0 - g2.s().norm_sqr();
    Ok(KernelComposition {
        product,
        sign,
        z2_coeff: g2.t() * excess1 / (2.0 * g1.s() * s),
        ubar2_coeff: g1.t().conj() * excess2 / (2.0 * g2.s() * s),
    })
}
