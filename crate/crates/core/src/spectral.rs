//! Eigenpairs of the unitary operators `T^(s,t)` with `|Re s| < 1`.
//!
//! With `γ` the root in the unit disk of `s t̄ γ² + (s² - 1 - |t|²) γ - s t = 0`
//! and `κ = s + t̄γ` (unimodular), the functions `Q_n(z) e^{γz²/2}` are
//! eigenvectors with eigenvalues `λ_n = s^{-1/2} √(s/κ) κ^{-n}`, where
//!
//! ```text
//! Q_n(z) = ∫ H_n(x/ρ) exp[-(2/(1+γ)) (x - (1+γ)z/2)²] dx,
//! ρ² = (1+γ)[(s - t̄)κ - 1] / (2(κ² - 1)).
//! ```

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;
use num_traits::Float;

use crate::error::{Error, Result};
use crate::fock::QuadratureRule;
use crate::group::GroupElement;
use crate::hermite::{hermite, hermite_gaussian_integral_poly, Poly};
use crate::kernel::CanonicalKernel;
use crate::lct::BARGMANN_C;
use crate::operator::CanonicalOperator;
use crate::scalar::{principal_sqrt, CompensatedSum};

/// Tolerance on the structural identities `|κ| = 1`, `Im ρ² = 0` and the
/// quadratic residual.
pub const TOL_SPECTRAL: f64 = 1e-10;

/// Largest `k` searched for `κ^k = 1`.
pub const RESONANCE_SEARCH: usize = 64;

/// `γ`, `κ`, `ρ` for a unitary `T^(s,t)` with `|Re s| < 1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectralData {
    g: GroupElement,
    gamma: Complex64,
    kappa: Complex64,
    rho_sq: Complex64,
    lambda0: Complex64,
    resonance: Option<usize>,
}

impl SpectralData {
    pub fn new(g: GroupElement) -> Result<Self> {
        g.require_sl()?;
        let gamma = solve_gamma(&g)?;
        let (s, t) = (g.s(), g.t());
        let kappa = s + t.conj() * gamma;
        let k2m1 = kappa * kappa - 1.0;
        if k2m1.norm() <= TOL_SPECTRAL {
            return Err(Error::DegenerateKappa);
        }
        let rho_sq = (1.0 + gamma) * ((s - t.conj()) * kappa - 1.0) / (2.0 * k2m1);
        if !(rho_sq.re > 0.0) || Float::abs(rho_sq.im) > TOL_SPECTRAL * rho_sq.norm() {
            return Err(Error::BranchFailure {
                re: rho_sq.re,
                im: rho_sq.im,
            });
        }
        let lambda0 = principal_sqrt(s).inv() * principal_sqrt(s / kappa);
        let resonance = (1..=RESONANCE_SEARCH).find(|&k| (kappa.powu(k as u32) - 1.0).norm() <= 1e-12);
        Ok(SpectralData {
            g,
            gamma,
            kappa,
            rho_sq,
            lambda0,
            resonance,
        })
    }

    pub fn params(&self) -> GroupElement {
        self.g
    }

    pub fn gamma(&self) -> Complex64 {
        self.gamma
    }

    /// `κ = s + t̄γ`.
    pub fn kappa(&self) -> Complex64 {
        self.kappa
    }

    /// `ρ² ` as computed; its imaginary part is rounding noise.
    pub fn rho_sq(&self) -> Complex64 {
        self.rho_sq
    }

    pub fn rho(&self) -> f64 {
        Float::sqrt(self.rho_sq.re)
    }

    /// Smallest `k ≤ 64` with `κ^k = 1`, if any. Such `κ` make eigenvalues
    /// repeat with period `k`; the extra eigenvectors are not constructed.
    pub fn resonance(&self) -> Option<usize> {
        self.resonance
    }

    /// `|s t̄ γ² + (s² - 1 - |t|²) γ - s t|`.
    pub fn quadratic_residual(&self) -> f64 {
        let (s, t, g) = (self.g.s(), self.g.t(), self.gamma);
        (s * t.conj() * g * g + (s * s - 1.0 - t.norm_sqr()) * g - s * t).norm()
    }

    /// `λ_n = λ_0 κ^{-n}`.
    pub fn eigenvalue(&self, n: usize) -> Complex64 {
        self.lambda0 * self.kappa.powi(-(n as i32))
    }

    /// `f_n = Q_n e^{γz²/2}`, `Q_n` scaled to leading coefficient one.
    pub fn eigenfunction(&self, n: usize) -> Result<Eigenfunction> {
        let raw = self.raw_q(n)?;
        let lead = raw.leading();
        Ok(Eigenfunction {
            n,
            gamma: self.gamma,
            q: raw.scale(lead.inv()),
            raw_leading: lead,
        })
    }

    /// `Q_n` before normalisation: `ρ^{-n}` times the Hermite–Gaussian
    /// integral with `δ = 1/ρ²`, `μ = 2/(1+γ)`, `a = (1+γ)/2`.
    fn raw_q(&self, n: usize) -> Result<Poly> {
        let rho = self.rho();
        let mu = 2.0 / (1.0 + self.gamma);
        let a = (1.0 + self.gamma) / 2.0;
        let delta = Complex64::new(1.0 / self.rho_sq.re, 0.0);
        Ok(hermite_gaussian_integral_poly(n, delta, mu, a)?.scale(Complex64::new(Float::powi(rho, -(n as i32)), 0.0)))
    }

    /// The preimage of [`SpectralData::eigenfunction`] under the Bargmann
    /// transform: `c · H_n(x/ρ) exp[-((1-γ)/(1+γ)) x²]`, with `c` chosen so
    /// that the Bargmann transform of the result is exactly `f_n`.
    pub fn inverse_bargmann_eigenfunction(&self, n: usize) -> Result<impl Fn(f64) -> Complex64> {
        let h = hermite(n)?;
        let ef = self.eigenfunction(n)?;
        let width = (1.0 - self.gamma) / (1.0 + self.gamma);
        let scale = (ef.raw_leading * BARGMANN_C).inv();
        let rho = self.rho();
        Ok(move |x: f64| scale * h.eval_real(x / rho) * (-width * x * x).exp())
    }

    /// Lower bound for `‖T f_n - λ_n f_n‖ / ‖f_n‖`:
    /// `max_z |T f_n(z) - λ_n f_n(z)| e^{-|z|²/2} / ‖f_n‖`, since
    /// `|g(z)| ≤ ‖g‖ e^{|z|²/2}` on `F²`. `T f_n` and `‖f_n‖` are computed
    /// by quadrature with `rule`.
    pub fn eigen_residual(&self, n: usize, points: &[Complex64], rule: &QuadratureRule) -> Result<f64> {
        let op = CanonicalOperator::new(self.g)?;
        let f = self.eigenfunction(n)?;
        let lambda = self.eigenvalue(n);
        let norm = Float::sqrt(rule.integrate(|z| Complex64::new(f.eval(z).norm_sqr(), 0.0))?.re);
        let mut worst: f64 = 0.0;
        for &z in points {
            let tf = op.apply(|w| f.eval(w), z, rule)?;
            let diff = (tf - lambda * f.eval(z)).norm() * Float::exp(-0.5 * z.norm_sqr());
            worst = worst.max(diff / norm);
        }
        Ok(worst)
    }

    /// `‖T f_n - λ_n f_n‖ / ‖f_n‖` with both norms taken by `outer` and
    /// `T f_n` evaluated at each outer node by `inner`.
    pub fn eigen_residual_norm(&self, n: usize, outer: &QuadratureRule, inner: &QuadratureRule) -> Result<f64> {
        let kernel = CanonicalKernel::new(self.g)?;
        let f = self.eigenfunction(n)?;
        let lambda = self.eigenvalue(n);
        // f(u) W_u does not depend on the outer point
        let weighted: Vec<(Complex64, Complex64)> = inner.planar().iter().map(|&(u, w)| (u, f.eval(u) * w)).collect();
        let mut num = CompensatedSum::new();
        let mut den = CompensatedSum::new();
        for &(z, w) in outer.planar() {
            let mut tf = CompensatedSum::new();
            for &(u, fw) in &weighted {
                tf.add(kernel.eval(z, u) * fw);
            }
            let tf = tf.total();
            if !tf.is_finite() {
                return Err(Error::NonFiniteIntegrand { re: z.re, im: z.im });
            }
            let fz = f.eval(z);
            num.add(Complex64::new((tf - lambda * fz).norm_sqr() * w, 0.0));
            den.add(Complex64::new(fz.norm_sqr() * w, 0.0));
        }
        Ok(Float::sqrt(num.total().re / den.total().re))
    }
}

/// `Q_n(z) e^{γz²/2}`.
#[derive(Clone, Debug, PartialEq)]
pub struct Eigenfunction {
    pub n: usize,
    pub gamma: Complex64,
    /// `Q_n`, monic.
    pub q: Poly,
    raw_leading: Complex64,
}

impl Eigenfunction {
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.q.eval(z) * (0.5 * self.gamma * z * z).exp()
    }
}

/// The root of `s t̄ γ² + (s² - 1 - |t|²) γ - s t = 0` in the unit disk:
/// `γ = i(-y + sgn(y)√(1-x²))/t̄` for `s = x + iy`, and `γ = 0` when `t = 0`.
///
/// On `SL(ℂ×ℂ)` with `t ≠ 0` and `|x| < 1`, `y = 0` would force
/// `|s| ≤ 1 < |s|`, so `sgn(0)` never arises; an exactly zero `y` is
/// reported as [`Error::NoDiskSolution`].
pub fn solve_gamma(g: &GroupElement) -> Result<Complex64> {
    g.require_sl()?;
    let (s, t) = (g.s(), g.t());
    let (x, y) = (s.re, s.im);
    if !(Float::abs(x) < 1.0) {
        return Err(Error::NoDiskSolution { re_s: x });
    }
    if t.norm() == 0.0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    if y == 0.0 {
        return Err(Error::NoDiskSolution { re_s: x });
    }
    let sgn = if y > 0.0 { 1.0 } else { -1.0 };
    Ok(Complex64::new(0.0, -y + sgn * Float::sqrt(1.0 - x * x)) / t.conj())
}

/// `λ_n` for `(s,t)`.
pub fn eigenvalue(g: &GroupElement, n: usize) -> Result<Complex64> {
    Ok(SpectralData::new(*g)?.eigenvalue(n))
}

/// `ρ` for `(s,t)`.
pub fn rho(g: &GroupElement) -> Result<f64> {
    Ok(SpectralData::new(*g)?.rho())
}

/// Deterministic sample points in the disk `|z| ≤ radius`.
pub fn disk_points(count: usize, radius: f64) -> alloc::vec::Vec<Complex64> {
    (0..count)
        .map(|j| {
            let r = radius * Float::sqrt((j as f64 + 0.5) / count as f64);
            Complex64::from_polar(r, 2.0 * PI * 0.618_033_988_749_895 * j as f64)
        })
        .collect()
}
