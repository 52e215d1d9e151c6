//! Hermite polynomials, the `δ`-deformed family
//! `P_k = 2xP_{k-1} - P'_{k-1}/δ`, Gaussian moment integrals and the
//! integral equation
//!
//! ```text
//! ∫ P(x) e^{-μ(x-az)²} dx = C_n ∫ P(x) e^{-ν(x-bz)²} dx,
//! C_n = (√ν/√μ)(a/b)ⁿ,  δ = (b²-a²)μν / (νb² - μa²),
//! ```
//!
//! which the deformed Hermite polynomials solve.

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;
use num_traits::Float;

use crate::error::{Error, Result};
use crate::scalar::{principal_sqrt, CompensatedSum};

/// Largest degree accepted by the generators.
pub const MAX_DEGREE: usize = 64;

/// A polynomial with complex coefficients in ascending degree.
///
/// Trailing zero coefficients are trimmed, so the leading coefficient is
/// nonzero unless the polynomial is zero (stored as an empty list).
#[derive(Clone, Debug, PartialEq)]
pub struct Poly {
    coeffs: Vec<Complex64>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Complex64>) -> Self {
        while coeffs.last().is_some_and(|c| *c == Complex64::new(0.0, 0.0)) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::from_real(&[1.0])
    }

    /// `xⁿ`.
    pub fn monomial(n: usize) -> Self {
        let mut coeffs = alloc::vec![Complex64::new(0.0, 0.0); n + 1];
        coeffs[n] = Complex64::new(1.0, 0.0);
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs.get(k).copied().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Complex64 {
        self.coeffs.last().copied().unwrap_or_default()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * x + c)
    }

    pub fn eval_real(&self, x: f64) -> Complex64 {
        self.eval(Complex64::new(x, 0.0))
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * k as f64)
                .collect(),
        )
    }

    pub fn scale(&self, k: Complex64) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    /// `x · p(x)`.
    pub fn mul_x(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Complex64::new(0.0, 0.0));
        coeffs.extend_from_slice(&self.coeffs);
        Poly { coeffs }
    }

    /// Largest coefficientwise distance.
    pub fn max_diff(&self, other: &Poly) -> f64 {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n).fold(0.0, |m, k| Float::max(m, (self.coeff(k) - other.coeff(k)).norm()))
    }
}

fn guard(n: usize) -> Result<()> {
    if n > MAX_DEGREE {
        Err(Error::OverflowGuard {
            degree: n,
            limit: MAX_DEGREE,
        })
    } else {
        Ok(())
    }
}

fn check_delta(delta: Complex64) -> Result<()> {
    if delta.norm() == 0.0 || !delta.is_finite() {
        Err(Error::ZeroDelta)
    } else {
        Ok(())
    }
}

fn check_re_positive(mu: Complex64) -> Result<()> {
    if mu.re > 0.0 && mu.is_finite() {
        Ok(())
    } else {
        Err(Error::NonPositiveRealPart { re: mu.re })
    }
}

/// Physicists' Hermite polynomial, from `H_n = 2xH_{n-1} - H'_{n-1}`.
pub fn hermite(n: usize) -> Result<Poly> {
    deformed_recursion(n, Complex64::new(1.0, 0.0))
}

/// `P_n(x) = Σ_k (-1)^k 2ⁿ n! / (4^k k! (n-2k)! δ^k) x^{n-2k}` (leading
/// coefficient `2ⁿ`).
pub fn generalized_hermite(n: usize, delta: Complex64) -> Result<Poly> {
    guard(n)?;
    check_delta(delta)?;
    let mut coeffs = alloc::vec![Complex64::new(0.0, 0.0); n + 1];
    let mut term = Complex64::new(Float::powi(2.0, n as i32), 0.0);
    coeffs[n] = term;
    for k in 1..=n / 2 {
        // multiply before dividing so δ = 1 stays exact in integers
        term = -(term * ((n - 2 * k + 2) * (n - 2 * k + 1)) as f64) / (4 * k) as f64 / delta;
        coeffs[n - 2 * k] = term;
    }
    Ok(Poly::new(coeffs))
}

/// The same family from `P_k = 2xP_{k-1} - P'_{k-1}/δ`, `P_0 = 1`.
pub fn generalized_hermite_recursive(n: usize, delta: Complex64) -> Result<Poly> {
    check_delta(delta)?;
    deformed_recursion(n, delta)
}

fn deformed_recursion(n: usize, delta: Complex64) -> Result<Poly> {
    guard(n)?;
    let mut p = Poly::one();
    for _ in 0..n {
        p = p
            .mul_x()
            .scale(Complex64::new(2.0, 0.0))
            .add(&p.derivative().scale(-delta.inv()));
    }
    Ok(p)
}

/// Integer coefficients `I_k` with `P_n = Σ_k I_k δ^{-k} x^{n-2k}`, from the
/// closed form `I_k = (-1)^k 2^{n-2k} n! / (k! (n-2k)!)`.
///
/// Returns [`Error::OverflowGuard`] if an intermediate leaves `i128`.
pub fn deformed_hermite_integers(n: usize) -> Result<Vec<i128>> {
    let overflow = Error::OverflowGuard {
        degree: n,
        limit: MAX_DEGREE,
    };
    guard(n)?;
    let mut out = Vec::with_capacity(n / 2 + 1);
    for k in 0..=n / 2 {
        // n! / (k! (n-2k)!) = C(n, 2k) · (2k)! / k!
        let mut v: i128 = 1;
        for j in 0..2 * k {
            v = v.checked_mul((n - j) as i128).ok_or(overflow.clone())?;
            v /= (j + 1) as i128;
        }
        for j in (k + 1)..=(2 * k) {
            v = v.checked_mul(j as i128).ok_or(overflow.clone())?;
        }
        let p = 1i128.checked_shl((n - 2 * k) as u32).ok_or(overflow.clone())?;
        v = v.checked_mul(p).ok_or(overflow.clone())?;
        out.push(if k % 2 == 0 { v } else { -v });
    }
    Ok(out)
}

/// The same integers from `I_{n,k} = 2 I_{n-1,k} - (n+1-2k) I_{n-1,k-1}`.
pub fn deformed_hermite_integers_recursive(n: usize) -> Result<Vec<i128>> {
    let overflow = Error::OverflowGuard {
        degree: n,
        limit: MAX_DEGREE,
    };
    guard(n)?;
    let mut row: Vec<i128> = alloc::vec![1];
    for m in 1..=n {
        let mut next = alloc::vec![0i128; m / 2 + 1];
        for (k, slot) in next.iter_mut().enumerate() {
            let keep = row.get(k).copied().unwrap_or(0);
            let mut v = keep.checked_mul(2).ok_or(overflow.clone())?;
            if k > 0 {
                let lower = (m + 1 - 2 * k) as i128;
                v = v
                    .checked_sub(lower.checked_mul(row[k - 1]).ok_or(overflow.clone())?)
                    .ok_or(overflow.clone())?;
            }
            *slot = v;
        }
        row = next;
    }
    Ok(row)
}

/// Largest `|(n-2k)! c_{2k} + 2δ(2k+2)(n-2k-2)! c_{2k+2}|` and `|c_{2k+1}|`,
/// where `c_j` is the coefficient of `x^{n-j}`; relative to the largest
/// `|(n-2k)! c_{2k}|`. Zero exactly for multiples of the deformed family.
pub fn coefficient_condition_residual(p: &Poly, delta: Complex64) -> Result<f64> {
    check_delta(delta)?;
    let n = match p.degree() {
        Some(n) => n,
        None => return Err(Error::InvalidArgument("zero polynomial")),
    };
    guard(n)?;
    let c = |j: usize| p.coeff(n - j);
    let fact = |m: usize| (1..=m).fold(1.0, |acc, k| acc * k as f64);
    let mut worst: f64 = 0.0;
    let mut scale: f64 = 0.0;
    for j in (1..=n).step_by(2) {
        worst = worst.max(c(j).norm());
    }
    let mut k = 0;
    while 2 * k + 2 <= n {
        let lhs = c(2 * k) * fact(n - 2 * k);
        let rhs = -2.0 * delta * (2 * k + 2) as f64 * fact(n - 2 * k - 2) * c(2 * k + 2);
        worst = worst.max((lhs - rhs).norm());
        scale = scale.max(lhs.norm()).max(rhs.norm());
        k += 1;
    }
    scale = scale.max(c(0).norm());
    Ok(worst / scale)
}

/// `(k-1)!! √π / 2^{k/2} = Γ((k+1)/2)` for even `k`.
fn half_gamma_even(k: usize) -> f64 {
    let mut v = Float::sqrt(PI);
    let mut j = 1;
    while j < k {
        v *= j as f64 / 2.0;
        j += 2;
    }
    v
}

/// `∫ xⁿ e^{-μ(x+z)²} dx` as a polynomial in `z`:
/// coefficient of `z^{n-k}` is
/// `(-1)^{n-k} n! Γ((k+1)/2) / (k! (n-k)! √μ^{k+1})` for even `k`, zero for odd.
pub fn gaussian_moment_poly(n: usize, mu: Complex64) -> Result<Poly> {
    guard(n)?;
    check_re_positive(mu)?;
    let root = principal_sqrt(mu);
    let mut coeffs = alloc::vec![Complex64::new(0.0, 0.0); n + 1];
    let mut binom = 1.0;
    for k in 0..=n {
        if k > 0 {
            binom = binom * (n - k + 1) as f64 / k as f64;
        }
        if k % 2 == 1 {
            continue;
        }
        let sign = if (n - k) % 2 == 0 { 1.0 } else { -1.0 };
        coeffs[n - k] = sign * binom * half_gamma_even(k) / root.powu(k as u32 + 1);
    }
    Ok(Poly::new(coeffs))
}

/// `∫ xⁿ e^{-μ(x+z)²} dx`.
pub fn gaussian_moment(n: usize, mu: Complex64, z: Complex64) -> Result<Complex64> {
    Ok(gaussian_moment_poly(n, mu)?.eval(z))
}

/// `∫ P(x) e^{-μ(x-c)²} dx` for any polynomial `P`, summed from moments.
pub fn gaussian_integral_of(p: &Poly, mu: Complex64, center: Complex64) -> Result<Complex64> {
    check_re_positive(mu)?;
    let mut acc = CompensatedSum::new();
    for (j, cj) in p.coeffs().iter().enumerate() {
        if *cj != Complex64::new(0.0, 0.0) {
            acc.add(cj * gaussian_moment(j, mu, -center)?);
        }
    }
    Ok(acc.total())
}

/// `∫ P_n(x) e^{-μ(x-az)²} dx` for `P_n = generalized_hermite(n, δ)`, as a
/// polynomial in `z`:
/// `Σ_k (-1)^k 2ⁿ n! a^{n-2k} √π / (4^k k! (n-2k)! δ^k √μ) (1-δ/μ)^k z^{n-2k}`.
pub fn hermite_gaussian_integral_poly(n: usize, delta: Complex64, mu: Complex64, a: Complex64) -> Result<Poly> {
    check_re_positive(mu)?;
    let p = generalized_hermite(n, delta)?;
    let pref = Float::sqrt(PI) / principal_sqrt(mu);
    let shrink = 1.0 - delta / mu;
    let mut coeffs = alloc::vec![Complex64::new(0.0, 0.0); n + 1];
    for k in 0..=n / 2 {
        let j = n - 2 * k;
        coeffs[j] = p.coeff(j) * a.powu(j as u32) * shrink.powu(k as u32) * pref;
    }
    Ok(Poly::new(coeffs))
}

pub fn hermite_gaussian_integral(
    n: usize,
    delta: Complex64,
    mu: Complex64,
    a: Complex64,
    z: Complex64,
) -> Result<Complex64> {
    Ok(hermite_gaussian_integral_poly(n, delta, mu, a)?.eval(z))
}

/// Parameters of the integral equation; `δ` is derived, not supplied.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IntegralEqParams {
    pub mu: Complex64,
    pub nu: Complex64,
    pub a: Complex64,
    pub b: Complex64,
    pub n: usize,
    pub delta: Complex64,
}

impl IntegralEqParams {
    /// Validates the hypotheses and computes `δ = (b²-a²)μν/(νb²-μa²)`.
    pub fn new(mu: Complex64, nu: Complex64, a: Complex64, b: Complex64, n: usize) -> Result<Self> {
        guard(n)?;
        if !(mu.re > 0.0) {
            return Err(Error::HypothesisViolation("Re mu must be positive"));
        }
        if !(nu.re > 0.0) {
            return Err(Error::HypothesisViolation("Re nu must be positive"));
        }
        if a.norm() == 0.0 {
            return Err(Error::HypothesisViolation("a must be nonzero"));
        }
        if b.norm() == 0.0 {
            return Err(Error::HypothesisViolation("b must be nonzero"));
        }
        let denom = nu * b * b - mu * a * a;
        if denom.norm() <= 1e-12 * (nu * b * b).norm().max((mu * a * a).norm()) {
            return Err(Error::HypothesisViolation("nu b^2 must differ from mu a^2"));
        }
        let (mut ak, mut bk) = (Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0));
        for _ in 1..=n {
            ak *= a;
            bk *= b;
            if (ak - bk).norm() <= 1e-12 * ak.norm().max(bk.norm()) {
                return Err(Error::HypothesisViolation("a^k must differ from b^k for 1 <= k <= n"));
            }
        }
        let delta = (b * b - a * a) * mu * nu / denom;
        if delta.norm() == 0.0 {
            return Err(Error::HypothesisViolation("delta vanishes"));
        }
        Ok(IntegralEqParams { mu, nu, a, b, n, delta })
    }

    /// Solves `δ = 1` for `ν`: `ν = μa² / (b² - (b²-a²)μ)`.
    pub fn with_unit_delta(mu: Complex64, a: Complex64, b: Complex64, n: usize) -> Result<Self> {
        let denom = b * b - (b * b - a * a) * mu;
        if denom.norm() == 0.0 {
            return Err(Error::HypothesisViolation("no nu gives delta = 1"));
        }
        let mut p = IntegralEqParams::new(mu, mu * a * a / denom, a, b, n)?;
        p.delta = Complex64::new(1.0, 0.0);
        Ok(p)
    }

    /// `C_n = (√ν/√μ)(a/b)ⁿ`.
    pub fn c_n(&self) -> Complex64 {
        principal_sqrt(self.nu) / principal_sqrt(self.mu) * (self.a / self.b).powu(self.n as u32)
    }

    /// The ten sample points used by [`verify_integral_equation`].
    pub fn sample_points() -> [Complex64; 10] {
        core::array::from_fn(|j| Complex64::from_polar(0.2 + 0.18 * j as f64, 0.7 + 1.9 * j as f64))
    }
}

/// `max_z |L(z) - C_n R(z)| / (|L(z)| + |C_n R(z)|)` over
/// [`IntegralEqParams::sample_points`], with
/// `L(z) = ∫ P e^{-μ(x-az)²}` and `R(z) = ∫ P e^{-ν(x-bz)²}` evaluated exactly
/// from Gaussian moments.
pub fn verify_integral_equation(params: &IntegralEqParams, p: &Poly) -> Result<f64> {
    if p.degree() != Some(params.n) {
        return Err(Error::HypothesisViolation("polynomial degree must equal n"));
    }
    let cn = params.c_n();
    let mut worst: f64 = 0.0;
    for z in IntegralEqParams::sample_points() {
        let lhs = gaussian_integral_of(p, params.mu, params.a * z)?;
        let rhs = cn * gaussian_integral_of(p, params.nu, params.b * z)?;
        let scale = lhs.norm() + rhs.norm();
        if scale > 0.0 {
            worst = worst.max((lhs - rhs).norm() / scale);
        }
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    /// Composite trapezoid over a window wide enough for `e^{-Re μ x²}`.
    fn line_integral<F: Fn(f64) -> Complex64>(f: F, lo: f64, hi: f64, steps: usize) -> Complex64 {
        let h = (hi - lo) / steps as f64;
        let mut acc = CompensatedSum::new();
        for i in 0..=steps {
            let w = if i == 0 || i == steps { 0.5 } else { 1.0 };
            acc.add(f(lo + h * i as f64) * (w * h));
        }
        acc.total()
    }

    #[test]
    fn hermite_examples() {
        assert_eq!(hermite(0).unwrap(), Poly::one());
        assert_eq!(hermite(2).unwrap(), Poly::from_real(&[-2.0, 0.0, 4.0]));
        assert_eq!(hermite(3).unwrap(), Poly::from_real(&[0.0, -12.0, 0.0, 8.0]));
        for n in 0..=20 {
            assert!(
                hermite(n)
                    .unwrap()
                    .max_diff(&generalized_hermite(n, c(1.0, 0.0)).unwrap())
                    == 0.0
            );
        }
        assert!(matches!(hermite(65), Err(Error::OverflowGuard { .. })));
    }

    #[test]
    fn generalized_examples() {
        assert_eq!(
            generalized_hermite(2, c(2.0, 0.0)).unwrap(),
            Poly::from_real(&[-1.0, 0.0, 4.0])
        );
        assert_eq!(
            generalized_hermite(1, c(0.3, 7.0)).unwrap(),
            Poly::from_real(&[0.0, 2.0])
        );
        assert_eq!(generalized_hermite(4, c(1.0, 0.0)).unwrap(), hermite(4).unwrap());
        assert_eq!(generalized_hermite(3, c(0.0, 0.0)), Err(Error::ZeroDelta));
    }

    #[test]
    fn closed_form_matches_recursion() {
        for delta in [c(1.0, 0.0), c(2.0, 0.0), c(0.5, -1.5)] {
            for n in 0..=12 {
                let a = generalized_hermite(n, delta).unwrap();
                let b = generalized_hermite_recursive(n, delta).unwrap();
                assert!(a.max_diff(&b) <= 1e-12 * a.leading().norm(), "n={n}");
            }
        }
        for n in 0..=30 {
            assert_eq!(
                deformed_hermite_integers(n).unwrap(),
                deformed_hermite_integers_recursive(n).unwrap()
            );
        }
        assert_eq!(deformed_hermite_integers(3).unwrap(), [8, -12]);
    }

    #[test]
    fn coefficient_condition() {
        for delta in [c(1.0, 0.0), c(0.7, 0.2)] {
            for n in 0..=12 {
                let p = generalized_hermite(n, delta).unwrap().scale(c(0.3, -1.1));
                assert!(coefficient_condition_residual(&p, delta).unwrap() < 1e-13);
            }
        }
        let p = hermite(3).unwrap().add(&Poly::monomial(1));
        assert!(coefficient_condition_residual(&p, c(1.0, 0.0)).unwrap() > 1e-2);
    }

    #[test]
    fn moment_examples() {
        let mu = c(1.3, -0.4);
        let z = c(0.6, 0.9);
        let base = PI.sqrt() / principal_sqrt(mu);
        assert!((gaussian_moment(0, mu, z).unwrap() - base).norm() < 1e-15);
        assert!((gaussian_moment(1, mu, z).unwrap() + z * base).norm() < 1e-15);
        let two = (z * z + 1.0 / (2.0 * mu)) * base;
        assert!((gaussian_moment(2, mu, z).unwrap() - two).norm() < 1e-14);
        assert!(matches!(
            gaussian_moment(2, c(-1.0, 1.0), z),
            Err(Error::NonPositiveRealPart { .. })
        ));
        let p = gaussian_moment_poly(9, mu).unwrap();
        for k in (1..=9).step_by(2) {
            assert_eq!(p.coeff(9 - k), c(0.0, 0.0));
        }
    }

    #[test]
    fn moments_match_quadrature() {
        let mu = c(0.8, 0.5);
        for n in 0..=10 {
            for z in [c(0.0, 0.0), c(1.5, -0.5), c(-1.0, 1.7)] {
                let q = line_integral(
                    |x| (-mu * (x + z) * (x + z)).exp() * x.powi(n as i32),
                    -20.0,
                    20.0,
                    8000,
                );
                let exact = gaussian_moment(n, mu, z).unwrap();
                assert!(
                    (q - exact).norm() <= 1e-10 * exact.norm().max(1.0),
                    "n={n} z={z}: {q} vs {exact}"
                );
            }
        }
    }

    #[test]
    fn hermite_gaussian_examples() {
        let (mu, a, z) = (c(1.0, 0.3), c(0.8, 0.0), c(1.1, 0.0));
        let base = PI.sqrt() / principal_sqrt(mu);
        assert!((hermite_gaussian_integral(0, c(2.0, 1.0), mu, a, z).unwrap() - base).norm() < 1e-15);
        let only = hermite_gaussian_integral_poly(5, mu, mu, a).unwrap();
        assert_eq!(only.degree(), Some(5));
        assert!((only.leading() - (2.0 * a).powu(5) * base).norm() < 1e-12);
        assert!(only.coeffs()[..5].iter().all(|v| v.norm() == 0.0));
        let p = hermite(2).unwrap();
        let q = line_integral(
            |x| p.eval_real(x) * (-mu * (x - a * z) * (x - a * z)).exp(),
            -20.0,
            20.0,
            8000,
        );
        let exact = hermite_gaussian_integral(2, c(1.0, 0.0), mu, a, z).unwrap();
        assert!((q - exact).norm() < 1e-8 * exact.norm());
        assert!(matches!(
            hermite_gaussian_integral(2, c(1.0, 0.0), c(0.0, 1.0), a, z),
            Err(Error::NonPositiveRealPart { .. })
        ));
    }

    #[test]
    fn integral_equation_examples() {
        let (mu, a) = (c(1.0, 0.0), c(0.5, 0.0));
        let params = IntegralEqParams::with_unit_delta(mu, a, 2.0 * a, 3).unwrap();
        let direct = IntegralEqParams::new(params.mu, params.nu, params.a, params.b, 3).unwrap();
        assert!((direct.delta - 1.0).norm() < 1e-14);
        let h3 = hermite(3).unwrap();
        assert!(verify_integral_equation(&params, &h3).unwrap() <= 1e-12);
        let perturbed = h3.add(&Poly::monomial(1));
        assert!(verify_integral_equation(&params, &perturbed).unwrap() > 1e-3);
        let p0 = IntegralEqParams::new(c(1.0, 0.2), c(0.7, -0.1), c(0.4, 0.4), c(1.0, -0.3), 0).unwrap();
        assert!(verify_integral_equation(&p0, &Poly::one()).unwrap() < 1e-14);
        let p4 = IntegralEqParams::new(c(1.0, 0.2), c(0.7, -0.1), c(0.4, 0.4), c(1.0, -0.3), 4).unwrap();
        let g4 = generalized_hermite(4, p4.delta).unwrap();
        assert!(verify_integral_equation(&p4, &g4).unwrap() < 1e-12);
        assert!(matches!(
            verify_integral_equation(&p4, &h3),
            Err(Error::HypothesisViolation(_))
        ));
    }

    #[test]
    fn integral_equation_hypotheses() {
        let one = c(1.0, 0.0);
        assert!(IntegralEqParams::new(c(-1.0, 0.0), one, one, c(2.0, 0.0), 2).is_err());
        assert!(IntegralEqParams::new(one, one, c(0.0, 0.0), c(2.0, 0.0), 2).is_err());
        assert!(IntegralEqParams::new(one, c(4.0, 0.0), c(2.0, 0.0), one, 2).is_err());
        // a = -b collides at k = 2
        assert!(IntegralEqParams::new(one, c(2.0, 0.0), one, -one, 2).is_err());
        // a = -b makes δ vanish
        assert!(IntegralEqParams::new(one, c(2.0, 0.0), one, -one, 1).is_err());
        // b = ia collides first at k = 4
        assert!(IntegralEqParams::new(one, c(2.0, 0.0), one, c(0.0, 1.0), 3).is_ok());
        assert!(IntegralEqParams::new(one, c(2.0, 0.0), one, c(0.0, 1.0), 4).is_err());
    }

    #[test]
    fn poly_basics() {
        let p = Poly::new(alloc::vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);
        assert_eq!(p.degree(), Some(0));
        assert_eq!(Poly::zero().degree(), None);
        let q = Poly::from_real(&[1.0, 2.0, 3.0]);
        assert_eq!(q.eval(c(2.0, 0.0)), c(17.0, 0.0));
        assert_eq!(q.derivative(), Poly::from_real(&[2.0, 6.0]));
        assert_eq!(q.mul_x(), Poly::from_real(&[0.0, 1.0, 2.0, 3.0]));
    }
}
