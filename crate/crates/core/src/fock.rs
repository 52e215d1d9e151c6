//! Integration against the Gaussian measure `dλ(z) = π⁻¹ e^{-|z|²} dA(z)`,
//! the Fock inner product, reproducing kernels and the monomial basis
//! `e_n(z) = zⁿ/√(n!)`.

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;
use num_traits::Float;

use crate::error::{Error, Result};
use crate::group::GroupElement;
use crate::quadrature::gauss_hermite;
use crate::scalar::CompensatedSum;

/// Default node count per axis.
pub const DEFAULT_NODES: usize = 64;
/// Smallest node count accepted by [`QuadratureRule::new`].
pub const MIN_NODES: usize = 16;
/// Cap applied by [`QuadratureRule::for_kernel`].
pub const MAX_OPERATOR_NODES: usize = 256;

/// Tensor Gauss–Hermite rule for `∫_ℂ g dλ`, with the matching one-dimensional
/// rule for `∫_ℝ h(x) dx`.
///
/// The base rule has nodes `uᵢ` and scaled weights `ŵᵢ = wᵢ e^{uᵢ²}`. A rule
/// with truncation radius `R` stretches it by `σ = R / maxᵢ uᵢ`:
/// nodes `xᵢ = σuᵢ`, line weights `Wᵢ = σŵᵢ`, so that
/// `∫ h dx ≈ Σ Wᵢ h(xᵢ)` and
/// `∫ g dλ ≈ Σᵢⱼ WᵢWⱼ e^{-xᵢ²-xⱼ²}/π · g(xᵢ + i xⱼ)`.
/// With `σ = 1` the planar rule is exact for polynomials in `x, y` of degree
/// below `2m` in each variable.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadratureRule {
    nodes_1d: Vec<f64>,
    weights_1d: Vec<f64>,
    truncation_radius: f64,
    planar: Vec<(Complex64, f64)>,
}

impl Default for QuadratureRule {
    fn default() -> Self {
        QuadratureRule::new(DEFAULT_NODES).expect("default rule is valid")
    }
}

impl QuadratureRule {
    /// Unscaled `m`-point rule.
    pub fn new(m: usize) -> Result<Self> {
        Self::build(m, None)
    }

    /// `m`-point rule stretched so its outermost node sits at `radius`.
    pub fn with_radius(m: usize, radius: f64) -> Result<Self> {
        if !(radius.is_finite() && radius > 0.0) {
            return Err(Error::InvalidRule("radius must be positive and finite"));
        }
        Self::build(m, Some(radius))
    }

    /// Rule sized for integrands carrying the kernel of `T^(s,t)`, which
    /// decay like `e^{-(1-|t|/(2|s|))|w|²}`: `⌈64/(1-|t|/(2|s|))⌉` nodes,
    /// capped at 256.
    pub fn for_kernel(g: &GroupElement) -> Result<Self> {
        Self::new(kernel_node_count(g)?)
    }

    fn build(m: usize, radius: Option<f64>) -> Result<Self> {
        if m < MIN_NODES {
            return Err(Error::InvalidRule("at least 16 nodes are required"));
        }
        let (u, w_hat) = gauss_hermite(m)?;
        let u_max = u[m - 1];
        let sigma = radius.map_or(1.0, |r| r / u_max);
        let nodes_1d: Vec<f64> = u.iter().map(|&x| sigma * x).collect();
        let weights_1d: Vec<f64> = w_hat.iter().map(|&w| sigma * w).collect();
        let mut planar = Vec::with_capacity(m * m);
        for (&x, &wx) in nodes_1d.iter().zip(&weights_1d) {
            for (&y, &wy) in nodes_1d.iter().zip(&weights_1d) {
                let w = wx * wy * Float::exp(-x * x - y * y) / PI;
                if w > 0.0 {
                    planar.push((Complex64::new(x, y), w));
                }
            }
        }
        Ok(QuadratureRule {
            nodes_1d,
            weights_1d,
            truncation_radius: sigma * u_max,
            planar,
        })
    }

    pub fn node_count(&self) -> usize {
        self.nodes_1d.len()
    }

    pub fn nodes_1d(&self) -> &[f64] {
        &self.nodes_1d
    }

    /// Weights for `∫_ℝ h(x) dx` (not `e^{-x²}`-weighted).
    pub fn weights_1d(&self) -> &[f64] {
        &self.weights_1d
    }

    pub fn truncation_radius(&self) -> f64 {
        self.truncation_radius
    }

    /// Planar nodes with their `dλ` weights, in the fixed summation order.
    pub fn planar(&self) -> &[(Complex64, f64)] {
        &self.planar
    }

    /// `∫_ℝ h(x) dx`.
    pub fn integrate_line<F>(&self, mut h: F) -> Result<Complex64>
    where
        F: FnMut(f64) -> Complex64,
    {
        let mut acc = CompensatedSum::new();
        for (&x, &w) in self.nodes_1d.iter().zip(&self.weights_1d) {
            let v = h(x);
            if !v.is_finite() {
                return Err(Error::NonFiniteIntegrand { re: x, im: 0.0 });
            }
            acc.add(v * w);
        }
        Ok(acc.total())
    }

    /// `∫_ℂ g dλ`.
    pub fn integrate<F>(&self, mut g: F) -> Result<Complex64>
    where
        F: FnMut(Complex64) -> Complex64,
    {
        let mut acc = CompensatedSum::new();
        for &(z, w) in &self.planar {
            let v = g(z);
            if !v.is_finite() {
                return Err(Error::NonFiniteIntegrand { re: z.re, im: z.im });
            }
            acc.add(v * w);
        }
        Ok(acc.total())
    }
}

/// Node count chosen by [`QuadratureRule::for_kernel`].
pub fn kernel_node_count(g: &GroupElement) -> Result<usize> {
    let (s_abs, t_abs) = (g.s().norm(), g.t().norm());
    if s_abs == 0.0 {
        return Err(Error::ZeroS);
    }
    let ratio = t_abs / (2.0 * s_abs);
    if ratio >= 1.0 {
        return Err(Error::DomainViolation { s_abs, t_abs });
    }
    let m = Float::ceil(DEFAULT_NODES as f64 / (1.0 - ratio));
    Ok(if m >= MAX_OPERATOR_NODES as f64 {
        MAX_OPERATOR_NODES
    } else {
        m as usize
    })
}

/// `∫_ℂ g dλ` with the given rule.
pub fn integrate_gaussian<F>(g: F, rule: &QuadratureRule) -> Result<Complex64>
where
    F: FnMut(Complex64) -> Complex64,
{
    rule.integrate(g)
}

/// `⟨f, g⟩ = ∫ f ḡ dλ`.
pub fn fock_inner<F, G>(f: F, g: G, rule: &QuadratureRule) -> Result<Complex64>
where
    F: Fn(Complex64) -> Complex64,
    G: Fn(Complex64) -> Complex64,
{
    rule.integrate(|z| f(z) * g(z).conj())
}

/// `K_u(z) = e^{zū}`.
pub fn reproducing_kernel(u: Complex64) -> impl Fn(Complex64) -> Complex64 + Clone {
    move |z: Complex64| (z * u.conj()).exp()
}

/// `e_n(z) = zⁿ/√(n!)`, evaluated as `∏ₖ z/√k` so large `n` does not overflow.
pub fn monomial(n: usize) -> impl Fn(Complex64) -> Complex64 + Clone {
    move |z: Complex64| monomial_value(n, z)
}

pub(crate) fn monomial_value(n: usize, z: Complex64) -> Complex64 {
    let mut v = Complex64::new(1.0, 0.0);
    for k in 1..=n {
        v *= z / Float::sqrt(k as f64);
    }
    v
}

/// `ln n!` for `n = 0..=len-1`.
pub(crate) fn ln_factorials(len: usize) -> Vec<f64> {
    let mut out = Vec::with_capacity(len);
    let mut acc = 0.0;
    for n in 0..len {
        if n > 1 {
            acc += Float::ln(n as f64);
        }
        out.push(acc);
    }
    out
}

/// `Σ cₙ eₙ`, the first `N` coordinates of an element of `F²`.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedFockVector {
    coeffs: Vec<Complex64>,
}

impl TruncatedFockVector {
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidArgument("a Fock vector needs at least one coefficient"));
        }
        if coeffs.iter().any(|c| !c.is_finite()) {
            return Err(Error::InvalidArgument("Fock vector coefficients must be finite"));
        }
        Ok(TruncatedFockVector { coeffs })
    }

    /// The basis vector `e_n` in a space of dimension `len`.
    pub fn basis(n: usize, len: usize) -> Result<Self> {
        if n >= len {
            return Err(Error::InvalidArgument("basis index out of range"));
        }
        let mut coeffs = alloc::vec![Complex64::new(0.0, 0.0); len];
        coeffs[n] = Complex64::new(1.0, 0.0);
        Ok(TruncatedFockVector { coeffs })
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `Σ cₙ zⁿ/√(n!)`.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = CompensatedSum::new();
        let mut basis = Complex64::new(1.0, 0.0);
        for (n, c) in self.coeffs.iter().enumerate() {
            if n > 0 {
                basis *= z / Float::sqrt(n as f64);
            }
            acc.add(*c * basis);
        }
        acc.total()
    }

    /// Coefficient dot product `Σ aₙ b̄ₙ`; missing entries count as zero.
    pub fn inner(&self, other: &TruncatedFockVector) -> Complex64 {
        let mut acc = CompensatedSum::new();
        for (a, b) in self.coeffs.iter().zip(&other.coeffs) {
            acc.add(*a * b.conj());
        }
        acc.total()
    }

    pub fn norm_sq(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::principal_sqrt;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn measure_is_a_probability_measure() {
        let rule = QuadratureRule::default();
        let one = rule.integrate(|_| c(1.0, 0.0)).unwrap();
        assert!((one - 1.0).norm() < 1e-14);
        let second = rule.integrate(|z| c(z.norm_sqr(), 0.0)).unwrap();
        assert!((second - 1.0).norm() < 1e-13);
    }

    #[test]
    fn gaussian_identity() {
        // ∫ exp[(γ/2)w² + aw + (δ̄/2)w̄² + b̄w̄] dλ(w)
        let cases = [
            (c(0.3, 0.0), c(0.0, 0.2), c(1.0, 0.0), c(0.5, 0.0)),
            (c(0.6, 0.0), c(0.6, 0.0), c(1.0, 0.0), c(0.5, 0.0)),
            (c(0.0, 0.6), c(-0.6, 0.0), c(0.5, 0.5), c(1.0, 0.0)),
        ];
        let rule = QuadratureRule::default();
        let fine = QuadratureRule::new(128).unwrap();
        for (gamma, delta, a, b) in cases {
            let one_minus = 1.0 - gamma * delta.conj();
            let exact = (delta.conj() * a * a + gamma * b.conj() * b.conj() + 2.0 * a * b.conj()) / (2.0 * one_minus);
            let exact = exact.exp() / principal_sqrt(one_minus);
            let g = |w: Complex64| {
                (gamma / 2.0 * w * w + a * w + delta.conj() / 2.0 * w.conj() * w.conj() + b.conj() * w.conj()).exp()
            };
            let v = rule.integrate(g).unwrap();
            assert!((v - exact).norm() < 1e-12 * exact.norm(), "{v} vs {exact}");
            let v2 = fine.integrate(g).unwrap();
            assert!((v - v2).norm() < 1e-10 * exact.norm());
        }
    }

    #[test]
    fn monomials_are_orthonormal() {
        let rule = QuadratureRule::default();
        for m in 0..=10 {
            for n in 0..=10 {
                let v = fock_inner(monomial(m), monomial(n), &rule).unwrap();
                let expected = if m == n { 1.0 } else { 0.0 };
                assert!((v - expected).norm() < 1e-12, "m={m} n={n} {v}");
            }
        }
    }

    #[test]
    fn reproducing_property() {
        let rule = QuadratureRule::default();
        let k0 = reproducing_kernel(c(0.0, 0.0));
        assert_eq!(k0(c(3.0, -2.0)), c(1.0, 0.0));
        let v = fock_inner(|z| z * z, reproducing_kernel(c(1.0, 0.0)), &rule).unwrap();
        assert!((v - 1.0).norm() < 1e-12);
        let (u, w) = (c(0.4, -0.3), c(-0.2, 0.9));
        let v = fock_inner(reproducing_kernel(u), reproducing_kernel(w), &rule).unwrap();
        assert!((v - (w * u.conj()).exp()).norm() < 1e-12);
        let u = c(1.2, 0.5);
        let v = fock_inner(reproducing_kernel(u), reproducing_kernel(u), &rule).unwrap();
        assert!((v.re - u.norm_sqr().exp()).abs() < 1e-12 * v.re);
        // degree-20 polynomial
        let p = |z: Complex64| (0..=20).fold(c(0.0, 0.0), |acc, k| acc * z + c(1.0 / (k as f64 + 1.0), 0.1));
        let u = c(0.7, -0.6);
        let v = fock_inner(p, reproducing_kernel(u), &rule).unwrap();
        assert!((v - p(u)).norm() < 1e-8);
    }

    #[test]
    fn conjugate_symmetry() {
        let rule = QuadratureRule::default();
        let f = |z: Complex64| z * z + c(0.5, 1.0);
        let g = reproducing_kernel(c(0.3, 0.8));
        let a = fock_inner(f, g.clone(), &rule).unwrap();
        let b = fock_inner(g, f, &rule).unwrap();
        assert!((a - b.conj()).norm() < 1e-13);
    }

    #[test]
    fn truncated_vectors_match_quadrature() {
        let a = TruncatedFockVector::new(
            (0..24)
                .map(|k| c(1.0 / (k as f64 + 1.0), 0.3 * k as f64 / 24.0))
                .collect(),
        )
        .unwrap();
        let b = TruncatedFockVector::new((0..24).map(|k| c((k as f64).cos(), -0.5)).collect()).unwrap();
        let rule = QuadratureRule::default();
        let q = fock_inner(|z| a.eval(z), |z| b.eval(z), &rule).unwrap();
        assert!((q - a.inner(&b)).norm() < 1e-10 * (1.0 + q.norm()));
    }

    #[test]
    fn non_finite_integrand_reported() {
        let rule = QuadratureRule::default();
        let err = rule.integrate(|z| if z.re > 0.0 { c(f64::NAN, 0.0) } else { c(1.0, 0.0) });
        assert!(matches!(err, Err(Error::NonFiniteIntegrand { .. })));
    }

    #[test]
    fn rule_validation() {
        assert!(QuadratureRule::new(8).is_err());
        assert!(QuadratureRule::with_radius(32, -1.0).is_err());
        let r = QuadratureRule::with_radius(32, 9.0).unwrap();
        assert!((r.truncation_radius() - 9.0).abs() < 1e-12);
        assert!(TruncatedFockVector::new(Vec::new()).is_err());
    }

    #[test]
    fn kernel_node_heuristic() {
        let g = GroupElement::pair(c(1.0, 0.0), c(0.0, 0.0));
        assert_eq!(kernel_node_count(&g).unwrap(), 64);
        let g = GroupElement::pair(c(2.0, 0.0), c(2.0, 0.0));
        assert_eq!(kernel_node_count(&g).unwrap(), 128);
        let g = GroupElement::pair(c(1.0, 0.0), c(1.9, 0.0));
        assert_eq!(kernel_node_count(&g).unwrap(), MAX_OPERATOR_NODES);
        let g = GroupElement::pair(c(1.0, 0.0), c(2.0, 0.0));
        assert!(matches!(kernel_node_count(&g), Err(Error::DomainViolation { .. })));
    }

    #[test]
    fn monomial_large_degree_is_finite() {
        let v = monomial_value(200, c(3.0, 4.0));
        assert!(v.is_finite());
        assert!((ln_factorials(6)[5] - 120f64.ln()).abs() < 1e-14);
    }
}
