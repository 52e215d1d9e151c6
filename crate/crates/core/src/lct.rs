//! Linear canonical transforms on `L²(ℝ)`, the Bargmann transform
//! `L²(ℝ) → F²` and the sign relating `B F^A B⁻¹` to `T^{φ(A)}`.
//!
//! For `A = [[a, b], [c, d]]` with `ad - bc = 1`:
//!
//! ```text
//! F^A f(x) = (iπb)^{-1/2} e^{idx²/b} ∫ e^{-i(2xt - at²)/b} f(t) dt   (b ≠ 0)
//! F^A f(x) = √d e^{icdx²} f(dx)                                       (b = 0)
//! ```
//!
//! Functions on the line are carried as samples; integrals over the line use
//! the sample weights (trapezoid or Gauss–Hermite), which are spectrally
//! accurate for the smooth, Gaussian-decaying functions used here.

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;
use num_traits::Float;

use crate::error::{Error, Result};
use crate::fock::QuadratureRule;
use crate::group::{cocycle, phi, RealMatrix2, TOL_GROUP};
use crate::hermite::Poly;
use crate::operator::CanonicalOperator;
use crate::scalar::{principal_sqrt, CompensatedSum, Sign};

/// `(2/π)^{1/4}`.
pub const BARGMANN_C: f64 = 0.893_243_841_738_002_3;

/// Smallest sample count.
pub const MIN_SAMPLES: usize = 16;

/// Points used for local interpolation.
const INTERP_POINTS: usize = 8;

/// How the sample weights were formed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WeightKind {
    /// Trapezoid weights on an arbitrary increasing grid.
    Uniform,
    /// Gauss–Hermite line weights `σ wᵢ e^{uᵢ²}`.
    GaussHermite,
}

/// An element of `L²(ℝ)` given by samples on an increasing grid.
#[derive(Clone, Debug, PartialEq)]
pub struct SampledRealFunction {
    grid: Vec<f64>,
    values: Vec<Complex64>,
    weights: Vec<f64>,
    kind: WeightKind,
}

impl SampledRealFunction {
    /// Samples with trapezoid weights.
    pub fn from_samples(grid: Vec<f64>, values: Vec<Complex64>) -> Result<Self> {
        validate(&grid, &values)?;
        let n = grid.len();
        let mut weights = alloc::vec![0.0; n];
        for i in 0..n - 1 {
            let h = 0.5 * (grid[i + 1] - grid[i]);
            weights[i] += h;
            weights[i + 1] += h;
        }
        Ok(SampledRealFunction {
            grid,
            values,
            weights,
            kind: WeightKind::Uniform,
        })
    }

    /// `f` sampled at `points` equispaced nodes on `[lo, hi]`.
    pub fn uniform<F>(lo: f64, hi: f64, points: usize, f: F) -> Result<Self>
    where
        F: Fn(f64) -> Complex64,
    {
        if !(lo < hi) || points < 2 {
            return Err(Error::InvalidSamples("need lo < hi and at least two points"));
        }
        let h = (hi - lo) / (points - 1) as f64;
        let grid: Vec<f64> = (0..points).map(|i| lo + h * i as f64).collect();
        let values = grid.iter().map(|&x| f(x)).collect();
        Self::from_samples(grid, values)
    }

    /// `f` sampled at the line nodes of `rule`, with its line weights.
    pub fn gauss_hermite<F>(rule: &QuadratureRule, f: F) -> Result<Self>
    where
        F: Fn(f64) -> Complex64,
    {
        let grid = rule.nodes_1d().to_vec();
        let values: Vec<Complex64> = grid.iter().map(|&x| f(x)).collect();
        validate(&grid, &values)?;
        Ok(SampledRealFunction {
            grid,
            values,
            weights: rule.weights_1d().to_vec(),
            kind: WeightKind::GaussHermite,
        })
    }

    pub fn grid(&self) -> &[f64] {
        &self.grid
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn kind(&self) -> WeightKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.grid.len()
    }

    pub fn is_empty(&self) -> bool {
        self.grid.is_empty()
    }

    /// Same grid and weights, new values.
    pub fn with_values(&self, values: Vec<Complex64>) -> Result<Self> {
        validate(&self.grid, &values)?;
        Ok(SampledRealFunction {
            grid: self.grid.clone(),
            values,
            weights: self.weights.clone(),
            kind: self.kind,
        })
    }

    /// Same grid, values `f(x)`.
    pub fn resample<F>(&self, f: F) -> Result<Self>
    where
        F: Fn(f64) -> Complex64,
    {
        self.with_values(self.grid.iter().map(|&x| f(x)).collect())
    }

    /// `Σ wᵢ h(xᵢ, fᵢ)`.
    pub fn integrate<F>(&self, mut h: F) -> Complex64
    where
        F: FnMut(f64, Complex64) -> Complex64,
    {
        let mut acc = CompensatedSum::new();
        for ((&x, &v), &w) in self.grid.iter().zip(&self.values).zip(&self.weights) {
            acc.add(h(x, v) * w);
        }
        acc.total()
    }

    /// `∫ f ḡ dx`; both functions must share the grid.
    pub fn inner(&self, other: &SampledRealFunction) -> Result<Complex64> {
        if self.grid != other.grid {
            return Err(Error::InvalidSamples("inner product needs a common grid"));
        }
        let mut acc = CompensatedSum::new();
        for ((a, b), &w) in self.values.iter().zip(&other.values).zip(&self.weights) {
            acc.add(a * b.conj() * w);
        }
        Ok(acc.total())
    }

    pub fn norm_sq(&self) -> f64 {
        self.integrate(|_, v| Complex64::new(v.norm_sqr(), 0.0)).re
    }

    /// Local Lagrange interpolation through the 8 nearest nodes; zero
    /// outside the sampled interval.
    pub fn interpolate(&self, x: f64) -> Complex64 {
        let n = self.grid.len();
        if !(x >= self.grid[0] && x <= self.grid[n - 1]) {
            return Complex64::new(0.0, 0.0);
        }
        let pos = self.grid.partition_point(|&g| g < x);
        if pos < n && self.grid[pos] == x {
            return self.values[pos];
        }
        let m = INTERP_POINTS.min(n);
        let start = pos.saturating_sub(m / 2).min(n - m);
        let mut acc = Complex64::new(0.0, 0.0);
        for i in start..start + m {
            let mut basis = 1.0;
            for j in start..start + m {
                if j != i {
                    basis *= (x - self.grid[j]) / (self.grid[i] - self.grid[j]);
                }
            }
            acc += self.values[i] * basis;
        }
        acc
    }

    /// Largest frequency the grid resolves, `π / h̄` with `h̄` the mean spacing.
    pub fn resolvable_frequency(&self) -> f64 {
        let n = self.grid.len();
        PI * (n - 1) as f64 / (self.grid[n - 1] - self.grid[0])
    }

    fn max_abs_node(&self) -> f64 {
        Float::max(Float::abs(self.grid[0]), Float::abs(self.grid[self.grid.len() - 1]))
    }
}

fn validate(grid: &[f64], values: &[Complex64]) -> Result<()> {
    if grid.len() != values.len() {
        return Err(Error::InvalidSamples("grid and values differ in length"));
    }
    if grid.len() < MIN_SAMPLES {
        return Err(Error::InvalidSamples("at least 16 samples are required"));
    }
    if grid.iter().any(|x| !x.is_finite()) || values.iter().any(|v| !v.is_finite()) {
        return Err(Error::InvalidSamples("samples must be finite"));
    }
    if grid.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(Error::InvalidSamples("grid must be strictly increasing"));
    }
    Ok(())
}

fn require_unit_det(a: &RealMatrix2) -> Result<()> {
    let det = a.det();
    if Float::abs(det - 1.0) <= TOL_GROUP {
        Ok(())
    } else {
        Err(Error::SingularDet { det })
    }
}

/// `F^A f(x)`.
///
/// For `b ≠ 0` the chirp integral is summed with the sample weights after
/// checking that the kernel's phase gradient `2(|x| + |a| max|t|)/|b|` stays
/// below the grid's resolvable frequency. For `b = 0` the samples are
/// interpolated at `dx`.
pub fn lct_apply(a: &RealMatrix2, f: &SampledRealFunction, x: f64) -> Result<Complex64> {
    require_unit_det(a)?;
    if a.b == 0.0 {
        let d = Complex64::new(a.d, 0.0);
        return Ok(principal_sqrt(d) * Complex64::new(0.0, a.c * a.d * x * x).exp() * f.interpolate(a.d * x));
    }
    let frequency = 2.0 * (Float::abs(x) + Float::abs(a.a) * f.max_abs_node()) / Float::abs(a.b);
    let limit = f.resolvable_frequency();
    if frequency > limit {
        return Err(Error::OscillationBudgetExceeded { frequency, limit });
    }
    let pref = principal_sqrt(Complex64::new(0.0, PI * a.b)).inv() * Complex64::new(0.0, a.d * x * x / a.b).exp();
    let integral = f.integrate(|t, v| Complex64::new(0.0, -(2.0 * x * t - a.a * t * t) / a.b).exp() * v);
    Ok(pref * integral)
}

/// `F^A f` sampled on the grid of `f`.
pub fn lct_transform(a: &RealMatrix2, f: &SampledRealFunction) -> Result<SampledRealFunction> {
    let values = f
        .grid()
        .iter()
        .map(|&x| lct_apply(a, f, x))
        .collect::<Result<Vec<_>>>()?;
    f.with_values(values)
}

/// `F^α = e^{iα/2} F^{A_α}` for `α ∈ (-π, π)`; `α = ±π` is the parity
/// `f(-x)` and `α = 0` the identity, both as limits.
pub fn frft(alpha: f64, f: &SampledRealFunction, x: f64) -> Result<Complex64> {
    if !(alpha.is_finite() && Float::abs(alpha) <= PI) {
        return Err(Error::InvalidArgument("fractional order must lie in [-pi, pi]"));
    }
    if Float::abs(alpha) == PI {
        return Ok(f.interpolate(-x));
    }
    if alpha == 0.0 {
        return Ok(f.interpolate(x));
    }
    Ok(Complex64::from_polar(1.0, 0.5 * alpha) * lct_apply(&RealMatrix2::rotation(alpha), f, x)?)
}

/// `F^α f` sampled on the grid of `f`.
pub fn frft_transform(alpha: f64, f: &SampledRealFunction) -> Result<SampledRealFunction> {
    let values = f
        .grid()
        .iter()
        .map(|&x| frft(alpha, f, x))
        .collect::<Result<Vec<_>>>()?;
    f.with_values(values)
}

/// `Bf(z) = C ∫ f(x) e^{2xz - x² - z²/2} dx`, `C = (2/π)^{1/4}`.
pub fn bargmann(f: &SampledRealFunction, z: Complex64) -> Result<Complex64> {
    let v = BARGMANN_C * f.integrate(|x, fx| fx * (2.0 * x * z - x * x - 0.5 * z * z).exp());
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFiniteIntegrand { re: z.re, im: z.im })
    }
}

/// `B⁻¹F(x) = C ∫ F(z) e^{2xz̄ - x² - z̄²/2} dλ(z)`.
pub fn inverse_bargmann<F>(big_f: F, x: f64, rule: &QuadratureRule) -> Result<Complex64>
where
    F: Fn(Complex64) -> Complex64,
{
    Ok(BARGMANN_C * rule.integrate(|z| big_f(z) * inverse_bargmann_kernel(x, z))?)
}

fn inverse_bargmann_kernel(x: f64, z: Complex64) -> Complex64 {
    let zb = z.conj();
    (2.0 * x * zb - x * x - 0.5 * zb * zb).exp()
}

/// `B⁻¹F` sampled on the grid of `template`, evaluating `F` once per node.
pub fn inverse_bargmann_sampled<F>(
    big_f: F,
    template: &SampledRealFunction,
    rule: &QuadratureRule,
) -> Result<SampledRealFunction>
where
    F: Fn(Complex64) -> Complex64,
{
    let nodes: Vec<(Complex64, Complex64)> = rule.planar().iter().map(|&(z, w)| (z, big_f(z) * w)).collect();
    if let Some((z, _)) = nodes.iter().find(|(_, v)| !v.is_finite()) {
        return Err(Error::NonFiniteIntegrand { re: z.re, im: z.im });
    }
    let values = template
        .grid()
        .iter()
        .map(|&x| {
            let mut acc = CompensatedSum::new();
            for &(z, fw) in &nodes {
                acc.add(fw * inverse_bargmann_kernel(x, z));
            }
            BARGMANN_C * acc.total()
        })
        .collect();
    template.with_values(values)
}

/// `C_A` in `B F^A B⁻¹ = C_A T^{φ(A)}`:
/// `√s/√q · √(q/s)` with `q = s + t - s̄ - t̄ = 2ib` when `b ≠ 0`, and
/// `√s · √(1/(s+t)) · √((s+t)/s)` when `b = 0`.
pub fn bargmann_sign(a: &RealMatrix2) -> Result<Sign> {
    require_unit_det(a)?;
    let g = phi(a)?;
    let (s, t) = (g.s(), g.t());
    let c = if a.b != 0.0 {
        let q = s + t - s.conj() - t.conj();
        principal_sqrt(s) / principal_sqrt(q) * principal_sqrt(q / s)
    } else {
        let st = s + t;
        principal_sqrt(s) * principal_sqrt(st.inv()) * principal_sqrt(st / s)
    };
    Sign::from_unit(c)
}

/// `C` in `(F^A)⁻¹ = C F^{A⁻¹}`: `-1` exactly when `a < 0` and `b = 0`.
pub fn lct_inverse_sign(a: &RealMatrix2) -> Result<Sign> {
    require_unit_det(a)?;
    Ok(if a.a < 0.0 && a.b == 0.0 {
        Sign::Minus
    } else {
        Sign::Plus
    })
}

/// The sign with `F^{A₁} F^{A₂} = C F^{A₁A₂}`, assembled from the Fock side:
/// `C = C_{A₁} C_{A₂} C_{A₁A₂} · cocycle(φ(A₁), φ(A₂))`.
pub fn lct_composition_sign(a1: &RealMatrix2, a2: &RealMatrix2) -> Result<Sign> {
    let product = a1.mul(a2);
    Ok(bargmann_sign(a1)? * bargmann_sign(a2)? * bargmann_sign(&product)? * cocycle(&phi(a1)?, &phi(a2)?)?)
}

/// Sampling window and resolution for the line side of
/// [`verify_conjugation`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LineGrid {
    pub half_width: f64,
    pub points: usize,
}

impl Default for LineGrid {
    fn default() -> Self {
        LineGrid {
            half_width: 8.0,
            points: 1025,
        }
    }
}

impl LineGrid {
    pub fn template(&self) -> Result<SampledRealFunction> {
        SampledRealFunction::uniform(-self.half_width, self.half_width, self.points, |_| {
            Complex64::new(0.0, 0.0)
        })
    }
}

/// `B F^A B⁻¹ F` at the points `zs`, computed entirely through the line.
pub fn conjugated_lct(
    a: &RealMatrix2,
    big_f: &dyn Fn(Complex64) -> Complex64,
    zs: &[Complex64],
    rule: &QuadratureRule,
    grid: &LineGrid,
) -> Result<Vec<Complex64>> {
    let g = inverse_bargmann_sampled(big_f, &grid.template()?, rule)?;
    let h = lct_transform(a, &g)?;
    zs.iter().map(|&z| bargmann(&h, z)).collect()
}

/// `max_z |B F^A B⁻¹ f(z) - C_A T^{φ(A)} f(z)| / (1 + |T^{φ(A)} f(z)|)`.
///
/// The left side goes through the line (inverse Bargmann by planar
/// quadrature, the transform on samples, Bargmann by the sample weights);
/// the right side is the Fock-space operator applied by quadrature.
pub fn verify_conjugation(
    a: &RealMatrix2,
    f: &Poly,
    zs: &[Complex64],
    rule: &QuadratureRule,
    grid: &LineGrid,
) -> Result<f64> {
    let sign = bargmann_sign(a)?;
    let g = phi(a)?;
    let op = CanonicalOperator::new(g)?;
    let op_rule = QuadratureRule::for_kernel(&g)?;
    let lhs = conjugated_lct(a, &|z| f.eval(z), zs, rule, grid)?;
    let mut worst: f64 = 0.0;
    for (&z, l) in zs.iter().zip(lhs) {
        let r = op.apply(|w| f.eval(w), z, &op_rule)?;
        worst = worst.max((l - sign.complex() * r).norm() / (1.0 + r.norm()));
    }
    Ok(worst)
}

/// `max_z |B F^α B⁻¹ f(z) - f(e^{-iα}z)| / (1 + |f(e^{-iα}z)|)`.
pub fn verify_frft_rotation(
    alpha: f64,
    f: &Poly,
    zs: &[Complex64],
    rule: &QuadratureRule,
    grid: &LineGrid,
) -> Result<f64> {
    let g = inverse_bargmann_sampled(|z| f.eval(z), &grid.template()?, rule)?;
    let h = frft_transform(alpha, &g)?;
    let rot = Complex64::from_polar(1.0, -alpha);
    let mut worst: f64 = 0.0;
    for &z in zs {
        let l = bargmann(&h, z)?;
        let r = f.eval(rot * z);
        worst = worst.max((l - r).norm() / (1.0 + r.norm()));
    }
    Ok(worst)
}

/// `h_n(x) = H_n(√2 x) e^{-x²}`, the preimage of `(2√2)ⁿ zⁿ`-type monomials
/// under the Bargmann transform, up to normalisation.
pub fn hermite_gaussian(n: usize) -> Result<impl Fn(f64) -> Complex64> {
    let h = crate::hermite::hermite(n)?;
    Ok(move |x: f64| h.eval_real(Float::sqrt(2.0) * x) * Float::exp(-x * x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::disk_points;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn gaussian() -> SampledRealFunction {
        SampledRealFunction::uniform(-8.0, 8.0, 1025, |x| c((-x * x).exp(), 0.0)).unwrap()
    }

    #[test]
    fn constant_is_correct() {
        assert!((BARGMANN_C - (2.0 / PI).powf(0.25)).abs() < 1e-16);
    }

    #[test]
    fn sample_validation() {
        assert!(SampledRealFunction::from_samples(alloc::vec![0.0; 4], alloc::vec![c(0.0, 0.0); 4]).is_err());
        let grid: Vec<f64> = (0..20).map(|i| i as f64).collect();
        assert!(SampledRealFunction::from_samples(grid.clone(), alloc::vec![c(0.0, 0.0); 19]).is_err());
        let mut bad = grid.clone();
        bad[5] = bad[4];
        assert!(SampledRealFunction::from_samples(bad, alloc::vec![c(0.0, 0.0); 20]).is_err());
        let mut vals = alloc::vec![c(0.0, 0.0); 20];
        vals[3] = c(f64::NAN, 0.0);
        assert!(SampledRealFunction::from_samples(grid, vals).is_err());
    }

    #[test]
    fn interpolation() {
        let f = SampledRealFunction::uniform(-4.0, 4.0, 201, |x| c(x.sin(), x * x)).unwrap();
        for x in [-3.91, -1.234, 0.0, 0.517, 3.99] {
            assert!((f.interpolate(x) - c(x.sin(), x * x)).norm() < 1e-10);
        }
        assert_eq!(f.interpolate(4.5), c(0.0, 0.0));
        assert_eq!(f.interpolate(-4.0), f.values()[0]);
    }

    #[test]
    fn identity_and_chirp() {
        let f = gaussian();
        for x in [-1.3, 0.2, 2.0] {
            let v = lct_apply(&RealMatrix2::IDENTITY, &f, x).unwrap();
            assert!((v - (-x * x).exp()).norm() < 1e-12);
            let tau = 0.6;
            let v = lct_apply(&RealMatrix2::chirp(tau), &f, x).unwrap();
            assert!((v - c(0.0, tau * x * x).exp() * (-x * x).exp()).norm() < 1e-12);
        }
    }

    #[test]
    fn quarter_rotation_of_gaussian() {
        let f = gaussian();
        let a = RealMatrix2::rotation(PI / 2.0);
        for x in [-1.0, 0.0, 0.3, 1.7] {
            let v = lct_apply(&a, &f, x).unwrap();
            let expected = Complex64::from_polar(1.0, -PI / 4.0) * (-x * x).exp();
            assert!((v - expected).norm() < 1e-12, "{v} vs {expected}");
            let fr = frft(PI / 2.0, &f, x).unwrap();
            assert!((fr - (-x * x).exp()).norm() < 1e-12);
        }
    }

    #[test]
    fn frft_limits() {
        let f = SampledRealFunction::uniform(-8.0, 8.0, 1025, |x| c((-(x - 0.5) * (x - 0.5)).exp(), 0.0)).unwrap();
        for x in [-1.0, 0.25, 0.5] {
            assert_eq!(frft(0.0, &f, x).unwrap(), f.interpolate(x));
            assert_eq!(frft(PI, &f, x).unwrap(), f.interpolate(-x));
            assert_eq!(frft(-PI, &f, x).unwrap(), f.interpolate(-x));
        }
        assert!(frft(4.0, &f, 0.0).is_err());
    }

    #[test]
    fn determinant_and_budget_errors() {
        let f = gaussian();
        assert!(matches!(
            lct_apply(&RealMatrix2::new(2.0, 0.0, 0.0, 1.0), &f, 0.0),
            Err(Error::SingularDet { .. })
        ));
        assert!(matches!(
            lct_apply(&RealMatrix2::fresnel(0.01), &f, 0.0),
            Err(Error::OscillationBudgetExceeded { .. })
        ));
    }

    #[test]
    fn bargmann_of_gaussian_is_constant() {
        let f = gaussian();
        for z in [c(0.0, 0.0), c(1.0, -0.5), c(-0.3, 1.2)] {
            let v = bargmann(&f, z).unwrap();
            assert!((v - (PI / 2.0).powf(0.25)).norm() < 1e-12);
        }
    }

    #[test]
    fn round_trips() {
        let rule = QuadratureRule::default();
        let template = LineGrid::default().template().unwrap();
        let back = inverse_bargmann_sampled(|z| z * z, &template, &rule).unwrap();
        for z in disk_points(10, 1.5) {
            assert!((bargmann(&back, z).unwrap() - z * z).norm() < 1e-10);
        }
        let h = template.resample(hermite_gaussian(3).unwrap()).unwrap();
        let big_f = |z: Complex64| bargmann(&h, z).unwrap();
        for x in [-2.0, -0.4, 0.0, 1.1] {
            let v = inverse_bargmann(big_f, x, &rule).unwrap();
            assert!((v - h.interpolate(x)).norm() < 1e-8);
        }
        let one = inverse_bargmann(|_| c(1.0, 0.0), 0.7, &rule).unwrap();
        assert!((one - BARGMANN_C * (-0.49f64).exp()).norm() < 1e-12);
    }

    #[test]
    fn sign_examples() {
        assert_eq!(bargmann_sign(&RealMatrix2::IDENTITY).unwrap(), Sign::Plus);
        for alpha in [-3.0, -1.0, 0.5, 2.9] {
            assert_eq!(bargmann_sign(&RealMatrix2::rotation(alpha)).unwrap(), Sign::Plus);
        }
        assert_eq!(
            bargmann_sign(&RealMatrix2::new(-1.0, 0.0, 0.0, -1.0)).unwrap(),
            Sign::Minus
        );
        assert_eq!(lct_inverse_sign(&RealMatrix2::IDENTITY).unwrap(), Sign::Plus);
        assert_eq!(
            lct_inverse_sign(&RealMatrix2::new(-1.0, 0.0, -1.0, -1.0)).unwrap(),
            Sign::Minus
        );
        assert_eq!(
            lct_inverse_sign(&RealMatrix2::new(0.0, 1.0, -1.0, 0.0)).unwrap(),
            Sign::Plus
        );
    }

    #[test]
    fn inverse_sign_matches_composition_signs() {
        for a in [
            RealMatrix2::new(-1.0, 0.0, -1.0, -1.0),
            RealMatrix2::new(-2.0, 0.0, 0.3, -0.5),
            RealMatrix2::new(2.0, 0.0, 0.3, 0.5),
            RealMatrix2::rotation(2.5),
            RealMatrix2::new(-1.0, 0.5, 0.0, -1.0),
        ] {
            let inv = a.inverse().unwrap();
            let c = lct_composition_sign(&inv, &a).unwrap();
            assert_eq!(c, lct_inverse_sign(&a).unwrap(), "{a:?}");
        }
    }

    #[test]
    fn conjugation_examples() {
        let rule = QuadratureRule::default();
        let grid = LineGrid::default();
        let zs = disk_points(8, 1.5);
        let f = Poly::from_real(&[0.5, -1.0, 0.0, 1.0]);
        for a in [
            RealMatrix2::IDENTITY,
            RealMatrix2::rotation(PI / 3.0),
            RealMatrix2::dilation(1.5),
            RealMatrix2::fresnel(0.7),
            RealMatrix2::chirp(0.6),
            RealMatrix2::new(-1.0, 0.0, 0.4, -1.0),
        ] {
            let r = verify_conjugation(&a, &f, &zs, &rule, &grid).unwrap();
            assert!(r < 1e-9, "{a:?}: {r}");
        }
        let r = verify_frft_rotation(PI / 3.0, &Poly::monomial(3), &zs, &rule, &grid).unwrap();
        assert!(r < 1e-9);
    }
}
