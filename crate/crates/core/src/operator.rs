//! The integral operators `T^(s,t) f(z) = ∫ K^(s,t)(z,w) f(w) dλ(w)`.

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;
use num_traits::Float;

use crate::error::{Error, Result};
use crate::fock::{ln_factorials, monomial_value, QuadratureRule, TruncatedFockVector};
use crate::group::{cocycle, GroupElement, TOL_GROUP};
use crate::kernel::{conjugation_sign, CanonicalKernel};
use crate::matrix::CMatrix;
use crate::scalar::{principal_sqrt, CompensatedSum, DoubleDouble, Sign};

/// Largest truncation accepted by [`CanonicalOperator::matrix`].
pub const MAX_TRUNCATION: usize = 256;

/// The trichotomy on `D = |s|² - |t|²`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OperatorClass {
    /// `D < 1`.
    Unbounded,
    /// `|D - 1| ≤ TOL_GROUP`.
    Unitary,
    /// `D > 1`.
    HilbertSchmidt,
}

impl OperatorClass {
    pub fn name(self) -> &'static str {
        match self {
            OperatorClass::Unbounded => "Unbounded",
            OperatorClass::Unitary => "Unitary",
            OperatorClass::HilbertSchmidt => "HilbertSchmidt",
        }
    }
}

/// Classifies `T^(s,t)`; requires `s ≠ 0` and `|t| < 2|s|`.
pub fn classify(g: &GroupElement) -> Result<OperatorClass> {
    CanonicalKernel::new(*g)?;
    let d = g.det();
    Ok(if Float::abs(d - 1.0) <= TOL_GROUP {
        OperatorClass::Unitary
    } else if d > 1.0 {
        OperatorClass::HilbertSchmidt
    } else {
        OperatorClass::Unbounded
    })
}

/// `‖T^(s,t)‖²_{S₂} = ∫∫ |K^(s,t)|² dλ dλ = |s| / (|s|² - |t|² - 1)`.
pub fn hs_norm_sq(g: &GroupElement) -> Result<f64> {
    match classify(g)? {
        OperatorClass::HilbertSchmidt => Ok(g.s().norm() / (g.det() - 1.0)),
        _ => Err(Error::NotHilbertSchmidt { excess: g.det() - 1.0 }),
    }
}

/// `∫∫ |K^(s,t)(z,w)|² dλ(z) dλ(w)` by tensor quadrature in both variables.
pub fn hs_norm_sq_quadrature(g: &GroupElement, rule: &QuadratureRule) -> Result<f64> {
    let k = CanonicalKernel::new(*g)?;
    let nodes = rule.planar();
    let mut outer = CompensatedSum::new();
    for &(z, wz) in nodes {
        let mut inner = CompensatedSum::new();
        for &(w, ww) in nodes {
            let v = k.eval(z, w).norm_sqr();
            if !v.is_finite() {
                return Err(Error::NonFiniteIntegrand { re: w.re, im: w.im });
            }
            inner.add(Complex64::new(v * ww, 0.0));
        }
        outer.add(inner.total() * wz);
    }
    Ok(outer.total().re)
}

/// How [`CanonicalOperator::matrix`] computes `M_{mn} = ⟨T e_n, e_m⟩`.
#[derive(Clone, Debug, PartialEq)]
pub enum MatrixMethod {
    /// Expansion of `T e_n` in monomials.
    ClosedForm,
    /// Double quadrature with the given rule.
    Quadrature(QuadratureRule),
}

/// `T^(s,t)` for `s ≠ 0`, `|t| < 2|s|`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CanonicalOperator {
    kernel: CanonicalKernel,
    class: OperatorClass,
}

impl CanonicalOperator {
    pub fn new(g: GroupElement) -> Result<Self> {
        let class = classify(&g)?;
        Ok(CanonicalOperator {
            kernel: CanonicalKernel::new(g)?,
            class,
        })
    }

    pub fn params(&self) -> GroupElement {
        self.kernel.params()
    }

    pub fn class(&self) -> OperatorClass {
        self.class
    }

    pub fn kernel(&self) -> &CanonicalKernel {
        &self.kernel
    }

    /// `T f(z)` by quadrature. Fails with [`Error::UnboundedOperator`] for
    /// unbounded `T`; see [`CanonicalOperator::apply_unbounded`].
    pub fn apply<F>(&self, f: F, z: Complex64, rule: &QuadratureRule) -> Result<Complex64>
    where
        F: Fn(Complex64) -> Complex64,
    {
        if self.class == OperatorClass::Unbounded {
            return Err(Error::UnboundedOperator);
        }
        self.apply_unbounded(f, z, rule)
    }

    /// `T f(z)` by quadrature regardless of class. The caller vouches that
    /// `f` is numerically supported inside the rule's radius.
    pub fn apply_unbounded<F>(&self, f: F, z: Complex64, rule: &QuadratureRule) -> Result<Complex64>
    where
        F: Fn(Complex64) -> Complex64,
    {
        rule.integrate(|w| self.kernel.eval(z, w) * f(w))
    }

    pub fn apply_vector(&self, v: &TruncatedFockVector, z: Complex64, rule: &QuadratureRule) -> Result<Complex64> {
        self.apply(|w| v.eval(w), z, rule)
    }

    /// Closed form of `T e_n`:
    ///
    /// ```text
    /// T e_n(z) = s^{-1/2} e^{tz²/(2s)} Σ_k (-1)^k √(n!) / (k! (n-2k)!) s^{-(n-2k)} (t̄/(2s))^k z^{n-2k}
    /// ```
    ///
    /// which is `(1/√(s n!)) e^{tz²/(2s)} (t̄/(2s))^{n/2} H_n(z/√(2st̄))` with
    /// the branch ambiguity expanded away. Requires `|s| > |t|`.
    pub fn apply_to_basis(&self, n: usize) -> Result<impl Fn(Complex64) -> Complex64> {
        self.require_in_fock()?;
        let g = self.params();
        let (s, t) = (g.s(), g.t());
        let alpha = t.conj() / (2.0 * s);
        let beta = t / (2.0 * s);
        let inv_sqrt_s = principal_sqrt(s).inv();
        let lf = ln_factorials(n + 1);
        let mut coeffs = Vec::with_capacity(n / 2 + 1);
        for k in 0..=n / 2 {
            let j = n - 2 * k;
            let mag = 0.5 * lf[n] - lf[k] - lf[j];
            let v = Float::exp(mag) * s.powi(-(j as i32)) * alpha.powu(k as u32);
            coeffs.push(if k % 2 == 0 { v } else { -v });
        }
        Ok(move |z: Complex64| {
            let mut acc = CompensatedSum::new();
            for (k, ck) in coeffs.iter().enumerate() {
                acc.add(ck * z.powu((n - 2 * k) as u32));
            }
            inv_sqrt_s * (beta * z * z).exp() * acc.total()
        })
    }

    /// Truncated matrix `M_{mn} = ⟨T e_n, e_m⟩`, `m, n < N`.
    pub fn matrix(&self, n_trunc: usize, method: &MatrixMethod) -> Result<CMatrix> {
        self.require_in_fock()?;
        if n_trunc == 0 {
            return Err(Error::InvalidArgument("truncation must be positive"));
        }
        if n_trunc > MAX_TRUNCATION {
            return Err(Error::TruncationTooLarge {
                requested: n_trunc,
                limit: MAX_TRUNCATION,
            });
        }
        match method {
            MatrixMethod::ClosedForm => Ok(self.matrix_closed_form(n_trunc)),
            MatrixMethod::Quadrature(rule) => self.matrix_quadrature(n_trunc, rule),
        }
    }

    /// Coefficient of `e_m` in `T e_n`: with `l = (m - n + 2k)/2`,
    ///
    /// ```text
    /// M_{mn} = s^{-1/2} Σ_k (-1)^k √(m! n!) / (k! (n-2k)! l!) s^{-(n-2k)} α^k β^l,
    /// α = t̄/(2s), β = t/(2s).
    /// ```
    ///
    /// Consecutive terms differ by the real factor
    /// `-j(j-1)|t|² / (4(k+1)(l+1))`, so the sum is the largest term (formed
    /// from its logarithm) times a real alternating sum, accumulated in
    /// double-double because its terms can exceed the result by ~10⁸.
    fn matrix_closed_form(&self, n_trunc: usize) -> CMatrix {
        let g = self.params();
        let (s, t) = (g.s(), g.t());
        let inv_sqrt_s = principal_sqrt(s).inv();
        let lf = ln_factorials(n_trunc + 1);
        let (ln_s, arg_s) = (Float::ln(s.norm()), s.arg());
        if t.norm() == 0.0 {
            return CMatrix::from_fn(n_trunc, n_trunc, |m, n| {
                if m == n {
                    inv_sqrt_s * Complex64::from_polar(Float::exp(-(n as f64) * ln_s), -(n as f64) * arg_s)
                } else {
                    Complex64::new(0.0, 0.0)
                }
            });
        }
        let alpha = t.conj() / (2.0 * s);
        let beta = t / (2.0 * s);
        let (ln_a, arg_a) = (Float::ln(alpha.norm()), alpha.arg());
        let (ln_b, arg_b) = (Float::ln(beta.norm()), beta.arg());
        let t_sq = DoubleDouble::norm_sqr(t);
        CMatrix::from_fn(n_trunc, n_trunc, |m, n| {
            if (m + n) % 2 == 1 {
                return Complex64::new(0.0, 0.0);
            }
            // admissible k: m + 2k ≥ n and 2k ≤ n
            let k_lo = n.saturating_sub(m) / 2;
            let k_hi = n / 2;
            let ln_term = |k: usize| {
                let (j, l) = (n - 2 * k, (m + 2 * k - n) / 2);
                0.5 * (lf[m] + lf[n]) - lf[k] - lf[j] - lf[l] - j as f64 * ln_s + k as f64 * ln_a + l as f64 * ln_b
            };
            let mut k_star = k_lo;
            let mut best = ln_term(k_lo);
            for k in k_lo + 1..=k_hi {
                let v = ln_term(k);
                if v > best {
                    best = v;
                    k_star = k;
                }
            }
            // c_k / c_{k*}, walking outwards from the peak
            let mut sum = DoubleDouble::ONE;
            let mut c = DoubleDouble::ONE;
            for k in k_star..k_hi {
                let (j, l) = ((n - 2 * k) as f64, ((m + 2 * k - n) / 2) as f64);
                c = c
                    .mul(t_sq)
                    .mul_f64(j * (j - 1.0))
                    .div_f64(4.0 * (k as f64 + 1.0) * (l + 1.0))
                    .neg();
                sum = sum.add(c);
            }
            c = DoubleDouble::ONE;
            for k in (k_lo..k_star).rev() {
                let (j, l) = ((n - 2 * k) as f64, ((m + 2 * k - n) / 2) as f64);
                c = c
                    .mul_f64(4.0 * (k as f64 + 1.0) * (l + 1.0))
                    .div(t_sq.mul_f64(j * (j - 1.0)))
                    .neg();
                sum = sum.add(c);
            }
            let (kf, jf, lf_) = (
                k_star as f64,
                (n - 2 * k_star) as f64,
                ((m + 2 * k_star - n) / 2) as f64,
            );
            let phase = -jf * arg_s + kf * (arg_a + PI) + lf_ * arg_b;
            inv_sqrt_s * Complex64::from_polar(Float::exp(best), phase) * sum.to_f64()
        })
    }

    fn matrix_quadrature(&self, n_trunc: usize, rule: &QuadratureRule) -> Result<CMatrix> {
        let nodes = rule.planar();
        // weighted basis values e_n(w) W_w, reused for every z node
        let mut basis = Vec::with_capacity(nodes.len() * n_trunc);
        for &(w, ww) in nodes {
            for n in 0..n_trunc {
                basis.push(monomial_value(n, w) * ww);
            }
        }
        let mut out = alloc::vec![CompensatedSum::new(); n_trunc * n_trunc];
        let mut row = alloc::vec![CompensatedSum::new(); n_trunc];
        for &(z, wz) in nodes {
            row.iter_mut().for_each(|acc| *acc = CompensatedSum::new());
            for (i, &(w, _)) in nodes.iter().enumerate() {
                let k = self.kernel.eval(z, w);
                if !k.is_finite() {
                    return Err(Error::NonFiniteIntegrand { re: w.re, im: w.im });
                }
                for (n, acc) in row.iter_mut().enumerate() {
                    acc.add(k * basis[i * n_trunc + n]);
                }
            }
            // T e_n(z) is row[n]; project on e_m(z) with weight W_z
            let mut em = Complex64::new(1.0, 0.0);
            for m in 0..n_trunc {
                if m > 0 {
                    em *= z / Float::sqrt(m as f64);
                }
                let wconj = em.conj() * wz;
                for n in 0..n_trunc {
                    out[m * n_trunc + n].add(row[n].total() * wconj);
                }
            }
        }
        Ok(CMatrix::from_fn(n_trunc, n_trunc, |m, n| out[m * n_trunc + n].total()))
    }

    fn require_in_fock(&self) -> Result<()> {
        if self.kernel.in_fock() {
            Ok(())
        } else {
            let g = self.params();
            Err(Error::NotInFock {
                s_abs: g.s().norm(),
                t_abs: g.t().norm(),
            })
        }
    }
}

/// `T^* = c T^(s̄,-t)` for unitary `T^(s,t)`; returns `((s̄,-t), c)`.
pub fn adjoint_params(g: &GroupElement) -> Result<(GroupElement, Sign)> {
    if classify(g)? != OperatorClass::Unitary {
        return Err(Error::NotUnitary { excess: g.det() - 1.0 });
    }
    Ok((g.adjoint_symbol(), conjugation_sign(g.s())?))
}

/// `T^{g₁} T^{g₂} = c T^{g₁·g₂}` on `SL(ℂ×ℂ)`; returns `(g₁·g₂, c)`.
pub fn compose_operators(g1: &GroupElement, g2: &GroupElement) -> Result<(GroupElement, Sign)> {
    for g in [g1, g2] {
        if !g.is_sl() {
            return Err(Error::NotUnitary { excess: g.det() - 1.0 });
        }
    }
    Ok((g1.compose(g2)?, cocycle(g1, g2)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::{monomial, reproducing_kernel};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn op(s: Complex64, t: Complex64) -> CanonicalOperator {
        CanonicalOperator::new(GroupElement::pair(s, t)).unwrap()
    }

    #[test]
    fn classification() {
        let cls = |s, t| classify(&GroupElement::pair(s, t)).unwrap();
        assert_eq!(cls(c(1.0, 0.0), c(0.0, 0.0)), OperatorClass::Unitary);
        assert_eq!(cls(c(2.0, 0.0), c(1.0, 0.0)), OperatorClass::HilbertSchmidt);
        assert_eq!(cls(c(1.0, 0.0), c(0.5, 0.0)), OperatorClass::Unbounded);
        assert_eq!(cls(c(1.0, 0.0), c(1.5, 0.0)), OperatorClass::Unbounded);
        assert!(matches!(
            classify(&GroupElement::pair(c(1.0, 0.0), c(2.0, 0.0))),
            Err(Error::DomainViolation { .. })
        ));
    }

    #[test]
    fn hs_closed_form() {
        let hs = |s, t| hs_norm_sq(&GroupElement::pair(s, t)).unwrap();
        assert!((hs(c(2.0, 0.0), c(0.0, 0.0)) - 2.0 / 3.0).abs() < 1e-15);
        assert!((hs(c(3.0, 0.0), c(0.0, 2.0)) - 0.75).abs() < 1e-15);
        assert!((hs(c(2.0, 0.0), c(1.0, 0.0)) - 1.0).abs() < 1e-15);
        assert!((hs(c(2f64.sqrt(), 0.0), c(0.0, 0.0)) - 2f64.sqrt()).abs() < 1e-14);
        assert!(matches!(
            hs_norm_sq(&GroupElement::IDENTITY),
            Err(Error::NotHilbertSchmidt { .. })
        ));
    }

    #[test]
    fn identity_reproduces() {
        let t = op(c(1.0, 0.0), c(0.0, 0.0));
        let rule = QuadratureRule::default();
        let f = |z: Complex64| z * z * z - 2.0 * z + c(0.5, 1.0);
        let z = c(0.7, 0.2);
        assert!((t.apply(f, z, &rule).unwrap() - f(z)).norm() < 1e-12);
    }

    #[test]
    fn action_on_constants_and_kernels() {
        let g = GroupElement::pair(c(1.2, 0.9), c(0.5, -0.3));
        let t = CanonicalOperator::new(g).unwrap();
        let rule = QuadratureRule::for_kernel(&g).unwrap();
        let z = c(0.4, -0.6);
        let one = t.apply(|_| c(1.0, 0.0), z, &rule).unwrap();
        let expected = principal_sqrt(g.s()).inv() * (g.t() * z * z / (2.0 * g.s())).exp();
        assert!((one - expected).norm() < 1e-10);
        let u = c(-0.3, 0.8);
        let v = t.apply(reproducing_kernel(u), z, &rule).unwrap();
        assert!((v - t.kernel().eval(z, u)).norm() < 1e-10 * v.norm());
    }

    #[test]
    fn unbounded_requires_opt_in() {
        let t = op(c(1.0, 0.0), c(0.5, 0.0));
        let rule = QuadratureRule::default();
        assert_eq!(
            t.apply(|_| c(1.0, 0.0), c(0.0, 0.0), &rule),
            Err(Error::UnboundedOperator)
        );
        let v = t.apply_unbounded(|_| c(1.0, 0.0), c(0.0, 0.0), &rule).unwrap();
        assert!((v - 1.0).norm() < 1e-10);
    }

    #[test]
    fn basis_closed_form_matches_quadrature() {
        let cases = [
            GroupElement::pair(c(2.0, 0.0), c(1.0, 0.0)),
            GroupElement::pair(c(0.0, 2f64.sqrt()), c(1.0, 0.0)),
            GroupElement::pair(c(-1.0, 1.5), c(0.8, -1.2)),
            GroupElement::pair(c(0.5, 0.5), c(0.0, 0.0)),
        ];
        for g in cases {
            let t = CanonicalOperator::new(g).unwrap();
            let rule = QuadratureRule::for_kernel(&g).unwrap();
            for n in [0usize, 1, 2, 5] {
                let closed = t.apply_to_basis(n).unwrap();
                for j in 0..20 {
                    let z = Complex64::from_polar(0.1 + 0.07 * j as f64, 0.9 * j as f64);
                    let q = t.apply_unbounded(monomial(n), z, &rule).unwrap();
                    let v = closed(z);
                    assert!(
                        (q - v).norm() <= 1e-8 * v.norm().max(1e-3),
                        "{g} n={n} z={z}: {q} vs {v}"
                    );
                }
            }
        }
        let t = op(c(2.0, 0.0), c(1.0, 0.0));
        let q = t
            .apply(monomial(2), c(0.5, 0.0), &QuadratureRule::new(96).unwrap())
            .unwrap();
        assert!((q - t.apply_to_basis(2).unwrap()(c(0.5, 0.0))).norm() < 1e-7 * q.norm());
    }

    #[test]
    fn rotation_acts_diagonally() {
        let alpha = 0.9;
        let t = op(Complex64::from_polar(1.0, alpha), c(0.0, 0.0));
        let z = c(0.3, 1.1);
        for n in 0..6 {
            let v = t.apply_to_basis(n).unwrap()(z);
            let expected = Complex64::from_polar(1.0, -alpha * (n as f64 + 0.5)) * monomial_value(n, z);
            assert!((v - expected).norm() < 1e-14);
        }
    }

    #[test]
    fn matrix_examples() {
        let id = op(c(1.0, 0.0), c(0.0, 0.0))
            .matrix(12, &MatrixMethod::ClosedForm)
            .unwrap();
        assert!(id.block_max_diff(&CMatrix::identity(12), 12) < 1e-15);
        let a = PI / 3.0;
        let m = op(Complex64::from_polar(1.0, a), c(0.0, 0.0))
            .matrix(10, &MatrixMethod::ClosedForm)
            .unwrap();
        for n in 0..10 {
            let d = Complex64::from_polar(1.0, -a * (n as f64 + 0.5));
            assert!((m[(n, n)] - d).norm() < 1e-14);
        }
        let m = op(c(2.0, 0.0), c(1.0, 0.0))
            .matrix(60, &MatrixMethod::ClosedForm)
            .unwrap();
        assert!((m.frobenius_sq() - 1.0).abs() < 1e-3);
    }

    #[test]
    fn matrix_errors() {
        let t = op(c(1.0, 0.0), c(1.5, 0.0));
        assert!(matches!(
            t.matrix(4, &MatrixMethod::ClosedForm),
            Err(Error::NotInFock { .. })
        ));
        let t = op(c(1.0, 0.0), c(0.0, 0.0));
        assert!(matches!(
            t.matrix(257, &MatrixMethod::ClosedForm),
            Err(Error::TruncationTooLarge { .. })
        ));
    }

    #[test]
    fn matrix_methods_agree() {
        let g = GroupElement::pair(c(1.1, 0.8), c(0.4, 0.6));
        let t = CanonicalOperator::new(g).unwrap();
        let closed = t.matrix(20, &MatrixMethod::ClosedForm).unwrap();
        let quad = t
            .matrix(20, &MatrixMethod::Quadrature(QuadratureRule::new(48).unwrap()))
            .unwrap();
        assert!(closed.block_max_diff(&quad, 12) < 1e-8);
    }

    #[test]
    fn adjoint_examples() {
        let (g, c0) = adjoint_params(&GroupElement::IDENTITY).unwrap();
        assert_eq!((g, c0), (GroupElement::IDENTITY, Sign::Plus));
        let (g, sign) = adjoint_params(&GroupElement::pair(c(0.0, 2f64.sqrt()), c(1.0, 0.0))).unwrap();
        assert_eq!(g, GroupElement::pair(c(0.0, -(2f64.sqrt())), c(-1.0, -0.0)));
        assert_eq!(sign, Sign::Plus);
        let (g, sign) = adjoint_params(&GroupElement::pair(c(-1.0, 0.0), c(0.0, 0.0))).unwrap();
        assert_eq!(g.s(), c(-1.0, 0.0));
        assert_eq!(sign, Sign::Minus);
        assert!(matches!(
            adjoint_params(&GroupElement::pair(c(2.0, 0.0), c(1.0, 0.0))),
            Err(Error::NotUnitary { .. })
        ));
    }

    #[test]
    fn adjoint_matches_conjugate_transpose() {
        let g = GroupElement::pair(c(0.0, 2f64.sqrt()), c(1.0, 0.0));
        let (ga, sign) = adjoint_params(&g).unwrap();
        let m = op(g.s(), g.t()).matrix(40, &MatrixMethod::ClosedForm).unwrap();
        let ma = op(ga.s(), ga.t()).matrix(40, &MatrixMethod::ClosedForm).unwrap();
        let d = ma.block_max_diff(&m.adjoint().scale(sign.complex()), 40);
        assert!(d < 1e-12, "{d}");
        let g = GroupElement::pair(c(-1.0, 0.0), c(0.0, 0.0));
        let (ga, sign) = adjoint_params(&g).unwrap();
        let m = op(g.s(), g.t()).matrix(8, &MatrixMethod::ClosedForm).unwrap();
        let ma = op(ga.s(), ga.t()).matrix(8, &MatrixMethod::ClosedForm).unwrap();
        assert!(ma.block_max_diff(&m.adjoint().scale(sign.complex()), 8) < 1e-14);
    }

    #[test]
    fn compose_examples() {
        let i = GroupElement::pair(c(0.0, 1.0), c(0.0, 0.0));
        let (p, sign) = compose_operators(&i, &i).unwrap();
        assert!(p.distance(&GroupElement::pair(c(-1.0, 0.0), c(0.0, 0.0))) < 1e-15);
        assert_eq!(sign, Sign::Plus);
        let w = GroupElement::rotation(3.0 * PI / 4.0);
        let (p, sign) = compose_operators(&w, &w).unwrap();
        assert!(p.distance(&GroupElement::rotation(-PI / 2.0)) < 1e-15);
        assert_eq!(sign, Sign::Minus);
        let h = GroupElement::pair(c(0.3, 1.2), c(0.2, -0.7));
        let h = GroupElement::pair(h.s() / h.det().sqrt(), h.t() / h.det().sqrt());
        let (p, _) = compose_operators(&h, &h.inverse().unwrap()).unwrap();
        assert!(p.distance(&GroupElement::IDENTITY) < 1e-14);
        assert!(compose_operators(&GroupElement::pair(c(2.0, 0.0), c(0.0, 0.0)), &i).is_err());
    }

    #[test]
    fn matrix_product_realizes_sign() {
        let w = GroupElement::rotation(3.0 * PI / 4.0);
        let (p, sign) = compose_operators(&w, &w).unwrap();
        let m = op(w.s(), w.t()).matrix(10, &MatrixMethod::ClosedForm).unwrap();
        let mp = op(p.s(), p.t()).matrix(10, &MatrixMethod::ClosedForm).unwrap();
        assert!(m.matmul(&m).block_max_diff(&mp.scale(sign.complex()), 10) < 1e-14);
    }
}
