//! Canonical integral operators on the Fock space.
//!
//! The crate implements the two-parameter family of integral operators
//! `T^(s,t)` acting on the Fock space `F²` of entire functions that are
//! square integrable against the Gaussian measure `dλ(z) = π⁻¹ e^{-|z|²} dA(z)`:
//!
//! ```text
//! T^(s,t) f(z) = ∫ K^(s,t)(z, w) f(w) dλ(w),
//! K^(s,t)(z, w) = s^{-1/2} exp[(t z² - conj(t w²) + 2 z w̄) / (2 s)].
//! ```
//!
//! Alongside the operators it provides the complex form of `GL(2,ℝ)` that
//! parameterizes them ([`group`]), Gaussian quadrature on the plane and the
//! basic Fock-space machinery ([`fock`]), the kernels and their composition
//! law ([`kernel`]), the operators, their truncated matrices and
//! Hilbert–Schmidt norms ([`operator`]), eigenpairs of the unitary members
//! ([`spectral`]), the Hermite-polynomial integral identities the eigenpairs
//! are built from ([`hermite`]), and the linear canonical transforms on
//! `L²(ℝ)` together with the Bargmann transform that intertwines them with
//! the operators ([`lct`]).
//!
//! Every branch-sensitive square root goes through
//! [`scalar::principal_sqrt`], whose argument convention is `θ ∈ (-π, π]`.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![warn(missing_debug_implementations)]
// `!(x < y)` is used deliberately so that NaN fails validation
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;
#[cfg(any(test, feature = "std"))]
extern crate std;

pub mod error;
pub mod fock;
pub mod group;
pub mod hermite;
pub mod kernel;
pub mod lct;
pub mod matrix;
pub mod operator;
pub mod quadrature;
pub mod scalar;
pub mod spectral;

pub use num_complex::Complex64;

pub use error::{Error, Result};
pub use fock::{QuadratureRule, TruncatedFockVector};
pub use group::{GroupElement, RealMatrix2, TOL_GROUP};
pub use hermite::{IntegralEqParams, Poly};
pub use kernel::{CanonicalKernel, KernelComposition};
pub use lct::{LineGrid, SampledRealFunction, WeightKind};
pub use matrix::CMatrix;
pub use operator::{CanonicalOperator, MatrixMethod, OperatorClass};
pub use scalar::{principal_sqrt, Sign};
pub use spectral::{Eigenfunction, SpectralData};
