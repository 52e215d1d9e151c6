//! Scalar conventions shared by every module: the principal square root,
//! the `±1` sign type and compensated summation.

use core::fmt;
use core::ops::{Mul, Neg};

use num_complex::Complex64;
use num_traits::Float;

use crate::error::{Error, Result};
use crate::group::TOL_GROUP;

/// Principal square root `√|z| e^{iθ/2}` with `θ ∈ (-π, π]`.
///
/// Negative reals, including those carrying a negative zero imaginary part,
/// sit on the `θ = π` side of the cut and map to `+i√|z|`.
pub fn principal_sqrt(z: Complex64) -> Complex64 {
    let (x, y) = (z.re, z.im);
    if x == 0.0 && y == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    if y == 0.0 {
        return if x > 0.0 {
            Complex64::new(Float::sqrt(x), 0.0)
        } else {
            Complex64::new(0.0, Float::sqrt(-x))
        };
    }
    let r = Float::hypot(x, y);
    if x >= 0.0 {
        let u = Float::sqrt(0.5 * (r + x));
        Complex64::new(u, y / (2.0 * u))
    } else {
        let v = Float::sqrt(0.5 * (r - x));
        let v = if y < 0.0 { -v } else { v };
        Complex64::new(y / (2.0 * v), v)
    }
}

/// True when `z` lies on the open negative real axis, tested exactly.
pub fn is_negative_real(z: Complex64) -> bool {
    z.im == 0.0 && z.re < 0.0
}

/// A value in `{+1, -1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// Snap a computed unimodular value onto `±1`.
    ///
    /// Fails with [`Error::BranchFailure`] unless `z` is within
    /// [`TOL_GROUP`] of `+1` or `-1`.
    pub fn from_unit(z: Complex64) -> Result<Sign> {
        let tol = TOL_GROUP;
        if (z - 1.0).norm() <= tol {
            Ok(Sign::Plus)
        } else if (z + 1.0).norm() <= tol {
            Ok(Sign::Minus)
        } else {
            Err(Error::BranchFailure { re: z.re, im: z.im })
        }
    }

    pub fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn complex(self) -> Complex64 {
        Complex64::new(self.value(), 0.0)
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

/// Neumaier-compensated complex accumulator.
///
/// Terms are folded in the order they are added, so a fixed iteration order
/// gives bit-identical results.
#[derive(Clone, Copy, Debug, Default)]
pub struct CompensatedSum {
    re: f64,
    re_c: f64,
    im: f64,
    im_c: f64,
}

#[inline]
fn neumaier(sum: &mut f64, comp: &mut f64, x: f64) {
    let t = *sum + x;
    if Float::abs(*sum) >= Float::abs(x) {
        *comp += (*sum - t) + x;
    } else {
        *comp += (x - t) + *sum;
    }
    *sum = t;
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, z: Complex64) {
        neumaier(&mut self.re, &mut self.re_c, z.re);
        neumaier(&mut self.im, &mut self.im_c, z.im);
    }

    pub fn total(&self) -> Complex64 {
        Complex64::new(self.re + self.re_c, self.im + self.im_c)
    }
}

/// Unevaluated sum `hi + lo` carrying about 106 bits, for alternating sums
/// whose terms dwarf the result.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub(crate) struct DoubleDouble {
    hi: f64,
    lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, Float::mul_add(a, b, -p))
}

impl DoubleDouble {
    pub(crate) const ONE: Self = DoubleDouble { hi: 1.0, lo: 0.0 };

    pub(crate) fn from_f64(x: f64) -> Self {
        DoubleDouble { hi: x, lo: 0.0 }
    }

    /// `a² + b²` without rounding the squares.
    pub(crate) fn norm_sqr(z: Complex64) -> Self {
        let (p, e) = two_prod(z.re, z.re);
        let (q, f) = two_prod(z.im, z.im);
        DoubleDouble { hi: p, lo: e }.add(DoubleDouble { hi: q, lo: f })
    }

    pub(crate) fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub(crate) fn add(self, o: Self) -> Self {
        let (s, e) = two_sum(self.hi, o.hi);
        let (t, f) = two_sum(self.lo, o.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s, e + f);
        DoubleDouble { hi, lo }
    }

    pub(crate) fn mul(self, o: Self) -> Self {
        let (p, e) = two_prod(self.hi, o.hi);
        let (hi, lo) = quick_two_sum(p, e + (self.hi * o.lo + self.lo * o.hi));
        DoubleDouble { hi, lo }
    }

    pub(crate) fn mul_f64(self, x: f64) -> Self {
        self.mul(DoubleDouble::from_f64(x))
    }

    pub(crate) fn div_f64(self, x: f64) -> Self {
        self.div(DoubleDouble::from_f64(x))
    }

    pub(crate) fn div(self, o: Self) -> Self {
        let q1 = self.hi / o.hi;
        let r = self.add(o.mul_f64(-q1));
        let q2 = r.hi / o.hi;
        let r = r.add(o.mul_f64(-q2));
        let q3 = r.hi / o.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        DoubleDouble { hi, lo }.add(DoubleDouble::from_f64(q3))
    }

    pub(crate) fn neg(self) -> Self {
        DoubleDouble {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::FRAC_PI_4;

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(principal_sqrt(Complex64::new(4.0, 0.0)), Complex64::new(2.0, 0.0));
        assert_eq!(principal_sqrt(Complex64::new(-1.0, 0.0)), Complex64::new(0.0, 1.0));
        assert_eq!(principal_sqrt(Complex64::new(-1.0, -0.0)), Complex64::new(0.0, 1.0));
        let r = principal_sqrt(Complex64::new(0.0, -1.0));
        assert!(close(r, Complex64::from_polar(1.0, -FRAC_PI_4), 1e-15));
        assert_eq!(principal_sqrt(Complex64::new(0.0, 0.0)), Complex64::new(0.0, 0.0));
    }

    #[test]
    fn sqrt_half_plane() {
        for &(x, y) in &[(-3.0, 1e-300), (-3.0, -1e-300), (1e-10, -5.0), (-2.0, 0.5)] {
            let r = principal_sqrt(Complex64::new(x, y));
            assert!(r.re >= 0.0);
            assert!(close(r * r, Complex64::new(x, y), 1e-14 * (1.0 + x.abs() + y.abs())));
        }
    }

    #[test]
    fn sign_snapping() {
        assert_eq!(Sign::from_unit(Complex64::new(1.0, 1e-13)).unwrap(), Sign::Plus);
        assert_eq!(Sign::from_unit(Complex64::new(-1.0, 0.0)).unwrap(), Sign::Minus);
        assert!(matches!(
            Sign::from_unit(Complex64::new(0.0, 1.0)),
            Err(Error::BranchFailure { .. })
        ));
        assert_eq!(Sign::Minus * Sign::Minus, Sign::Plus);
        assert_eq!(-Sign::Plus, Sign::Minus);
    }

    #[test]
    fn compensated_sum_recovers_small_terms() {
        let mut acc = CompensatedSum::new();
        acc.add(Complex64::new(1e16, 0.0));
        for _ in 0..10 {
            acc.add(Complex64::new(1.0, 0.0));
        }
        acc.add(Complex64::new(-1e16, 0.0));
        assert_eq!(acc.total(), Complex64::new(10.0, 0.0));
    }

    #[test]
    fn double_double_keeps_low_bits() {
        let third = DoubleDouble::ONE.div_f64(3.0);
        let back = third.mul_f64(3.0).add(DoubleDouble::ONE.neg());
        assert!(back.to_f64().abs() < 1e-31);
        // 1 + 2^-80 - 1 survives
        let tiny = (2.0f64).powi(-80);
        let x = DoubleDouble::ONE
            .add(DoubleDouble::from_f64(tiny))
            .add(DoubleDouble::ONE.neg());
        assert_eq!(x.to_f64(), tiny);
        let n = DoubleDouble::norm_sqr(Complex64::new(1.0 + 1e-10, 3.0));
        assert!((n.to_f64() - (10.0 + 2e-10 + 1e-20)).abs() < 1e-14);
        let r = DoubleDouble::ONE.div(third).add(DoubleDouble::from_f64(-3.0));
        assert!(r.to_f64().abs() < 1e-30);
    }
}
