//! Gauss–Hermite rules on the real line.
//!
//! Nodes are found by Newton iteration on the orthonormal Hermite functions
//! `ψ_k(x) = h_k(x) e^{-x²/2}`, which stay in floating-point range for every
//! node count used here (up to a few hundred), unlike the raw polynomials.

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_traits::Float;

use crate::error::{Error, Result};

/// Largest supported node count.
pub const MAX_NODES: usize = 1024;

/// Gauss–Hermite nodes `xᵢ` (ascending) and *scaled* weights `wᵢ e^{xᵢ²}`.
///
/// The plain weights for `∫ g(x) e^{-x²} dx ≈ Σ wᵢ g(xᵢ)` are
/// `scaled[i] * exp(-x[i]²)`; keeping them scaled avoids underflow when the
/// rule is used for `∫ h(x) dx ≈ Σ wᵢ e^{xᵢ²} h(xᵢ)`.
pub fn gauss_hermite(m: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    if m == 0 {
        return Err(Error::InvalidRule("node count must be positive"));
    }
    if m > MAX_NODES {
        return Err(Error::InvalidRule("node count too large"));
    }
    let mut nodes = alloc::vec![0.0; m];
    let half = m.div_ceil(2);
    let mf = m as f64;
    let mut z = 0.0;
    for i in 0..half {
        z = match i {
            0 => Float::sqrt(2.0 * mf + 1.0) - 1.85575 * Float::powf(2.0 * mf + 1.0, -1.0 / 6.0),
            1 => z - 1.14 * Float::powf(mf, 0.426) / z,
            2 => 1.86 * z - 0.86 * nodes[0],
            3 => 1.91 * z - 0.91 * nodes[1],
            _ => 2.0 * z - nodes[i - 2],
        };
        for _ in 0..100 {
            let (p, pm1) = hermite_functions(m, z);
            let dp = Float::sqrt(2.0 * mf) * pm1 - z * p;
            let step = p / dp;
            z -= step;
            if Float::abs(step) <= 1e-15 * (1.0 + Float::abs(z)) {
                break;
            }
        }
        nodes[i] = z;
    }
    let mut x = alloc::vec![0.0; m];
    for i in 0..half {
        x[i] = -nodes[i];
        x[m - 1 - i] = nodes[i];
    }
    if m % 2 == 1 {
        x[m / 2] = 0.0;
    }
    let w = x.iter().map(|&xi| scaled_weight(m, xi)).collect();
    Ok((x, w))
}

/// `(ψ_m(x), ψ_{m-1}(x))`.
fn hermite_functions(m: usize, x: f64) -> (f64, f64) {
    let mut prev = 0.0;
    let mut cur = Float::powf(PI, -0.25) * Float::exp(-0.5 * x * x);
    for k in 0..m {
        let kf = k as f64;
        let next = Float::sqrt(2.0 / (kf + 1.0)) * x * cur - Float::sqrt(kf / (kf + 1.0)) * prev;
        prev = cur;
        cur = next;
    }
    (cur, prev)
}

/// `1 / Σ_{k<m} ψ_k(x)²`, the Christoffel weight times `e^{x²}`.
fn scaled_weight(m: usize, x: f64) -> f64 {
    let mut prev = 0.0;
    let mut cur = Float::powf(PI, -0.25) * Float::exp(-0.5 * x * x);
    let mut acc = 0.0;
    for k in 0..m {
        acc += cur * cur;
        let kf = k as f64;
        let next = Float::sqrt(2.0 / (kf + 1.0)) * x * cur - Float::sqrt(kf / (kf + 1.0)) * prev;
        prev = cur;
        cur = next;
    }
    1.0 / acc
}
