//! Orthonormal 8×8 DCT-II as a pair of dense matrix products.
//!
//! With `C` the cosine basis, the forward transform is `C·b·Cᵗ` and the
//! inverse is `Cᵗ·B·C`. `C` is orthogonal, so `C⁻¹ = Cᵗ`, the transform
//! preserves the Frobenius norm, and `trace(x·xᵗ)` is invariant under
//! conjugation by `C`.

use core::f64::consts::PI;

use crate::matrix::{CoeffBlock, Mat8, SpatialBlock, BLOCK};

/// The cosine basis `C` and its transpose, built once and shared read-only.
#[derive(Clone, Debug, PartialEq)]
pub struct DctBasis {
    c: Mat8,
    c_t: Mat8,
}

impl Default for DctBasis {
    fn default() -> Self {
        Self::new()
    }
}

impl DctBasis {
    /// Entry `(k, n)` is `α(k)·cos((2n+1)kπ/16)` with `α(0) = 1/√8` and
    /// `α(k) = 1/2` otherwise.
    pub fn new() -> Self {
        let c = Mat8::from_fn(|k, n| {
            let alpha = if k == 0 {
                libm::sqrt(1.0 / BLOCK as f64)
            } else {
                libm::sqrt(2.0 / BLOCK as f64)
            };
            alpha * libm::cos((2 * n + 1) as f64 * k as f64 * PI / (2 * BLOCK) as f64)
        });
        DctBasis { c, c_t: c.transpose() }
    }

    pub fn matrix(&self) -> &Mat8 {
        &self.c
    }

    pub fn transpose(&self) -> &Mat8 {
        &self.c_t
    }

    /// `C·x·Cᵗ`: carries any spatial-side matrix into the coefficient domain.
    pub fn conjugate(&self, x: &Mat8) -> Mat8 {
        self.c * *x * self.c_t
    }

    /// `Cᵗ·x·C`: the inverse of [`DctBasis::conjugate`].
    pub fn unconjugate(&self, x: &Mat8) -> Mat8 {
        self.c_t * *x * self.c
    }

    pub fn forward(&self, b: &SpatialBlock) -> CoeffBlock {
        CoeffBlock(self.conjugate(&b.0))
    }

    pub fn inverse(&self, coeffs: &CoeffBlock) -> SpatialBlock {
        SpatialBlock(self.unconjugate(&coeffs.0))
    }
}

pub fn make_dct_basis() -> DctBasis {
    DctBasis::new()
}

pub fn dct_forward(b: &SpatialBlock, basis: &DctBasis) -> CoeffBlock {
    basis.forward(b)
}

pub fn dct_inverse(coeffs: &CoeffBlock, basis: &DctBasis) -> SpatialBlock {
    basis.inverse(coeffs)
}

/// `trace(x·xᵗ)`, i.e. the squared Frobenius norm written as a trace.
pub fn frobenius_trace(x: &Mat8) -> f64 {
    (*x * x.transpose()).trace()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn dc_row_is_constant() {
        let basis = make_dct_basis();
        for n in 0..BLOCK {
            assert_abs_diff_eq!(basis.matrix()[(0, n)], 0.3535533906, epsilon = 1e-10);
        }
    }

    #[test]
    fn first_ac_entry_closed_form() {
        let basis = make_dct_basis();
        // 0.5·cos(π/16)
        assert_abs_diff_eq!(basis.matrix()[(1, 0)], 0.4903926402, epsilon = 1e-10);
    }

    #[test]
    fn orthonormal() {
        let basis = make_dct_basis();
        let prod = *basis.matrix() * *basis.transpose();
        assert!(prod.max_abs_diff(&Mat8::identity()) <= 1e-12);
    }

    #[test]
    fn constant_block_has_only_dc() {
        let basis = make_dct_basis();
        let coeffs = dct_forward(&SpatialBlock(Mat8::filled(100.0)), &basis);
        assert_abs_diff_eq!(coeffs.dc(), 800.0, epsilon = 1e-9);
        for (i, v) in coeffs.coeffs().iter().enumerate().skip(1) {
            assert!(v.abs() < 1e-9, "AC coefficient {i} = {v}");
        }
    }

    #[test]
    fn zero_maps_to_zero_both_ways() {
        let basis = make_dct_basis();
        assert_eq!(dct_forward(&SpatialBlock::default(), &basis).0.max_abs(), 0.0);
        assert_eq!(dct_inverse(&CoeffBlock::default(), &basis).0.max_abs(), 0.0);
    }

    #[test]
    fn dc_only_inverts_to_constant() {
        let basis = make_dct_basis();
        let mut dc = Mat8::zero();
        dc[(0, 0)] = 800.0;
        let b = dct_inverse(&CoeffBlock(dc), &basis);
        assert!(b.0.max_abs_diff(&Mat8::filled(100.0)) < 1e-9);
    }

    #[test]
    fn frobenius_trace_basics() {
        assert_eq!(frobenius_trace(&Mat8::identity()), 8.0);
        assert_eq!(frobenius_trace(&Mat8::zero()), 0.0);
        let x = Mat8::from_fn(|r, c| r as f64 - 2.0 * c as f64);
        assert_abs_diff_eq!(frobenius_trace(&x), x.sum_of_squares(), epsilon = 1e-9);
    }
}
