//! The 3×3 Laplacian mask written as four 8×8 operator matrices.
//!
//! For a block `b`, `m·b·n + d·b·e` is the valid 3×3 convolution of the mask
//!
//! ```text
//! -1  -4  -1
//! -4 +20  -4
//! -1  -4  -1
//! ```
//!
//! placed in the top-left 6×6 of an 8×8 matrix (rows and columns 6..8 are
//! zero). `m` picks rows `i` and `i+2` and `n` applies the `-1 -4 -1` column
//! weights; `d` picks row `i+1` and `e` applies the `-4 +20 -4` weights.
//!
//! Each operator is lifted into the coefficient domain as `C·o·Cᵗ`. Because
//! `Cᵗ·C = I`, the lifted product `M·B·N + D·B·E` equals `C·(m·b·n + d·b·e)·Cᵗ`
//! for `B = C·b·Cᵗ`: the Laplacian of a block can be taken without leaving
//! the DCT domain.

use crate::matrix::{CoeffBlock, Mat8, SpatialBlock, BLOCK};
use crate::transform::DctBasis;

pub const LAPLACIAN_MASK: [[f64; 3]; 3] = [[-1.0, -4.0, -1.0], [-4.0, 20.0, -4.0], [-1.0, -4.0, -1.0]];

/// Side length of the valid convolution output.
pub const VALID: usize = BLOCK - 2;

/// Spatial-side operator matrices.
#[derive(Clone, Debug, PartialEq)]
pub struct SpatialOperators {
    pub m: Mat8,
    pub n: Mat8,
    pub d: Mat8,
    pub e: Mat8,
}

/// Both sides of the operator set. Built once, immutable afterwards.
#[derive(Clone, Debug, PartialEq)]
pub struct OperatorSet {
    pub spatial: SpatialOperators,
    pub m_dct: Mat8,
    pub n_dct: Mat8,
    pub d_dct: Mat8,
    pub e_dct: Mat8,
}

impl OperatorSet {
    pub fn new(basis: &DctBasis) -> Self {
        lift_to_dct(build_spatial_operators(), basis)
    }
}

/// Column `j` of a right-hand operator carries `weights` at rows `j..j+3`.
fn banded_columns(weights: [f64; 3]) -> Mat8 {
    let mut o = Mat8::zero();
    for j in 0..VALID {
        for (k, w) in weights.iter().enumerate() {
            o[(j + k, j)] = *w;
        }
    }
    o
}

pub fn build_spatial_operators() -> SpatialOperators {
    let mut m = Mat8::zero();
    let mut d = Mat8::zero();
    for i in 0..VALID {
        m[(i, i)] = 1.0;
        m[(i, i + 2)] = 1.0;
        d[(i, i + 1)] = 1.0;
    }
    let [outer, middle, _] = LAPLACIAN_MASK;
    SpatialOperators {
        m,
        n: banded_columns(outer),
        d,
        // The middle mask row: centre weight +20.
        e: banded_columns(middle),
    }
}

pub fn lift_to_dct(ops: SpatialOperators, basis: &DctBasis) -> OperatorSet {
    OperatorSet {
        m_dct: basis.conjugate(&ops.m),
        n_dct: basis.conjugate(&ops.n),
        d_dct: basis.conjugate(&ops.d),
        e_dct: basis.conjugate(&ops.e),
        spatial: ops,
    }
}

/// `M·B·N + D·B·E`, the block Laplacian computed on coefficients.
pub fn laplacian_dct(coeffs: &CoeffBlock, ops: &OperatorSet) -> CoeffBlock {
    let b = coeffs.0;
    CoeffBlock(ops.m_dct * b * ops.n_dct + ops.d_dct * b * ops.e_dct)
}

/// `m·b·n + d·b·e` on the spatial side.
pub fn laplacian_matrix_form(b: &SpatialBlock, ops: &SpatialOperators) -> Mat8 {
    ops.m * b.0 * ops.n + ops.d * b.0 * ops.e
}

/// Direct valid convolution of [`LAPLACIAN_MASK`] over the block, written into
/// the top-left 6×6 of a zero 8×8 matrix. Oracle for the matrix forms.
pub fn laplacian_spatial(b: &SpatialBlock) -> Mat8 {
    let mut out = Mat8::zero();
    for i in 0..VALID {
        for j in 0..VALID {
            let mut acc = 0.0;
            for (di, row) in LAPLACIAN_MASK.iter().enumerate() {
                for (dj, w) in row.iter().enumerate() {
                    acc += w * b.0[(i + di, j + dj)];
                }
            }
            out[(i, j)] = acc;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transform::make_dct_basis;

    fn impulse(r: usize, c: usize) -> SpatialBlock {
        let mut m = Mat8::zero();
        m[(r, c)] = 1.0;
        SpatialBlock(m)
    }

    #[test]
    fn operator_entries() {
        let ops = build_spatial_operators();
        assert_eq!(ops.m[(0, 0)], 1.0);
        assert_eq!(ops.m[(0, 2)], 1.0);
        assert_eq!(ops.m[(0, 1)], 0.0);
        assert_eq!(ops.d[(0, 1)], 1.0);
        assert_eq!([ops.n[(0, 0)], ops.n[(1, 0)], ops.n[(2, 0)]], [-1.0, -4.0, -1.0]);
        assert_eq!([ops.e[(0, 0)], ops.e[(1, 0)], ops.e[(2, 0)]], [-4.0, 20.0, -4.0]);
        assert_eq!(ops.n[(7, 5)], -1.0);
    }

    #[test]
    fn operator_support() {
        let ops = build_spatial_operators();
        for k in 0..BLOCK {
            for z in VALID..BLOCK {
                assert_eq!(ops.m[(z, k)], 0.0);
                assert_eq!(ops.d[(z, k)], 0.0);
                assert_eq!(ops.n[(k, z)], 0.0);
                assert_eq!(ops.e[(k, z)], 0.0);
            }
        }
    }

    #[test]
    fn constant_block_has_zero_laplacian() {
        let ops = build_spatial_operators();
        let b = SpatialBlock(Mat8::filled(37.0));
        assert_eq!(laplacian_matrix_form(&b, &ops).max_abs(), 0.0);
        assert_eq!(laplacian_spatial(&b).max_abs(), 0.0);
    }

    #[test]
    fn impulse_response_matches_mask() {
        let ops = build_spatial_operators();
        let lap = laplacian_matrix_form(&impulse(3, 3), &ops);
        assert_eq!(lap[(2, 2)], 20.0);
        for (r, c) in [(1, 2), (3, 2), (2, 1), (2, 3)] {
            assert_eq!(lap[(r, c)], -4.0);
        }
        for (r, c) in [(1, 1), (1, 3), (3, 1), (3, 3)] {
            assert_eq!(lap[(r, c)], -1.0);
        }
        assert_eq!(lap.sum(), 0.0);
        assert_eq!(laplacian_spatial(&impulse(3, 3)), lap);
    }

    #[test]
    fn ramp_is_annihilated() {
        let rows = SpatialBlock(Mat8::from_fn(|r, _| r as f64));
        let cols = SpatialBlock(Mat8::from_fn(|_, c| 3.0 * c as f64 - 5.0));
        assert_eq!(laplacian_spatial(&rows).max_abs(), 0.0);
        assert_eq!(laplacian_spatial(&cols).max_abs(), 0.0);
    }

    #[test]
    fn lift_round_trip() {
        let basis = make_dct_basis();
        let set = OperatorSet::new(&basis);
        let s = &set.spatial;
        for (lifted, orig) in [(&set.m_dct, &s.m), (&set.n_dct, &s.n), (&set.d_dct, &s.d), (&set.e_dct, &s.e)] {
            assert!(basis.unconjugate(lifted).max_abs_diff(orig) <= 1e-12);
        }
    }

    #[test]
    fn zero_and_dc_only_have_zero_dct_laplacian() {
        let basis = make_dct_basis();
        let set = OperatorSet::new(&basis);
        assert_eq!(laplacian_dct(&CoeffBlock::default(), &set).0.max_abs(), 0.0);
        let mut dc = Mat8::zero();
        dc[(0, 0)] = 640.0;
        assert!(laplacian_dct(&CoeffBlock(dc), &set).0.max_abs() < 1e-9);
    }
}
