//! Dense 8×8 real matrices and the two block roles built on them.

use core::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

/// Block edge length. Fixed by the JPEG block structure.
pub const BLOCK: usize = 8;

/// Row-major 8×8 matrix of `f64`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat8(pub [[f64; BLOCK]; BLOCK]);

impl Default for Mat8 {
    fn default() -> Self {
        Self::zero()
    }
}

impl Mat8 {
    pub const fn zero() -> Self {
        Mat8([[0.0; BLOCK]; BLOCK])
    }

    pub fn identity() -> Self {
        Self::from_fn(|r, c| if r == c { 1.0 } else { 0.0 })
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Self::zero();
        for r in 0..BLOCK {
            for c in 0..BLOCK {
                m.0[r][c] = f(r, c);
            }
        }
        m
    }

    /// Same value in every entry.
    pub fn filled(value: f64) -> Self {
        Mat8([[value; BLOCK]; BLOCK])
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|r, c| self.0[c][r])
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::from_fn(|r, c| self.0[r][c] * s)
    }

    pub fn trace(&self) -> f64 {
        (0..BLOCK).map(|i| self.0[i][i]).sum()
    }

    /// Sum of squared entries, accumulated directly.
    pub fn sum_of_squares(&self) -> f64 {
        self.0.iter().flatten().map(|v| v * v).sum()
    }

    pub fn sum(&self) -> f64 {
        self.0.iter().flatten().sum()
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().flatten().fold(0.0, |acc, v| acc.max(v.abs()))
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (*self - *other).max_abs()
    }

    pub fn iter(&self) -> impl Iterator<Item = &f64> {
        self.0.iter().flatten()
    }
}

impl Index<(usize, usize)> for Mat8 {
    type Output = f64;
    fn index(&self, (r, c): (usize, usize)) -> &f64 {
        &self.0[r][c]
    }
}

impl IndexMut<(usize, usize)> for Mat8 {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut f64 {
        &mut self.0[r][c]
    }
}

impl Mul for Mat8 {
    type Output = Mat8;
    fn mul(self, rhs: Mat8) -> Mat8 {
        let mut out = Mat8::zero();
        for r in 0..BLOCK {
            for k in 0..BLOCK {
                let a = self.0[r][k];
                if a == 0.0 {
                    continue;
                }
                for c in 0..BLOCK {
                    out.0[r][c] += a * rhs.0[k][c];
                }
            }
        }
        out
    }
}

impl Add for Mat8 {
    type Output = Mat8;
    fn add(self, rhs: Mat8) -> Mat8 {
        Mat8::from_fn(|r, c| self.0[r][c] + rhs.0[r][c])
    }
}

impl Sub for Mat8 {
    type Output = Mat8;
    fn sub(self, rhs: Mat8) -> Mat8 {
        Mat8::from_fn(|r, c| self.0[r][c] - rhs.0[r][c])
    }
}

impl Neg for Mat8 {
    type Output = Mat8;
    fn neg(self) -> Mat8 {
        self.scale(-1.0)
    }
}

/// One 8×8 tile of pixel intensities (nominally 0..=255, not enforced).
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct SpatialBlock(pub Mat8);

/// DCT-II coefficients of a [`SpatialBlock`]; `(0, 0)` is the DC term.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct CoeffBlock(pub Mat8);

impl SpatialBlock {
    pub fn values(&self) -> &Mat8 {
        &self.0
    }
}

impl CoeffBlock {
    pub fn coeffs(&self) -> &Mat8 {
        &self.0
    }

    pub fn dc(&self) -> f64 {
        self.0 .0[0][0]
    }
}

impl From<Mat8> for SpatialBlock {
    fn from(m: Mat8) -> Self {
        SpatialBlock(m)
    }
}

impl From<Mat8> for CoeffBlock {
    fn from(m: Mat8) -> Self {
        CoeffBlock(m)
    }
}
