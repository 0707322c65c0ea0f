//! Per-block focus measures: EOL, VOL and plain variance.
//!
//! The `*_dct` functions work on coefficients only. The `*_spatial` functions
//! recompute the same statistic from pixels by direct convolution and
//! two-pass variance and serve as oracles.
//!
//! Under the orthonormal basis `B(0,0) = 8·mean`, so the variance of the 64
//! samples is `(Σ B(k,l)² − B(0,0)²) / 64`. VOL applies this to the
//! coefficient-domain Laplacian `L = M·B·N + D·B·E`; the mean runs over the
//! full zero-padded 8×8 Laplacian field.

use core::fmt;

use crate::laplacian::{laplacian_dct, laplacian_spatial, OperatorSet, VALID};
use crate::matrix::{CoeffBlock, Mat8, SpatialBlock, BLOCK};
use crate::transform::frobenius_trace;

const SAMPLES: f64 = (BLOCK * BLOCK) as f64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FocusMetric {
    Eol,
    Vol,
    Variance,
}

impl FocusMetric {
    pub const ALL: [FocusMetric; 3] = [FocusMetric::Eol, FocusMetric::Vol, FocusMetric::Variance];

    pub fn name(&self) -> &'static str {
        match self {
            FocusMetric::Eol => "eol",
            FocusMetric::Vol => "vol",
            FocusMetric::Variance => "variance",
        }
    }
}

impl fmt::Display for FocusMetric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A nonnegative focus value tagged with the measure that produced it.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FocusScore {
    value: f64,
    metric: FocusMetric,
}

impl FocusScore {
    /// Clamps round-off negatives to zero.
    pub fn new(raw: f64, metric: FocusMetric) -> Self {
        FocusScore { value: if raw > 0.0 { raw } else { 0.0 }, metric }
    }

    pub fn value(&self) -> f64 {
        self.value
    }

    pub fn metric(&self) -> FocusMetric {
        self.metric
    }
}

/// Unclamped `(Σ x² − x(0,0)²) / 64`.
pub(crate) fn coeff_variance(x: &Mat8) -> f64 {
    let dc = x[(0, 0)];
    (x.sum_of_squares() - dc * dc) / SAMPLES
}

/// Two-pass population variance over all 64 entries.
fn two_pass_variance(x: &Mat8) -> f64 {
    let mean = x.sum() / SAMPLES;
    x.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / SAMPLES
}

/// `trace((Q+P)(Q+P)ᵗ)` with `Q + P` the coefficient-domain Laplacian.
pub fn eol_dct(coeffs: &CoeffBlock, ops: &OperatorSet) -> FocusScore {
    let lap = laplacian_dct(coeffs, ops);
    FocusScore::new(frobenius_trace(&lap.0), FocusMetric::Eol)
}

/// Sum of squared mask responses over the 6×6 valid region.
pub fn eol_spatial(b: &SpatialBlock) -> FocusScore {
    let lap = laplacian_spatial(b);
    let mut acc = 0.0;
    for i in 0..VALID {
        for j in 0..VALID {
            acc += lap[(i, j)] * lap[(i, j)];
        }
    }
    FocusScore::new(acc, FocusMetric::Eol)
}

pub fn variance_dct(coeffs: &CoeffBlock) -> FocusScore {
    FocusScore::new(coeff_variance(&coeffs.0), FocusMetric::Variance)
}

pub fn variance_spatial(b: &SpatialBlock) -> FocusScore {
    FocusScore::new(two_pass_variance(&b.0), FocusMetric::Variance)
}

pub fn vol_dct(coeffs: &CoeffBlock, ops: &OperatorSet) -> FocusScore {
    let lap = laplacian_dct(coeffs, ops);
    FocusScore::new(coeff_variance(&lap.0), FocusMetric::Vol)
}

/// Variance of the zero-padded 8×8 spatial Laplacian field.
pub fn vol_spatial(b: &SpatialBlock) -> FocusScore {
    FocusScore::new(two_pass_variance(&laplacian_spatial(b)), FocusMetric::Vol)
}

/// Coefficient-domain score for `metric`.
pub fn score_dct(metric: FocusMetric, coeffs: &CoeffBlock, ops: &OperatorSet) -> FocusScore {
    match metric {
        FocusMetric::Eol => eol_dct(coeffs, ops),
        FocusMetric::Vol => vol_dct(coeffs, ops),
        FocusMetric::Variance => variance_dct(coeffs),
    }
}

pub fn score_spatial(metric: FocusMetric, b: &SpatialBlock) -> FocusScore {
    match metric {
        FocusMetric::Eol => eol_spatial(b),
        FocusMetric::Vol => vol_spatial(b),
        FocusMetric::Variance => variance_spatial(b),
    }
}
