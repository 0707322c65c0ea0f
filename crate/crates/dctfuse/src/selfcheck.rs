//! Randomized cross-check of every coefficient-domain identity against its
//! spatial-domain oracle.

use std::fmt;

use dctfuse_core::focus::{eol_dct, eol_spatial, variance_dct, variance_spatial, vol_dct, vol_spatial};
use dctfuse_core::laplacian::{laplacian_dct, laplacian_matrix_form};
use dctfuse_core::{DctBasis, Mat8, OperatorSet, SpatialBlock};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SelfCheckConfig {
    pub blocks: usize,
    pub seed: u64,
    pub tol: f64,
}

impl Default for SelfCheckConfig {
    fn default() -> Self {
        SelfCheckConfig { blocks: 10_000, seed: 42, tol: 1e-6 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Identity {
    Eol,
    Vol,
    Variance,
    Parseval,
    RoundTrip,
    OperatorLift,
}

impl Identity {
    pub const ALL: [Identity; 6] = [
        Identity::Eol,
        Identity::Vol,
        Identity::Variance,
        Identity::Parseval,
        Identity::RoundTrip,
        Identity::OperatorLift,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Identity::Eol => "eol",
            Identity::Vol => "vol",
            Identity::Variance => "variance",
            Identity::Parseval => "parseval",
            Identity::RoundTrip => "round-trip",
            Identity::OperatorLift => "operator-lift",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Failure {
    pub identity: Identity,
    /// Position of the offending block in the seeded stream.
    pub index: usize,
    pub deviation: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SelfCheckReport {
    pub config: SelfCheckConfig,
    /// Maximum deviation per identity, in [`Identity::ALL`] order.
    pub max_deviation: [f64; 6],
    pub failure: Option<Failure>,
}

impl SelfCheckReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    pub fn max(&self, identity: Identity) -> f64 {
        self.max_deviation[identity as usize]
    }
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1.0)
}

/// Deviations for one block, in [`Identity::ALL`] order.
///
/// Scores and Parseval are relative to `max(1, |oracle|)`; round-trip is the
/// absolute per-entry error; the operator lift is the largest entry error
/// relative to `max(1, max |Q+P|)`.
fn deviations(b: &SpatialBlock, basis: &DctBasis, ops: &OperatorSet) -> [f64; 6] {
    let coeffs = basis.forward(b);
    let lifted = laplacian_dct(&coeffs, ops).0;
    let via_spatial = basis.conjugate(&laplacian_matrix_form(b, &ops.spatial));
    [
        rel(eol_dct(&coeffs, ops).value(), eol_spatial(b).value()),
        rel(vol_dct(&coeffs, ops).value(), vol_spatial(b).value()),
        rel(variance_dct(&coeffs).value(), variance_spatial(b).value()),
        rel(coeffs.0.sum_of_squares(), b.0.sum_of_squares()),
        basis.inverse(&coeffs).0.max_abs_diff(&b.0),
        lifted.max_abs_diff(&via_spatial) / lifted.max_abs().max(1.0),
    ]
}

/// Uniform integer pixels 0..=255 from a ChaCha8 stream seeded with `seed`.
pub fn random_block(rng: &mut impl Rng) -> SpatialBlock {
    SpatialBlock(Mat8::from_fn(|_, _| f64::from(rng.random::<u8>())))
}

pub fn run(config: &SelfCheckConfig) -> SelfCheckReport {
    let basis = DctBasis::new();
    let ops = OperatorSet::new(&basis);
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut max_deviation = [0.0f64; 6];
    let mut failure = None;
    for index in 0..config.blocks {
        let block = random_block(&mut rng);
        let devs = deviations(&block, &basis, &ops);
        for (identity, (&d, worst)) in Identity::ALL.iter().zip(devs.iter().zip(max_deviation.iter_mut())) {
            *worst = worst.max(d);
            if failure.is_none() && (d.is_nan() || d > config.tol) {
                failure = Some(Failure { identity: *identity, index, deviation: d });
            }
        }
    }
    SelfCheckReport { config: *config, max_deviation, failure }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_run_passes() {
        let report = run(&SelfCheckConfig::default());
        assert!(report.passed(), "{:?}", report.failure);
        assert!(report.max(Identity::Eol) <= 1e-6);
    }

    #[test]
    fn zero_tolerance_fails() {
        let report = run(&SelfCheckConfig { blocks: 200, tol: 0.0, ..Default::default() });
        assert!(!report.passed());
    }

    #[test]
    fn same_seed_same_report() {
        let cfg = SelfCheckConfig { blocks: 500, seed: 9, tol: 1e-6 };
        assert_eq!(run(&cfg), run(&cfg));
    }
}
