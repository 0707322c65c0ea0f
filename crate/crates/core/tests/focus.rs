mod common;

use common::{pixel_block, relative, rng};
use dctfuse_core::focus::{eol_dct, eol_spatial, score_dct, variance_dct, variance_spatial, vol_dct, vol_spatial};
use dctfuse_core::{DctBasis, FocusMetric, Mat8, OperatorSet, SpatialBlock};
use proptest::prelude::*;

#[test]
fn cross_domain_sweep_ten_thousand_blocks() {
    let basis = DctBasis::new();
    let ops = OperatorSet::new(&basis);
    let mut r = rng(42);
    let (mut eol, mut vol, mut var) = (0.0f64, 0.0f64, 0.0f64);
    for _ in 0..10_000 {
        let b = pixel_block(&mut r);
        let c = basis.forward(&b);
        eol = eol.max(relative(eol_dct(&c, &ops).value(), eol_spatial(&b).value()));
        vol = vol.max(relative(vol_dct(&c, &ops).value(), vol_spatial(&b).value()));
        var = var.max(relative(variance_dct(&c).value(), variance_spatial(&b).value()));
    }
    assert!(eol <= 1e-6, "eol {eol:e}");
    assert!(vol <= 1e-6, "vol {vol:e}");
    assert!(var <= 1e-9, "variance {var:e}");
}

#[test]
fn impulse_scores() {
    let basis = DctBasis::new();
    let ops = OperatorSet::new(&basis);
    let mut m = Mat8::zero();
    m[(3, 3)] = 1.0;
    let b = SpatialBlock(m);
    let c = basis.forward(&b);
    assert_eq!(eol_spatial(&b).value(), 468.0);
    assert!((eol_dct(&c, &ops).value() - 468.0).abs() < 1e-9);
    assert!(relative(vol_dct(&c, &ops).value(), vol_spatial(&b).value()) <= 1e-6);
}

proptest! {
    #[test]
    fn scores_are_dc_shift_invariant(b in common::block_strategy(), shift in -100.0f64..100.0) {
        let basis = DctBasis::new();
        let ops = OperatorSet::new(&basis);
        let shifted = SpatialBlock(b.0 + Mat8::filled(shift));
        for metric in FocusMetric::ALL {
            let s0 = score_dct(metric, &basis.forward(&b), &ops).value();
            let s1 = score_dct(metric, &basis.forward(&shifted), &ops).value();
            prop_assert!(relative(s1, s0) <= 1e-6, "{metric}: {s0} vs {s1}");
        }
    }

    #[test]
    fn scores_scale_quadratically(b in common::block_strategy(), alpha in 0.05f64..20.0) {
        let basis = DctBasis::new();
        let ops = OperatorSet::new(&basis);
        let scaled = SpatialBlock(b.0.scale(alpha));
        for metric in FocusMetric::ALL {
            let s0 = score_dct(metric, &basis.forward(&b), &ops).value();
            let s1 = score_dct(metric, &basis.forward(&scaled), &ops).value();
            prop_assert!(relative(s1, alpha * alpha * s0) <= 1e-6 * (1.0 + alpha * alpha));
        }
        prop_assert!(relative(vol_spatial(&scaled).value(), alpha * alpha * vol_spatial(&b).value()) <= 1e-9 * (1.0 + alpha * alpha));
    }

    #[test]
    fn variance_dct_never_meaningfully_negative(b in common::block_strategy()) {
        let basis = DctBasis::new();
        let c = basis.forward(&b);
        let raw = (c.0.sum_of_squares() - c.dc() * c.dc()) / 64.0;
        prop_assert!(raw >= -1e-9);
        prop_assert!(variance_dct(&c).value() >= 0.0);
    }

    #[test]
    fn vol_dct_matches_oracle(b in common::block_strategy()) {
        let basis = DctBasis::new();
        let ops = OperatorSet::new(&basis);
        prop_assert!(relative(vol_dct(&basis.forward(&b), &ops).value(), vol_spatial(&b).value()) <= 1e-6);
    }
}
