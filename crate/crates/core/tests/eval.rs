mod common;

use common::texture;
use dctfuse_core::eval::{box_filter, make_pairs, mse, ssim, synthetic_blur, BlurSpec, Side};
use proptest::prelude::*;

#[test]
fn stronger_blur_scores_lower() {
    for seed in 0..3 {
        let src = texture(96, 80, seed);
        let s5 = ssim(&src, &box_filter(&src, 5).unwrap()).unwrap();
        let s9 = ssim(&src, &box_filter(&src, 9).unwrap()).unwrap();
        assert!(s9 < s5 && s5 < 1.0, "seed {seed}: {s9} {s5}");
        let h5 = ssim(&src, &synthetic_blur(&src, &BlurSpec::new(Side::Left, 5).unwrap()).unwrap()).unwrap();
        let h9 = ssim(&src, &synthetic_blur(&src, &BlurSpec::new(Side::Left, 9).unwrap()).unwrap()).unwrap();
        assert!(h9 < h5);
    }
}

#[test]
fn pairs_splice_exactly_at_half_width() {
    let src = texture(50, 20, 4);
    for pair in make_pairs(std::slice::from_ref(&src)).unwrap() {
        for y in 0..20 {
            assert_eq!(&pair.left_blurred.row(y)[25..], &src.row(y)[25..]);
            assert_eq!(&pair.right_blurred.row(y)[..25], &src.row(y)[..25]);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn metric_identities(seed in any::<u64>(), other in any::<u64>()) {
        let a = texture(24, 20, seed);
        let b = texture(24, 20, other);
        prop_assert_eq!(mse(&a, &a).unwrap(), 0.0);
        prop_assert_eq!(mse(&a, &b).unwrap(), mse(&b, &a).unwrap());
        prop_assert!((ssim(&a, &a).unwrap() - 1.0).abs() < 1e-12);
        prop_assert!((ssim(&a, &b).unwrap() - ssim(&b, &a).unwrap()).abs() < 1e-12);
        prop_assert!(ssim(&a, &b).unwrap() <= 1.0);
    }
}
