#![allow(dead_code)]

use dctfuse_core::{GrayRaster, Mat8, SpatialBlock};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform integer pixels in 0..=255.
pub fn pixel_block(rng: &mut impl Rng) -> SpatialBlock {
    SpatialBlock(Mat8::from_fn(|_, _| f64::from(rng.random::<u8>())))
}

/// Arbitrary real entries in [-1000, 1000].
pub fn real_matrix(rng: &mut impl Rng) -> Mat8 {
    Mat8::from_fn(|_, _| rng.random_range(-1000.0..1000.0))
}

pub fn relative(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1.0)
}

pub fn block_strategy() -> impl Strategy<Value = SpatialBlock> {
    proptest::array::uniform8(proptest::array::uniform8(0u8..=255))
        .prop_map(|rows| SpatialBlock(Mat8::from_fn(|r, c| f64::from(rows[r][c]))))
}

/// Deterministic textured raster: gratings, a diagonal ramp and seeded noise.
pub fn texture(width: usize, height: usize, seed: u64) -> GrayRaster {
    let mut r = rng(seed);
    let fx = r.random_range(0.15..0.45);
    let fy = r.random_range(0.1..0.4);
    GrayRaster::from_fn(width, height, |x, y| {
        let (xf, yf) = (x as f64, y as f64);
        let v = 128.0
            + 45.0 * (fx * xf).sin()
            + 35.0 * (fy * yf + 0.02 * xf * yf).cos()
            + r.random_range(-25.0..25.0);
        v.clamp(0.0, 255.0).round() as u8
    })
}
