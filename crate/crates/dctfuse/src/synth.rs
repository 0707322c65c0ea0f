//! Deterministic textured test images.
//!
//! Smooth multi-octave value noise, two oriented gratings, a handful of
//! hard-edged discs and fine grain, so every 8×8 tile carries detail that a
//! box blur visibly removes.

use dctfuse_core::GrayRaster;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct ValueNoise {
    cell: f64,
    stride: usize,
    lattice: Vec<f64>,
}

impl ValueNoise {
    fn new(rng: &mut impl Rng, width: usize, height: usize, cell: f64) -> Self {
        let stride = (width as f64 / cell) as usize + 2;
        let rows = (height as f64 / cell) as usize + 2;
        let lattice = (0..stride * rows).map(|_| rng.random_range(-1.0..1.0)).collect();
        ValueNoise { cell, stride, lattice }
    }

    fn sample(&self, x: f64, y: f64) -> f64 {
        let (gx, gy) = (x / self.cell, y / self.cell);
        let (ix, iy) = (gx as usize, gy as usize);
        let smooth = |t: f64| t * t * (3.0 - 2.0 * t);
        let (tx, ty) = (smooth(gx - ix as f64), smooth(gy - iy as f64));
        let at = |cx: usize, cy: usize| self.lattice[cy * self.stride + cx];
        let top = at(ix, iy) * (1.0 - tx) + at(ix + 1, iy) * tx;
        let bottom = at(ix, iy + 1) * (1.0 - tx) + at(ix + 1, iy + 1) * tx;
        top * (1.0 - ty) + bottom * ty
    }
}

pub fn textured(width: usize, height: usize, seed: u64) -> GrayRaster {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let octaves: Vec<(ValueNoise, f64)> = [(48.0, 45.0), (16.0, 30.0), (5.0, 18.0)]
        .into_iter()
        .map(|(cell, amp)| (ValueNoise::new(&mut rng, width, height, cell), amp))
        .collect();
    let gratings: Vec<(f64, f64, f64, f64)> = (0..2)
        .map(|_| {
            let angle = rng.random_range(0.0..std::f64::consts::PI);
            let freq = rng.random_range(0.25..0.9);
            (angle.cos() * freq, angle.sin() * freq, rng.random_range(0.0..6.3), rng.random_range(8.0..20.0))
        })
        .collect();
    let discs: Vec<(f64, f64, f64, f64)> = (0..12)
        .map(|_| {
            (
                rng.random_range(0.0..width as f64),
                rng.random_range(0.0..height as f64),
                rng.random_range(6.0..(width.min(height) as f64 / 6.0).max(7.0)),
                rng.random_range(-40.0..40.0),
            )
        })
        .collect();
    let grain: Vec<f64> = (0..width * height).map(|_| rng.random_range(-10.0..10.0)).collect();

    GrayRaster::from_fn(width, height, |x, y| {
        let (xf, yf) = (x as f64, y as f64);
        let mut v = 128.0;
        for (noise, amp) in &octaves {
            v += amp * noise.sample(xf, yf);
        }
        for (kx, ky, phase, amp) in &gratings {
            v += amp * (kx * xf + ky * yf + phase).sin();
        }
        for (cx, cy, r, step) in &discs {
            if (xf - cx).powi(2) + (yf - cy).powi(2) < r * r {
                v += step;
            }
        }
        v += grain[y * width + x];
        v.round().clamp(0.0, 255.0) as u8
    })
}
