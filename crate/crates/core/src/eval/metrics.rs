use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::raster::GrayRaster;

/// Mean squared pixel difference.
pub fn mse(reference: &GrayRaster, test: &GrayRaster) -> Result<f64> {
    reference.ensure_same_dims(test)?;
    if reference.is_empty() {
        return Err(Error::EmptyImage { width: reference.width(), height: reference.height() });
    }
    let sum: f64 = reference
        .samples()
        .iter()
        .zip(test.samples())
        .map(|(&a, &b)| {
            let d = f64::from(a) - f64::from(b);
            d * d
        })
        .sum();
    Ok(sum / reference.samples().len() as f64)
}

/// SSIM constants. The defaults are the usual ones for 8-bit data:
/// 11×11 Gaussian window with σ = 1.5, K1 = 0.01, K2 = 0.03, L = 255.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SsimParams {
    pub window: usize,
    pub sigma: f64,
    pub k1: f64,
    pub k2: f64,
    pub dynamic_range: f64,
}

impl Default for SsimParams {
    fn default() -> Self {
        SsimParams { window: 11, sigma: 1.5, k1: 0.01, k2: 0.03, dynamic_range: 255.0 }
    }
}

impl SsimParams {
    fn kernel(&self) -> Vec<f64> {
        let half = (self.window / 2) as f64;
        let mut k: Vec<f64> = (0..self.window)
            .map(|i| {
                let d = i as f64 - half;
                libm::exp(-(d * d) / (2.0 * self.sigma * self.sigma))
            })
            .collect();
        let total: f64 = k.iter().sum();
        k.iter_mut().for_each(|v| *v /= total);
        k
    }
}

/// Mean SSIM over every position where the window fits entirely inside the
/// image (no padding).
pub fn ssim(reference: &GrayRaster, test: &GrayRaster) -> Result<f64> {
    ssim_with(reference, test, &SsimParams::default())
}

pub fn ssim_with(reference: &GrayRaster, test: &GrayRaster, params: &SsimParams) -> Result<f64> {
    reference.ensure_same_dims(test)?;
    let (w, h) = reference.dimensions();
    let win = params.window;
    if w < win || h < win {
        return Err(Error::ImageTooSmall { width: w, height: h, requirement: "SSIM needs both sides >= the window" });
    }
    let kernel = params.kernel();
    let c1 = params.k1 * params.dynamic_range * params.k1 * params.dynamic_range;
    let c2 = params.k2 * params.dynamic_range * params.k2 * params.dynamic_range;
    let (ow, oh) = (w - win + 1, h - win + 1);

    // Horizontal pass: five moment planes, each ow wide and h tall.
    const X: usize = 0;
    const Y: usize = 1;
    const XX: usize = 2;
    const YY: usize = 3;
    const XY: usize = 4;
    let mut horiz = vec![[0.0f64; 5]; ow * h];
    for y in 0..h {
        let (ra, rb) = (reference.row(y), test.row(y));
        for x in 0..ow {
            let mut acc = [0.0f64; 5];
            for (k, wk) in kernel.iter().enumerate() {
                let a = f64::from(ra[x + k]);
                let b = f64::from(rb[x + k]);
                acc[X] += wk * a;
                acc[Y] += wk * b;
                acc[XX] += wk * a * a;
                acc[YY] += wk * b * b;
                acc[XY] += wk * a * b;
            }
            horiz[y * ow + x] = acc;
        }
    }

    let mut total = 0.0;
    for y in 0..oh {
        for x in 0..ow {
            let mut m = [0.0f64; 5];
            for (k, wk) in kernel.iter().enumerate() {
                let src = &horiz[(y + k) * ow + x];
                for (acc, v) in m.iter_mut().zip(src) {
                    *acc += wk * v;
                }
            }
            let (mx, my) = (m[X], m[Y]);
            let vx = m[XX] - mx * mx;
            let vy = m[YY] - my * my;
            let cov = m[XY] - mx * my;
            total += ((2.0 * mx * my + c1) * (2.0 * cov + c2)) / ((mx * mx + my * my + c1) * (vx + vy + c2));
        }
    }
    Ok(total / (ow * oh) as f64)
}
