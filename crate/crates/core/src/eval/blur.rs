//! Box-filter defocus applied to one half of an image.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::raster::GrayRaster;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// Columns `[0, W/2)`.
    Left,
    /// Columns `[W/2, W)`.
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BlurSpec {
    pub side: Side,
    pub kernel_size: usize,
}

impl BlurSpec {
    pub fn new(side: Side, kernel_size: usize) -> Result<Self> {
        check_kernel(kernel_size)?;
        Ok(BlurSpec { side, kernel_size })
    }
}

fn check_kernel(size: usize) -> Result<()> {
    if size < 3 || size % 2 == 0 {
        return Err(Error::InvalidKernel(size));
    }
    Ok(())
}

/// Normalized 1-D box weights; the 2-D mask is their outer product.
pub fn box_kernel(size: usize) -> Vec<f64> {
    vec![1.0 / size as f64; size]
}

/// Mirror an out-of-range index back into `0..len` (edge sample repeated).
fn reflect(mut i: isize, len: usize) -> usize {
    let n = len as isize;
    loop {
        if i < 0 {
            i = -i - 1;
        } else if i >= n {
            i = 2 * n - i - 1;
        } else {
            return i as usize;
        }
    }
}

/// `size × size` mean filter with symmetric boundary padding.
///
/// Window sums are accumulated in integers and divided once, rounding half
/// away from zero, so the result is exact and platform independent.
pub fn box_filter(image: &GrayRaster, size: usize) -> Result<GrayRaster> {
    check_kernel(size)?;
    let (w, h) = image.dimensions();
    if image.is_empty() {
        return Err(Error::EmptyImage { width: w, height: h });
    }
    let r = (size / 2) as isize;

    let mut row_sums = vec![0u32; w * h];
    for y in 0..h {
        let row = image.row(y);
        for x in 0..w {
            row_sums[y * w + x] = (-r..=r).map(|d| u32::from(row[reflect(x as isize + d, w)])).sum();
        }
    }

    let area = (size * size) as u32;
    Ok(GrayRaster::from_fn(w, h, |x, y| {
        let sum: u32 = (-r..=r).map(|d| row_sums[reflect(y as isize + d, h) * w + x]).sum();
        ((2 * sum + area) / (2 * area)) as u8
    }))
}

/// Replace one half of `image` with its box-filtered version.
///
/// The filter runs over the whole image first, so pixels near the splice
/// column see their true neighbours across it.
pub fn synthetic_blur(image: &GrayRaster, spec: &BlurSpec) -> Result<GrayRaster> {
    check_kernel(spec.kernel_size)?;
    let (w, h) = image.dimensions();
    if w < 2 * spec.kernel_size || h == 0 {
        return Err(Error::ImageTooSmall {
            width: w,
            height: h,
            requirement: "blur needs width >= 2 x kernel size",
        });
    }
    let blurred = box_filter(image, spec.kernel_size)?;
    let split = w / 2;
    let range = match spec.side {
        Side::Left => 0..split,
        Side::Right => split..w,
    };
    Ok(GrayRaster::from_fn(w, h, |x, y| {
        if range.contains(&x) {
            blurred.get(x, y)
        } else {
            image.get(x, y)
        }
    }))
}
