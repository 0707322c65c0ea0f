use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Row-major 8-bit grayscale image.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GrayRaster {
    width: usize,
    height: usize,
    samples: Vec<u8>,
}

impl GrayRaster {
    /// Zero-sized rasters are representable; the fusion pipeline rejects them.
    pub fn new(width: usize, height: usize, samples: Vec<u8>) -> Result<Self> {
        let expected = width * height;
        if samples.len() != expected {
            return Err(Error::SampleCount { expected, actual: samples.len() });
        }
        Ok(GrayRaster { width, height, samples })
    }

    pub fn filled(width: usize, height: usize, value: u8) -> Self {
        GrayRaster { width, height, samples: vec![value; width * height] }
    }

    pub fn from_fn(width: usize, height: usize, mut f: impl FnMut(usize, usize) -> u8) -> Self {
        let mut samples = Vec::with_capacity(width * height);
        for y in 0..height {
            for x in 0..width {
                samples.push(f(x, y));
            }
        }
        GrayRaster { width, height, samples }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn dimensions(&self) -> (usize, usize) {
        (self.width, self.height)
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn samples(&self) -> &[u8] {
        &self.samples
    }

    pub fn into_samples(self) -> Vec<u8> {
        self.samples
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> u8 {
        self.samples[y * self.width + x]
    }

    #[inline]
    pub fn set(&mut self, x: usize, y: usize, v: u8) {
        self.samples[y * self.width + x] = v;
    }

    pub fn row(&self, y: usize) -> &[u8] {
        &self.samples[y * self.width..(y + 1) * self.width]
    }

    pub(crate) fn ensure_same_dims(&self, other: &GrayRaster) -> Result<()> {
        if self.dimensions() != other.dimensions() {
            return Err(Error::DimensionMismatch {
                left_width: self.width,
                left_height: self.height,
                right_width: other.width,
                right_height: other.height,
            });
        }
        Ok(())
    }
}

/// Clamp to `[0, 255]` and round half away from zero.
#[inline]
pub fn quantize(v: f64) -> u8 {
    let clamped = v.clamp(0.0, 255.0);
    libm::round(clamped) as u8
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_wrong_sample_count() {
        assert_eq!(
            GrayRaster::new(3, 2, vec![0; 5]),
            Err(Error::SampleCount { expected: 6, actual: 5 })
        );
    }

    #[test]
    fn quantize_rounds_half_away_and_clamps() {
        assert_eq!(quantize(2.5), 3);
        assert_eq!(quantize(2.4999), 2);
        assert_eq!(quantize(-3.0), 0);
        assert_eq!(quantize(300.0), 255);
        assert_eq!(quantize(254.5), 255);
        assert_eq!(quantize(f64::NAN.max(0.0)), 0);
    }

    #[test]
    fn from_fn_is_row_major() {
        let r = GrayRaster::from_fn(3, 2, |x, y| (10 * y + x) as u8);
        assert_eq!(r.samples(), &[0, 1, 2, 10, 11, 12]);
        assert_eq!(r.get(2, 1), 12);
        assert_eq!(r.row(1), &[10, 11, 12]);
    }
}
