use alloc::vec::Vec;

use crate::error::Result;
use crate::eval::blur::{synthetic_blur, BlurSpec, Side};
use crate::raster::GrayRaster;

/// Box-mask sizes used to build each complementary pair.
pub const PAIR_KERNEL_SIZES: [usize; 2] = [5, 9];

/// Two complementary half-blurred views of one ground-truth image.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiFocusPair {
    pub source: GrayRaster,
    /// Left half defocused, right half sharp.
    pub left_blurred: GrayRaster,
    /// Right half defocused, left half sharp.
    pub right_blurred: GrayRaster,
    pub kernel_size: usize,
}

impl MultiFocusPair {
    pub fn new(source: &GrayRaster, kernel_size: usize) -> Result<Self> {
        Ok(MultiFocusPair {
            left_blurred: synthetic_blur(source, &BlurSpec::new(Side::Left, kernel_size)?)?,
            right_blurred: synthetic_blur(source, &BlurSpec::new(Side::Right, kernel_size)?)?,
            source: source.clone(),
            kernel_size,
        })
    }

    pub fn inputs(&self) -> [GrayRaster; 2] {
        [self.left_blurred.clone(), self.right_blurred.clone()]
    }
}

/// One pair per image per kernel size: `K` images give `2K` pairs.
pub fn make_pairs(images: &[GrayRaster]) -> Result<Vec<MultiFocusPair>> {
    images
        .iter()
        .flat_map(|img| PAIR_KERNEL_SIZES.iter().map(move |&k| MultiFocusPair::new(img, k)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn texture(seed: usize) -> GrayRaster {
        GrayRaster::from_fn(32, 16, |x, y| ((x * 61 + y * 23 + seed * 11 + x * y) % 256) as u8)
    }

    #[test]
    fn pair_counts() {
        assert_eq!(make_pairs(&[texture(0)]).unwrap().len(), 2);
        let six: Vec<_> = (0..6).map(texture).collect();
        assert_eq!(make_pairs(&six).unwrap().len(), 12);
    }

    #[test]
    fn members_keep_opposite_halves() {
        for pair in make_pairs(&[texture(3)]).unwrap() {
            for y in 0..16 {
                assert_eq!(&pair.left_blurred.row(y)[16..], &pair.source.row(y)[16..]);
                assert_eq!(&pair.right_blurred.row(y)[..16], &pair.source.row(y)[..16]);
            }
        }
    }
}
