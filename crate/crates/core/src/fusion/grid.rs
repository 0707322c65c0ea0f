//! Splitting rasters into 8×8 tiles and putting them back together.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::matrix::{CoeffBlock, Mat8, SpatialBlock, BLOCK};
use crate::par;
use crate::raster::{quantize, GrayRaster};
use crate::transform::DctBasis;

/// Row-major grid of blocks covering an image padded up to multiples of 8.
#[derive(Clone, Debug, PartialEq)]
pub struct BlockGrid<T> {
    rows: usize,
    cols: usize,
    blocks: Vec<T>,
    original_width: usize,
    original_height: usize,
    pad_right: usize,
    pad_bottom: usize,
}

impl<T> BlockGrid<T> {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn blocks(&self) -> &[T] {
        &self.blocks
    }

    pub fn get(&self, row: usize, col: usize) -> &T {
        &self.blocks[row * self.cols + col]
    }

    pub fn original_width(&self) -> usize {
        self.original_width
    }

    pub fn original_height(&self) -> usize {
        self.original_height
    }

    pub fn pad_right(&self) -> usize {
        self.pad_right
    }

    pub fn pad_bottom(&self) -> usize {
        self.pad_bottom
    }

    /// Same tile layout over the same original image size.
    pub fn same_layout<U>(&self, other: &BlockGrid<U>) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.original_width == other.original_width
            && self.original_height == other.original_height
    }

    pub(crate) fn ensure_same_layout<U>(&self, other: &BlockGrid<U>) -> Result<()> {
        if self.same_layout(other) {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left_width: self.original_width,
                left_height: self.original_height,
                right_width: other.original_width,
                right_height: other.original_height,
            })
        }
    }

    /// Replace the blocks, keeping the geometry. `blocks` must have `rows·cols` entries.
    pub(crate) fn with_blocks<U>(&self, blocks: Vec<U>) -> BlockGrid<U> {
        debug_assert_eq!(blocks.len(), self.rows * self.cols);
        BlockGrid {
            rows: self.rows,
            cols: self.cols,
            blocks,
            original_width: self.original_width,
            original_height: self.original_height,
            pad_right: self.pad_right,
            pad_bottom: self.pad_bottom,
        }
    }
}

impl BlockGrid<SpatialBlock> {
    pub fn to_coefficients(&self, basis: &DctBasis) -> BlockGrid<CoeffBlock> {
        self.with_blocks(par::map_collect(&self.blocks, |b| basis.forward(b)))
    }
}

impl BlockGrid<CoeffBlock> {
    pub fn to_spatial(&self, basis: &DctBasis) -> BlockGrid<SpatialBlock> {
        self.with_blocks(par::map_collect(&self.blocks, |b| basis.inverse(b)))
    }
}

/// Pad by edge replication to multiples of 8 and split into tiles.
pub fn tile(image: &GrayRaster) -> Result<BlockGrid<SpatialBlock>> {
    let (width, height) = image.dimensions();
    if width == 0 || height == 0 {
        return Err(Error::EmptyImage { width, height });
    }
    let cols = width.div_ceil(BLOCK);
    let rows = height.div_ceil(BLOCK);
    let mut blocks = Vec::with_capacity(rows * cols);
    for tr in 0..rows {
        for tc in 0..cols {
            blocks.push(SpatialBlock(Mat8::from_fn(|r, c| {
                let y = (tr * BLOCK + r).min(height - 1);
                let x = (tc * BLOCK + c).min(width - 1);
                f64::from(image.get(x, y))
            })));
        }
    }
    Ok(BlockGrid {
        rows,
        cols,
        blocks,
        original_width: width,
        original_height: height,
        pad_right: cols * BLOCK - width,
        pad_bottom: rows * BLOCK - height,
    })
}

/// Reassemble tiles, crop the padding, and quantize to 8 bits.
pub fn untile(grid: &BlockGrid<SpatialBlock>) -> GrayRaster {
    GrayRaster::from_fn(grid.original_width, grid.original_height, |x, y| {
        let block = grid.get(y / BLOCK, x / BLOCK);
        quantize(block.0[(y % BLOCK, x % BLOCK)])
    })
}
