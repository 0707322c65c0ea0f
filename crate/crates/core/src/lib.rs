//! Multi-focus image fusion in the 8×8 block-DCT domain.
//!
//! Focus is measured per block with the Energy of Laplacian (EOL) and the
//! Variance of Laplacian (VOL), both evaluated directly on DCT coefficients
//! through lifted Laplacian operator matrices. Every coefficient-domain
//! measure has a spatial-domain counterpart (`*_spatial`) that computes the
//! same quantity by direct convolution; the two agree to floating-point
//! round-off and are cross-checked in the test suite.
//!
//! The crate is `no_std` (with `alloc`). Enable `std` for `std::error::Error`
//! integration and `parallel` for rayon-backed per-tile work.

#![cfg_attr(not(any(feature = "std", test)), no_std)]
#![warn(missing_debug_implementations)]

extern crate alloc;

mod error;
pub mod eval;
pub mod focus;
pub mod fusion;
pub mod laplacian;
pub mod matrix;
mod par;
pub mod raster;
pub mod transform;

pub use error::{Error, Result};
pub use focus::{FocusMetric, FocusScore};
pub use fusion::{fuse, FusionConfig, FusionMetric, FusionOutput, TiePolicy};
pub use laplacian::OperatorSet;
pub use matrix::{CoeffBlock, Mat8, SpatialBlock, BLOCK};
pub use raster::GrayRaster;
pub use transform::DctBasis;
