use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("image has zero width or height ({width}x{height})")]
    EmptyImage { width: usize, height: usize },

    #[error("sample buffer holds {actual} values, expected {expected}")]
    SampleCount { expected: usize, actual: usize },

    #[error("dimension mismatch: {left_width}x{left_height} vs {right_width}x{right_height}")]
    DimensionMismatch {
        left_width: usize,
        left_height: usize,
        right_width: usize,
        right_height: usize,
    },

    #[error("at least {required} images are required, got {actual}")]
    TooFewImages { required: usize, actual: usize },

    #[error("at most {max} source images are supported, got {actual}")]
    TooManyImages { max: usize, actual: usize },

    #[error("consistency window must be odd and at least 3, got {0}")]
    InvalidWindow(usize),

    #[error("box kernel size must be odd and at least 3, got {0}")]
    InvalidKernel(usize),

    #[error("image {width}x{height} is too small: {requirement}")]
    ImageTooSmall {
        width: usize,
        height: usize,
        requirement: &'static str,
    },

    #[error("benchmark needs at least one image pair")]
    NoPairs,

    #[error("decision map is {map_rows}x{map_cols} tiles but the grids are {grid_rows}x{grid_cols}")]
    MapMismatch {
        map_rows: usize,
        map_cols: usize,
        grid_rows: usize,
        grid_cols: usize,
    },
}
