//! File formats, synthetic test imagery, the oracle self-check, and the
//! `dctfuse` command-line front end for [`dctfuse_core`].

pub mod cli;
pub mod io;
pub mod pgm;
pub mod selfcheck;
pub mod synth;

pub use dctfuse_core;
pub use io::{load_image, save_image, ImageIoError};
