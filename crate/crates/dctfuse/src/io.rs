use std::fs;
use std::io::Write;
use std::path::Path;

use dctfuse_core::GrayRaster;
use image::DynamicImage;
use thiserror::Error;

use crate::pgm::{decode_pgm, encode_pgm, PgmError};

#[derive(Debug, Error)]
pub enum ImageIoError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Pgm { path: String, source: PgmError },
    #[error("{path}: {source}")]
    Decode { path: String, source: image::ImageError },
}

/// BT.601 luma, rounded half away from zero.
pub fn rgb_to_gray(r: u8, g: u8, b: u8) -> u8 {
    let y = 0.299 * f64::from(r) + 0.587 * f64::from(g) + 0.114 * f64::from(b);
    y.round().clamp(0.0, 255.0) as u8
}

fn to_gray(img: DynamicImage) -> GrayRaster {
    let (w, h) = (img.width() as usize, img.height() as usize);
    let samples = match img {
        DynamicImage::ImageLuma8(luma) => luma.into_raw(),
        other => other.to_rgb8().pixels().map(|p| rgb_to_gray(p[0], p[1], p[2])).collect(),
    };
    GrayRaster::new(w, h, samples).expect("decoder returned a full frame")
}

/// Load binary PGM, PNG or JPEG as 8-bit grayscale.
pub fn load_image(path: impl AsRef<Path>) -> Result<GrayRaster, ImageIoError> {
    let path = path.as_ref();
    let name = || path.display().to_string();
    let bytes = fs::read(path).map_err(|source| ImageIoError::Io { path: name(), source })?;
    if bytes.starts_with(b"P5") {
        return decode_pgm(&bytes).map_err(|source| ImageIoError::Pgm { path: name(), source });
    }
    if bytes.first() == Some(&b'P') && bytes.get(1).is_some_and(u8::is_ascii_digit) {
        return Err(ImageIoError::Pgm { path: name(), source: PgmError::BadMagic });
    }
    let img = image::load_from_memory(&bytes).map_err(|source| ImageIoError::Decode { path: name(), source })?;
    Ok(to_gray(img))
}

/// Write `bytes` to a temporary file next to `path`, then rename it into place.
pub fn write_atomic(path: impl AsRef<Path>, bytes: &[u8]) -> std::io::Result<()> {
    let path = path.as_ref();
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

/// Save as binary PGM.
pub fn save_image(raster: &GrayRaster, path: impl AsRef<Path>) -> Result<(), ImageIoError> {
    let path = path.as_ref();
    write_atomic(path, &encode_pgm(raster)).map_err(|source| ImageIoError::Io { path: path.display().to_string(), source })
}
