//! Binary PGM (`P5`, maxval 255).
//!
//! The writer always emits `P5\n<width> <height>\n255\n` followed by the raw
//! row-major samples. The reader also accepts `#` comments and arbitrary
//! whitespace between header fields, as netpbm does.

use dctfuse_core::GrayRaster;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PgmError {
    #[error("not a binary PGM (magic must be P5)")]
    BadMagic,
    #[error("malformed PGM header: {0}")]
    BadHeader(&'static str),
    #[error("unsupported PGM maxval {0} (only 255 is supported)")]
    UnsupportedMaxval(u32),
    #[error("PGM pixel data truncated: expected {expected} bytes, found {actual}")]
    Truncated { expected: usize, actual: usize },
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn skip_space_and_comments(&mut self) {
        while let Some(&b) = self.bytes.get(self.pos) {
            if b == b'#' {
                while self.bytes.get(self.pos).is_some_and(|&c| c != b'\n') {
                    self.pos += 1;
                }
            } else if b.is_ascii_whitespace() {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    fn number(&mut self, what: &'static str) -> Result<u32, PgmError> {
        self.skip_space_and_comments();
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or(PgmError::BadHeader(what))
    }
}

pub fn decode_pgm(bytes: &[u8]) -> Result<GrayRaster, PgmError> {
    if bytes.get(..2) != Some(b"P5") {
        return Err(PgmError::BadMagic);
    }
    let mut cur = Cursor { bytes, pos: 2 };
    let width = cur.number("width")? as usize;
    let height = cur.number("height")? as usize;
    let maxval = cur.number("maxval")?;
    if maxval != 255 {
        return Err(PgmError::UnsupportedMaxval(maxval));
    }
    // Exactly one whitespace byte separates the header from the raster.
    if !bytes.get(cur.pos).is_some_and(u8::is_ascii_whitespace) {
        return Err(PgmError::BadHeader("missing separator after maxval"));
    }
    let data = &bytes[cur.pos + 1..];
    let expected = width
        .checked_mul(height)
        .ok_or(PgmError::BadHeader("dimensions overflow"))?;
    if data.len() < expected {
        return Err(PgmError::Truncated { expected, actual: data.len() });
    }
    GrayRaster::new(width, height, data[..expected].to_vec()).map_err(|_| PgmError::BadHeader("sample count"))
}

pub fn encode_pgm(raster: &GrayRaster) -> Vec<u8> {
    let header = format!("P5\n{} {}\n255\n", raster.width(), raster.height());
    let mut out = Vec::with_capacity(header.len() + raster.samples().len());
    out.extend_from_slice(header.as_bytes());
    out.extend_from_slice(raster.samples());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn single_black_pixel_is_bit_exact() {
        let r = GrayRaster::filled(1, 1, 0);
        assert_eq!(encode_pgm(&r), b"P5\n1 1\n255\n\x00");
    }

    #[test]
    fn decodes_8x8() {
        let mut bytes = b"P5\n8 8\n255\n".to_vec();
        bytes.extend(0u8..64);
        let r = decode_pgm(&bytes).unwrap();
        assert_eq!(r.dimensions(), (8, 8));
        assert_eq!(r.samples(), (0u8..64).collect::<Vec<_>>());
    }

    #[test]
    fn accepts_comments_and_spacing() {
        let mut bytes = b"P5 # made by hand\n  3\t2\n# comment\n255\n".to_vec();
        bytes.extend([1, 2, 3, 4, 5, 6]);
        assert_eq!(decode_pgm(&bytes).unwrap().samples(), &[1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn separator_byte_may_be_whitespace_valued_data() {
        // First sample is 0x0A, which must not be eaten as header whitespace.
        let bytes = b"P5\n2 1\n255\n\n\x05".to_vec();
        assert_eq!(decode_pgm(&bytes).unwrap().samples(), &[10, 5]);
    }

    #[test]
    fn errors() {
        assert_eq!(decode_pgm(b"P6\n1 1\n255\n\0\0\0"), Err(PgmError::BadMagic));
        assert_eq!(decode_pgm(b"P5\n1 1\n65535\n\0\0"), Err(PgmError::UnsupportedMaxval(65535)));
        assert_eq!(decode_pgm(b"P5\n2 2\n255\n\0"), Err(PgmError::Truncated { expected: 4, actual: 1 }));
        assert_eq!(decode_pgm(b"P5\nx 2\n255\n"), Err(PgmError::BadHeader("width")));
        assert_eq!(decode_pgm(b"P5\n1 1\n255"), Err(PgmError::BadHeader("missing separator after maxval")));
    }

    proptest! {
        #[test]
        fn round_trip(w in 1usize..40, h in 1usize..40, seed in any::<u8>()) {
            let r = GrayRaster::from_fn(w, h, |x, y| (x * 7 + y * 13).wrapping_add(seed as usize) as u8);
            prop_assert_eq!(decode_pgm(&encode_pgm(&r)).unwrap(), r);
        }
    }
}
