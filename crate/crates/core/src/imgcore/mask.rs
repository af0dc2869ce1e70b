//! Binary raster mask and grayscale image buffers.

use std::path::Path;

use crate::error::{Error, Result};

/// A row-major boolean raster. Foreground pixels are `true`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryMask {
    width: usize,
    height: usize,
    bits: Vec<bool>,
}

impl BinaryMask {
    /// All-background mask of the given size. Panics if either dimension is zero.
    pub fn new(width: usize, height: usize) -> Self {
        assert!(width > 0 && height > 0, "mask dimensions must be positive");
        BinaryMask {
            width,
            height,
            bits: vec![false; width * height],
        }
    }

    pub fn from_fn(width: usize, height: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut mask = BinaryMask::new(width, height);
        for y in 0..height {
            for x in 0..width {
                mask.bits[y * width + x] = f(x, y);
            }
        }
        mask
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> bool {
        self.bits[y * self.width + x]
    }

    /// Like `get` but returns background for out-of-bounds coordinates.
    #[inline]
    pub fn get_signed(&self, x: i64, y: i64) -> bool {
        if x < 0 || y < 0 || x as usize >= self.width || y as usize >= self.height {
            false
        } else {
            self.bits[y as usize * self.width + x as usize]
        }
    }

    #[inline]
    pub fn set(&mut self, x: usize, y: usize, value: bool) {
        self.bits[y * self.width + x] = value;
    }

    pub fn count_foreground(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn foreground(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let w = self.width;
        self.bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(move |(i, _)| (i % w, i / w))
    }

    /// Threshold a grayscale buffer: pixels strictly greater than `threshold`
    /// become foreground.
    pub fn from_gray(img: &GrayBuffer, threshold: u8) -> Self {
        let mut mask = BinaryMask::new(img.width, img.height);
        for (i, &v) in img.data.iter().enumerate() {
            mask.bits[i] = v > threshold;
        }
        mask
    }

    pub fn to_gray(&self) -> GrayBuffer {
        GrayBuffer {
            width: self.width,
            height: self.height,
            data: self.bits.iter().map(|&b| if b { 255 } else { 0 }).collect(),
        }
    }

    /// Reads a mask from a PGM (P5) or PNG file, thresholding at `threshold`.
    pub fn load(path: &Path, threshold: u8) -> Result<Self> {
        let gray = GrayBuffer::load(path)?;
        if gray.width == 0 || gray.height == 0 {
            return Err(Error::data(format!("empty image: {}", path.display())));
        }
        Ok(BinaryMask::from_gray(&gray, threshold))
    }

    pub fn save_png(&self, path: &Path) -> Result<()> {
        self.to_gray().save_png(path)
    }
}

/// An 8-bit grayscale raster.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrayBuffer {
    pub width: usize,
    pub height: usize,
    pub data: Vec<u8>,
}

impl GrayBuffer {
    pub fn new(width: usize, height: usize) -> Self {
        GrayBuffer {
            width,
            height,
            data: vec![0; width * height],
        }
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> u8 {
        self.data[y * self.width + x]
    }

    #[inline]
    pub fn set(&mut self, x: usize, y: usize, value: u8) {
        self.data[y * self.width + x] = value;
    }

    pub fn load(path: &Path) -> Result<Self> {
        let img = image::open(path)
            .map_err(|e| Error::data(format!("cannot read image {}: {e}", path.display())))?
            .into_luma8();
        Ok(GrayBuffer {
            width: img.width() as usize,
            height: img.height() as usize,
            data: img.into_raw(),
        })
    }

    pub fn save_png(&self, path: &Path) -> Result<()> {
        let bytes = self.encode_png()?;
        crate::fsutil::atomic_write(path, &bytes)
    }

    /// PNG-encodes into a byte buffer; used for atomic writes.
    pub fn encode_png(&self) -> Result<Vec<u8>> {
        use image::ImageEncoder;
        let mut out = Vec::new();
        let enc = image::codecs::png::PngEncoder::new(&mut out);
        enc.write_image(
            &self.data,
            self.width as u32,
            self.height as u32,
            image::ExtendedColorType::L8,
        )
        .map_err(|e| Error::Internal(format!("png encode failed: {e}")))?;
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_fn_and_get() {
        let m = BinaryMask::from_fn(4, 3, |x, y| x == y);
        assert!(m.get(0, 0) && m.get(1, 1) && m.get(2, 2));
        assert!(!m.get(3, 0));
        assert_eq!(m.count_foreground(), 3);
    }

    #[test]
    fn signed_get_out_of_bounds_is_background() {
        let m = BinaryMask::from_fn(2, 2, |_, _| true);
        assert!(!m.get_signed(-1, 0));
        assert!(!m.get_signed(0, 2));
        assert!(m.get_signed(1, 1));
    }

    #[test]
    fn threshold_is_strict() {
        let img = GrayBuffer {
            width: 3,
            height: 1,
            data: vec![126, 127, 128],
        };
        let m = BinaryMask::from_gray(&img, 127);
        assert_eq!(
            (m.get(0, 0), m.get(1, 0), m.get(2, 0)),
            (false, false, true)
        );
    }

    #[test]
    fn png_roundtrip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("m.png");
        let m = BinaryMask::from_fn(8, 5, |x, y| (x + y) % 2 == 0);
        m.save_png(&path).unwrap();
        let back = BinaryMask::load(&path, 127).unwrap();
        assert_eq!(m, back);
    }

    #[test]
    fn pgm_p5_load() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("m.pgm");
        let mut bytes = b"P5\n3 2\n255\n".to_vec();
        bytes.extend_from_slice(&[0, 200, 0, 200, 0, 200]);
        std::fs::write(&path, bytes).unwrap();
        let m = BinaryMask::load(&path, 127).unwrap();
        assert_eq!((m.width(), m.height()), (3, 2));
        assert!(!m.get(0, 0) && m.get(1, 0) && m.get(0, 1) && !m.get(1, 1));
    }
}
