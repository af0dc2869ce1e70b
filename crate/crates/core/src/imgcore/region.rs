//! Connected regions of a binary mask.

use super::mask::BinaryMask;

/// Inclusive axis-aligned bounding box in pixel coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bbox {
    pub x_min: usize,
    pub y_min: usize,
    pub x_max: usize,
    pub y_max: usize,
}

impl Bbox {
    pub fn width(&self) -> usize {
        self.x_max - self.x_min + 1
    }

    pub fn height(&self) -> usize {
        self.y_max - self.y_min + 1
    }

    pub fn area(&self) -> usize {
        self.width() * self.height()
    }
}

/// A nonempty 8-connected set of foreground pixels with cached geometry.
#[derive(Debug, Clone, PartialEq)]
pub struct BinaryRegion {
    pixels: Vec<(usize, usize)>,
    centroid: (f64, f64),
    bbox: Bbox,
}

impl BinaryRegion {
    /// Builds a region from its pixel set. Panics on an empty set; callers
    /// guarantee nonemptiness (connected components never emits empty sets).
    pub fn from_pixels(mut pixels: Vec<(usize, usize)>) -> Self {
        assert!(!pixels.is_empty(), "region must be nonempty");
        pixels.sort_unstable_by_key(|&(x, y)| (y, x));
        pixels.dedup();
        let n = pixels.len() as f64;
        let (sx, sy) = pixels
            .iter()
            .fold((0.0, 0.0), |(sx, sy), &(x, y)| (sx + x as f64, sy + y as f64));
        let bbox = Bbox {
            x_min: pixels.iter().map(|p| p.0).min().unwrap(),
            y_min: pixels.iter().map(|p| p.1).min().unwrap(),
            x_max: pixels.iter().map(|p| p.0).max().unwrap(),
            y_max: pixels.iter().map(|p| p.1).max().unwrap(),
        };
        BinaryRegion {
            pixels,
            centroid: (sx / n, sy / n),
            bbox,
        }
    }

    /// Pixels in row-major order.
    pub fn pixels(&self) -> &[(usize, usize)] {
        &self.pixels
    }

    pub fn area(&self) -> usize {
        self.pixels.len()
    }

    pub fn centroid(&self) -> (f64, f64) {
        self.centroid
    }

    pub fn bbox(&self) -> Bbox {
        self.bbox
    }

    /// Renders the region into a mask cropped to its bounding box.
    /// Returns the local raster and the (x, y) offset of its origin.
    pub fn to_local_mask(&self) -> (BinaryMask, (usize, usize)) {
        let b = self.bbox;
        let mut mask = BinaryMask::new(b.width(), b.height());
        for &(x, y) in &self.pixels {
            mask.set(x - b.x_min, y - b.y_min, true);
        }
        (mask, (b.x_min, b.y_min))
    }

    /// Renders the region into a full-size mask.
    pub fn to_mask(&self, width: usize, height: usize) -> BinaryMask {
        let mut mask = BinaryMask::new(width, height);
        for &(x, y) in &self.pixels {
            mask.set(x, y, true);
        }
        mask
    }
}

/// Partitions the foreground of `mask` into maximal 8-connected regions,
/// sorted by area descending (ties by first pixel in row-major order).
pub fn connected_components(mask: &BinaryMask) -> Vec<BinaryRegion> {
    let (w, h) = (mask.width(), mask.height());
    let mut visited = vec![false; w * h];
    let mut regions = Vec::new();
    let mut stack = Vec::new();

    for y0 in 0..h {
        for x0 in 0..w {
            if !mask.get(x0, y0) || visited[y0 * w + x0] {
                continue;
            }
            let mut pixels = Vec::new();
            visited[y0 * w + x0] = true;
            stack.push((x0, y0));
            while let Some((x, y)) = stack.pop() {
                pixels.push((x, y));
                for dy in -1i64..=1 {
                    for dx in -1i64..=1 {
                        if dx == 0 && dy == 0 {
                            continue;
                        }
                        let (nx, ny) = (x as i64 + dx, y as i64 + dy);
                        if nx < 0 || ny < 0 || nx as usize >= w || ny as usize >= h {
                            continue;
                        }
                        let (nx, ny) = (nx as usize, ny as usize);
                        if mask.get(nx, ny) && !visited[ny * w + nx] {
                            visited[ny * w + nx] = true;
                            stack.push((nx, ny));
                        }
                    }
                }
            }
            regions.push(BinaryRegion::from_pixels(pixels));
        }
    }

    regions.sort_by(|a, b| {
        b.area()
            .cmp(&a.area())
            .then_with(|| a.pixels()[0].cmp(&b.pixels()[0]))
    });
    regions
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_mask_yields_no_regions() {
        let mask = BinaryMask::new(5, 5);
        assert!(connected_components(&mask).is_empty());
    }

    #[test]
    fn filled_block_single_region() {
        let mask = BinaryMask::from_fn(3, 3, |_, _| true);
        let regions = connected_components(&mask);
        assert_eq!(regions.len(), 1);
        assert_eq!(regions[0].area(), 9);
        assert_eq!(regions[0].centroid(), (1.0, 1.0));
    }

    #[test]
    fn diagonal_pixels_are_8_connected() {
        let mask = BinaryMask::from_fn(3, 3, |x, y| x == y);
        let regions = connected_components(&mask);
        assert_eq!(regions.len(), 1);
        assert_eq!(regions[0].area(), 3);
    }

    #[test]
    fn separated_blocks_sorted_by_area() {
        // 3x3 block on the left, 2x2 block on the right, zero column between.
        let mask = BinaryMask::from_fn(7, 3, |x, y| x < 3 || (x > 4 && y < 2));
        let regions = connected_components(&mask);
        assert_eq!(regions.len(), 2);
        assert_eq!(regions[0].area(), 9);
        assert_eq!(regions[1].area(), 4);
        assert_eq!(regions[1].bbox().x_min, 5);
    }

    #[test]
    fn local_mask_roundtrip() {
        let mask = BinaryMask::from_fn(8, 8, |x, y| (3..6).contains(&x) && (2..5).contains(&y));
        let region = &connected_components(&mask)[0];
        let (local, (ox, oy)) = region.to_local_mask();
        assert_eq!((ox, oy), (3, 2));
        assert_eq!((local.width(), local.height()), (3, 3));
        assert_eq!(local.count_foreground(), 9);
    }
}
