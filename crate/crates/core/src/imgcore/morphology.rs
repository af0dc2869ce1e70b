//! Binary morphology with a disc structuring element.

use super::mask::BinaryMask;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MorphOp {
    Dilate,
    Erode,
    Close,
    Open,
    FillHoles,
}

/// Applies a morphological operation with a disc structuring element of the
/// given radius (ignored by `FillHoles`).
///
/// Dilation is clipped to the raster; erosion treats out-of-bounds cells as
/// foreground. That pair forms an adjunction on the raster, so closing is
/// extensive and idempotent and opening anti-extensive and idempotent.
pub fn morphology(mask: &BinaryMask, op: MorphOp, se_radius: usize) -> BinaryMask {
    match op {
        MorphOp::Dilate => dilate(mask, se_radius),
        MorphOp::Erode => erode(mask, se_radius),
        MorphOp::Close => erode(&dilate(mask, se_radius), se_radius),
        MorphOp::Open => dilate(&erode(mask, se_radius), se_radius),
        MorphOp::FillHoles => fill_holes(mask),
    }
}

fn disc_offsets(radius: usize) -> Vec<(i64, i64)> {
    let r = radius as i64;
    let mut offsets = Vec::new();
    for dy in -r..=r {
        for dx in -r..=r {
            if dx * dx + dy * dy <= r * r {
                offsets.push((dx, dy));
            }
        }
    }
    offsets
}

pub fn dilate(mask: &BinaryMask, radius: usize) -> BinaryMask {
    let offsets = disc_offsets(radius);
    let (w, h) = (mask.width(), mask.height());
    let mut out = BinaryMask::new(w, h);
    for (x, y) in mask.foreground() {
        for &(dx, dy) in &offsets {
            let (nx, ny) = (x as i64 + dx, y as i64 + dy);
            if nx >= 0 && ny >= 0 && (nx as usize) < w && (ny as usize) < h {
                out.set(nx as usize, ny as usize, true);
            }
        }
    }
    out
}

pub fn erode(mask: &BinaryMask, radius: usize) -> BinaryMask {
    let offsets = disc_offsets(radius);
    let (w, h) = (mask.width(), mask.height());
    BinaryMask::from_fn(w, h, |x, y| {
        offsets.iter().all(|&(dx, dy)| {
            let (nx, ny) = (x as i64 + dx, y as i64 + dy);
            if nx < 0 || ny < 0 || nx as usize >= w || ny as usize >= h {
                true
            } else {
                mask.get(nx as usize, ny as usize)
            }
        })
    })
}

/// Turns background components not 4-connected to the raster border into
/// foreground.
pub fn fill_holes(mask: &BinaryMask) -> BinaryMask {
    let (w, h) = (mask.width(), mask.height());
    let mut outside = vec![false; w * h];
    let mut stack = Vec::new();

    for x in 0..w {
        for y in [0, h - 1] {
            if !mask.get(x, y) && !outside[y * w + x] {
                outside[y * w + x] = true;
                stack.push((x, y));
            }
        }
    }
    for y in 0..h {
        for x in [0, w - 1] {
            if !mask.get(x, y) && !outside[y * w + x] {
                outside[y * w + x] = true;
                stack.push((x, y));
            }
        }
    }
    while let Some((x, y)) = stack.pop() {
        for (dx, dy) in [(1i64, 0i64), (-1, 0), (0, 1), (0, -1)] {
            let (nx, ny) = (x as i64 + dx, y as i64 + dy);
            if nx < 0 || ny < 0 || nx as usize >= w || ny as usize >= h {
                continue;
            }
            let (nx, ny) = (nx as usize, ny as usize);
            if !mask.get(nx, ny) && !outside[ny * w + nx] {
                outside[ny * w + nx] = true;
                stack.push((nx, ny));
            }
        }
    }

    BinaryMask::from_fn(w, h, |x, y| mask.get(x, y) || !outside[y * w + x])
}
