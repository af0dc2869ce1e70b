//! Zernike moment magnitudes over the unit disc inscribed in a square raster.

use std::sync::OnceLock;

use super::{NormalizedShape, SHAPE_SIZE};

/// Radial order / repetition pair with m <= n and n - m even.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZernikeIndex {
    pub n: u32,
    pub m: u32,
}

/// All valid (n, m) pairs up to `max_order`, in (n, m) lexicographic order.
/// For `max_order` 10 this is exactly 36 pairs.
pub fn zernike_indices(max_order: u32) -> Vec<ZernikeIndex> {
    let mut indices = Vec::new();
    for n in 0..=max_order {
        for m in (n % 2..=n).step_by(2) {
            indices.push(ZernikeIndex { n, m });
        }
    }
    indices
}

/// Coefficients of the radial polynomial R_nm as powers of rho, highest
/// power first: R_nm(rho) = sum_k c_k rho^(n - 2k). Exact in f64 up to
/// order 10 (the factorial ratios stay far below 2^53).
fn radial_coefficients(n: u32, m: u32) -> Vec<f64> {
    let fact = |k: u32| -> f64 { (1..=k).map(|v| v as f64).product() };
    let half_sum = (n + m) / 2;
    let half_diff = (n - m) / 2;
    (0..=half_diff)
        .map(|k| {
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            sign * fact(n - k) / (fact(k) * fact(half_sum - k) * fact(half_diff - k))
        })
        .collect()
}

fn radial_eval(coeffs: &[f64], n: u32, rho: f64) -> f64 {
    // Horner in rho^2, then the leftover rho^(n mod 2) power.
    let rho2 = rho * rho;
    let mut acc = 0.0;
    for &c in coeffs {
        acc = acc * rho2 + c;
    }
    if n % 2 == 1 {
        acc * rho
    } else {
        acc
    }
}

struct DiscPixel {
    /// Index into the row-major raster.
    raster_idx: usize,
    /// Cell coverage of the unit disc times the cell area in unit coordinates.
    weight: f64,
}

/// Precomputed conjugate basis values over the disc pixels of one grid size.
struct ZernikeBasis {
    max_order: u32,
    indices: Vec<ZernikeIndex>,
    pixels: Vec<DiscPixel>,
    /// Per index: interleaved (re, im) of R_nm(rho) * exp(-i m theta) per pixel.
    values: Vec<Vec<(f64, f64)>>,
}

impl ZernikeBasis {
    fn build(size: usize, max_order: u32) -> Self {
        let indices = zernike_indices(max_order);
        let cell = 2.0 / size as f64;
        let cell_area = cell * cell;

        let mut pixels = Vec::new();
        let mut coords = Vec::new();
        for row in 0..size {
            for col in 0..size {
                let x = (2 * col + 1) as f64 / size as f64 - 1.0;
                let y = (2 * row + 1) as f64 / size as f64 - 1.0;
                let rho = x.hypot(y);
                let coverage = if rho <= 1.0 - cell {
                    1.0
                } else if rho >= 1.0 + cell {
                    0.0
                } else {
                    // Boundary cell: estimate the in-disc fraction on an
                    // 8x8 centered subgrid (symmetric under quarter turns).
                    let mut inside = 0u32;
                    for sy in 0..8 {
                        for sx in 0..8 {
                            let sub_x = x + ((sx as f64 + 0.5) / 8.0 - 0.5) * cell;
                            let sub_y = y + ((sy as f64 + 0.5) / 8.0 - 0.5) * cell;
                            if sub_x.hypot(sub_y) <= 1.0 {
                                inside += 1;
                            }
                        }
                    }
                    inside as f64 / 64.0
                };
                if coverage > 0.0 {
                    pixels.push(DiscPixel {
                        raster_idx: row * size + col,
                        weight: coverage * cell_area,
                    });
                    coords.push((x, y, rho));
                }
            }
        }

        let values = indices
            .iter()
            .map(|&ZernikeIndex { n, m }| {
                let coeffs = radial_coefficients(n, m);
                coords
                    .iter()
                    .map(|&(x, y, rho)| {
                        let radial = radial_eval(&coeffs, n, rho.min(1.0));
                        let theta = y.atan2(x);
                        let angle = m as f64 * theta;
                        (radial * angle.cos(), -radial * angle.sin())
                    })
                    .collect()
            })
            .collect();

        ZernikeBasis {
            max_order,
            indices,
            pixels,
            values,
        }
    }
}

fn default_basis() -> &'static ZernikeBasis {
    static BASIS: OnceLock<ZernikeBasis> = OnceLock::new();
    BASIS.get_or_init(|| ZernikeBasis::build(SHAPE_SIZE, 10))
}

/// Magnitudes |A_nm| of the Zernike moments of a normalized shape, with
/// A_nm = ((n+1)/pi) * sum f(x,y) V*_nm(rho,theta) over the unit disc
/// inscribed in the frame. Returned in (n, m) lexicographic order; exactly
/// 36 values for `max_order` 10.
pub fn zernike_magnitudes(img: &NormalizedShape, max_order: u32) -> Vec<f64> {
    let built;
    let basis = if max_order == 10 {
        default_basis()
    } else {
        built = ZernikeBasis::build(SHAPE_SIZE, max_order);
        &built
    };
    debug_assert_eq!(basis.max_order, max_order);

    let data = img.pixels();
    let sampled: Vec<f64> = basis
        .pixels
        .iter()
        .map(|p| data[p.raster_idx] * p.weight)
        .collect();

    basis
        .indices
        .iter()
        .zip(&basis.values)
        .map(|(&ZernikeIndex { n, .. }, values)| {
            let (mut re, mut im) = (0.0, 0.0);
            for (f, &(vr, vi)) in sampled.iter().zip(values) {
                re += f * vr;
                im += f * vi;
            }
            let scale = (n + 1) as f64 / std::f64::consts::PI;
            scale * re.hypot(im)
        })
        .collect()
}
