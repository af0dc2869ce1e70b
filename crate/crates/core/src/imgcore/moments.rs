//! Second-order central moments and the equivalent ellipse.

use super::region::BinaryRegion;

/// Ellipse with the same (area-normalized) second central moments as a
/// region. Each pixel is treated as a unit square, which adds 1/12 to both
/// plain second moments; with that correction a uniformly rasterized
/// ellipse recovers its own semi-axes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentEllipse {
    /// Semi-major axis length in pixels.
    pub a: f64,
    /// Semi-minor axis length in pixels.
    pub b: f64,
    /// Focal half-distance, sqrt(a^2 - b^2).
    pub c: f64,
    /// Orientation of the major axis in radians, in (-pi/2, pi/2].
    pub theta: f64,
}

impl MomentEllipse {
    /// Ratio of the focal distance to the major axis length, in [0, 1].
    pub fn eccentricity(&self) -> f64 {
        if self.a > 0.0 {
            self.c / self.a
        } else {
            0.0
        }
    }
}

/// Computes the moment ellipse of a region: semi-axes from the eigenvalues
/// of the per-area central moment matrix via a = 2*sqrt(lambda_max),
/// b = 2*sqrt(lambda_min).
pub fn second_central_moments(region: &BinaryRegion) -> MomentEllipse {
    let (cx, cy) = region.centroid();
    let n = region.area() as f64;

    let (mut s20, mut s02, mut s11) = (0.0, 0.0, 0.0);
    for &(x, y) in region.pixels() {
        let dx = x as f64 - cx;
        let dy = y as f64 - cy;
        s20 += dx * dx;
        s02 += dy * dy;
        s11 += dx * dy;
    }
    let m20 = s20 / n + 1.0 / 12.0;
    let m02 = s02 / n + 1.0 / 12.0;
    let m11 = s11 / n;

    let common = (m20 + m02) / 2.0;
    let half_diff = (m20 - m02) / 2.0;
    let disc = (half_diff * half_diff + m11 * m11).sqrt();
    let lambda_max = common + disc;
    let lambda_min = (common - disc).max(0.0);

    let a = 2.0 * lambda_max.sqrt();
    let b = 2.0 * lambda_min.sqrt();
    let c = (a * a - b * b).max(0.0).sqrt();
    let mut theta = 0.5 * (2.0 * m11).atan2(m20 - m02);
    if theta <= -std::f64::consts::FRAC_PI_2 {
        theta += std::f64::consts::PI;
    } else if theta > std::f64::consts::FRAC_PI_2 {
        theta -= std::f64::consts::PI;
    }

    MomentEllipse { a, b, c, theta }
}
