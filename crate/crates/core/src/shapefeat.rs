//! The ten-feature shape descriptor of a binary region.
//!
//! Features, in canonical order: convex area, eccentricity, perimeter,
//! equivalent diameter, extent, filled area, minor axis length, major axis
//! length, the minor/major ratio `r`, and solidity. Values are emitted
//! unscaled; classifiers fit their own normalization on training data.

use crate::imgcore::{
    convex_hull, fill_holes, lattice_point_count, second_central_moments, trace_boundary,
    BinaryRegion,
};

pub const SHAPEFEAT_LEN: usize = 10;

/// Ordered feature vector of a region. Field order defines the serialized
/// 10-vector and matches [`shapefeat_names`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShapeFeatVector {
    /// Pixel count of the smallest convex polygon containing the region
    /// (shoelace area over the pixel-center hull plus the Pick-style
    /// boundary correction, so a filled convex raster has solidity 1).
    pub convex_area: f64,
    /// Focal distance over major axis length of the moment ellipse, in [0, 1].
    pub eccentricity: f64,
    /// Number of points in the traced boundary.
    pub perimeter: f64,
    /// Diameter of the circle with the same area as the region.
    pub equivalent_diameter: f64,
    /// Region area over bounding-box area, in (0, 1].
    pub extent: f64,
    /// Pixel count after filling holes.
    pub filled_area: f64,
    /// Minor axis length (2b) of the moment ellipse.
    pub minor_axis_length: f64,
    /// Major axis length (2a) of the moment ellipse.
    pub major_axis_length: f64,
    /// Minor over major axis length, in (0, 1].
    pub r: f64,
    /// Region area over convex area, in (0, 1].
    pub solidity: f64,
}

impl ShapeFeatVector {
    /// The features as a 10-vector in canonical order.
    pub fn to_array(self) -> [f64; SHAPEFEAT_LEN] {
        [
            self.convex_area,
            self.eccentricity,
            self.perimeter,
            self.equivalent_diameter,
            self.extent,
            self.filled_area,
            self.minor_axis_length,
            self.major_axis_length,
            self.r,
            self.solidity,
        ]
    }

    pub fn to_vec(self) -> Vec<f64> {
        self.to_array().to_vec()
    }
}

/// Canonical feature names, in the order used by every serialization and by
/// feature ranking.
pub fn shapefeat_names() -> [&'static str; SHAPEFEAT_LEN] {
    [
        "convex_area",
        "eccentricity",
        "perimeter",
        "equivalent_diameter",
        "extent",
        "filled_area",
        "minor_axis_length",
        "major_axis_length",
        "r",
        "solidity",
    ]
}

/// Computes all ten features of a nonempty region.
pub fn shapefeat(region: &BinaryRegion) -> ShapeFeatVector {
    let area = region.area() as f64;
    let bbox = region.bbox();

    let hull_points: Vec<(i64, i64)> = region
        .pixels()
        .iter()
        .map(|&(x, y)| (x as i64, y as i64))
        .collect();
    let hull = convex_hull(&hull_points);
    let convex_area = lattice_point_count(&hull);

    let ellipse = second_central_moments(region);
    let perimeter = trace_boundary(region).len() as f64;

    let (local, _) = region.to_local_mask();
    let filled_area = fill_holes(&local).count_foreground() as f64;

    let major_axis_length = 2.0 * ellipse.a;
    let minor_axis_length = 2.0 * ellipse.b;
    let r = if ellipse.a > 0.0 {
        ellipse.b / ellipse.a
    } else {
        1.0
    };

    ShapeFeatVector {
        convex_area,
        eccentricity: ellipse.eccentricity(),
        perimeter,
        equivalent_diameter: (4.0 * area / std::f64::consts::PI).sqrt(),
        extent: area / bbox.area() as f64,
        filled_area,
        minor_axis_length,
        major_axis_length,
        r,
        solidity: area / convex_area,
    }
}
