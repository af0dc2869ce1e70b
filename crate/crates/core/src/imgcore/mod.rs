//! Binary-image primitives: masks, connected components, boundary tracing,
//! convex hulls, second-order moments and morphology.

mod contour;
mod hull;
mod mask;
mod moments;
mod morphology;
mod region;

pub use contour::{trace_boundary, Contour};
pub use hull::{boundary_lattice_points, convex_hull, lattice_point_count, polygon_area};
pub use mask::{BinaryMask, GrayBuffer};
pub use moments::{second_central_moments, MomentEllipse};
pub use morphology::{dilate, erode, fill_holes, morphology, MorphOp};
pub use region::{connected_components, Bbox, BinaryRegion};
