//! Points, closed polylines, curvature metrics and convex hulls in the plane.

pub mod fixtures;
mod hull;
mod point;
mod polyline;

pub use hull::{convex_hull, is_multiple_circuit, ConvexPolygon2};
pub use point::{interior_angle, orient, rho, turn_angle, Direction, Orientation, Point2};
pub(crate) use polyline::bbox_diagonal;
pub use polyline::{
    full_rotation, length, mean_abs_curvature, normalize, ClosedPolyline2, PolylineMetrics,
};
