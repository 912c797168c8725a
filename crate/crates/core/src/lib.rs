//! Curvature metrics for closed polylines, the improvement engine that
//! reduces a closed polyline to a multiple circuit of its convex hull, and
//! spherical and hyperbolic counterparts of the mean-curvature inequality.
//!
//! The central quantity is the mean absolute curvature `T = V / L` of a
//! closed curve (full rotation over length). For any closed polyline `Γ` in
//! the plane, `T(Γ) >= 2π / P`, where `P` is the perimeter of its convex hull,
//! with equality exactly for multiple circuits of the hull boundary.

pub mod error;
pub mod harness;
pub mod hyperbolic;
pub mod improver;
pub mod inequality;
pub mod planar;
pub mod spherical;
pub mod tolerance;

pub use error::{GeomError, Result};
pub use planar::{ClosedPolyline2, ConvexPolygon2, Direction, Point2, PolylineMetrics};
