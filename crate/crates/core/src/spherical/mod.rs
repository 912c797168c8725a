//! Unit-sphere kernel: geodesic distances and angles, triangle
//! trigonometry, quadrilateral and triangle inequalities, polylines in a
//! hemisphere and their convex hulls.

mod hull;
mod point;
mod polyline;
mod quad;
mod trig;

pub use hull::{hemisphere_witness, sph_hull_of, SphConvexPolygon};
pub use point::{sph_angle, sph_distance, SphPoint};
pub use polyline::{
    sph_full_rotation, sph_hull, sph_mean_curvature, theorem_s_check, SphPolyline, SphVerdict,
};
pub use quad::{lemma3s_margin, SphQuad};
pub use trig::{
    f_xcotx, lemma1s_margin, lemma2s_margin, planar_angles, probe_cos_sinc, probe_fxyz, probe_fyz,
    sph_half_angle, sph_triangle_excess, SphTriangle,
};
