//! Curve sampling, seeded instance generation, fuzz campaigns, SVG frames
//! and file formats.

mod curve;
mod fuzz;
mod io;
mod random;
mod svg;

pub use curve::{inscribe, SampledCurve, MIN_SAMPLES};
pub use fuzz::{evaluate, run_fuzz, FuzzReport, Outcome, Property, SPH_CAP, SPH_POLYLINE_CAP};
pub use io::{GeometryFile, UNIT_TOLERANCE};
pub use random::{
    instance_rng, random_polyline, random_polyline_with, random_quad_with,
    random_sph_polyline_with, random_sph_quad, random_sph_quad_with, random_sph_triangle,
    random_sph_triangle_with, random_triangle_with, sample_cap, Region, RNG_NAME,
};
pub use svg::{emit_svg, render_frame};
