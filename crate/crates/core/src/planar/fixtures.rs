//! Small named shapes used by tests, benches and the CLI demos.

use std::f64::consts::{FRAC_PI_2, TAU};

use super::point::Point2;
use super::polyline::ClosedPolyline2;

pub fn unit_square() -> ClosedPolyline2 {
    ClosedPolyline2::new(vec![
        Point2::new(0.0, 0.0),
        Point2::new(1.0, 0.0),
        Point2::new(1.0, 1.0),
        Point2::new(0.0, 1.0),
    ])
    .expect("static shape")
}

/// Counterclockwise equilateral triangle with unit sides.
pub fn equilateral_triangle() -> ClosedPolyline2 {
    ClosedPolyline2::new(vec![
        Point2::new(0.0, 0.0),
        Point2::new(1.0, 0.0),
        Point2::new(0.5, 3f64.sqrt() / 2.0),
    ])
    .expect("static shape")
}

/// Counterclockwise regular `n`-gon with the given circumradius, first
/// vertex at the top.
pub fn regular_polygon(n: usize, radius: f64) -> ClosedPolyline2 {
    ClosedPolyline2::new(
        (0..n)
            .map(|i| Point2::from_polar(radius, FRAC_PI_2 + TAU * i as f64 / n as f64))
            .collect(),
    )
    .expect("n >= 3")
}

/// Regular pentagram with circumradius 1, traversed clockwise so that every
/// vertex turns right.
pub fn pentagram() -> ClosedPolyline2 {
    let p = regular_polygon(5, 1.0);
    let v = p.vertices();
    ClosedPolyline2::new([0, 3, 1, 4, 2].iter().map(|&i| v[i]).collect()).expect("static shape")
}

/// The vertex list repeated `k` times.
pub fn repeated(p: &ClosedPolyline2, k: usize) -> ClosedPolyline2 {
    let v: Vec<Point2> = (0..k).flat_map(|_| p.vertices().iter().copied()).collect();
    ClosedPolyline2::new(v).expect("k >= 1")
}
