use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::point::{add, cross, dot, scale, sph_angle, sph_distance, triple, unit, SphPoint, Vec3};
use crate::error::{GeomError, Result};
use crate::planar::{ConvexPolygon2, Point2};
use crate::tolerance::HEMISPHERE_MARGIN;

const WITNESS_ROUNDS: usize = 10_000;

/// A unit vector `c` with `c·v >= HEMISPHERE_MARGIN` for every point: the
/// normalized vertex sum when it works, otherwise a perceptron search.
pub fn hemisphere_witness(points: &[SphPoint]) -> Result<SphPoint> {
    let fail = || GeomError::Precondition("points do not lie in an open hemisphere".into());
    let sum = points.iter().fold([0.0; 3], |s, p| add(s, p.xyz()));
    let mut c = unit(sum).ok_or_else(fail)?;
    for _ in 0..WITNESS_ROUNDS {
        let (worst, d) = points
            .iter()
            .map(|p| (p, dot(c, p.xyz())))
            .min_by(|x, y| x.1.total_cmp(&y.1))
            .ok_or_else(fail)?;
        if d >= HEMISPHERE_MARGIN {
            return Ok(SphPoint::from_vec_unchecked(c));
        }
        c = unit(add(c, scale(worst.xyz(), 0.5))).ok_or_else(fail)?;
    }
    Err(fail())
}

/// Gnomonic chart centred at `c`: `v ↦ (v·e1, v·e2) / (v·c)`.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Chart {
    c: Vec3,
    e1: Vec3,
    e2: Vec3,
}

impl Chart {
    pub(crate) fn new(c: &SphPoint) -> Self {
        let c = c.xyz();
        let axis = if c[0].abs() < 0.9 {
            [1.0, 0.0, 0.0]
        } else {
            [0.0, 1.0, 0.0]
        };
        let e1 = unit(cross(axis, c)).expect("axis is not parallel to c");
        let e2 = cross(c, e1);
        Self { c, e1, e2 }
    }

    pub(crate) fn project(&self, p: &SphPoint) -> Point2 {
        let v = p.xyz();
        let h = dot(v, self.c);
        Point2::new(dot(v, self.e1) / h, dot(v, self.e2) / h)
    }

    pub(crate) fn lift(&self, q: Point2) -> SphPoint {
        let v = add(self.c, add(scale(self.e1, q.x), scale(self.e2, q.y)));
        SphPoint::from_vec_unchecked(unit(v).expect("lifted point is non-zero"))
    }
}

/// Boundary of the convex hull of points in an open hemisphere,
/// counterclockwise seen from outside the sphere.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SphConvexPolygon {
    pub vertices: Vec<SphPoint>,
    /// Area, `Σ interior angles − (n − 2)π`.
    pub area: f64,
    pub perimeter: f64,
}

impl SphConvexPolygon {
    /// Whether `p` lies in the polygon, allowing `tol` outside each edge.
    pub fn contains(&self, p: &SphPoint, tol: f64) -> bool {
        let n = self.vertices.len();
        (0..n).all(|i| triple(&self.vertices[i], &self.vertices[(i + 1) % n], p) >= -tol)
    }
}

pub fn sph_hull_of(points: &[SphPoint]) -> Result<SphConvexPolygon> {
    let chart = Chart::new(&hemisphere_witness(points)?);
    let flat: Vec<Point2> = points.iter().map(|p| chart.project(p)).collect();
    let hull = ConvexPolygon2::hull_of(&flat)?;
    // reuse the input points themselves rather than lifted copies
    let vertices: Vec<SphPoint> = hull
        .vertices()
        .iter()
        .map(|q| {
            flat.iter()
                .position(|f| f == q)
                .map_or_else(|| chart.lift(*q), |i| points[i])
        })
        .collect();
    let n = vertices.len();
    let mut angles = 0.0;
    let mut perimeter = 0.0;
    for i in 0..n {
        let (u, v, w) = (
            &vertices[(i + n - 1) % n],
            &vertices[i],
            &vertices[(i + 1) % n],
        );
        angles += sph_angle(u, v, w)?;
        perimeter += sph_distance(v, w);
    }
    Ok(SphConvexPolygon {
        vertices,
        area: angles - (n as f64 - 2.0) * PI,
        perimeter,
    })
}
