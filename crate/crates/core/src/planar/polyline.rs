use serde::{Deserialize, Serialize};

use super::hull::convex_hull;
use super::point::{turn_angle, Point2};
use crate::error::{GeomError, Result};
use crate::tolerance;

/// A closed polygonal line. Vertices are listed in traversal order and the
/// closing edge from the last vertex back to the first is implicit.
///
/// Construction only checks that there are at least three finite vertices;
/// [`normalize`] establishes the stronger invariants (distinct consecutive
/// vertices, no straight vertices) that the metrics and moves rely on.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Point2>", into = "Vec<Point2>")]
pub struct ClosedPolyline2 {
    vertices: Vec<Point2>,
}

impl ClosedPolyline2 {
    pub fn new(vertices: Vec<Point2>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(GeomError::Degenerate(format!(
                "a closed polyline needs at least 3 vertices, got {}",
                vertices.len()
            )));
        }
        if let Some(p) = vertices.iter().find(|p| !p.is_finite()) {
            return Err(GeomError::InvalidInput(format!("non-finite vertex {p:?}")));
        }
        Ok(Self { vertices })
    }

    /// Build and normalize in one step.
    pub fn normalized(vertices: Vec<Point2>) -> Result<Self> {
        normalize(&Self::new(vertices)?)
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<Point2> {
        self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Cyclic vertex access; any integer index is reduced modulo `len`.
    pub fn at(&self, i: isize) -> Point2 {
        let n = self.vertices.len() as isize;
        self.vertices[i.rem_euclid(n) as usize]
    }

    /// Edges as `(start, end)` pairs, including the closing edge.
    pub fn edges(&self) -> impl Iterator<Item = (Point2, Point2)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    /// Same vertices traversed in the opposite direction.
    pub fn reversed(&self) -> Self {
        let mut v = self.vertices.clone();
        v.reverse();
        Self { vertices: v }
    }

    /// Diagonal of the axis-aligned bounding box; the length scale used for
    /// relative point tolerances.
    pub fn scale(&self) -> f64 {
        bbox_diagonal(&self.vertices)
    }
}

impl TryFrom<Vec<Point2>> for ClosedPolyline2 {
    type Error = GeomError;
    fn try_from(v: Vec<Point2>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<ClosedPolyline2> for Vec<Point2> {
    fn from(p: ClosedPolyline2) -> Self {
        p.vertices
    }
}

pub(crate) fn bbox_diagonal(points: &[Point2]) -> f64 {
    let (mut lo, mut hi) = (points[0], points[0]);
    for p in points {
        lo = Point2::new(lo.x.min(p.x), lo.y.min(p.y));
        hi = Point2::new(hi.x.max(p.x), hi.y.max(p.y));
    }
    lo.dist(hi)
}

/// Length, full rotation, mean absolute curvature and hull perimeter of a
/// closed polyline.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolylineMetrics {
    #[serde(rename = "L")]
    pub length: f64,
    #[serde(rename = "V")]
    pub rotation: f64,
    #[serde(rename = "T")]
    pub curvature: f64,
    #[serde(rename = "P")]
    pub hull_perimeter: f64,
}

impl PolylineMetrics {
    pub fn of(p: &ClosedPolyline2) -> Result<Self> {
        let length = length(p);
        let rotation = full_rotation(p)?;
        let curvature = mean_abs_curvature(p)?;
        let hull_perimeter = convex_hull(p)?.perimeter();
        Ok(Self {
            length,
            rotation,
            curvature,
            hull_perimeter,
        })
    }
}

pub fn length(p: &ClosedPolyline2) -> f64 {
    p.edges().map(|(a, b)| a.dist(b)).sum()
}

/// Sum of exterior angles over all vertices.
pub fn full_rotation(p: &ClosedPolyline2) -> Result<f64> {
    let n = p.len() as isize;
    (0..n)
        .map(|i| turn_angle(p.at(i - 1), p.at(i), p.at(i + 1)))
        .sum()
}

pub fn mean_abs_curvature(p: &ClosedPolyline2) -> Result<f64> {
    let l = length(p);
    if l <= 0.0 {
        return Err(GeomError::Degenerate("zero-length polyline".into()));
    }
    Ok(full_rotation(p)? / l)
}

/// Merge coincident consecutive vertices and drop straight vertices until
/// neither occurs. Reversal vertices (turn angle π) are kept.
pub fn normalize(p: &ClosedPolyline2) -> Result<ClosedPolyline2> {
    let tol = tolerance::current();
    let scale = p.scale();
    if scale == 0.0 {
        return Err(GeomError::Degenerate("all vertices coincide".into()));
    }
    let eps_point = tol.point * scale;
    let mut v = p.vertices.clone();
    loop {
        let before = v.len();

        let mut i = 0;
        while v.len() > 1 && i < v.len() {
            let j = (i + 1) % v.len();
            if v[i].dist(v[j]) <= eps_point {
                v.remove(j);
                if j < i {
                    i -= 1;
                }
            } else {
                i += 1;
            }
        }

        let mut i = 0;
        while v.len() >= 3 && i < v.len() {
            let n = v.len();
            let (a, b, c) = (v[(i + n - 1) % n], v[i], v[(i + 1) % n]);
            match turn_angle(a, b, c) {
                Ok(t) if t < tol.collinear => {
                    v.remove(i);
                }
                _ => i += 1,
            }
        }

        if v.len() < 3 {
            return Err(GeomError::Degenerate(format!(
                "only {} vertices survive normalization",
                v.len()
            )));
        }
        if v.len() == before {
            return Ok(ClosedPolyline2 { vertices: v });
        }
    }
}
