use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

use super::hull::{hemisphere_witness, sph_hull_of, SphConvexPolygon};
use super::point::{sph_angle, sph_distance, SphPoint};
use crate::error::{GeomError, Result};

/// Shortest admissible edge, in radians.
const MIN_EDGE: f64 = 1e-12;

/// A closed polyline of minor geodesic arcs lying in an open hemisphere.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<SphPoint>", into = "Vec<SphPoint>")]
pub struct SphPolyline {
    vertices: Vec<SphPoint>,
}

impl SphPolyline {
    pub fn new(vertices: Vec<SphPoint>) -> Result<Self> {
        let n = vertices.len();
        if n < 3 {
            return Err(GeomError::InvalidInput(format!(
                "a closed polyline needs at least 3 vertices, got {n}"
            )));
        }
        hemisphere_witness(&vertices)?;
        for i in 0..n {
            let d = sph_distance(&vertices[i], &vertices[(i + 1) % n]);
            if d < MIN_EDGE {
                return Err(GeomError::Degenerate(format!("edge {i} has zero length")));
            }
        }
        Ok(Self { vertices })
    }

    pub fn vertices(&self) -> &[SphPoint] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn length(&self) -> f64 {
        let n = self.len();
        (0..n)
            .map(|i| sph_distance(&self.vertices[i], &self.vertices[(i + 1) % n]))
            .sum()
    }

    /// The polyline traversed `k` times.
    pub fn repeated(&self, k: usize) -> Self {
        Self {
            vertices: self.vertices.repeat(k),
        }
    }
}

impl TryFrom<Vec<SphPoint>> for SphPolyline {
    type Error = GeomError;

    fn try_from(v: Vec<SphPoint>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<SphPolyline> for Vec<SphPoint> {
    fn from(p: SphPolyline) -> Self {
        p.vertices
    }
}

/// `V = Σ (π − ∠A_{i-1} A_i A_{i+1})`.
pub fn sph_full_rotation(p: &SphPolyline) -> Result<f64> {
    let v = p.vertices();
    let n = v.len();
    (0..n)
        .map(|i| Ok(PI - sph_angle(&v[(i + n - 1) % n], &v[i], &v[(i + 1) % n])?))
        .sum()
}

/// `T = V / L`.
pub fn sph_mean_curvature(p: &SphPolyline) -> Result<f64> {
    Ok(sph_full_rotation(p)? / p.length())
}

pub fn sph_hull(p: &SphPolyline) -> Result<SphConvexPolygon> {
    sph_hull_of(p.vertices())
}

/// Mean curvature of a spherical polyline against `(2π − S) / L(Γ1)`, with
/// `Γ1` the boundary of its convex hull and `S` the hull area.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SphVerdict {
    #[serde(rename = "L")]
    pub length: f64,
    #[serde(rename = "V")]
    pub rotation: f64,
    #[serde(rename = "T")]
    pub curvature: f64,
    #[serde(rename = "S")]
    pub hull_area: f64,
    #[serde(rename = "L1")]
    pub hull_perimeter: f64,
    #[serde(rename = "T1")]
    pub hull_curvature: f64,
    pub margin: f64,
}

pub fn theorem_s_check(p: &SphPolyline) -> Result<SphVerdict> {
    let length = p.length();
    let rotation = sph_full_rotation(p)?;
    let hull = sph_hull(p)?;
    let curvature = rotation / length;
    let hull_curvature = (TAU - hull.area) / hull.perimeter;
    Ok(SphVerdict {
        length,
        rotation,
        curvature,
        hull_area: hull.area,
        hull_perimeter: hull.perimeter,
        hull_curvature,
        margin: curvature - hull_curvature,
    })
}
