use serde::{Deserialize, Serialize};

use crate::error::{GeomError, Result};

pub(crate) type Vec3 = [f64; 3];

pub(crate) fn dot(u: Vec3, v: Vec3) -> f64 {
    u[0] * v[0] + u[1] * v[1] + u[2] * v[2]
}

pub(crate) fn cross(u: Vec3, v: Vec3) -> Vec3 {
    [
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    ]
}

pub(crate) fn norm(u: Vec3) -> f64 {
    dot(u, u).sqrt()
}

pub(crate) fn add(u: Vec3, v: Vec3) -> Vec3 {
    [u[0] + v[0], u[1] + v[1], u[2] + v[2]]
}

pub(crate) fn scale(u: Vec3, s: f64) -> Vec3 {
    [u[0] * s, u[1] * s, u[2] * s]
}

/// `u / |u|`, or `None` for a zero or non-finite vector.
pub(crate) fn unit(u: Vec3) -> Option<Vec3> {
    let n = norm(u);
    (n.is_finite() && n > 0.0).then(|| scale(u, 1.0 / n))
}

/// A point of the unit sphere.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "[f64; 3]", into = "[f64; 3]")]
pub struct SphPoint {
    v: Vec3,
}

impl SphPoint {
    /// The direction of `(x, y, z)`; any non-zero finite vector is accepted.
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        unit([x, y, z])
            .map(|v| Self { v })
            .ok_or_else(|| GeomError::InvalidInput(format!("({x}, {y}, {z}) has no direction")))
    }

    /// A vector that must already be of unit length up to `tol`; it is then
    /// normalized exactly.
    pub fn from_unit(v: Vec3, tol: f64) -> Result<Self> {
        let n = norm(v);
        if !n.is_finite() || (n - 1.0).abs() > tol {
            return Err(GeomError::InvalidInput(format!(
                "{v:?} has norm {n}, expected 1 within {tol}"
            )));
        }
        Self::new(v[0], v[1], v[2])
    }

    /// Point at colatitude `theta` from the north pole and longitude `lon`.
    pub fn from_polar(theta: f64, lon: f64) -> Self {
        let (st, ct) = theta.sin_cos();
        let (sl, cl) = lon.sin_cos();
        Self {
            v: [st * cl, st * sl, ct],
        }
    }

    pub(crate) fn from_vec_unchecked(v: Vec3) -> Self {
        Self { v }
    }

    pub fn xyz(&self) -> Vec3 {
        self.v
    }

    pub fn antipode(&self) -> Self {
        Self {
            v: scale(self.v, -1.0),
        }
    }

    pub fn dot(&self, other: &SphPoint) -> f64 {
        dot(self.v, other.v)
    }
}

impl TryFrom<[f64; 3]> for SphPoint {
    type Error = GeomError;

    fn try_from(v: [f64; 3]) -> Result<Self> {
        Self::new(v[0], v[1], v[2])
    }
}

impl From<SphPoint> for [f64; 3] {
    fn from(p: SphPoint) -> Self {
        p.v
    }
}

/// Great-circle distance, in `[0, π]`.
pub fn sph_distance(u: &SphPoint, v: &SphPoint) -> f64 {
    norm(cross(u.v, v.v)).atan2(dot(u.v, v.v))
}

/// Angle at `v` between the geodesics towards `u` and `w`, in `[0, π]`.
pub fn sph_angle(u: &SphPoint, v: &SphPoint, w: &SphPoint) -> Result<f64> {
    // normals of the planes of the great circles vu and vw
    let n1 = cross(v.v, u.v);
    let n2 = cross(v.v, w.v);
    const TINY: f64 = 1e-12;
    if norm(n1) < TINY || norm(n2) < TINY {
        return Err(GeomError::Degenerate(
            "angle vertex coincides with or is antipodal to a neighbour".into(),
        ));
    }
    Ok(norm(cross(n1, n2)).atan2(dot(n1, n2)))
}

/// Sign of the triple product `det(u, v, w)`: positive when `w` lies to the
/// left of the geodesic from `u` to `v` seen from outside the sphere.
pub(crate) fn triple(u: &SphPoint, v: &SphPoint, w: &SphPoint) -> f64 {
    dot(cross(u.v, v.v), w.v)
}
