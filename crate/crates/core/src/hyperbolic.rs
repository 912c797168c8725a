//! Hyperboloid model of the hyperbolic plane and a family of closed
//! polylines for which the planar mean-curvature inequality fails.

use std::f64::consts::{FRAC_PI_3, PI};

use serde::{Deserialize, Serialize};

use crate::error::{GeomError, Result};

/// Largest admissible distance scale for [`counterexample`]; beyond it the
/// hyperboloid coordinates lose too many digits.
pub const MAX_SCALE: f64 = 10.0;

/// A point `(x0, x1, x2)` of the upper sheet `x0² − x1² − x2² = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "[f64; 3]", into = "[f64; 3]")]
pub struct HypPoint {
    x: [f64; 3],
}

/// Minkowski product `−u0 v0 + u1 v1 + u2 v2`.
fn minkowski(u: [f64; 3], v: [f64; 3]) -> f64 {
    -u[0] * v[0] + u[1] * v[1] + u[2] * v[2]
}

impl HypPoint {
    pub fn new(x0: f64, x1: f64, x2: f64) -> Result<Self> {
        let x = [x0, x1, x2];
        let q = -minkowski(x, x);
        if !x.iter().all(|c| c.is_finite()) || x0 <= 0.0 || (q - 1.0).abs() > 1e-10 * x0 * x0 {
            return Err(GeomError::InvalidInput(format!(
                "{x:?} is not on the upper hyperboloid sheet"
            )));
        }
        Ok(Self { x })
    }

    /// The point at distance `r` from the origin `(1, 0, 0)` in direction `theta`.
    pub fn from_polar(r: f64, theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        let sh = r.sinh();
        Self {
            x: [r.cosh(), sh * c, sh * s],
        }
    }

    pub fn origin() -> Self {
        Self { x: [1.0, 0.0, 0.0] }
    }

    pub fn coords(&self) -> [f64; 3] {
        self.x
    }

    /// `x0² − x1² − x2² − 1`.
    pub fn norm_defect(&self) -> f64 {
        -minkowski(self.x, self.x) - 1.0
    }
}

impl TryFrom<[f64; 3]> for HypPoint {
    type Error = GeomError;

    fn try_from(x: [f64; 3]) -> Result<Self> {
        Self::new(x[0], x[1], x[2])
    }
}

impl From<HypPoint> for [f64; 3] {
    fn from(p: HypPoint) -> Self {
        p.x
    }
}

/// `arcosh(−⟨u, v⟩)`, evaluated as `2 asinh(|u − v| / 2)` for accuracy at
/// short range.
pub fn hyp_distance(u: &HypPoint, v: &HypPoint) -> f64 {
    let w = [u.x[0] - v.x[0], u.x[1] - v.x[1], u.x[2] - v.x[2]];
    2.0 * (minkowski(w, w).max(0.0).sqrt() / 2.0).asinh()
}

/// Angle at `v` between the geodesics towards `u` and `w`, in `[0, π]`.
pub fn hyp_angle(u: &HypPoint, v: &HypPoint, w: &HypPoint) -> Result<f64> {
    const TINY: f64 = 1e-12;
    if hyp_distance(u, v) < TINY || hyp_distance(w, v) < TINY {
        return Err(GeomError::Degenerate(
            "angle vertex coincides with a neighbour".into(),
        ));
    }
    // tangent vectors at v: t = p + ⟨p, v⟩ v
    let tangent = |p: &HypPoint| {
        let k = minkowski(p.x, v.x);
        [
            p.x[0] + k * v.x[0],
            p.x[1] + k * v.x[1],
            p.x[2] + k * v.x[2],
        ]
    };
    let (t1, t2) = (tangent(u), tangent(w));
    let cos = minkowski(t1, t2);
    // |t1 ∧ t2| equals the Euclidean determinant det(t1, t2, v)
    let sin = (t1[0] * (t2[1] * v.x[2] - t2[2] * v.x[1])
        - t1[1] * (t2[0] * v.x[2] - t2[2] * v.x[0])
        + t1[2] * (t2[0] * v.x[1] - t2[1] * v.x[0]))
        .abs();
    Ok(sin.atan2(cos))
}

/// A closed hyperbolic polyline with distinct consecutive vertices.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HypPolyline {
    vertices: Vec<HypPoint>,
}

impl HypPolyline {
    pub fn new(vertices: Vec<HypPoint>) -> Result<Self> {
        let n = vertices.len();
        if n < 3 {
            return Err(GeomError::InvalidInput(format!(
                "a closed polyline needs at least 3 vertices, got {n}"
            )));
        }
        if (0..n).any(|i| hyp_distance(&vertices[i], &vertices[(i + 1) % n]) < 1e-12) {
            return Err(GeomError::Degenerate(
                "consecutive vertices coincide".into(),
            ));
        }
        Ok(Self { vertices })
    }

    pub fn vertices(&self) -> &[HypPoint] {
        &self.vertices
    }

    pub fn length(&self) -> f64 {
        let v = &self.vertices;
        let n = v.len();
        (0..n).map(|i| hyp_distance(&v[i], &v[(i + 1) % n])).sum()
    }
}

/// `V = Σ (π − ∠A_{i-1} A_i A_{i+1})`; a return point contributes `π`.
pub fn hyp_full_rotation(p: &HypPolyline) -> Result<f64> {
    let v = p.vertices();
    let n = v.len();
    (0..n)
        .map(|i| Ok(PI - hyp_angle(&v[(i + n - 1) % n], &v[i], &v[(i + 1) % n])?))
        .sum()
}

/// `T = V / L`.
pub fn hyp_mean_curvature(p: &HypPolyline) -> Result<f64> {
    Ok(hyp_full_rotation(p)? / p.length())
}

/// Mean curvatures of `Γ = A B C C1 B1 B C` and of its hull boundary
/// `Γ1 = A B C`, with `margin = T_gamma − T_gamma1`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub t: f64,
    #[serde(rename = "T_gamma")]
    pub t_gamma: f64,
    #[serde(rename = "T_gamma1")]
    pub t_gamma1: f64,
    pub margin: f64,
    pub ratio_v: f64,
    pub ratio_l: f64,
}

/// The isosceles triangle `ABC` with apex `A` at the origin, legs of length
/// `t` and apex angle `π/3`, and `B1`, `C1` the midpoints of `AB`, `AC`.
/// `Γ` runs around the triangle, then back and forth across the trapezoid
/// `B C C1 B1`; it has the same hull as `Γ1 = ABC` and roughly twice its
/// length. For large `t` its mean curvature drops below that of `Γ1`.
pub fn counterexample(t: f64) -> Result<Counterexample> {
    if !(t > 0.0 && t <= MAX_SCALE) {
        return Err(GeomError::InvalidInput(format!(
            "scale t must lie in (0, {MAX_SCALE}], got {t}"
        )));
    }
    let a = HypPoint::origin();
    let b = HypPoint::from_polar(t, 0.0);
    let c = HypPoint::from_polar(t, FRAC_PI_3);
    let b1 = HypPoint::from_polar(t / 2.0, 0.0);
    let c1 = HypPoint::from_polar(t / 2.0, FRAC_PI_3);
    let gamma = HypPolyline::new(vec![a, b, c, c1, b1, b, c])?;
    let gamma1 = HypPolyline::new(vec![a, b, c])?;
    let (v, l) = (hyp_full_rotation(&gamma)?, gamma.length());
    let (v1, l1) = (hyp_full_rotation(&gamma1)?, gamma1.length());
    Ok(Counterexample {
        t,
        t_gamma: v / l,
        t_gamma1: v1 / l1,
        margin: v / l - v1 / l1,
        ratio_v: v / v1,
        ratio_l: l / l1,
    })
}
