//! Closed curves given by samples, and polylines inscribed in them.

use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};

use crate::error::{GeomError, Result};
use crate::planar::{full_rotation, length, ClosedPolyline2, Point2};

/// Fewest samples a curve may carry.
pub const MIN_SAMPLES: usize = 16;

/// Samples of a closed curve in parameter order; the closing segment from
/// the last sample back to the first is implied.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SampledCurve {
    points: Vec<Point2>,
}

impl SampledCurve {
    pub fn new(points: Vec<Point2>) -> Result<Self> {
        let n = points.len();
        if n < MIN_SAMPLES {
            return Err(GeomError::InvalidInput(format!(
                "a sampled curve needs at least {MIN_SAMPLES} samples, got {n}"
            )));
        }
        if (0..n).any(|i| points[i] == points[(i + 1) % n]) {
            return Err(GeomError::InvalidInput(
                "consecutive samples coincide".into(),
            ));
        }
        Ok(Self { points })
    }

    /// `n` samples of `f` at `θ = 2πk/n`.
    pub fn from_fn(n: usize, f: impl Fn(f64) -> Point2) -> Result<Self> {
        Self::new((0..n).map(|k| f(TAU * k as f64 / n as f64)).collect())
    }

    pub fn ellipse(a: f64, b: f64, n: usize) -> Result<Self> {
        Self::from_fn(n, |t| Point2::new(a * t.cos(), b * t.sin()))
    }

    pub fn circle(r: f64, n: usize) -> Result<Self> {
        Self::ellipse(r, r, n)
    }

    /// The limaçon `r = 1 + 2 cos θ`, which has an inner loop.
    pub fn limacon(n: usize) -> Result<Self> {
        Self::from_fn(n, |t| Point2::from_polar(1.0 + 2.0 * t.cos(), t))
    }

    pub fn points(&self) -> &[Point2] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// The polyline through every sample.
    pub fn polyline(&self) -> Result<ClosedPolyline2> {
        ClosedPolyline2::new(self.points.clone())
    }

    pub fn polygonal_length(&self) -> f64 {
        let n = self.len();
        (0..n)
            .map(|i| self.points[i].dist(self.points[(i + 1) % n]))
            .sum()
    }

    /// Full rotation of the polyline through every sample, the densest
    /// polyline inscribed in the curve at this sampling.
    pub fn v_estimate(&self) -> Result<f64> {
        full_rotation(&self.polyline()?)
    }

    /// The polyline through every `stride`-th sample, starting at sample 0.
    pub fn subsample(&self, stride: usize) -> Result<ClosedPolyline2> {
        if stride == 0 {
            return Err(GeomError::InvalidInput("stride must be positive".into()));
        }
        ClosedPolyline2::new(self.points.iter().step_by(stride).copied().collect())
    }
}

/// The coarsest polyline on every `2^j`-th sample whose length reaches
/// `ratio` times the polygonal length of `c`.
pub fn inscribe(c: &SampledCurve, ratio: f64) -> Result<ClosedPolyline2> {
    if !(ratio > 0.0 && ratio < 1.0) {
        return Err(GeomError::InvalidInput(format!(
            "length ratio must lie in (0, 1), got {ratio}"
        )));
    }
    let target = ratio * c.polygonal_length();
    let mut stride = (c.len() / 3).next_power_of_two();
    while stride >= 1 {
        if c.len().div_ceil(stride) >= 3 {
            let p = c.subsample(stride)?;
            if length(&p) >= target {
                return Ok(p);
            }
        }
        stride /= 2;
    }
    Err(GeomError::Precondition(format!(
        "length ratio {ratio} not reached; use denser samples"
    )))
}
