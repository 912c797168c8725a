use std::f64::consts::{PI, TAU};
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{GeomError, Result};
use crate::tolerance;

/// A point (or free vector) of the plane.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(from = "[f64; 2]", into = "[f64; 2]")]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn from_polar(radius: f64, angle: f64) -> Self {
        Self::new(radius * angle.cos(), radius * angle.sin())
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn dot(self, other: Self) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 3d cross product.
    pub fn cross(self, other: Self) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn norm_sq(self) -> f64 {
        self.dot(self)
    }

    pub fn dist(self, other: Self) -> f64 {
        (other - self).norm()
    }

    pub fn lerp(self, other: Self, t: f64) -> Self {
        self + (other - self) * t
    }
}

impl From<[f64; 2]> for Point2 {
    fn from([x, y]: [f64; 2]) -> Self {
        Self::new(x, y)
    }
}

impl From<Point2> for [f64; 2] {
    fn from(p: Point2) -> Self {
        [p.x, p.y]
    }
}

impl Add for Point2 {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point2 {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Point2 {
    type Output = Self;
    fn mul(self, rhs: f64) -> Self {
        Self::new(self.x * rhs, self.y * rhs)
    }
}

impl Neg for Point2 {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y)
    }
}

/// A unit direction on the circle, stored as its angle in `[0, 2π)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Direction {
    theta: f64,
}

impl Direction {
    pub fn new(theta: f64) -> Self {
        let mut t = theta.rem_euclid(TAU);
        // rem_euclid can round up to exactly 2π for tiny negative inputs
        if t >= TAU {
            t = 0.0;
        }
        Self { theta: t }
    }

    /// Direction of a non-zero vector.
    pub fn of(v: Point2) -> Option<Self> {
        (v.x != 0.0 || v.y != 0.0).then(|| Self::new(v.y.atan2(v.x)))
    }

    pub fn theta(self) -> f64 {
        self.theta
    }

    pub fn opposite(self) -> Self {
        Self::new(self.theta + PI)
    }

    pub fn rotated(self, by: f64) -> Self {
        Self::new(self.theta + by)
    }
}

/// Intrinsic distance between two directions on the unit circle.
pub fn rho(u: Direction, v: Direction) -> f64 {
    let d = (u.theta - v.theta).abs();
    d.min(TAU - d)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Clockwise,
    Collinear,
    CounterClockwise,
}

impl Orientation {
    pub fn sign(self) -> i8 {
        match self {
            Orientation::Clockwise => -1,
            Orientation::Collinear => 0,
            Orientation::CounterClockwise => 1,
        }
    }
}

/// Orientation of the triangle `pqr`. Twice the signed area is compared
/// against the area tolerance scaled by the squared span of the inputs.
pub fn orient(p: Point2, q: Point2, r: Point2) -> Orientation {
    let area2 = (q - p).cross(r - p);
    let span = (q - p)
        .norm_sq()
        .max((r - p).norm_sq())
        .max((r - q).norm_sq());
    if area2.abs() <= tolerance::current().area * span {
        Orientation::Collinear
    } else if area2 > 0.0 {
        Orientation::CounterClockwise
    } else {
        Orientation::Clockwise
    }
}

/// Exterior angle at `b` of the path `a -> b -> c`, in `[0, π]`.
pub fn turn_angle(a: Point2, b: Point2, c: Point2) -> Result<f64> {
    let incoming = Direction::of(b - a);
    let outgoing = Direction::of(c - b);
    match (incoming, outgoing) {
        (Some(u), Some(v)) => Ok(rho(u, v)),
        _ => Err(GeomError::Degenerate(format!(
            "turn angle needs distinct consecutive points, got {a:?} {b:?} {c:?}"
        ))),
    }
}

/// Interior angle at `b` between rays `b -> a` and `b -> c`, in `[0, π]`.
pub fn interior_angle(a: Point2, b: Point2, c: Point2) -> f64 {
    let u = a - b;
    let v = c - b;
    u.cross(v).abs().atan2(u.dot(v))
}
