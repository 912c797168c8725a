//! Spherical triangles given by their sides, and the comparison with the
//! planar triangle of the same sides.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use serde::{Deserialize, Serialize};

use super::point::{sph_distance, SphPoint};
use crate::error::{GeomError, Result};
use crate::inequality::InequalityMargin;

/// Slack on side-length constraints (triangle and perimeter inequalities).
const SIDE_TOL: f64 = 1e-12;

/// `S = (a+b+c)/4` and `X = S − a/2`, `Y = S − b/2`, `Z = S − c/2`.
#[derive(Clone, Copy, Debug, PartialEq)]
struct Quarters {
    s: f64,
    x: f64,
    y: f64,
    z: f64,
}

fn quarters(a: f64, b: f64, c: f64) -> Result<Quarters> {
    if ![a, b, c]
        .iter()
        .all(|t| t.is_finite() && *t >= 0.0 && *t <= PI)
    {
        return Err(GeomError::InvalidInput(format!(
            "sides ({a}, {b}, {c}) must lie in [0, π]"
        )));
    }
    let s = (a + b + c) / 4.0;
    let q = Quarters {
        s,
        x: s - a / 2.0,
        y: s - b / 2.0,
        z: s - c / 2.0,
    };
    if q.x.min(q.y).min(q.z) < -SIDE_TOL {
        return Err(GeomError::InvalidInput(format!(
            "sides ({a}, {b}, {c}) violate the triangle inequality"
        )));
    }
    if s > FRAC_PI_2 + SIDE_TOL {
        return Err(GeomError::InvalidInput(format!(
            "perimeter {} exceeds 2π",
            a + b + c
        )));
    }
    Ok(q)
}

fn strict_quarters(a: f64, b: f64, c: f64) -> Result<Quarters> {
    let q = quarters(a, b, c)?;
    if q.x.min(q.y).min(q.z) <= 0.0 || q.s >= FRAC_PI_2 {
        return Err(GeomError::Degenerate(format!(
            "triangle with sides ({a}, {b}, {c}) is degenerate"
        )));
    }
    Ok(q)
}

/// Spherical excess (area) of the triangle with sides `a, b, c`, by
/// L'Huilier's formula `tan(E/4) = √(tan S · tan X · tan Y · tan Z)`.
pub fn sph_triangle_excess(a: f64, b: f64, c: f64) -> Result<f64> {
    let q = quarters(a, b, c)?;
    let t = |u: f64| u.max(0.0).tan();
    let prod = t(q.s) * t(q.x) * t(q.y) * t(q.z);
    Ok(4.0 * prod.max(0.0).sqrt().atan())
}

/// Angle opposite side `a`, by `tan(α/2) = √(sin 2Y sin 2Z / (sin 2X sin 2S))`.
pub fn sph_half_angle(a: f64, b: f64, c: f64) -> Result<f64> {
    let q = strict_quarters(a, b, c)?;
    let r = ((2.0 * q.y).sin() * (2.0 * q.z).sin()) / ((2.0 * q.x).sin() * (2.0 * q.s).sin());
    Ok(2.0 * r.sqrt().atan())
}

/// Angles of the planar triangle with sides `a, b, c`, opposite to them in
/// order, by `tan(α'/2) = √(YZ / (X (X+Y+Z)))`.
pub fn planar_angles(a: f64, b: f64, c: f64) -> Result<(f64, f64, f64)> {
    let q = strict_quarters(a, b, c)?;
    let half = |x: f64, y: f64, z: f64| 2.0 * ((y * z) / (x * (x + y + z))).sqrt().atan();
    Ok((
        half(q.x, q.y, q.z),
        half(q.y, q.z, q.x),
        half(q.z, q.x, q.y),
    ))
}

/// A non-degenerate spherical triangle `ABC` with `BC = a`, `CA = b`,
/// `AB = c`, its angles, excess, and the angles of the planar triangle with
/// the same sides.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SphTriangle {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub excess: f64,
    pub alpha_planar: f64,
    pub beta_planar: f64,
    pub gamma_planar: f64,
}

impl SphTriangle {
    pub fn from_sides(a: f64, b: f64, c: f64) -> Result<Self> {
        let (alpha_planar, beta_planar, gamma_planar) = planar_angles(a, b, c)?;
        Ok(Self {
            a,
            b,
            c,
            alpha: sph_half_angle(a, b, c)?,
            beta: sph_half_angle(b, c, a)?,
            gamma: sph_half_angle(c, a, b)?,
            excess: sph_triangle_excess(a, b, c)?,
            alpha_planar,
            beta_planar,
            gamma_planar,
        })
    }

    pub fn from_points(a: &SphPoint, b: &SphPoint, c: &SphPoint) -> Result<Self> {
        Self::from_sides(sph_distance(b, c), sph_distance(c, a), sph_distance(a, b))
    }
}

/// `α − α' < (β − β') + (γ − γ')`.
pub fn lemma1s_margin(a: f64, b: f64, c: f64) -> Result<InequalityMargin> {
    let t = SphTriangle::from_sides(a, b, c)?;
    Ok(InequalityMargin::new(
        t.alpha - t.alpha_planar,
        (t.beta - t.beta_planar) + (t.gamma - t.gamma_planar),
        true,
    ))
}

/// `(a + c) / (2π − β) < (a + b + c) / (2π − E)`, with `β` the angle
/// between sides `a` and `c`.
pub fn lemma2s_margin(a: f64, b: f64, c: f64) -> Result<InequalityMargin> {
    let t = SphTriangle::from_sides(a, b, c)?;
    Ok(InequalityMargin::new(
        (a + c) / (TAU - t.beta),
        (a + b + c) / (TAU - t.excess),
        true,
    ))
}

/// `f(x) = x cot x` on `[0, π/2)`, with `f(0) = 1`.
pub fn f_xcotx(x: f64) -> Result<f64> {
    if !(0.0..FRAC_PI_2).contains(&x) {
        return Err(GeomError::Domain(format!(
            "x cot x needs x in [0, π/2), got {x}"
        )));
    }
    Ok(if x == 0.0 { 1.0 } else { x / x.tan() })
}

/// `f(X) f(X+Y+Z) < f(Y) f(Z)` for positive `X, Y, Z` with `X+Y+Z < π/2`.
pub fn probe_fxyz(x: f64, y: f64, z: f64) -> Result<InequalityMargin> {
    if x <= 0.0 || y <= 0.0 || z <= 0.0 {
        return Err(GeomError::Domain("arguments must be positive".into()));
    }
    Ok(InequalityMargin::new(
        f_xcotx(x)? * f_xcotx(x + y + z)?,
        f_xcotx(y)? * f_xcotx(z)?,
        true,
    ))
}

/// `f(Y+Z) < f(Y) f(Z)` for positive `Y, Z` with `Y+Z < π/2`.
pub fn probe_fyz(y: f64, z: f64) -> Result<InequalityMargin> {
    if y <= 0.0 || z <= 0.0 {
        return Err(GeomError::Domain("arguments must be positive".into()));
    }
    Ok(InequalityMargin::new(
        f_xcotx(y + z)?,
        f_xcotx(y)? * f_xcotx(z)?,
        true,
    ))
}

/// `cos t < (sin t / t)²` for `t` in `(0, π)`.
pub fn probe_cos_sinc(t: f64) -> Result<InequalityMargin> {
    if !(t > 0.0 && t < PI) {
        return Err(GeomError::Domain(format!("t must lie in (0, π), got {t}")));
    }
    Ok(InequalityMargin::new(t.cos(), (t.sin() / t).powi(2), true))
}
