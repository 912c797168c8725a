//! Seeded random instances. Every generator draws from a ChaCha8 stream so
//! that a `(seed, index)` pair names one instance on every platform.

use std::f64::consts::TAU;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{GeomError, Result};
use crate::inequality::{ConvexQuad2, Triangle2};
use crate::planar::{normalize, ClosedPolyline2, ConvexPolygon2, Point2};
use crate::spherical::{sph_hull_of, SphPoint, SphPolyline, SphQuad, SphTriangle};
use crate::tolerance::HEMISPHERE_MARGIN;

/// Name of the generator, recorded in fuzz reports.
pub const RNG_NAME: &str = "ChaCha8";

/// Redraws allowed before a generator gives up.
const MAX_TRIES: usize = 10_000;

/// Smallest angle accepted in random spherical triangles and quadrilaterals.
const MIN_ANGLE: f64 = 1e-3;

/// The generator for instance `index` of the campaign seeded with `seed`.
pub fn instance_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Where random planar points are drawn from.
#[derive(Clone, Debug, PartialEq)]
pub enum Region {
    Disk { center: Point2, radius: f64 },
    Polygon(ConvexPolygon2),
}

impl Region {
    pub fn unit_disk() -> Self {
        Region::Disk {
            center: Point2::new(0.0, 0.0),
            radius: 1.0,
        }
    }

    pub fn contains(&self, p: Point2) -> bool {
        match self {
            Region::Disk { center, radius } => p.dist(*center) <= *radius,
            Region::Polygon(h) => h.contains(p, 0.0),
        }
    }

    /// A uniform point of the region.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Point2 {
        match self {
            Region::Disk { center, radius } => {
                let r = radius * rng.gen::<f64>().sqrt();
                *center + Point2::from_polar(r, rng.gen_range(0.0..TAU))
            }
            Region::Polygon(h) => {
                let v = h.vertices();
                let (lo, hi) = v.iter().fold((v[0], v[0]), |(lo, hi), p| {
                    (
                        Point2::new(lo.x.min(p.x), lo.y.min(p.y)),
                        Point2::new(hi.x.max(p.x), hi.y.max(p.y)),
                    )
                });
                loop {
                    let p = Point2::new(rng.gen_range(lo.x..=hi.x), rng.gen_range(lo.y..=hi.y));
                    if h.contains(p, 0.0) {
                        return p;
                    }
                }
            }
        }
    }
}

impl From<ConvexPolygon2> for Region {
    fn from(h: ConvexPolygon2) -> Self {
        Region::Polygon(h)
    }
}

fn exhausted(what: &str) -> GeomError {
    GeomError::Precondition(format!("no valid {what} after {MAX_TRIES} draws"))
}

/// `n` uniform vertices in `region`, redrawn until the normalized polyline
/// still has `n` vertices.
pub fn random_polyline_with<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    region: &Region,
) -> Result<ClosedPolyline2> {
    if n < 3 {
        return Err(GeomError::InvalidInput(format!("need n >= 3, got {n}")));
    }
    for _ in 0..MAX_TRIES {
        let v: Vec<Point2> = (0..n).map(|_| region.sample(rng)).collect();
        let p = ClosedPolyline2::new(v)?;
        if normalize(&p).is_ok_and(|q| q.len() == n) {
            return Ok(p);
        }
    }
    Err(exhausted("polyline"))
}

pub fn random_polyline(seed: u64, n: usize, region: &Region) -> Result<ClosedPolyline2> {
    random_polyline_with(&mut instance_rng(seed, 0), n, region)
}

/// A non-degenerate triangle with vertices in `region`.
pub fn random_triangle_with<R: Rng + ?Sized>(rng: &mut R, region: &Region) -> Result<Triangle2> {
    for _ in 0..MAX_TRIES {
        let [a, b, c] = [0; 3].map(|_| region.sample(rng));
        if let Ok(t) = Triangle2::new(a, b, c) {
            if !t.is_degenerate() {
                return Ok(t);
            }
        }
    }
    Err(exhausted("triangle"))
}

/// A strictly convex quadrilateral: four points in `region` whose hull has
/// four corners.
pub fn random_quad_with<R: Rng + ?Sized>(rng: &mut R, region: &Region) -> Result<ConvexQuad2> {
    for _ in 0..MAX_TRIES {
        let pts: Vec<Point2> = (0..4).map(|_| region.sample(rng)).collect();
        let Ok(h) = ConvexPolygon2::hull_of(&pts) else {
            continue;
        };
        if h.len() != 4 {
            continue;
        }
        let v = h.vertices();
        if let Ok(q) = ConvexQuad2::new(v[0], v[1], v[2], v[3]) {
            if !q.is_degenerate() {
                return Ok(q);
            }
        }
    }
    Err(exhausted("quadrilateral"))
}

/// A uniform point of the cap of angular radius `cap` about the north pole.
pub fn sample_cap<R: Rng + ?Sized>(rng: &mut R, cap: f64) -> SphPoint {
    let z = rng.gen_range(cap.cos()..=1.0);
    SphPoint::from_polar(z.clamp(-1.0, 1.0).acos(), rng.gen_range(0.0..TAU))
}

fn check_cap(cap: f64) -> Result<()> {
    let limit = std::f64::consts::FRAC_PI_2 - HEMISPHERE_MARGIN;
    if cap > 0.0 && cap < limit {
        Ok(())
    } else {
        Err(GeomError::InvalidInput(format!(
            "cap radius must lie in (0, {limit}), got {cap}"
        )))
    }
}

/// A spherical triangle with vertices in the cap and all angles at least
/// `1e-3`.
pub fn random_sph_triangle_with<R: Rng + ?Sized>(rng: &mut R, cap: f64) -> Result<SphTriangle> {
    check_cap(cap)?;
    for _ in 0..MAX_TRIES {
        let [a, b, c] = [0; 3].map(|_| sample_cap(rng, cap));
        if let Ok(t) = SphTriangle::from_points(&a, &b, &c) {
            if t.alpha.min(t.beta).min(t.gamma) >= MIN_ANGLE {
                return Ok(t);
            }
        }
    }
    Err(exhausted("spherical triangle"))
}

pub fn random_sph_triangle(seed: u64, cap: f64) -> Result<SphTriangle> {
    random_sph_triangle_with(&mut instance_rng(seed, 0), cap)
}

/// A convex spherical quadrilateral with vertices in the cap, taken as the
/// hull of four random points, with every sub-triangle angle at least `1e-3`.
pub fn random_sph_quad_with<R: Rng + ?Sized>(rng: &mut R, cap: f64) -> Result<SphQuad> {
    check_cap(cap)?;
    for _ in 0..MAX_TRIES {
        let pts: Vec<SphPoint> = (0..4).map(|_| sample_cap(rng, cap)).collect();
        let Ok(h) = sph_hull_of(&pts) else { continue };
        if h.vertices.len() != 4 {
            continue;
        }
        let v = &h.vertices;
        let Ok(q) = SphQuad::new(v[0], v[1], v[2], v[3]) else {
            continue;
        };
        let fat = (0..4).all(|i| {
            SphTriangle::from_points(&v[(i + 3) % 4], &v[i], &v[(i + 1) % 4])
                .is_ok_and(|t| t.alpha.min(t.beta).min(t.gamma) >= MIN_ANGLE)
        });
        if fat && q.phi >= MIN_ANGLE && q.phi <= std::f64::consts::PI - MIN_ANGLE {
            return Ok(q);
        }
    }
    Err(exhausted("spherical quadrilateral"))
}

pub fn random_sph_quad(seed: u64, cap: f64) -> Result<SphQuad> {
    random_sph_quad_with(&mut instance_rng(seed, 0), cap)
}

/// `n` uniform vertices in the cap, redrawn until they form a valid
/// spherical polyline whose hull is non-degenerate.
pub fn random_sph_polyline_with<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    cap: f64,
) -> Result<SphPolyline> {
    check_cap(cap)?;
    if n < 3 {
        return Err(GeomError::InvalidInput(format!("need n >= 3, got {n}")));
    }
    for _ in 0..MAX_TRIES {
        let v: Vec<SphPoint> = (0..n).map(|_| sample_cap(rng, cap)).collect();
        if let Ok(p) = SphPolyline::new(v) {
            if sph_hull_of(p.vertices()).is_ok() {
                return Ok(p);
            }
        }
    }
    Err(exhausted("spherical polyline"))
}
