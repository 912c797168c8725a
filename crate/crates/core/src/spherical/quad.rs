use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};

use super::hull::hemisphere_witness;
use super::point::{cross, dot, sph_angle, sph_distance, triple, unit, SphPoint};
use super::trig::sph_triangle_excess;
use crate::error::{GeomError, Result};
use crate::inequality::InequalityMargin;

/// A convex spherical quadrilateral `ABCD` in an open hemisphere, stored
/// counterclockwise, with `AB = a`, `BC = b`, `CD = c`, `DA = d`, diagonals
/// `BD = m` and `AC = n` meeting at `O`, `φ = ∠AOB`, and the areas
/// `E1..E4` of `OAB`, `OBC`, `OCD`, `ODA`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SphQuad {
    pub vertices: [SphPoint; 4],
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub m: f64,
    pub n: f64,
    pub o: SphPoint,
    pub phi: f64,
    pub areas: [f64; 4],
    pub excess: f64,
}

impl SphQuad {
    /// Accepts either orientation; clockwise input `ABCD` is stored as `ADCB`.
    pub fn new(a: SphPoint, b: SphPoint, c: SphPoint, d: SphPoint) -> Result<Self> {
        let pts = [a, b, c, d];
        hemisphere_witness(&pts)?;
        let signs: Vec<f64> = (0..4)
            .map(|i| triple(&pts[(i + 3) % 4], &pts[i], &pts[(i + 1) % 4]))
            .collect();
        let ccw = if signs.iter().all(|&s| s > 0.0) {
            true
        } else if signs.iter().all(|&s| s < 0.0) {
            false
        } else {
            return Err(GeomError::InvalidInput(
                "vertices are not in strictly convex position".into(),
            ));
        };
        let [a, b, c, d] = if ccw { pts } else { [a, d, c, b] };

        // the diagonals' great circles meet in two antipodal points
        let o = unit(cross(cross(a.xyz(), c.xyz()), cross(b.xyz(), d.xyz())))
            .ok_or_else(|| GeomError::Degenerate("diagonals lie on one great circle".into()))?;
        let mut o = SphPoint::from_vec_unchecked(o);
        if dot(o.xyz(), a.xyz()) + dot(o.xyz(), c.xyz()) < 0.0 {
            o = o.antipode();
        }
        let n = sph_distance(&a, &c);
        let m = sph_distance(&b, &d);
        let (ao, oc) = (sph_distance(&a, &o), sph_distance(&o, &c));
        let (bo, od) = (sph_distance(&b, &o), sph_distance(&o, &d));
        let tol = 1e-9 * (m + n);
        if (ao + oc - n).abs() > tol || (bo + od - m).abs() > tol {
            return Err(GeomError::InvalidInput(
                "diagonals do not cross inside the quadrilateral".into(),
            ));
        }
        let (sa, sb, sc, sd) = (
            sph_distance(&a, &b),
            sph_distance(&b, &c),
            sph_distance(&c, &d),
            sph_distance(&d, &a),
        );
        let areas = [
            sph_triangle_excess(sa, bo, ao)?,
            sph_triangle_excess(sb, oc, bo)?,
            sph_triangle_excess(sc, od, oc)?,
            sph_triangle_excess(sd, ao, od)?,
        ];
        Ok(Self {
            vertices: [a, b, c, d],
            a: sa,
            b: sb,
            c: sc,
            d: sd,
            m,
            n,
            o,
            phi: sph_angle(&a, &o, &b)?,
            areas,
            excess: areas.iter().sum(),
        })
    }

    pub fn perimeter(&self) -> f64 {
        self.a + self.b + self.c + self.d
    }

    /// `x = (a+c)/(m+n)`.
    pub fn x(&self) -> f64 {
        (self.a + self.c) / (self.m + self.n)
    }

    /// `y = (b+d)/(m+n)`.
    pub fn y(&self) -> f64 {
        (self.b + self.d) / (self.m + self.n)
    }

    /// `z = (a+c+m+n)/(a+b+c+d)`, equal to `(x+1)/(x+y)`.
    pub fn z(&self) -> f64 {
        (self.a + self.c + self.m + self.n) / self.perimeter()
    }
}

/// `(a+c+m+n) / (2π − (E1+E3) + 2φ) < (a+b+c+d) / (2π − E)`.
pub fn lemma3s_margin(q: &SphQuad) -> InequalityMargin {
    InequalityMargin::new(
        (q.a + q.c + q.m + q.n) / (TAU - (q.areas[0] + q.areas[2]) + 2.0 * q.phi),
        q.perimeter() / (TAU - q.excess),
        true,
    )
}
