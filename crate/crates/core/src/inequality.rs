//! Closed-form planar inequalities, evaluated as signed margins.

use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

use crate::error::{GeomError, Result};
use crate::planar::{
    convex_hull, interior_angle, is_multiple_circuit, normalize, orient, rho, ClosedPolyline2,
    Direction, Orientation, Point2, PolylineMetrics,
};
use crate::tolerance;

/// Both sides of an inequality `lhs < rhs` (or `<=` when not strict) and
/// their difference.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct InequalityMargin {
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub strict: bool,
}

impl InequalityMargin {
    pub fn new(lhs: f64, rhs: f64, strict: bool) -> Self {
        Self {
            lhs,
            rhs,
            margin: rhs - lhs,
            strict,
        }
    }

    /// Whether the inequality holds, allowing `slack` below zero.
    pub fn holds(&self, slack: f64) -> bool {
        if self.strict {
            self.margin > -slack
        } else {
            self.margin >= -slack
        }
    }
}

/// Lower bound on the rotation of an arc whose end tangents are `dir_a` and
/// `dir_b` and whose chord points along `chord`.
pub fn lemma1_bound(dir_a: Direction, dir_b: Direction, chord: Direction) -> f64 {
    rho(dir_a, chord) + rho(dir_b, chord)
}

/// A triangle `ABC`. Collinear triangles are accepted and marked degenerate.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Triangle2 {
    pub a: Point2,
    pub b: Point2,
    pub c: Point2,
    degenerate: bool,
}

impl Triangle2 {
    pub fn new(a: Point2, b: Point2, c: Point2) -> Result<Self> {
        if a == b || b == c || c == a {
            return Err(GeomError::Degenerate(
                "triangle with coincident vertices".into(),
            ));
        }
        if ![a, b, c].iter().all(|p| p.is_finite()) {
            return Err(GeomError::InvalidInput("non-finite triangle vertex".into()));
        }
        let degenerate = orient(a, b, c) == Orientation::Collinear;
        Ok(Self {
            a,
            b,
            c,
            degenerate,
        })
    }

    pub fn ab(&self) -> f64 {
        self.a.dist(self.b)
    }

    pub fn bc(&self) -> f64 {
        self.b.dist(self.c)
    }

    pub fn ca(&self) -> f64 {
        self.c.dist(self.a)
    }

    /// Angle at `B`.
    pub fn beta(&self) -> f64 {
        interior_angle(self.a, self.b, self.c)
    }

    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }
}

/// `(AB + BC) / (2π − β)` against `(AB + BC + CA) / 2π`.
pub fn lemma4_margin(t: &Triangle2) -> InequalityMargin {
    let legs = t.ab() + t.bc();
    InequalityMargin::new(
        legs / (TAU - t.beta()),
        (legs + t.ca()) / TAU,
        !t.is_degenerate(),
    )
}

/// A convex quadrilateral `ABCD`, stored counterclockwise, with the
/// intersection `O` of its diagonals and the angle `φ = ∠AOB`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConvexQuad2 {
    pub a: Point2,
    pub b: Point2,
    pub c: Point2,
    pub d: Point2,
    pub o: Point2,
    pub phi: f64,
    degenerate: bool,
}

impl ConvexQuad2 {
    /// Accepts either orientation; a clockwise input `ABCD` is stored as
    /// `ADCB`. A vertex lying on the segment joining its neighbours is
    /// allowed and marks the quadrilateral degenerate.
    pub fn new(a: Point2, b: Point2, c: Point2, d: Point2) -> Result<Self> {
        let pts = [a, b, c, d];
        if !pts.iter().all(|p| p.is_finite()) {
            return Err(GeomError::InvalidInput(
                "non-finite quadrilateral vertex".into(),
            ));
        }
        let signs: Vec<i8> = (0..4)
            .map(|i| orient(pts[(i + 3) % 4], pts[i], pts[(i + 1) % 4]).sign())
            .collect();
        let ccw = if signs.iter().all(|&s| s >= 0) && signs.contains(&1) {
            true
        } else if signs.iter().all(|&s| s <= 0) && signs.contains(&-1) {
            false
        } else {
            return Err(GeomError::InvalidInput(
                "vertices are not in convex position".into(),
            ));
        };
        let degenerate = signs.contains(&0);
        let (a, b, c, d) = if ccw { (a, b, c, d) } else { (a, d, c, b) };

        let o = diagonal_intersection(a, c, b, d, degenerate).ok_or_else(|| {
            GeomError::InvalidInput("diagonals do not cross inside the quadrilateral".into())
        })?;
        let eps = tolerance::current().point * crate::planar::bbox_diagonal(&pts);
        if o.dist(a) <= eps || o.dist(b) <= eps {
            return Err(GeomError::Degenerate(
                "diagonal intersection coincides with a vertex".into(),
            ));
        }
        let phi = interior_angle(a, o, b);
        Ok(Self {
            a,
            b,
            c,
            d,
            o,
            phi,
            degenerate,
        })
    }

    pub fn perimeter(&self) -> f64 {
        self.a.dist(self.b) + self.b.dist(self.c) + self.c.dist(self.d) + self.d.dist(self.a)
    }

    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }
}

/// Intersection of segments `PQ` and `RS`, required strictly inside both
/// unless `closed`.
fn diagonal_intersection(
    p: Point2,
    q: Point2,
    r: Point2,
    s: Point2,
    closed: bool,
) -> Option<Point2> {
    let u = q - p;
    let v = s - r;
    let den = u.cross(v);
    if den == 0.0 {
        return None;
    }
    let t = (r - p).cross(v) / den;
    let w = (r - p).cross(u) / den;
    let inside = |x: f64| {
        if closed {
            (0.0..=1.0).contains(&x)
        } else {
            x > 0.0 && x < 1.0
        }
    };
    (inside(t) && inside(w)).then(|| p + u * t)
}

/// `(AB + BD + DC + CA) / 2(π + φ)` against the perimeter over `2π`.
pub fn lemma5_margin(q: &ConvexQuad2) -> InequalityMargin {
    let path = q.a.dist(q.b) + q.b.dist(q.d) + q.d.dist(q.c) + q.c.dist(q.a);
    InequalityMargin::new(
        path / (2.0 * (PI + q.phi)),
        q.perimeter() / TAU,
        !q.is_degenerate(),
    )
}

/// Mean absolute curvature of a closed polyline against that of its hull
/// boundary, together with the circuit multiplicity when the polyline is a
/// multiple circuit of the hull.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DnaVerdict {
    #[serde(flatten)]
    pub metrics: PolylineMetrics,
    #[serde(rename = "T1")]
    pub hull_curvature: f64,
    pub margin: f64,
    pub k: Option<usize>,
}

pub fn dna_check(p: &ClosedPolyline2) -> Result<DnaVerdict> {
    let p = normalize(p)?;
    let metrics = PolylineMetrics::of(&p)?;
    let hull = convex_hull(&p)?;
    let hull_curvature = TAU / metrics.hull_perimeter;
    Ok(DnaVerdict {
        metrics,
        hull_curvature,
        margin: metrics.curvature - hull_curvature,
        k: is_multiple_circuit(&p, &hull),
    })
}
