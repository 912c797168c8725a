use serde::{Deserialize, Serialize};

use super::point::{orient, Orientation, Point2};
use super::polyline::{bbox_diagonal, normalize, ClosedPolyline2};
use crate::error::{GeomError, Result};
use crate::tolerance;

/// Strictly convex polygon, vertices counterclockwise.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConvexPolygon2 {
    vertices: Vec<Point2>,
}

impl ConvexPolygon2 {
    /// Hull of an arbitrary point set.
    pub fn hull_of(points: &[Point2]) -> Result<Self> {
        if points.len() < 3 {
            return Err(GeomError::Degenerate("hull needs at least 3 points".into()));
        }
        let mut pts = points.to_vec();
        pts.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)));
        let eps = tolerance::current().point * bbox_diagonal(&pts);
        pts.dedup_by(|a, b| a.dist(*b) <= eps);

        let mut lower: Vec<Point2> = Vec::with_capacity(pts.len());
        for &p in &pts {
            while lower.len() >= 2
                && orient(lower[lower.len() - 2], lower[lower.len() - 1], p)
                    != Orientation::CounterClockwise
            {
                lower.pop();
            }
            lower.push(p);
        }
        let mut upper: Vec<Point2> = Vec::with_capacity(pts.len());
        for &p in pts.iter().rev() {
            while upper.len() >= 2
                && orient(upper[upper.len() - 2], upper[upper.len() - 1], p)
                    != Orientation::CounterClockwise
            {
                upper.pop();
            }
            upper.push(p);
        }
        lower.pop();
        upper.pop();
        lower.extend(upper);
        if lower.len() < 3 {
            return Err(GeomError::Degenerate("all points are collinear".into()));
        }
        Ok(Self { vertices: lower })
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn corner(&self, i: usize) -> Point2 {
        self.vertices[i % self.vertices.len()]
    }

    pub fn edges(&self) -> impl Iterator<Item = (Point2, Point2)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    pub fn perimeter(&self) -> f64 {
        self.edges().map(|(a, b)| a.dist(b)).sum()
    }

    pub fn scale(&self) -> f64 {
        bbox_diagonal(&self.vertices)
    }

    /// Absolute point tolerance for this polygon.
    pub fn eps(&self) -> f64 {
        tolerance::current().point * self.scale()
    }

    /// Smallest signed distance from `p` to the edge lines, positive inside.
    pub fn signed_depth(&self, p: Point2) -> f64 {
        self.edges()
            .map(|(a, b)| (b - a).cross(p - a) / a.dist(b))
            .fold(f64::INFINITY, f64::min)
    }

    /// Point in the closed polygon, with slack `eps`.
    pub fn contains(&self, p: Point2, eps: f64) -> bool {
        self.signed_depth(p) >= -eps
    }

    /// Point strictly inside, by more than the polygon tolerance.
    pub fn is_interior(&self, p: Point2) -> bool {
        self.signed_depth(p) > self.eps()
    }

    /// Index of the corner within tolerance of `p`.
    pub fn corner_index(&self, p: Point2) -> Option<usize> {
        let eps = self.eps();
        self.vertices.iter().position(|c| c.dist(p) <= eps)
    }

    /// Arc-length position of a boundary point, measured counterclockwise
    /// from corner 0. `None` when `p` is not on the boundary.
    pub fn locate(&self, p: Point2) -> Option<f64> {
        let eps = self.eps();
        let mut s = 0.0;
        let mut best: Option<(f64, f64)> = None;
        for (a, b) in self.edges() {
            let len = a.dist(b);
            let t = ((p - a).dot(b - a) / (len * len)).clamp(0.0, 1.0);
            let d = a.lerp(b, t).dist(p);
            if d <= eps && best.is_none_or(|(bd, _)| d < bd) {
                best = Some((d, s + t * len));
            }
            s += len;
        }
        best.map(|(_, pos)| if pos >= s { pos - s } else { pos })
    }

    /// Closest point of edge `e` (from corner `e` to corner `e + 1`), moved
    /// onto a corner when within tolerance of it.
    pub fn project_onto_edge(&self, p: Point2, e: usize) -> Point2 {
        let (a, b) = (self.corner(e), self.corner(e + 1));
        let t = ((p - a).dot(b - a) / (b - a).norm_sq()).clamp(0.0, 1.0);
        let q = a.lerp(b, t);
        let eps = self.eps();
        if q.dist(a) <= eps {
            a
        } else if q.dist(b) <= eps {
            b
        } else {
            q
        }
    }

    /// Closest boundary point to `p`.
    pub fn snap_to_boundary(&self, p: Point2) -> Point2 {
        (0..self.len())
            .map(|e| self.project_onto_edge(p, e))
            .min_by(|x, y| x.dist(p).total_cmp(&y.dist(p)))
            .expect("non-empty polygon")
    }

    /// Whether `p` and `q` lie on one common edge.
    pub fn share_edge(&self, p: Point2, q: Point2) -> bool {
        let eps = self.eps();
        (0..self.len()).any(|e| {
            self.project_onto_edge(p, e).dist(p) <= eps
                && self.project_onto_edge(q, e).dist(q) <= eps
        })
    }

    /// Whether every corner appears among `points`.
    pub fn corners_visited(&self, points: &[Point2]) -> bool {
        let eps = self.eps();
        self.vertices
            .iter()
            .all(|c| points.iter().any(|p| p.dist(*c) <= eps))
    }

    /// Arc-length position of corner `i`.
    pub fn corner_position(&self, i: usize) -> f64 {
        self.edges().take(i).map(|(a, b)| a.dist(b)).sum()
    }

    /// Corners met strictly between boundary positions `from` and `to`,
    /// walking counterclockwise when `ccw` and clockwise otherwise. When the
    /// two positions coincide the walk is a full loop.
    pub fn corners_between(&self, from: f64, to: f64, ccw: bool) -> Vec<Point2> {
        let n = self.len();
        let per = self.perimeter();
        let eps = self.eps();
        let pos: Vec<f64> = (0..n).map(|i| self.corner_position(i)).collect();
        let fwd = |x: f64| -> f64 {
            let d = if ccw { x - from } else { from - x };
            d.rem_euclid(per)
        };
        let mut span = fwd(to);
        if span <= eps || span >= per - eps {
            span = per;
        }
        let mut hits: Vec<(f64, Point2)> = (0..n)
            .filter_map(|i| {
                let d = fwd(pos[i]);
                (d > eps && d < span - eps).then_some((d, self.vertices[i]))
            })
            .collect();
        hits.sort_by(|a, b| a.0.total_cmp(&b.0));
        hits.into_iter().map(|(_, p)| p).collect()
    }

    /// Length of the boundary walk from `from` to `to` in the given sense.
    pub fn arc_length(&self, from: f64, to: f64, ccw: bool) -> f64 {
        let per = self.perimeter();
        let d = if ccw { to - from } else { from - to };
        d.rem_euclid(per)
    }

    /// The boundary traversed `k` times, counterclockwise or clockwise.
    pub fn circuit(&self, k: usize, ccw: bool) -> Result<ClosedPolyline2> {
        if k == 0 {
            return Err(GeomError::InvalidInput(
                "circuit multiplicity must be positive".into(),
            ));
        }
        let mut one = self.vertices.clone();
        if !ccw {
            one.reverse();
        }
        let mut v = Vec::with_capacity(one.len() * k);
        for _ in 0..k {
            v.extend_from_slice(&one);
        }
        ClosedPolyline2::new(v)
    }
}

pub fn convex_hull(p: &ClosedPolyline2) -> Result<ConvexPolygon2> {
    ConvexPolygon2::hull_of(p.vertices())
}

/// Multiplicity `k` when the normalized polyline is `k` consecutive
/// traversals of `h` (either direction, any starting corner).
pub fn is_multiple_circuit(p: &ClosedPolyline2, h: &ConvexPolygon2) -> Option<usize> {
    let p = normalize(p).ok()?;
    let v = p.vertices();
    let m = h.len();
    if v.len() % m != 0 {
        return None;
    }
    let eps = h.eps();
    let start = h.corner_index(v[0])?;
    let matches = |step: isize| {
        v.iter().enumerate().all(|(i, q)| {
            let j = (start as isize + step * i as isize).rem_euclid(m as isize) as usize;
            h.vertices[j].dist(*q) <= eps
        })
    };
    (matches(1) || matches(-1)).then_some(v.len() / m)
}
