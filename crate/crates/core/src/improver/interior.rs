//! Moves that take a vertex strictly inside the hull to the boundary or
//! delete it.

use super::{Move, MoveKind};
use crate::error::{GeomError, Result};
use crate::planar::{
    convex_hull, interior_angle, normalize, orient, ClosedPolyline2, ConvexPolygon2, Point2,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum InteriorCase {
    /// Slide `A_i` forward along `A_{i-1} A_i`.
    SlideForward,
    /// Slide `A_i` backward along `A_{i+1} A_i`.
    SlideBackward,
    Delete,
    /// Line `A_{i-1} A_{i+1}` separates `A_{i+2}` from `A_i`.
    ShiftForward,
    /// Line `A_{i+1} A_{i-1}` separates `A_{i-2}` from `A_i`.
    ShiftBackward,
}

fn side(p: Point2, q: Point2, r: Point2) -> i8 {
    orient(p, q, r).sign()
}

/// Strictly opposite sides of line `pq`.
fn separates(p: Point2, q: Point2, x: Point2, y: Point2) -> bool {
    side(p, q, x) * side(p, q, y) < 0
}

pub(crate) fn classify(p: &ClosedPolyline2, i: usize) -> InteriorCase {
    let i = i as isize;
    let (a2, a, b, c, c2) = (p.at(i - 2), p.at(i - 1), p.at(i), p.at(i + 1), p.at(i + 2));
    if !separates(b, c, a, c2) {
        InteriorCase::SlideForward
    } else if !separates(b, a, c, a2) {
        InteriorCase::SlideBackward
    } else if separates(a, c, c2, b) {
        InteriorCase::ShiftForward
    } else if separates(c, a, a2, b) {
        InteriorCase::ShiftBackward
    } else {
        InteriorCase::Delete
    }
}

/// Distance along the ray `b + t·u` (with `b` inside) to the boundary, and
/// the index of the edge where it leaves.
fn ray_exit(hull: &ConvexPolygon2, b: Point2, u: Point2) -> Result<(f64, usize)> {
    let mut best: Option<(f64, usize)> = None;
    for (e, (p, q)) in hull.edges().enumerate() {
        let d = q - p;
        let len = d.norm();
        let rate = d.cross(u) / len;
        if rate < 0.0 {
            let depth = (d.cross(b - p) / len).max(0.0);
            let t = depth / -rate;
            if best.is_none_or(|(bt, _)| t < bt) {
                best = Some((t, e));
            }
        }
    }
    best.ok_or_else(|| GeomError::Invariant("ray does not leave the hull".into()))
}

/// Parameter `t > 0` where the ray `b + t·u` meets the ray from `from`
/// through `through`, strictly past `through`.
fn ray_hits_beyond(b: Point2, u: Point2, from: Point2, through: Point2) -> Option<f64> {
    let w = through - from;
    let den = u.cross(w);
    if den == 0.0 {
        return None;
    }
    let t = (from - b).cross(w) / den;
    let s = (from - b).cross(u) / den;
    (t > 0.0 && s > 1.0).then_some(t)
}

/// Slide `A_i` away from `A_{i-1}` until it reaches the boundary or the ray
/// `A_{i+2} A_{i+1}`; in the latter case `A_{i+1}` becomes straight and is
/// dropped.
fn slide_forward(p: &ClosedPolyline2, hull: &ConvexPolygon2, i: usize) -> Result<ClosedPolyline2> {
    let n = p.len();
    let ii = i as isize;
    let (a, b, c, c2) = (p.at(ii - 1), p.at(ii), p.at(ii + 1), p.at(ii + 2));
    let u = (b - a) * (1.0 / a.dist(b));
    let (t_exit, edge) = ray_exit(hull, b, u)?;
    let stop = if side(b, c, a) != 0 && side(b, c, c2) != 0 {
        ray_hits_beyond(b, u, c2, c)
    } else {
        None
    };
    let mut v = p.vertices().to_vec();
    match stop {
        Some(t) if t < t_exit - hull.eps() => {
            v[i] = b + u * t;
            v.remove((i + 1) % n);
        }
        _ => v[i] = hull.project_onto_edge(b + u * t_exit, edge),
    }
    normalize(&ClosedPolyline2::new(v)?)
}

pub(crate) fn slide(
    p: &ClosedPolyline2,
    hull: &ConvexPolygon2,
    i: usize,
    forward: bool,
) -> Result<ClosedPolyline2> {
    if forward {
        slide_forward(p, hull, i)
    } else {
        let r = p.reversed();
        Ok(slide_forward(&r, hull, p.len() - 1 - i)?.reversed())
    }
}

pub(crate) fn delete(p: &ClosedPolyline2, i: usize) -> Result<ClosedPolyline2> {
    let mut v = p.vertices().to_vec();
    v.remove(i);
    normalize(&ClosedPolyline2::new(v)?)
}

/// Among interior vertices in a shift case, the one with the least angle
/// (`∠A_{i-1}A_{i+1}A_i` forward, `∠A_{i+1}A_{i-1}A_i` backward), ties to the
/// lowest index. Returns the vertex and the neighbour the shift moves to.
pub(crate) fn shift_target(p: &ClosedPolyline2, hull: &ConvexPolygon2) -> Option<(usize, usize)> {
    let n = p.len();
    let mut best: Option<(f64, usize, usize)> = None;
    for i in 0..n {
        if !hull.is_interior(p.vertices()[i]) {
            continue;
        }
        let ii = i as isize;
        let (a, b, c) = (p.at(ii - 1), p.at(ii), p.at(ii + 1));
        let cand = match classify(p, i) {
            InteriorCase::ShiftForward => (interior_angle(a, c, b), (i + 1) % n),
            InteriorCase::ShiftBackward => (interior_angle(c, a, b), (i + n - 1) % n),
            _ => continue,
        };
        if best.is_none_or(|(ang, _, _)| cand.0 < ang) {
            best = Some((cand.0, i, cand.1));
        }
    }
    best.map(|(_, i, j)| (i, j))
}

pub(crate) fn apply(
    p: &ClosedPolyline2,
    hull: &ConvexPolygon2,
    i: usize,
    case: InteriorCase,
) -> Result<Option<(ClosedPolyline2, Move)>> {
    let n = p.len();
    Ok(Some(match case {
        InteriorCase::SlideForward => (
            slide(p, hull, i, true)?,
            Move::new(MoveKind::CaseA, i, (i + 1) % n),
        ),
        InteriorCase::SlideBackward => (
            slide(p, hull, i, false)?,
            Move::new(MoveKind::CaseA, (i + n - 1) % n, i),
        ),
        InteriorCase::Delete => (delete(p, i)?, Move::new(MoveKind::CaseB, i, i)),
        InteriorCase::ShiftForward | InteriorCase::ShiftBackward => return Ok(None),
    }))
}

/// One elimination step for the interior vertex `A_i`.
///
/// Slides or deletes `A_i` when possible. Otherwise the polyline is
/// returned unchanged with a [`MoveKind::CaseCShift`] move whose range
/// names the least-angle shift vertex and the neighbour to continue from.
pub fn push_interior_vertex(p: &ClosedPolyline2, i: usize) -> Result<(ClosedPolyline2, Move)> {
    if i >= p.len() {
        return Err(GeomError::InvalidInput(format!(
            "vertex index {i} out of range for {} vertices",
            p.len()
        )));
    }
    let hull = convex_hull(p)?;
    if !hull.is_interior(p.vertices()[i]) {
        return Err(GeomError::Precondition(format!(
            "vertex {i} is not strictly inside the hull"
        )));
    }
    let case = classify(p, i);
    if let Some(r) = apply(p, &hull, i, case)? {
        return Ok(r);
    }
    let (from, to) = shift_target(p, &hull)
        .ok_or_else(|| GeomError::Invariant("shift case without a shift candidate".into()))?;
    Ok((p.clone(), Move::new(MoveKind::CaseCShift, from, to)))
}
