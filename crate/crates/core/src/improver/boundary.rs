//! Moves on polylines whose vertices all lie on the hull boundary.

use super::{classify_turns, direction_changes, FlipCase, Move, MoveKind, Turn};
use crate::error::{GeomError, Result};
use crate::planar::{convex_hull, normalize, ClosedPolyline2, ConvexPolygon2, Point2};

fn locate(hull: &ConvexPolygon2, p: Point2, what: &str) -> Result<f64> {
    hull.locate(p)
        .ok_or_else(|| GeomError::Precondition(format!("{what} {p:?} is not on the hull boundary")))
}

/// Normalize, then drop non-corner vertices that sit straight between two
/// neighbours on the same hull edge. Such vertices can survive the angular
/// test of `normalize` when an adjacent edge is very short.
pub(crate) fn tidy(v: Vec<Point2>, hull: &ConvexPolygon2) -> Result<ClosedPolyline2> {
    let mut p = normalize(&ClosedPolyline2::new(v)?)?;
    loop {
        let n = p.len() as isize;
        let straight = (0..n).find(|&i| {
            let (a, b, c) = (p.at(i - 1), p.at(i), p.at(i + 1));
            hull.corner_index(b).is_none()
                && hull.share_edge(a, b)
                && hull.share_edge(b, c)
                && (b - a).dot(c - b) > 0.0
        });
        let Some(i) = straight else { return Ok(p) };
        let mut v = p.into_vertices();
        v.remove(i as usize);
        p = normalize(&ClosedPolyline2::new(v)?)?;
    }
}

/// Whether the edge `a -> b` differs from the boundary walk from `a` to `b`
/// in the given sense, i.e. the walk passes a corner.
pub(crate) fn needs_stretch(
    hull: &ConvexPolygon2,
    a: Point2,
    b: Point2,
    ccw: bool,
) -> Result<bool> {
    let (pa, pb) = (locate(hull, a, "edge start")?, locate(hull, b, "edge end")?);
    Ok(!hull.corners_between(pa, pb, ccw).is_empty())
}

pub(crate) fn stretch_with(
    p: &ClosedPolyline2,
    hull: &ConvexPolygon2,
    i: usize,
) -> Result<(ClosedPolyline2, Move)> {
    let n = p.len();
    let j = (i + 1) % n;
    let turns = classify_turns(p);
    if turns[i] != turns[j] {
        return Err(GeomError::Precondition(format!(
            "turns at {i} and {j} differ, edge cannot be stretched"
        )));
    }
    let (a, b) = (p.vertices()[i], p.vertices()[j]);
    let ccw = turns[i].is_ccw();
    let mv = Move::new(MoveKind::Stretch, i, j);
    if !needs_stretch(hull, a, b, ccw)? {
        return Ok((p.clone(), mv));
    }
    let arc = hull.corners_between(
        locate(hull, a, "edge start")?,
        locate(hull, b, "edge end")?,
        ccw,
    );
    let mut v = p.vertices().to_vec();
    v.splice(i + 1..i + 1, arc);
    Ok((tidy(v, hull)?, mv))
}

/// Replace edge `A_i A_{i+1}` by the boundary path between its ends, walked
/// in the sense of the (common) turn at both ends. An edge already running
/// along the boundary in that sense is left as is.
pub fn stretch(p: &ClosedPolyline2, i: usize) -> Result<(ClosedPolyline2, Move)> {
    if i >= p.len() {
        return Err(GeomError::InvalidInput(format!(
            "edge index {i} out of range"
        )));
    }
    stretch_with(p, &convex_hull(p)?, i)
}

/// First edge whose end turns agree and which still needs stretching.
pub(crate) fn stretchable_edge(
    p: &ClosedPolyline2,
    hull: &ConvexPolygon2,
) -> Result<Option<usize>> {
    let turns = classify_turns(p);
    let n = p.len();
    for i in 0..n {
        let j = (i + 1) % n;
        if turns[i] == turns[j]
            && needs_stretch(hull, p.vertices()[i], p.vertices()[j], turns[i].is_ccw())?
        {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

pub(crate) fn remove_circuit_with(
    p: &ClosedPolyline2,
    hull: &ConvexPolygon2,
    keep_corners: bool,
) -> Result<Option<(ClosedPolyline2, Move)>> {
    let n = p.len();
    let m = hull.len();
    if n < m + 3 {
        return Ok(None);
    }
    let idx: Vec<Option<usize>> = p.vertices().iter().map(|v| hull.corner_index(*v)).collect();
    for j in 0..n {
        let Some(c0) = idx[j] else { continue };
        for step in [1isize, -1] {
            let run = (1..m + 2).all(|r| {
                let want = (c0 as isize + step * r as isize).rem_euclid(m as isize) as usize;
                idx[(j + r) % n] == Some(want)
            });
            if !run {
                continue;
            }
            let dropped: Vec<usize> = (0..m).map(|r| (j + 2 + r) % n).collect();
            let v: Vec<Point2> = (0..n)
                .filter(|x| !dropped.contains(x))
                .map(|x| p.vertices()[x])
                .collect();
            if keep_corners && !hull.corners_visited(&v) {
                continue;
            }
            let q = tidy(v, hull)?;
            let mv = Move::new(MoveKind::CircuitRemoval, (j + 2) % n, (j + m + 1) % n);
            return Ok(Some((q, mv)));
        }
    }
    Ok(None)
}

/// Collapse a run `X C_1 C_2 .. C_m C_1 C_2 Y` that goes once around the
/// hull `C_1 .. C_m` to `X C_1 C_2 Y`. Length drops by the hull perimeter
/// and rotation by 2π.
pub fn remove_full_circuit(p: &ClosedPolyline2) -> Result<Option<(ClosedPolyline2, Move)>> {
    remove_circuit_with(p, &convex_hull(p)?, false)
}

/// A maximal run of equal turns at `A_{start+1} .. A_{end-1}`, bounded by
/// opposite turns at `A_start` and `A_end`. `end` is not reduced modulo
/// the vertex count, so `end > start`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Block {
    pub start: usize,
    pub end: usize,
    pub turn: Turn,
}

pub(crate) fn block_at(turns: &[Turn], start: usize) -> Option<Block> {
    let n = turns.len();
    let turn = turns[(start + 1) % n];
    if turns[start] == turn {
        return None;
    }
    let mut end = start + 1;
    while turns[end % n] == turn {
        end += 1;
        if end - start >= n {
            return None;
        }
    }
    Some(Block { start, end, turn })
}

/// The block with the fewest vertices, ties to the lowest start.
pub(crate) fn shortest_block(turns: &[Turn]) -> Option<Block> {
    (0..turns.len())
        .filter_map(|i| block_at(turns, i))
        .min_by_key(|b| (b.end - b.start, b.start))
}

fn flip_case(pos: [f64; 4], ccw: bool, perimeter: f64, eps: f64) -> FlipCase {
    let [pi, pi1, pkm1, pk] = pos;
    let rel = |x: f64| {
        let d = if ccw { x - pi } else { pi - x }.rem_euclid(perimeter);
        if d > perimeter - eps {
            0.0
        } else {
            d
        }
    };
    // 0 = A_{i+1}, 1 = A_{k-1}, 2 = A_k; stable sort keeps that order on ties
    let mut order = [(rel(pi1), 0u8), (rel(pkm1), 1), (rel(pk), 2)];
    order.sort_by(|a, b| a.0.total_cmp(&b.0));
    let key = [order[0].1, order[1].1, order[2].1];
    FlipCase(match key {
        [0, 1, 2] => 1,
        [2, 0, 1] => 2,
        [0, 2, 1] => 3,
        [1, 2, 0] => 4,
        [1, 0, 2] => 5,
        _ => 6,
    })
}

pub(crate) fn flip_with(
    p: &ClosedPolyline2,
    hull: &ConvexPolygon2,
    block: Block,
) -> Result<(ClosedPolyline2, Move)> {
    let n = p.len();
    let (i, k) = (block.start, block.end);
    let at = |x: usize| p.vertices()[x % n];
    let (ai, ai1, akm1, ak) = (at(i), at(i + 1), at(k - 1), at(k));
    let pos = [
        locate(hull, ai, "block start")?,
        locate(hull, ai1, "block vertex")?,
        locate(hull, akm1, "block vertex")?,
        locate(hull, ak, "block end")?,
    ];
    let eps = hull.eps();
    let case = flip_case(pos, block.turn.is_ccw(), hull.perimeter(), eps);
    let arc_ccw = !block.turn.is_ccw();
    let excise = ai.dist(ak) <= eps;
    let arc = if excise {
        Vec::new()
    } else {
        hull.corners_between(pos[0], pos[3], arc_ccw)
    };

    // kept part A_k .. A_i, then the replacement path back to A_k
    let kept: Vec<Point2> = (k..=i + n).map(at).collect();
    let build = |path: &[Point2]| -> Result<ClosedPolyline2> {
        let mut v = kept.clone();
        v.extend_from_slice(path);
        tidy(v, hull)
    };
    let before = direction_changes(p);
    let accept =
        |q: &ClosedPolyline2| hull.corners_visited(q.vertices()) && direction_changes(q) < before;

    let plain = build(&arc)?;
    let mv = |extended| Move::new(MoveKind::BlockFlip { case, extended }, i % n, k % n);
    if accept(&plain) {
        return Ok((plain, mv(false)));
    }
    let mut path = hull.corners_between(pos[0], pos[0], arc_ccw);
    path.push(ai);
    path.extend(arc);
    let extended = build(&path)?;
    if accept(&extended) {
        return Ok((extended, mv(true)));
    }
    Err(GeomError::Invariant(format!(
        "flipping block {i}..{k} did not reduce direction changes"
    )))
}

/// Replace the block starting at the bounding vertex `A_i` (whose turn
/// differs from the turn at `A_{i+1}`) by the boundary arc from `A_i` to
/// `A_k` walked against the block's turns.
pub fn flip_monotone_block(p: &ClosedPolyline2, i: usize) -> Result<(ClosedPolyline2, Move)> {
    if i >= p.len() {
        return Err(GeomError::InvalidInput(format!(
            "vertex index {i} out of range"
        )));
    }
    let hull = convex_hull(p)?;
    let turns = classify_turns(p);
    let block = block_at(&turns, i).ok_or_else(|| {
        GeomError::Precondition(format!("no maximal monotone block starts at vertex {i}"))
    })?;
    let n = p.len();
    for j in block.start + 1..block.end - 1 {
        let (a, b) = (p.vertices()[j % n], p.vertices()[(j + 1) % n]);
        if !hull.share_edge(a, b) {
            return Err(GeomError::Precondition(format!(
                "inner edge {} of the block is not on the boundary",
                j % n
            )));
        }
    }
    flip_with(p, &hull, block)
}
