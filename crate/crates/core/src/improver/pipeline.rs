use super::boundary::{
    flip_with, remove_circuit_with, shortest_block, stretch_with, stretchable_edge, tidy,
};
use super::interior::{apply, classify, shift_target, InteriorCase};
use super::{
    classify_turns, direction_changes, ImprovementTrace, Measure, Move, MoveKind, TraceStep,
};
use crate::error::{GeomError, Result};
use crate::planar::{
    convex_hull, is_multiple_circuit, normalize, ClosedPolyline2, ConvexPolygon2, PolylineMetrics,
};

/// Progress measure of `p` relative to `hull`.
pub fn measure(p: &ClosedPolyline2, hull: &ConvexPolygon2) -> Measure {
    let v = p.vertices();
    Measure {
        interior: v.iter().filter(|x| hull.is_interior(**x)).count(),
        direction_changes: direction_changes(p),
        off_boundary: p.edges().filter(|(a, b)| !hull.share_edge(*a, *b)).count(),
        vertices: v.len(),
    }
}

struct Run {
    hull: ConvexPolygon2,
    current: ClosedPolyline2,
    trace: ImprovementTrace,
    budget: usize,
}

impl Run {
    fn push(&mut self, q: ClosedPolyline2, mv: Move) -> Result<()> {
        let prev = convex_hull(&self.current)?;
        let eps = prev.eps();
        if let Some(v) = q.vertices().iter().find(|v| !prev.contains(**v, eps)) {
            return Err(GeomError::Invariant(format!(
                "{} moved vertex {v:?} outside the hull",
                mv.kind.name()
            )));
        }
        if !self.hull.corners_visited(q.vertices()) {
            return Err(GeomError::Invariant(format!(
                "{} dropped a hull corner",
                mv.kind.name()
            )));
        }
        let metrics = PolylineMetrics::of(&q)?;
        self.trace.steps.push(TraceStep {
            mv,
            polyline: q.clone(),
            metrics,
        });
        self.current = q;
        if self.trace.steps.len() > self.budget {
            return Err(GeomError::NonTermination {
                budget: self.budget,
                trace: Box::new(self.trace.clone()),
            });
        }
        Ok(())
    }

    fn eliminate_interior(&mut self) -> Result<()> {
        loop {
            let p = self.current.clone();
            let n = p.len();
            let interior: Vec<usize> = (0..n)
                .filter(|&i| self.hull.is_interior(p.vertices()[i]))
                .collect();
            if interior.is_empty() {
                return Ok(());
            }
            let cases: Vec<(usize, InteriorCase)> =
                interior.iter().map(|&i| (i, classify(&p, i))).collect();
            let pick = cases
                .iter()
                .find(|(_, c)| {
                    matches!(c, InteriorCase::SlideForward | InteriorCase::SlideBackward)
                })
                .or_else(|| cases.iter().find(|(_, c)| *c == InteriorCase::Delete));
            if let Some(&(i, case)) = pick {
                let (q, mv) = apply(&p, &self.hull, i, case)?.expect("slide or delete");
                self.push(q, mv)?;
                continue;
            }

            let (mut from, mut to) = shift_target(&p, &self.hull)
                .ok_or_else(|| GeomError::Invariant("interior vertex fits no case".into()))?;
            let mut done = false;
            for _ in 0..n {
                self.push(p.clone(), Move::new(MoveKind::CaseCShift, from, to))?;
                if !self.hull.is_interior(p.vertices()[to]) {
                    return Err(GeomError::Invariant(format!(
                        "shift from {from} reached boundary vertex {to}"
                    )));
                }
                let case = classify(&p, to);
                if let Some((q, mv)) = apply(&p, &self.hull, to, case)? {
                    self.push(q, mv)?;
                    done = true;
                    break;
                }
                let next = match case {
                    InteriorCase::ShiftForward => (to + 1) % n,
                    _ => (to + n - 1) % n,
                };
                (from, to) = (to, next);
            }
            if !done {
                return Err(GeomError::Invariant("shift chain did not end".into()));
            }
        }
    }

    fn reduce_on_boundary(&mut self) -> Result<()> {
        let snapped: Vec<_> = self
            .current
            .vertices()
            .iter()
            .map(|v| self.hull.snap_to_boundary(*v))
            .collect();
        self.current = tidy(snapped, &self.hull)?;
        loop {
            while let Some((q, mv)) = remove_circuit_with(&self.current, &self.hull, true)? {
                self.push(q, mv)?;
            }
            while let Some(i) = stretchable_edge(&self.current, &self.hull)? {
                let (q, mv) = stretch_with(&self.current, &self.hull, i)?;
                self.push(q, mv)?;
            }
            let turns = classify_turns(&self.current);
            let Some(block) = shortest_block(&turns) else {
                return Ok(());
            };
            let (q, mv) = flip_with(&self.current, &self.hull, block)?;
            self.push(q, mv)?;
        }
    }
}

/// Reduce `p` to a multiple circuit of its convex hull boundary.
///
/// Returns the final polyline and the trace of every move. The move budget
/// is `10·n²` for `n` vertices after normalization.
pub fn improve_to_circuit(p: &ClosedPolyline2) -> Result<(ClosedPolyline2, ImprovementTrace)> {
    improve_with_budget(p, None)
}

/// [`improve_to_circuit`] with an explicit move budget.
pub fn improve_with_budget(
    p: &ClosedPolyline2,
    budget: Option<usize>,
) -> Result<(ClosedPolyline2, ImprovementTrace)> {
    let start = normalize(p)?;
    let hull = convex_hull(&start)?;
    let n = start.len();
    let mut run = Run {
        trace: ImprovementTrace {
            hull: hull.clone(),
            initial: start.clone(),
            initial_metrics: PolylineMetrics::of(&start)?,
            steps: Vec::new(),
        },
        hull,
        current: start,
        budget: budget.unwrap_or(10 * n * n),
    };
    run.eliminate_interior()?;
    run.reduce_on_boundary()?;
    if is_multiple_circuit(&run.current, &run.hull).is_none() {
        return Err(GeomError::Invariant(
            "improvement ended on a polyline that is not a multiple circuit".into(),
        ));
    }
    Ok((run.current, run.trace))
}
