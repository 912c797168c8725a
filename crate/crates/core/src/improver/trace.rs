use std::io::{self, Write};

use serde::{Deserialize, Serialize};

use super::Move;
use crate::planar::{ClosedPolyline2, ConvexPolygon2, PolylineMetrics};

/// Lexicographic progress measure of the improvement loop. Fields are
/// compared in declaration order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Measure {
    pub interior: usize,
    pub direction_changes: usize,
    pub off_boundary: usize,
    pub vertices: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceStep {
    pub mv: Move,
    pub polyline: ClosedPolyline2,
    pub metrics: PolylineMetrics,
}

/// Every move applied by [`improve_to_circuit`](super::improve_to_circuit),
/// with the polyline and its metrics after the move.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ImprovementTrace {
    pub hull: ConvexPolygon2,
    pub initial: ClosedPolyline2,
    pub initial_metrics: PolylineMetrics,
    pub steps: Vec<TraceStep>,
}

impl ImprovementTrace {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// The initial polyline followed by the polyline after every step.
    pub fn snapshots(&self) -> impl Iterator<Item = (&ClosedPolyline2, &PolylineMetrics)> {
        std::iter::once((&self.initial, &self.initial_metrics))
            .chain(self.steps.iter().map(|s| (&s.polyline, &s.metrics)))
    }

    pub fn last_polyline(&self) -> &ClosedPolyline2 {
        self.steps.last().map_or(&self.initial, |s| &s.polyline)
    }

    /// Rows `step_index, move_kind, case_tag, L, V, T, P`; row 0 is the
    /// initial polyline with move kind `initial`.
    pub fn write_csv<W: Write>(&self, mut w: W) -> io::Result<()> {
        writeln!(w, "step_index,move_kind,case_tag,L,V,T,P")?;
        let row = |w: &mut W, i: usize, kind: &str, tag: &str, m: &PolylineMetrics| {
            writeln!(
                w,
                "{i},{kind},{tag},{:.12},{:.12},{:.12},{:.12}",
                m.length, m.rotation, m.curvature, m.hull_perimeter
            )
        };
        row(&mut w, 0, "initial", "", &self.initial_metrics)?;
        for (i, s) in self.steps.iter().enumerate() {
            row(
                &mut w,
                i + 1,
                s.mv.kind.name(),
                &s.mv.kind.case_tag(),
                &s.metrics,
            )?;
        }
        Ok(())
    }
}
