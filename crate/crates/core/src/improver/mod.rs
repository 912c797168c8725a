//! The improvement engine: moves that never increase mean absolute
//! curvature (relative to the hull bound) and never enlarge the convex hull,
//! driving a closed polyline to a multiple circuit of its hull boundary.
//!
//! Phase one pushes interior vertices to the hull boundary ([`push_interior_vertex`]).
//! Phase two alternates circuit removal, stretching and monotone-block flips
//! until every turn has the same direction.

mod boundary;
mod interior;
mod pipeline;
mod trace;

use serde::{Deserialize, Serialize};

use crate::planar::{orient, ClosedPolyline2, Orientation};

pub use boundary::{flip_monotone_block, remove_full_circuit, stretch};
pub use interior::push_interior_vertex;
pub use pipeline::{improve_to_circuit, improve_with_budget, measure};
pub use trace::{ImprovementTrace, Measure, TraceStep};

/// Turn direction at a vertex. Collinear (straight or reversing) vertices
/// count as left turns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Turn {
    Left,
    Right,
}

impl Turn {
    pub fn opposite(self) -> Self {
        match self {
            Turn::Left => Turn::Right,
            Turn::Right => Turn::Left,
        }
    }

    /// Boundary sense that agrees with this turn: left turns follow the
    /// hull counterclockwise.
    pub(crate) fn is_ccw(self) -> bool {
        self == Turn::Left
    }
}

pub fn classify_turns(p: &ClosedPolyline2) -> Vec<Turn> {
    let n = p.len() as isize;
    (0..n)
        .map(|i| match orient(p.at(i - 1), p.at(i), p.at(i + 1)) {
            Orientation::Clockwise => Turn::Right,
            _ => Turn::Left,
        })
        .collect()
}

/// Number of cyclically adjacent vertex pairs whose turns differ.
pub fn direction_changes(p: &ClosedPolyline2) -> usize {
    let t = classify_turns(p);
    (0..t.len())
        .filter(|&i| t[i] != t[(i + 1) % t.len()])
        .count()
}

/// Cyclic order class of a flipped block, numbered as in the classical
/// case analysis. The block runs `A_i A_{i+1} .. A_{k-1} A_k`; positions
/// are read along the boundary in the sense of the block's turns,
/// starting at `A_i`:
///
/// | case | order |
/// |------|-------|
/// | 1 | `A_i A_{i+1} A_{k-1} A_k` |
/// | 2 | `A_i A_k A_{i+1} A_{k-1}` |
/// | 3 | `A_i A_{i+1} A_k A_{k-1}` |
/// | 4 | `A_i A_{k-1} A_k A_{i+1}` |
/// | 5 | `A_i A_{k-1} A_{i+1} A_k` |
/// | 6 | `A_i A_k A_{k-1} A_{i+1}` |
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FlipCase(pub u8);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MoveKind {
    /// Interior vertex slid along its incoming edge to the boundary.
    CaseA,
    /// Interior vertex deleted.
    CaseB,
    /// Index shifted to a neighbour with a smaller angle; polyline unchanged.
    CaseCShift,
    Stretch,
    CircuitRemoval,
    /// `extended` is set when the replacement arc was lengthened by one full
    /// loop of the boundary to keep every hull corner on the polyline.
    BlockFlip {
        case: FlipCase,
        extended: bool,
    },
}

impl MoveKind {
    pub fn name(&self) -> &'static str {
        match self {
            MoveKind::CaseA => "case_a",
            MoveKind::CaseB => "case_b",
            MoveKind::CaseCShift => "case_c_shift",
            MoveKind::Stretch => "stretch",
            MoveKind::CircuitRemoval => "circuit_removal",
            MoveKind::BlockFlip {
                extended: false, ..
            } => "block_flip",
            MoveKind::BlockFlip { extended: true, .. } => "block_flip_extended",
        }
    }

    pub fn case_tag(&self) -> String {
        match self {
            MoveKind::CaseA => "a".into(),
            MoveKind::CaseB => "b".into(),
            MoveKind::CaseCShift => "c".into(),
            MoveKind::BlockFlip { case, .. } => case.0.to_string(),
            MoveKind::Stretch | MoveKind::CircuitRemoval => String::new(),
        }
    }
}

/// One move, with the cyclic vertex range `first..=last` it touched in the
/// polyline it was applied to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Move {
    pub kind: MoveKind,
    pub first: usize,
    pub last: usize,
}

impl Move {
    pub fn new(kind: MoveKind, first: usize, last: usize) -> Self {
        Self { kind, first, last }
    }
}
