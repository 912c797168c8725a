//! Numeric tolerances shared by every module.
//!
//! All comparisons are done in double precision. Point and area tolerances
//! are relative: they are multiplied by a length (or squared length) scale
//! taken from the inputs at hand.

use std::sync::OnceLock;

/// Tolerance set used by the kernels.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerances {
    /// Relative distance below which two points are the same point.
    pub point: f64,
    /// Turn angle (radians) below which a vertex counts as straight.
    pub collinear: f64,
    /// Relative area below which three points count as collinear.
    pub area: f64,
    /// Slack allowed on inequality margins before they count as violated.
    pub margin: f64,
}

pub const DEFAULT: Tolerances = Tolerances {
    point: 1e-9,
    collinear: 1e-12,
    area: 1e-12,
    margin: 1e-9,
};

/// Minimum witness dot product for hemisphere admission.
pub const HEMISPHERE_MARGIN: f64 = 1e-6;

static OVERRIDE: OnceLock<Tolerances> = OnceLock::new();

/// The active tolerance set: [`DEFAULT`] unless [`install`] was called.
pub fn current() -> Tolerances {
    OVERRIDE.get().copied().unwrap_or(DEFAULT)
}

/// Replace the process-wide tolerances. Only the first call wins.
///
/// Intended for testing the CLI (`DNA_EPS`); library callers should not need it.
pub fn install(tol: Tolerances) -> bool {
    OVERRIDE.set(tol).is_ok()
}

/// Build a tolerance set from a `DNA_EPS` style override value: it replaces
/// the point and margin tolerances and leaves the angular ones alone.
pub fn with_eps(eps: f64) -> Tolerances {
    Tolerances {
        point: eps,
        margin: eps,
        ..DEFAULT
    }
}
