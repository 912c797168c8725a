//! Seeded fuzz campaigns over the inequalities, run in parallel.

use std::f64::consts::TAU;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::random::{
    instance_rng, random_polyline_with, random_quad_with, random_sph_polyline_with,
    random_sph_quad_with, random_sph_triangle_with, random_triangle_with, Region, RNG_NAME,
};
use crate::error::{GeomError, Result};
use crate::improver::improve_to_circuit;
use crate::inequality::{dna_check, lemma4_margin, lemma5_margin};
use crate::planar::{convex_hull, is_multiple_circuit, mean_abs_curvature, normalize};
use crate::spherical::{lemma1s_margin, lemma2s_margin, lemma3s_margin, theorem_s_check};
use crate::tolerance;

/// Cap radius for random spherical triangles and quadrilaterals.
pub const SPH_CAP: f64 = 1.5;
/// Cap radius for random spherical polylines.
pub const SPH_POLYLINE_CAP: f64 = 1.3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    Lemma4,
    Lemma5,
    Dna,
    Improve,
    Lemma1s,
    Lemma2s,
    Lemma3s,
    TheoremS,
}

impl Property {
    pub const ALL: [Property; 8] = [
        Property::Lemma4,
        Property::Lemma5,
        Property::Dna,
        Property::Improve,
        Property::Lemma1s,
        Property::Lemma2s,
        Property::Lemma3s,
        Property::TheoremS,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Property::Lemma4 => "lemma4",
            Property::Lemma5 => "lemma5",
            Property::Dna => "dna",
            Property::Improve => "improve",
            Property::Lemma1s => "lemma1s",
            Property::Lemma2s => "lemma2s",
            Property::Lemma3s => "lemma3s",
            Property::TheoremS => "theorem_s",
        }
    }

    /// Default largest vertex count for polyline properties.
    pub fn default_max_vertices(&self) -> usize {
        match self {
            Property::TheoremS => 8,
            _ => 12,
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = GeomError;

    fn from_str(s: &str) -> Result<Self> {
        Property::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| GeomError::InvalidInput(format!("unknown property {s:?}")))
    }
}

/// One evaluated instance: its margin (negative means violated) and the
/// input, serialized for reproduction.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Outcome {
    pub index: u64,
    pub margin: f64,
    pub instance: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    /// For `dna`: whether the instance is a multiple circuit of its hull.
    #[serde(skip)]
    pub circuit: bool,
}

impl Outcome {
    fn violated(&self, slack: f64) -> bool {
        self.error.is_some() || self.margin < -slack
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FuzzReport {
    pub property: Property,
    pub rng: String,
    pub seed: u64,
    pub count: u64,
    pub max_vertices: usize,
    pub violations: u64,
    pub errors: u64,
    pub min_margin: f64,
    /// For `dna`: smallest margin over instances that are not multiple
    /// circuits.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_noncircuit_margin: Option<f64>,
    pub worst: Outcome,
    /// Wall-clock time; not serialized so reports stay reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl FuzzReport {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

fn ok(index: u64, margin: f64, instance: Value) -> Outcome {
    Outcome {
        index,
        margin,
        instance,
        error: None,
        circuit: false,
    }
}

fn vertex_count<R: Rng>(rng: &mut R, max_vertices: usize) -> usize {
    rng.gen_range(3..=max_vertices.max(3))
}

/// Evaluate instance `index` of a campaign.
pub fn evaluate(property: Property, seed: u64, index: u64, max_vertices: usize) -> Outcome {
    let mut rng = instance_rng(seed, index);
    let disk = Region::unit_disk();
    let mut run = || -> Result<Outcome> {
        Ok(match property {
            Property::Lemma4 => {
                let t = random_triangle_with(&mut rng, &disk)?;
                ok(index, lemma4_margin(&t).margin, json!(t))
            }
            Property::Lemma5 => {
                let q = random_quad_with(&mut rng, &disk)?;
                ok(index, lemma5_margin(&q).margin, json!(q))
            }
            Property::Dna => {
                let n = vertex_count(&mut rng, max_vertices);
                let p = random_polyline_with(&mut rng, n, &disk)?;
                let v = dna_check(&p)?;
                let mut o = ok(index, v.margin, json!(p));
                o.circuit = v.k.is_some();
                o
            }
            Property::Improve => {
                let n = vertex_count(&mut rng, max_vertices);
                let p = random_polyline_with(&mut rng, n, &disk)?;
                let (r, _) = improve_to_circuit(&p)?;
                let hull = convex_hull(&normalize(&p)?)?;
                if is_multiple_circuit(&r, &hull).is_none() {
                    return Err(GeomError::Invariant(
                        "final polyline is not a circuit".into(),
                    ));
                }
                let t_final = mean_abs_curvature(&r)?;
                let gap = (t_final - TAU / hull.perimeter()).abs();
                if gap > tolerance::current().margin {
                    return Err(GeomError::Invariant(format!(
                        "final T differs from 2π/P by {gap:e}"
                    )));
                }
                ok(index, mean_abs_curvature(&p)? - t_final, json!(p))
            }
            Property::Lemma1s => {
                let t = random_sph_triangle_with(&mut rng, SPH_CAP)?;
                let m = [(t.a, t.b, t.c), (t.b, t.c, t.a), (t.c, t.a, t.b)]
                    .iter()
                    .map(|&(a, b, c)| lemma1s_margin(a, b, c).map(|m| m.margin))
                    .collect::<Result<Vec<_>>>()?;
                ok(index, m.into_iter().fold(f64::INFINITY, f64::min), json!(t))
            }
            Property::Lemma2s => {
                let t = random_sph_triangle_with(&mut rng, SPH_CAP)?;
                let m = [(t.a, t.b, t.c), (t.b, t.c, t.a), (t.c, t.a, t.b)]
                    .iter()
                    .map(|&(a, b, c)| lemma2s_margin(a, b, c).map(|m| m.margin))
                    .collect::<Result<Vec<_>>>()?;
                ok(index, m.into_iter().fold(f64::INFINITY, f64::min), json!(t))
            }
            Property::Lemma3s => {
                let q = random_sph_quad_with(&mut rng, SPH_CAP)?;
                ok(index, lemma3s_margin(&q).margin, json!(q))
            }
            Property::TheoremS => {
                let n = vertex_count(&mut rng, max_vertices);
                let p = random_sph_polyline_with(&mut rng, n, SPH_POLYLINE_CAP)?;
                ok(index, theorem_s_check(&p)?.margin, json!(p))
            }
        })
    };
    run().unwrap_or_else(|e| Outcome {
        index,
        margin: f64::NEG_INFINITY,
        instance: Value::Null,
        error: Some(e.to_string()),
        circuit: false,
    })
}

/// Smaller margin first, then lower index, so the reduction is
/// independent of scheduling.
fn worse(a: Outcome, b: Outcome) -> Outcome {
    match a.margin.total_cmp(&b.margin).then(a.index.cmp(&b.index)) {
        std::cmp::Ordering::Greater => b,
        _ => a,
    }
}

pub fn run_fuzz(
    property: Property,
    count: u64,
    seed: u64,
    max_vertices: Option<usize>,
) -> FuzzReport {
    let start = Instant::now();
    let max_vertices = max_vertices.unwrap_or(property.default_max_vertices());
    let slack = tolerance::current().margin;

    #[derive(Clone)]
    struct Acc {
        worst: Option<Outcome>,
        violations: u64,
        errors: u64,
        min_noncircuit: Option<f64>,
    }
    let empty = || Acc {
        worst: None,
        violations: 0,
        errors: 0,
        min_noncircuit: None,
    };
    let merge_min = |a: Option<f64>, b: Option<f64>| match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    };

    let acc = (0..count)
        .into_par_iter()
        .map(|i| {
            let o = evaluate(property, seed, i, max_vertices);
            Acc {
                violations: o.violated(slack) as u64,
                errors: o.error.is_some() as u64,
                min_noncircuit: (property == Property::Dna && !o.circuit).then_some(o.margin),
                worst: Some(o),
            }
        })
        .reduce(empty, |a, b| Acc {
            worst: match (a.worst, b.worst) {
                (Some(x), Some(y)) => Some(worse(x, y)),
                (x, None) => x,
                (None, y) => y,
            },
            violations: a.violations + b.violations,
            errors: a.errors + b.errors,
            min_noncircuit: merge_min(a.min_noncircuit, b.min_noncircuit),
        });

    let worst = acc.worst.unwrap_or(Outcome {
        index: 0,
        margin: f64::INFINITY,
        instance: Value::Null,
        error: None,
        circuit: false,
    });
    FuzzReport {
        property,
        rng: RNG_NAME.to_string(),
        seed,
        count,
        max_vertices,
        violations: acc.violations,
        errors: acc.errors,
        min_margin: worst.margin,
        min_noncircuit_margin: acc.min_noncircuit,
        worst,
        elapsed: start.elapsed(),
    }
}
