//! JSON input files.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{GeomError, Result};
use crate::planar::{ClosedPolyline2, Point2};
use crate::spherical::{SphPoint, SphPolyline};

/// Largest deviation from unit length accepted for spherical vertices.
pub const UNIT_TOLERANCE: f64 = 1e-6;

/// `{"geometry":"planar","vertices":[[x,y],...]}` or
/// `{"geometry":"spherical","vertices_xyz":[[x,y,z],...]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "geometry", rename_all = "lowercase", deny_unknown_fields)]
pub enum GeometryFile {
    Planar { vertices: Vec<Point2> },
    Spherical { vertices_xyz: Vec<[f64; 3]> },
}

impl GeometryFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text)
            .map_err(|e| GeomError::InvalidInput(format!("bad geometry JSON: {e}")))
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)
            .map_err(|e| GeomError::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn planar(p: &ClosedPolyline2) -> Self {
        GeometryFile::Planar {
            vertices: p.vertices().to_vec(),
        }
    }

    pub fn to_planar(&self) -> Result<ClosedPolyline2> {
        match self {
            GeometryFile::Planar { vertices } => ClosedPolyline2::new(vertices.clone()),
            _ => Err(GeomError::InvalidInput("expected planar geometry".into())),
        }
    }

    /// Vertices are normalized; any further than `1e-6` from unit length
    /// are rejected.
    pub fn to_spherical(&self) -> Result<SphPolyline> {
        match self {
            GeometryFile::Spherical { vertices_xyz } => SphPolyline::new(
                vertices_xyz
                    .iter()
                    .map(|v| SphPoint::from_unit(*v, UNIT_TOLERANCE))
                    .collect::<Result<_>>()?,
            ),
            _ => Err(GeomError::InvalidInput(
                "expected spherical geometry".into(),
            )),
        }
    }
}
