//! One SVG frame per snapshot of an improvement trace.

use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use crate::improver::ImprovementTrace;
use crate::planar::Point2;

const SIZE: u32 = 480;

fn points_attr(v: &[Point2]) -> String {
    let mut s = String::new();
    for (i, p) in v.iter().enumerate() {
        if i > 0 {
            s.push(' ');
        }
        // SVG y grows downwards
        let _ = write!(s, "{:.6},{:.6}", p.x, -p.y);
    }
    s
}

/// Frame for snapshot `k`: hull in gray, polyline in black, vertices that
/// are new since the previous snapshot in red.
pub fn render_frame(trace: &ImprovementTrace, k: usize) -> String {
    let snaps: Vec<_> = trace.snapshots().collect();
    let (poly, metrics) = snaps[k];
    let hull = trace.hull.vertices();
    let (lo, hi) = hull.iter().chain(poly.vertices()).fold(
        (
            Point2::new(f64::INFINITY, f64::INFINITY),
            Point2::new(f64::NEG_INFINITY, f64::NEG_INFINITY),
        ),
        |(lo, hi), p| {
            (
                Point2::new(lo.x.min(p.x), lo.y.min(p.y)),
                Point2::new(hi.x.max(p.x), hi.y.max(p.y)),
            )
        },
    );
    let span = (hi.x - lo.x).max(hi.y - lo.y).max(f64::MIN_POSITIVE);
    let pad = 0.05 * span;
    let stroke = span / 250.0;
    let label = if k == 0 {
        "initial".to_string()
    } else {
        let mv = &trace.steps[k - 1].mv;
        format!(
            "{} {} [{}..{}]",
            mv.kind.name(),
            mv.kind.case_tag(),
            mv.first,
            mv.last
        )
    };

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="{:.6} {:.6} {:.6} {:.6}">"#,
        lo.x - pad,
        -hi.y - pad,
        span + 2.0 * pad,
        span + 2.0 * pad
    );
    let _ = writeln!(
        s,
        "<title>step {k}: {label}; L={:.9} V={:.9} T={:.9}</title>",
        metrics.length, metrics.rotation, metrics.curvature
    );
    let _ = writeln!(
        s,
        r#"<polygon points="{}" fill="none" stroke="gray" stroke-width="{:.6}"/>"#,
        points_attr(hull),
        3.0 * stroke
    );
    let _ = writeln!(
        s,
        r#"<polygon points="{}" fill="none" stroke="black" stroke-width="{:.6}"/>"#,
        points_attr(poly.vertices()),
        stroke
    );
    if k > 0 {
        let before = snaps[k - 1].0.vertices();
        for p in poly.vertices().iter().filter(|p| !before.contains(p)) {
            let _ = writeln!(
                s,
                r#"<circle cx="{:.6}" cy="{:.6}" r="{:.6}" fill="red"/>"#,
                p.x,
                -p.y,
                3.0 * stroke
            );
        }
    }
    s.push_str("</svg>\n");
    s
}

/// Write `step_000.svg`, `step_001.svg`, ... into `dir`, one per snapshot
/// (trace length + 1 frames).
pub fn emit_svg(trace: &ImprovementTrace, dir: &Path) -> io::Result<Vec<PathBuf>> {
    fs::create_dir_all(dir)?;
    (0..=trace.len())
        .map(|k| {
            let path = dir.join(format!("step_{k:03}.svg"));
            fs::write(&path, render_frame(trace, k))?;
            Ok(path)
        })
        .collect()
}
