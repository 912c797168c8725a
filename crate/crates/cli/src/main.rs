//! `dna`: metrics, improvement traces, fuzz campaigns and the spherical and
//! hyperbolic checks from the command line.
//!
//! Exit codes: 0 success, 1 property violation, 2 invalid input.

use std::fs::File;
use std::io::BufWriter;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use dna_core::harness::{emit_svg, run_fuzz, GeometryFile, Property};
use dna_core::hyperbolic::counterexample;
use dna_core::improver::{improve_to_circuit, ImprovementTrace};
use dna_core::inequality::dna_check;
use dna_core::planar::{is_multiple_circuit, PolylineMetrics};
use dna_core::spherical::theorem_s_check;
use dna_core::{tolerance, GeomError};

#[derive(Parser)]
#[command(
    name = "dna",
    version,
    about = "Mean curvature of closed polylines against their convex hull"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// L, V, T, hull perimeter and the margin T − 2π/P of a planar polyline.
    Metrics { file: PathBuf },
    /// Reduce a planar polyline to a multiple circuit of its hull.
    Improve {
        file: PathBuf,
        /// Write the move trace as CSV.
        #[arg(long)]
        trace: Option<PathBuf>,
        /// Write one SVG frame per snapshot into this directory.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Evaluate a property on seeded random instances.
    Fuzz {
        #[arg(long)]
        property: Property,
        #[arg(long, default_value_t = 10_000)]
        count: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest vertex count for polyline properties.
        #[arg(long)]
        max_vertices: Option<usize>,
    },
    /// Spherical polylines.
    Sphere {
        #[command(subcommand)]
        command: SphereCommand,
    },
    /// The hyperbolic plane.
    Hyperbolic {
        #[command(subcommand)]
        command: HyperbolicCommand,
    },
}

#[derive(Subcommand)]
enum SphereCommand {
    /// Mean curvature against (2π − S) / L of the hull.
    Check { file: PathBuf },
}

#[derive(Subcommand)]
enum HyperbolicCommand {
    /// The midpoint family at scale t, where the planar inequality fails
    /// for large t.
    Demo {
        #[arg(long)]
        t: f64,
    },
}

enum Failure {
    Violation(String),
    Invalid(String),
}

impl From<GeomError> for Failure {
    fn from(e: GeomError) -> Self {
        match e {
            GeomError::NonTermination { .. } | GeomError::Invariant(_) => {
                Failure::Violation(e.to_string())
            }
            _ => Failure::Invalid(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

/// JSON on stdout and whether the result violates the property checked.
type Outcome = Result<(Value, bool), Failure>;

fn violated(margin: f64) -> bool {
    margin < -tolerance::current().margin
}

fn write_trace(
    trace: &ImprovementTrace,
    csv: Option<&PathBuf>,
    svg: Option<&PathBuf>,
) -> Result<(), Failure> {
    if let Some(path) = csv {
        trace.write_csv(BufWriter::new(File::create(path)?))?;
    }
    if let Some(dir) = svg {
        emit_svg(trace, dir)?;
    }
    Ok(())
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Metrics { file } => {
            let p = GeometryFile::read(&file)?.to_planar()?;
            let v = dna_check(&p)?;
            Ok((json!(v), violated(v.margin)))
        }
        Command::Improve { file, trace, svg } => {
            let p = GeometryFile::read(&file)?.to_planar()?;
            let (fin, t) = match improve_to_circuit(&p) {
                Ok(r) => r,
                Err(GeomError::NonTermination {
                    budget,
                    trace: partial,
                }) => {
                    write_trace(&partial, trace.as_ref(), svg.as_ref())?;
                    return Err(Failure::Violation(format!(
                        "improvement did not terminate within {budget} moves"
                    )));
                }
                Err(e) => return Err(e.into()),
            };
            write_trace(&t, trace.as_ref(), svg.as_ref())?;
            let after = PolylineMetrics::of(&fin)?;
            let k = is_multiple_circuit(&fin, &t.hull);
            let rose = after.curvature > t.initial_metrics.curvature + tolerance::current().margin;
            Ok((
                json!({
                    "initial": t.initial_metrics,
                    "final": after,
                    "k": k,
                    "moves": t.len(),
                    "vertices": fin.vertices(),
                }),
                k.is_none() || rose,
            ))
        }
        Command::Fuzz {
            property,
            count,
            seed,
            max_vertices,
        } => {
            let r = run_fuzz(property, count, seed, max_vertices);
            Ok((json!(r), !r.passed()))
        }
        Command::Sphere {
            command: SphereCommand::Check { file },
        } => {
            let p = GeometryFile::read(&file)?.to_spherical()?;
            let v = theorem_s_check(&p)?;
            Ok((json!(v), violated(v.margin)))
        }
        Command::Hyperbolic {
            command: HyperbolicCommand::Demo { t },
        } => {
            // a negative margin here is the expected demonstration, not a failure
            Ok((json!(counterexample(t)?), false))
        }
    }
}

fn install_eps() -> Result<(), Failure> {
    let Ok(raw) = std::env::var("DNA_EPS") else {
        return Ok(());
    };
    match raw.trim().parse::<f64>() {
        Ok(eps) if eps.is_finite() && eps > 0.0 => {
            tolerance::install(tolerance::with_eps(eps));
            Ok(())
        }
        _ => Err(Failure::Invalid(format!(
            "DNA_EPS must be a positive number, got {raw:?}"
        ))),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let result = install_eps().and_then(|()| run(cli.command));
    eprintln!("elapsed: {:.3} s", start.elapsed().as_secs_f64());
    match result {
        Ok((value, bad)) => {
            println!(
                "{}",
                serde_json::to_string_pretty(&value).expect("serializable")
            );
            if bad {
                eprintln!("property violated");
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Failure::Violation(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
