use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use robin_core::CurveSpec;

use crate::config::{CommandKind, CounterKind, MeshOverrides, Range, RunConfig, SweepParam};
use crate::output::Format;

#[derive(Debug, Parser)]
#[command(name = "robin-lab", version, about = "Lowest Robin eigenvalue in exteriors of convex sets")]
pub struct Cli {
    /// Output format (JSON is canonical; CSV is a flat projection).
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Read the run from a JSON RunConfig file instead of the command line.
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,
    /// Write results to this file instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Disk exterior: eigenvalue, bounds and derivatives.
    Disk {
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        #[arg(long = "R", visible_alias = "radius", allow_negative_numbers = true)]
        radius: f64,
    },
    /// Disk eigenvalue over a range of alpha or R.
    Sweep {
        #[arg(long, value_enum)]
        param: SweepParam,
        #[arg(long, allow_negative_numbers = true)]
        from: f64,
        #[arg(long, allow_negative_numbers = true)]
        to: f64,
        #[arg(long, default_value_t = 100)]
        points: usize,
        /// Fixed coupling for an R sweep.
        #[arg(long, allow_negative_numbers = true)]
        alpha: Option<f64>,
        /// Fixed radius for an alpha sweep.
        #[arg(long = "R", allow_negative_numbers = true)]
        radius: Option<f64>,
    },
    /// Compare a convex exterior with the disks of equal perimeter and area.
    Shape {
        #[command(subcommand)]
        shape: ShapeCommand,
    },
    /// Large-coupling counterexamples for non-convex sets.
    Counterexample {
        #[command(subcommand)]
        kind: CounterCommand,
    },
    /// Run the invariant suite.
    Validate {
        /// Machine-readable results.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Args)]
pub struct ShapeOpts {
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: f64,
    /// Periodic nodes along the boundary.
    #[arg(long = "Ns")]
    pub ns: Option<usize>,
    /// Elements in the normal direction.
    #[arg(long = "Nt")]
    pub nt: Option<usize>,
    /// Elements of the reduced half-line problem.
    #[arg(long)]
    pub n: Option<usize>,
    /// Truncation length in the normal direction.
    #[arg(long = "T", allow_negative_numbers = true)]
    pub truncation: Option<f64>,
}

#[derive(Debug, Subcommand)]
pub enum ShapeCommand {
    Disk {
        #[arg(long = "R", visible_alias = "radius", allow_negative_numbers = true)]
        radius: f64,
        #[command(flatten)]
        opts: ShapeOpts,
    },
    Ellipse {
        #[arg(long, allow_negative_numbers = true)]
        a: f64,
        #[arg(long, allow_negative_numbers = true)]
        b: f64,
        #[command(flatten)]
        opts: ShapeOpts,
    },
    /// Support function `c0 + c1 cos t + c2 cos 2t + ...`.
    SupportPoly {
        #[arg(long, value_delimiter = ',', required = true, allow_negative_numbers = true)]
        coeffs: Vec<f64>,
        #[command(flatten)]
        opts: ShapeOpts,
    },
}

#[derive(Debug, Subcommand)]
pub enum CounterCommand {
    /// Two disjoint disks of radius r3.
    #[command(name = "2d")]
    TwoD {
        #[arg(long, allow_negative_numbers = true)]
        r3: f64,
        #[arg(long, allow_negative_numbers = true)]
        alpha: Option<f64>,
        /// Also search for a verdict change between alpha and this value.
        #[arg(long, allow_negative_numbers = true)]
        weak_alpha: Option<f64>,
    },
    /// Convex hull of two balls of radius r against the ball of radius R.
    #[command(name = "3d")]
    ThreeD {
        #[arg(long, allow_negative_numbers = true)]
        r: f64,
        #[arg(long = "R", allow_negative_numbers = true)]
        big_r: f64,
        #[arg(long, allow_negative_numbers = true)]
        alpha: Option<f64>,
    },
}

impl Command {
    pub fn into_config(self) -> RunConfig {
        match self {
            Command::Disk { alpha, radius } => RunConfig {
                alpha: Some(alpha),
                radius: Some(radius),
                ..RunConfig::new(CommandKind::Disk)
            },
            Command::Sweep { param, from, to, points, alpha, radius } => RunConfig {
                param: Some(param),
                range: Some(Range { from, to, points }),
                alpha,
                radius,
                ..RunConfig::new(CommandKind::Sweep)
            },
            Command::Shape { shape } => {
                let (spec, o) = match shape {
                    ShapeCommand::Disk { radius, opts } => (CurveSpec::Disk { radius }, opts),
                    ShapeCommand::Ellipse { a, b, opts } => (CurveSpec::Ellipse { a, b }, opts),
                    ShapeCommand::SupportPoly { coeffs, opts } => (CurveSpec::SupportPoly { coeffs }, opts),
                };
                RunConfig {
                    shape: Some(spec),
                    alpha: Some(o.alpha),
                    mesh: MeshOverrides { ns: o.ns, nt: o.nt, n: o.n, truncation: o.truncation },
                    ..RunConfig::new(CommandKind::Shape)
                }
            }
            Command::Counterexample { kind } => match kind {
                CounterCommand::TwoD { r3, alpha, weak_alpha } => RunConfig {
                    kind: Some(CounterKind::TwoD),
                    r3: Some(r3),
                    alpha,
                    weak_alpha,
                    ..RunConfig::new(CommandKind::Counterexample)
                },
                CounterCommand::ThreeD { r, big_r, alpha } => RunConfig {
                    kind: Some(CounterKind::ThreeD),
                    r: Some(r),
                    radius: Some(big_r),
                    alpha,
                    ..RunConfig::new(CommandKind::Counterexample)
                },
            },
            Command::Validate { json } => RunConfig {
                format: json.then_some(Format::Json),
                ..RunConfig::new(CommandKind::Validate)
            },
        }
    }
}
