//! `RunConfig`: the JSON form of a command line, and its validation into a
//! [`Job`].

use std::path::PathBuf;

use robin_core::CurveSpec;
use serde::Deserialize;

use crate::error::{usage, CliResult};
use crate::output::Format;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum CommandKind {
    Disk,
    Sweep,
    Shape,
    Counterexample,
    Validate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, clap::ValueEnum)]
pub enum SweepParam {
    #[serde(rename = "alpha")]
    #[value(name = "alpha")]
    Alpha,
    #[serde(rename = "R")]
    #[value(name = "R")]
    Radius,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
pub enum CounterKind {
    #[serde(rename = "2d")]
    TwoD,
    #[serde(rename = "3d")]
    ThreeD,
}

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Range {
    pub from: f64,
    pub to: f64,
    pub points: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MeshOverrides {
    #[serde(rename = "Ns")]
    pub ns: Option<usize>,
    #[serde(rename = "Nt")]
    pub nt: Option<usize>,
    pub n: Option<usize>,
    #[serde(rename = "T")]
    pub truncation: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub command: CommandKind,
    pub shape: Option<CurveSpec>,
    pub alpha: Option<f64>,
    #[serde(rename = "R")]
    pub radius: Option<f64>,
    pub param: Option<SweepParam>,
    pub range: Option<Range>,
    pub kind: Option<CounterKind>,
    pub r3: Option<f64>,
    pub r: Option<f64>,
    /// Weak end of the two-disk crossover search.
    pub weak_alpha: Option<f64>,
    #[serde(default)]
    pub mesh: MeshOverrides,
    pub format: Option<Format>,
    pub output: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(command: CommandKind) -> Self {
        RunConfig {
            command,
            shape: None,
            alpha: None,
            radius: None,
            param: None,
            range: None,
            kind: None,
            r3: None,
            r: None,
            weak_alpha: None,
            mesh: MeshOverrides::default(),
            format: None,
            output: None,
        }
    }

    pub fn from_json(text: &str) -> CliResult<Self> {
        serde_json::from_str(text).map_err(|e| usage(format!("invalid config: {e}")))
    }
}

/// A validated command.
#[derive(Debug, Clone, PartialEq)]
pub enum Job {
    Disk { alpha: f64, radius: f64 },
    Sweep { param: SweepParam, range: Range, fixed: f64 },
    Shape { curve: CurveSpec, alpha: f64, ns: usize, nt: usize, n: usize, truncation: Option<f64> },
    TwoDisks { alpha: f64, r3: f64, weak_alpha: Option<f64> },
    Hull { alpha: f64, r: f64, big_r: f64 },
    Validate,
}

pub const DEFAULT_2D_ALPHA: f64 = -50.0;
pub const DEFAULT_3D_ALPHA: f64 = -100.0;

fn need<T>(v: Option<T>, what: &str) -> CliResult<T> {
    v.ok_or_else(|| usage(format!("missing {what}")))
}

fn positive_count(v: Option<usize>, default: usize, min: usize, what: &str) -> CliResult<usize> {
    match v {
        None => Ok(default),
        Some(n) if n >= min => Ok(n),
        Some(n) => Err(usage(format!("{what} must be at least {min}, got {n}"))),
    }
}

impl TryFrom<&RunConfig> for Job {
    type Error = crate::error::CliError;

    fn try_from(c: &RunConfig) -> CliResult<Job> {
        Ok(match c.command {
            CommandKind::Disk => Job::Disk { alpha: need(c.alpha, "alpha")?, radius: need(c.radius, "R")? },
            CommandKind::Sweep => {
                let param = need(c.param, "sweep param")?;
                let range = need(c.range, "sweep range")?;
                if range.points < 2 || !(range.from.is_finite() && range.to.is_finite()) || range.from == range.to {
                    return Err(usage(format!(
                        "empty range: need at least 2 distinct finite points, got {} points in [{}, {}]",
                        range.points, range.from, range.to
                    )));
                }
                let fixed = match param {
                    SweepParam::Alpha => need(c.radius, "R for an alpha sweep")?,
                    SweepParam::Radius => need(c.alpha, "alpha for an R sweep")?,
                };
                Job::Sweep { param, range, fixed }
            }
            CommandKind::Shape => {
                let m = c.mesh;
                if let Some(t) = m.truncation {
                    if !(t > 0.0 && t.is_finite()) {
                        return Err(usage(format!("T must be positive, got {t}")));
                    }
                }
                Job::Shape {
                    curve: need(c.shape.clone(), "shape")?,
                    alpha: need(c.alpha, "alpha")?,
                    ns: positive_count(m.ns, robin_core::fem2d::DEFAULT_NS, 3, "Ns")?,
                    nt: positive_count(m.nt, robin_core::fem2d::DEFAULT_NT, 2, "Nt")?,
                    n: positive_count(m.n, robin_core::sl1d::REDUCED_N, 32, "n")?,
                    truncation: m.truncation,
                }
            }
            CommandKind::Counterexample => match need(c.kind, "counterexample kind")? {
                CounterKind::TwoD => Job::TwoDisks {
                    alpha: c.alpha.unwrap_or(DEFAULT_2D_ALPHA),
                    r3: need(c.r3, "r3")?,
                    weak_alpha: c.weak_alpha,
                },
                CounterKind::ThreeD => Job::Hull {
                    alpha: c.alpha.unwrap_or(DEFAULT_3D_ALPHA),
                    r: need(c.r, "r")?,
                    big_r: need(c.radius, "R")?,
                },
            },
            CommandKind::Validate => Job::Validate,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shape_config_parses() {
        let c = RunConfig::from_json(
            r#"{"command": "shape", "shape": {"name": "ellipse", "a": 2, "b": 1},
                "alpha": -1, "mesh": {"Ns": 32, "Nt": 64, "T": 20}, "format": "csv"}"#,
        )
        .unwrap();
        let job = Job::try_from(&c).unwrap();
        assert_eq!(
            job,
            Job::Shape {
                curve: CurveSpec::Ellipse { a: 2.0, b: 1.0 },
                alpha: -1.0,
                ns: 32,
                nt: 64,
                n: 4096,
                truncation: Some(20.0)
            }
        );
        assert_eq!(c.format, Some(Format::Csv));
    }

    #[test]
    fn disk_shape_accepts_r() {
        let c = RunConfig::from_json(r#"{"command": "shape", "shape": {"name": "disk", "R": 2}, "alpha": -1}"#).unwrap();
        assert_eq!(c.shape, Some(CurveSpec::Disk { radius: 2.0 }));
    }

    #[test]
    fn empty_range_and_bad_mesh_are_usage_errors() {
        let c = RunConfig::from_json(
            r#"{"command": "sweep", "param": "alpha", "range": {"from": -1, "to": -1, "points": 5}, "R": 1}"#,
        )
        .unwrap();
        assert_eq!(Job::try_from(&c).unwrap_err().exit_code(), 1);
        let c = RunConfig::from_json(
            r#"{"command": "shape", "shape": {"name": "disk", "radius": 1}, "alpha": -1, "mesh": {"Ns": 0}}"#,
        )
        .unwrap();
        assert_eq!(Job::try_from(&c).unwrap_err().exit_code(), 1);
        assert!(RunConfig::from_json(r#"{"command": "disk", "bogus": 1}"#).is_err());
    }
}
