use rayon::prelude::*;
use robin_core::asympt::{hull_3d, two_disks_2d, two_disks_crossover};
use robin_core::diskext::{
    bounds_2d, dlambda_dalpha_disk, dlambda_dr, solve_disk_exterior_2d, BoundaryParam, DEFAULT_TOL,
};
use robin_core::fem2d::{truncation_for, verify_theorem_with, Verdict};
use robin_core::sl1d::{auto_truncation, solve_halfline_extrapolated, WeightPoly};
use robin_core::validate::{run_all, CheckResult};
use robin_core::ConvexCurve;

use crate::config::{Job, Range, SweepParam};
use crate::error::{usage, CliResult};
use crate::output::{Output, Record};

/// Environment variable capping the sweep worker count.
pub const THREADS_ENV: &str = "ROBIN_LAB_THREADS";

pub fn disk_record(alpha: f64, radius: f64) -> CliResult<Record> {
    let a = BoundaryParam(alpha);
    let sol = solve_disk_exterior_2d(a, radius, DEFAULT_TOL)?;
    let (lo, hi) = bounds_2d(a, radius)?;
    Ok(Record::new()
        .num("alpha", alpha)
        .num("R", radius)
        .num("lambda", sol.lambda)
        .num("k", sol.k)
        .num("lower_bound", lo)
        .num("upper_bound", hi)
        .num("dlambda_dR", dlambda_dr(a, radius)?)
        .num("dlambda_dalpha", dlambda_dalpha_disk(a, radius)?)
        .num("residual", sol.residual))
}

pub fn sweep_points(range: &Range) -> Vec<f64> {
    let n = range.points;
    (0..n)
        .map(|i| {
            if i + 1 == n {
                range.to
            } else {
                range.from + (range.to - range.from) * i as f64 / (n - 1) as f64
            }
        })
        .collect()
}

fn sweep_row(param: SweepParam, value: f64, fixed: f64) -> CliResult<Record> {
    let (alpha, radius) = match param {
        SweepParam::Alpha => (value, fixed),
        SweepParam::Radius => (fixed, value),
    };
    let a = BoundaryParam(alpha);
    let lambda = solve_disk_exterior_2d(a, radius, DEFAULT_TOL)?.lambda;
    let (lo, hi) = bounds_2d(a, radius)?;
    let derivative = match param {
        SweepParam::Alpha => dlambda_dalpha_disk(a, radius)?,
        SweepParam::Radius => dlambda_dr(a, radius)?,
    };
    Ok(Record::new()
        .num("param", value)
        .num("lambda", lambda)
        .num("lower_bound", lo)
        .num("upper_bound", hi)
        .num("derivative", derivative))
}

fn thread_cap() -> CliResult<Option<usize>> {
    match std::env::var(THREADS_ENV) {
        Err(_) => Ok(None),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n >= 1 => Ok(Some(n)),
            _ => Err(usage(format!("{THREADS_ENV} must be a positive integer, got {v:?}"))),
        },
    }
}

/// Rows in input order; the first failing point (by index) is reported.
pub fn sweep_rows(param: SweepParam, range: &Range, fixed: f64) -> CliResult<Vec<Record>> {
    let points = sweep_points(range);
    let work = || -> Vec<CliResult<Record>> { points.par_iter().map(|&v| sweep_row(param, v, fixed)).collect() };
    let results = match thread_cap()? {
        None => work(),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| usage(format!("cannot start {n} worker threads: {e}")))?
            .install(work),
    };
    results.into_iter().collect()
}

pub fn shape_record(
    curve: &robin_core::CurveSpec,
    alpha: f64,
    ns: usize,
    nt: usize,
    n: usize,
    truncation: Option<f64>,
) -> CliResult<Record> {
    let a = BoundaryParam(alpha);
    let c = ConvexCurve::from_spec(curve)?;
    let t = match truncation {
        Some(t) => t,
        None => truncation_for(&c, a)?,
    };
    let rep = verify_theorem_with(&c, a, ns, nt, t)?;
    let w = WeightPoly::planar(c.perimeter())?;
    let reduced = solve_halfline_extrapolated(a, w, auto_truncation(a, &w)?, n)?.lambda;
    let verdict = match rep.verdict {
        Verdict::Strict => "strict",
        Verdict::Equality => "equality",
        Verdict::Counterevidence => "counterevidence",
    };
    Ok(Record::new()
        .text("shape", rep.shape)
        .num("alpha", rep.alpha)
        .num("perimeter", rep.perimeter)
        .num("area", rep.area)
        .num("lambda_domain", rep.lambda_domain)
        .num("lambda_domain_coarse", rep.lambda_domain_coarse)
        .num("mesh_error_estimate", rep.mesh_error_estimate)
        .num("r_isoperimetric", rep.r_isoperimetric)
        .num("r_isochoric", rep.r_isochoric)
        .num("lambda_isoperimetric", rep.lambda_isoperimetric)
        .num("lambda_isochoric", rep.lambda_isochoric)
        .num("margin_isoperimetric", rep.margin_isoperimetric)
        .num("margin_isochoric", rep.margin_isochoric)
        .num("tolerance", rep.tolerance)
        .text("verdict", verdict)
        .num("lambda_reduced", reduced)
        .int("Ns", rep.ns)
        .int("Nt", rep.nt)
        .num("T", rep.truncation))
}

pub fn two_disks_record(alpha: f64, r3: f64, weak_alpha: Option<f64>) -> CliResult<Record> {
    let rep = two_disks_2d(BoundaryParam(alpha), r3)?;
    let crossover = match weak_alpha {
        Some(w) => two_disks_crossover(r3, alpha, w)?.alpha,
        None => None,
    };
    Ok(Record::new()
        .num("alpha", rep.alpha)
        .num("r3", rep.r3)
        .num("r_isoperimetric", rep.r_isoperimetric)
        .num("r_isochoric", rep.r_isochoric)
        .num("lambda_union_asymptotic", rep.lambda_union_asymptotic)
        .num("lambda_isoperimetric_disk", rep.lambda_isoperimetric_disk)
        .num("lambda_isochoric_disk", rep.lambda_isochoric_disk)
        .flag("reversed_isoperimetric", rep.reversed_isoperimetric)
        .flag("reversed_isochoric", rep.reversed_isochoric)
        .flag("reversed", rep.reversed_isoperimetric && rep.reversed_isochoric)
        .opt_num("crossover_alpha", crossover)
        .flag("asymptotic", rep.asymptotic))
}

pub fn hull_record(alpha: f64, r: f64, big_r: f64) -> CliResult<Record> {
    let rep = hull_3d(BoundaryParam(alpha), r, big_r, 3)?;
    Ok(Record::new()
        .num("alpha", rep.alpha)
        .num("r", rep.r)
        .num("R", rep.big_r)
        .int("d", rep.dimension as usize)
        .num("lambda_hull_asymptotic", rep.lambda_hull_asymptotic)
        .num("lambda_ball_asymptotic", rep.lambda_ball_asymptotic)
        .num("lambda_ball_exact", rep.lambda_ball_exact)
        .flag("criterion", rep.criterion)
        .flag("reversed", rep.reversed)
        .num("axis_length_area", rep.area_match.axis_length)
        .num("axis_length_volume", rep.volume_match.axis_length)
        .flag("asymptotic", rep.asymptotic))
}

fn check_record(c: &CheckResult) -> Record {
    Record::new().text("name", c.name.clone()).flag("passed", c.passed).text("detail", c.detail.clone())
}

/// Plain-text pass/fail matrix.
pub fn validate_text(results: &[CheckResult]) -> String {
    let width = results.iter().map(|c| c.name.len()).max().unwrap_or(0);
    let mut s = String::new();
    for c in results {
        let mark = if c.passed { "PASS" } else { "FAIL" };
        s.push_str(&format!("{mark}  {:<width$}  {}\n", c.name, c.detail));
    }
    let passed = results.iter().filter(|c| c.passed).count();
    s.push_str(&format!("{passed}/{} invariants passed\n", results.len()));
    s
}

pub enum Executed {
    Data(Output),
    Validation(Vec<CheckResult>),
}

pub fn execute(job: &Job) -> CliResult<Executed> {
    Ok(match job {
        Job::Disk { alpha, radius } => Executed::Data(Output::Single(disk_record(*alpha, *radius)?)),
        Job::Sweep { param, range, fixed } => Executed::Data(Output::Table(sweep_rows(*param, range, *fixed)?)),
        Job::Shape { curve, alpha, ns, nt, n, truncation } => {
            Executed::Data(Output::Single(shape_record(curve, *alpha, *ns, *nt, *n, *truncation)?))
        }
        Job::TwoDisks { alpha, r3, weak_alpha } => {
            Executed::Data(Output::Single(two_disks_record(*alpha, *r3, *weak_alpha)?))
        }
        Job::Hull { alpha, r, big_r } => Executed::Data(Output::Single(hull_record(*alpha, *r, *big_r)?)),
        Job::Validate => Executed::Validation(run_all()),
    })
}

pub fn validation_output(results: &[CheckResult]) -> Output {
    Output::Table(results.iter().map(check_record).collect())
}
