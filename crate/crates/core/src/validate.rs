//! Named invariant suite. Each check is cheap enough to run from the
//! command line; the heavy convergence studies live in the test suites.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::asympt::{hull_3d, two_disks_2d, AsymptoticModel};
use crate::diskext::{
    bounds_2d, disk_lambda, dlambda_dalpha_disk, dlambda_dr, radial_norm_identity, solve_ball_exterior_3d,
    solve_disk_exterior_2d, BoundaryParam, DEFAULT_TOL,
};
use crate::error::Result;
use crate::fem2d::solve_exterior_with;
use crate::geometry::{isoperimetric_check, surface_spherocylinder, ConvexCurve, Surface3D};
use crate::quadrature::integrate_to_infinity;
use crate::sl1d::{auto_truncation, solve_halfline, solve_halfline_extrapolated, WeightPoly};
use crate::specfun::{
    bessel_i0, bessel_i0_scaled, bessel_i1, bessel_i1_scaled, bessel_k0, bessel_k0_scaled, bessel_k1, bessel_k1_scaled,
    k_ratio,
};

pub const ALPHA_GRID: [f64; 4] = [-0.25, -1.0, -4.0, -16.0];
pub const RADIUS_GRID: [f64; 3] = [0.25, 1.0, 4.0];

/// The 12 `(alpha, R)` pairs of [`ALPHA_GRID`] x [`RADIUS_GRID`].
pub fn disk_grid() -> Vec<(f64, f64)> {
    ALPHA_GRID
        .iter()
        .flat_map(|&a| RADIUS_GRID.iter().map(move |&r| (a, r)))
        .collect()
}

/// `n` log-spaced points in `[lo, hi]`.
pub fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let (a, b) = (lo.ln(), hi.ln());
    (0..n)
        .map(|i| (a + (b - a) * i as f64 / (n - 1) as f64).exp())
        .collect()
}

/// Catalog curves used by the geometric checks.
pub fn curve_catalog() -> Result<Vec<ConvexCurve>> {
    Ok(vec![
        ConvexCurve::disk(1.0)?,
        ConvexCurve::disk(0.3)?,
        ConvexCurve::ellipse(2.0, 1.0)?,
        ConvexCurve::ellipse(3.0, 1.0)?,
        ConvexCurve::ellipse(1.0, 0.2)?,
        ConvexCurve::support_poly(&[1.0, 0.0, 0.1])?,
        ConvexCurve::support_poly(&[2.0, 0.0, 0.2, 0.0, 0.05])?,
    ])
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &str, outcome: Result<(bool, String)>) -> CheckResult {
    match outcome {
        Ok((passed, detail)) => CheckResult { name: name.into(), passed, detail },
        Err(e) => CheckResult { name: name.into(), passed: false, detail: format!("error: {e}") },
    }
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}

type Check = fn() -> Result<(bool, String)>;

const CHECKS: &[(&str, Check)] = &[
    ("bessel.wronskian", bessel_wronskian),
    ("bessel.k_monotone", bessel_k_monotone),
    ("bessel.ratio_sandwich", bessel_ratio_sandwich),
    ("disk.bounds", disk_bounds),
    ("disk.residual", disk_residual),
    ("disk.dlambda_dr", disk_dlambda_dr),
    ("disk.dlambda_dalpha", disk_dlambda_dalpha),
    ("disk.monotone_in_radius", disk_monotone_in_radius),
    ("disk.concave_in_alpha", disk_concave_in_alpha),
    ("disk.scaling", disk_scaling),
    ("disk.large_radius", disk_large_radius),
    ("disk.normalization", disk_normalization),
    ("geometry.gauss_bonnet", geometry_gauss_bonnet),
    ("geometry.arclength_table", geometry_arclength_table),
    ("geometry.isoperimetric", geometry_isoperimetric),
    ("geometry.minkowski", geometry_minkowski),
    ("sl1d.disk_oracle", sl1d_disk_oracle),
    ("sl1d.ball_oracle", sl1d_ball_oracle),
    ("sl1d.nested_refinement", sl1d_nested_refinement),
    ("fem2d.disk_oracle", fem2d_disk_oracle),
    ("fem2d.ground_state", fem2d_ground_state),
    ("asympt.disk_asymptote", asympt_disk_asymptote),
    ("asympt.counterexamples", asympt_counterexamples),
];

/// Names of all checks, in execution order.
pub fn check_names() -> Vec<&'static str> {
    CHECKS.iter().map(|c| c.0).collect()
}

/// Runs every check.
pub fn run_all() -> Vec<CheckResult> {
    CHECKS.iter().map(|(name, f)| check(name, f())).collect()
}

fn bessel_wronskian() -> Result<(bool, String)> {
    let mut worst: f64 = 0.0;
    for x in log_grid(1e-6, 1e6, 200) {
        let w = bessel_i0(x)? * bessel_k1(x)? + bessel_i1(x)? * bessel_k0(x)?;
        // above ~700 the unscaled products overflow; use the scaled forms
        let w = if w.is_finite() {
            w
        } else {
            bessel_i0_scaled(x)? * bessel_k1_scaled(x)? + bessel_i1_scaled(x)? * bessel_k0_scaled(x)?
        };
        worst = worst.max(rel(w * x, 1.0));
    }
    Ok((worst < 1e-12, format!("max relative error {worst:.3e}")))
}

fn bessel_k_monotone() -> Result<(bool, String)> {
    let xs = log_grid(1e-3, 600.0, 400);
    let mut violations = 0;
    for w in xs.windows(2) {
        if !(bessel_k0(w[1])? < bessel_k0(w[0])?) || !(bessel_k1(w[1])? < bessel_k1(w[0])?) {
            violations += 1;
        }
    }
    Ok((violations == 0, format!("{violations} violations on 400 points")))
}

fn bessel_ratio_sandwich() -> Result<(bool, String)> {
    let mut violations = 0;
    for x in log_grid(1e-4, 1e4, 200) {
        let q = k_ratio(x)?;
        let lower = x / (0.5 + x + (0.25 + x * x).sqrt());
        if !(lower < q && q < 1.0) {
            violations += 1;
        }
    }
    Ok((violations == 0, format!("{violations} violations on 200 points")))
}

fn disk_bounds() -> Result<(bool, String)> {
    let mut violations = 0;
    for (a, r) in disk_grid() {
        let (lo, hi) = bounds_2d(BoundaryParam(a), r)?;
        let l = disk_lambda(BoundaryParam(a), r)?;
        if !(lo < l && l < hi) {
            violations += 1;
        }
    }
    Ok((violations == 0, format!("{violations} of 12 outside the bounds")))
}

fn disk_residual() -> Result<(bool, String)> {
    let mut worst: f64 = 0.0;
    for (a, r) in disk_grid() {
        worst = worst.max(solve_disk_exterior_2d(BoundaryParam(a), r, DEFAULT_TOL)?.residual);
    }
    Ok((worst < 1e-12, format!("max scaled residual {worst:.3e}")))
}

fn disk_dlambda_dr() -> Result<(bool, String)> {
    let mut worst: f64 = 0.0;
    for (a, r) in disk_grid() {
        let h = 1e-5 * r;
        let fd = (disk_lambda(BoundaryParam(a), r + h)? - disk_lambda(BoundaryParam(a), r - h)?) / (2.0 * h);
        worst = worst.max(rel(dlambda_dr(BoundaryParam(a), r)?, fd));
    }
    Ok((worst < 1e-6, format!("max relative deviation {worst:.3e}")))
}

fn disk_dlambda_dalpha() -> Result<(bool, String)> {
    let mut worst: f64 = 0.0;
    for (a, r) in disk_grid() {
        let h = 1e-5 * a.abs();
        let fd = (disk_lambda(BoundaryParam(a + h), r)? - disk_lambda(BoundaryParam(a - h), r)?) / (2.0 * h);
        worst = worst.max(rel(dlambda_dalpha_disk(BoundaryParam(a), r)?, fd));
    }
    Ok((worst < 1e-6, format!("max relative deviation {worst:.3e}")))
}

fn disk_monotone_in_radius() -> Result<(bool, String)> {
    let mut violations = 0;
    for a in ALPHA_GRID {
        let mut prev = f64::INFINITY;
        for i in 0..100 {
            let r = 0.25 + 3.75 * i as f64 / 99.0;
            let l = disk_lambda(BoundaryParam(a), r)?;
            if !(l < prev) {
                violations += 1;
            }
            prev = l;
        }
    }
    Ok((violations == 0, format!("{violations} violations on 4 x 100 points")))
}

fn disk_concave_in_alpha() -> Result<(bool, String)> {
    let mut violations = 0;
    for r in RADIUS_GRID {
        let ls = (0..100)
            .map(|i| disk_lambda(BoundaryParam(-4.0 + 3.75 * i as f64 / 99.0), r))
            .collect::<Result<Vec<_>>>()?;
        let d1: Vec<f64> = ls.windows(2).map(|w| w[1] - w[0]).collect();
        violations += d1.iter().filter(|&&d| !(d > 0.0)).count();
        violations += d1.windows(2).filter(|w| !(w[1] - w[0] < 0.0)).count();
    }
    Ok((violations == 0, format!("{violations} sign violations on 3 x 100 points")))
}

fn disk_scaling() -> Result<(bool, String)> {
    let mut worst: f64 = 0.0;
    for (a, r) in disk_grid() {
        let l = disk_lambda(BoundaryParam(a), r)?;
        for s in [0.5, 2.0, 10.0] {
            let ls = s * s * disk_lambda(BoundaryParam(a / s), s * r)?;
            worst = worst.max(rel(ls, l));
        }
    }
    Ok((worst < 1e-9, format!("max relative deviation {worst:.3e}")))
}

fn disk_large_radius() -> Result<(bool, String)> {
    let r = 1e4;
    let mut ok = true;
    let mut worst: f64 = 0.0;
    for a in ALPHA_GRID {
        let gap = disk_lambda(BoundaryParam(a), r)? + a * a;
        let limit = a.abs() / r * 1.01;
        ok &= gap.abs() <= limit;
        worst = worst.max(gap.abs() / limit);
    }
    Ok((ok, format!("max |lambda + alpha^2| / (1.01 |alpha| / R) = {worst:.4}")))
}

fn disk_normalization() -> Result<(bool, String)> {
    let mut worst: f64 = 0.0;
    for (a, r) in [(-0.25, 4.0), (-1.0, 1.0), (-4.0, 0.25), (-4.0, 4.0), (-16.0, 1.0)] {
        let k = solve_disk_exterior_2d(BoundaryParam(a), r, DEFAULT_TOL)?.k;
        let closed = 2.0 * PI * radial_norm_identity(k, r)?;
        let quad = 2.0
            * PI
            * integrate_to_infinity(
                |x| {
                    let v = bessel_k0(k * x).unwrap_or(0.0);
                    v * v * x
                },
                r,
                0.0,
                1e-12,
            )?;
        worst = worst.max(rel(quad, closed));
    }
    Ok((worst < 1e-8, format!("max relative deviation {worst:.3e}")))
}

fn geometry_gauss_bonnet() -> Result<(bool, String)> {
    let mut worst: f64 = 0.0;
    for c in curve_catalog()? {
        worst = worst.max((c.total_curvature(4096) - 2.0 * PI).abs());
    }
    Ok((worst < 1e-8, format!("max |int kappa ds - 2 pi| = {worst:.3e}")))
}

fn geometry_arclength_table() -> Result<(bool, String)> {
    let mut worst: f64 = 0.0;
    for c in curve_catalog()? {
        let last = *c.arclength_table().last().expect("non-empty table");
        worst = worst.max(rel(last, c.perimeter()));
    }
    Ok((worst < 1e-10, format!("max relative deviation {worst:.3e}")))
}

fn geometry_isoperimetric() -> Result<(bool, String)> {
    let mut ok = true;
    let mut detail = Vec::new();
    for c in curve_catalog()? {
        let d = isoperimetric_check(&c);
        let scale = c.perimeter().powi(2);
        let is_disk = matches!(c.spec(), crate::geometry::CurveSpec::Disk { .. });
        ok &= if is_disk { d.abs() < 1e-12 * scale } else { d > 1e-6 * scale };
        detail.push(format!("{:.2e}", d / scale));
    }
    Ok((ok, format!("relative defects [{}]", detail.join(", "))))
}

fn geometry_minkowski() -> Result<(bool, String)> {
    let sphere = Surface3D::sphere(1.3)?;
    let scale = sphere.total_mean_curvature.powi(2);
    let mut ok = sphere.minkowski_defect().abs() < 1e-14 * scale;
    for l in [1e-3, 0.5, 2.0, 10.0] {
        let s = surface_spherocylinder(1.0, l)?;
        let expected = PI * PI * l * l;
        let tol = 1e-12 * s.total_mean_curvature.powi(2);
        ok &= s.minkowski_defect() > 0.0 && (s.minkowski_defect() - expected).abs() < tol;
    }
    Ok((ok, format!("sphere defect {:.3e}", sphere.minkowski_defect())))
}

fn sl1d_disk_oracle() -> Result<(bool, String)> {
    let mut worst: f64 = 0.0;
    for (a, r) in [(-1.0, 1.0), (-4.0, 0.25), (-0.25, 4.0)] {
        let w = WeightPoly::disk(r)?;
        let t = auto_truncation(BoundaryParam(a), &w)?;
        let l = solve_halfline_extrapolated(BoundaryParam(a), w, t, 4096)?.lambda;
        worst = worst.max((l - disk_lambda(BoundaryParam(a), r)?).abs());
    }
    Ok((worst <= 1e-6, format!("max |delta lambda| {worst:.3e}")))
}

fn sl1d_ball_oracle() -> Result<(bool, String)> {
    let mut worst: f64 = 0.0;
    for (a, r) in [(-2.0, 1.0), (-3.0, 0.5), (-5.0, 2.0)] {
        let w = WeightPoly::sphere(r)?;
        let t = auto_truncation(BoundaryParam(a), &w)?;
        let l = solve_halfline_extrapolated(BoundaryParam(a), w, t, 4096)?.lambda;
        worst = worst.max((l - solve_ball_exterior_3d(BoundaryParam(a), r)?).abs());
    }
    Ok((worst <= 1e-6, format!("max |delta lambda| {worst:.3e}")))
}

fn sl1d_nested_refinement() -> Result<(bool, String)> {
    let w = WeightPoly::planar(2.0 * PI * 0.7)?;
    let a = BoundaryParam(-2.0);
    let t = auto_truncation(a, &w)?;
    let mut prev = f64::INFINITY;
    let mut violations = 0;
    for n in [32, 64, 128, 256, 512, 1024] {
        let l = solve_halfline(a, w, t, n)?.lambda;
        if l > prev {
            violations += 1;
        }
        prev = l;
    }
    Ok((violations == 0, format!("{violations} increases over 6 nested meshes")))
}

fn fem2d_disk_oracle() -> Result<(bool, String)> {
    // the disk ground state is radial, so a coarse s-resolution is exact
    let c = ConvexCurve::disk(1.0)?;
    let a = BoundaryParam(-1.0);
    let t = crate::fem2d::truncation_for(&c, a)?;
    let l = solve_exterior_with(&c, a, 8, 256, t)?.lambda;
    let d = (l - disk_lambda(a, 1.0)?).abs();
    Ok((d <= 1e-4, format!("|delta lambda| {d:.3e} at Nt = 256")))
}

fn fem2d_ground_state() -> Result<(bool, String)> {
    let c = ConvexCurve::ellipse(2.0, 1.0)?;
    let a = BoundaryParam(-1.0);
    let t = crate::fem2d::truncation_for(&c, a)?;
    let res = solve_exterior_with(&c, a, 32, 64, t)?;
    let positive = res.eigenvector.iter().all(|&v| v > 0.0);
    let above = res.lambda > -a.0 * a.0 * (1.0 + 1e-9);
    let below_disk = res.lambda < disk_lambda(a, c.perimeter() / (2.0 * PI))?;
    Ok((
        positive && above && below_disk,
        format!("lambda {:.10}, sign-definite {positive}", res.lambda),
    ))
}

fn asympt_disk_asymptote() -> Result<(bool, String)> {
    let mut violations = 0;
    for (a, r) in disk_grid() {
        let asym = AsymptoticModel::disk(r)?.eval(BoundaryParam(a));
        let exact = disk_lambda(BoundaryParam(a), r)?;
        if !(-a * a < exact && exact < asym) {
            violations += 1;
        }
    }
    Ok((violations == 0, format!("{violations} of 12 outside (-alpha^2, asymptote)")))
}

fn asympt_counterexamples() -> Result<(bool, String)> {
    let two = two_disks_2d(BoundaryParam(-50.0), 1.0)?;
    let hull = hull_3d(BoundaryParam(-100.0), 0.3, 1.0, 3)?;
    let wide = hull_3d(BoundaryParam(-100.0), 0.6, 1.0, 3)?;
    let ok = two.reversed_isoperimetric
        && two.reversed_isochoric
        && hull.reversed
        && hull.criterion
        && !wide.criterion;
    Ok((
        ok,
        format!(
            "two disks reversed ({}, {}), hull reversed {}, r < R/2 {}",
            two.reversed_isoperimetric, two.reversed_isochoric, hull.reversed, hull.criterion
        ),
    ))
}
