//! Large-coupling models and the existence certificate for a negative
//! eigenvalue.
//!
//! For `alpha -> -inf` the lowest eigenvalue behaves like
//! `-alpha^2 - alpha * c + o(alpha)`, where `c` is a curvature coefficient of
//! the boundary. The remainder is unknown, so every quantity computed from
//! such a model is flagged as asymptotic and never mixed with exact values
//! without that flag.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::diskext::{disk_lambda, solve_ball_exterior_3d, BoundaryParam};
use crate::error::{require_positive, Error, Result};
use crate::geometry::{surface_spherocylinder, Surface3D};

/// Two-term large-coupling expansion `-alpha^2 - alpha * coefficient`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AsymptoticModel {
    pub dimension: u32,
    pub effective_curvature: f64,
}

impl AsymptoticModel {
    pub fn new(dimension: u32, effective_curvature: f64) -> Result<Self> {
        if !(dimension == 2 || dimension == 3) {
            return Err(Error::domain(format!("dimension must be 2 or 3, got {dimension}")));
        }
        require_positive("effective curvature", effective_curvature)?;
        Ok(AsymptoticModel { dimension, effective_curvature })
    }

    /// Disk of radius `r` (2D): coefficient `1/r`.
    pub fn disk(radius: f64) -> Result<Self> {
        require_positive("R", radius)?;
        Self::new(2, 1.0 / radius)
    }

    /// Ball of radius `r` in 3D: coefficient `(d-1)/r = 2/r`.
    pub fn ball(radius: f64) -> Result<Self> {
        require_positive("R", radius)?;
        Self::new(3, 2.0 / radius)
    }

    pub fn eval(&self, alpha: BoundaryParam) -> f64 {
        let a = alpha.0;
        -a * a - a * self.effective_curvature
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CutoffEnergy {
    pub n: f64,
    /// `2 pi / ln n + alpha |Sigma|`, an upper bound for the form on the
    /// logarithmic cutoff `u_n`.
    pub value: f64,
    pub negative: bool,
    /// `2 pi / (|alpha| |Sigma|)`: the form is negative once `ln n` exceeds it.
    pub threshold_log_n: f64,
    /// Smallest integer `n` with a negative value; `inf` when it exceeds
    /// the range of `f64`.
    pub threshold_n: f64,
}

/// Energy of `u_n(x) = 1` for `|x| < n`, `log(n^2/|x|) / log n` for
/// `n < |x| < n^2`, `0` beyond: `||grad u_n||^2 = 2 pi / ln n` and the
/// boundary term is `alpha |Sigma|` once `n` exceeds the diameter.
pub fn log_cutoff_energy(n: f64, alpha: BoundaryParam, perimeter: f64) -> Result<CutoffEnergy> {
    if !(n >= 2.0) {
        return Err(Error::domain(format!("n must be at least 2, got {n}")));
    }
    let a = alpha.require_attractive()?;
    require_positive("perimeter", perimeter)?;
    let value = 2.0 * PI / n.ln() + a * perimeter;
    let threshold_log_n = 2.0 * PI / (-a * perimeter);
    let mut threshold_n = threshold_log_n.exp().ceil().max(2.0);
    if threshold_n.is_finite() && 2.0 * PI / threshold_n.ln() + a * perimeter >= 0.0 {
        threshold_n += 1.0;
    }
    Ok(CutoffEnergy { n, value, negative: value < 0.0, threshold_log_n, threshold_n })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TwoDiskReport {
    pub alpha: f64,
    pub r3: f64,
    /// Radius of the disk with the perimeter of the union, `2 r3`.
    pub r_isoperimetric: f64,
    /// Radius of the disk with the area of the union, `sqrt(2) r3`.
    pub r_isochoric: f64,
    /// `-alpha^2 - alpha / r3`, the union's two-term expansion.
    pub lambda_union_asymptotic: f64,
    pub lambda_isoperimetric_disk: f64,
    pub lambda_isochoric_disk: f64,
    pub reversed_isoperimetric: bool,
    pub reversed_isochoric: bool,
    /// Verdicts compare exact disk values with an asymptotic expansion.
    pub asymptotic: bool,
}

/// Two disjoint disks of radius `r3` against the disks of equal perimeter
/// and equal area.
pub fn two_disks_2d(alpha: BoundaryParam, r3: f64) -> Result<TwoDiskReport> {
    let a = alpha.require_attractive()?;
    require_positive("r3", r3)?;
    let r1 = 2.0 * r3;
    let r2 = 2f64.sqrt() * r3;
    let union = AsymptoticModel::disk(r3)?.eval(alpha);
    let l1 = disk_lambda(alpha, r1)?;
    let l2 = disk_lambda(alpha, r2)?;
    Ok(TwoDiskReport {
        alpha: a,
        r3,
        r_isoperimetric: r1,
        r_isochoric: r2,
        lambda_union_asymptotic: union,
        lambda_isoperimetric_disk: l1,
        lambda_isochoric_disk: l2,
        reversed_isoperimetric: l1 < union,
        reversed_isochoric: l2 < union,
        asymptotic: true,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Crossover {
    /// Coupling where the verdict flips, if one was found in the window.
    pub alpha: Option<f64>,
    pub window: (f64, f64),
    /// Verdict at the weak end of the window.
    pub reversed_at_weak_end: bool,
    /// Verdict at the strong end of the window.
    pub reversed_at_strong_end: bool,
    pub asymptotic: bool,
}

/// Searches `[alpha_strong, alpha_weak]` (both negative) for a coupling
/// where both two-disk inequalities switch from holding to reversed, by
/// bisection on the verdict.
pub fn two_disks_crossover(r3: f64, alpha_strong: f64, alpha_weak: f64) -> Result<Crossover> {
    if !(alpha_strong < alpha_weak && alpha_weak < 0.0) {
        return Err(Error::domain(format!(
            "need alpha_strong < alpha_weak < 0, got [{alpha_strong}, {alpha_weak}]"
        )));
    }
    let reversed = |a: f64| -> Result<bool> {
        let r = two_disks_2d(BoundaryParam(a), r3)?;
        Ok(r.reversed_isoperimetric && r.reversed_isochoric)
    };
    let at_weak = reversed(alpha_weak)?;
    let at_strong = reversed(alpha_strong)?;
    let mut found = None;
    if at_weak != at_strong {
        let (mut lo, mut hi) = (alpha_strong, alpha_weak);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if reversed(mid)? == at_strong {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        found = Some(0.5 * (lo + hi));
    }
    Ok(Crossover {
        alpha: found,
        window: (alpha_strong, alpha_weak),
        reversed_at_weak_end: at_weak,
        reversed_at_strong_end: at_strong,
        asymptotic: true,
    })
}

/// Constraint used to size the convex hull against the ball.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HullConstraint {
    SurfaceArea,
    Volume,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HullMatch {
    pub constraint: HullConstraint,
    /// Distance of the two ball centers.
    pub axis_length: f64,
    pub surface: Surface3D,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HullReport {
    pub alpha: f64,
    pub r: f64,
    pub big_r: f64,
    pub dimension: u32,
    /// `-alpha^2 - alpha (d-2)/r`.
    pub lambda_hull_asymptotic: f64,
    /// `-alpha^2 - alpha (d-1)/R`.
    pub lambda_ball_asymptotic: f64,
    /// Exact ball-exterior value `-(alpha + 1/R)^2` (or `0`).
    pub lambda_ball_exact: f64,
    /// `r < (d-2)/(d-1) R`.
    pub criterion: bool,
    /// Ball asymptote below the hull asymptote.
    pub reversed: bool,
    pub area_match: HullMatch,
    pub volume_match: HullMatch,
    pub asymptotic: bool,
}

/// Axis length making the spherocylinder of radius `r` match the ball of
/// radius `big_r` in area or volume.
pub fn match_hull(r: f64, big_r: f64, constraint: HullConstraint) -> Result<HullMatch> {
    require_positive("r", r)?;
    require_positive("R", big_r)?;
    let axis_length = match constraint {
        // 4 pi r^2 + 2 pi r L = 4 pi R^2
        HullConstraint::SurfaceArea => 2.0 * (big_r * big_r - r * r) / r,
        // 4/3 pi r^3 + pi r^2 L = 4/3 pi R^3
        HullConstraint::Volume => 4.0 * (big_r.powi(3) - r.powi(3)) / (3.0 * r * r),
    };
    if axis_length < 0.0 {
        return Err(Error::domain(format!(
            "constraint infeasible: no axis length >= 0 matches {constraint:?} for r = {r} > R = {big_r}"
        )));
    }
    Ok(HullMatch { constraint, axis_length, surface: surface_spherocylinder(r, axis_length)? })
}

/// Convex hull of two balls of radius `r` against the ball of radius `R`
/// in dimension `d` (only `d = 3` is supported).
pub fn hull_3d(alpha: BoundaryParam, r: f64, big_r: f64, dimension: u32) -> Result<HullReport> {
    let a = alpha.require_attractive()?;
    if dimension != 3 {
        return Err(Error::domain(format!("hull model implemented for d = 3 only, got {dimension}")));
    }
    require_positive("r", r)?;
    require_positive("R", big_r)?;
    let d = dimension as f64;
    let hull = AsymptoticModel::new(3, (d - 2.0) / r)?.eval(alpha);
    let ball = AsymptoticModel::new(3, (d - 1.0) / big_r)?.eval(alpha);
    Ok(HullReport {
        alpha: a,
        r,
        big_r,
        dimension,
        lambda_hull_asymptotic: hull,
        lambda_ball_asymptotic: ball,
        lambda_ball_exact: solve_ball_exterior_3d(alpha, big_r)?,
        criterion: r < (d - 2.0) / (d - 1.0) * big_r,
        reversed: ball < hull,
        area_match: match_hull(r, big_r, HullConstraint::SurfaceArea)?,
        volume_match: match_hull(r, big_r, HullConstraint::Volume)?,
        asymptotic: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cutoff_certifies_negativity() {
        let e = log_cutoff_energy(10.0, BoundaryParam(-1.0), 2.0 * PI).unwrap();
        assert!((e.value - (2.0 * PI / 10f64.ln() - 2.0 * PI)).abs() < 1e-14);
        assert!(e.negative);
    }

    #[test]
    fn cutoff_threshold_overflows_gracefully() {
        let e = log_cutoff_energy(1e6, BoundaryParam(-0.01), 0.1).unwrap();
        assert!((e.threshold_log_n - 2.0 * PI / 1e-3).abs() < 1e-9);
        assert!(e.threshold_n.is_infinite());
        assert!(!e.negative);
    }

    #[test]
    fn cutoff_threshold_is_smallest() {
        let alpha = BoundaryParam(-0.5);
        let e = log_cutoff_energy(2.0, alpha, 2.0).unwrap();
        let n = e.threshold_n;
        assert!(log_cutoff_energy(n, alpha, 2.0).unwrap().negative);
        if n > 2.0 {
            assert!(!log_cutoff_energy(n - 1.0, alpha, 2.0).unwrap().negative);
        }
    }

    #[test]
    fn cutoff_limit() {
        let e = log_cutoff_energy(1e300, BoundaryParam(-1.0), 3.0).unwrap();
        assert!((e.value + 3.0).abs() < 0.01);
        assert!(log_cutoff_energy(1.5, BoundaryParam(-1.0), 3.0).is_err());
    }

    #[test]
    fn radii_relations() {
        let r = two_disks_2d(BoundaryParam(-3.0), 0.7).unwrap();
        assert!((2.0 * 2.0 * PI * 0.7 - 2.0 * PI * r.r_isoperimetric).abs() < 1e-14);
        assert!((2.0 * PI * 0.49 - PI * r.r_isochoric.powi(2)).abs() < 1e-14);
    }

    #[test]
    fn hull_area_matching() {
        let m = match_hull(0.3, 1.0, HullConstraint::SurfaceArea).unwrap();
        assert!((m.surface.area - 4.0 * PI).abs() < 1e-12);
        let v = match_hull(0.3, 1.0, HullConstraint::Volume).unwrap();
        assert!((v.surface.volume - 4.0 / 3.0 * PI).abs() < 1e-12);
        assert!(match_hull(1.2, 1.0, HullConstraint::Volume).unwrap_err().is_domain());
    }
}
