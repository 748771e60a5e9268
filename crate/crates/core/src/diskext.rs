//! The lowest Robin eigenvalue in the exterior of a disk (2D) and of a
//! ball (3D).
//!
//! In 2D the ground state is `K0(k r)` and `k` solves
//! `k K1(kR) + alpha K0(kR) = 0`; the eigenvalue is `-k^2`. The root is
//! bracketed by the two-sided bound `-alpha^2 < lambda < -alpha^2 - alpha/R`
//! and every evaluation uses `e^{kR}`-scaled Bessel values.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{require_positive, Error, Result};
use crate::specfun::k01_scaled;

/// Default tolerance on the scaled residual `|k K1(kR) + alpha K0(kR)| e^{kR}`.
pub const DEFAULT_TOL: f64 = 1e-12;

const MAX_NEWTON: usize = 100;

/// Robin coupling `alpha` (units of inverse length).
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BoundaryParam(pub f64);

impl BoundaryParam {
    pub fn get(self) -> f64 {
        self.0
    }

    /// Entry check for the 2D solvers: a discrete eigenvalue below the
    /// essential spectrum `[0, inf)` exists iff `alpha < 0`.
    pub(crate) fn require_attractive(self) -> Result<f64> {
        let a = self.0;
        if !a.is_finite() {
            return Err(Error::domain(format!("alpha must be finite, got {a}")));
        }
        if a >= 0.0 {
            return Err(Error::domain("no discrete eigenvalue for alpha ≥ 0"));
        }
        Ok(a)
    }
}

impl From<f64> for BoundaryParam {
    fn from(alpha: f64) -> Self {
        BoundaryParam(alpha)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiskSolution {
    pub radius: f64,
    pub alpha: BoundaryParam,
    /// Decay rate `k = sqrt(-lambda)`.
    pub k: f64,
    pub lambda: f64,
    /// Scaled residual of the implicit equation at `k`.
    pub residual: f64,
}

/// `(-alpha^2, -alpha^2 - alpha/R)`.
pub fn bounds_2d(alpha: BoundaryParam, radius: f64) -> Result<(f64, f64)> {
    let a = alpha.require_attractive()?;
    require_positive("R", radius)?;
    Ok((-a * a, -a * a - a / radius))
}

/// Scaled implicit function and the Newton step for it.
fn implicit_scaled(alpha: f64, radius: f64, k: f64) -> (f64, f64) {
    let x = k * radius;
    let (k0, k1) = k01_scaled(x);
    let g = k * k1 + alpha * k0;
    // d/dk [k K1(kR) + alpha K0(kR)] = -kR K0(kR) - alpha R K1(kR)
    let dg = -x * k0 - alpha * radius * k1;
    (g, dg)
}

pub fn solve_disk_exterior_2d(alpha: BoundaryParam, radius: f64, tol: f64) -> Result<DiskSolution> {
    let a = alpha.require_attractive()?;
    require_positive("R", radius)?;
    require_positive("tol", tol)?;

    let f = |k: f64| implicit_scaled(a, radius, k);

    let mut hi = -a;
    let ghi = f(hi).0;
    if !(ghi > 0.0) {
        return Err(Error::Internal(format!(
            "implicit equation not positive at the lower eigenvalue bound (k = {hi}, g = {ghi})"
        )));
    }

    let lo_sq = a * a + a / radius;
    let mut lo = if lo_sq > 0.0 {
        let lo = lo_sq.sqrt();
        let glo = f(lo).0;
        if !(glo < 0.0) {
            return Err(Error::Internal(format!(
                "implicit equation not negative at the upper eigenvalue bound (k = {lo}, g = {glo})"
            )));
        }
        lo
    } else {
        // weak coupling: k is exponentially small in 1/(|alpha| R)
        let mut k = hi;
        loop {
            let next = k / 16.0;
            if next < 1e-300 {
                return Err(Error::Solver(format!(
                    "decay rate below 1e-300 for alpha = {a}, R = {radius}; eigenvalue underflows"
                )));
            }
            if f(next).0 < 0.0 {
                break next;
            }
            hi = next;
            k = next;
        }
    };

    let width0 = hi - lo;
    while hi - lo > 1e-3 * width0 {
        let mid = 0.5 * (lo + hi);
        let g = f(mid).0;
        if g == 0.0 {
            lo = mid;
            hi = mid;
            break;
        }
        if g < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }

    let mut k = 0.5 * (lo + hi);
    for _ in 0..MAX_NEWTON {
        let (g, dg) = f(k);
        if g == 0.0 {
            break;
        }
        if g < 0.0 {
            lo = k;
        } else {
            hi = k;
        }
        let step = g / dg;
        let mut next = k - step;
        if !(next > lo && next < hi) {
            next = 0.5 * (lo + hi);
        }
        let moved = (next - k).abs();
        k = next;
        if moved <= 4.0 * f64::EPSILON * k {
            break;
        }
    }

    let residual = f(k).0.abs();
    if residual > tol {
        return Err(Error::Solver(format!(
            "implicit equation residual {residual:e} above tolerance {tol:e} (alpha = {a}, R = {radius})"
        )));
    }
    Ok(DiskSolution { radius, alpha, k, lambda: -k * k, residual })
}

/// Eigenvalue only, with the default tolerance.
pub fn disk_lambda(alpha: BoundaryParam, radius: f64) -> Result<f64> {
    solve_disk_exterior_2d(alpha, radius, DEFAULT_TOL).map(|s| s.lambda)
}

/// `d lambda / dR = -(2/R) lambda (lambda + alpha^2 + alpha/R) / (lambda + alpha^2)`.
pub fn dlambda_dr(alpha: BoundaryParam, radius: f64) -> Result<f64> {
    let sol = solve_disk_exterior_2d(alpha, radius, DEFAULT_TOL)?;
    Ok(dlambda_dr_from(&sol))
}

pub(crate) fn dlambda_dr_from(sol: &DiskSolution) -> f64 {
    let a = sol.alpha.0;
    let r = sol.radius;
    let l = sol.lambda;
    -(2.0 / r) * l * (l + a * a + a / r) / (l + a * a)
}

/// `d lambda / d alpha`: the squared boundary norm of the normalized ground
/// state, `2 pi R K0(kR)^2 / (pi R^2 [K1(kR)^2 - K0(kR)^2])`.
pub fn dlambda_dalpha_disk(alpha: BoundaryParam, radius: f64) -> Result<f64> {
    let sol = solve_disk_exterior_2d(alpha, radius, DEFAULT_TOL)?;
    Ok(dlambda_dalpha_from(&sol))
}

pub(crate) fn dlambda_dalpha_from(sol: &DiskSolution) -> f64 {
    let r = sol.radius;
    let (k0, k1) = k01_scaled(sol.k * r);
    2.0 * PI * r * k0 * k0 / (PI * r * r * (k1 * k1 - k0 * k0))
}

/// `2 pi int_R^inf K0(kr)^2 r dr` in closed form, scaled by `e^{2kR}`.
pub(crate) fn norm_squared_scaled(sol: &DiskSolution) -> f64 {
    let r = sol.radius;
    let (k0, k1) = k01_scaled(sol.k * r);
    PI * r * r * (k1 * k1 - k0 * k0)
}

/// Closed form `int_R^inf K0(kr)^2 r dr = (R^2/2)[K1(kR)^2 - K0(kR)^2]`.
pub fn radial_norm_identity(k: f64, radius: f64) -> Result<f64> {
    require_positive("k", k)?;
    require_positive("R", radius)?;
    let x = k * radius;
    let (k0, k1) = k01_scaled(x);
    let e = (-2.0 * x).exp();
    Ok(0.5 * radius * radius * (k1 * k1 - k0 * k0) * e)
}

/// Ground state `K0(k r)` normalized to unit `L^2` norm over the exterior.
pub fn eigenfunction_disk(sol: &DiskSolution, r: f64) -> Result<f64> {
    if !(r >= sol.radius) || !r.is_finite() {
        return Err(Error::domain(format!(
            "eigenfunction evaluated at r = {r} inside the disk of radius {}",
            sol.radius
        )));
    }
    let (k0r, _) = k01_scaled(sol.k * r);
    Ok(k0r * (-sol.k * (r - sol.radius)).exp() / norm_squared_scaled(sol).sqrt())
}

/// Radial derivative of [`eigenfunction_disk`].
pub fn eigenfunction_disk_derivative(sol: &DiskSolution, r: f64) -> Result<f64> {
    eigenfunction_disk(sol, r)?;
    let (_, k1r) = k01_scaled(sol.k * r);
    Ok(-sol.k * k1r * (-sol.k * (r - sol.radius)).exp() / norm_squared_scaled(sol).sqrt())
}

/// Lowest spectral point of the Robin Laplacian outside the ball `B_R` in
/// 3D. The radial ground state `e^{-kr}/r` gives `k = -alpha - 1/R`, so the
/// eigenvalue is `-(alpha + 1/R)^2` below the critical coupling `-1/R`,
/// and the bottom of the essential spectrum `0` otherwise.
pub fn solve_ball_exterior_3d(alpha: BoundaryParam, radius: f64) -> Result<f64> {
    let a = alpha.0;
    if !a.is_finite() {
        return Err(Error::domain(format!("alpha must be finite, got {a}")));
    }
    require_positive("R", radius)?;
    let k = -a - 1.0 / radius;
    Ok(if k > 0.0 { -k * k } else { 0.0 })
}

/// Critical coupling below which the ball exterior has a discrete eigenvalue.
pub fn ball_critical_alpha(radius: f64) -> Result<f64> {
    require_positive("R", radius)?;
    Ok(-1.0 / radius)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuantitativeGap {
    /// Radius of the disk with the same perimeter.
    pub r_perimeter: f64,
    /// Radius of the disk with the same area.
    pub r_area: f64,
    pub lambda_perimeter_disk: f64,
    pub lambda_area_disk: f64,
    /// Upper bound on the domain eigenvalue improving the isochoric one.
    pub bound: f64,
    /// `lambda(B_{R2}) - lambda(B_{R1}) >= 0`.
    pub gap: f64,
}

pub fn quantitative_gap(alpha: BoundaryParam, perimeter: f64, area: f64) -> Result<QuantitativeGap> {
    alpha.require_attractive()?;
    require_positive("perimeter", perimeter)?;
    require_positive("area", area)?;
    let r1 = perimeter / (2.0 * PI);
    let r2 = (area / PI).sqrt();
    // isoperimetric inequality L^2 >= 4 pi A, up to rounding
    if perimeter * perimeter < 4.0 * PI * area * (1.0 - 1e-12) {
        return Err(Error::domain(format!(
            "infeasible data: perimeter^2 = {} < 4 pi area = {}",
            perimeter * perimeter,
            4.0 * PI * area
        )));
    }
    let r2 = r2.min(r1);
    let l1 = disk_lambda(alpha, r1)?;
    let l2 = if r2 == r1 { l1 } else { disk_lambda(alpha, r2)? };
    let gap = l2 - l1;
    Ok(QuantitativeGap {
        r_perimeter: r1,
        r_area: r2,
        lambda_perimeter_disk: l1,
        lambda_area_disk: l2,
        bound: l2 - gap,
        gap,
    })
}
