//! Half-line Sturm–Liouville problem with a polynomial weight.
//!
//! Minimizes
//!
//! ```text
//!   [ int_0^inf psi'^2 w dt + alpha w(0) psi(0)^2 ] / int_0^inf psi^2 w dt
//! ```
//!
//! for `w(t) = a + b t + c t^2`. With `w = |Sigma| + 2 pi t` this is the
//! quotient of test functions constant along curves parallel to a planar
//! boundary; with `w = |Sigma| + 2 M t + 4 pi t^2` the analogue for a
//! convex surface. Both are upper bounds for the exterior eigenvalue.
//!
//! The interval is truncated at `T` with a free end and discretized by
//! continuous piecewise-linear elements on a graded mesh. The smallest
//! eigenvalue of the resulting symmetric-definite tridiagonal pencil is
//! found by bisection on the Sturm count; the vector by inverse iteration.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::diskext::BoundaryParam;
use crate::error::{require_positive, Error, Result};
use crate::geometry::Surface3D;

/// Element growth ratio of the graded mesh at `n = GRADING_REFERENCE_N`.
pub const GRADING_RATIO: f64 = 1.05;
pub const GRADING_REFERENCE_N: usize = 64;
/// Truncation length in units of the decay length `1/k`.
pub const DECAY_LENGTHS: f64 = 15.0;

/// `w(t) = a + b t + c t^2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WeightPoly {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl WeightPoly {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        let w = WeightPoly { a, b, c };
        w.validate()?;
        Ok(w)
    }

    /// Weight of the planar reduction for a boundary of length `perimeter`.
    pub fn planar(perimeter: f64) -> Result<Self> {
        Self::new(perimeter, 2.0 * PI, 0.0)
    }

    /// Disk of radius `r`: `2 pi (r + t)`.
    pub fn disk(radius: f64) -> Result<Self> {
        Self::planar(2.0 * PI * radius)
    }

    /// Weight of the 3D reduction: `|Sigma| + 2 M t + 4 pi t^2`.
    pub fn surface(surf: &Surface3D) -> Result<Self> {
        Self::new(surf.area, 2.0 * surf.total_mean_curvature, 4.0 * PI)
    }

    /// Sphere of radius `r`: `4 pi (r + t)^2`.
    pub fn sphere(radius: f64) -> Result<Self> {
        Self::new(4.0 * PI * radius * radius, 8.0 * PI * radius, 4.0 * PI)
    }

    fn validate(&self) -> Result<()> {
        let finite = self.a.is_finite() && self.b.is_finite() && self.c.is_finite();
        if !finite || !(self.a > 0.0) || self.b < 0.0 || self.c < 0.0 {
            return Err(Error::domain(format!(
                "degenerate weight a = {}, b = {}, c = {}: need a > 0, b >= 0, c >= 0",
                self.a, self.b, self.c
            )));
        }
        Ok(())
    }

    pub fn eval(&self, t: f64) -> f64 {
        self.a + t * (self.b + t * self.c)
    }

    /// `int_t0^t1 w`.
    fn integral(&self, t0: f64, t1: f64) -> f64 {
        let p = |t: f64| t * (self.a + t * (0.5 * self.b + t * self.c / 3.0));
        p(t1) - p(t0)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EigenResult {
    pub lambda: f64,
    /// Nodal values, normalized to unit discrete weighted norm, first entry
    /// positive.
    pub vector: Vec<f64>,
    pub nodes: Vec<f64>,
    /// Truncation length.
    pub truncation: f64,
    /// Number of elements.
    pub n: usize,
    /// `||(A - lambda B) x||_inf / ||B x||_inf`.
    pub residual: f64,
}

/// Nodes `t_i = T (e^{beta i/n} - 1) / (e^beta - 1)` with `beta` fixed, so
/// that doubling `n` nests the meshes.
pub fn graded_mesh(truncation: f64, n: usize) -> Vec<f64> {
    let beta = GRADING_REFERENCE_N as f64 * GRADING_RATIO.ln();
    let denom = beta.exp_m1();
    let mut nodes: Vec<f64> = (0..=n)
        .map(|i| truncation * (beta * i as f64 / n as f64).exp_m1() / denom)
        .collect();
    nodes[n] = truncation;
    nodes
}

/// Symmetric tridiagonal matrix.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Tridiagonal {
    pub diag: Vec<f64>,
    pub off: Vec<f64>,
}

impl Tridiagonal {
    fn zeros(n: usize) -> Self {
        Tridiagonal { diag: vec![0.0; n], off: vec![0.0; n - 1] }
    }

    fn mul(&self, x: &[f64]) -> Vec<f64> {
        let n = self.diag.len();
        (0..n)
            .map(|i| {
                let mut v = self.diag[i] * x[i];
                if i > 0 {
                    v += self.off[i - 1] * x[i - 1];
                }
                if i + 1 < n {
                    v += self.off[i] * x[i + 1];
                }
                v
            })
            .collect()
    }
}

/// Stiffness and mass matrices on the given nodes.
pub(crate) fn assemble(alpha: f64, w: &WeightPoly, nodes: &[f64]) -> (Tridiagonal, Tridiagonal) {
    // 3-point Gauss on [0, 1]: exact for phi_i phi_j w (degree 4)
    let gx = [0.5 - 0.5 * (0.6f64).sqrt(), 0.5, 0.5 + 0.5 * (0.6f64).sqrt()];
    let gw = [5.0 / 18.0, 8.0 / 18.0, 5.0 / 18.0];
    let n_nodes = nodes.len();
    let mut stiff = Tridiagonal::zeros(n_nodes);
    let mut mass = Tridiagonal::zeros(n_nodes);
    for e in 0..n_nodes - 1 {
        let (t0, t1) = (nodes[e], nodes[e + 1]);
        let h = t1 - t0;
        let k = w.integral(t0, t1) / (h * h);
        stiff.diag[e] += k;
        stiff.diag[e + 1] += k;
        stiff.off[e] -= k;
        let (mut m00, mut m01, mut m11) = (0.0, 0.0, 0.0);
        for (x, wt) in gx.iter().zip(gw) {
            let ww = wt * h * w.eval(t0 + x * h);
            let (p0, p1) = (1.0 - x, *x);
            m00 += ww * p0 * p0;
            m01 += ww * p0 * p1;
            m11 += ww * p1 * p1;
        }
        mass.diag[e] += m00;
        mass.diag[e + 1] += m11;
        mass.off[e] += m01;
    }
    stiff.diag[0] += alpha * w.a;
    (stiff, mass)
}

/// Number of eigenvalues of the pencil `(A, B)` below `sigma`, i.e. the
/// number of negative pivots of `A - sigma B`.
pub(crate) fn sturm_count(a: &Tridiagonal, b: &Tridiagonal, sigma: f64) -> usize {
    let n = a.diag.len();
    let mut count = 0;
    let mut d = a.diag[0] - sigma * b.diag[0];
    for i in 0..n {
        if i > 0 {
            let e = a.off[i - 1] - sigma * b.off[i - 1];
            let prev = if d == 0.0 { f64::MIN_POSITIVE } else { d };
            d = a.diag[i] - sigma * b.diag[i] - e * e / prev;
        }
        if d < 0.0 {
            count += 1;
        }
    }
    count
}

/// Solves `(A - sigma B) x = rhs` by symmetric tridiagonal elimination.
fn solve_shifted(a: &Tridiagonal, b: &Tridiagonal, sigma: f64, rhs: &[f64]) -> Vec<f64> {
    let n = a.diag.len();
    let mut d = vec![0.0; n];
    let mut l = vec![0.0; n];
    let mut y = rhs.to_vec();
    d[0] = a.diag[0] - sigma * b.diag[0];
    for i in 1..n {
        let e = a.off[i - 1] - sigma * b.off[i - 1];
        let prev = if d[i - 1] == 0.0 { f64::MIN_POSITIVE } else { d[i - 1] };
        l[i] = e / prev;
        d[i] = a.diag[i] - sigma * b.diag[i] - l[i] * e;
        y[i] -= l[i] * y[i - 1];
    }
    let mut x = vec![0.0; n];
    x[n - 1] = y[n - 1] / d[n - 1];
    for i in (0..n - 1).rev() {
        x[i] = y[i] / d[i] - l[i + 1] * x[i + 1];
    }
    x
}

fn dot(x: &[f64], y: &[f64]) -> f64 {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

/// Smallest eigenpair of the pencil. `lower` must lie below the spectrum.
pub(crate) fn smallest_eigenpair(
    a: &Tridiagonal,
    b: &Tridiagonal,
    lower: f64,
    upper: f64,
) -> Result<(f64, Vec<f64>, f64)> {
    let mut lo = lower;
    let mut guard = 0;
    while sturm_count(a, b, lo) > 0 {
        lo = 2.0 * lo - 1.0;
        guard += 1;
        if guard > 200 {
            return Err(Error::Solver("no lower bound for the spectrum found".into()));
        }
    }
    let mut hi = upper;
    if sturm_count(a, b, hi) == 0 {
        return Err(Error::Solver(format!(
            "discrete problem has no eigenvalue below {upper}"
        )));
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if sturm_count(a, b, mid) == 0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let lambda = 0.5 * (lo + hi);

    // A - lo B is positive definite and nearly singular: two steps suffice
    let n = a.diag.len();
    let mut x = vec![1.0; n];
    for _ in 0..3 {
        let bx = b.mul(&x);
        x = solve_shifted(a, b, lo, &bx);
        let norm = dot(&x, &b.mul(&x)).sqrt();
        x.iter_mut().for_each(|v| *v /= norm);
    }
    if x[0] < 0.0 {
        x.iter_mut().for_each(|v| *v = -*v);
    }
    let ax = a.mul(&x);
    let bx = b.mul(&x);
    let res = ax
        .iter()
        .zip(&bx)
        .map(|(p, q)| (p - lambda * q).abs())
        .fold(0.0, f64::max);
    let scale = bx.iter().map(|v| (lambda * v).abs()).fold(0.0, f64::max);
    Ok((lambda, x, res / scale))
}

pub fn solve_halfline(alpha: BoundaryParam, w: WeightPoly, truncation: f64, n: usize) -> Result<EigenResult> {
    let a = alpha.require_attractive()?;
    w.validate()?;
    require_positive("T", truncation)?;
    if n < 16 {
        return Err(Error::domain(format!("need at least 16 elements, got {n}")));
    }
    let nodes = graded_mesh(truncation, n);
    let (stiff, mass) = assemble(a, &w, &nodes);
    let (lambda, vector, residual) = smallest_eigenpair(&stiff, &mass, -2.0 * a * a - 1.0, 0.0)?;
    Ok(EigenResult { lambda, vector, nodes, truncation, n, residual })
}

/// Truncation from the disk bracket: `T = 15 / k0` with `k0` the midpoint
/// of `(sqrt(max(0, alpha^2 + alpha/R)), |alpha|)` and `R = w(0) / (2 pi)`.
pub fn truncation_rule(alpha: BoundaryParam, w: &WeightPoly) -> Result<f64> {
    let a = alpha.require_attractive()?;
    w.validate()?;
    let r = w.a / (2.0 * PI);
    let lo = (a * a + a / r).max(0.0).sqrt();
    let k0 = 0.5 * (lo - a);
    Ok(DECAY_LENGTHS / k0)
}

/// [`truncation_rule`], lengthened until `sqrt|lambda| T >= 15` holds for
/// the computed eigenvalue.
pub fn auto_truncation(alpha: BoundaryParam, w: &WeightPoly) -> Result<f64> {
    let mut t = truncation_rule(alpha, w)?;
    for _ in 0..8 {
        let lambda = solve_halfline(alpha, *w, t, 256)?.lambda;
        let k = (-lambda).sqrt();
        if k * t >= DECAY_LENGTHS {
            return Ok(t);
        }
        if !(k > 0.0) {
            return Err(Error::Solver("eigenvalue of the reduced problem is not negative".into()));
        }
        t = (DECAY_LENGTHS + 1.0) / k;
    }
    Ok(t)
}

/// Richardson extrapolation of the eigenvalue over `n / 2` and `n`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Extrapolated {
    pub lambda: f64,
    pub coarse: f64,
    pub fine: f64,
    pub truncation: f64,
    pub n: usize,
}

pub fn solve_halfline_extrapolated(
    alpha: BoundaryParam,
    w: WeightPoly,
    truncation: f64,
    n: usize,
) -> Result<Extrapolated> {
    let coarse = solve_halfline(alpha, w, truncation, n / 2)?.lambda;
    let fine = solve_halfline(alpha, w, truncation, n)?.lambda;
    Ok(Extrapolated {
        lambda: fine + (fine - coarse) / 3.0,
        coarse,
        fine,
        truncation,
        n,
    })
}

/// Default resolution used by the reduced bounds.
pub const REDUCED_N: usize = 4096;

/// Reduced planar bound. It coincides with the disk-exterior eigenvalue
/// for the disk of the same perimeter.
pub fn reduced_bound_2d(alpha: BoundaryParam, perimeter: f64) -> Result<f64> {
    require_positive("perimeter", perimeter)?;
    let w = WeightPoly::planar(perimeter)?;
    let t = auto_truncation(alpha, &w)?;
    Ok(solve_halfline_extrapolated(alpha, w, t, REDUCED_N)?.lambda)
}

/// Reduced 3D bound from the area and total mean curvature of a convex
/// surface.
pub fn reduced_bound_3d(alpha: BoundaryParam, surf: &Surface3D) -> Result<f64> {
    let defect = surf.minkowski_defect();
    if defect < -1e-12 * surf.total_mean_curvature.powi(2) {
        return Err(Error::domain(format!(
            "surface data violate M^2 >= 4 pi |Sigma| (defect {defect:e})"
        )));
    }
    let w = WeightPoly::surface(surf)?;
    let t = auto_truncation(alpha, &w)?;
    Ok(solve_halfline_extrapolated(alpha, w, t, REDUCED_N)?.lambda)
}
