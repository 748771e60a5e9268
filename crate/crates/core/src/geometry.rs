//! Smooth strictly convex curves given by their support function, and a
//! small catalog of convex surfaces.
//!
//! A curve is parametrized by the angle `theta` of its outer normal. With
//! `h(theta)` the support function, the radius of curvature is
//! `rho = h + h''`, arc length is `ds = rho dtheta` and the curvature is
//! `1 / rho`. Curvature is stored with the geometric sign (non-negative for
//! convex curves); the outer-normal convention `kappa = -kappa_g` is never
//! materialized. Downstream Jacobians are `1 + kappa_g t`.
//!
//! Samples of `h` on a uniform grid are turned into a trigonometric series
//! with an FFT; derivatives, arc length and the inverse map `s -> theta`
//! are evaluated from that series.

use std::f64::consts::PI;
use std::fmt;

use rustfft::num_complex::Complex;
use rustfft::FftPlanner;
use serde::{Deserialize, Serialize};

use crate::error::{require_positive, Error, Result};
use crate::quadrature::integrate;

pub const DEFAULT_N_THETA: usize = 2048;

/// Real trigonometric series `c0 + sum_m (a_m cos m t + b_m sin m t)`.
#[derive(Debug, Clone, PartialEq)]
struct TrigSeries {
    c0: f64,
    cos: Vec<f64>,
    sin: Vec<f64>,
}

impl TrigSeries {
    fn from_samples(samples: &[f64]) -> Self {
        let n = samples.len();
        let mut buf: Vec<Complex<f64>> = samples.iter().map(|&v| Complex::new(v, 0.0)).collect();
        FftPlanner::new().plan_fft_forward(n).process(&mut buf);
        let scale = 1.0 / n as f64;
        let c0 = buf[0].re * scale;
        // the Nyquist mode is dropped; it is noise for the smooth inputs we accept
        let modes = (n - 1) / 2;
        let mut cos = Vec::with_capacity(modes);
        let mut sin = Vec::with_capacity(modes);
        for c in &buf[1..=modes] {
            cos.push(2.0 * c.re * scale);
            sin.push(-2.0 * c.im * scale);
        }
        let mut s = TrigSeries { c0, cos, sin };
        s.trim();
        s
    }

    /// Drops trailing modes at rounding level so differentiation does not
    /// amplify them.
    fn trim(&mut self) {
        let total = self.c0.abs()
            + self.cos.iter().map(|c| c.abs()).sum::<f64>()
            + self.sin.iter().map(|c| c.abs()).sum::<f64>();
        let cut = 8.0 * f64::EPSILON * total;
        let mut keep = self.cos.len();
        while keep > 0 && self.cos[keep - 1].abs() <= cut && self.sin[keep - 1].abs() <= cut {
            keep -= 1;
        }
        self.cos.truncate(keep);
        self.sin.truncate(keep);
    }

    fn eval(&self, t: f64) -> f64 {
        let mut v = self.c0;
        for (i, (a, b)) in self.cos.iter().zip(&self.sin).enumerate() {
            let m = (i + 1) as f64;
            let (s, c) = (m * t).sin_cos();
            v += a * c + b * s;
        }
        v
    }

    /// Series of `f + f''`.
    fn plus_second_derivative(&self) -> Self {
        let factor = |i: usize| {
            let m = (i + 1) as f64;
            1.0 - m * m
        };
        TrigSeries {
            c0: self.c0,
            cos: self.cos.iter().enumerate().map(|(i, a)| a * factor(i)).collect(),
            sin: self.sin.iter().enumerate().map(|(i, b)| b * factor(i)).collect(),
        }
    }

    fn derivative(&self) -> Self {
        TrigSeries {
            c0: 0.0,
            cos: self.sin.iter().enumerate().map(|(i, b)| b * (i + 1) as f64).collect(),
            sin: self.cos.iter().enumerate().map(|(i, a)| -a * (i + 1) as f64).collect(),
        }
    }

    /// `int_0^t f` for a series with mean `c0`.
    fn integral_from_zero(&self, t: f64) -> f64 {
        let mut v = self.c0 * t;
        for (i, (a, b)) in self.cos.iter().zip(&self.sin).enumerate() {
            let m = (i + 1) as f64;
            let (s, c) = (m * t).sin_cos();
            v += a * s / m + b * (1.0 - c) / m;
        }
        v
    }
}

/// How a catalog curve was specified; kept for reporting.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "kebab-case")]
pub enum CurveSpec {
    Disk {
        #[serde(alias = "R")]
        radius: f64,
    },
    Ellipse { a: f64, b: f64 },
    /// `h(theta) = coeffs[0] + sum_{n>=1} coeffs[n] cos(n theta)`.
    SupportPoly { coeffs: Vec<f64> },
    Samples,
}

impl fmt::Display for CurveSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveSpec::Disk { radius } => write!(f, "disk(R={radius})"),
            CurveSpec::Ellipse { a, b } => write!(f, "ellipse(a={a},b={b})"),
            CurveSpec::SupportPoly { coeffs } => {
                let list: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
                write!(f, "support-poly({})", list.join(","))
            }
            CurveSpec::Samples => write!(f, "sampled"),
        }
    }
}

/// A smooth strictly convex closed curve.
#[derive(Debug, Clone)]
pub struct ConvexCurve {
    spec: CurveSpec,
    support: TrigSeries,
    rho: TrigSeries,
    theta: Vec<f64>,
    /// `h` at the grid nodes.
    support_nodes: Vec<f64>,
    /// `rho = h + h''` at the grid nodes.
    rho_nodes: Vec<f64>,
    /// Cumulative arc length at the nodes, with `L` appended.
    arclength: Vec<f64>,
    perimeter: f64,
    area: f64,
}

impl ConvexCurve {
    /// Builds the curve from a support function sampled at `n_theta`
    /// uniformly spaced normal angles.
    pub fn from_support<F: Fn(f64) -> f64>(h: F, n_theta: usize) -> Result<Self> {
        if n_theta < 16 {
            return Err(Error::domain(format!("n_theta must be at least 16, got {n_theta}")));
        }
        let samples: Vec<f64> = (0..n_theta)
            .map(|j| h(2.0 * PI * j as f64 / n_theta as f64))
            .collect();
        Self::from_samples(samples, CurveSpec::Samples)
    }

    fn from_samples(samples: Vec<f64>, spec: CurveSpec) -> Result<Self> {
        let n = samples.len();
        if let Some(bad) = samples.iter().find(|v| !v.is_finite()) {
            return Err(Error::domain(format!("support function sample {bad} is not finite")));
        }
        let support = TrigSeries::from_samples(&samples);
        let rho = support.plus_second_derivative();
        let theta: Vec<f64> = (0..n).map(|j| 2.0 * PI * j as f64 / n as f64).collect();
        let rho_nodes: Vec<f64> = theta.iter().map(|&t| rho.eval(t)).collect();
        for (&t, &r) in theta.iter().zip(&rho_nodes) {
            if !(r > 0.0) {
                return Err(Error::NotConvex { theta: t, rho: r });
            }
        }
        let perimeter = 2.0 * PI * rho.c0;
        let mut arclength: Vec<f64> = theta.iter().map(|&t| rho.integral_from_zero(t)).collect();
        arclength.push(rho.integral_from_zero(2.0 * PI));
        let dtheta = 2.0 * PI / n as f64;
        let area = 0.5 * dtheta * samples.iter().zip(&rho_nodes).map(|(h, r)| h * r).sum::<f64>();
        Ok(ConvexCurve {
            spec,
            support,
            rho,
            theta,
            support_nodes: samples,
            rho_nodes,
            arclength,
            perimeter,
            area,
        })
    }

    pub fn disk(radius: f64) -> Result<Self> {
        Self::disk_with(radius, DEFAULT_N_THETA)
    }

    pub fn disk_with(radius: f64, n_theta: usize) -> Result<Self> {
        require_positive("R", radius)?;
        let mut c = Self::from_support(|_| radius, n_theta)?;
        c.spec = CurveSpec::Disk { radius };
        Ok(c)
    }

    /// Ellipse with semi-axes `a` (along x) and `b`:
    /// `h(theta) = sqrt(a^2 cos^2 theta + b^2 sin^2 theta)`.
    pub fn ellipse(a: f64, b: f64) -> Result<Self> {
        Self::ellipse_with(a, b, DEFAULT_N_THETA)
    }

    pub fn ellipse_with(a: f64, b: f64, n_theta: usize) -> Result<Self> {
        require_positive("a", a)?;
        require_positive("b", b)?;
        let mut c = Self::from_support(
            |t: f64| (a * a * t.cos().powi(2) + b * b * t.sin().powi(2)).sqrt(),
            n_theta,
        )?;
        c.spec = CurveSpec::Ellipse { a, b };
        Ok(c)
    }

    /// Truncated cosine series `h = c0 + sum c_n cos(n theta)`.
    pub fn support_poly(coeffs: &[f64]) -> Result<Self> {
        Self::support_poly_with(coeffs, DEFAULT_N_THETA)
    }

    pub fn support_poly_with(coeffs: &[f64], n_theta: usize) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::domain("support-poly needs at least one coefficient"));
        }
        if 2 * coeffs.len() >= n_theta {
            return Err(Error::domain("too many support coefficients for the angular grid"));
        }
        let owned = coeffs.to_vec();
        let mut c = Self::from_support(
            |t| {
                owned
                    .iter()
                    .enumerate()
                    .map(|(n, c)| c * (n as f64 * t).cos())
                    .sum()
            },
            n_theta,
        )?;
        c.spec = CurveSpec::SupportPoly { coeffs: coeffs.to_vec() };
        Ok(c)
    }

    /// Builds a catalog curve. `Samples` carries no data and is rejected.
    pub fn from_spec(spec: &CurveSpec) -> Result<Self> {
        match spec {
            CurveSpec::Disk { radius } => Self::disk(*radius),
            CurveSpec::Ellipse { a, b } => Self::ellipse(*a, *b),
            CurveSpec::SupportPoly { coeffs } => Self::support_poly(coeffs),
            CurveSpec::Samples => Err(Error::domain("a sampled curve cannot be rebuilt from its spec")),
        }
    }

    /// Rescales the curve by `factor` (support function multiplied).
    pub fn scaled(&self, factor: f64) -> Result<Self> {
        require_positive("scale factor", factor)?;
        let samples = self.support_nodes.iter().map(|h| h * factor).collect();
        let spec = match &self.spec {
            CurveSpec::Disk { radius } => CurveSpec::Disk { radius: radius * factor },
            CurveSpec::Ellipse { a, b } => CurveSpec::Ellipse { a: a * factor, b: b * factor },
            CurveSpec::SupportPoly { coeffs } => CurveSpec::SupportPoly {
                coeffs: coeffs.iter().map(|c| c * factor).collect(),
            },
            CurveSpec::Samples => CurveSpec::Samples,
        };
        Self::from_samples(samples, spec)
    }

    pub fn spec(&self) -> &CurveSpec {
        &self.spec
    }

    pub fn n_theta(&self) -> usize {
        self.theta.len()
    }

    pub fn perimeter(&self) -> f64 {
        self.perimeter
    }

    pub fn area(&self) -> f64 {
        self.area
    }

    pub fn theta_nodes(&self) -> &[f64] {
        &self.theta
    }

    /// Radius of curvature `h + h''` at the grid nodes.
    pub fn radius_of_curvature_nodes(&self) -> &[f64] {
        &self.rho_nodes
    }

    /// Cumulative arc length at the grid nodes; the final entry is `L`.
    pub fn arclength_table(&self) -> &[f64] {
        &self.arclength
    }

    /// Geometric curvature `1 / rho >= 0` at the grid nodes.
    pub fn curvature_nodes(&self) -> Vec<f64> {
        self.rho_nodes.iter().map(|r| 1.0 / r).collect()
    }

    pub fn support_at(&self, theta: f64) -> f64 {
        self.support.eval(theta)
    }

    pub fn radius_of_curvature_at(&self, theta: f64) -> f64 {
        self.rho.eval(theta)
    }

    pub fn arclength_at(&self, theta: f64) -> f64 {
        self.rho.integral_from_zero(theta)
    }

    /// Boundary point with outer normal angle `theta`.
    pub fn point_at(&self, theta: f64) -> (f64, f64) {
        let h = self.support.eval(theta);
        let dh = self.support.derivative().eval(theta);
        let (s, c) = theta.sin_cos();
        (h * c - dh * s, h * s + dh * c)
    }

    /// Normal angle of the point at arc length `s` (taken modulo `L`).
    pub fn theta_at_arclength(&self, s: f64) -> f64 {
        let l = self.perimeter;
        let s = s.rem_euclid(l);
        let table = &self.arclength;
        let n = self.theta.len();
        // table[j] <= s < table[j+1]
        let j = match table.binary_search_by(|v| v.total_cmp(&s)) {
            Ok(j) => return 2.0 * PI * j as f64 / n as f64,
            Err(j) => j - 1,
        };
        let dtheta = 2.0 * PI / n as f64;
        let (t0, t1) = (j as f64 * dtheta, (j + 1) as f64 * dtheta);
        let frac = (s - table[j]) / (table[j + 1] - table[j]);
        let mut theta = t0 + frac * dtheta;
        for _ in 0..50 {
            let f = self.rho.integral_from_zero(theta) - s;
            let step = f / self.rho.eval(theta);
            let next = (theta - step).clamp(t0, t1);
            let done = (next - theta).abs() <= 4.0 * f64::EPSILON * (1.0 + theta.abs());
            theta = next;
            if done {
                break;
            }
        }
        theta
    }

    /// Geometric curvature at arc length `s`.
    pub fn curvature_at_arclength(&self, s: f64) -> f64 {
        1.0 / self.rho.eval(self.theta_at_arclength(s))
    }

    /// `int kappa_g ds` by the periodic trapezoid rule on `n_s` uniformly
    /// spaced arc-length nodes.
    pub fn total_curvature(&self, n_s: usize) -> f64 {
        let ds = self.perimeter / n_s as f64;
        (0..n_s).map(|i| self.curvature_at_arclength(i as f64 * ds)).sum::<f64>() * ds
    }
}

/// `L^2 - 4 pi A`, non-negative with equality only for the disk.
pub fn isoperimetric_check(curve: &ConvexCurve) -> f64 {
    let l = curve.perimeter();
    l * l - 4.0 * PI * curve.area()
}

/// Semi-axis `b` making the ellipse `(a, b)` have the given perimeter.
pub fn ellipse_with_perimeter(a: f64, perimeter: f64) -> Result<ConvexCurve> {
    require_positive("a", a)?;
    require_positive("perimeter", perimeter)?;
    // L(b) = int_0^{2 pi} sqrt(a^2 sin^2 + b^2 cos^2)
    let per = |b: f64| -> Result<f64> {
        integrate(
            |t: f64| (a * a * t.sin().powi(2) + b * b * t.cos().powi(2)).sqrt(),
            0.0,
            0.5 * PI,
            0.0,
            1e-14,
        )
        .map(|q| 4.0 * q)
    };
    let (mut lo, mut hi) = (1e-3 * a, 2.0 * a);
    if per(lo)? > perimeter || per(hi)? < perimeter {
        return Err(Error::domain(format!(
            "no ellipse with a = {a} and perimeter {perimeter}"
        )));
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if per(mid)? < perimeter {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= 4.0 * f64::EPSILON * hi {
            break;
        }
    }
    ConvexCurve::ellipse(a, 0.5 * (lo + hi))
}

/// Ellipse with axis ratio `a / b = ratio` and the given perimeter.
pub fn ellipse_with_ratio_and_perimeter(ratio: f64, perimeter: f64) -> Result<ConvexCurve> {
    require_positive("ratio", ratio)?;
    let unit = ConvexCurve::ellipse(ratio, 1.0)?;
    let s = perimeter / unit.perimeter();
    ConvexCurve::ellipse(ratio * s, s)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SurfaceKind {
    Sphere { radius: f64 },
    /// Convex hull of two balls of radius `radius` whose centers are
    /// `axis_length` apart.
    Spherocylinder { radius: f64, axis_length: f64 },
}

/// Closed convex surface with the integral data that enters the reduced
/// 3D weight `|Sigma| + 2 M t + 4 pi t^2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Surface3D {
    pub kind: SurfaceKind,
    pub area: f64,
    /// `M = int |H| dSigma` with `H` the mean of the principal curvatures.
    pub total_mean_curvature: f64,
    pub mean_width: f64,
    pub volume: f64,
}

impl Surface3D {
    pub fn sphere(radius: f64) -> Result<Self> {
        require_positive("r", radius)?;
        let mut s = surface_spherocylinder(radius, 0.0)?;
        s.kind = SurfaceKind::Sphere { radius };
        Ok(s)
    }

    /// `M^2 - 4 pi |Sigma|`; zero exactly for the sphere.
    pub fn minkowski_defect(&self) -> f64 {
        let m = self.total_mean_curvature;
        m * m - 4.0 * PI * self.area
    }
}

pub fn surface_spherocylinder(radius: f64, axis_length: f64) -> Result<Surface3D> {
    require_positive("r", radius)?;
    if !(axis_length >= 0.0) || !axis_length.is_finite() {
        return Err(Error::domain(format!(
            "axis length must be non-negative and finite, got {axis_length}"
        )));
    }
    let r = radius;
    let l = axis_length;
    // caps: |H| = 1/r on area 4 pi r^2; cylinder: |H| = 1/(2r) on 2 pi r l
    let total_mean_curvature = 4.0 * PI * r + PI * l;
    Ok(Surface3D {
        kind: SurfaceKind::Spherocylinder { radius, axis_length },
        area: 4.0 * PI * r * r + 2.0 * PI * r * l,
        total_mean_curvature,
        mean_width: total_mean_curvature / (2.0 * PI),
        volume: 4.0 / 3.0 * PI * r.powi(3) + PI * r * r * l,
    })
}
