//! Lowest eigenvalue of the Robin Laplacian in exteriors of compact convex
//! sets.
//!
//! The crate is organised bottom-up:
//!
//! * [`specfun`]: modified Bessel functions `I0, I1, K0, K1`.
//! * [`diskext`]: the disk (2D) and ball (3D) exteriors in closed form.
//! * [`geometry`]: convex curves from support functions, convex surfaces.
//! * [`sl1d`]: the half-line problem obtained from test functions that are
//!   constant along curves parallel to the boundary.
//! * [`fem2d`]: the full problem in parallel coordinates.
//! * [`asympt`]: large-coupling models and the two counterexamples.
//! * [`validate`]: the named invariant suite used by the command line.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod asympt;
pub mod diskext;
pub mod error;
pub mod fem2d;
pub mod geometry;
pub mod quadrature;
pub mod sl1d;
pub mod specfun;
pub mod validate;

pub use asympt::{AsymptoticModel, CutoffEnergy, HullReport, TwoDiskReport};
pub use diskext::{BoundaryParam, DiskSolution, QuantitativeGap};
pub use error::{Error, Result};
pub use fem2d::{FemEigenResult, ParallelMesh, TheoremReport, Verdict};
pub use geometry::{ConvexCurve, CurveSpec, Surface3D, SurfaceKind};
pub use sl1d::{EigenResult, WeightPoly};
pub use specfun::BesselEval;
pub use validate::CheckResult;
