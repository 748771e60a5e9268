use std::f64::consts::PI;

use robin_core::diskext::{disk_lambda, BoundaryParam};
use robin_core::fem2d::*;
use robin_core::geometry::{ellipse_with_ratio_and_perimeter, ConvexCurve};

#[test]
fn disk_matches_bessel_with_second_order() {
    let c = ConvexCurve::disk(1.0).unwrap();
    let a = BoundaryParam(-1.0);
    let exact = disk_lambda(a, 1.0).unwrap();
    let fine = solve_exterior(&c, a, 64, 256).unwrap();
    let coarse = solve_exterior(&c, a, 32, 128).unwrap();
    let (ef, ec) = ((fine.lambda - exact).abs(), (coarse.lambda - exact).abs());
    assert!(ef <= 1e-4, "error {ef}");
    let order = (ec / ef).log2();
    assert!((1.8..=2.2).contains(&order), "order {order}");
    // the discrete value is a Rayleigh quotient on a subspace
    assert!(fine.lambda > exact && coarse.lambda > fine.lambda);
}

#[test]
fn hellmann_feynman_identity() {
    let c = ConvexCurve::ellipse(2.0, 1.0).unwrap();
    let hf = hellmann_feynman_check(&c, BoundaryParam(-1.0), 1e-4, 32, 128).unwrap();
    assert!(((hf.lhs - hf.rhs) / hf.rhs).abs() < 1e-3, "{hf:?}");
}

#[test]
fn ground_state_and_rayleigh_consistency() {
    let shapes = [
        ConvexCurve::ellipse(1.5, 1.0).unwrap(),
        ConvexCurve::support_poly(&[1.0, 0.0, 0.1]).unwrap(),
        ConvexCurve::disk(0.5).unwrap(),
    ];
    for c in &shapes {
        for alpha in [-0.5, -2.0] {
            let a = BoundaryParam(alpha);
            let t = truncation_for(c, a).unwrap();
            let mesh = ParallelMesh::new(c, 32, 96, t).unwrap();
            let sys = assemble(&mesh, a).unwrap();
            let res = solve_exterior_with(c, a, 32, 96, t).unwrap();
            assert!(res.eigenvector.iter().all(|&v| v > 0.0), "{}", c.spec());
            let q = sys.rayleigh_quotient(&res.eigenvector);
            assert!(((q - res.lambda) / res.lambda).abs() < 1e-12, "{q} vs {}", res.lambda);
            assert!(res.lambda > -alpha * alpha * (1.0 + 1e-9));
            assert!(res.lambda < 0.0);
            assert!(res.mesh.residual < RESIDUAL_TOL);
        }
    }
}

#[test]
fn jacobian_at_least_one() {
    let c = ConvexCurve::ellipse(3.0, 1.0).unwrap();
    let mesh = ParallelMesh::new(&c, 48, 40, 12.0).unwrap();
    let table = mesh.jacobian_table();
    assert!(table.iter().flatten().all(|&j| j >= 1.0));
    assert_eq!(mesh.len(), 48 * 41);
}

#[test]
fn eccentric_ellipses_lie_further_below_disk() {
    let a = BoundaryParam(-1.0);
    let disk = disk_lambda(a, 1.0).unwrap();
    let mut prev = disk;
    for ratio in [1.25, 1.5, 2.0, 2.5, 3.0] {
        let c = ellipse_with_ratio_and_perimeter(ratio, 2.0 * PI).unwrap();
        let l = solve_exterior(&c, a, 32, 128).unwrap().lambda;
        assert!(l < prev, "ratio {ratio}: {l} !< {prev}");
        prev = l;
    }
}

#[test]
fn disk_is_the_equality_case() {
    let c = ConvexCurve::disk(1.0).unwrap();
    let rep = verify_theorem(&c, BoundaryParam(-1.0), 32, 128).unwrap();
    assert_eq!(rep.verdict, Verdict::Equality);
    assert!(rep.margin_isoperimetric.abs() <= rep.tolerance);
    assert_eq!(rep.margin_isoperimetric, rep.margin_isochoric);
}

#[test]
fn rejects_repulsive_coupling_and_tiny_meshes() {
    let c = ConvexCurve::disk(1.0).unwrap();
    assert!(solve_exterior(&c, BoundaryParam(0.5), 16, 16).unwrap_err().is_domain());
    assert!(ParallelMesh::new(&c, 2, 16, 1.0).is_err());
    assert!(ParallelMesh::new(&c, 16, 0, 1.0).is_err());
}
