mod common;

use common::golden::{BESSEL_SCALED, K0_AT_1, K1_AT_1};
use robin_core::specfun::*;

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

#[test]
fn scaled_values_match_golden() {
    for &(x, k0, k1, i0, i1) in BESSEL_SCALED {
        assert!(rel(bessel_k0_scaled(x).unwrap(), k0) < 1e-13, "K0e({x})");
        assert!(rel(bessel_k1_scaled(x).unwrap(), k1) < 1e-13, "K1e({x})");
        assert!(rel(bessel_i0_scaled(x).unwrap(), i0) < 1e-13, "I0e({x})");
        assert!(rel(bessel_i1_scaled(x).unwrap(), i1) < 1e-13, "I1e({x})");
    }
}

#[test]
fn unscaled_at_one_match_golden() {
    assert!(rel(bessel_k0(1.0).unwrap(), K0_AT_1) < 1e-13);
    assert!(rel(bessel_k1(1.0).unwrap(), K1_AT_1) < 1e-13);
}
