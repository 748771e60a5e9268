//! Modified Bessel functions of orders 0 and 1.
//!
//! `K` uses the ascending series on `(0, 2]` and the Steed/Temme continued
//! fraction above. `I` uses the ascending series (all terms positive) on
//! `(0, 20]` and the Hankel asymptotic expansion above. Every branch
//! produces the exponentially scaled values `e^x K(x)` and `e^-x I(x)`
//! first; unscaled values are derived from them.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
const K_SERIES_LIMIT: f64 = 2.0;
const I_SERIES_LIMIT: f64 = 20.0;

/// Which of the four supported functions to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BesselKind {
    K0,
    K1,
    I0,
    I1,
}

/// A single evaluation. When `scaled` is set, `value` holds `e^x K(x)` or
/// `e^-x I(x)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BesselEval {
    pub x: f64,
    pub value: f64,
    pub scaled: bool,
}

fn check_arg(x: f64) -> Result<()> {
    if x.is_finite() && x > 0.0 {
        Ok(())
    } else {
        Err(Error::domain(format!(
            "Bessel argument must be positive and finite, got {x}"
        )))
    }
}

pub fn evaluate(kind: BesselKind, x: f64, scaled: bool) -> Result<BesselEval> {
    check_arg(x)?;
    let value = match (kind, scaled) {
        (BesselKind::K0, true) => k01_scaled(x).0,
        (BesselKind::K1, true) => k01_scaled(x).1,
        (BesselKind::I0, true) => i01_scaled(x).0,
        (BesselKind::I1, true) => i01_scaled(x).1,
        (BesselKind::K0, false) => k01(x).0,
        (BesselKind::K1, false) => k01(x).1,
        (BesselKind::I0, false) => i01(x).0,
        (BesselKind::I1, false) => i01(x).1,
    };
    Ok(BesselEval { x, value, scaled })
}

pub fn bessel_k0(x: f64) -> Result<f64> {
    check_arg(x).map(|_| k01(x).0)
}

pub fn bessel_k1(x: f64) -> Result<f64> {
    check_arg(x).map(|_| k01(x).1)
}

pub fn bessel_i0(x: f64) -> Result<f64> {
    check_arg(x).map(|_| i01(x).0)
}

pub fn bessel_i1(x: f64) -> Result<f64> {
    check_arg(x).map(|_| i01(x).1)
}

/// `e^x K0(x)`
pub fn bessel_k0_scaled(x: f64) -> Result<f64> {
    check_arg(x).map(|_| k01_scaled(x).0)
}

/// `e^x K1(x)`
pub fn bessel_k1_scaled(x: f64) -> Result<f64> {
    check_arg(x).map(|_| k01_scaled(x).1)
}

/// `e^-x I0(x)`
pub fn bessel_i0_scaled(x: f64) -> Result<f64> {
    check_arg(x).map(|_| i01_scaled(x).0)
}

/// `e^-x I1(x)`
pub fn bessel_i1_scaled(x: f64) -> Result<f64> {
    check_arg(x).map(|_| i01_scaled(x).1)
}

/// `K0(x) / K1(x)`, evaluated from the scaled pair so it stays finite for
/// any positive `x`. The result lies in `(0, 1)`.
pub fn k_ratio(x: f64) -> Result<f64> {
    check_arg(x)?;
    let (k0, k1) = k01_scaled(x);
    Ok(k0 / k1)
}

pub(crate) fn k01(x: f64) -> (f64, f64) {
    if x <= K_SERIES_LIMIT {
        k01_series(x)
    } else {
        let (k0, k1) = k01_continued_fraction(x);
        let e = (-x).exp();
        (k0 * e, k1 * e)
    }
}

/// `(e^x K0(x), e^x K1(x))` for `x > 0`. No argument checking.
pub(crate) fn k01_scaled(x: f64) -> (f64, f64) {
    if x <= K_SERIES_LIMIT {
        let (k0, k1) = k01_series(x);
        let e = x.exp();
        (k0 * e, k1 * e)
    } else {
        k01_continued_fraction(x)
    }
}

pub(crate) fn i01(x: f64) -> (f64, f64) {
    if x <= I_SERIES_LIMIT {
        i01_series(x)
    } else {
        let (i0, i1) = i01_asymptotic(x);
        let e = x.exp();
        (i0 * e, i1 * e)
    }
}

/// `(e^-x I0(x), e^-x I1(x))` for `x > 0`. No argument checking.
pub(crate) fn i01_scaled(x: f64) -> (f64, f64) {
    if x <= I_SERIES_LIMIT {
        let (i0, i1) = i01_series(x);
        let e = (-x).exp();
        (i0 * e, i1 * e)
    } else {
        i01_asymptotic(x)
    }
}

fn i01_series(x: f64) -> (f64, f64) {
    let q = 0.25 * x * x;
    // term0 = q^k / (k!)^2, term1 = q^k / (k! (k+1)!)
    let mut term0 = 1.0;
    let mut term1 = 1.0;
    let mut sum0 = 1.0;
    let mut sum1 = 1.0;
    let mut k = 1.0;
    loop {
        term0 *= q / (k * k);
        term1 *= q / (k * (k + 1.0));
        sum0 += term0;
        sum1 += term1;
        if term0 <= f64::EPSILON * 0.25 * sum0 && term1 <= f64::EPSILON * 0.25 * sum1 {
            break;
        }
        k += 1.0;
    }
    (sum0, 0.5 * x * sum1)
}

/// Hankel expansion of `e^-x I_nu(x)` for `nu = 0, 1`.
fn i01_asymptotic(x: f64) -> (f64, f64) {
    fn series(mu: f64, x: f64) -> f64 {
        let mut term = 1.0_f64;
        let mut sum = 1.0_f64;
        let mut k = 1.0;
        loop {
            let odd = 2.0 * k - 1.0;
            let next = -term * (mu - odd * odd) / (k * 8.0 * x);
            if next.abs() >= term.abs() || next.abs() <= f64::EPSILON * 0.25 * sum.abs() {
                if next.abs() < term.abs() {
                    sum += next;
                }
                break;
            }
            term = next;
            sum += term;
            k += 1.0;
        }
        sum
    }
    let pre = 1.0 / (2.0 * std::f64::consts::PI * x).sqrt();
    (pre * series(0.0, x), pre * series(4.0, x))
}

fn k01_series(x: f64) -> (f64, f64) {
    let q = 0.25 * x * x;
    let log_half = (0.5 * x).ln();
    let (i0, i1) = i01_series(x);

    // K0 = -(ln(x/2) + gamma) I0 + sum_{k>=1} H_k q^k / (k!)^2
    // K1 = 1/x + ln(x/2) I1 - (x/4) sum_{k>=0} (psi(k+1) + psi(k+2)) q^k / (k! (k+1)!)
    let mut term0 = 1.0;
    let mut term1 = 1.0;
    let mut harmonic = 0.0;
    let mut sum0 = 0.0;
    let mut sum1 = 1.0 - 2.0 * EULER_GAMMA;
    let mut k = 1.0;
    loop {
        harmonic += 1.0 / k;
        term0 *= q / (k * k);
        term1 *= q / (k * (k + 1.0));
        let add0 = harmonic * term0;
        let add1 = (2.0 * (harmonic - EULER_GAMMA) + 1.0 / (k + 1.0)) * term1;
        sum0 += add0;
        sum1 += add1;
        if add0.abs() <= f64::EPSILON * 0.25 * sum0.abs() && add1.abs() <= f64::EPSILON * 0.25 * sum1.abs() {
            break;
        }
        k += 1.0;
    }
    let k0 = -(log_half + EULER_GAMMA) * i0 + sum0;
    let k1 = 1.0 / x + log_half * i1 - 0.25 * x * sum1;
    (k0, k1)
}

/// Steed's continued fraction for `e^x K0(x)` and `e^x K1(x)`; converges
/// quickly for `x >= 2`.
fn k01_continued_fraction(x: f64) -> (f64, f64) {
    const MAX_ITER: usize = 10_000;
    let a1 = 0.25;
    let mut b = 2.0 * (1.0 + x);
    let mut d = 1.0 / b;
    let mut h = d;
    let mut delh = d;
    let mut q1 = 0.0;
    let mut q2 = 1.0;
    let mut q = a1;
    let mut c = a1;
    let mut a = -a1;
    let mut s = 1.0 + q * delh;
    for i in 1..MAX_ITER {
        let fi = i as f64;
        a -= 2.0 * fi;
        c = -a * c / (fi + 1.0);
        let qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh *= b * d - 1.0;
        h += delh;
        let dels = q * delh;
        s += dels;
        if (dels / s).abs() < 0.5 * f64::EPSILON {
            break;
        }
    }
    h *= a1;
    let k0 = (std::f64::consts::PI / (2.0 * x)).sqrt() / s;
    let k1 = k0 * (x + 0.5 - h) / x;
    (k0, k1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn wronskian_at_two() {
        let (i0, i1) = i01(2.0);
        let (k0, k1) = k01(2.0);
        assert!(rel(i0 * k1 + i1 * k0, 0.5) < 1e-15);
    }

    #[test]
    fn small_argument_limit() {
        let x = 1e-6;
        assert!((x * bessel_k1(x).unwrap() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn k_branches_agree_at_seam() {
        for x in [1.999_999, 2.0, 2.000_001] {
            let (s0, s1) = k01_series(x);
            let (c0, c1) = k01_continued_fraction(x);
            let e = (-x).exp();
            assert!(rel(s0, c0 * e) < 1e-13, "K0 seam at {x}");
            assert!(rel(s1, c1 * e) < 1e-13, "K1 seam at {x}");
        }
    }

    #[test]
    fn i_branches_agree_at_seam() {
        let x = I_SERIES_LIMIT;
        let (s0, s1) = i01_series(x);
        let (a0, a1) = i01_asymptotic(x);
        let e = (-x).exp();
        assert!(rel(s0 * e, a0) < 1e-13);
        assert!(rel(s1 * e, a1) < 1e-13);
    }

    #[test]
    fn rejects_bad_arguments() {
        for x in [0.0, -1.0, f64::NAN, f64::INFINITY] {
            assert!(bessel_k0(x).unwrap_err().is_domain());
            assert!(k_ratio(x).is_err());
        }
    }

    #[test]
    fn ratio_no_overflow() {
        let r = k_ratio(1e5).unwrap();
        assert!(r.is_finite() && r < 1.0 && r > 0.99);
    }

    #[test]
    fn scaled_values_finite_at_large_argument() {
        for kind in [BesselKind::K0, BesselKind::K1, BesselKind::I0, BesselKind::I1] {
            let e = evaluate(kind, 1e6, true).unwrap();
            assert!(e.value.is_finite() && e.value > 0.0);
        }
    }
}
