#!/usr/bin/env python3
"""Arbitrary-precision reference values for the core test suites.

Regenerate with:

    python3 crates/core/oracle/golden.py > crates/core/tests/common/golden.rs

Nothing in the library depends on this script. Bessel values come from
mpmath at 60 digits; eigenvalues come from bisection on the implicit
equation in the same precision; the ball case is ratified by shooting
the radial ODE; the spherocylinder reduced bound uses its own uniform
finite-element discretization and a sparse shift-invert eigensolver.
"""

import math

import mpmath as mp
import numpy as np
import scipy.sparse as sp
import scipy.sparse.linalg as spla
from scipy.integrate import solve_ivp

mp.mp.dps = 60

BESSEL_X = [
    "1e-6", "1e-3", "0.1", "0.5", "1", "1.5", "1.9999", "2", "2.0001", "3",
    "5", "7.5", "10", "15", "19.9", "20", "20.1", "30", "50", "100", "700",
    "1000", "1e5", "1e6",
]


def bessel_rows():
    rows = []
    for xs in BESSEL_X:
        x = mp.mpf(xs)
        k0 = mp.besselk(0, x)
        k1 = mp.besselk(1, x)
        i0 = mp.besseli(0, x)
        i1 = mp.besseli(1, x)
        ex = mp.exp(x)
        rows.append((xs, k0 * ex, k1 * ex, i0 / ex, i1 / ex))
    return rows


def disk_lambda(alpha, radius):
    alpha = mp.mpf(alpha)
    radius = mp.mpf(radius)

    def f(k):
        return k * mp.besselk(1, k * radius) + alpha * mp.besselk(0, k * radius)

    lo2 = alpha * alpha + alpha / radius
    lo = mp.sqrt(lo2) if lo2 > 0 else mp.mpf("1e-40")
    hi = -alpha
    flo, fhi = f(lo), f(hi)
    assert flo < 0 < fhi, (alpha, radius)
    # plain bisection: slow but independent of any derivative formula
    for _ in range(400):
        mid = (lo + hi) / 2
        if f(mid) < 0:
            lo = mid
        else:
            hi = mid
        if hi - lo < mp.mpf("1e-45") * hi:
            break
    k = (lo + hi) / 2
    return k, -k * k


def ball_shooting(alpha, radius):
    """Bisection on k for the radial ODE -(r^2 psi')'/r^2 = -k^2 psi with the
    Robin data psi(R)=1, psi'(R)=alpha. For k above the eigenvalue the
    solution blows up positively, below it crosses zero."""

    def tail_sign(k):
        def rhs(r, y):
            psi, dpsi = y
            return [dpsi, -2.0 / r * dpsi + k * k * psi]

        # integrate the log-derivative-scaled system to avoid overflow
        r_end = radius + 40.0 / k
        sol = solve_ivp(rhs, (radius, r_end), [1.0, alpha], rtol=1e-12,
                        atol=1e-14, method="DOP853", dense_output=False)
        psi = sol.y[0]
        if np.any(psi <= 0):
            return -1.0
        # decaying solution has psi' -> -k psi; growing one psi' -> +k psi
        return 1.0 if sol.y[1][-1] > 0 else -1.0

    lo, hi = 1e-6, -alpha
    # below the root the Robin slope is steeper than the decaying branch and
    # the solution crosses zero; above it the growing branch takes over
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        if tail_sign(mid) > 0:
            hi = mid
        else:
            lo = mid
    k = 0.5 * (lo + hi)
    return k, -k * k


def ellipse_perimeter_area(a, b):
    a = mp.mpf(a)
    b = mp.mpf(b)
    m = 1 - (b / a) ** 2
    return 4 * a * mp.ellipe(m), mp.pi * a * b


def halfline_uniform(alpha, wa, wb, wc, length, n):
    """Uniform-mesh P1 discretization, exact element integrals."""
    t = np.linspace(0.0, length, n + 1)
    h = length / n
    diag_a = np.zeros(n + 1)
    off_a = np.zeros(n)
    diag_b = np.zeros(n + 1)
    off_b = np.zeros(n)
    gx, gw = np.polynomial.legendre.leggauss(4)
    for e in range(n):
        t0 = t[e]
        pts = t0 + 0.5 * h * (gx + 1.0)
        wts = 0.5 * h * gw
        w = wa + wb * pts + wc * pts * pts
        phi0 = 1.0 - (pts - t0) / h
        phi1 = (pts - t0) / h
        iw = np.sum(w * wts)
        diag_a[e] += iw / h ** 2
        diag_a[e + 1] += iw / h ** 2
        off_a[e] -= iw / h ** 2
        diag_b[e] += np.sum(w * phi0 * phi0 * wts)
        diag_b[e + 1] += np.sum(w * phi1 * phi1 * wts)
        off_b[e] += np.sum(w * phi0 * phi1 * wts)
    diag_a[0] += alpha * wa
    stiff = sp.diags([off_a, diag_a, off_a], [-1, 0, 1], format="csc")
    mass = sp.diags([off_b, diag_b, off_b], [-1, 0, 1], format="csc")
    vals = spla.eigsh(stiff, k=1, M=mass, sigma=-2.0 * alpha * alpha,
                      which="LM", return_eigenvectors=False)
    return float(vals[0])


def spherocylinder_reduced(alpha, r, axis):
    area = 4 * math.pi * r * r + 2 * math.pi * r * axis
    mean_curv = 4 * math.pi * r + math.pi * axis
    length = 40.0
    coarse = halfline_uniform(alpha, area, 2 * mean_curv, 4 * math.pi, length, 10000)
    fine = halfline_uniform(alpha, area, 2 * mean_curv, 4 * math.pi, length, 20000)
    return fine + (fine - coarse) / 3.0, fine


def fmt(v):
    return mp.nstr(v, 25, min_fixed=0, max_fixed=0)


def main():
    print("// Generated by crates/core/oracle/golden.py (mpmath, 60 digits). Do not edit.")
    print()
    print("/// (x, e^x K0(x), e^x K1(x), e^-x I0(x), e^-x I1(x))")
    print("pub const BESSEL_SCALED: &[(f64, f64, f64, f64, f64)] = &[")
    for xs, k0, k1, i0, i1 in bessel_rows():
        print(f"    ({xs}_f64, {fmt(k0)}, {fmt(k1)}, {fmt(i0)}, {fmt(i1)}),")
    print("];")
    print()
    x1 = mp.mpf(1)
    print(f"pub const K0_AT_1: f64 = {fmt(mp.besselk(0, x1))};")
    print(f"pub const K1_AT_1: f64 = {fmt(mp.besselk(1, x1))};")
    print()
    print("/// (alpha, R, k, lambda) for the disk exterior.")
    print("pub const DISK_LAMBDA: &[(f64, f64, f64, f64)] = &[")
    for alpha in ["-0.25", "-1", "-4", "-16"]:
        for radius in ["0.25", "1", "4"]:
            k, lam = disk_lambda(alpha, radius)
            print(f"    ({alpha}_f64, {radius}_f64, {fmt(k)}, {fmt(lam)}),")
    for alpha, radius in [("-0.5", "2"), ("-2", "0.5"), ("-1", "100")]:
        k, lam = disk_lambda(alpha, radius)
        print(f"    ({alpha}_f64, {radius}_f64, {fmt(k)}, {fmt(lam)}),")
    print("];")
    print()
    print("/// (alpha, R, lambda) for the ball exterior, from radial shooting.")
    print("pub const BALL_SHOOTING: &[(f64, f64, f64)] = &[")
    for alpha, radius in [(-2.0, 1.0), (-3.0, 0.5), (-5.0, 2.0), (-1.5, 1.0), (-10.0, 0.25)]:
        _, lam = ball_shooting(alpha, radius)
        print(f"    ({alpha!r}, {radius!r}, {lam!r}),")
    print("];")
    print()
    print("/// (a, b, perimeter, area) for ellipses.")
    print("pub const ELLIPSE: &[(f64, f64, f64, f64)] = &[")
    for a, b in [("2", "1"), ("1.5", "1"), ("3", "1"), ("1", "1")]:
        per, area = ellipse_perimeter_area(a, b)
        print(f"    ({a}_f64, {b}_f64, {fmt(per)}, {fmt(area)}),")
    print("];")
    print()
    extrap, fine = spherocylinder_reduced(-2.0, 1.0, 4.0)
    print("/// Reduced 3D bound for the spherocylinder r=1, L=4, alpha=-2")
    print("/// (uniform mesh n=20000 with Richardson against n=10000, T=40).")
    print(f"pub const SPHEROCYLINDER_REDUCED: f64 = {extrap!r};")
    print(f"pub const SPHEROCYLINDER_REDUCED_N20000: f64 = {fine!r};")


if __name__ == "__main__":
    main()
