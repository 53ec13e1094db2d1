#!/usr/bin/env python3
"""Independent oracles for the golden constants in data/golden_values.json.

Every constant is produced by two schemes that do not share code with the
C++ library (mpmath tanh-sinh vs Gauss-Legendre quadrature, spectral
Galerkin/sinc bases for the eigenvalue problems). The script fails if the
two schemes disagree beyond the stated tolerance.

    python3 tools/oracles/golden_values.py > data/golden_values.json
"""
import json
import sys

import mpmath as mp
import numpy as np
from scipy.linalg import eigh

mp.mp.dps = 40


def dual(f, a, b, tol=mp.mpf("1e-25")):
    v1 = mp.quad(f, [a, 0, b], method="tanh-sinh")
    v2 = mp.quad(f, [a, 0, b], method="gauss-legendre")
    if abs(v1 - v2) > tol * abs(v1):
        sys.exit(f"quadrature schemes disagree: {v1} vs {v2}")
    return v1


def xsinhx(x):
    return mp.mpf(1) if x == 0 else x / mp.sinh(x)


def heisenberg_reduced(t):
    t = mp.mpf(t)
    return dual(lambda p: xsinhx(p * t) / t * mp.exp(-p * p * t) / 2, -mp.inf, mp.inf)


def mathieu_area(a, mu, lam):
    a, mu, lam = mp.mpf(a), mp.mpf(mu), mp.mpf(lam)
    x0 = mp.acosh(lam / a) / (2 * mu)
    f = lambda x: 2 * mp.sqrt(max(lam - a * mp.cosh(2 * mu * x), 0))
    v1 = mp.quad(f, [-x0, 0, x0], method="tanh-sinh")
    g = lambda th: f(x0 * mp.sin(th)) * x0 * mp.cos(th)
    v2 = mp.quad(g, [-mp.pi / 2, 0, mp.pi / 2], method="gauss-legendre")
    if abs(v1 - v2) > mp.mpf("1e-20") * v1:
        sys.exit(f"area schemes disagree: {v1} vs {v2}")
    return v1


def circle_cos_eigs(h, k, modes):
    # Fourier Galerkin for -h^2 d^2/dx^2 + cos(2 pi x) on the unit circle.
    m = np.arange(-modes, modes + 1)
    H = np.diag((2 * np.pi * h * m) ** 2) + 0.5 * (np.eye(len(m), k=1) + np.eye(len(m), k=-1))
    return np.linalg.eigvalsh(H)[:k]


def mathieu_eigs_sinc(a, mu, eps, k, half_width, n):
    # Sinc collocation on the real line (spectrally accurate, no domain walls).
    step = 2 * half_width / (n - 1)
    x = -half_width + step * np.arange(n)
    i = np.arange(n)
    d = i[:, None] - i[None, :]
    with np.errstate(divide="ignore"):
        D2 = np.where(d == 0, -np.pi**2 / 3, -2.0 * (-1.0) ** d / np.where(d == 0, 1, d) ** 2)
    H = -(eps**2) / step**2 * D2 + np.diag(a * np.cosh(2 * mu * x))
    return eigh(H, eigvals_only=True, subset_by_index=[0, k - 1])


def main():
    out = {}
    j1 = heisenberg_reduced(1)
    out["heisenberg_reduced_trace_t1"] = float(j1)

    area = mathieu_area(1, 1, 2)
    out["mathieu_area_a1_mu1_lambda2"] = float(area)

    c1 = circle_cos_eigs(0.1, 5, 40)
    c2 = circle_cos_eigs(0.1, 5, 80)
    assert np.max(np.abs(c1 - c2)) < 1e-10, (c1, c2)
    out["circle_cos_h0.1_eigs"] = [float(v) for v in c2]

    m1 = mathieu_eigs_sinc(1, 1, 1, 5, 4.0, 600)
    m2 = mathieu_eigs_sinc(1, 1, 1, 5, 5.0, 900)
    assert np.max(np.abs(m1 - m2) / m2) < 1e-11, (m1, m2)
    out["mathieu_a1_mu1_eps1_eigs"] = [float(v) for v in m2]

    json.dump(out, sys.stdout, indent=2)
    sys.stdout.write("\n")


if __name__ == "__main__":
    main()
