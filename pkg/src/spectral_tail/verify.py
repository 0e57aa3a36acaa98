"""Self-check suite run by ``spectral-tail verify``.

Each check returns ``(passed, detail)``.  The suite covers guarantees the
package makes about its own output; the claims that were found not to hold
are exercised by the acceptance tests instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .coeffbounds import (
    bound_chebyshev,
    bound_jacobi,
    bound_legendre,
    bound_xiang,
    truncation_bound_legendre,
)
from .errors import DomainError
from .expand import TEST_FUNCTIONS, exact_coeffs, truncation_error_L2
from .gammafn import gamma_norm, gamma_ratio, upsilon_rigorous
from .orthopoly import gegenbauer_ellipse_form, gegenbauer_on_ellipse, jacobi_eval
from .quadrature import (
    bound_quad_computable,
    bound_quad_literature,
    mu_coeffs,
    quad_remainder,
    theta_profile,
)
from .rules import gauss_jacobi, weight_moment
from .sigma import sigma_closed, sigma_gegenbauer, sigma_general, sigma_oracle

__all__ = ["CheckResult", "run_suite", "CHECKS"]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _rel(a: float, b: float) -> float:
    return abs(a - b) / max(abs(b), 1e-300) if b != 0 else abs(a)


def _check_sigma_closed(quick: bool, perturb: bool, extra_rho: float | None = None):
    nmax, jmax = (12, 10) if quick else (30, 20)
    worst = 0.0
    for n in range(nmax + 1):
        for j in range(jmax + 1):
            g = sigma_general(n, j, 0.0, 0.0)
            if perturb and (n, j) == (3, 2):
                g *= 1 + 1e-6
            c = sigma_closed(n, j, "legendre")
            worst = max(worst, _rel(g, c) if abs(c) > 1e-14 else abs(g))
            g = sigma_general(n, j, -0.5, -0.5)
            worst = max(worst, _rel(g, sigma_closed(n, j, "cheb1")) if j % 2 == 0 else abs(g))
    return worst <= 1e-9, f"max relative gap {worst:.2e}"


def _check_sigma_oracle(quick: bool, perturb: bool, extra_rho: float | None = None):
    pairs = [(0.0, 0.0), (0.3, -0.4), (1.5, 0.5), (-0.9, 2.0), (3.0, 1.0)]
    top = 6 if quick else 10
    worst = 0.0
    for a, b in pairs:
        for n in range(top + 1):
            for j in range(top + 1):
                g, o = sigma_general(n, j, a, b), sigma_oracle(n, j, a, b)
                worst = max(worst, abs(g - o) / max(abs(o), 1.0))
    return worst <= 1e-9, f"max gap {worst:.2e}"


def _check_gauss(quick: bool, perturb: bool, extra_rho: float | None = None):
    worst = 0.0
    for a in (-0.5, 0.0, 0.5, 1.0, 2.5):
        for n in range(1, (24 if quick else 64) + 1):
            x, w = gauss_jacobi(n, a, a)
            for k in range(0, 2 * n, 2):
                exact = weight_moment(k, a)
                worst = max(worst, _rel(math.fsum(w * x**k), exact))
    return worst <= 1e-12, f"max relative moment error {worst:.2e}"


def _check_ellipse(quick: bool, perturb: bool, extra_rho: float | None = None):
    worst = 0.0
    th = np.linspace(0, 2 * np.pi, 17)
    for a in (-0.5, 0.0, 0.5, 1.0, 2.0):
        for r in (1.05, 1.5, 3.0) + ((extra_rho,) if extra_rho else ()):
            w = r * np.exp(1j * th)
            z = (w + 1 / w) / 2
            for n in range(0, 51, 5 if quick else 1):
                e = gegenbauer_on_ellipse(n, a, w)
                r = jacobi_eval(n, a, a, z)
                worst = max(worst, float(np.max(np.abs(e - r) / np.abs(r))))
    return worst <= 1e-9, f"max relative gap {worst:.2e}"


def _check_coeff_domination(quick: bool, perturb: bool, extra_rho: float | None = None):
    rho = 1.98
    c1, c2 = exact_coeffs("u1", 51).coefficients, exact_coeffs("u2", 51).coefficients
    M1, M2 = TEST_FUNCTIONS["u1"].max_modulus(rho), TEST_FUNCTIONS["u2"].max_modulus(rho)
    bad = [n for n in range(1, 51) if not (c1[n] <= bound_chebyshev(n, rho, M1).value)]
    bad += [n for n in range(1, 51) if not (c2[n] <= bound_legendre(n, rho, M2).value)]
    return not bad, "all n in [1, 50]" if not bad else f"violations at n={bad}"


def _check_xiang_chain(quick: bool, perturb: bool, extra_rho: float | None = None):
    vals = (-0.9, 0.0, 1.0, 3.0) if quick else (-0.9, -0.5, 0.0, 0.5, 1.0, 2.0, 3.0)
    bad = 0
    for a in vals:
        for b in vals:
            for rho in (1.1, 1.5, 2.0, 3.0):
                for n in range(1, 61, 3 if quick else 1):
                    if bound_jacobi(n, a, b, rho, 1.0).value > bound_xiang(n, a, b, rho, 1.0).value:
                        bad += 1
    return bad == 0, f"{bad} grid points where the new bound exceeds the older one"


def _check_chawla(quick: bool, perturb: bool, extra_rho: float | None = None):
    worst = 0.0
    for rho in (1.2, 1.9, 3.0):
        for n in range(1, 21):
            v = bound_quad_computable(n, -0.5, rho, 1.0, form="series").value
            worst = max(worst, _rel(v, bound_quad_literature("chawla_cheb", n, -0.5, rho, 1.0).value))
    return worst <= 1e-10, f"max relative gap {worst:.2e}"


def _check_remainder(quick: bool, perturb: bool, extra_rho: float | None = None):
    rho = 1.9
    worst = math.inf
    for name in ("u1", "u2"):
        f, M = TEST_FUNCTIONS[name].function, TEST_FUNCTIONS[name].max_modulus(rho)
        for a in (-0.5, 0.0, 0.5, 2.0):
            for n in range(2, 13):
                E = abs(quad_remainder(f, n, a))
                b = bound_quad_computable(n, a, rho, M).value
                worst = min(worst, b / E if E > 0 else math.inf)
    return worst >= 1, f"smallest bound/|E| ratio {worst:.3g}"


def _check_theta(quick: bool, perturb: bool, extra_rho: float | None = None):
    ns = range(10, 101, 10 if quick else 1)
    vals = [theta_profile(n, 0.0, 1000).theta_max for n in ns]
    return min(vals) >= 3.5 and max(vals) <= 4.5, f"Theta_n^0 in [{min(vals):.4f}, {max(vals):.4f}]"


def _check_mu_roundtrip(quick: bool, perturb: bool, extra_rho: float | None = None):
    worst = 0.0
    for a in (0.0, 1.0, 2.0):
        for n in range(1, 21, 4 if quick else 1):
            mu = mu_coeffs(n, a, 50).values
            form = gegenbauer_ellipse_form(n, a)
            c = form.g * form.g[::-1]
            sig = sigma_gegenbauer(n, a, 50)
            for l in range(51):
                k = np.arange(min(n, l) + 1)
                rec = form.A * float(np.dot(c[k], mu[l - k]))
                worst = max(worst, abs(rec - sig[l]) / max(abs(sig[0]), 1e-300))
    return worst <= 1e-10, f"max reconstruction gap {worst:.2e}"


def _check_truncation(quick: bool, perturb: bool, extra_rho: float | None = None):
    rho = 1.98
    M = TEST_FUNCTIONS["u2"].max_modulus(rho)
    series = exact_coeffs("u2", 120)
    bad = []
    for mode in ("explicit", "unit"):
        for N in range(2, 41):
            if truncation_error_L2(series, N) > truncation_bound_legendre(N, rho, M, mode).value:
                bad.append((mode, N))
    return not bad, "all N in [2, 40]" if not bad else f"violations {bad}"


def _check_upsilon_rigorous(quick: bool, perturb: bool, extra_rho: float | None = None):
    grid = np.arange(-0.9, 5.01, 0.5 if quick else 0.1)
    bad = 0
    for a in grid:
        for b in grid:
            for n in range(2, 201, 7 if quick else 1):
                if gamma_ratio(n, a, b) > upsilon_rigorous(n, a, b) * n ** (a - b) * (1 + 1e-13):
                    bad += 1
    return bad == 0, f"{bad} grid points where the rigorous Gamma-ratio envelope fails"


def _check_norm(quick: bool, perturb: bool, extra_rho: float | None = None):
    worst = 0.0
    for a, b in ((0.0, 0.0), (0.5, -0.5), (2.0, 1.0)):
        x, w = gauss_jacobi(40, a, b)
        for n in range(0, 30):
            worst = max(worst, _rel(math.fsum(w * jacobi_eval(n, a, b, x) ** 2), gamma_norm(n, a, b)))
    return worst <= 1e-12, f"max relative error {worst:.2e}"


CHECKS: dict[str, Callable[[bool, bool, float | None], tuple[bool, str]]] = {
    "gamma_norm_vs_quadrature": _check_norm,
    "upsilon_rigorous_envelope": _check_upsilon_rigorous,
    "ellipse_formula": _check_ellipse,
    "sigma_closed_forms": _check_sigma_closed,
    "sigma_oracle": _check_sigma_oracle,
    "coefficient_domination": _check_coeff_domination,
    "xiang_chain": _check_xiang_chain,
    "truncation_domination": _check_truncation,
    "gauss_exactness": _check_gauss,
    "mu_roundtrip": _check_mu_roundtrip,
    "chebyshev_recovery": _check_chawla,
    "remainder_domination": _check_remainder,
    "theta_legendre_range": _check_theta,
}


def run_suite(quick: bool = False, perturb: bool = False, rho: float | None = None) -> list[CheckResult]:
    """Run every check; ``perturb`` corrupts one sigma value so the suite must fail.

    ``rho`` adds one ellipse parameter to the grid of the ellipse-formula check.
    """
    if rho is not None and not (rho > 1 and math.isfinite(rho)):
        raise DomainError(f"rho must exceed 1, got {rho}")
    out = []
    for name, fn in CHECKS.items():
        try:
            ok, detail = fn(quick, perturb, rho)
        except Exception as exc:  # a crashing check is a failing check
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        out.append(CheckResult(name, bool(ok), detail))
    return out
