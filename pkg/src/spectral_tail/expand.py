"""Expansion coefficients, basis changes and truncation errors.

Coefficients are stored in Szego normalisation,
``u_n = (1/gamma_n) int u J_n w``; Chebyshev ``T``/``U`` coefficients are
produced at the edge by :func:`basis_rescale`.  Two generating-function test
functions with known coefficients are provided:

* ``u1(x) = 3/(5 - 4x) = 1 + sum_{n>=1} 2^{1-n} T_n(x)``
* ``u2(x) = 2/sqrt(5 - 4x) = sum_n 2^{-n} P_n(x)``

Both are analytic inside every Bernstein ellipse with ``rho < 2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Callable

import numpy as np
from scipy.special import gammaln

from .ellipse import AnalyticFunction
from .errors import DomainError, NumericalError
from .gammafn import gamma_norm
from .orthopoly import JacobiIndex, jacobi_eval_all
from .rules import gauss_jacobi

__all__ = [
    "ExpansionSeries",
    "TestFunction",
    "TEST_FUNCTIONS",
    "u1",
    "u2",
    "exact_coeffs",
    "expansion_coeffs",
    "basis_rescale",
    "partial_sum",
    "truncation_error_L2",
    "BASES",
]

BASES = ("szego", "T_basis", "U_basis")
_BASIS_INDEX = {"T_basis": -0.5, "U_basis": 0.5}


@dataclass(frozen=True)
class ExpansionSeries:
    """Coefficients ``u_0 .. u_{N-1}`` of a function in one polynomial basis."""

    idx: JacobiIndex
    coefficients: np.ndarray
    source: str = "numerical"
    basis: str = "szego"

    @property
    def N(self) -> int:
        return len(self.coefficients)

    @property
    def alpha(self) -> float:
        return self.idx.alpha

    @property
    def beta(self) -> float:
        return self.idx.beta


@dataclass(frozen=True)
class TestFunction:
    """A catalog entry: the function, its max modulus on the ellipse and its exact coefficients."""

    __test__ = False  # keep pytest from collecting this class

    function: AnalyticFunction
    max_modulus: Callable[[float], float]
    exact: Callable[[int], ExpansionSeries]


def _u1(z):
    return 3.0 / (5.0 - 4.0 * z)


def _u2(z):
    z = np.asarray(z)
    if np.iscomplexobj(z):
        return 2.0 / np.sqrt(5.0 - 4.0 * z)
    return 2.0 / np.sqrt(5.0 - 4.0 * z.astype(float))


def _check_rho_u(rho: float) -> None:
    if not 1.0 < rho < 2.0:
        raise DomainError(f"the test functions are analytic only for 1 < rho < 2, got {rho}")


def _M_u1(rho: float) -> float:
    # The pole at z = 5/4 is nearest the right vertex a = (rho + 1/rho)/2.
    _check_rho_u(rho)
    return 3 * rho / ((2 * rho - 1) * (2 - rho))


def _M_u2(rho: float) -> float:
    _check_rho_u(rho)
    return math.sqrt(4 * rho / ((2 * rho - 1) * (2 - rho)))


def _exact_u1(N: int) -> ExpansionSeries:
    c = 2.0 ** (1 - np.arange(N, dtype=float))
    if N:
        c[0] = 1.0
    return ExpansionSeries(JacobiIndex(-0.5, -0.5), c, "exact_u1", "T_basis")


def _exact_u2(N: int) -> ExpansionSeries:
    return ExpansionSeries(JacobiIndex(0.0, 0.0), 2.0 ** -np.arange(N, dtype=float), "exact_u2", "szego")


u1 = AnalyticFunction(_u1, rho_max=2.0, symmetric=True, name="u1")
u2 = AnalyticFunction(_u2, rho_max=2.0, symmetric=True, name="u2")

TEST_FUNCTIONS: dict[str, TestFunction] = {
    "u1": TestFunction(u1, _M_u1, _exact_u1),
    "u2": TestFunction(u2, _M_u2, _exact_u2),
}


def exact_coeffs(name: str, N: int) -> ExpansionSeries:
    """Exact coefficients of a catalog function (``u1`` in the T basis, ``u2`` in Legendre)."""
    if name not in TEST_FUNCTIONS:
        raise DomainError(f"unknown test function {name!r}")
    if N < 0:
        raise DomainError("N must be nonnegative")
    return TEST_FUNCTIONS[name].exact(int(N))


_EPS = float(np.finfo(float).eps)


def _coeffs_at_order(f, alpha, beta, N, q):
    x, w = gauss_jacobi(q, alpha, beta)
    vals = np.asarray(f(x))
    if np.iscomplexobj(vals):
        vals = vals.real
    P = jacobi_eval_all(N - 1, alpha, beta, x)
    norms = np.array([gamma_norm(n, alpha, beta) for n in range(N)])
    return (P * (w * vals)).sum(axis=1) / norms, float(np.sum(w * np.abs(vals)))


def expansion_coeffs(
    f: Callable,
    alpha: float,
    beta: float,
    N: int,
    quad_order: int | None = None,
    max_doublings: int = 3,
) -> ExpansionSeries:
    """First ``N`` coefficients ``(1/gamma_n) int f J_n w`` by Gauss-Jacobi quadrature.

    The order starts at ``2N + 64`` and is doubled until every coefficient
    changes by at most ``1e-12 |u_n|`` plus a rounding floor of
    ``q eps int |f| w / gamma_n``.  The floor grows with the order ``q``
    because the Christoffel weights next to the endpoints lose accuracy
    roughly in proportion to ``q``.
    """
    idx = JacobiIndex(alpha, beta)
    if int(N) != N or N < 1:
        raise DomainError(f"N must be a positive integer, got {N}")
    q = int(quad_order) if quad_order else 2 * N + 64
    if q < N:
        raise DomainError("quad_order must be at least N")
    norms = np.array([gamma_norm(n, alpha, beta) for n in range(N)])
    c, _ = _coeffs_at_order(f, alpha, beta, N, q)
    for _ in range(max_doublings):
        q *= 2
        c2, scale = _coeffs_at_order(f, alpha, beta, N, q)
        floor = q * _EPS * scale / norms * np.maximum(1.0, np.abs(jacobi_eval_all(N - 1, alpha, beta, 1.0)))
        bad = np.abs(c2 - c) > 1e-12 * np.abs(c2) + floor
        if not bad.any():
            return ExpansionSeries(idx, c2, "numerical", "szego")
        c = c2
    first = int(np.flatnonzero(bad)[0])
    raise NumericalError(f"coefficient n={first} did not settle by quadrature order {q}")


def _rescale_factors(target: str, n: np.ndarray) -> np.ndarray:
    """Multipliers taking Szego coefficients to ``target`` coefficients."""
    if target == "T_basis":
        # J_n^{-1/2,-1/2} = Gamma(n+1/2)/(sqrt(pi) n!) T_n, which is 1 at n = 0.
        return np.exp(gammaln(n + 0.5) - gammaln(n + 1)) / math.sqrt(math.pi)
    # J_n^{1/2,1/2} = (2/sqrt(pi)) Gamma(n+3/2)/Gamma(n+2) U_n.
    return 2 / math.sqrt(math.pi) * np.exp(gammaln(n + 1.5) - gammaln(n + 2))


def basis_rescale(series: ExpansionSeries, target: str) -> ExpansionSeries:
    """Convert between Szego-normalised and Chebyshev ``T``/``U`` coefficients."""
    if target not in BASES:
        raise DomainError(f"target must be one of {BASES}, got {target!r}")
    if target == series.basis:
        return series
    chebyshev = target if target != "szego" else series.basis
    a = _BASIS_INDEX[chebyshev]
    if not (series.alpha == a and series.beta == a):
        raise DomainError(f"{chebyshev} needs the index ({a}, {a}), series has ({series.alpha}, {series.beta})")
    if series.basis != "szego" and target != "szego":
        raise DomainError(f"cannot convert {series.basis} to {target} directly")
    fac = _rescale_factors(chebyshev, np.arange(series.N, dtype=float))
    coeffs = series.coefficients * fac if target != "szego" else series.coefficients / fac
    return replace(series, coefficients=coeffs, basis=target)


def partial_sum(series: ExpansionSeries, N: int, x) -> np.ndarray:
    """``pi_N u(x) = sum_{n<N} u_n J_n(x)`` for a Szego-basis series."""
    s = basis_rescale(series, "szego")
    if not 0 <= N <= s.N:
        raise DomainError(f"N must lie in [0, {s.N}], got {N}")
    if N == 0:
        return np.zeros_like(np.asarray(x, dtype=float))
    P = jacobi_eval_all(N - 1, s.alpha, s.beta, x)
    return np.tensordot(s.coefficients[:N], P, axes=1)


def truncation_error_L2(series: ExpansionSeries, N: int) -> float:
    """``||u - pi_N u||_w = sqrt(sum_{n>=N} u_n^2 gamma_n)``.

    Terms beyond the stored length are estimated from the decay of the last
    two blocks of four energies ``u_n^2 gamma_n`` as a geometric tail.  The
    tail must stay below ``1e-14`` of the total energy from ``N`` on.
    """
    s = basis_rescale(series, "szego")
    K = s.N
    if K < 8:
        raise DomainError("at least 8 coefficients are needed to estimate the tail")
    if int(N) != N or not 0 <= N < K:
        raise DomainError(f"N must be an integer in [0, {K}), got {N}")
    energy = s.coefficients**2 * np.array([gamma_norm(n, s.alpha, s.beta) for n in range(K)])
    b1, b2 = float(energy[K - 8 : K - 4].sum()), float(energy[K - 4 :].sum())
    if b2 == 0.0:
        tail = 0.0
    else:
        r = b2 / b1 if b1 > 0 else math.inf
        if r >= 1:
            raise DomainError("coefficients are not decaying; the tail cannot be estimated")
        tail = b2 * r / (1 - r)
    head = math.fsum(energy[N:])
    total = head + tail
    if tail > 1e-14 * total:
        raise DomainError(f"series of length {K} leaves a tail of relative size {tail / total:.1e}; extend it")
    return math.sqrt(total)
