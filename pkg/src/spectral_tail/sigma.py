"""Projection coefficients of second-kind Chebyshev polynomials onto Jacobi polynomials.

``sigma(n, j) = (1/gamma_n) int U_{n+j}(x) J_n^{alpha,beta}(x) w(x) dx`` with
``w = (1-x)^alpha (1+x)^beta``.  These are the Laurent coefficients of the
weighted Cauchy transform of ``J_n`` and drive every bound in the package.

The general formula is an alternating sum whose terms grow much faster than
the result: the cancellation factor is already ~1e7 at ``j = 4`` and ~1e13 at
``j = 10``.  The default path therefore sums the term ratios in exact rational
arithmetic (float inputs are dyadic rationals, so this is lossless) and only
the common log-space prefactor is rounded.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable

import numpy as np

from .errors import DomainError, PrecisionError
from .gammafn import gamma_norm, log_gamma_norm, upsilon, upsilon_rigorous
from .orthopoly import chebyshev_U, connection_coeffs, jacobi_eval
from .rules import gauss_jacobi

__all__ = [
    "SigmaTable",
    "ChatCoeff",
    "sigma_general",
    "sigma_closed",
    "sigma_gegenbauer",
    "sigma_first_two",
    "sigma_cheb_type",
    "sigma_leg_type",
    "sigma_oracle",
    "c_hat",
    "sigma0_envelope",
    "sigma_table",
]

_SQRT_PI = math.sqrt(math.pi)
#: float-path guard: sums with a larger cancellation factor are refused
FLOAT_CONDITION_LIMIT = 1e4

CLOSED_CASES = ("cheb1", "cheb2", "legendre", "gegenbauer_parity")


@dataclass(frozen=True)
class SigmaTable:
    """``sigma(n, 0..J)`` for one index pair, tagged with how it was computed."""

    n: int
    alpha: float
    beta: float
    values: tuple[float, ...]
    method: str

    @property
    def J(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, j: int) -> float:
        return self.values[j]


@dataclass(frozen=True)
class ChatCoeff:
    """``(1/gamma_n^{alpha,beta}) int J_{n+j}^{a,b} J_n^{alpha,beta} w^{alpha,beta}``."""

    n: int
    j: int
    alpha: float
    beta: float
    a: float
    b: float
    value: float


def _check(alpha: float, beta: float, *ints: int) -> None:
    if not (alpha > -1 and beta > -1):
        raise DomainError(f"Jacobi parameters must exceed -1, got ({alpha}, {beta})")
    if any(int(v) != v or v < 0 for v in ints):
        raise DomainError(f"indices must be nonnegative integers, got {ints}")


def _alternating_sum(
    j: int,
    ratio: Callable[[int, Callable], object],
    method: str,
) -> tuple[float, float]:
    """Return ``(sum_m r_m / r_0, condition)`` for ``m = 0..j``.

    ``ratio(m, num)`` gives ``r_{m+1}/r_m`` built from the number type ``num``.
    ``condition`` is ``sum |r_m| / |sum r_m|`` (``inf`` for an exact zero).
    """
    if method == "exact":
        r = Fraction(1)
        total, absolute = Fraction(1), Fraction(1)
        for m in range(j):
            r *= ratio(m, Fraction)
            total += r
            absolute += abs(r)
        try:
            cond = math.inf if total == 0 else float(absolute / abs(total))
        except OverflowError:
            cond = math.inf
        return float(total), cond
    if method == "float":
        r = 1.0
        terms = [1.0]
        for m in range(j):
            r *= ratio(m, float)
            terms.append(r)
        total = math.fsum(terms)
        absolute = math.fsum(abs(t) for t in terms)
        cond = math.inf if total == 0 else absolute / abs(total)
        if cond > FLOAT_CONDITION_LIMIT:
            raise PrecisionError(
                f"alternating sum with j={j} loses ~{math.log10(cond):.1f} digits in double precision",
                condition=cond,
            )
        return total, cond
    raise DomainError(f"unknown summation method {method!r}")


def _log_head(n: int, s: float) -> float:
    """``ln[(2n+s+1) Gamma(n+s+1) / Gamma(2n+s+2)]``; equals 0 at ``n = 0``."""
    if n == 0:
        return 0.0
    return math.log(2 * n + s + 1) + math.lgamma(n + s + 1) - math.lgamma(2 * n + s + 2)


def sigma_general(n: int, j: int, alpha: float, beta: float, method: str = "exact") -> float:
    """``sigma(n, j)`` for arbitrary ``alpha, beta > -1`` from the alternating-sum formula.

    Parameters
    ----------
    method : {'exact', 'float'}
        'exact' sums the term ratios as rationals.  'float' uses compensated
        double summation and raises :class:`PrecisionError` when the
        cancellation factor exceeds ``FLOAT_CONDITION_LIMIT``.
    """
    _check(alpha, beta, n, j)
    s = alpha + beta
    if alpha == beta and j % 2:
        return 0.0

    def ratio(m, num):
        a_, b_ = num(alpha), num(beta)
        return (
            -(j - m) * (2 * n + j + m + 2) * (n + m + a_ + 1)
            / ((m + 1) * (n + m + num(3) / 2) * (2 * n + m + a_ + b_ + 2))
        )

    total, _ = _alternating_sum(j, ratio, method)
    if total == 0.0:
        return 0.0
    log_lead = (
        math.log(_SQRT_PI / 2)
        + _log_head(n, s)
        + math.lgamma(2 * n + j + 2)
        - math.lgamma(j + 1)
        - math.lgamma(n + 1.5)
    )
    return math.exp(log_lead) * total


def sigma_first_two(n: int, alpha: float, beta: float) -> tuple[float, float]:
    """``(sigma(n, 0), sigma(n, 1))`` in closed form."""
    _check(alpha, beta, n)
    s = alpha + beta
    # Gamma(n+s+1)/Gamma(2n+s+1) is 1 at n = 0, including the s = -1 pole pair.
    g = 0.0 if n == 0 else math.lgamma(n + s + 1) - math.lgamma(2 * n + s + 1)
    s0 = _SQRT_PI / 2 * math.exp(math.lgamma(2 * n + 2) + g - math.lgamma(n + 1.5))
    s1 = (beta - alpha) * (2 * n + 2) / (2 * n + s + 2) * s0
    return s0, s1


def sigma_gegenbauer(n: int, alpha: float, L: int) -> np.ndarray:
    """``sigma(n, 2l)`` for ``l = 0..L`` at ``alpha = beta``.

    Uses the exact ratio ``sigma_{2l+2}/sigma_{2l} =
    (n+l+1)(l+1-lam) / ((n+l+lam+1)(l+1))`` with ``lam = alpha + 1/2``, which
    is cancellation-free and valid for any ``L``.
    """
    _check(alpha, alpha, n, L)
    lam = alpha + 0.5
    l = np.arange(L, dtype=float)
    ratios = (n + l + 1) * (l + 1 - lam) / ((n + l + lam + 1) * (l + 1))
    s0, _ = sigma_first_two(n, alpha, alpha)
    return s0 * np.concatenate(([1.0], np.cumprod(ratios)))


def sigma_closed(n: int, j: int, case: str, alpha: float | None = None) -> float:
    """Closed forms for the Chebyshev, Legendre and general Gegenbauer cases.

    ``case`` is one of 'cheb1' (alpha=beta=-1/2), 'cheb2' (1/2), 'legendre'
    (0) or 'gegenbauer_parity' (any ``alpha = beta``, which must be given).
    """
    if int(n) != n or int(j) != j or n < 0 or j < 0:
        raise DomainError("n and j must be nonnegative integers")
    if case == "cheb1":
        if j % 2:
            return 0.0
        if n == 0:
            # The n >= 1 expression doubles the value here (T_0 normalisation).
            return 1.0
        return 2 * _SQRT_PI * math.exp(math.lgamma(n + 1) - math.lgamma(n + 0.5))
    if case == "cheb2":
        if j:
            return 0.0
        return _SQRT_PI / 2 * math.exp(math.lgamma(n + 2) - math.lgamma(n + 1.5))
    if case == "legendre":
        if j % 2:
            return 0.0
        l = j // 2
        return (2 * n + 1) / 2 * math.exp(
            math.lgamma(l + 0.5) + math.lgamma(n + l + 1) - math.lgamma(l + 1) - math.lgamma(n + l + 1.5)
        )
    if case == "gegenbauer_parity":
        if alpha is None:
            raise DomainError("gegenbauer_parity needs alpha")
        if j % 2:
            return 0.0
        return float(sigma_gegenbauer(n, alpha, j // 2)[-1])
    raise DomainError(f"unknown closed-form case {case!r}; expected one of {CLOSED_CASES}")


def sigma_cheb_type(n: int, j: int, k: int, l: int) -> float:
    """``sigma(n, j)`` for the index pair ``(k + 1/2, l + 1/2)``.

    Only ``j <= k + l`` can be nonzero; the value comes from the connection
    coefficients onto the second-kind Chebyshev basis.
    """
    _check(0, 0, n, j, k, l)
    if j > k + l:
        return 0.0
    d = connection_coeffs(n, 0.5, 0.5, k, l)
    m = n + j
    return (
        math.sqrt(math.pi / 2)
        * d[m]
        * math.exp(0.5 * log_gamma_norm(m, 0.5, 0.5) - log_gamma_norm(n, k + 0.5, l + 0.5))
    )


def sigma_leg_type(n: int, j: int, k: int, l: int) -> float:
    """``sigma(n, j)`` for the integer index pair ``(k, l)`` via Legendre reduction."""
    _check(0, 0, n, j, k, l)
    d = connection_coeffs(n, 0.0, 0.0, k, l)
    total = 0.0
    for m in range(n, n + k + l + 1):
        jj = n + j - m
        if jj < 0:
            continue
        total += d[m] * gamma_norm(m, 0, 0) * sigma_closed(m, jj, "legendre")
    return total / gamma_norm(n, k, l)


def oracle_order(n: int, j: int) -> int:
    """Gauss order integrating ``U_{n+j} J_n`` (degree ``2n + j``) exactly, with slack."""
    return math.ceil((2 * n + j + 2) / 2) + 2


def sigma_oracle(n: int, j: int, alpha: float, beta: float, quad_order: int | None = None) -> float:
    """Brute-force ``sigma(n, j)`` by Gauss-Jacobi quadrature of the defining integral."""
    _check(alpha, beta, n, j)
    q = oracle_order(n, j) if quad_order is None else int(quad_order)
    if q < n + j + 2 and quad_order is not None:
        raise DomainError(f"quad_order must be at least n+j+2 = {n + j + 2}")
    x, w = gauss_jacobi(q, alpha, beta)
    val = math.fsum(w * chebyshev_U(n + j, x) * jacobi_eval(n, alpha, beta, x))
    return val / gamma_norm(n, alpha, beta)


def c_hat(
    n: int, j: int, alpha: float, beta: float, a: float, b: float, method: str = "exact"
) -> ChatCoeff:
    """Projection of ``J_{n+j}^{a,b}`` onto ``J_n^{alpha,beta}`` (normalised by ``gamma_n``)."""
    _check(alpha, beta, n, j)
    if not (a > -1 and b > -1):
        raise DomainError(f"target parameters must exceed -1, got ({a}, {b})")
    if n + j == 0:
        return ChatCoeff(n, j, alpha, beta, a, b, 1.0)
    s = alpha + beta

    def ratio(m, num):
        al, bl, a_, b_ = num(alpha), num(beta), num(a), num(b)
        return (
            -(j - m) * (2 * n + j + m + a_ + b_ + 1) * (n + m + al + 1)
            / ((m + 1) * (n + m + a_ + 1) * (2 * n + m + al + bl + 2))
        )

    total, _ = _alternating_sum(j, ratio, method)
    if total == 0.0:
        return ChatCoeff(n, j, alpha, beta, a, b, 0.0)
    log_lead = (
        math.lgamma(n + j + a + 1)
        + math.lgamma(2 * n + j + a + b + 1)
        - math.lgamma(n + j + a + b + 1)
        - math.lgamma(j + 1)
        - math.lgamma(n + a + 1)
        + _log_head(n, s)
    )
    return ChatCoeff(n, j, alpha, beta, a, b, math.exp(log_lead) * total)


def sigma0_envelope(n: int, alpha: float, beta: float, rigorous: bool = False) -> float:
    """Upsilon-based upper envelope of ``sigma(n, 0)``, ``~ sqrt(pi n) / 2^(alpha+beta)``.

    ``rigorous=True`` swaps in :func:`upsilon_rigorous`, which always dominates.
    """
    _check(alpha, beta, n)
    s = alpha + beta
    if n < 1 or not n + s > 0:
        raise DomainError(f"envelope needs n >= 1 and n + alpha + beta > 0 (n={n})")
    ups = upsilon_rigorous if rigorous else upsilon
    return (
        math.sqrt(math.pi * n)
        / 2**s
        * ups(n, s + 1, 1.5)
        * ups(2 * n, 2, s + 1)
    )


@lru_cache(maxsize=1024)
def _table(n: int, alpha: float, beta: float, J: int, method: str) -> tuple[float, ...]:
    if method == "general_formula":
        return tuple(sigma_general(n, j, alpha, beta) for j in range(J + 1))
    if method == "oracle":
        return tuple(sigma_oracle(n, j, alpha, beta) for j in range(J + 1))
    if method == "closed_form":
        if alpha != beta:
            raise DomainError("closed forms exist only for alpha = beta")
        even = sigma_gegenbauer(n, alpha, J // 2)
        return tuple(float(even[j // 2]) if j % 2 == 0 else 0.0 for j in range(J + 1))
    raise DomainError(f"unknown sigma method {method!r}")


def sigma_table(n: int, alpha: float, beta: float, J: int, method: str = "general_formula") -> SigmaTable:
    """Cached ``sigma(n, 0..J)``.

    The memo is an ``lru_cache`` over immutable tuples, so concurrent callers
    see either a complete entry or compute their own identical copy.
    """
    _check(alpha, beta, n, J)
    vals = _table(int(n), float(alpha), float(beta), int(J), method)
    return SigmaTable(n=int(n), alpha=float(alpha), beta=float(beta), values=vals, method=method)
