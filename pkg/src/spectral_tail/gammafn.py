"""Gamma-function kernels.

All ratios are formed in log space: quotients such as
``Gamma(2n + j + m + 2) / Gamma(2n + m + a + b + 2)`` overflow in direct
form long before the degrees of interest here.
"""

from __future__ import annotations

import math

import numpy as np
from scipy import special

from .errors import DomainError

__all__ = [
    "log_gamma",
    "signed_log_gamma",
    "gamma_ratio",
    "log_gamma_ratio",
    "upsilon",
    "upsilon_rigorous",
    "gamma_norm",
    "log_gamma_norm",
    "gamma_norm_bound",
]


def log_gamma(x):
    """Return ``ln Gamma(x)`` for ``x > 0`` (scalar or array)."""
    if np.ndim(x) == 0:
        x = float(x)
        if not x > 0:
            raise DomainError(f"log_gamma requires x > 0, got {x}")
        return math.lgamma(x)
    x = np.asarray(x, dtype=float)
    if np.any(~(x > 0)):
        raise DomainError("log_gamma requires x > 0 for every entry")
    return special.gammaln(x)


def signed_log_gamma(x: float) -> tuple[float, int]:
    """Return ``(ln|Gamma(x)|, sign(Gamma(x)))`` for real ``x`` off the poles."""
    x = float(x)
    if x <= 0 and x == math.floor(x):
        raise DomainError(f"Gamma has a pole at x = {x}")
    if x > 0:
        return math.lgamma(x), 1
    # Gamma alternates sign between consecutive negative integers.
    sign = -1 if int(math.floor(x)) % 2 else 1
    return math.lgamma(x), sign


# B_{2k} / (2k (2k-1)), Stirling series coefficients
_STIRLING = (1 / 12, -1 / 360, 1 / 1260, -1 / 1680, 1 / 1188, -691 / 360360, 1 / 156, -3617 / 122400)


def log_gamma_ratio(x: float, d: float) -> float:
    """``ln Gamma(x + d) - ln Gamma(x)`` without the cancellation of two large lgammas."""
    y = x + d
    if d == 0:
        return 0.0
    if not (x > 0 and y > 0):
        raise DomainError(f"log_gamma_ratio needs x > 0 and x + d > 0 (x={x}, d={d})")
    if min(x, y) < 16:
        return math.lgamma(y) - math.lgamma(x)
    out = (x - 0.5) * math.log1p(d / x) + d * math.log(y) - d
    for k, c in enumerate(_STIRLING, start=1):
        out += c * (y ** (1 - 2 * k) - x ** (1 - 2 * k))
    return out


def gamma_ratio(n: float, a: float, b: float) -> float:
    """``Gamma(n + a) / Gamma(n + b)`` evaluated through :func:`log_gamma_ratio`."""
    if not (n + a > 0 and n + b > 0):
        raise DomainError(f"gamma_ratio needs n+a > 0 and n+b > 0 (n={n}, a={a}, b={b})")
    if n <= 0:
        return math.exp(math.lgamma(n + a) - math.lgamma(n + b))
    # expand both around n so that n + a and n + b are never rounded
    return math.exp(log_gamma_ratio(n, a) - log_gamma_ratio(n, b))


def upsilon(n: int, a: float, b: float) -> float:
    """Explicit constant in ``Gamma(n+a)/Gamma(n+b) <= upsilon(n,a,b) * n**(a-b)``.

    Valid for ``n >= 1``, ``n + a > 1`` and ``n + b > 1``.
    """
    if n < 1 or not (n + a > 1 and n + b > 1):
        raise DomainError(f"upsilon needs n >= 1, n+a > 1, n+b > 1 (n={n}, a={a}, b={b})")
    d = a - b
    return math.exp(d / (2 * (n + b - 1)) + 1 / (12 * (n + a - 1)) + d * d / n)


def upsilon_rigorous(n: int, a: float, b: float) -> float:
    """A constant that provably satisfies ``Gamma(n+a)/Gamma(n+b) <= value * n**(a-b)``.

    Built from the two-sided Stirling inequality
    ``0 < ln Gamma(x) - [(x - 1/2) ln x - x + ln(2 pi)/2] < 1/(12 x)``, ``x > 0``.
    :func:`upsilon` is not a valid bound everywhere (e.g. ``a=2, b=3/2, n>=5``);
    use this where the inequality must hold.
    """
    if n < 1 or not (n + a > 0 and n + b > 0):
        raise DomainError(f"upsilon_rigorous needs n >= 1, n+a > 0, n+b > 0 (n={n}, a={a}, b={b})")
    x, y = n + a, n + b
    log_ratio = (x - 0.5) * math.log(x) - x - (y - 0.5) * math.log(y) + y + 1 / (12 * x)
    return math.exp(log_ratio - (a - b) * math.log(n))


def _check_index(alpha: float, beta: float) -> None:
    if not (alpha > -1 and beta > -1):
        raise DomainError(f"Jacobi parameters must exceed -1, got ({alpha}, {beta})")


def log_gamma_norm(n: int, alpha: float, beta: float) -> float:
    """Natural log of :func:`gamma_norm`."""
    _check_index(alpha, beta)
    if n < 0:
        raise DomainError(f"degree must be nonnegative, got {n}")
    s = alpha + beta
    if n == 0:
        # (s+1) Gamma(s+1) = Gamma(s+2) removes the 0 * Gamma(0) form at s = -1.
        return (s + 1) * math.log(2) + math.lgamma(alpha + 1) + math.lgamma(beta + 1) - math.lgamma(s + 2)
    return (
        (s + 1) * math.log(2)
        + log_gamma_ratio(n + 1, alpha)
        + log_gamma_ratio(n + 1, beta)
        - log_gamma_ratio(n + 1, s)
        - math.log(2 * n + s + 1)
    )


def gamma_norm(n: int, alpha: float, beta: float) -> float:
    """Squared weighted norm of the Szego-normalised Jacobi polynomial.

    ``int_{-1}^{1} J_n(x)^2 (1-x)^alpha (1+x)^beta dx``.
    """
    return math.exp(log_gamma_norm(n, alpha, beta))


def gamma_norm_bound(n: int, alpha: float, beta: float, rigorous: bool = False) -> float:
    """Upsilon-based upper bound for :func:`gamma_norm` (``n >= 1``, ``n+alpha+beta > 0``).

    ``2^(s+1)/(2n+s+1) * U(n, alpha+1, 1) * U(n, beta+1, s+1)`` with ``s = alpha+beta``
    and ``U`` either :func:`upsilon` (default) or :func:`upsilon_rigorous`.
    """
    _check_index(alpha, beta)
    if n < 1 or not n + alpha + beta > 0:
        raise DomainError(f"gamma_norm_bound needs n >= 1 and n+alpha+beta > 0 (n={n})")
    s = alpha + beta
    ups = upsilon_rigorous if rigorous else upsilon
    return (
        2 ** (s + 1)
        / (2 * n + s + 1)
        * ups(n, alpha + 1, 1)
        * ups(n, beta + 1, s + 1)
    )
