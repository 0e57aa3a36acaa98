"""Jacobi, Gegenbauer and Chebyshev polynomials.

Jacobi polynomials use Szego's normalisation, ``J_n(1) = binom(n+alpha, n)``,
orthogonal under ``(1-x)**alpha * (1+x)**beta`` on ``(-1, 1)``.  Every
evaluator accepts real or complex scalars and numpy arrays.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .gammafn import signed_log_gamma

__all__ = [
    "JacobiIndex",
    "jacobi_eval",
    "jacobi_eval_all",
    "jacobi_derivative",
    "chebyshev_T",
    "chebyshev_U",
    "GegenbauerEllipseForm",
    "gegenbauer_ellipse_form",
    "gegenbauer_on_ellipse",
    "ConnectionCoeffs",
    "connection_coeffs",
]


@dataclass(frozen=True)
class JacobiIndex:
    """Parameter pair ``(alpha, beta)`` of the weight ``(1-x)^alpha (1+x)^beta``."""

    alpha: float
    beta: float

    def __post_init__(self):
        if not (self.alpha > -1 and self.beta > -1):
            raise DomainError(f"Jacobi parameters must exceed -1, got ({self.alpha}, {self.beta})")

    @property
    def symmetric(self) -> bool:
        return self.alpha == self.beta


def _as_array(x):
    x = np.asarray(x)
    if not np.iscomplexobj(x):
        x = x.astype(float)
    return x


def _recurrence_coeffs(k: int, a: float, b: float):
    """Coefficients ``(A, B, C)`` with ``J_{k+1} = (A x + B) J_k - C J_{k-1}``, ``k >= 1``."""
    s = a + b
    c1 = 2 * (k + 1) * (k + s + 1) * (2 * k + s)
    A = (2 * k + s + 1) * (2 * k + s + 2) * (2 * k + s) / c1
    B = (2 * k + s + 1) * (a * a - b * b) / c1
    C = 2 * (k + a) * (k + b) * (2 * k + s + 2) / c1
    return A, B, C


def jacobi_eval_all(nmax: int, alpha: float, beta: float, x) -> np.ndarray:
    """Values ``J_0(x), ..., J_nmax(x)`` stacked along a new leading axis."""
    JacobiIndex(alpha, beta)
    if nmax < 0:
        raise DomainError("nmax must be nonnegative")
    x = _as_array(x)
    out = np.empty((nmax + 1,) + x.shape, dtype=np.result_type(x, float))
    out[0] = 1.0
    if nmax == 0:
        return out
    out[1] = ((alpha + beta + 2) * x + (alpha - beta)) / 2
    for k in range(1, nmax):
        A, B, C = _recurrence_coeffs(k, alpha, beta)
        out[k + 1] = (A * x + B) * out[k] - C * out[k - 1]
    return out


def jacobi_eval(n: int, alpha: float, beta: float, x):
    """``J_n^{alpha,beta}(x)`` by the three-term recurrence."""
    v = jacobi_eval_all(n, alpha, beta, x)[n]
    return v[()] if v.ndim == 0 else v


def jacobi_derivative(n: int, alpha: float, beta: float, x):
    """``d/dx J_n^{alpha,beta}(x) = (n+alpha+beta+1)/2 * J_{n-1}^{alpha+1,beta+1}(x)``."""
    if n == 0:
        return np.zeros_like(_as_array(x))[()]
    return (n + alpha + beta + 1) / 2 * jacobi_eval(n - 1, alpha + 1, beta + 1, x)


def chebyshev_T(n: int, x):
    """First-kind Chebyshev polynomial by recurrence."""
    x = _as_array(x)
    t0, t1 = np.ones_like(x), x
    if n == 0:
        return t0[()]
    for _ in range(n - 1):
        t0, t1 = t1, 2 * x * t1 - t0
    return t1[()]


def chebyshev_U(n: int, x):
    """Second-kind Chebyshev polynomial by recurrence."""
    x = _as_array(x)
    u0, u1 = np.ones_like(x), 2 * x
    if n == 0:
        return u0[()]
    for _ in range(n - 1):
        u0, u1 = u1, 2 * x * u1 - u0
    return u1[()]


@dataclass(frozen=True)
class GegenbauerEllipseForm:
    """Constants of ``J_n^{a,a}(z) = A * sum_k g_k g_{n-k} w^(n-2k)``, ``z = (w + 1/w)/2``."""

    n: int
    alpha: float
    g: np.ndarray
    A: float


def gegenbauer_ellipse_form(n: int, alpha: float) -> GegenbauerEllipseForm:
    if not alpha > -1:
        raise DomainError(f"alpha must exceed -1, got {alpha}")
    if n < 0:
        raise DomainError("degree must be nonnegative")
    if alpha == -0.5:
        g = np.zeros(n + 1)
        g[0] = g[n] = 1.0
        A = math.exp(math.lgamma(n + 0.5) - math.lgamma(n + 1)) / (2 * math.sqrt(math.pi))
        if n == 0:
            # T_0 = 1 = J_0 while the two-term form would double count w^0.
            A = 1.0
        return GegenbauerEllipseForm(n, alpha, g, A)
    # Running products avoid the Gamma quotient for large k.
    k = np.arange(1, n + 1)
    g = np.concatenate(([1.0], np.cumprod((k + alpha - 0.5) / k)))
    if n == 0:
        A = 1.0
    else:
        l1, s1 = signed_log_gamma(2 * alpha + 1)
        l2, s2 = signed_log_gamma(n + 2 * alpha + 1)
        A = s1 * s2 * math.exp(l1 + math.lgamma(n + alpha + 1) - math.lgamma(alpha + 1) - l2)
    return GegenbauerEllipseForm(n, alpha, g, A)


def gegenbauer_on_ellipse(n: int, alpha: float, w):
    """``J_n^{alpha,alpha}`` at ``z = (w + 1/w)/2`` through the explicit ``w``-sum."""
    w = np.asarray(w, dtype=complex)
    if np.any(w == 0):
        raise DomainError("w = 0 is not admissible")
    form = gegenbauer_ellipse_form(n, alpha)
    coeffs = form.g * form.g[::-1]
    # Horner in t = w^-2 on sum_k c_k t^k, then scale by w^n.
    t = 1 / (w * w)
    acc = np.zeros_like(w)
    for c in coeffs[::-1]:
        acc = acc * t + c
    v = form.A * w**n * acc
    return v[()] if v.ndim == 0 else v


@dataclass(frozen=True)
class ConnectionCoeffs:
    """``(1-x)^k (1+x)^l J_n^{alpha+k, beta+l} = sum_i d[i-n] J_i^{alpha,beta}``."""

    n: int
    base: JacobiIndex
    k: int
    l: int
    d: np.ndarray

    def __getitem__(self, i: int) -> float:
        if not self.n <= i <= self.n + self.k + self.l:
            return 0.0
        return float(self.d[i - self.n])


def _peel(coeffs: dict[int, float], a: float, b: float, side: str) -> dict[int, float]:
    """Multiply an expansion in ``J^{a+1,b}`` (side 'minus') or ``J^{a,b+1}`` (side 'plus')
    by ``(1 -+ x)`` and re-express it in ``J^{a,b}``."""
    out: dict[int, float] = {}
    for m, c in coeffs.items():
        f = 2 / (2 * m + a + b + 2)
        if side == "minus":
            lo, hi = f * (m + a + 1), -f * (m + 1)
        else:
            lo, hi = f * (m + b + 1), f * (m + 1)
        out[m] = out.get(m, 0.0) + c * lo
        out[m + 1] = out.get(m + 1, 0.0) + c * hi
    return out


def connection_coeffs(
    n: int, alpha: float, beta: float, k: int, l: int, order: str = "minus_first"
) -> ConnectionCoeffs:
    """Coefficients expressing ``(1-x)^k (1+x)^l J_n^{alpha+k,beta+l}`` in ``{J_i^{alpha,beta}}``.

    The factors are removed one at a time with the two mixed relations;
    ``order`` chooses whether all ``(1-x)`` factors ('minus_first') or all
    ``(1+x)`` factors ('plus_first') go first.  The expansion is unique, so
    both orders agree up to rounding.
    """
    base = JacobiIndex(alpha, beta)
    if k < 0 or l < 0 or n < 0:
        raise DomainError("n, k, l must be nonnegative")
    if order not in ("minus_first", "plus_first"):
        raise DomainError(f"unknown peeling order {order!r}")
    coeffs = {n: 1.0}
    a, b = alpha + k, beta + l
    steps = ["minus"] * k + ["plus"] * l
    if order == "plus_first":
        steps = steps[::-1]
    for side in steps:
        if side == "minus":
            a -= 1
        else:
            b -= 1
        coeffs = _peel(coeffs, a, b, side)
    d = np.array([coeffs.get(i, 0.0) for i in range(n, n + k + l + 1)])
    return ConnectionCoeffs(n=n, base=base, k=k, l=l, d=d)
