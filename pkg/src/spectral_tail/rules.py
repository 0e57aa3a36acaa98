"""Gauss-Jacobi rules from the symmetric tridiagonal (Golub-Welsch) eigenproblem.

Nodes are the eigenvalues of the Jacobi matrix, polished by one Newton
step on the recurrence.  Weights come from Christoffel numbers
``1 / sum_k J_k(x)^2 / gamma_k`` rather than eigenvector components, which
keeps the tiny weights next to the endpoints accurate in a relative sense.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np
from scipy.linalg import LinAlgError, eigh_tridiagonal

from .errors import DomainError, NumericalError
from .gammafn import log_gamma_norm
from .orthopoly import jacobi_eval_all

__all__ = ["jacobi_matrix", "gauss_jacobi"]


def jacobi_matrix(n: int, alpha: float, beta: float) -> tuple[np.ndarray, np.ndarray]:
    """Diagonal and off-diagonal of the Jacobi matrix of the monic Jacobi polynomials."""
    s = alpha + beta
    k = np.arange(n, dtype=float)
    denom = (2 * k + s) * (2 * k + s + 2)
    with np.errstate(divide="ignore", invalid="ignore"):
        diag = (beta**2 - alpha**2) / denom
    diag[0] = (beta - alpha) / (s + 2)
    k = np.arange(1, n, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore"):
        off2 = 4 * k * (k + alpha) * (k + beta) * (k + s) / ((2 * k + s) ** 2 * (2 * k + s + 1) * (2 * k + s - 1))
    if n > 1:
        # (k+s)/(2k+s-1) is 0/0 at k = 1, s = -1; the ratio tends to 1/1.
        off2[0] = 4 * (1 + alpha) * (1 + beta) / ((2 + s) ** 2 * (3 + s))
    return diag, np.sqrt(off2)


@lru_cache(maxsize=256)
def _gauss_jacobi_cached(n: int, alpha: float, beta: float):
    diag, off = jacobi_matrix(n, alpha, beta)
    try:
        x = eigh_tridiagonal(diag, off, eigvals_only=True)
    except LinAlgError as exc:
        raise NumericalError(f"tridiagonal eigensolver failed for n={n}") from exc
    x = np.sort(x)

    norms = np.exp([log_gamma_norm(k, alpha, beta) for k in range(n + 1)])
    P = jacobi_eval_all(n, alpha, beta, x)
    dP = (n + alpha + beta + 1) / 2 * jacobi_eval_all(n - 1, alpha + 1, beta + 1, x)[n - 1] if n > 0 else 0
    step = P[n] / dP
    x = np.clip(x - step, -1.0, 1.0)
    if alpha == beta:
        x = (x - x[::-1]) / 2

    P = jacobi_eval_all(n - 1, alpha, beta, x)
    w = 1.0 / np.sum(P**2 / norms[:n, None], axis=0)
    x.setflags(write=False)
    w.setflags(write=False)
    return x, w


def gauss_jacobi(n: int, alpha: float, beta: float) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights of the ``n``-point Gauss rule for ``(1-x)^alpha (1+x)^beta``.

    Exact for polynomials of degree ``2n - 1``.  Returned arrays are read-only.
    """
    if n < 1:
        raise DomainError(f"rule order must be at least 1, got {n}")
    if not (alpha > -1 and beta > -1):
        raise DomainError(f"Jacobi parameters must exceed -1, got ({alpha}, {beta})")
    x, w = _gauss_jacobi_cached(int(n), float(alpha), float(beta))
    if not (np.all(np.isfinite(x)) and np.all(w > 0)):
        raise NumericalError(f"Gauss rule n={n} ({alpha}, {beta}) produced invalid nodes/weights")
    return x, w


def weight_moment(k: int, alpha: float, beta: float | None = None) -> float:
    """``int_{-1}^{1} x^k (1-x^2)^alpha dx`` (symmetric weight only)."""
    if beta is not None and beta != alpha:
        raise DomainError("closed-form moments are implemented for the symmetric weight")
    if k % 2:
        return 0.0
    return math.exp(math.lgamma((k + 1) / 2) + math.lgamma(alpha + 1) - math.lgamma(k / 2 + alpha + 1.5))
