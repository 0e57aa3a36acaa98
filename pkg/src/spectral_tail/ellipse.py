"""Bernstein-ellipse geometry and maximum-modulus estimation.

The ellipse of parameter ``rho > 1`` is the image of the circle
``|w| = rho`` under the Joukowski map ``z = (w + 1/w) / 2``; its foci are
``+-1`` and its semi-axes sum to ``rho``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import AnalyticityError, DomainError

__all__ = [
    "AnalyticFunction",
    "EllipseGeometry",
    "geometry",
    "map_to_ellipse",
    "ellipse_points",
    "max_modulus",
]

_INVPHI = (math.sqrt(5) - 1) / 2


@dataclass(frozen=True)
class EllipseGeometry:
    rho: float
    a: float
    b: float
    d: float
    perimeter_bound: float


@dataclass(frozen=True)
class AnalyticFunction:
    """A function analytic inside the ellipse of parameter ``rho_max``.

    ``evaluator`` must accept complex numpy arrays.  ``symmetric`` declares
    ``f(conj z) = conj f(z)`` (real coefficients), which lets the maximum
    search scan only the upper half of the ellipse.
    """

    evaluator: Callable[[np.ndarray], np.ndarray]
    rho_max: float = math.inf
    symmetric: bool = True
    name: str = ""

    def __call__(self, z):
        return self.evaluator(z)


def map_to_ellipse(w):
    """Joukowski map ``(w + 1/w) / 2``."""
    w = np.asarray(w, dtype=complex)
    if np.any(w == 0):
        raise DomainError("the Joukowski map is undefined at w = 0")
    z = (w + 1 / w) / 2
    return z[()] if z.ndim == 0 else z


def geometry(rho: float) -> EllipseGeometry:
    """Semi-axes, distance to ``[-1, 1]`` and perimeter bound of the ellipse."""
    if not rho > 1:
        raise DomainError(f"ellipse parameter must exceed 1, got {rho}")
    a = (rho + 1 / rho) / 2
    b = (rho - 1 / rho) / 2
    return EllipseGeometry(
        rho=rho,
        a=a,
        b=b,
        d=(rho - 1) ** 2 / (2 * rho),  # a - 1 without cancellation near rho = 1
        perimeter_bound=math.pi * math.sqrt(rho**2 + rho**-2),
    )


def ellipse_points(rho: float, theta) -> np.ndarray:
    """Points ``z(rho e^{i theta})`` on the ellipse."""
    return map_to_ellipse(rho * np.exp(1j * np.asarray(theta, dtype=float)))


def _golden_max(g: Callable[[float], float], lo: float, hi: float, tol: float) -> tuple[float, float]:
    """Golden-section search for the maximum of a unimodal ``g`` on ``[lo, hi]``."""
    c = hi - _INVPHI * (hi - lo)
    d = lo + _INVPHI * (hi - lo)
    gc, gd = g(c), g(d)
    while hi - lo > tol:
        if gc > gd:
            hi, d, gd = d, c, gc
            c = hi - _INVPHI * (hi - lo)
            gc = g(c)
        else:
            lo, c, gc = c, d, gd
            d = lo + _INVPHI * (hi - lo)
            gd = g(d)
    t = (lo + hi) / 2
    return t, g(t)


def max_modulus(
    f: AnalyticFunction,
    rho: float,
    grid_size: int = 2048,
    tol: float = 1e-10,
) -> float:
    """Estimate ``M = max |f(z)|`` over the ellipse of parameter ``rho``.

    ``|f|`` is sampled at ``grid_size`` equispaced angles (half circle when
    ``f.symmetric``), then the best bracket is refined by golden-section
    search to ``tol`` in angle.  The result is a lower estimate of the true
    maximum.
    """
    if not rho > 1:
        raise DomainError(f"ellipse parameter must exceed 1, got {rho}")
    if rho >= f.rho_max:
        raise AnalyticityError(
            f"rho = {rho} is outside the analyticity region (rho_max = {f.rho_max})"
        )
    if grid_size < 64:
        raise DomainError("grid_size must be at least 64")

    span = math.pi if f.symmetric else 2 * math.pi
    if f.symmetric:
        theta = np.linspace(0.0, span, grid_size)
    else:
        theta = np.linspace(0.0, span, grid_size, endpoint=False)
    vals = np.abs(f(ellipse_points(rho, theta)))
    i = int(np.argmax(vals))
    h = theta[1] - theta[0]

    def g(t):
        return float(np.abs(f(ellipse_points(rho, t))))

    _, refined = _golden_max(g, theta[i] - h, theta[i] + h, tol)
    return max(float(vals[i]), refined)
