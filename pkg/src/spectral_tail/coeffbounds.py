"""Upper bounds for Jacobi expansion coefficients and truncation errors.

Every function returns a :class:`BoundReport`.  ``value`` bounds
``|u_n|`` (or the weighted L2 truncation error) for a function analytic
inside the Bernstein ellipse of parameter ``rho`` with ``max |u| = M`` on it.
``stripped_value`` divides out the common factor ``M sqrt(n) / rho^n`` used
when comparing bounds against each other (``M / rho^N`` for truncation
bounds).

Constants written as ``C_n ~ 1`` in asymptotic statements are available in
two modes: ``'explicit'`` builds them from the Upsilon Gamma-ratio bounds,
``'unit'`` sets them to one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .ellipse import geometry
from .errors import DomainError
from .gammafn import gamma_norm, gamma_norm_bound, log_gamma_norm
from .sigma import (
    sigma0_envelope,
    sigma_cheb_type,
    sigma_first_two,
    sigma_gegenbauer,
    sigma_general,
    sigma_leg_type,
)

__all__ = [
    "BoundReport",
    "RHO_MIN",
    "bound_jacobi",
    "bound_gegenbauer",
    "bound_chebyshev",
    "bound_chebyshev2",
    "bound_legendre",
    "bound_cheb_type_3_2_1_2",
    "bound_leg_type_1_0",
    "contour_series_bound",
    "bound_xiang",
    "bound_xiang_legendre",
    "bound_davis",
    "bound_kambo_legendre",
    "legendre_gap",
    "truncation_constant",
    "truncation_bound",
    "truncation_bound_legendre",
    "truncation_bound_xiang",
]

#: smallest accepted ellipse parameter; bounds blow up as rho -> 1
RHO_MIN = 1 + 1e-9
#: window of degrees scanned when forming sup_{n >= N} of an explicit constant
SUP_WINDOW = 4096
_SQRT_PI = math.sqrt(math.pi)
CONSTANT_MODES = ("explicit", "unit")


@dataclass(frozen=True)
class BoundReport:
    """One evaluated bound and the inputs that produced it."""

    method: str
    n: int
    alpha: float
    beta: float
    rho: float
    M: float
    value: float
    stripped_value: float
    constant_mode: str = "explicit"
    constant: float = 1.0

    def as_row(self) -> dict:
        return {
            "method": self.method,
            "n": self.n,
            "alpha": self.alpha,
            "beta": self.beta,
            "rho": self.rho,
            "M": self.M,
            "value": self.value,
            "stripped_value": self.stripped_value,
            "constant_mode": self.constant_mode,
        }


def _check(n: int, rho: float, M: float, n_min: int = 0) -> None:
    if int(n) != n or n < n_min:
        raise DomainError(f"degree must be an integer >= {n_min}, got {n}")
    if not rho >= RHO_MIN:
        raise DomainError(f"rho must be at least 1 + 1e-9, got {rho}")
    if not (M > 0 and math.isfinite(M)):
        raise DomainError(f"M must be positive and finite, got {M}")


def _check_mode(mode: str) -> None:
    if mode not in CONSTANT_MODES:
        raise DomainError(f"constant mode must be one of {CONSTANT_MODES}, got {mode!r}")


def _report(method, n, alpha, beta, rho, M, value, mode="explicit", constant=1.0, strip=None):
    if strip is None:
        strip = M * math.sqrt(max(n, 1)) / rho**n
    if not (math.isfinite(value) and value > 0):
        raise DomainError(f"{method}: bound evaluated to {value} (n={n}, rho={rho})")
    return BoundReport(method, int(n), float(alpha), float(beta), float(rho), float(M), value, value / strip, mode, constant)


def _sqrt_norm_ratio(n: int, alpha: float, beta: float) -> float:
    """``sqrt(gamma_0 / gamma_n)``."""
    return math.exp(0.5 * (log_gamma_norm(0, alpha, beta) - log_gamma_norm(n, alpha, beta)))


# -- general Jacobi and Gegenbauer ------------------------------------------------


def bound_jacobi(n: int, alpha: float, beta: float, rho: float, M: float) -> BoundReport:
    """``(M/rho^n)[|s0| + |s1|/rho + 2/(rho(rho-1)) sqrt(g0/gn)]``."""
    _check(n, rho, M)
    s0, s1 = sigma_first_two(n, alpha, beta)
    v = M / rho**n * (abs(s0) + abs(s1) / rho + 2 / (rho * (rho - 1)) * _sqrt_norm_ratio(n, alpha, beta))
    return _report("jacobi", n, alpha, beta, rho, M, v)


def bound_gegenbauer(n: int, alpha: float, rho: float, M: float) -> BoundReport:
    """``(M/rho^n)[|s0| + 2/(rho^2-1) sqrt(g0/gn)]`` for ``alpha = beta``."""
    _check(n, rho, M)
    s0, _ = sigma_first_two(n, alpha, alpha)
    v = M / rho**n * (abs(s0) + 2 / (rho**2 - 1) * _sqrt_norm_ratio(n, alpha, alpha))
    return _report("gegenbauer", n, alpha, alpha, rho, M, v)


# -- Chebyshev family ---------------------------------------------------------


def bound_chebyshev(n: int, rho: float, M: float) -> BoundReport:
    """First-kind Chebyshev coefficients (``T_n`` basis): ``2M/rho^n``."""
    _check(n, rho, M)
    return _report("chebyshev", n, -0.5, -0.5, rho, M, 2 * M / rho**n)


def bound_chebyshev2(n: int, rho: float, M: float, variant: str = "A") -> BoundReport:
    """Second-kind Chebyshev coefficients (``U_n`` basis).

    Variant 'A' is ``(M/rho^n)(1 + rho^-2)``; variant 'B' replaces the
    factor by the perimeter bound, ``M L / (pi rho^(n+1))``.
    """
    _check(n, rho, M)
    if variant == "A":
        v = M / rho**n * (1 + rho**-2)
    elif variant == "B":
        v = M * geometry(rho).perimeter_bound / (math.pi * rho ** (n + 1))
    else:
        raise DomainError(f"variant must be 'A' or 'B', got {variant!r}")
    return _report(f"chebyshev2_{variant}", n, 0.5, 0.5, rho, M, v)


def _ratio_envelope(n: int) -> float:
    """``sqrt(n) exp((8n+7)/(12(2n+1)(n+1)) + 1/(4n))``, the stated envelope of ``(n+1)!/Gamma(n+3/2)``.

    This equals ``sqrt(n) * upsilon(n, 2, 3/2)`` and falls below the true ratio
    for ``n >= 5``, so 'envelope' mode is not a guaranteed bound there.
    """
    return math.sqrt(n) * math.exp((8 * n + 7) / (12 * (2 * n + 1) * (n + 1)) + 1 / (4 * n))


def bound_cheb_type_3_2_1_2(n: int, rho: float, M: float, mode: str = "exact") -> BoundReport:
    """Bound for the index pair ``(3/2, 1/2)``.

    ``mode='exact'`` evaluates ``(n+1)!/Gamma(n+3/2)`` directly; ``'envelope'``
    replaces it by its explicit upper bound (needs ``n >= 1``).
    """
    _check(n, rho, M, n_min=1 if mode == "envelope" else 0)
    if mode == "exact":
        ratio = math.exp(math.lgamma(n + 2) - math.lgamma(n + 1.5))
    elif mode == "envelope":
        ratio = _ratio_envelope(n)
    else:
        raise DomainError(f"mode must be 'exact' or 'envelope', got {mode!r}")
    v = _SQRT_PI / 4 * ratio * M / rho**n * (1 + rho**-2) * ((n + 2) / (n + 1) + 1 / rho)
    return _report(f"cheb_type_3_2_1_2_{mode}", n, 1.5, 0.5, rho, M, v)


def bound_leg_type_1_0(n: int, rho: float, M: float, mode: str = "exact") -> BoundReport:
    """Bound for the index pair ``(1, 0)``."""
    _check(n, rho, M, n_min=1 if mode == "envelope" else 0)
    if mode == "exact":
        ratio = math.exp(math.lgamma(n + 2) - math.lgamma(n + 1.5))
    elif mode == "envelope":
        ratio = _ratio_envelope(n)
    else:
        raise DomainError(f"mode must be 'exact' or 'envelope', got {mode!r}")
    q = 1 / (rho**2 - 1)
    brace = 0.5 + (n + 2) / (2 * (2 * n + 3)) * q + (n + 1) / ((2 * n + 3) * rho) * (1 + (n + 3) / (2 * n + 5) * q)
    v = M / rho**n * _SQRT_PI * ratio * brace
    return _report(f"leg_type_1_0_{mode}", n, 1.0, 0.0, rho, M, v)


def _sigma_sequence(n: int, alpha: float, beta: float, J: int) -> Callable[[int], float]:
    """Cheapest exact route to ``sigma(n, j)`` for ``j = 0..J``."""
    if alpha == beta:
        even = sigma_gegenbauer(n, alpha, J // 2 + 1)
        return lambda j: 0.0 if j % 2 else float(even[j // 2])
    k, l = alpha - 0.5, beta - 0.5
    if k == int(k) and l == int(l) and k >= 0 and l >= 0:
        return lambda j: sigma_cheb_type(n, j, int(k), int(l))
    if alpha == int(alpha) and beta == int(beta):
        return lambda j: sigma_leg_type(n, j, int(alpha), int(beta))
    return lambda j: sigma_general(n, j, alpha, beta)


def contour_series_bound(
    n: int, alpha: float, beta: float, rho: float, M: float, J: int = 200
) -> BoundReport:
    """Term-by-term partial sum of the contour estimate.

    ``(M/rho^n)[|s0| + |s1|/rho + rho^-2 sum_{j<=J} |s_{j+2} - s_j| rho^-j]``.
    Every closed-form coefficient bound above must dominate this value.
    """
    _check(n, rho, M)
    sig = _sigma_sequence(n, alpha, beta, J + 2)
    s = [sig(j) for j in range(J + 3)]
    tail = math.fsum(abs(s[j + 2] - s[j]) * rho**-j for j in range(J + 1))
    v = M / rho**n * (abs(s[0]) + abs(s[1]) / rho + tail / rho**2)
    return _report(f"contour_series_J{J}", n, alpha, beta, rho, M, v)


# -- Legendre -----------------------------------------------------------------


def _legendre_exp(n: int) -> float:
    return math.exp((8 * n - 1) / (12 * n * (2 * n - 1)))


def bound_legendre(n: int, rho: float, M: float, mode: str = "explicit") -> BoundReport:
    """Legendre coefficient bound.

    Modes
    -----
    'explicit'
        ``(M sqrt(pi n)/rho^n)(1 + (n+2)/((2n+3)(rho^2-1))) exp((8n-1)/(12n(2n-1)))``.
    'exact'
        same with ``sqrt(n) exp(...)`` replaced by ``Gamma(n+1)/Gamma(n+1/2)``.
    'asymptotic'
        ``M sqrt(pi n)/rho^n (rho^2 - 1/2)/(rho^2 - 1)`` (large-``n`` form).
    """
    _check(n, rho, M, n_min=0 if mode == "exact" else 1)
    q = 1 / (rho**2 - 1)
    if mode == "explicit":
        v = M * math.sqrt(math.pi * n) / rho**n * (1 + (n + 2) / (2 * n + 3) * q) * _legendre_exp(n)
    elif mode == "exact":
        ratio = math.exp(math.lgamma(n + 1) - math.lgamma(n + 0.5))
        v = M * _SQRT_PI * ratio / rho**n * (1 + (n + 2) / (2 * n + 3) * q)
    elif mode == "asymptotic":
        v = M * math.sqrt(math.pi * n) / rho**n * (rho**2 - 0.5) / (rho**2 - 1)
    else:
        raise DomainError(f"mode must be 'explicit', 'exact' or 'asymptotic', got {mode!r}")
    return _report(f"legendre_{mode}", n, 0.0, 0.0, rho, M, v)


# -- literature bounds --------------------------------------------------------


def bound_xiang(n: int, alpha: float, beta: float, rho: float, M: float) -> BoundReport:
    """``2M/(rho^(n-1)(rho-1)) sqrt(g0/gn)``."""
    _check(n, rho, M)
    v = 2 * M / (rho ** (n - 1) * (rho - 1)) * _sqrt_norm_ratio(n, alpha, beta)
    return _report("xiang", n, alpha, beta, rho, M, v)


def bound_xiang_legendre(n: int, rho: float, M: float) -> BoundReport:
    """``2 sqrt(n) M/rho^n (1 + 1/(rho^2-1))``."""
    _check(n, rho, M, n_min=1)
    v = 2 * math.sqrt(n) * M / rho**n * (1 + 1 / (rho**2 - 1))
    return _report("xiang_legendre", n, 0.0, 0.0, rho, M, v)


def bound_davis(n: int, rho: float, M: float) -> BoundReport:
    """``(2n+1)/2 * pi sqrt(rho^2 + rho^-2) M / (rho^n (rho-1))``."""
    _check(n, rho, M)
    v = (2 * n + 1) / 2 * geometry(rho).perimeter_bound * M / (rho**n * (rho - 1))
    return _report("davis", n, 0.0, 0.0, rho, M, v)


def bound_kambo_legendre(n: int, rho: float, M: float) -> BoundReport:
    """Large-``n`` form ``M sqrt(pi n)/rho^n sqrt(rho^4+1)/(rho^2-1)``."""
    _check(n, rho, M, n_min=1)
    v = M * math.sqrt(math.pi * n) / rho**n * math.sqrt(rho**4 + 1) / (rho**2 - 1)
    return _report("kambo_legendre", n, 0.0, 0.0, rho, M, v)


def legendre_gap(n: int, rho: float) -> float:
    """``e_n(rho)``: stripped Xiang Legendre factor minus the stripped explicit Legendre factor."""
    _check(n, rho, 1.0, n_min=1)
    q = 1 / (rho**2 - 1)
    b_tilde = 2 * (1 + q)
    b_n = _SQRT_PI * (1 + (n + 2) / (2 * n + 3) * q) * _legendre_exp(n)
    return b_tilde - b_n


# -- truncation ---------------------------------------------------------------


def _general_K(n: int, alpha: float, beta: float) -> float:
    """Ratio of ``(s0 + |s1|) sqrt(gamma_n)`` to its limiting form, per unit ``|alpha-beta|``.

    Uses the rigorous Upsilon envelopes where they are defined and exact values otherwise.
    """
    s = alpha + beta
    lead = math.sqrt(math.pi / 2**s)
    if n >= 1 and n + s > 0:
        core = sigma0_envelope(n, alpha, beta, rigorous=True) * math.sqrt(
            gamma_norm_bound(n, alpha, beta, rigorous=True)
        )
    else:
        core = sigma_first_two(n, alpha, beta)[0] * math.sqrt(gamma_norm(n, alpha, beta))
    return core / lead * max(1.0, (2 * n + 2) / (2 * n + s + 2))


def truncation_constant(N: int, alpha: float, beta: float, mode: str = "explicit") -> float:
    """``C_N`` for the general truncation bound.

    Explicit mode takes ``max(1, K_n)`` over ``n in [N, N + SUP_WINDOW]``; the
    envelope ratios ``K_n`` tend to 1 from above as ``n`` grows.
    """
    _check_mode(mode)
    if mode == "unit":
        return 1.0
    return max(1.0, max(_general_K(n, alpha, beta) for n in range(N, N + SUP_WINDOW + 1)))


def truncation_bound(
    N: int, alpha: float, beta: float, rho: float, M: float, mode: str = "explicit"
) -> BoundReport:
    """Weighted L2 error of the degree-``(N-1)`` Jacobi projection."""
    _check(N, rho, M, n_min=1)
    _check_mode(mode)
    C = truncation_constant(N, alpha, beta, mode)
    s = alpha + beta
    bracket = math.sqrt(math.pi / 2**s) * (1 + abs(alpha - beta) / rho) + 2 * math.sqrt(
        gamma_norm(0, alpha, beta)
    ) / (rho * (rho - 1))
    v = bracket * C * M / (rho ** (N - 1) * math.sqrt(rho**2 - 1))
    return _report("truncation", N, alpha, beta, rho, M, v, mode, C, strip=M / rho**N)


def _legendre_K(n: np.ndarray, rho: float) -> np.ndarray:
    q = 1 / (rho**2 - 1)
    return (
        np.sqrt(2 * n / (2 * n + 1))
        * np.exp((8 * n - 1) / (12 * n * (2 * n - 1)))
        * (1 + (n + 2) / (2 * n + 3) * q)
        / (1 + q / 2)
    )


def truncation_bound_legendre(N: int, rho: float, M: float, mode: str = "explicit") -> BoundReport:
    """``(1 + 1/(2(rho^2-1))) C_N sqrt(pi) M / (rho^(N-1) sqrt(rho^2-1))``."""
    _check(N, rho, M, n_min=1)
    _check_mode(mode)
    if mode == "explicit":
        n = np.arange(N, N + SUP_WINDOW + 1, dtype=float)
        C = max(1.0, float(np.max(_legendre_K(n, rho))))
    else:
        C = 1.0
    v = (1 + 1 / (2 * (rho**2 - 1))) * C * _SQRT_PI * M / (rho ** (N - 1) * math.sqrt(rho**2 - 1))
    return _report("truncation_legendre", N, 0.0, 0.0, rho, M, v, mode, C, strip=M / rho**N)


def truncation_bound_xiang(N: int, rho: float, M: float) -> BoundReport:
    """``2 sqrt(2) M / (rho^(N-2) (rho-1)^2)``."""
    _check(N, rho, M, n_min=1)
    v = 2 * math.sqrt(2) * M / (rho ** (N - 2) * (rho - 1) ** 2)
    return _report("truncation_xiang", N, 0.0, 0.0, rho, M, v, strip=M / rho**N)
