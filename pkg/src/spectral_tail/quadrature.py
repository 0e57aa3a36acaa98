"""Gegenbauer-Gauss quadrature: rules, remainders and a-priori error bounds.

The remainder of the ``n``-point rule for the weight ``(1-x^2)^alpha`` is a
contour integral of ``Q_n / J_n`` against ``u``.  Expanding that ratio in
``w = z + sqrt(z^2 - 1)`` gives coefficients ``mu_{n,2l}`` that follow from
the ``sigma`` table by a triangular recursion; their successive differences
``theta_{n,l}`` control the computable bound.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from decimal import Decimal, localcontext
from typing import Callable

import numpy as np

from .coeffbounds import RHO_MIN, BoundReport, bound_gegenbauer, bound_legendre
from .ellipse import map_to_ellipse
from .errors import DomainError, NumericalError, PrecisionWarning
from .gammafn import gamma_norm
from .orthopoly import gegenbauer_ellipse_form, jacobi_eval
from .rules import gauss_jacobi
from .sigma import sigma_first_two, sigma_gegenbauer, sigma_general

__all__ = [
    "QuadratureRule",
    "MuSequence",
    "ThetaProfile",
    "MinModulus",
    "gauss_rule",
    "quad_remainder",
    "q_function",
    "mu_coeffs",
    "theta_profile",
    "bound_quad_computable",
    "bound_quad_gegenbauer",
    "bound_quad_legendre",
    "bound_quad_literature",
    "bound_quad_cheb2_closed",
    "gegenbauer_min_modulus",
    "LITERATURE_METHODS",
]

_EPS = np.finfo(float).eps
LITERATURE_METHODS = ("chawla_cheb", "hunter_general", "hunter_cheb2", "kambo_legendre")


@dataclass(frozen=True)
class QuadratureRule:
    n: int
    alpha: float
    nodes: np.ndarray
    weights: np.ndarray

    def __call__(self, f: Callable) -> float:
        vals = np.asarray(f(self.nodes))
        if np.iscomplexobj(vals):
            vals = vals.real
        return math.fsum(self.weights * vals)


@dataclass(frozen=True)
class MuSequence:
    """``mu_{n,2l}`` for ``l = 0..L`` plus an absolute rounding-error estimate per entry.

    ``digits`` is 0 when the double-precision recursion was accurate enough,
    otherwise the decimal working precision of the fallback run.
    """

    n: int
    alpha: float
    values: np.ndarray
    errors: np.ndarray
    digits: int = 0

    @property
    def L(self) -> int:
        return len(self.values) - 1

    @property
    def relative_error(self) -> float:
        scale = float(np.max(np.abs(self.values)))
        return float(np.max(self.errors)) / scale if scale > 0 else 0.0

    @property
    def condition(self) -> float:
        return self.relative_error / _EPS


@dataclass(frozen=True)
class ThetaProfile:
    n: int
    alpha: float
    theta: np.ndarray
    theta_max: float
    argmax_l: int


@dataclass(frozen=True)
class MinModulus:
    """Minimum of ``|J_n^{alpha,alpha}|`` on the ellipse and several lower bounds for it.

    ``sampled`` is the grid minimum (an upper estimate of the true minimum);
    ``certified`` subtracts a Lipschitz margin and is a guaranteed lower
    bound; ``asymptotic_unit`` and ``asymptotic_gamma`` are the large-``n``
    forms with the constant set to one (``nan`` where undefined).
    """

    n: int
    alpha: float
    rho: float
    sampled: float
    theta_min: float
    certified: float
    asymptotic_unit: float
    asymptotic_gamma: float


def _check_rho(rho: float) -> None:
    if not rho >= RHO_MIN:
        raise DomainError(f"rho must be at least 1 + 1e-9, got {rho}")


def _check_nM(n: int, M: float) -> None:
    if int(n) != n or n < 1:
        raise DomainError(f"rule order must be an integer >= 1, got {n}")
    if not (M > 0 and math.isfinite(M)):
        raise DomainError(f"M must be positive and finite, got {M}")


def gauss_rule(n: int, alpha: float) -> QuadratureRule:
    """``n``-point Gauss rule for ``(1 - x^2)^alpha``."""
    x, w = gauss_jacobi(n, alpha, alpha)
    return QuadratureRule(n=int(n), alpha=float(alpha), nodes=x, weights=w)


def _real_values(f, x):
    v = np.asarray(f(x))
    return v.real if np.iscomplexobj(v) else v


def reference_integral(f: Callable, alpha: float, order: int, max_doublings: int = 4) -> float:
    """``int f (1-x^2)^alpha`` accepted once two successive orders agree to 1e-12 relative."""
    prev = None
    q = order
    for _ in range(max_doublings + 1):
        x, w = gauss_jacobi(q, alpha, alpha)
        val = math.fsum(w * _real_values(f, x))
        if prev is not None and abs(val - prev) <= 1e-12 * max(abs(val), 1e-300):
            return val
        if prev is not None and val == prev:
            return val
        prev = val
        q *= 2
    raise NumericalError(f"reference integral did not settle by order {q // 2}")


def quad_remainder(f: Callable, n: int, alpha: float) -> float:
    """``E_n[f] = int f w - sum_j f(x_j) w_j`` with a self-checked reference integral."""
    rule = gauss_rule(n, alpha)
    ref = reference_integral(f, alpha, max(4 * n, 200))
    return ref - rule(f)


def q_function(
    n: int,
    alpha: float,
    beta: float,
    w,
    L: int = 400,
    mode: str = "series",
) -> complex:
    """``Q_n(z) = (1/(2 gamma_n)) int J_n(x) w(x) / (z - x) dx`` at ``z = (w + 1/w)/2``.

    'series' sums ``sigma(n, j) / w^(n+j+1)`` until two consecutive nonzero
    terms fall below ``1e-15`` of the partial sum or ``j = L``.
    'integral' evaluates the defining integral by Gauss-Jacobi quadrature.
    """
    w = complex(w)
    if not abs(w) > 1:
        raise DomainError(f"the Laurent series needs |w| > 1, got |w| = {abs(w)}")
    if mode == "integral":
        z = complex(map_to_ellipse(w))
        prev = None
        q = 256
        for _ in range(5):
            x, wt = gauss_jacobi(q, alpha, beta)
            terms = wt * jacobi_eval(n, alpha, beta, x) / (z - x)
            val = complex(np.sum(terms))
            if prev is not None and abs(val - prev) <= 1e-13 * float(np.sum(np.abs(terms))):
                return val / (2 * gamma_norm(n, alpha, beta))
            prev, q = val, 2 * q
        raise NumericalError("Cauchy-transform quadrature did not converge")
    if mode != "series":
        raise DomainError(f"mode must be 'series' or 'integral', got {mode!r}")

    if alpha == beta:
        even = sigma_gegenbauer(n, alpha, L // 2 + 1)
        sig = lambda j: 0.0 if j % 2 else float(even[j // 2])  # noqa: E731
    else:
        sig = lambda j: sigma_general(n, j, alpha, beta)  # noqa: E731
    total = 0j
    small = 0
    for j in range(L + 1):
        s = sig(j)
        if s == 0.0:
            continue
        term = s / w ** (n + j + 1)
        total += term
        small = small + 1 if abs(term) < 1e-15 * abs(total) else 0
        if small >= 2:
            break
    return total


def _mu_recursion(g, rhs, dtype):
    n = len(g) - 1
    c = g[1 : n + 1] * g[n - 1 :: -1]  # g_k g_{n-k}, k = 1..n
    mu = np.zeros(len(rhs), dtype=dtype)
    for l in range(len(rhs)):
        k = min(n, l)
        mu[l] = (rhs[l] - np.dot(c[:k], mu[l - k : l][::-1])) / g[n]
    return mu


def _mu_decimal(n: int, alpha: float, L: int, digits: int) -> list[Decimal]:
    """``mu / (sigma_0 / A)`` in decimal arithmetic.

    Both ``sigma_{2l} / sigma_0`` and ``g_k`` are rational in ``alpha``, so
    the float ``alpha`` is taken exactly and only the common scale is left
    to double precision.
    """
    with localcontext() as ctx:
        ctx.prec = digits
        lam = Decimal(alpha) + Decimal("0.5")
        if alpha == -0.5:
            g = [Decimal(1)] + [Decimal(0)] * (n - 1) + [Decimal(1)]
        else:
            g = [Decimal(1)]
            for k in range(1, n + 1):
                g.append(g[-1] * (k - 1 + lam) / k)
        c = [g[k] * g[n - k] for k in range(n + 1)]
        s = [Decimal(1)]
        for l in range(L):
            s.append(s[-1] * (n + l + 1) * (l + 1 - lam) / ((n + l + lam + 1) * (l + 1)))
        nu: list[Decimal] = []
        for l in range(L + 1):
            acc = s[l]
            for k in range(1, min(n, l) + 1):
                acc -= c[k] * nu[l - k]
            nu.append(acc / c[0])
        return nu


def mu_coeffs(n: int, alpha: float, L: int) -> MuSequence:
    """``mu_{n,2l}``, ``l = 0..L``, from the triangular recursion on ``sigma_{n,2l}``.

    The recursion is run in double precision and checked against a shadow
    run in ``numpy.longdouble``.  When the gap exceeds ``1e-10`` relative to
    ``max |mu|`` the sequence is recomputed in decimal arithmetic with enough
    digits to absorb the measured amplification, and the error estimate
    becomes the gap to a second decimal run with ten more digits.  A
    :class:`PrecisionWarning` is issued if the final estimate exceeds 1e-6.
    """
    if int(n) != n or n < 1:
        raise DomainError(f"n must be an integer >= 1, got {n}")
    if int(L) != L or L < 0:
        raise DomainError(f"L must be a nonnegative integer, got {L}")
    form = gegenbauer_ellipse_form(n, alpha)
    g, A = form.g, form.A
    rhs = sigma_gegenbauer(n, alpha, L) / A
    mu = _mu_recursion(g, rhs, np.float64)
    # A shadow run in extended precision measures how the recursion amplifies rounding.
    shadow = _mu_recursion(g.astype(np.longdouble), rhs.astype(np.longdouble), np.longdouble)
    err = np.abs(mu - shadow).astype(float) + _EPS * np.abs(mu)
    seq = MuSequence(n=int(n), alpha=float(alpha), values=mu, errors=err)
    if seq.relative_error > 1e-10:
        digits = 34 + math.ceil(math.log10(seq.condition))
        scale = sigma_first_two(n, alpha, alpha)[0] / A
        nu = _mu_decimal(int(n), float(alpha), int(L), digits)
        check = _mu_decimal(int(n), float(alpha), int(L), digits + 10)
        mu = scale * np.array([float(v) for v in nu])
        gap = np.array([float(abs(a - b)) for a, b in zip(nu, check)])
        err = abs(scale) * gap + 2 * _EPS * np.abs(mu)
        seq = MuSequence(n=int(n), alpha=float(alpha), values=mu, errors=err, digits=digits)
    if seq.relative_error > 1e-6:
        warnings.warn(
            f"mu recursion for n={n}, alpha={alpha} carries an estimated relative error {seq.relative_error:.1e}",
            PrecisionWarning,
            stacklevel=2,
        )
    return seq


def theta_profile(n: int, alpha: float, L: int = 1000) -> ThetaProfile:
    """``theta_{n,l} = gamma_n |mu_{n,2l+2} - mu_{n,2l}|`` for ``l = 0..L`` and its maximum.

    Ties (within 1e-12 relative) resolve to the smallest ``l``.
    """
    if L < 1:
        raise DomainError("L must be at least 1")
    mu = mu_coeffs(n, alpha, L + 1).values
    theta = gamma_norm(n, alpha, alpha) * np.abs(np.diff(mu))
    tmax = float(np.max(theta))
    argmax = int(np.flatnonzero(theta >= tmax * (1 - 1e-12))[0])
    return ThetaProfile(n=int(n), alpha=float(alpha), theta=theta, theta_max=tmax, argmax_l=argmax)


def _report(method, n, alpha, rho, M, value, mode="explicit", constant=1.0):
    if not (math.isfinite(value) and value > 0):
        raise NumericalError(f"{method}: bound evaluated to {value} (n={n}, rho={rho})")
    strip = M / rho ** (2 * n)
    return BoundReport(method, int(n), float(alpha), float(alpha), float(rho), float(M), value, value / strip, mode, constant)


def bound_quad_computable(
    n: int, alpha: float, rho: float, M: float, L: int = 1000, form: str = "max"
) -> BoundReport:
    """Bound built from the ``mu`` table.

    ``form='max'``: ``(M/rho^2n)(gamma_n |mu_0| + Theta/(rho^2-1))``.
    ``form='series'``: ``gamma_n (M/rho^2n)[|mu_0| + rho^-2 sum_l |mu_{2l+2}-mu_{2l}| rho^-2l]``,
    with the terms beyond ``L`` bounded by ``Theta`` times a geometric tail.
    The series form is never larger and reproduces the classical Chebyshev
    results exactly.
    """
    _check_rho(rho)
    _check_nM(n, M)
    mu = mu_coeffs(n, alpha, L + 1).values
    gam = gamma_norm(n, alpha, alpha)
    theta = gam * np.abs(np.diff(mu))
    Theta = float(np.max(theta))
    lead = gam * abs(mu[0])
    if form == "max":
        v = M / rho ** (2 * n) * (lead + Theta / (rho**2 - 1))
    elif form == "series":
        r2 = rho**-2
        powers = r2 ** np.arange(L + 1)
        tail = Theta * r2 ** (L + 1) / (1 - r2)
        v = M / rho ** (2 * n) * (lead + r2 * (math.fsum(theta * powers) + tail))
    else:
        raise DomainError(f"form must be 'max' or 'series', got {form!r}")
    return _report(f"computable_{form}", n, alpha, rho, M, v)


def _branch_factor(alpha: float, rho: float) -> float:
    if alpha > -0.5:
        return (1 + rho**-2) ** (alpha + 0.5)
    return (1 - rho**-2) ** (alpha + 0.5)


def bound_quad_gegenbauer(n: int, alpha: float, rho: float, M: float, mode: str = "unit") -> BoundReport:
    """Bound from the remainder / coefficient relation, ``alpha != -1/2``.

    'unit' is the large-``n`` closed form with ``C_n = 1``.  'explicit'
    evaluates ``gamma_n * (coefficient bound) / min |J_n|`` using the exact
    coefficient bound and the certified lower bound for the minimum modulus,
    which is a guaranteed bound for every ``n``.
    """
    _check_rho(rho)
    _check_nM(n, M)
    if alpha == -0.5:
        raise DomainError("alpha = -1/2 is excluded; use bound_quad_computable")
    if mode == "unit":
        inner = math.sqrt(math.pi) / 2 ** (2 * alpha) + math.exp(
            math.lgamma(alpha + 1) - 0.5 * math.lgamma(2 * alpha + 2)
        ) * 2 * math.sqrt(2) / (rho**2 - 1)
        v = M * math.sqrt(math.pi) / rho ** (2 * n) * inner * _branch_factor(alpha, rho)
        return _report("quad_gegenbauer_unit", n, alpha, rho, M, v, "unit")
    if mode == "explicit":
        mm = gegenbauer_min_modulus(n, alpha, rho)
        if not mm.certified > 0:
            raise NumericalError(f"no positive certified minimum of |J_n| for n={n}, alpha={alpha}, rho={rho}")
        coeff = bound_gegenbauer(n, alpha, rho, M).value
        v = gamma_norm(n, alpha, alpha) * coeff / mm.certified
        return _report("quad_gegenbauer_explicit", n, alpha, rho, M, v, "explicit")
    raise DomainError(f"mode must be 'unit' or 'explicit', got {mode!r}")


def bound_quad_legendre(n: int, rho: float, M: float, mode: str = "unit") -> BoundReport:
    """Legendre-Gauss bound: ``C_n M pi sqrt(1+rho^-2)/rho^2n (1 + 1/(2(rho^2-1)))``."""
    _check_rho(rho)
    _check_nM(n, M)
    if mode == "unit":
        v = M * math.pi * math.sqrt(1 + rho**-2) / rho ** (2 * n) * (1 + 1 / (2 * (rho**2 - 1)))
        return _report("quad_legendre_unit", n, 0.0, rho, M, v, "unit")
    if mode == "explicit":
        mm = gegenbauer_min_modulus(n, 0.0, rho)
        if not mm.certified > 0:
            raise NumericalError(f"no positive certified minimum of |P_n| for n={n}, rho={rho}")
        coeff = bound_legendre(n, rho, M, "explicit").value
        v = gamma_norm(n, 0, 0) * coeff / mm.certified
        return _report("quad_legendre_explicit", n, 0.0, rho, M, v, "explicit")
    raise DomainError(f"mode must be 'unit' or 'explicit', got {mode!r}")


def bound_quad_cheb2_closed(n: int, rho: float, M: float) -> BoundReport:
    """Closed form ``pi M (rho^2 + 2 + rho^(-2n-4)) / (2 (rho^(2n+2) - 1))`` at ``alpha = 1/2``.

    Summing the exact second-kind ``mu`` pattern gives ``rho^-2`` in place of
    ``rho^(-2n-4)``, i.e. the series form of :func:`bound_quad_computable`;
    this expression leaves out the ``l = 1`` difference term and is smaller
    than the series by ``pi M (rho^-2 - rho^(-2n-4)) / (2 (rho^(2n+2) - 1))``.
    """
    _check_rho(rho)
    _check_nM(n, M)
    v = math.pi * M * (rho**2 + 2 + rho ** (-2 * n - 4)) / (2 * (rho ** (2 * n + 2) - 1))
    return _report("cheb2_closed", n, 0.5, rho, M, v, "literal")


def bound_quad_literature(method: str, n: int, alpha: float, rho: float, M: float) -> BoundReport:
    """Earlier quadrature bounds, evaluated literally for comparison.

    ``hunter_general`` is scaled by ``M``; ``kambo_legendre`` takes the
    worst-case constant ``d_n = pi`` and needs ``rho > sqrt(2)``.
    """
    _check_rho(rho)
    _check_nM(n, M)
    if method == "chawla_cheb":
        v = 2 * math.pi * M / (rho ** (2 * n) - 1)
    elif method == "hunter_general":
        v = 4 * M * gamma_norm(0, alpha, alpha) / (rho ** (2 * n - 2) * (rho**2 - 1))
    elif method == "hunter_cheb2":
        v = math.pi * M * (rho**2 + 2 + rho**-2) / (2 * (rho ** (2 * n + 2) - 1))
    elif method == "kambo_legendre":
        if not rho > math.sqrt(2):
            raise DomainError(f"the Legendre bound of this form needs rho > sqrt(2), got {rho}")
        v = math.pi * M / rho ** (2 * n) * (rho**2 + 1) / (rho**2 - 2)
    else:
        raise DomainError(f"unknown method {method!r}; expected one of {LITERATURE_METHODS}")
    return _report(method, n, alpha, rho, M, v, "literal")


def gegenbauer_min_modulus(n: int, alpha: float, rho: float, grid: int = 4096) -> MinModulus:
    """Minimum of ``|J_n^{alpha,alpha}(z)|`` over the ellipse of parameter ``rho``.

    On the ellipse ``J_n = A w^n p(t)`` with ``t = w^-2`` and
    ``p(t) = sum_k g_k g_{n-k} t^k``, so the minimum is ``|A| rho^n min |p|``
    on ``|t| = rho^-2``.  ``p`` has real coefficients, so half the circle is
    sampled.  Every point lies within half a grid step of a sample and
    ``|dp/dphi| <= sum_k k |c_k| r^k``, which gives the certified bound.
    """
    _check_rho(rho)
    if int(n) != n or n < 0:
        raise DomainError("degree must be a nonnegative integer")
    if grid < 64:
        raise DomainError("grid must be at least 64")
    form = gegenbauer_ellipse_form(n, alpha)
    c = form.g * form.g[::-1]
    r = rho**-2
    phi = np.linspace(0.0, math.pi, grid)
    t = r * np.exp(1j * phi)
    vals = np.abs(np.polyval(c[::-1], t))
    i = int(np.argmin(vals))
    scale = abs(form.A) * rho**n
    k = np.arange(n + 1)
    lip = float(np.sum(k * np.abs(c) * r**k))
    half_step = math.pi / (grid - 1) / 2
    certified = max(0.0, (float(vals[i]) - lip * half_step) * (1 - 1e-12)) * scale
    # the sample index maps to theta = -phi/2 on the w-circle
    theta_min = float(phi[i] / 2)

    unit = gam = float("nan")
    if n >= 1 and alpha != -0.5:
        fac = 1 / _branch_factor(alpha, rho)
        unit = 2 ** (2 * alpha) * rho**n / math.sqrt(math.pi * n) * fac
        gam = abs(form.A * form.g[n]) * rho**n * fac
    return MinModulus(
        n=int(n),
        alpha=float(alpha),
        rho=float(rho),
        sampled=float(vals[i]) * scale,
        theta_min=theta_min,
        certified=certified,
        asymptotic_unit=unit,
        asymptotic_gamma=gam,
    )
