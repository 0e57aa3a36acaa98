"""Data series behind each comparison figure, as plain tables.

Every generator returns a :class:`Table` whose rows are already sorted by
the key columns, so the CSV written from it does not depend on evaluation
order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .coeffbounds import (
    bound_chebyshev,
    bound_gegenbauer,
    bound_leg_type_1_0,
    bound_legendre,
    bound_xiang,
    legendre_gap,
)
from .errors import DomainError
from .expand import TEST_FUNCTIONS, exact_coeffs
from .quadrature import (
    bound_quad_cheb2_closed,
    bound_quad_computable,
    bound_quad_gegenbauer,
    bound_quad_literature,
    theta_profile,
)

__all__ = ["Table", "FIGURE_IDS", "figure_table"]

FIGURE_IDS = ("1a", "1b", "1c", "1d", "2a", "2b", "3a", "3b", "4a", "4b", "5a", "5b")
FIG_RHO = 1.98
_COMPARE_RHOS = (1.1, 1.2, 1.5, 2.0, 2.5, 3.0)


@dataclass(frozen=True)
class Table:
    columns: tuple[str, ...]
    rows: list[tuple]


def _theta_rows(n: int, alpha: float, L: int = 250) -> Table:
    prof = theta_profile(n, alpha, L)
    rows = [(n, alpha, l, float(t), int(l == prof.argmax_l)) for l, t in enumerate(prof.theta)]
    return Table(("n", "alpha", "l", "theta", "is_argmax"), rows)


def _theta_max_rows() -> Table:
    rows = []
    for alpha in (0.0, 1.5, 5.0, 10.0):
        for n in range(10, 101):
            prof = theta_profile(n, alpha, 1000)
            rows.append((alpha, n, prof.theta_max, prof.argmax_l))
    return Table(("alpha", "n", "theta_max", "argmax_l"), rows)


def _coeff_rows(name: str) -> Table:
    M = TEST_FUNCTIONS[name].max_modulus(FIG_RHO)
    exact = exact_coeffs(name, 51).coefficients
    rows = []
    for n in range(1, 51):
        b = bound_chebyshev(n, FIG_RHO, M) if name == "u1" else bound_legendre(n, FIG_RHO, M)
        rows.append((n, float(exact[n]), b.value))
    return Table(("n", "exact", "bound"), rows)


def _gap_rows(rhos, nmax: int) -> Table:
    rows = [(float(r), n, legendre_gap(n, float(r))) for r in rhos for n in range(1, nmax + 1)]
    return Table(("rho", "n", "e_n"), sorted(rows))


def _stripped_rows(ours, theirs, nmax: int = 60) -> Table:
    rows = []
    for rho in _COMPARE_RHOS:
        for n in range(1, nmax + 1):
            a = ours(n, rho).value * rho**n / math.sqrt(n)
            b = theirs(n, rho).value * rho**n / math.sqrt(n)
            rows.append((rho, n, a, b, b - a))
    return Table(("rho", "n", "ours", "literature", "difference"), rows)


def _quad_rows(ours, theirs, nmax: int = 30, closed=None) -> Table:
    rows = []
    for rho in _COMPARE_RHOS:
        for n in range(1, nmax + 1):
            strip = rho ** (2 * n)
            a, b = ours(n, rho).value * strip, theirs(n, rho).value * strip
            row = (rho, n, a, b, b - a)
            if closed is not None:
                row += (closed(n, rho).value * strip,)
            rows.append(row)
    cols = ("rho", "n", "ours", "literature", "difference")
    return Table(cols + (("closed_form",) if closed is not None else ()), rows)


def figure_table(figure_id: str) -> Table:
    """Table for one figure panel; bounds are evaluated with ``M = 1`` where stripped."""
    if figure_id == "1a":
        return _theta_rows(36, 0.5)
    if figure_id == "1b":
        return _theta_rows(36, 0.0)
    if figure_id == "1c":
        return _theta_rows(36, 1.0)
    if figure_id == "1d":
        return _theta_max_rows()
    if figure_id == "2a":
        return _coeff_rows("u1")
    if figure_id == "2b":
        return _coeff_rows("u2")
    if figure_id == "3a":
        return _gap_rows(np.round(np.arange(1.05, 3.0001, 0.05), 10), 80)
    if figure_id == "3b":
        return _gap_rows((1.01, 1.02, 1.05, 1.1), 80)
    if figure_id == "4a":
        return _stripped_rows(
            lambda n, r: bound_leg_type_1_0(n, r, 1.0),
            lambda n, r: bound_xiang(n, 1.0, 0.0, r, 1.0),
        )
    if figure_id == "4b":
        return _stripped_rows(
            lambda n, r: bound_gegenbauer(n, 2.0, r, 1.0),
            lambda n, r: bound_xiang(n, 2.0, 2.0, r, 1.0),
        )
    if figure_id == "5a":
        return _quad_rows(
            lambda n, r: bound_quad_computable(n, 0.5, r, 1.0, form="series"),
            lambda n, r: bound_quad_literature("hunter_cheb2", n, 0.5, r, 1.0),
            closed=lambda n, r: bound_quad_cheb2_closed(n, r, 1.0),
        )
    if figure_id == "5b":
        return _quad_rows(
            lambda n, r: bound_quad_gegenbauer(n, 2.0, r, 1.0, mode="unit"),
            lambda n, r: bound_quad_literature("hunter_general", n, 2.0, r, 1.0),
        )
    raise DomainError(f"unknown figure id {figure_id!r}; expected one of {FIGURE_IDS}")
