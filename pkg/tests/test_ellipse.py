from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from spectral_tail.ellipse import (
    AnalyticFunction,
    ellipse_points,
    geometry,
    map_to_ellipse,
    max_modulus,
)
from spectral_tail.errors import AnalyticityError, DomainError
from spectral_tail.expand import u1, u2


class TestMap:
    def test_fixed_point(self):
        assert map_to_ellipse(1) == 1

    def test_vertices(self):
        rho = 1.7
        g = geometry(rho)
        assert map_to_ellipse(rho) == pytest.approx(g.a)
        assert map_to_ellipse(1j * rho) == pytest.approx(1j * g.b)

    def test_zero_rejected(self):
        with pytest.raises(DomainError):
            map_to_ellipse(0)

    @given(st.floats(1.001, 5.0), st.floats(0, 2 * math.pi))
    def test_points_on_ellipse(self, rho, theta):
        g = geometry(rho)
        z = ellipse_points(rho, theta)
        assert abs((z.real / g.a) ** 2 + (z.imag / g.b) ** 2 - 1) < 1e-12


class TestGeometry:
    def test_rho_two(self):
        g = geometry(2.0)
        assert (g.a, g.b, g.d) == pytest.approx((1.25, 0.75, 0.25))
        assert g.perimeter_bound == pytest.approx(math.pi * math.sqrt(4.25))
        assert g.perimeter_bound == pytest.approx(6.4766, abs=1e-4)

    def test_degenerate_limit(self):
        g = geometry(1 + 1e-8)
        assert 0 < g.d < 1e-15
        assert g.d == pytest.approx(5e-17, rel=1e-6)

    def test_axes_identity(self):
        for rho in (1.01, 1.5, 3.0, 10.0):
            g = geometry(rho)
            assert g.a**2 - g.b**2 == pytest.approx(1.0, abs=1e-12)

    def test_d_increasing(self):
        rhos = np.linspace(1.01, 5, 200)
        d = [geometry(r).d for r in rhos]
        assert all(x < y for x, y in zip(d, d[1:]))

    @pytest.mark.parametrize("rho", [1.0, 0.5, -2.0])
    def test_domain(self, rho):
        with pytest.raises(DomainError):
            geometry(rho)


class TestMaxModulus:
    def test_constant(self):
        f = AnalyticFunction(lambda z: np.full_like(z, -3.0 + 0j), name="const")
        assert max_modulus(f, 1.4) == pytest.approx(3.0)

    def test_u1_closed_form(self):
        assert max_modulus(u1, 1.5) == pytest.approx(4.5, rel=1e-10)

    def test_u2_brute_force(self):
        # 2^16-point brute-force maximum on the ellipse
        assert max_modulus(u2, 1.5) == pytest.approx(2.4494897427831774, rel=1e-10)

    @pytest.mark.parametrize("rho", [1.1, 1.5, 1.9, 1.98])
    def test_u1_grid(self, rho):
        exact = 3 * rho / ((2 * rho - 1) * (2 - rho))
        assert max_modulus(u1, rho) == pytest.approx(exact, rel=1e-6)

    def test_analyticity(self):
        with pytest.raises(AnalyticityError):
            max_modulus(u1, 2.0)

    def test_grid_size(self):
        with pytest.raises(DomainError):
            max_modulus(u1, 1.5, grid_size=10)

    def test_nonsymmetric_scans_full_circle(self):
        # |exp(i z)| = exp(-Im z) peaks at the bottom vertex, theta = 3 pi / 2
        f = AnalyticFunction(lambda z: np.exp(1j * z), symmetric=False)
        rho = 1.5
        expected = math.exp(geometry(rho).b)
        assert max_modulus(f, rho) == pytest.approx(expected, rel=1e-10)
