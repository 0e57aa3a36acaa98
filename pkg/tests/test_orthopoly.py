from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spectral_tail.ellipse import map_to_ellipse
from spectral_tail.errors import DomainError
from spectral_tail.gammafn import gamma_norm
from spectral_tail.orthopoly import (
    JacobiIndex,
    chebyshev_T,
    chebyshev_U,
    connection_coeffs,
    gegenbauer_ellipse_form,
    gegenbauer_on_ellipse,
    jacobi_derivative,
    jacobi_eval,
    jacobi_eval_all,
)
from spectral_tail.rules import gauss_jacobi

X = np.linspace(-1, 1, 100)


class TestJacobiIndex:
    def test_valid(self):
        assert JacobiIndex(0.5, 0.5).symmetric
        assert not JacobiIndex(0.5, -0.5).symmetric

    @pytest.mark.parametrize("a, b", [(-1.0, 0.0), (0.0, -1.5), (float("nan"), 0.0)])
    def test_rejects(self, a, b):
        with pytest.raises(DomainError):
            JacobiIndex(a, b)


class TestJacobiEval:
    def test_degree_zero(self):
        assert jacobi_eval(0, 0.3, 2.0, 0.77) == 1.0

    def test_legendre_endpoint(self):
        assert jacobi_eval(2, 0, 0, 1.0) == pytest.approx(1.0)

    def test_degree_one(self):
        x = 0.4
        assert jacobi_eval(1, 0.5, -0.3, x) == pytest.approx(((2.2) * x + 0.8) / 2)

    def test_rodrigues_oracle(self):
        # 40-digit Rodrigues-formula value
        assert jacobi_eval(4, 0.5, -0.3, 0.37) == pytest.approx(-0.35298416519099998917, rel=1e-13)

    def test_endpoint_binomial(self):
        for n in range(12):
            expected = math.gamma(n + 1.7) / (math.gamma(n + 1) * math.gamma(1.7))
            assert jacobi_eval(n, 0.7, 2.0, 1.0) == pytest.approx(expected, rel=1e-12)

    def test_complex_argument(self):
        w = 1.3 * np.exp(0.7j)
        z = map_to_ellipse(w)
        v = jacobi_eval(12, 1.5, 1.5, z)
        assert v == pytest.approx(11.002809318529412111 + 18.800838816479214037j, rel=1e-12)

    def test_array_shapes(self):
        out = jacobi_eval_all(5, 0.0, 0.0, np.zeros((3, 2)))
        assert out.shape == (6, 3, 2)

    def test_derivative(self):
        h = 1e-6
        for x in (-0.6, 0.1, 0.8):
            fd = (jacobi_eval(6, 0.4, 1.1, x + h) - jacobi_eval(6, 0.4, 1.1, x - h)) / (2 * h)
            assert jacobi_derivative(6, 0.4, 1.1, x) == pytest.approx(fd, rel=1e-7)

    @pytest.mark.parametrize("alpha", [-0.5, 0.0, 0.5, 1.7])
    def test_parity(self, alpha):
        for n in range(21):
            np.testing.assert_allclose(
                jacobi_eval(n, alpha, alpha, -X), (-1) ** n * jacobi_eval(n, alpha, alpha, X), atol=1e-12
            )

    @pytest.mark.parametrize("a, b", [(0.0, 0.0), (-0.5, -0.5), (0.3, -0.7), (2.0, 1.0), (-0.9, 3.5)])
    def test_orthogonality(self, a, b):
        x, w = gauss_jacobi(20, a, b)
        P = jacobi_eval_all(12, a, b, x)
        G = (P * w) @ P.T
        for n in range(13):
            for m in range(13):
                if n == m:
                    assert G[n, n] == pytest.approx(gamma_norm(n, a, b), rel=1e-10)
                else:
                    assert abs(G[n, m]) < 1e-10


class TestChebyshev:
    def test_endpoints(self):
        assert chebyshev_T(3, 1.0) == 1.0
        assert chebyshev_U(3, 1.0) == 4.0

    def test_monomial_form(self):
        x = 0.7
        assert chebyshev_T(5, x) == pytest.approx(16 * x**5 - 20 * x**3 + 5 * x, rel=1e-14)
        assert chebyshev_T(5, x) == pytest.approx(-0.67088, rel=1e-13)

    def test_u_difference_identity(self):
        x = 0.3
        assert chebyshev_U(2, x) - chebyshev_U(0, x) == pytest.approx(-1.64)
        for k in range(2, 15):
            np.testing.assert_allclose(chebyshev_U(k, X) - chebyshev_U(k - 2, X), 2 * chebyshev_T(k, X), atol=1e-12)

    @given(st.integers(0, 40), st.floats(0, math.pi))
    def test_trig(self, n, t):
        assert chebyshev_T(n, math.cos(t)) == pytest.approx(math.cos(n * t), abs=1e-11)

    def test_u_from_jacobi(self):
        for n in range(15):
            u = math.sqrt(math.pi / 2) * jacobi_eval(n, 0.5, 0.5, X) / math.sqrt(gamma_norm(n, 0.5, 0.5))
            np.testing.assert_allclose(u, chebyshev_U(n, X), atol=1e-11)

    def test_u_is_derivative_of_t(self):
        h = 1e-6
        for n in range(1, 10):
            fd = (chebyshev_T(n + 1, X[1:-1] + h) - chebyshev_T(n + 1, X[1:-1] - h)) / (2 * h)
            np.testing.assert_allclose(chebyshev_U(n, X[1:-1]), fd / (n + 1), atol=1e-7)

    def test_derivative_expansion(self):
        # T_n' = 2n sum over k with k + n odd of T_k / c_k
        for n in range(1, 16):
            rhs = sum(chebyshev_T(k, X) / (2 if k == 0 else 1) for k in range(n) if (k + n) % 2)
            np.testing.assert_allclose(2 * n * rhs, n * chebyshev_U(n - 1, X), atol=1e-10)


class TestGegenbauerEllipse:
    def test_constants(self):
        f = gegenbauer_ellipse_form(4, 1.0)
        k = np.arange(5)
        expected = [math.gamma(i + 1.5) / (math.factorial(i) * math.gamma(1.5)) for i in k]
        np.testing.assert_allclose(f.g, expected, rtol=1e-14)
        assert f.g[0] == 1.0

    def test_chebyshev_constants(self):
        f = gegenbauer_ellipse_form(5, -0.5)
        assert list(f.g) == [1, 0, 0, 0, 0, 1]
        assert f.A == pytest.approx(math.gamma(5.5) / (2 * math.sqrt(math.pi) * 120), rel=1e-14)

    @pytest.mark.parametrize("alpha", [-0.5, 0.0, 1.0, 3.3])
    def test_degree_zero(self, alpha):
        assert gegenbauer_on_ellipse(0, alpha, 1.7 * np.exp(0.3j)) == pytest.approx(1.0)

    def test_chebyshev_reduction(self):
        w = 1.6 * np.exp(0.9j)
        z = map_to_ellipse(w)
        A = gegenbauer_ellipse_form(3, -0.5).A
        assert gegenbauer_on_ellipse(3, -0.5, w) == pytest.approx(2 * A * chebyshev_T(3, z), rel=1e-13)

    def test_matches_recurrence(self):
        w = 1.3 * np.exp(0.7j)
        v = gegenbauer_on_ellipse(12, 1.5, w)
        r = jacobi_eval(12, 1.5, 1.5, map_to_ellipse(w))
        assert abs(v - r) / abs(r) < 1e-10

    @settings(max_examples=40, deadline=None)
    @given(
        st.integers(1, 50),
        st.sampled_from([-0.5, 0.0, 0.5, 1.0, 2.0]),
        st.floats(1.05, 3.0),
        st.floats(0, 2 * math.pi),
    )
    def test_matches_recurrence_sampled(self, n, alpha, rho, theta):
        w = rho * np.exp(1j * theta)
        v = gegenbauer_on_ellipse(n, alpha, w)
        r = jacobi_eval(n, alpha, alpha, map_to_ellipse(w))
        assert abs(v - r) <= 1e-9 * abs(r)

    def test_zero_rejected(self):
        with pytest.raises(DomainError):
            gegenbauer_on_ellipse(3, 0.0, 0.0)

    def test_large_degree_finite(self):
        f = gegenbauer_ellipse_form(2000, 4.0)
        assert np.all(np.isfinite(f.g)) and math.isfinite(f.A)


class TestConnection:
    def test_legendre_step(self):
        for n in range(6):
            c = connection_coeffs(n, 0.0, 0.0, 1, 0)
            assert c[n] == pytest.approx(1.0) and c[n + 1] == pytest.approx(-1.0)

    def test_second_kind_step(self):
        for n in range(6):
            c = connection_coeffs(n, 0.5, 0.5, 1, 0)
            assert c[n] == pytest.approx(1.0)
            assert c[n + 1] == pytest.approx(-(2 * n + 2) / (2 * n + 3))

    def test_empty_product(self):
        c = connection_coeffs(4, 0.3, 0.1, 0, 0)
        assert list(c.d) == [1.0]
        assert c[3] == 0.0 and c[5] == 0.0

    @pytest.mark.parametrize("a, b", [(0.0, 0.0), (0.5, 0.5), (-0.3, 0.8)])
    def test_reproduces_product(self, a, b):
        for k in range(4):
            for l in range(4):
                for n in (0, 3, 9, 15):
                    c = connection_coeffs(n, a, b, k, l)
                    lhs = (1 - X) ** k * (1 + X) ** l * jacobi_eval(n, a + k, b + l, X)
                    P = jacobi_eval_all(n + k + l, a, b, X)
                    rhs = sum(c[i] * P[i] for i in range(n, n + k + l + 1))
                    assert np.max(np.abs(lhs - rhs)) < 1e-10 * max(1.0, np.max(np.abs(lhs)))

    def test_order_independent(self):
        for k, l in ((2, 1), (3, 3), (1, 2)):
            d1 = connection_coeffs(7, 0.5, -0.5, k, l, "minus_first").d
            d2 = connection_coeffs(7, 0.5, -0.5, k, l, "plus_first").d
            np.testing.assert_allclose(d1, d2, rtol=1e-12, atol=1e-14)

    def test_bad_order(self):
        with pytest.raises(DomainError):
            connection_coeffs(2, 0.0, 0.0, 1, 1, order="sideways")
