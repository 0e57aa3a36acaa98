from __future__ import annotations

import math

import numpy as np
import pytest

from spectral_tail.errors import DomainError
from spectral_tail.rules import gauss_jacobi, jacobi_matrix, weight_moment


class TestSmallRules:
    def test_one_point(self):
        x, w = gauss_jacobi(1, 0.0, 0.0)
        assert x[0] == pytest.approx(0.0, abs=1e-16) and w[0] == pytest.approx(2.0)

    def test_two_point_legendre(self):
        x, w = gauss_jacobi(2, 0.0, 0.0)
        np.testing.assert_allclose(x, [-1 / math.sqrt(3), 1 / math.sqrt(3)], rtol=1e-15)
        np.testing.assert_allclose(w, [1.0, 1.0], rtol=1e-14)

    def test_chebyshev_three_point(self):
        x, w = gauss_jacobi(3, -0.5, -0.5)
        expected = np.sort(np.cos((2 * np.arange(1, 4) - 1) * np.pi / 6))
        np.testing.assert_allclose(x, expected, atol=1e-15)
        np.testing.assert_allclose(w, np.full(3, np.pi / 3), rtol=1e-14)

    def test_read_only(self):
        x, w = gauss_jacobi(4, 0.0, 0.0)
        with pytest.raises(ValueError):
            x[0] = 0.0


class TestExactness:
    @pytest.mark.parametrize("alpha", [-0.5, 0.0, 0.5, 1.0, 2.5])
    def test_moments(self, alpha):
        for n in (1, 2, 5, 16, 40, 64):
            x, w = gauss_jacobi(n, alpha, alpha)
            for k in range(2 * n):
                exact = weight_moment(k, alpha)
                got = math.fsum(w * x**k)
                if exact == 0.0:
                    assert abs(got) < 1e-14 * weight_moment(0, alpha)
                else:
                    assert got == pytest.approx(exact, rel=1e-12)

    def test_not_exact_beyond(self):
        x, w = gauss_jacobi(3, 0.0, 0.0)
        err = 2 / 7 - math.fsum(w * x**6)
        assert err == pytest.approx(8 / 175, rel=1e-12)

    def test_nonsymmetric_weight(self):
        x, w = gauss_jacobi(6, 1.5, -0.5)
        # int (1-x)^{3/2} (1+x)^{-1/2} dx = 2 B(5/2, 1/2) = 3 pi / 2
        assert math.fsum(w) == pytest.approx(1.5 * math.pi, rel=1e-13)


class TestStructure:
    @pytest.mark.parametrize("n", [5, 20, 100])
    def test_interlacing(self, n):
        a = b = 0.7
        x0, _ = gauss_jacobi(n, a, b)
        x1, _ = gauss_jacobi(n + 1, a, b)
        assert np.all(x1[:-1] < x0) and np.all(x0 < x1[1:])

    def test_symmetry(self):
        x, w = gauss_jacobi(31, 1.2, 1.2)
        np.testing.assert_array_equal(x, -x[::-1])
        np.testing.assert_allclose(w, w[::-1], rtol=1e-13)

    def test_positive_weights_large(self):
        x, w = gauss_jacobi(400, -0.9, 3.0)
        assert np.all(w > 0) and np.all(np.abs(x) < 1)

    def test_matrix_shape(self):
        d, e = jacobi_matrix(6, 0.3, 0.2)
        assert d.shape == (6,) and e.shape == (5,)

    def test_chebyshev_limit_matrix(self):
        # s = -1 removable singularity at k = 1
        d, e = jacobi_matrix(4, -0.5, -0.5)
        np.testing.assert_allclose(d, 0, atol=1e-15)
        np.testing.assert_allclose(e, [math.sqrt(0.5), 0.5, 0.5], rtol=1e-14)


class TestDomain:
    def test_order(self):
        with pytest.raises(DomainError):
            gauss_jacobi(0, 0.0, 0.0)

    def test_parameters(self):
        with pytest.raises(DomainError):
            gauss_jacobi(3, -1.0, 0.0)

    def test_moment_nonsymmetric(self):
        with pytest.raises(DomainError):
            weight_moment(2, 0.0, 1.0)
