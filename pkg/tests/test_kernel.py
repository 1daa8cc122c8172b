import math

import numpy as np
import pytest

from mahler.errors import (DomainError, NotAntisymmetricError,
                           OddDimensionError)
from mahler.kernel import (EnsembleParams, PointConfig, correlation,
                           expected_counts, expected_in_exact,
                           expected_out_exact, intensity_complex,
                           intensity_real, kappa_n, matrix_kernel, pfaffian,
                           sum_k)
from mahler.polys import p_poly
from mahler.specfun import iota
from mahler.volume import gram_matrix


class TestSumK:
    def test_single_term(self):
        assert sum_k(1, 0.3, -0.4, 1.1, 0.2, 0.7 + 0.1j, -0.5) == \
            pytest.approx(1.0, rel=1e-14)

    def test_coefficient_convolution_oracle(self):
        a1, b1, a2, b2 = 0.5, -0.5, 1.5, -1.5
        z, w = 0.4 + 0.3j, -0.6
        total = 0.0
        for n in range(3):
            p1 = np.array(p_poly(n, a1, b1).coeffs)
            p2 = np.array(p_poly(n, a2, b2).coeffs)
            v1 = sum(c * z ** k for k, c in enumerate(p1))
            v2 = sum(c * w ** k for k, c in enumerate(p2))
            total += v1 * v2
        assert sum_k(3, a1, b1, a2, b2, z, w) == pytest.approx(total,
                                                               rel=1e-12)

    def test_origin_limit_monotone(self):
        b1 = b2 = -0.8
        target = math.gamma(-1 - b1 - b2) / (math.gamma(-b1)
                                             * math.gamma(-b2))
        errs = [abs(sum_k(N, 0.5, b1, 0.5, b2, 0.0, 0.0) - target)
                for N in (8, 32, 128)]
        assert errs[0] > errs[1] > errs[2]


class TestKappaN:
    def test_antisymmetry(self):
        P = EnsembleParams(4, 9.0)
        u, v = 0.3 + 0.2j, -0.5 + 0.7j
        assert kappa_n(P, u, v) == pytest.approx(-kappa_n(P, v, u),
                                                 rel=1e-14)

    def test_degree_two_closed_form(self):
        s = 5.0
        P = EnsembleParams(2, s)
        for u, v in ((0.3, -0.8), (0.5j, 0.9), (0.2 + 0.1j, -0.4 + 0.6j)):
            assert kappa_n(P, u, v) == pytest.approx(
                (s - 2) / (2 * s) * (v - u), rel=1e-12)

    def test_gram_inverse_cross_check(self):
        # kappa equals -2 w(u) w(v) sum mu_{mn} u^{m-1} v^{n-1} with mu the
        # inverse of the monomial Gram matrix
        N, s = 4, 9.0
        P = EnsembleParams(N, s)
        mu = np.linalg.inv(gram_matrix(N, s).entries)
        for u, v in ((0.4, -0.7), (0.2, 0.9)):
            total = 0.0
            for m in range(1, N + 1):
                for n in range(1, N + 1):
                    total += mu[m - 1, n - 1] * u ** (m - 1) * v ** (n - 1)
            ref = -2.0 * total  # weights are 1 inside the disk
            assert kappa_n(P, u, v) == pytest.approx(ref, rel=1e-8)


class TestMatrixKernel:
    def test_coincident_real_point(self):
        P = EnsembleParams(4, 9.0)
        K = matrix_kernel(P, 0.3, 0.3)
        assert K.e11 == pytest.approx(0.0, abs=1e-14)
        assert K.e21 == pytest.approx(-K.e12, rel=1e-13)

    def test_complex_entry_is_conjugated_kappa(self):
        P = EnsembleParams(4, 9.0)
        z, w = 0.3 + 0.2j, 0.1 - 0.5j
        K = matrix_kernel(P, z, w)
        assert K.e12 == pytest.approx(iota(w) * kappa_n(P, z, np.conj(w)),
                                      rel=1e-13)

    def test_degree_two_diagonal_closed_form(self):
        s = 5.0
        P = EnsembleParams(2, s)
        for x in (-0.8, 0.0, 0.4, 0.9):
            K = matrix_kernel(P, x, x)
            pf = pfaffian(np.array([[0, K.e12], [K.e21, 0]])
                          + np.array([[K.e11, 0], [0, K.e22]]) * 0)
            ref = 0.25 + (s - 2) / (4 * s) * x * x
            assert K.e12.real == pytest.approx(ref, rel=1e-12)
            assert pf == pytest.approx(ref, rel=1e-12)


class TestPfaffian:
    def test_two_by_two(self):
        a = 3.7
        assert pfaffian(np.array([[0.0, a], [-a, 0.0]])) == pytest.approx(a)

    def test_square_is_determinant(self, rng):
        for _ in range(10):
            A = rng.standard_normal((6, 6))
            A = A - A.T
            assert pfaffian(A) ** 2 == pytest.approx(np.linalg.det(A),
                                                     rel=1e-9)

    def test_congruence_rule(self, rng):
        for _ in range(10):
            A = rng.standard_normal((4, 4))
            A = A - A.T
            B = rng.standard_normal((4, 4))
            lhs = pfaffian(B @ A @ B.T)
            assert lhs == pytest.approx(pfaffian(A) * np.linalg.det(B),
                                        rel=1e-9, abs=1e-12)

    def test_guards(self):
        with pytest.raises(OddDimensionError):
            pfaffian(np.zeros((3, 3)))
        with pytest.raises(NotAntisymmetricError):
            pfaffian(np.ones((2, 2)))


class TestCorrelation:
    def test_single_real_point_is_density(self):
        P = EnsembleParams(4, 9.0)
        x = 0.4
        K = matrix_kernel(P, x, x)
        assert correlation(P, PointConfig((x,), ())) == pytest.approx(
            K.e12.real, rel=1e-12)

    def test_single_complex_point_is_density(self):
        P = EnsembleParams(4, 9.0)
        z = 0.3 + 0.4j
        ref = (iota(z) * kappa_n(P, z, np.conj(z))).real
        assert correlation(P, PointConfig((), (z,))) == pytest.approx(
            ref, rel=1e-12)

    def test_two_point_real_correlation_nonnegative(self):
        # orientation of the sign term in the (2,2) entry: the two-point
        # real density must be symmetric and nonnegative
        P = EnsembleParams(2, 5.0)
        grid = (-0.9, -0.4, 0.1, 0.5, 0.8)
        for x in grid:
            for y in grid:
                if x == y:
                    continue
                r_xy = correlation(P, PointConfig((x, y), ()))
                r_yx = correlation(P, PointConfig((y, x), ()))
                assert r_xy >= -1e-9
                assert r_xy == pytest.approx(r_yx, rel=1e-10, abs=1e-12)

    def test_far_separated_points_factorize(self):
        P = EnsembleParams(4, 5.0)
        x, y = -2.0, 2.0
        joint = correlation(P, PointConfig((x, y), ()))
        product = correlation(P, PointConfig((x,), ())) \
            * correlation(P, PointConfig((y,), ()))
        assert joint == pytest.approx(product, rel=0.05)

    def test_conjugation_invariance(self):
        # replacing a point by its conjugate leaves the joint density of the
        # conjugate-symmetric root set unchanged
        P = EnsembleParams(6, 13.0)

        def density(pts):
            m = len(pts)
            A = np.zeros((2 * m, 2 * m), dtype=complex)
            for i in range(m):
                for j in range(m):
                    K = matrix_kernel(P, pts[i], pts[j])
                    A[2 * i, 2 * j] = K.e11
                    A[2 * i, 2 * j + 1] = K.e12
                    A[2 * i + 1, 2 * j] = K.e21
                    A[2 * i + 1, 2 * j + 1] = K.e22
            A = 0.5 * (A - A.T)
            return pfaffian(A).real

        z, w = 0.3 + 0.4j, -0.2 + 0.6j
        base = density([0.1, z, w])
        flipped = density([0.1, z, np.conj(w)])
        assert flipped == pytest.approx(base, rel=1e-10)

    def test_order_guard(self):
        P = EnsembleParams(2, 5.0)
        with pytest.raises(DomainError):
            correlation(P, PointConfig((0.1, 0.2), (0.3 + 0.4j,)))

    def test_phase_bookkeeping_outside_points(self):
        # attaching unimodular phases (|z|/z)^N to each argument is a
        # congruence by a unit-determinant diagonal and must not change
        # the correlation of outside points
        N = 4
        P = EnsembleParams(N, 9.0)
        pts = [1.5, 1.2 + 0.8j, np.conj(1.2 + 0.8j), -1.1 + 1.3j,
               np.conj(-1.1 + 1.3j)]
        m = len(pts)
        A = np.zeros((2 * m, 2 * m), dtype=complex)
        for i in range(m):
            for j in range(m):
                K = matrix_kernel(P, pts[i], pts[j])
                A[2 * i, 2 * j] = K.e11
                A[2 * i, 2 * j + 1] = K.e12
                A[2 * i + 1, 2 * j] = K.e21
                A[2 * i + 1, 2 * j + 1] = K.e22
        A = 0.5 * (A - A.T)
        d = []
        for z in pts:
            phase = (abs(z) / z) ** N
            d.extend([phase, phase])
        D = np.diag(d)
        hatted = D @ A @ D.T
        hatted = 0.5 * (hatted - hatted.T)
        assert pfaffian(hatted) == pytest.approx(pfaffian(A), rel=1e-9)


class TestExpectedCounts:
    def test_degree_two_closed_form(self):
        for s in (3.0, 5.0, 12.0):
            P = EnsembleParams(2, s)
            target = (2 * s - 1) / (3 * s)
            assert expected_counts(P, "inside") == pytest.approx(target,
                                                                 abs=1e-10)
            assert expected_in_exact(2, s) == pytest.approx(target, rel=1e-12)
        assert expected_in_exact(2, 3.0) == pytest.approx(5.0 / 9.0,
                                                          rel=1e-12)

    def test_degree_two_total(self):
        P = EnsembleParams(2, 5.0)
        total = expected_counts(P, "realline") + expected_counts(P, "complex")
        assert total == pytest.approx(2.0, abs=1e-6)

    def test_outside_vanishes_at_infinite_weight(self):
        P = EnsembleParams(4, math.inf)
        assert expected_counts(P, "outside") == 0.0
        assert expected_out_exact(4, math.inf) == 0.0

    @pytest.mark.parametrize("N", [2, 4, 5])
    @pytest.mark.parametrize("kind", ["plus1", "double", "inf"])
    def test_normalization(self, N, kind):
        s = {"plus1": N + 1.0, "double": 2.0 * N, "inf": math.inf}[kind]
        P = EnsembleParams(N, s)
        assert expected_counts(P, "all") == pytest.approx(N, abs=1e-5)

    @pytest.mark.parametrize("N,s", [(4, 9.0), (6, 8.5), (8, math.inf)])
    def test_exact_sums_match_quadrature(self, N, s):
        P = EnsembleParams(N, s)
        assert expected_in_exact(N, s) == pytest.approx(
            expected_counts(P, "inside"), abs=1e-8)
        assert expected_out_exact(N, s) == pytest.approx(
            expected_counts(P, "outside"), abs=1e-8)


class TestIntensities:
    def test_real_intensity_nonnegative(self):
        P = EnsembleParams(5, 11.0)
        for x in np.linspace(-2.0, 2.0, 41):
            assert intensity_real(P, float(x)) >= -1e-9

    def test_complex_intensity_nonnegative(self):
        P = EnsembleParams(4, 9.0)
        for x in np.linspace(-1.5, 1.5, 7):
            for y in (0.1, 0.4, 0.9):
                assert intensity_complex(P, complex(x, y)) >= -1e-9

    def test_complex_intensity_vanishes_at_axis(self):
        P = EnsembleParams(4, 9.0)
        vals = [intensity_complex(P, complex(0.5, im))
                for im in (0.2, 0.1, 0.05)]
        assert vals[0] > vals[1] > vals[2] > 0.0
