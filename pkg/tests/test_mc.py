import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mahler.errors import DomainError, PairingError
from mahler.mc import (RootSet, SamplerConfig, empirical_stats,
                       mahler_measure, roots_classify, sample,
                       write_histogram_csv, write_samples_csv)
from mahler.polys import PolyCoeffs


class TestMahlerMeasure:
    def test_linear(self):
        assert mahler_measure(PolyCoeffs((-2.0, 1.0)),
                              cross_check=True) == pytest.approx(2.0,
                                                                 rel=1e-12)

    def test_cyclotomic_like(self):
        for n in (2, 5, 8):
            coeffs = (-1.0,) + (0.0,) * (n - 1) + (1.0,)
            assert mahler_measure(PolyCoeffs(coeffs)) == pytest.approx(
                1.0, abs=1e-10)

    def test_repeated_root_at_one(self):
        # (z - 1)^4
        coeffs = (1.0, -4.0, 6.0, -4.0, 1.0)
        assert mahler_measure(PolyCoeffs(coeffs)) == pytest.approx(1.0,
                                                                   abs=1e-3)

    def test_circle_average_cross_check(self):
        # well-conditioned input: roots far from the unit circle
        p = PolyCoeffs((6.0, -5.0, 1.0))  # (z-2)(z-3)
        assert mahler_measure(p, cross_check=True) == pytest.approx(6.0,
                                                                    rel=1e-6)

    @given(scale=st.floats(0.1, 10.0))
    @settings(max_examples=30, deadline=None)
    def test_homogeneity(self, scale):
        p = PolyCoeffs((0.3, -1.2, 0.7, 2.0))
        base = mahler_measure(p)
        scaled = mahler_measure(PolyCoeffs(tuple(scale * c
                                                 for c in p.coeffs)))
        assert scaled == pytest.approx(scale * base, rel=1e-12)

    def test_zero_polynomial_guard(self):
        with pytest.raises(DomainError):
            mahler_measure(PolyCoeffs((0.0,)))


class TestRootsClassify:
    def test_all_complex(self):
        rs = roots_classify(PolyCoeffs((1.0, 0.0, 0.0, 0.0, 1.0)))
        assert rs.reals == ()
        assert len(rs.pairs) == 2
        assert all(z.imag > 0 for z in rs.pairs)

    def test_real_roots(self):
        rs = roots_classify(PolyCoeffs((6.0, -5.0, 1.0)))
        assert rs.pairs == ()
        assert rs.reals == pytest.approx((2.0, 3.0), abs=1e-10)

    @given(st.lists(st.floats(-2.0, 2.0), min_size=3, max_size=7))
    @settings(max_examples=60, deadline=None)
    def test_counts_add_up(self, coeffs):
        p = PolyCoeffs(tuple(coeffs) + (1.0,))
        rs = roots_classify(p)
        assert len(rs.reals) + 2 * len(rs.pairs) == len(coeffs)


class TestSampler:
    def test_reproducible(self):
        cfg = SamplerConfig(N=3, s=7.0, steps=400, burn_in=100, thin=3,
                            seed=11)
        a = [p.coeffs for p in sample(cfg)]
        b = [p.coeffs for p in sample(cfg)]
        assert a == b

    def test_monic_output(self):
        cfg = SamplerConfig(N=3, s=7.0, steps=200, burn_in=50, seed=2)
        for p in sample(cfg):
            assert p.coeffs[-1] == 1.0
            assert len(p.coeffs) == 4

    def test_star_body_invariant_at_infinite_weight(self):
        cfg = SamplerConfig(N=3, s=math.inf, step_length=0.3, steps=2000,
                            burn_in=200, seed=1)
        for p in sample(cfg):
            assert mahler_measure(p) <= 1.0 + 1e-12

    def test_config_guards(self):
        with pytest.raises(DomainError):
            SamplerConfig(N=2, s=1.5)
        with pytest.raises(DomainError):
            SamplerConfig(N=2, s=5.0, step_length=0.0)
        with pytest.raises(DomainError):
            SamplerConfig(N=2, s=5.0, steps=10, burn_in=20)

    def test_chain_matches_target_density(self):
        # compare box probabilities of (b0, b1) for z^2 + b1 z + b0 against
        # 2D quadrature of the stationary density M(b)^{-s}; the oracle
        # computes the measure from the quadratic formula directly
        s = 5.0

        def measure(b0, b1):
            disc = b1 * b1 - 4.0 * b0
            if disc >= 0:
                r1 = (-b1 + math.sqrt(disc)) / 2.0
                r2 = (-b1 - math.sqrt(disc)) / 2.0
                return max(1.0, abs(r1)) * max(1.0, abs(r2))
            return max(1.0, (b0) if b0 > 1 else 1.0)  # |r|^2 = b0

        def box_mass(x0, x1, y0, y1, n=160):
            xs = np.linspace(x0, x1, n + 1)
            ys = np.linspace(y0, y1, n + 1)
            xm = 0.5 * (xs[:-1] + xs[1:])
            ym = 0.5 * (ys[:-1] + ys[1:])
            total = 0.0
            for x in xm:
                for y in ym:
                    total += measure(x, y) ** (-s)
            return total * (x1 - x0) * (y1 - y0) / n ** 2

        ref_ratio = box_mass(-0.5, 0.5, -0.5, 0.5) \
            / box_mass(0.5, 1.5, -0.5, 0.5)

        cfg = SamplerConfig(N=2, s=s, step_length=0.5, steps=120_000,
                            burn_in=5_000, thin=10, seed=3)
        in_a = in_b = 0
        for p in sample(cfg):
            b0, b1 = p.coeffs[0], p.coeffs[1]
            if -0.5 <= b1 <= 0.5:
                if -0.5 <= b0 <= 0.5:
                    in_a += 1
                elif 0.5 <= b0 <= 1.5:
                    in_b += 1
        ratio = in_a / in_b
        # binomial-style error propagation on the ratio, 3 sigma
        sigma = ratio * math.sqrt(1.0 / in_a + 1.0 / in_b)
        assert abs(ratio - ref_ratio) <= 3.0 * sigma


@pytest.fixture(scope="module")
def stats():
    cfg = SamplerConfig(N=3, s=7.0, step_length=0.4, steps=30_000,
                        burn_in=2_000, thin=5, seed=5)
    samples = list(sample(cfg))
    return samples, empirical_stats(samples,
                                    np.linspace(-6.0, 6.0, 49),
                                    np.linspace(-4.0, 4.0, 33),
                                    np.linspace(-4.0, 4.0, 33))


class TestEmpiricalStats:
    def test_total_mass(self, stats):
        samples, st_ = stats
        real_mass = float(np.sum(st_.real_hist.density
                                 * np.diff(st_.real_hist.edges)))
        area = np.outer(np.diff(st_.complex_hist.x_edges),
                        np.diff(st_.complex_hist.y_edges))
        complex_mass = float(np.sum(st_.complex_hist.density * area))
        assert real_mass + complex_mass == pytest.approx(3.0, abs=1e-2)

    def test_mean_matches_histogram(self, stats):
        _, st_ = stats
        real_mass = float(np.sum(st_.real_hist.density
                                 * np.diff(st_.real_hist.edges)))
        assert st_.mean_real_count == pytest.approx(real_mass, abs=1e-2)

    def test_conjugate_symmetry(self, stats):
        _, st_ = stats
        d = st_.complex_hist.density
        assert np.allclose(d, d[:, ::-1], atol=1e-12)

    def test_empty_guard(self):
        with pytest.raises(DomainError):
            empirical_stats([], np.linspace(-1, 1, 3),
                            np.linspace(-1, 1, 3), np.linspace(-1, 1, 3))


class TestCsvOutput:
    def test_samples_round_trip(self, tmp_path):
        cfg = SamplerConfig(N=2, s=5.0, steps=120, burn_in=20, seed=9)
        path = tmp_path / "samples.csv"
        n = write_samples_csv(str(path), cfg, sample(cfg))
        lines = path.read_text().strip().split("\n")
        assert lines[0] == "seed,index,c0,c1,c2"
        assert len(lines) == n + 1
        regenerated = list(sample(cfg))
        first = lines[1].split(",")
        assert float(first[2]) == regenerated[0].coeffs[0]

    def test_histogram_output(self, tmp_path):
        cfg = SamplerConfig(N=2, s=5.0, steps=600, burn_in=100, seed=9)
        samples = list(sample(cfg))
        stats = empirical_stats(samples, np.linspace(-3, 3, 13),
                                np.linspace(-2, 2, 9), np.linspace(-2, 2, 9))
        path = tmp_path / "hist.csv"
        write_histogram_csv(str(path), stats.real_hist)
        lines = path.read_text().strip().split("\n")
        assert lines[0] == "bin_lo,bin_hi,density,stderr"
        assert len(lines) == 13
