import io
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cltlab.distributions import (
    Density,
    Discrete,
    Empirical,
    atom_mass,
    cdf,
    convolve,
    discontinuity_points,
    fair_die,
    iid_sum_normalized,
    load_discrete,
    mean,
    normal,
    normal_density,
    point_mass,
    quantile,
    rademacher,
    sample,
    save_discrete,
    shift_scale,
    standard_normal,
    variance,
)
from cltlab.errors import SizeLimitError
from oracles import discrete_dists, normal_cdf


class TestConstruction:
    def test_discrete_requires_increasing_points(self):
        with pytest.raises(ValueError):
            Discrete(np.array([1.0, 1.0]), np.array([0.5, 0.5]))
        with pytest.raises(ValueError):
            Discrete(np.array([2.0, 1.0]), np.array([0.5, 0.5]))

    def test_discrete_requires_positive_weights(self):
        with pytest.raises(ValueError):
            Discrete(np.array([0.0, 1.0]), np.array([0.0, 1.0]))

    def test_discrete_weight_sum(self):
        with pytest.raises(ValueError):
            Discrete(np.array([0.0, 1.0]), np.array([0.5, 0.6]))

    def test_discrete_from_pairs_sorts(self):
        mu = Discrete.from_pairs([(1.0, 0.25), (-1.0, 0.75)])
        assert list(mu.points) == [-1.0, 1.0]
        assert list(mu.weights) == [0.75, 0.25]

    def test_density_mass_checked(self):
        with pytest.raises(ValueError):
            Density(lambda x: 1.0, (0.0, 2.0))  # mass 2

    def test_density_nonnegative_checked(self):
        with pytest.raises(ValueError):
            Density(math.sin, (0.0, 2.0 * math.pi))

    def test_density_support_ordering(self):
        with pytest.raises(ValueError):
            Density(lambda x: 1.0, (1.0, 0.0))

    def test_empirical_sorts_and_rejects_empty(self):
        e = Empirical(np.array([3.0, 1.0, 2.0]))
        assert list(e.samples) == [1.0, 2.0, 3.0]
        with pytest.raises(ValueError):
            Empirical(np.array([]))

    def test_empirical_rejects_nonfinite(self):
        with pytest.raises(ValueError):
            Empirical(np.array([1.0, float("inf")]))


class TestCdf:
    def test_standard_normal_at_zero(self):
        assert abs(cdf(standard_normal(), 0.0) - 0.5) < 1e-9

    def test_point_mass_jump(self):
        mu = point_mass(0.1)
        assert cdf(mu, 0.0999999) == 0.0
        assert cdf(mu, 0.1) == 1.0

    def test_coin_midpoint(self):
        assert cdf(rademacher(), 0.0) == 0.5

    def test_empirical(self):
        e = Empirical(np.array([1.0, 1.0, 2.0]))
        assert cdf(e, 1.0) == pytest.approx(2.0 / 3.0, abs=1e-15)
        assert cdf(e, 0.5) == 0.0
        assert cdf(e, 2.0) == 1.0

    def test_limits(self):
        for mu in (rademacher(), Empirical(np.array([0.0, 4.0]))):
            assert cdf(mu, -1e12) == 0.0
            assert cdf(mu, 1e12) == 1.0
        assert cdf(standard_normal(), -40.0) == 0.0
        assert abs(cdf(standard_normal(), 40.0) - 1.0) < 1e-9

    def test_right_continuity_at_atoms(self):
        for mu in (rademacher(), fair_die()):
            for x, w in zip(mu.points, mu.weights):
                at = cdf(mu, float(x))
                assert cdf(mu, float(x) + 1e-6) == at
                assert abs(cdf(mu, float(x) - 1e-6) - (at - w)) < 1e-15

    def test_normal_against_erf(self):
        mu = standard_normal()
        for x in (-2.5, -1.0, -0.3, 0.7, 1.96, 3.2):
            assert abs(cdf(mu, x) - normal_cdf(x)) < 1e-8

    @given(discrete_dists(), st.floats(-40, 40), st.floats(-40, 40))
    @settings(max_examples=50, deadline=None)
    def test_monotone(self, mu, x, y):
        lo, hi = min(x, y), max(x, y)
        assert cdf(mu, lo) <= cdf(mu, hi) + 1e-15


class TestQuantile:
    def test_normal_median(self):
        assert abs(quantile(standard_normal(), 0.5)) < 1e-8

    def test_coin(self):
        mu = rademacher()
        assert quantile(mu, 0.25) == -1.0
        assert quantile(mu, 0.5) == -1.0
        assert quantile(mu, 0.500001) == 1.0

    def test_normal_975(self):
        q = quantile(standard_normal(), 0.975)
        assert abs(q - 1.959964) < 1e-4
        # erf-based bisection reference
        assert abs(normal_cdf(q) - 0.975) < 1e-9

    def test_out_of_range(self):
        for p in (0.0, 1.0, -0.2, 1.5):
            with pytest.raises(ValueError):
                quantile(rademacher(), p)

    def test_empirical(self):
        e = Empirical(np.array([10.0, 20.0, 30.0, 40.0]))
        assert quantile(e, 0.25) == 10.0
        assert quantile(e, 0.26) == 20.0
        assert quantile(e, 0.75) == 30.0

    @given(discrete_dists(), st.floats(0.001, 0.999), st.floats(-35, 35))
    @settings(max_examples=60, deadline=None)
    def test_galois_connection(self, mu, p, x):
        assert (quantile(mu, p) <= x) == (p <= cdf(mu, x))


class TestMoments:
    def test_coin(self):
        assert mean(rademacher()) == 0.0
        assert variance(rademacher()) == 1.0

    def test_normal_density_moments(self):
        mu = normal(1.5, 4.0)
        assert abs(mean(mu) - 1.5) < 1e-7
        assert abs(variance(mu) - 4.0) < 1e-6

    def test_die(self):
        assert abs(mean(fair_die()) - 3.5) <= 1e-12
        assert abs(variance(fair_die()) - 35.0 / 12.0) <= 1e-12

    def test_empirical(self):
        e = Empirical(np.array([1.0, 3.0]))
        assert mean(e) == 2.0
        assert variance(e) == 1.0


class TestNormalDensity:
    def test_standard_at_zero(self):
        assert abs(normal_density(0.0) - 1.0 / math.sqrt(2 * math.pi)) < 1e-15

    def test_shifted_scaled_peak(self):
        assert abs(normal_density(5.0, m=5.0, sigma2=4.0)
                   - 1.0 / (2.0 * math.sqrt(2 * math.pi))) < 1e-15

    def test_one_sigma(self):
        assert abs(normal_density(1.0)
                   - math.exp(-0.5) / math.sqrt(2 * math.pi)) < 1e-15

    def test_invalid_variance(self):
        with pytest.raises(ValueError):
            normal_density(0.0, sigma2=0.0)
        with pytest.raises(ValueError):
            normal(0.0, -1.0)


class TestConvolve:
    def test_coin_squared(self):
        out = convolve(rademacher(), rademacher())
        assert list(out.points) == [-2.0, 0.0, 2.0]
        assert np.allclose(out.weights, [0.25, 0.5, 0.25], atol=1e-15)

    def test_point_mass_identity(self):
        mu = fair_die()
        out = convolve(mu, point_mass(0.0))
        assert np.array_equal(out.points, mu.points)
        assert np.allclose(out.weights, mu.weights, atol=1e-15)

    def test_two_dice(self):
        out = convolve(fair_die(), fair_die())
        assert list(out.points) == list(range(2, 13))
        assert abs(atom_mass(out, 7.0) - 6.0 / 36.0) < 1e-15
        assert abs(atom_mass(out, 2.0) - 1.0 / 36.0) < 1e-15

    def test_lattice_points_exact(self):
        # merged lattice atoms must stay on the integers bit-exactly
        acc = fair_die()
        for _ in range(5):
            acc = convolve(acc, fair_die())
        assert np.array_equal(acc.points, np.arange(6.0, 37.0))

    def test_commutative_associative(self):
        a = Discrete.from_pairs([(0.0, 0.3), (1.0, 0.7)])
        b = Discrete.from_pairs([(-2.0, 0.5), (2.0, 0.5)])
        c = fair_die()
        ab, ba = convolve(a, b), convolve(b, a)
        assert np.array_equal(ab.points, ba.points)
        assert np.allclose(ab.weights, ba.weights, atol=1e-12)
        left = convolve(convolve(a, b), c)
        right = convolve(a, convolve(b, c))
        assert np.array_equal(left.points, right.points)
        assert np.allclose(left.weights, right.weights, atol=1e-12)

    def test_mixed_pair_rejected(self):
        with pytest.raises(ValueError):
            convolve(rademacher(), standard_normal())

    def test_density_convolution(self):
        out = convolve(standard_normal(), standard_normal())
        # N(0,1) * N(0,1) = N(0,2)
        root2 = math.sqrt(2.0)
        for x in (-2.0, -0.5, 0.0, 1.0, root2):
            assert abs(cdf(out, x) - normal_cdf(x / root2)) < 1e-5
        assert abs(mean(out)) < 1e-6
        assert abs(variance(out) - 2.0) < 1e-4

    @given(discrete_dists(max_atoms=4), discrete_dists(max_atoms=4))
    @settings(max_examples=40, deadline=None)
    def test_moment_additivity(self, a, b):
        out = convolve(a, b)
        assert abs(mean(out) - (mean(a) + mean(b))) < 1e-9
        assert abs(variance(out) - (variance(a) + variance(b))) < 1e-9


class TestShiftScale:
    def test_identity(self):
        mu = fair_die()
        out = shift_scale(mu, 0.0, 1.0)
        assert np.array_equal(out.points, mu.points)

    def test_point_mass(self):
        out = shift_scale(point_mass(5.0), 5.0, 2.0)
        assert list(out.points) == [0.0]

    def test_coin_halved(self):
        out = shift_scale(rademacher(), 0.0, 2.0)
        assert list(out.points) == [-0.5, 0.5]

    def test_negative_scale_reverses(self):
        mu = Discrete.from_pairs([(0.0, 0.3), (1.0, 0.7)])
        out = shift_scale(mu, 0.0, -1.0)
        assert list(out.points) == [-1.0, 0.0]
        assert list(out.weights) == [0.7, 0.3]

    def test_zero_scale_rejected(self):
        with pytest.raises(ValueError):
            shift_scale(rademacher(), 0.0, 0.0)

    def test_density_shift_scale(self):
        mu = shift_scale(standard_normal(), -1.0, 2.0)  # (X+1)/2 ~ N(0.5, 0.25)
        assert abs(mean(mu) - 0.5) < 1e-6
        assert abs(variance(mu) - 0.25) < 1e-6
        assert abs(cdf(mu, 0.5) - 0.5) < 1e-7


class TestIidSumNormalized:
    def test_n1_identity(self):
        mu = iid_sum_normalized(rademacher(), 1)
        assert np.array_equal(mu.points, rademacher().points)

    def test_n2(self):
        mu = iid_sum_normalized(rademacher(), 2)
        root2 = math.sqrt(2.0)
        assert np.allclose(mu.points, [-root2, 0.0, root2], atol=1e-15)
        assert np.allclose(mu.weights, [0.25, 0.5, 0.25], atol=1e-15)

    def test_n4_pascal(self):
        mu = iid_sum_normalized(rademacher(), 4)
        assert np.allclose(mu.weights, np.array([1, 4, 6, 4, 1]) / 16.0, atol=1e-15)
        assert np.allclose(mu.points, [-2.0, -1.0, 0.0, 1.0, 2.0], atol=1e-15)

    def test_moments_normalized(self):
        from cltlab.clt import center
        for base in (rademacher(), center(fair_die())):
            for n in (1, 2, 3, 5, 16):
                mu = iid_sum_normalized(base, n)
                assert abs(mean(mu)) <= 1e-9
                assert abs(variance(mu) - 1.0) <= 1e-6

    def test_nonzero_mean_rejected(self):
        mu = Discrete.from_pairs([(0.0, 0.3), (1.0, 0.7)])
        with pytest.raises(ValueError):
            iid_sum_normalized(mu, 2)

    def test_zero_variance_rejected(self):
        with pytest.raises(ValueError):
            iid_sum_normalized(point_mass(0.0), 2)

    def test_n_validation(self):
        with pytest.raises(ValueError):
            iid_sum_normalized(rademacher(), 0)

    def test_size_limit(self):
        with pytest.raises(SizeLimitError):
            iid_sum_normalized(rademacher(), 64, max_atoms=10)


class TestSample:
    def test_point_mass(self):
        e = sample(point_mass(0.0), 5, seed=3)
        assert list(e.samples) == [0.0] * 5

    def test_determinism(self):
        a = sample(fair_die(), 1000, seed=42)
        b = sample(fair_die(), 1000, seed=42)
        assert np.array_equal(a.samples, b.samples)
        c = sample(fair_die(), 1000, seed=43)
        assert not np.array_equal(a.samples, c.samples)

    def test_normal_sample_mean(self):
        e = sample(standard_normal(), 10_000, seed=1)
        assert abs(float(np.mean(e.samples))) < 0.05

    def test_dkw_style_convergence(self):
        # empirical CDF sup distance shrinks like 1.5/sqrt(n)
        for n in (100, 10_000):
            e = sample(fair_die(), n, seed=11)
            worst = max(abs(cdf(e, float(x)) - cdf(fair_die(), float(x)))
                        for x in fair_die().points)
            assert worst <= 1.5 / math.sqrt(n)

    def test_density_sampling_matches_erf(self):
        e = sample(standard_normal(), 10_000, seed=5)
        xs = np.linspace(-4.0, 4.0, 201)
        ecdf = np.searchsorted(e.samples, xs, side="right") / e.samples.size
        worst = max(abs(float(c) - normal_cdf(float(x))) for x, c in zip(xs, ecdf))
        assert worst <= 1.5 / math.sqrt(10_000)

    def test_n_validation(self):
        with pytest.raises(ValueError):
            sample(rademacher(), 0, seed=0)


class TestDiscontinuityAndAtoms:
    def test_discrete(self):
        assert discontinuity_points(rademacher()) == [-1.0, 1.0]

    def test_density_empty(self):
        assert discontinuity_points(standard_normal()) == []

    def test_empirical(self):
        assert discontinuity_points(Empirical(np.array([1.0, 1.0, 2.0]))) == [1.0, 2.0]

    def test_atom_mass(self):
        assert atom_mass(rademacher(), 1.0) == 0.5
        assert atom_mass(rademacher(), 0.5) == 0.0
        assert atom_mass(standard_normal(), 0.0) == 0.0
        e = Empirical(np.array([1.0, 1.0, 2.0]))
        assert atom_mass(e, 1.0) == pytest.approx(2.0 / 3.0, abs=1e-15)


class TestSerialization:
    def test_round_trip_exact(self):
        mu = iid_sum_normalized(rademacher(), 8)
        buf = io.StringIO()
        save_discrete(mu, buf)
        buf.seek(0)
        back = load_discrete(buf)
        assert np.array_equal(back.points, mu.points)
        assert np.array_equal(back.weights, mu.weights)

    def test_file_round_trip(self, tmp_path):
        path = tmp_path / "die.csv"
        save_discrete(fair_die(), path)
        back = load_discrete(path)
        assert np.array_equal(back.points, fair_die().points)

    def test_header_required(self):
        buf = io.StringIO("1.0,1.0\n")
        with pytest.raises(ValueError):
            load_discrete(buf)

    def test_malformed_line(self):
        buf = io.StringIO("# discrete-dist v1\n1.0\n")
        with pytest.raises(ValueError) as err:
            load_discrete(buf)
        assert "line 2" in str(err.value)
