"""End-to-end acceptance checks.

Each test states one headline capability of the package, pinned to explicit
tolerances.  Run with `pytest tests/test_acceptance.py -v` to get one
pass/fail line per criterion; add -s to see the measured numbers.
"""

import functools
import io
import math
import time

import numpy as np
import pytest

from cltlab import cli
from cltlab.charfuns import charfun, levy_invert, normal_charfun
from cltlab.clt import CltExperiment, emit_csv, run_clt
from cltlab.distributions import (
    Density,
    Discrete,
    cdf,
    convolve,
    fair_die,
    iid_sum_normalized,
    mean,
    point_mass,
    quantile,
    rademacher,
    standard_normal,
    variance,
)
from cltlab.errors import AtomOnGridError
from cltlab.finite_space import (
    are_independent,
    expectation,
    fair_die_space,
    generate_sigma_algebra,
    product_space,
)
from cltlab.finite_space import variance as space_variance
from cltlab.weak_convergence import (
    ConvergenceProbe,
    boundary_null_check,
    cdf_distance,
    default_probe,
    portmanteau_testfn,
)
from oracles import double_factorial_moment, normal_mass


def test_criterion_01_dirichlet_integral_within_tol_under_one_second(capsys):
    start = time.perf_counter()
    code = cli.main(["integrate", "--fn", "preset:sinc", "--tol", "1e-4"])
    elapsed = time.perf_counter() - start
    out = capsys.readouterr().out
    value = float(out)
    err = abs(value - math.pi / 2.0)
    print(f"criterion 1: value={value:.10f} err={err:.2e} elapsed={elapsed:.3f}s")
    assert code == 0
    assert err <= 1e-4
    assert elapsed < 1.0


def test_criterion_02_gaussian_moments_match_double_factorials():
    from cltlab.numerics import gaussian_moment

    worst_even = max(
        abs(gaussian_moment(k) - double_factorial_moment(k))
        for k in (0, 2, 4, 6, 8)
    )
    worst_odd = max(abs(gaussian_moment(k)) for k in (1, 3, 5, 7))
    print(f"criterion 2: worst even err={worst_even:.2e}, worst odd err={worst_odd:.2e}")
    assert worst_even <= 1e-6
    assert worst_odd <= 1e-7


def test_criterion_03_quadrature_charfun_matches_gaussian_closed_form():
    worst = 0.0
    for t in (0.0, 0.5, 1.0, 2.0, 4.0):
        got = charfun(standard_normal(), t)
        worst = max(worst, abs(got - normal_charfun(t)))
    print(f"criterion 3: worst |phi_quad - exp(-t^2/2)| = {worst:.2e}")
    assert worst <= 1e-6


def test_criterion_04_convolution_powers_match_cosine_powers():
    ts = np.linspace(-10.0, 10.0, 20)
    worst = 0.0
    for n in (2, 3, 8, 32):
        acc = rademacher()
        for _ in range(n - 1):
            acc = convolve(acc, rademacher())
        for t in ts:
            worst = max(worst, abs(charfun(acc, float(t)) - math.cos(t) ** n))
    print(f"criterion 4: worst n-fold convolution charfun err = {worst:.2e}")
    assert worst <= 1e-9


def test_criterion_05_levy_inversion_recovers_interval_masses():
    got_normal = levy_invert(normal_charfun, -1.96, 1.96)
    want_normal = normal_mass(-1.96, 1.96)
    err_normal = abs(got_normal - want_normal)
    got_coin = levy_invert(math.cos, 0.0, 2.0, T=1e3, tol=1e-6)
    err_coin = abs(got_coin - 0.5)
    print(f"criterion 5: normal mass err={err_normal:.2e}, "
          f"lattice mass err={err_coin:.2e}")
    assert err_normal <= 1e-3
    assert err_coin <= 1e-2


def test_criterion_06_exact_clt_harness_converges():
    report = run_clt(CltExperiment(rademacher(), ns=(4, 16, 64, 256)))
    for col in ("cdf_sup", "levy", "charfun_sup"):
        vals = [getattr(r, col) for r in report.rows]
        assert all(a > b for a, b in zip(vals, vals[1:])), (col, vals)
    final = report.rows[-1].cdf_sup
    die = run_clt(CltExperiment(fair_die(), ns=(200,))).rows[0].cdf_sup
    print(f"criterion 6: bernoulli n=256 cdf_sup={final:.6f}, "
          f"die n=200 cdf_sup={die:.6f}")
    assert final <= 0.026
    assert die <= 0.05


def test_criterion_07_charfun_convergence_rate():
    from cltlab.clt import charfun_convergence_curve

    exp = CltExperiment(rademacher(), ns=(100, 400), t_grid=(1.0,))
    errs = {n: e for n, t, e in charfun_convergence_curve(exp)}
    print(f"criterion 7: e(100)={errs[100]:.3e}, e(400)={errs[400]:.3e}")
    assert errs[100] <= 1e-3
    assert errs[400] < errs[100]


def test_criterion_08_point_mass_convergence_and_atom_guard():
    limit = point_mass(0.0)
    probe = ConvergenceProbe(limit, (-1.0, -0.1, 0.1, 1.0))
    dists = [cdf_distance(point_mass(1.0 / n), probe) for n in (10, 100, 1000)]
    gaps_at_atom = [abs(cdf(point_mass(1.0 / n), 0.0) - cdf(limit, 0.0))
                    for n in (10, 100, 1000)]
    print(f"criterion 8: off-atom distances={dists}, at-atom gaps={gaps_at_atom}")
    assert dists == [0.0, 0.0, 0.0]
    assert gaps_at_atom == [1.0, 1.0, 1.0]
    with pytest.raises(AtomOnGridError):
        ConvergenceProbe(limit, (-1.0, 0.0, 1.0))


def test_criterion_09_portmanteau_characterizations_agree():
    n = 4096
    uniform = Density(lambda x: 1.0, (0.0, 1.0))
    lattice = Discrete((np.arange(n) + 0.5) / n, np.full(n, 1.0 / n))
    pm0 = point_mass(0.0)
    split_probe = ConvergenceProbe(pm0, (-0.5, 0.5))
    cases = [
        ("delta_shift", point_mass(1.0 / n), pm0,
         default_probe(pm0), [(-0.5, 0.5)], True),
        ("shrinking_coin",
         Discrete.from_pairs([(-1.0 / n, 0.5), (1.0 / n, 0.5)]), pm0,
         default_probe(pm0), [(-0.5, 0.5)], True),
        ("escaping_mass",
         Discrete.from_pairs([(0.0, 1.0 - 1.0 / n), (5.0, 1.0 / n)]), pm0,
         default_probe(pm0), [(-0.5, 0.5)], True),
        ("lattice_to_uniform", lattice, uniform,
         default_probe(uniform), [(0.25, 0.75)], True),
        ("alternating", point_mass(1.0), pm0,
         split_probe, [(-0.5, 0.5)], False),
        ("constant_coin", rademacher(), pm0,
         split_probe, [(-0.5, 0.5)], False),
    ]
    tol = 1e-3
    for name, mu, limit, probe, intervals, expected in cases:
        via_cdf = cdf_distance(mu, probe) <= tol
        via_testfn = max(portmanteau_testfn(mu, probe)) <= tol
        check = boundary_null_check(mu, limit, intervals)
        assert check.boundary_mass <= 1e-12, name
        via_events = abs(check.mu_value - check.limit_value) <= tol
        print(f"criterion 9: {name}: cdf={via_cdf} testfn={via_testfn} "
              f"events={via_events} expected={expected}")
        assert via_cdf == via_testfn == via_events == expected, name


def test_criterion_10_finite_space_foundations():
    die = fair_die_space()
    faces = [float(o) for o in die.outcomes]
    m = expectation(die, faces)
    v = space_variance(die, faces)
    assert abs(m - 3.5) <= 1e-12
    assert abs(v - 35.0 / 12.0) <= 1e-12

    two = product_space(die, die)
    first = [float(a) for a, _ in two.outcomes]
    second = [float(b) for _, b in two.outcomes]
    assert are_independent(two, [first, second])
    assert not are_independent(two, [first, first])

    family = generate_sigma_algebra(8, [[0, 1, 2], [2, 3]])
    events = {frozenset(e) for e in family}
    omega = frozenset(range(8))
    assert frozenset() in events and omega in events
    for e in events:
        assert omega - e in events
    for a in events:
        for b in events:
            assert a | b in events
    assert len(events) & (len(events) - 1) == 0  # power of two
    print(f"criterion 10: mean={m}, var={v:.12f}, sigma-algebra size={len(events)}")


def test_criterion_11_invariant_sweep():
    # CDF monotonicity
    for mu in (standard_normal(), fair_die(), rademacher()):
        xs = np.linspace(-4.0, 8.0, 60)
        vals = [cdf(mu, float(x)) for x in xs]
        assert all(a <= b + 1e-12 for a, b in zip(vals, vals[1:]))

    # quantile/CDF adjunction on a fixed discrete law
    d = Discrete.from_pairs([(-1.0, 0.25), (0.0, 0.25), (2.0, 0.5)])
    for p in np.linspace(0.01, 0.99, 25):
        q = quantile(d, float(p))
        assert cdf(d, q) >= p - 1e-12
        for a in d.points[d.points < q]:
            assert cdf(d, float(a)) < p

    # characteristic function modulus bound and conjugate symmetry
    for mu in (fair_die(), rademacher(), standard_normal()):
        for t in (0.25, 1.0, 3.0):
            z = charfun(mu, t)
            assert abs(z) <= 1.0 + 1e-9
            assert abs(z.conjugate() - charfun(mu, -t)) <= 1e-9

    # convolution adds means and variances
    a, b = fair_die(), rademacher()
    c = convolve(a, b)
    assert abs(mean(c) - mean(a) - mean(b)) <= 1e-9
    assert abs(variance(c) - variance(a) - variance(b)) <= 1e-9

    # normalized iid sums are centered with unit variance
    from cltlab.clt import center

    s = iid_sum_normalized(center(fair_die()), 8)
    assert abs(mean(s)) <= 1e-9
    assert abs(variance(s) - 1.0) <= 1e-9

    # CSV output is byte-stable
    exp = CltExperiment(rademacher(), ns=(4, 16))
    bufs = []
    for _ in range(2):
        buf = io.StringIO()
        emit_csv(run_clt(exp), buf)
        bufs.append(buf.getvalue())
    assert bufs[0] == bufs[1]
    print("criterion 11: monotone CDFs, quantile adjunction, |phi|<=1, "
          "moment additivity, normalized moments, stable CSV all hold")
