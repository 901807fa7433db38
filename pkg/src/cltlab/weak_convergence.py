"""Diagnostics for weak convergence of probability measures on the line.

Three views of the same notion: sup CDF distance over a continuity grid of
the limit, the Levy metric, and integrals of a fixed dictionary of bounded
continuous test functions.  Grids are validated against the limit's atoms:
evaluating a CDF comparison at an atom of the limit is a hard error, never
a silent one.
"""

import math
from dataclasses import dataclass, field
from typing import Callable, NamedTuple, Sequence

import numpy as np

from .distributions import (
    Density,
    Discrete,
    Dist,
    Empirical,
    _require_dist,
    atom_mass,
    cdf,
    discontinuity_points,
    mean,
    variance,
)
from .errors import AtomOnGridError
from .numerics import integrate

_LEVY_SLACK = 1e-12


class TestFn(NamedTuple):
    """Bounded continuous test function with its stated bound.

    ``domain`` is the sweep range on which the bound is validated (the
    function itself must be defined on all of R).
    """

    fn: Callable[[float], float]
    bound: float
    domain: tuple[float, float] = (-20.0, 20.0)


def _clamp01(x: float) -> float:
    return min(max(x, 0.0), 1.0)


def _inv_quadratic(x: float) -> float:
    return 1.0 / (1.0 + x * x)


def _bump(x: float) -> float:
    if abs(x) >= 1.0:
        return 0.0
    return math.exp(1.0 - 1.0 / (1.0 - x * x))


def default_test_fns() -> tuple[TestFn, ...]:
    """The standard dictionary: clamp to [0,1], 1/(1+x^2), cos, and a smooth
    bump supported on [-1, 1]; every bound is 1."""
    return (
        TestFn(_clamp01, 1.0),
        TestFn(_inv_quadratic, 1.0),
        TestFn(math.cos, 1.0),
        TestFn(_bump, 1.0, (-2.0, 2.0)),
    )


@dataclass(frozen=True, eq=False)
class ConvergenceProbe:
    """A limit distribution with a continuity grid and test functions.

    Construction fails with AtomOnGridError if any grid point is an atom of
    the limit, and with ValueError if a test function exceeds its stated
    bound on a sweep of its domain.
    """

    limit: Dist
    grid: tuple[float, ...]
    test_fns: tuple[TestFn, ...] = field(default_factory=default_test_fns)

    def __post_init__(self):
        _require_dist(self.limit)
        grid = tuple(float(g) for g in self.grid)
        if not grid:
            raise ValueError("the continuity grid must be non-empty")
        if any(not math.isfinite(g) for g in grid):
            raise ValueError("grid points must be finite")
        atoms = set(discontinuity_points(self.limit))
        hits = [g for g in grid if g in atoms]
        if hits:
            raise AtomOnGridError(
                f"grid points {hits} are atoms of the limit distribution"
            )
        fns = tuple(TestFn(f.fn, float(f.bound), (float(f.domain[0]), float(f.domain[1])))
                    for f in self.test_fns)
        for f in fns:
            if not (math.isfinite(f.bound) and f.bound > 0.0):
                raise ValueError(f"test function bound must be positive and finite, got {f.bound!r}")
            sweep = np.linspace(f.domain[0], f.domain[1], 201)
            worst = max(abs(float(f.fn(float(x)))) for x in sweep)
            if worst > f.bound + 1e-12:
                raise ValueError(
                    f"test function exceeds its stated bound on the sweep: {worst!r} > {f.bound!r}"
                )
        object.__setattr__(self, "grid", grid)
        object.__setattr__(self, "test_fns", fns)


def default_grid(limit: Dist) -> tuple[float, ...]:
    """Continuity grid for a limit law: midpoints between atoms plus one
    point beyond each extreme for atomic laws; a uniform 101-point grid over
    mean +- 8 standard deviations for a Density."""
    _require_dist(limit)
    if isinstance(limit, Density):
        m = mean(limit)
        s = math.sqrt(max(variance(limit), 0.0))
        if s == 0.0:
            s = 1.0
        return tuple(np.linspace(m - 8.0 * s, m + 8.0 * s, 101))
    atoms = np.asarray(discontinuity_points(limit))
    mids = 0.5 * (atoms[1:] + atoms[:-1])
    return tuple(np.concatenate([[atoms[0] - 1.0], mids, [atoms[-1] + 1.0]]))


def default_probe(limit: Dist, test_fns: tuple[TestFn, ...] | None = None) -> ConvergenceProbe:
    """Probe with the default grid and (unless overridden) the default
    test-function dictionary."""
    fns = default_test_fns() if test_fns is None else test_fns
    return ConvergenceProbe(limit, default_grid(limit), fns)


def cdf_distance(mu: Dist, probe: ConvergenceProbe) -> float:
    """sup over the probe grid of |F_mu - F_limit|."""
    _require_dist(mu)
    atoms = set(discontinuity_points(probe.limit))
    worst = 0.0
    for g in probe.grid:
        if g in atoms:
            raise AtomOnGridError(f"grid point {g} is an atom of the limit")
        worst = max(worst, abs(cdf(mu, g) - cdf(probe.limit, g)))
    return worst


def integral_against(fn: Callable[[float], float], mu: Dist, tol: float = 1e-9) -> float:
    """integral of fn d(mu): finite sum, sample mean, or quadrature."""
    _require_dist(mu)
    if isinstance(mu, Discrete):
        return float(np.dot(mu.weights, [fn(float(x)) for x in mu.points]))
    if isinstance(mu, Empirical):
        return float(np.mean([fn(float(x)) for x in mu.samples]))
    lo, hi = mu.support
    pdf = mu.pdf
    return integrate(lambda x: fn(x) * pdf(x), lo, hi, tol)


def portmanteau_testfn(mu: Dist, probe: ConvergenceProbe) -> list[float]:
    """|integral f d(mu) - integral f d(limit)| for each probe test function."""
    return [
        abs(integral_against(f.fn, mu) - integral_against(f.fn, probe.limit))
        for f in probe.test_fns
    ]


class BoundaryCheck(NamedTuple):
    mu_value: float
    limit_value: float
    boundary_mass: float


def boundary_null_check(
    mu: Dist, limit: Dist, intervals: Sequence[tuple[float, float]]
) -> BoundaryCheck:
    """Measure of a finite disjoint union of half-open intervals (a, b]
    under mu and limit, plus the limit's atom mass on the boundary points.

    Overlapping or inverted intervals raise ValueError.
    """
    _require_dist(mu)
    _require_dist(limit)
    ivs = [(float(a), float(b)) for a, b in intervals]
    for a, b in ivs:
        if not (math.isfinite(a) and math.isfinite(b) and a < b):
            raise ValueError(f"interval endpoints must satisfy a < b, got ({a!r}, {b!r})")
    ivs.sort()
    for (a1, b1), (a2, b2) in zip(ivs, ivs[1:]):
        if a2 < b1:
            raise ValueError(
                f"intervals ({a1}, {b1}] and ({a2}, {b2}] overlap; the union must be disjoint"
            )
    mu_value = sum(cdf(mu, b) - cdf(mu, a) for a, b in ivs)
    limit_value = sum(cdf(limit, b) - cdf(limit, a) for a, b in ivs)
    endpoints = {a for a, _ in ivs} | {b for _, b in ivs}
    boundary_mass = sum(atom_mass(limit, e) for e in endpoints)
    return BoundaryCheck(mu_value, limit_value, boundary_mass)


class _StepCdf:
    """Right-continuous step CDF from atoms, with left limits."""

    def __init__(self, points: np.ndarray, weights: np.ndarray):
        self.points = points
        self.cum = np.cumsum(weights)

    def value(self, x: np.ndarray) -> np.ndarray:
        idx = np.searchsorted(self.points, x, side="right")
        return np.where(idx > 0, self.cum[np.maximum(idx - 1, 0)], 0.0)

    def left(self, x: np.ndarray) -> np.ndarray:
        idx = np.searchsorted(self.points, x, side="left")
        return np.where(idx > 0, self.cum[np.maximum(idx - 1, 0)], 0.0)

    @property
    def breakpoints(self) -> np.ndarray:
        return self.points


class _TableCdf:
    """Piecewise-linear CDF table for a Density (resolution ~ support/8192)."""

    def __init__(self, d: Density):
        lo, hi = d._effective_support
        xs = np.linspace(lo, hi, 8193)
        fs = np.array([max(float(d.pdf(float(x))), 0.0) for x in xs])
        steps = 0.5 * (fs[1:] + fs[:-1]) * np.diff(xs)
        cum = np.concatenate([[0.0], np.cumsum(steps)])
        cum /= cum[-1]
        self.xs = xs
        self.cum = cum

    def value(self, x: np.ndarray) -> np.ndarray:
        return np.interp(x, self.xs, self.cum, left=0.0, right=1.0)

    left = value

    @property
    def breakpoints(self) -> np.ndarray:
        return self.xs


def _cdf_evaluator(mu: Dist):
    if isinstance(mu, Discrete):
        return _StepCdf(mu.points, mu.weights)
    if isinstance(mu, Empirical):
        pts, counts = np.unique(mu.samples, return_counts=True)
        return _StepCdf(pts, counts / mu.samples.size)
    return _TableCdf(mu)


def levy_metric(mu: Dist, nu: Dist, tol: float = 1e-4) -> float:
    """Levy metric: inf{eps > 0 : F(x-eps)-eps <= G(x) <= F(x+eps)+eps for
    all x}, located by bisection on eps to within tol.

    The corridor condition between two right-continuous CDFs is checked on
    the candidate set where the supremum of the violation can occur: the
    breakpoints of each CDF evaluated directly, plus left limits at
    breakpoints shifted by eps.
    """
    _require_dist(mu)
    _require_dist(nu)
    if not (isinstance(tol, (int, float)) and tol > 0.0):
        raise ValueError(f"tolerance must be positive, got {tol!r}")
    F = _cdf_evaluator(mu)
    G = _cdf_evaluator(nu)
    bf = F.breakpoints
    bg = G.breakpoints

    def ok(eps: float) -> bool:
        # sup_x [G(x) - F(x+eps)]: attained at breakpoints of G, or as a
        # left limit at breakpoints of F shifted down by eps
        s = np.max(G.value(bg) - F.value(bg + eps))
        s = max(s, float(np.max(G.left(bf - eps) - F.left(bf))))
        # sup_x [F(x-eps) - G(x)]: mirror image
        s = max(s, float(np.max(F.value(bf) - G.value(bf + eps))))
        s = max(s, float(np.max(F.left(bg - eps) - G.left(bg))))
        return s <= eps + _LEVY_SLACK

    if ok(0.0):
        return 0.0
    lo, hi = 0.0, 1.0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if ok(mid):
            hi = mid
        else:
            lo = mid
    return hi
