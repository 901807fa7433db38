"""Probability distributions on the real line in three concrete forms.

``Discrete`` holds finitely many weighted atoms, ``Density`` wraps an
integrable density with its support, and ``Empirical`` is the distribution
of a finite sample.  All CDFs follow the right-continuous convention
F(x) = mu((-inf, x]), and quantiles are the generalized inverse
inf{x : F(x) >= p}, so quantile(p) <= x exactly when p <= cdf(x).
"""

import io
import math
import os
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Callable, Union

import numpy as np

from .errors import NonConvergenceError, SizeLimitError
from .numerics import integrate

_WEIGHT_SUM_TOL = 1e-12
_MERGE_TOL = 1e-12
_MEAN_ZERO_TOL = 1e-9
_MAX_ATOMS = 1_000_000
_CDF_TOL = 1e-10
_MOMENT_TOL = 1e-9

DISCRETE_HEADER = "# discrete-dist v1"


@dataclass(frozen=True, eq=False)
class Discrete:
    """Finitely many atoms: strictly increasing points with positive weights
    summing to one (within 1e-12)."""

    points: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float).reshape(-1)
        wts = np.asarray(self.weights, dtype=float).reshape(-1)
        if pts.size == 0:
            raise ValueError("a Discrete distribution needs at least one atom")
        if pts.size != wts.size:
            raise ValueError("points and weights must have matching lengths")
        if not np.isfinite(pts).all():
            raise ValueError("atom positions must be finite")
        if np.any(np.diff(pts) <= 0.0):
            raise ValueError("atom positions must be strictly increasing")
        if not np.isfinite(wts).all() or np.any(wts <= 0.0):
            raise ValueError("atom weights must be positive")
        if abs(float(wts.sum()) - 1.0) > _WEIGHT_SUM_TOL:
            raise ValueError(f"atom weights must sum to 1, got {float(wts.sum())!r}")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "weights", wts)

    @classmethod
    def from_pairs(cls, pairs) -> "Discrete":
        """Build from (point, weight) pairs given in any order."""
        pts, wts = zip(*pairs)
        order = np.argsort(np.asarray(pts, dtype=float))
        return cls(np.asarray(pts, dtype=float)[order], np.asarray(wts, dtype=float)[order])

    @cached_property
    def _cumweights(self) -> np.ndarray:
        return np.cumsum(self.weights)


@dataclass(frozen=True, eq=False)
class Density:
    """Absolutely continuous law given by a density and its support.

    The density must be nonnegative and integrate to one over the support
    within ``mass_tol`` (checked at construction by quadrature).
    """

    pdf: Callable[[float], float]
    support: tuple[float, float]
    mass_tol: float = 1e-6

    def __post_init__(self):
        lo, hi = (float(self.support[0]), float(self.support[1]))
        if math.isnan(lo) or math.isnan(hi) or not lo < hi:
            raise ValueError(f"support must be an ordered interval, got {self.support!r}")
        if not (0.0 < self.mass_tol < 1.0):
            raise ValueError("mass_tol must lie in (0, 1)")
        object.__setattr__(self, "support", (lo, hi))
        sweep_lo = max(lo, -32.0)
        sweep_hi = min(hi, 32.0)
        if sweep_lo < sweep_hi:
            for x in np.linspace(sweep_lo, sweep_hi, 65):
                if float(self.pdf(float(x))) < -1e-9:
                    raise ValueError(f"density is negative near x={float(x):.6g}")
        mass = integrate(self.pdf, lo, hi, tol=self.mass_tol / 4.0)
        if abs(mass - 1.0) > self.mass_tol:
            raise ValueError(f"density mass {mass!r} deviates from 1 beyond mass_tol")

    @cached_property
    def _moments(self) -> tuple[float, float]:
        lo, hi = self.support
        m = integrate(lambda x: x * self.pdf(x), lo, hi, tol=_MOMENT_TOL)
        v = integrate(lambda x: (x - m) ** 2 * self.pdf(x), lo, hi, tol=_MOMENT_TOL)
        return m, v

    @cached_property
    def _effective_support(self) -> tuple[float, float]:
        """Support truncated, when infinite, to mean +- 10 standard deviations."""
        lo, hi = self.support
        if math.isfinite(lo) and math.isfinite(hi):
            return lo, hi
        m, v = self._moments
        spread = 10.0 * math.sqrt(max(v, 0.0))
        return (lo if math.isfinite(lo) else m - spread,
                hi if math.isfinite(hi) else m + spread)

    @cached_property
    def _cdf_table(self) -> tuple[np.ndarray, np.ndarray]:
        """Piecewise-linear CDF on a fine grid, used for bulk sampling."""
        lo, hi = self._effective_support
        xs = np.linspace(lo, hi, 4097)
        fs = np.array([max(float(self.pdf(float(x))), 0.0) for x in xs])
        steps = 0.5 * (fs[1:] + fs[:-1]) * np.diff(xs)
        cum = np.concatenate([[0.0], np.cumsum(steps)])
        cum /= cum[-1]
        return xs, cum


@dataclass(frozen=True, eq=False)
class Empirical:
    """Uniform distribution over a finite sample; samples are kept sorted."""

    samples: np.ndarray

    def __post_init__(self):
        xs = np.sort(np.asarray(self.samples, dtype=float).reshape(-1))
        if xs.size == 0:
            raise ValueError("an Empirical distribution needs at least one sample")
        if not np.isfinite(xs).all():
            raise ValueError("samples must be finite")
        object.__setattr__(self, "samples", xs)


Dist = Union[Discrete, Density, Empirical]


def _require_dist(mu) -> None:
    if not isinstance(mu, (Discrete, Density, Empirical)):
        raise TypeError(f"expected a Discrete, Density, or Empirical, got {type(mu).__name__}")


def cdf(mu: Dist, x: float, tol: float = _CDF_TOL) -> float:
    """F(x) = mu((-inf, x]); right-continuous, includes an atom at x."""
    _require_dist(mu)
    x = float(x)
    if math.isnan(x):
        raise ValueError("cdf argument must not be NaN")
    if isinstance(mu, Discrete):
        idx = int(np.searchsorted(mu.points, x, side="right"))
        return float(mu._cumweights[idx - 1]) if idx > 0 else 0.0
    if isinstance(mu, Empirical):
        idx = int(np.searchsorted(mu.samples, x, side="right"))
        return idx / mu.samples.size
    lo, hi = mu.support
    if x <= lo:
        return 0.0
    a, b = lo, min(x, hi)
    if not (math.isfinite(lo) and math.isfinite(hi)):
        # an infinite tail would let the truncation doublings agree on ~0
        # before ever reaching the bulk; the effective window carries all
        # mass up to ~1e-20, far below any useful cdf tolerance
        elo, ehi = mu._effective_support
        if x <= elo:
            return 0.0
        a, b = max(lo, elo), min(b, ehi)
    if b <= a:
        return 0.0
    value = integrate(mu.pdf, a, b, tol=tol)
    return min(max(value, 0.0), 1.0)


def quantile(mu: Dist, p: float) -> float:
    """Generalized inverse CDF: inf{x : cdf(mu, x) >= p} for p in (0, 1)."""
    _require_dist(mu)
    p = float(p)
    if not 0.0 < p < 1.0:
        raise ValueError(f"quantile level must lie in (0, 1), got {p!r}")
    if isinstance(mu, Discrete):
        idx = int(np.searchsorted(mu._cumweights, p, side="left"))
        return float(mu.points[min(idx, mu.points.size - 1)])
    if isinstance(mu, Empirical):
        n = mu.samples.size
        idx = min(max(math.ceil(p * n) - 1, 0), n - 1)
        return float(mu.samples[idx])
    lo, hi = mu.support
    lo_b, hi_b = lo, hi
    if not math.isfinite(lo_b):
        lo_b, step = -1.0, 1.0
        while cdf(mu, lo_b) >= p:
            lo_b -= step
            step *= 2.0
    if not math.isfinite(hi_b):
        hi_b, step = 1.0, 1.0
        while cdf(mu, hi_b) < p:
            hi_b += step
            step *= 2.0
    # bisect keeping cdf(lo_b) < p <= cdf(hi_b)
    for _ in range(200):
        mid = 0.5 * (lo_b + hi_b)
        if hi_b - lo_b < 1e-12 * max(1.0, abs(lo_b), abs(hi_b)):
            break
        if cdf(mu, mid) >= p:
            hi_b = mid
        else:
            lo_b = mid
    return hi_b


def mean(mu: Dist, tol: float = _MOMENT_TOL) -> float:
    """First moment; raises NonConvergenceError for heavy tails."""
    _require_dist(mu)
    if isinstance(mu, Discrete):
        return float(np.dot(mu.weights, mu.points))
    if isinstance(mu, Empirical):
        return float(mu.samples.mean())
    if tol == _MOMENT_TOL:
        return mu._moments[0]
    lo, hi = mu.support
    return integrate(lambda x: x * mu.pdf(x), lo, hi, tol=tol)


def variance(mu: Dist, tol: float = _MOMENT_TOL) -> float:
    """Second central moment; raises NonConvergenceError for heavy tails."""
    _require_dist(mu)
    if isinstance(mu, Discrete):
        m = mean(mu)
        return float(np.dot(mu.weights, (mu.points - m) ** 2))
    if isinstance(mu, Empirical):
        return float(mu.samples.var())
    if tol == _MOMENT_TOL:
        return mu._moments[1]
    lo, hi = mu.support
    m = mean(mu, tol)
    return integrate(lambda x: (x - m) ** 2 * mu.pdf(x), lo, hi, tol=tol)


def atom_mass(mu: Dist, x: float) -> float:
    """Mass of the single point {x} under mu (zero for a Density)."""
    _require_dist(mu)
    x = float(x)
    if isinstance(mu, Discrete):
        idx = int(np.searchsorted(mu.points, x, side="left"))
        if idx < mu.points.size and mu.points[idx] == x:
            return float(mu.weights[idx])
        return 0.0
    if isinstance(mu, Empirical):
        left = int(np.searchsorted(mu.samples, x, side="left"))
        right = int(np.searchsorted(mu.samples, x, side="right"))
        return (right - left) / mu.samples.size
    return 0.0


def discontinuity_points(mu: Dist) -> list[float]:
    """Atoms of the distribution; empty for a Density by construction."""
    _require_dist(mu)
    if isinstance(mu, Discrete):
        return [float(x) for x in mu.points]
    if isinstance(mu, Empirical):
        return [float(x) for x in np.unique(mu.samples)]
    return []


def _merge_atoms(points: np.ndarray, weights: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Sort atom pairs and combine points that coincide within 1e-12."""
    order = np.argsort(points, kind="stable")
    pts = points[order]
    wts = weights[order]
    if pts.size > 1:
        breaks = np.nonzero(np.diff(pts) > _MERGE_TOL)[0]
        starts = np.concatenate([[0], breaks + 1])
        merged_w = np.add.reduceat(wts, starts)
        merged_p = pts[starts]
        return merged_p, merged_w
    return pts, wts


def _convolve_discrete(a: Discrete, b: Discrete, max_atoms: int = _MAX_ATOMS) -> Discrete:
    n_pairs = a.points.size * b.points.size
    if n_pairs > 40_000_000:
        raise SizeLimitError(
            f"convolution would enumerate {n_pairs} atom pairs; refusing"
        )
    pts = np.add.outer(a.points, b.points).ravel()
    wts = np.multiply.outer(a.weights, b.weights).ravel()
    pts, wts = _merge_atoms(pts, wts)
    if pts.size > max_atoms:
        raise SizeLimitError(f"convolution produced {pts.size} atoms (cap {max_atoms})")
    return Discrete(pts, wts)


def _trapezoid(y: np.ndarray, dx: float) -> float:
    trap = getattr(np, "trapezoid", None) or np.trapz
    return float(trap(y, dx=dx))


def _convolve_density(a: Density, b: Density) -> Density:
    lo1, hi1 = a._effective_support
    lo2, hi2 = b._effective_support
    span1, span2 = hi1 - lo1, hi2 - lo2
    n_grid = 4096
    dx = max(span1, span2) / (n_grid - 1)
    m1 = int(math.ceil(span1 / dx)) + 1
    m2 = int(math.ceil(span2 / dx)) + 1
    g1 = lo1 + dx * np.arange(m1)
    g2 = lo2 + dx * np.arange(m2)
    f1 = np.array([max(float(a.pdf(float(x))), 0.0) for x in g1])
    f2 = np.array([max(float(b.pdf(float(x))), 0.0) for x in g2])
    conv = np.convolve(f1, f2) * dx
    conv = np.maximum(conv, 0.0)
    conv /= _trapezoid(conv, dx)
    zs = (lo1 + lo2) + dx * np.arange(conv.size)
    z0, z1 = float(zs[0]), float(zs[-1])

    def pdf(x: float, _zs=zs, _vals=conv) -> float:
        return float(np.interp(x, _zs, _vals, left=0.0, right=0.0))

    return Density(pdf, (z0, z1), mass_tol=1e-6)


def convolve(mu: Dist, nu: Dist) -> Dist:
    """Distribution of the sum of independent draws from mu and nu.

    Supported pairs: Discrete*Discrete (exact atom-pair enumeration with
    1e-12 merging) and Density*Density (grid convolution on a uniform grid
    with linear interpolation).
    """
    _require_dist(mu)
    _require_dist(nu)
    if isinstance(mu, Discrete) and isinstance(nu, Discrete):
        return _convolve_discrete(mu, nu)
    if isinstance(mu, Density) and isinstance(nu, Density):
        return _convolve_density(mu, nu)
    raise ValueError(
        f"unsupported convolution pair: {type(mu).__name__} * {type(nu).__name__}"
    )


def shift_scale(mu: Dist, a: float, b: float) -> Dist:
    """Law of (X - a) / b for X ~ mu; b must be nonzero."""
    _require_dist(mu)
    a = float(a)
    b = float(b)
    if not (math.isfinite(a) and math.isfinite(b)):
        raise ValueError("shift and scale must be finite")
    if b == 0.0:
        raise ValueError("scale must be nonzero")
    if isinstance(mu, Discrete):
        pts = (mu.points - a) / b
        wts = mu.weights
        if b < 0.0:
            pts = pts[::-1].copy()
            wts = wts[::-1].copy()
        return Discrete(pts, wts)
    if isinstance(mu, Empirical):
        return Empirical((mu.samples - a) / b)
    lo, hi = mu.support
    lo_t, hi_t = (lo - a) / b, (hi - a) / b
    if b < 0.0:
        lo_t, hi_t = hi_t, lo_t
    scale = abs(b)
    base = mu.pdf

    def pdf(x: float) -> float:
        return scale * float(base(b * x + a))

    return Density(pdf, (lo_t, hi_t), mass_tol=mu.mass_tol)


def iid_sum_normalized(mu: Discrete, n: int, max_atoms: int = _MAX_ATOMS) -> Discrete:
    """Exact law of (X_1 + ... + X_n) / sqrt(n * sigma^2) for iid X_i ~ mu.

    Requires a Discrete mu with mean zero (|mean| <= 1e-9) and positive
    variance.  The n-fold self-convolution is computed by binary powering;
    exceeding the atom cap raises SizeLimitError.
    """
    if not isinstance(mu, Discrete):
        raise TypeError("iid_sum_normalized requires a Discrete distribution")
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    m = mean(mu)
    if abs(m) > _MEAN_ZERO_TOL:
        raise ValueError(f"base distribution must have mean zero, got mean {m!r}")
    s2 = variance(mu)
    if s2 <= 0.0:
        raise ValueError("base distribution must have positive variance")
    acc: Discrete | None = None
    power = mu
    e = int(n)
    while e:
        if e & 1:
            acc = power if acc is None else _convolve_discrete(acc, power, max_atoms)
        e >>= 1
        if e:
            power = _convolve_discrete(power, power, max_atoms)
    assert acc is not None
    return shift_scale(acc, 0.0, math.sqrt(n * s2))


def sample(mu: Dist, n: int, seed: int) -> Empirical:
    """n iid draws from mu, produced by applying the quantile transform to
    seeded uniforms; identical inputs give identical output."""
    _require_dist(mu)
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise ValueError(f"sample size must be a positive integer, got {n!r}")
    rng = np.random.default_rng(int(seed))
    u = rng.random(int(n))
    if isinstance(mu, Discrete):
        idx = np.minimum(
            np.searchsorted(mu._cumweights, u, side="left"), mu.points.size - 1
        )
        return Empirical(mu.points[idx])
    if isinstance(mu, Empirical):
        size = mu.samples.size
        idx = np.clip(np.ceil(u * size).astype(int) - 1, 0, size - 1)
        return Empirical(mu.samples[idx])
    xs, cum = mu._cdf_table
    keep = np.concatenate([[True], np.diff(cum) > 0.0])
    return Empirical(np.interp(u, cum[keep], xs[keep]))


def normal_density(x: float, m: float = 0.0, sigma2: float = 1.0) -> float:
    """Density of the normal law with mean m and variance sigma2 at x."""
    if not (math.isfinite(m) and math.isfinite(sigma2)) or sigma2 <= 0.0:
        raise ValueError(f"normal parameters need finite m and sigma2 > 0, got {(m, sigma2)!r}")
    z = (float(x) - m) ** 2 / (2.0 * sigma2)
    return math.exp(-z) / math.sqrt(2.0 * math.pi * sigma2)


def normal(m: float = 0.0, sigma2: float = 1.0) -> Density:
    """Normal law with mean m and variance sigma2 as a Density."""
    if not (math.isfinite(m) and math.isfinite(sigma2)) or sigma2 <= 0.0:
        raise ValueError(f"normal parameters need finite m and sigma2 > 0, got {(m, sigma2)!r}")

    def pdf(x: float) -> float:
        return normal_density(x, m, sigma2)

    return Density(pdf, (-math.inf, math.inf), mass_tol=1e-7)


@lru_cache(maxsize=1)
def standard_normal() -> Density:
    """The standard normal law (cached single instance)."""
    return normal(0.0, 1.0)


def point_mass(x: float) -> Discrete:
    """The unit mass at x."""
    return Discrete(np.array([float(x)]), np.array([1.0]))


def rademacher() -> Discrete:
    """The fair coin on {-1, +1}."""
    return Discrete(np.array([-1.0, 1.0]), np.array([0.5, 0.5]))


def fair_die() -> Discrete:
    """The fair six-sided die on {1, ..., 6}."""
    return Discrete(np.arange(1.0, 7.0), np.full(6, 1.0 / 6.0))


def save_discrete(mu: Discrete, dest) -> None:
    """Write a Discrete distribution as '# discrete-dist v1' plus one
    'point,weight' line per atom.  dest is a path or a writable text file."""
    if not isinstance(mu, Discrete):
        raise TypeError("only Discrete distributions serialize to this format")
    lines = [DISCRETE_HEADER]
    lines += [f"{p:.17g},{w:.17g}" for p, w in zip(mu.points, mu.weights)]
    text = "\n".join(lines) + "\n"
    if isinstance(dest, (str, os.PathLike)):
        with open(dest, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        dest.write(text)


def load_discrete(src) -> Discrete:
    """Parse the 'point,weight' format written by save_discrete.

    src is a path or a readable text file.  Malformed headers or rows raise
    ValueError; the parsed atoms must satisfy the Discrete invariants.
    """
    if isinstance(src, (str, os.PathLike)):
        with open(src, "r", encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = src.read()
    lines = [ln.strip() for ln in io.StringIO(text)]
    lines = [ln for ln in lines if ln]
    if not lines or lines[0] != DISCRETE_HEADER:
        raise ValueError(f"missing '{DISCRETE_HEADER}' header")
    pts = []
    wts = []
    for i, ln in enumerate(lines[1:], start=2):
        parts = ln.split(",")
        if len(parts) != 2:
            raise ValueError(f"line {i}: expected 'point,weight', got {ln!r}")
        try:
            pts.append(float(parts[0]))
            wts.append(float(parts[1]))
        except ValueError as exc:
            raise ValueError(f"line {i}: {exc}") from None
    return Discrete(np.array(pts), np.array(wts))
