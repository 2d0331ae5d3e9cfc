"""Homogeneous Poisson point configurations in planar rectangles.

Configurations are stored as two coordinate arrays in canonical order:
ascending ``x``, and descending ``y`` among points that share an ``x``.
With that order a strictly increasing subsequence of ``y`` is exactly a chain
that increases strictly in both coordinates, which is what the chain code in
:mod:`lislab.chains` relies on.

All rectangle membership is open. A point on the boundary of a query
rectangle is not inside it.
"""

import csv
import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidArgument

SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class Point:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise InvalidArgument(f"point coordinates must be finite, got ({self.x}, {self.y})")

    def precedes(self, other):
        """Strict coordinatewise order: both coordinates strictly smaller."""
        return self.x < other.x and self.y < other.y


@dataclass(frozen=True)
class Rect:
    lo: Point
    hi: Point

    def __post_init__(self):
        if not self.lo.precedes(self.hi):
            raise InvalidArgument(f"rectangle corners must satisfy lo < hi componentwise: {self.lo}, {self.hi}")

    @classmethod
    def from_bounds(cls, x0, y0, x1, y1):
        return cls(Point(x0, y0), Point(x1, y1))

    @classmethod
    def square(cls, N):
        """The square ``(0, N) x (0, N)``."""
        return cls(Point(0.0, 0.0), Point(float(N), float(N)))

    @property
    def area(self):
        return (self.hi.x - self.lo.x) * (self.hi.y - self.lo.y)

    def contains(self, p):
        return self.lo.x < p.x < self.hi.x and self.lo.y < p.y < self.hi.y


def rectangle_area(w, w_prime):
    """Area of the rectangle with opposite corners ``w`` and ``w_prime``."""
    return abs(w_prime.x - w.x) * abs(w_prime.y - w.y)


def canonical_order(x, y):
    """Permutation putting points in canonical order (x up, then y down)."""
    return np.lexsort((-np.asarray(y), np.asarray(x)))


@dataclass(frozen=True, eq=False)
class PointConfig:
    """One realisation of the point process inside ``region``.

    ``x`` and ``y`` are read-only float arrays in canonical order. Use
    :meth:`from_points` to build a configuration from unsorted input.
    """

    x: np.ndarray
    y: np.ndarray
    region: Rect
    seed: int = 0
    intensity: float = 1.0

    def __post_init__(self):
        x = np.ascontiguousarray(self.x, dtype=np.float64)
        y = np.ascontiguousarray(self.y, dtype=np.float64)
        if x.shape != y.shape or x.ndim != 1:
            raise InvalidArgument("x and y must be 1-d arrays of equal length")
        if not (math.isfinite(self.intensity) and self.intensity > 0):
            raise InvalidArgument(f"intensity must be a positive finite number, got {self.intensity}")
        if x.size:
            r = self.region
            if not (np.all(x > r.lo.x) and np.all(x < r.hi.x) and np.all(y > r.lo.y) and np.all(y < r.hi.y)):
                raise InvalidArgument("all points must lie strictly inside the region")
            dx = np.diff(x)
            same_x = dx == 0
            if np.any(dx < 0) or np.any(same_x & (np.diff(y) >= 0)):
                raise InvalidArgument("points are not in canonical order; use PointConfig.from_points")
            if np.any(same_x & (np.diff(y) == 0)):
                raise InvalidArgument("duplicate points are not allowed")
        x.setflags(write=False)
        y.setflags(write=False)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    @classmethod
    def from_points(cls, points, region, seed=0, intensity=1.0):
        """Build a configuration from ``(x, y)`` pairs or :class:`Point` objects in any order."""
        arr = np.array([(p.x, p.y) if isinstance(p, Point) else tuple(p) for p in points], dtype=np.float64)
        if arr.size == 0:
            arr = arr.reshape(0, 2)
        if not np.all(np.isfinite(arr)):
            raise InvalidArgument("point coordinates must be finite")
        order = canonical_order(arr[:, 0], arr[:, 1])
        return cls(arr[order, 0], arr[order, 1], region, seed, intensity)

    def __len__(self):
        return self.x.size

    @property
    def points(self):
        return [Point(float(a), float(b)) for a, b in zip(self.x, self.y)]

    def __eq__(self, other):
        if not isinstance(other, PointConfig):
            return NotImplemented
        return (
            self.region == other.region
            and self.seed == other.seed
            and self.intensity == other.intensity
            and np.array_equal(self.x, other.x)
            and np.array_equal(self.y, other.y)
        )

    __hash__ = None


@dataclass(frozen=True)
class CylinderSpec:
    """Diagonal strip from the origin to ``(N, N)``.

    Its half-width, measured perpendicular to the diagonal, is ``N**gamma``.
    """

    gamma: float
    N: float

    def __post_init__(self):
        if not (0.0 < self.gamma < 1.0):
            raise InvalidArgument(f"gamma must lie in (0, 1), got {self.gamma}")
        if not (math.isfinite(self.N) and self.N > 0):
            raise InvalidArgument(f"N must be positive, got {self.N}")

    @property
    def half_width(self):
        return self.N**self.gamma


def contains(cyl, p):
    """True iff ``p`` lies in the (closed) cylinder ``cyl``."""
    s = p.x + p.y
    return 0.0 <= s <= 2.0 * cyl.N and abs(p.y - p.x) <= SQRT2 * cyl.N**cyl.gamma


def contains_xy(cyl, x, y):
    """Vectorised :func:`contains` over coordinate arrays."""
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    s = x + y
    return (s >= 0.0) & (s <= 2.0 * cyl.N) & (np.abs(y - x) <= SQRT2 * cyl.N**cyl.gamma)


def _check_region(region, intensity):
    for v in (region.lo.x, region.lo.y, region.hi.x, region.hi.y):
        if not math.isfinite(v):
            raise InvalidArgument("region bounds must be finite")
    if not (math.isfinite(intensity) and intensity > 0):
        raise InvalidArgument(f"intensity must be a positive finite number, got {intensity}")


def _open_uniform(rng, lo, hi, n):
    # rng.random() is in [0, 1) and rounding can land on hi; redraw edge hits
    v = lo + (hi - lo) * rng.random(n)
    bad = (v <= lo) | (v >= hi)
    while np.any(bad):
        v[bad] = lo + (hi - lo) * rng.random(int(bad.sum()))
        bad = (v <= lo) | (v >= hi)
    return v


def sample_poisson(region, intensity, seed):
    """Sample a Poisson configuration with the given intensity in ``region``.

    The point count is Poisson with mean ``intensity * region.area``, and the
    points are i.i.d. uniform in the open rectangle. The result is a pure
    function of ``(region, intensity, seed)``.

    Because the two coordinates are independent, the ``x`` values are drawn
    and sorted on their own and paired with a separate ``y`` draw. This gives
    the same law as sorting the joint sample and avoids a two-key sort.
    """
    _check_region(region, intensity)
    rng = np.random.default_rng(int(seed) & ((1 << 64) - 1))
    n = int(rng.poisson(intensity * region.area))
    x = np.sort(_open_uniform(rng, region.lo.x, region.hi.x, n))
    y = _open_uniform(rng, region.lo.y, region.hi.y, n)
    if n > 1 and np.any(np.diff(x) == 0):
        order = canonical_order(x, y)
        x, y = x[order], y[order]
    return PointConfig(x, y, region, int(seed), float(intensity))


def _x_slice(config, x0, x1):
    lo = np.searchsorted(config.x, x0, side="right")
    hi = np.searchsorted(config.x, x1, side="left")
    return lo, hi


def count_in(config, query):
    """Number of points strictly inside the open rectangle ``query``."""
    lo, hi = _x_slice(config, query.lo.x, query.hi.x)
    if hi <= lo:
        return 0
    ys = config.y[lo:hi]
    return int(np.count_nonzero((ys > query.lo.y) & (ys < query.hi.y)))


def write_points_csv(config, path):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["x", "y"])
        for a, b in zip(config.x.tolist(), config.y.tolist()):
            w.writerow([repr(a), repr(b)])


def read_points_csv(path, region, seed=0, intensity=1.0):
    with open(path, newline="") as fh:
        rows = list(csv.DictReader(fh))
    return PointConfig.from_points([(float(r["x"]), float(r["y"])) for r in rows], region, seed, intensity)
