"""Longest up/right chains and the set of points on maximal chains.

A chain from ``w`` to ``w'`` is a sequence of configuration points that is
strictly increasing in both coordinates and lies strictly inside the open
rectangle spanned by the two corners. Its length is the number of points.

Everything here runs on the canonical order of :class:`PointConfig`, where
longest chains are longest strictly increasing subsequences of ``y``. The
patience-sorting kernel in :mod:`lislab._kernels` makes that
``O(M log M)``.
"""

import csv
from dataclasses import dataclass

import numpy as np

from ._kernels import lis_length, lis_ranks
from .errors import InvalidArgument
from .point_process import SQRT2, CylinderSpec, Point, contains, contains_xy, count_in


@dataclass(frozen=True, eq=False)
class ChainAnalysis:
    """Per-point chain data for the points strictly inside ``(w, w_prime)``.

    ``forward[i]`` is the longest chain from ``w`` ending at point ``i``,
    ``backward[i]`` the longest chain starting at point ``i`` and ending at
    ``w_prime``. Point ``i`` lies on at least one maximal chain exactly when
    ``forward[i] + backward[i] - 1 == d``.

    ``index`` maps the analysed points back into the source configuration.
    """

    d: int
    forward: np.ndarray
    backward: np.ndarray
    maximal_flags: np.ndarray
    x: np.ndarray
    y: np.ndarray
    index: np.ndarray
    w: Point
    w_prime: Point

    def __len__(self):
        return self.x.size


@dataclass(frozen=True)
class TransversalSummary:
    max_deviation: float
    num_maximal_points: int


def _check_corners(w, w_prime):
    if not w.precedes(w_prime):
        raise InvalidArgument(f"corners must satisfy w < w' in both coordinates: {w}, {w_prime}")


def _admissible(config, w, w_prime):
    """Indices of points strictly inside the open rectangle, in canonical order."""
    lo = np.searchsorted(config.x, w.x, side="right")
    hi = np.searchsorted(config.x, w_prime.x, side="left")
    idx = np.arange(lo, max(lo, hi))
    ys = config.y[lo:hi]
    return idx[(ys > w.y) & (ys < w_prime.y)]


def longest_chain(config, w, w_prime):
    """Maximum number of points on an up/right chain from ``w`` to ``w_prime``."""
    _check_corners(w, w_prime)
    idx = _admissible(config, w, w_prime)
    if idx.size == 0:
        return 0
    return int(lis_length(config.y[idx]))


def longest_chain_restricted(config, K, w, w_prime):
    """Like :func:`longest_chain`, but only chains whose points all lie in ``K``."""
    _check_corners(w, w_prime)
    if not (contains(K, w) and contains(K, w_prime)):
        raise InvalidArgument("both corners must lie inside the cylinder")
    idx = _admissible(config, w, w_prime)
    idx = idx[contains_xy(K, config.x[idx], config.y[idx])]
    if idx.size == 0:
        return 0
    return int(lis_length(config.y[idx]))


def analyze_chains(config, w, w_prime):
    """Forward and backward chain lengths for every admissible point.

    The backward pass is the forward pass on the configuration reflected
    through the rectangle centre. That reflection reverses the canonical
    order, and negating ``y`` stands in for ``c - y`` because chain length
    is translation invariant. Negation is exact in floating point, so ties
    are preserved.
    """
    _check_corners(w, w_prime)
    idx = _admissible(config, w, w_prime)
    xs = config.x[idx]
    ys = config.y[idx]
    if idx.size == 0:
        empty = np.zeros(0, dtype=np.int64)
        return ChainAnalysis(0, empty, empty, np.zeros(0, dtype=bool), xs, ys, idx, w, w_prime)
    forward = lis_ranks(ys)
    backward = lis_ranks(-ys[::-1])[::-1].copy()
    d = int(forward.max())
    flags = forward + backward - 1 == d
    return ChainAnalysis(d, forward, backward, flags, xs, ys, idx, w, w_prime)


def transversal_summary(analysis, config):
    """Largest distance from the diagonal over all points on maximal chains."""
    idx = analysis.index
    if idx.size and (
        idx.max() >= len(config) or not np.array_equal(config.x[idx], analysis.x) or not np.array_equal(config.y[idx], analysis.y)
    ):
        raise InvalidArgument("analysis was not computed from this configuration")
    flags = analysis.maximal_flags
    n_max = int(np.count_nonzero(flags))
    if n_max == 0:
        return TransversalSummary(0.0, 0)
    dev = np.abs(analysis.y[flags] - analysis.x[flags]) / SQRT2
    return TransversalSummary(float(dev.max()), n_max)


def _square_side(config):
    r = config.region
    if r.lo.x != 0.0 or r.lo.y != 0.0 or r.hi.x != r.hi.y:
        raise InvalidArgument("event_A needs a configuration on a square region (0, N) x (0, N)")
    return r.hi.x


def event_A(config, gamma, analysis=None):
    """True iff every maximal chain from the origin to ``(N, N)`` stays in the cylinder.

    Only the transversal constraint is tested in effect. Points strictly
    inside the square satisfy ``0 < x + y < 2N`` automatically.

    ``analysis`` may be passed to reuse a previous :func:`analyze_chains`
    result for the same configuration and corners.
    """
    if not (0.0 < gamma < 1.0):
        raise InvalidArgument(f"gamma must lie in (0, 1), got {gamma}")
    N = _square_side(config)
    if analysis is None:
        analysis = analyze_chains(config, Point(0.0, 0.0), Point(N, N))
    flags = analysis.maximal_flags
    cyl = CylinderSpec(gamma, N)
    return bool(np.all(contains_xy(cyl, analysis.x[flags], analysis.y[flags])))


def max_cell_count(config, cells):
    """Largest number of points in any single cell (open rectangles)."""
    return max((count_in(config, c) for c in cells), default=0)


def write_analysis_csv(analysis, path):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["x", "y", "f", "g", "maximal"])
        for row in zip(
            analysis.x.tolist(),
            analysis.y.tolist(),
            analysis.forward.tolist(),
            analysis.backward.tolist(),
            analysis.maximal_flags.tolist(),
        ):
            w.writerow([repr(row[0]), repr(row[1]), row[2], row[3], int(row[4])])
