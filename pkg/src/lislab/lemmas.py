"""Deterministic geometric inequalities and the cell-count tail bound.

Two families of inequalities compare ``sqrt(area)`` along nearby corner
points. Each check scans every grid point, or an evenly spaced subsample
that always includes both endpoints and, where one exists, the analytic
maximiser. Each returns the worst gap, which should be ``<= 0``.

* Shifted-cylinder comparison. Shifting the starting corner by ``3 N^gamma``
  perpendicular to the diagonal changes ``sqrt(a(., z))`` by at most
  ``10 N^(2 gamma - b)`` for ``z`` on a short vertical segment at distance
  ``N^b`` along the diagonal.
* Detour deficit. A corner ``z`` on the upper side of the cylinder loses at
  least ``N^(2 gamma - 1)`` in ``sqrt(a(0,z)) + sqrt(a(z,w_N))`` against the
  straight diagonal. With ``x = s/N`` and ``y = sqrt(2) N^(gamma-1)``
  the loss is ``N (f(x, y) - 1)``, where
  ``f(x, y) = sqrt(x^2 + x y) + sqrt((1-x)^2 - (1-x) y)``. Its maximum over
  ``[0, 1-y]`` is ``sqrt(1 - y^2)`` at ``x = (1-y)/2``, and
  ``sqrt(1 - y^2) - 1 <= -y^2/2``.

:func:`check_cell_tail` is a Monte Carlo check that the largest count over
``K`` unit-or-smaller cells has a tail below ``C K exp(-d/2)``.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy import stats

from .errors import InvalidArgument
from .point_process import SQRT2, Rect, sample_poisson
from .seeding import derive_seed

MAX_GRID = 10**5


def grid_indices(K, max_points=MAX_GRID, extra=()):
    """Indices ``0..K``, evenly subsampled to at most ``max_points`` plus ``extra``."""
    if K + 1 <= max_points:
        j = np.arange(K + 1, dtype=np.float64)
    else:
        j = np.unique(np.round(np.linspace(0.0, K, max_points)))
    if len(extra):
        j = np.union1d(j, np.clip(np.asarray(extra, dtype=np.float64), 0, K))
    return j


def _worst(gap):
    if not np.all(np.isfinite(gap)):
        raise FloatingPointError("non-finite gap in lemma grid")
    return float(gap.max())


def sqrt_diff(a1, a0):
    """``sqrt(a1) - sqrt(a0)`` without cancellation."""
    return (a1 - a0) / (np.sqrt(a1) + np.sqrt(a0))


def shifted_corner_areas(N, gamma, b, r):
    """Areas ``a(m_N, z)`` and ``a(0, z)`` for ``z = (N^b, N^b + r) / sqrt(2)``."""
    Nb = N**b
    Ng = N**gamma
    return (Nb + 3.0 * Ng) * (Nb - 3.0 * Ng + r) / 2.0, (Nb * Nb + r * Nb) / 2.0


def check_lemma_2_3(N, gamma, b, max_points=MAX_GRID):
    """Worst gap ``sqrt(a(m_N,z_j)) - sqrt(a(0,z_j)) - 10 N^(2 gamma - b)`` over the segment.

    ``z_j = (N^b, N^b + r_j) / sqrt(2)``, with ``r_j`` running over
    ``K + 1`` evenly spaced values in ``[4 N^gamma, 8 N^gamma]`` and
    ``K = floor(8 N^(2 gamma)) + 1``.
    """
    if not (0.0 < gamma < b < 1.0):
        raise InvalidArgument(f"need 0 < gamma < b < 1, got gamma={gamma}, b={b}")
    if not N**b - 4.0 * N**gamma > 0:
        raise InvalidArgument(f"N={N} too small: need N^b - 4 N^gamma > 0")
    Ng = N**gamma
    K = math.floor(8.0 * N ** (2.0 * gamma)) + 1
    j = grid_indices(K, max_points)
    r = 4.0 * Ng + j * (4.0 * Ng / K)
    a_shift, a_orig = shifted_corner_areas(N, gamma, b, r)
    gap = sqrt_diff(a_shift, a_orig) - 10.0 * N ** (2.0 * gamma - b)
    return _worst(gap)


def detour_excess(x, y):
    """``f(x, y) - 1``, the relative length deficit of a detour through the cylinder side."""
    rest = 1.0 - x
    # the second area is zero at x = 1 - y; clamp the roundoff below it
    return np.sqrt(x * (x + y)) + np.sqrt(np.maximum(rest * (rest - y), 0.0)) - 1.0


def check_lemma_3_2(N, gamma, max_points=MAX_GRID):
    """Worst gap ``sqrt(a(0,z)) + sqrt(a(z,w_N)) - N + N^(2 gamma - 1)`` on the upper side.

    ``z_j = (j M/K, j M/K + sqrt(2) N^gamma)`` with ``M = N - sqrt(2) N^gamma``
    and ``K = floor(2 sqrt(2) N^(1+gamma)) + 1``. The lower side is the
    mirror image under ``(x, y) -> (N - x, N - y)`` and gives the same
    values. The analytic maximiser is evaluated in closed form as well.
    """
    if not (2.0 / 3.0 < gamma < 1.0):
        raise InvalidArgument(f"need 2/3 < gamma < 1, got {gamma}")
    y = SQRT2 * N ** (gamma - 1.0)
    if not y < 1.0:
        raise InvalidArgument(f"N={N} too small: need sqrt(2) N^(gamma-1) < 1")
    w = SQRT2 * N**gamma
    M = N - w
    K = math.floor(2.0 * SQRT2 * N ** (1.0 + gamma)) + 1
    j_star = K * N * (1.0 - y) / (2.0 * M)
    j = grid_indices(K, max_points, extra=(math.floor(j_star), math.ceil(j_star)))
    # s runs over [0, M]; the cap keeps the last point from rounding past M
    s = np.minimum(j * (M / K), M)
    a_start = s * (s + w)
    a_end = (N - s) * (M - s)
    total = np.sqrt(a_start) + np.sqrt(a_end) - N
    bound = N ** (2.0 * gamma - 1.0)
    gap = total + bound
    at_max = -N * y * y / (1.0 + math.sqrt(1.0 - y * y)) + bound
    return _worst(np.append(gap, at_max))


@dataclass(frozen=True)
class CellTail:
    d: np.ndarray
    p_hat: np.ndarray
    upper: np.ndarray
    trials: int
    K: int
    cell_area: float


def cell_tail_curve(K, cell_area, trials, seed, d_values):
    """Empirical ``P[max_i count_i >= d]`` over ``K`` cells of equal area.

    The cells are the slabs ``[k a, (k+1) a) x (0, 1)`` of a strip of length
    ``K a``. One Poisson configuration is sampled on the strip per trial.
    Points exactly on a slab boundary have probability zero. ``upper`` is
    the exact binomial 95% upper confidence limit.
    """
    if K < 1 or not cell_area > 0:
        raise InvalidArgument("need K >= 1 and a positive cell area")
    strip = Rect.from_bounds(0.0, 0.0, K * cell_area, 1.0)
    maxima = np.empty(trials, dtype=np.int64)
    for t in range(trials):
        cfg = sample_poisson(strip, 1.0, derive_seed(seed, t))
        cell = np.minimum((cfg.x / cell_area).astype(np.int64), K - 1)
        maxima[t] = np.bincount(cell, minlength=K).max() if cell.size else 0
    d = np.asarray(list(d_values), dtype=np.int64)
    hits = (maxima[None, :] >= d[:, None]).sum(axis=1)
    upper = np.array([stats.binomtest(int(k), trials).proportion_ci(0.95, method="exact").high for k in hits])
    return CellTail(d, hits / trials, upper, trials, K, cell_area)


def check_cell_tail(N, gamma, trials, seed, C=10.0, d_values=range(18, 31)):
    """True iff the upper 95% limit of ``P[max count >= d]`` is below ``C K exp(-d/2)`` for every ``d``.

    ``K = floor(8 N^(2 gamma)) + 1`` cells share the total area
    ``8 N^(2 gamma)``, so each has area at most 1.
    """
    if trials < 1000:
        raise InvalidArgument(f"need at least 1000 trials, got {trials}")
    total = 8.0 * N ** (2.0 * gamma)
    K = math.floor(total) + 1
    curve = cell_tail_curve(K, total / K, trials, seed, d_values)
    bound = C * K * np.exp(-curve.d / 2.0)
    return bool(np.all(curve.upper <= bound))
