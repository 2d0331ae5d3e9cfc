"""Exponent fits, cylinder-event probabilities and Tracy-Widom comparison.

The fluctuation exponent comes from the interquartile range of the chain
length at each ``N``, and the transversal exponent from the median of the
per-trial maximal deviation. Both are fitted as a straight line in
``log N``. The cylinder event itself is an indicator and too noisy to fit.
It is reported separately by :func:`probability_A`.
"""

import math
from collections import defaultdict
from dataclasses import dataclass

import numpy as np
from scipy import stats

from .errors import InvalidArgument
from .tracy_widom import scaled_statistic, tw_cdf

MIN_SIZES = 3
MIN_TRIALS = 50


@dataclass(frozen=True)
class ScalingFit:
    slope: float
    intercept: float
    slope_stderr: float
    r_squared: float
    points: tuple
    degenerate: bool = False

    def as_dict(self):
        def num(v):
            return None if not math.isfinite(v) else v

        return {
            "slope": num(self.slope),
            "intercept": num(self.intercept),
            "slope_stderr": num(self.slope_stderr),
            "r_squared": num(self.r_squared),
            "points": [[num(a), num(b)] for a, b in self.points],
            "degenerate": self.degenerate,
        }


def loglog_fit(sizes, values):
    """Least-squares line through ``(log size, log value)``."""
    lx = np.log(np.asarray(sizes, dtype=np.float64))
    ly = np.log(np.asarray(values, dtype=np.float64))
    res = stats.linregress(lx, ly)
    return ScalingFit(
        slope=float(res.slope),
        intercept=float(res.intercept),
        slope_stderr=float(res.stderr),
        r_squared=float(res.rvalue**2),
        points=tuple(zip(lx.tolist(), ly.tolist())),
    )


def group_by_N(records):
    groups = defaultdict(list)
    for r in records:
        groups[r.N].append(r)
    return dict(sorted(groups.items()))


def _grouped(records):
    groups = group_by_N(records)
    if len(groups) < MIN_SIZES:
        raise InvalidArgument(f"need at least {MIN_SIZES} distinct N values, got {len(groups)}")
    small = [N for N, rs in groups.items() if len(rs) < MIN_TRIALS]
    if small:
        raise InvalidArgument(f"need at least {MIN_TRIALS} trials per N; too few at N={small}")
    return groups


def interquartile_range(values):
    q75, q25 = np.percentile(values, [75, 25])
    return float(q75 - q25)


def estimate_chi(records):
    """Fluctuation exponent from the IQR of ``d`` against ``N``.

    If the IQR vanishes at every ``N`` (constant lengths), the result has
    slope 0, infinite standard error and ``degenerate=True``.
    """
    groups = _grouped(records)
    sizes = list(groups)
    iqr = [interquartile_range([r.d for r in rs]) for rs in groups.values()]
    if all(v == 0 for v in iqr):
        pts = tuple((math.log(N), -math.inf) for N in sizes)
        return ScalingFit(0.0, math.nan, math.inf, 0.0, pts, degenerate=True)
    if any(v <= 0 for v in iqr):
        raise InvalidArgument(f"interquartile range vanishes at some N: {dict(zip(sizes, iqr))}")
    return loglog_fit(sizes, iqr)


def estimate_xi(records):
    """Transversal exponent from the median maximal deviation against ``N``.

    If every deviation is zero there is nothing to fit. The result then has
    NaN slope and ``degenerate=True``.
    """
    groups = _grouped(records)
    sizes = list(groups)
    med = [float(np.median([r.max_deviation for r in rs])) for rs in groups.values()]
    if all(v == 0 for v in med):
        pts = tuple((math.log(N), -math.inf) for N in sizes)
        return ScalingFit(math.nan, math.nan, math.inf, math.nan, pts, degenerate=True)
    if any(v <= 0 for v in med):
        raise InvalidArgument(f"median deviation vanishes at some N: {dict(zip(sizes, med))}")
    return loglog_fit(sizes, med)


@dataclass(frozen=True)
class ProbabilityEstimate:
    p: float
    ci_low: float
    ci_high: float
    successes: int
    trials: int


def _gamma_key(record, gamma):
    for g in record.event_A:
        if math.isclose(g, gamma, rel_tol=0, abs_tol=1e-12):
            return g
    return None


def probability_A(records, gamma, N, confidence=0.95):
    """Fraction of trials at ``N`` where every maximal chain stays in the cylinder.

    The interval is the exact (Clopper-Pearson) binomial interval.
    """
    cell = []
    for r in records:
        if math.isclose(r.N, N, rel_tol=1e-12):
            key = _gamma_key(r, gamma)
            if key is not None:
                cell.append(r.event_A[key])
    if not cell:
        raise InvalidArgument(f"no records at N={N}, gamma={gamma}")
    k = int(sum(cell))
    n = len(cell)
    ci = stats.binomtest(k, n).proportion_ci(confidence_level=confidence, method="exact")
    return ProbabilityEstimate(k / n, float(ci.low), float(ci.high), k, n)


def ks_distance(samples, sol):
    """Sup distance between the empirical CDF of ``samples`` and ``F``.

    The supremum runs over all real ``t``, so both sides of every jump of
    the empirical CDF are checked. That matters for integer chain lengths,
    whose scaled values are discrete.
    """
    s = np.sort(np.asarray(samples, dtype=np.float64))
    n = s.size
    if n == 0:
        raise InvalidArgument("no samples")
    F = tw_cdf(sol, s)
    i = np.arange(1, n + 1)
    return float(max(np.max(i / n - F), np.max(F - (i - 1) / n)))


def lattice_distance(lengths, lam, sol):
    """``max_n |P[d <= n] - F(t_n)|`` over integers ``n`` around the observed range.

    ``t_n`` is the scaled value of ``n``. Unlike :func:`ks_distance`, this
    ignores the gaps between neighbouring ``t_n``, where the empirical CDF
    of an integer statistic is flat while ``F`` keeps rising. It isolates
    the distributional mismatch from the lattice effect.
    """
    d = np.sort(np.asarray(lengths, dtype=np.int64))
    if d.size == 0:
        raise InvalidArgument("no samples")
    n = np.arange(max(int(d[0]) - 1, 0), int(d[-1]) + 1)
    G = np.searchsorted(d, n, side="right") / d.size
    return float(np.max(np.abs(G - tw_cdf(sol, scaled_statistic(n, lam)))))


def tw_comparison(records, sol, N, lam=None, min_trials=500):
    """KS distance between scaled chain lengths at ``N`` and the Tracy-Widom law.

    ``lam`` is the expected number of points in the square. It defaults to
    ``N**2``, which is right for unit intensity.
    """
    ds = [r.d for r in records if math.isclose(r.N, N, rel_tol=1e-12)]
    if len(ds) < min_trials:
        raise InvalidArgument(f"need at least {min_trials} trials at N={N}, got {len(ds)}")
    lam = float(N) ** 2 if lam is None else lam
    return ks_distance(scaled_statistic(np.asarray(ds), lam), sol)
