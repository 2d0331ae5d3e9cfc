# Longest chains in a Poisson cloud.
#
# Sample unit-intensity points in a square, find the longest up/right chain
# from the lower-left corner to the upper-right one, and look at which points
# can sit on some longest chain.

# %%
import numpy as np

from lislab import Point, Rect, analyze_chains, event_A, sample_poisson, transversal_summary

N = 200.0
config = sample_poisson(Rect.square(N), intensity=1.0, seed=2026)
print(f"{len(config)} points in (0, {N:g})^2")

# %%
# Forward values f count the longest chain ending at each point, backward
# values g the longest chain starting there. A point is on some maximal
# chain exactly when f + g - 1 equals the overall length d.
analysis = analyze_chains(config, Point(0.0, 0.0), Point(N, N))
print(f"d = {analysis.d}, 2N = {2 * N:g}")
print(f"{analysis.maximal_flags.sum()} points lie on at least one maximal chain")

# %%
# How far the maximal chains wander from the diagonal, compared with N^(2/3).
summary = transversal_summary(analysis, config)
print(f"max deviation {summary.max_deviation:.2f}, N^(2/3) = {N ** (2 / 3):.2f}")
for gamma in (0.5, 0.6, 0.7, 0.8, 0.9):
    print(f"  all maximal chains inside the gamma={gamma} cylinder: {event_A(config, gamma, analysis)}")

# %%
# Flagged points, ordered by forward value, trace the band of maximal chains.
flags = analysis.maximal_flags
order = np.argsort(analysis.forward[flags], kind="stable")
band = np.column_stack([analysis.x[flags][order], analysis.y[flags][order]])
print(band[:: max(1, len(band) // 10)].round(1))
