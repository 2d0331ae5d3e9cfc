# The Tracy-Widom GUE distribution from the Hastings-McLeod function.

# %%
import numpy as np

from lislab import solve_hastings_mcleod, tw_cdf, tw_sf

sol = solve_hastings_mcleod()
print(f"grid {sol.x_left:g}..{sol.x_right:g}, step {sol.step}, Newton iterations {sol.iterations}")
print(f"max discrete residual {np.abs(sol.residual()).max():.2e}")
print(f"step-halving discrepancy in F {sol.err_estimate:.2e}")

# %%
i0 = np.argmin(np.abs(sol.grid))
print(f"u(0) = {sol.u_values[i0]:.12f}")
for t in (-4.0, -3.0, -2.0, -1.0, 0.0, 1.0, 2.0):
    print(f"F({t:+.0f}) = {tw_cdf(sol, t):.10f}")

# %%
# Right tail against its leading asymptotic exp(-4/3 t^(3/2)) / (16 pi t^(3/2)).
for t in (2.0, 4.0, 6.0, 8.0):
    lead = np.exp(-4 / 3 * t**1.5) / (16 * np.pi * t**1.5)
    print(f"1 - F({t:g}) = {tw_sf(sol, t):.4e}   leading term {lead:.4e}")
