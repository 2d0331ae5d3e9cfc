# Fluctuation and transversal exponents from a small Monte Carlo campaign.
#
# The full acceptance campaign uses N = 100..800 with 200 trials each and
# takes about a minute on one core. This one is smaller.

# %%
from lislab import ExperimentConfig, estimate_chi, estimate_xi, probability_A, run_campaign

config = ExperimentConfig(
    N_values=(50.0, 100.0, 200.0, 400.0),
    trials_per_N=100,
    gamma_values=(0.45, 0.6, 0.75, 0.9),
    master_seed=7,
)
records = run_campaign(config)

# %%
chi = estimate_chi(records)
xi = estimate_xi(records)
print(f"chi = {chi.slope:.3f} +/- {chi.slope_stderr:.3f}  (theory 1/3)")
print(f"xi  = {xi.slope:.3f} +/- {xi.slope_stderr:.3f}  (theory 2/3)")
print(f"chi - (2 xi - 1) = {chi.slope - (2 * xi.slope - 1):+.3f}")

# %%
N = config.N_values[-1]
for gamma in config.gamma_values:
    p = probability_A(records, gamma, N)
    print(f"P[A] at N={N:g}, gamma={gamma}: {p.p:.2f}  95% CI [{p.ci_low:.2f}, {p.ci_high:.2f}]")
