# Deterministic corner-area inequalities and the cell-count tail bound.

# %%
from lislab import check_cell_tail, check_lemma_2_3, check_lemma_3_2

for N in (1e3, 1e4, 1e5, 1e6):
    print(f"N={N:.0e}: shifted-cylinder gap {check_lemma_2_3(N, 0.6, 0.95):+.3e}, detour gap {check_lemma_3_2(N, 0.8):+.3e}")

# %%
# Largest point count over about 8 N^(2 gamma) unit cells against C K exp(-d/2).
print("cell tail bound holds:", check_cell_tail(100, 0.7, trials=2000, seed=3))
