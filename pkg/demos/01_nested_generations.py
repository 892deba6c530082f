# %% [markdown]
# # Nested cluster generations
#
# A source feeding n = S**h nodes splits its energy into h generations of
# nested clusters. Every generation carries the same total.

# %%
import math

from energyscale import scaling
from energyscale.scaling import ScalingModel

model = ScalingModel(S=math.e, h=5, epsilon=0.5)
print(f"{'k':>3} {'clusters':>12} {'per cluster':>12} {'total':>12}")
for row in scaling.generation_table(model):
    print(f"{row.k:>3} {row.cluster_count:12.5f} {row.energy_per_cluster:12.5f} {row.generation_total:12.5f}")

# %% [markdown]
# Summing one chain of nested clusters and dividing by the source's units
# gives the mean energy per source. It approaches the oscillator mean
# eps/(e^eps - 1) as the number of generations grows; small units need many
# more generations.

# %%
for eps in (1.0, 0.1):
    limit = scaling.oscillator_mean(eps, kT=1.0)
    for h in (1, 5, 20, 100, 500):
        mean = scaling.mean_energy_per_source(eps, h)
        print(f"eps={eps:<4} h={h:<4} mean={mean:.10f}  gap to oscillator={limit - mean:.3e}")

# %% [markdown]
# Only S = e balances the rate a node receives against the rate it
# distributes.

# %%
root = scaling.solve_optimal_base()
print("balanced base:", root, " e:", math.e)
print("balance at S=2:", scaling.balance_ratio(2.0))
