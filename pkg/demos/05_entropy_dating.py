# %% [markdown]
# # Entropy dating
#
# If a system's entropy rate grows as exp(m t), its age is ln(H')/m.
# Divergence between related languages (11.32% per thousand years) runs at
# four times lexical growth.

# %%
from importlib import resources

from energyscale import chronometry

m = chronometry.glottochronology_check(0.1132)
print(f"growth rate: {100 * m:.2f}% per ky")

# %% [markdown]
# The bundled scenario carries a placeholder H' (see the comments in the
# file); swap in an independently derived value to get a real estimate.

# %%
path = resources.files("energyscale") / "data" / "english_lexicon.scenario"
scen = chronometry.load_dating_scenario(path)
print(f"age: {chronometry.solve_age(scen):.1f} {scen.time_unit}")

# %%
# Growing a network from 1000 to 1250 members
d = chronometry.network_value_delta(n1=1000, A=250, m=0.0283, C=0.437, L=2.67)
print(d)
