# %% [markdown]
# # The 4/3 transmit/absorb ratio
#
# Section diameters scale by S**(1/2) and lengths by S**(1/3), so the
# transmitting volume grows as S**(4k/3) against S**k for the absorbing one.

# %%
from energyscale import cone
from energyscale.cone import ConeGeometry

geom = ConeGeometry(S=2.0, D1=1.0, L1=1.0, theta1=1.0)
for k in range(1, 7):
    r = cone.section_report(geom, k)
    print(f"k={k}  absorb={r.absorbing_volume:8.2f}  transmit/V1={r.transmitting_volume_ratio:9.3f}"
          f"  ratio={cone.entropy_ratio(geom.S, k)}  dim={cone.fractal_dimension(geom.S, k):.15f}")

# %% [markdown]
# The same 4/3 appears in the radiation entropy step dS/dv = (4/3) E / T,
# where heat splits into d(Ev) plus an extra third of E dv.

# %%
print(cone.stefan_entropy_density_rate(E=3.0, T=1.0))
print(cone.heat_decomposition(E=1.0, dE=0.0, v=1.0, dv=1.0))
