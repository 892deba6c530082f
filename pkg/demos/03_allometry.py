# %% [markdown]
# # Three-quarter allometric scaling
#
# Circulatory volume V_Y and irrigated volume theta_M for organisms with
# h = 2..20 branching generations. Dividing out the common factor h, the
# log-log slope is 4/3, i.e. metabolism ~ mass**(3/4).

# %%
import math

import numpy as np

from energyscale import allometry
from energyscale.allometry import AllometryScenario

scen = AllometryScenario(S=math.e, r_c=4e-6, l_c=2.5e-4, theta_c=1e-11, h_range=range(2, 21))
vols = np.array([allometry.organism_volumes(scen, h) for h in scen.h_range])
print(vols[:5])

fit = allometry.fit_exponent(scen)
print(f"closed form a = {allometry.closed_form_exponent(scen.S)}")
print(f"fitted a      = {fit.a_hat:.12f}  (rms residual {fit.residual:.1e})")
print(f"uncompensated = {fit.raw_a_hat:.6f}  (h factor left in)")

# %%
# A wrong exponent breaks the capillary constraint
for a in (0.75, 2 / 3):
    print(a, allometry.capillary_invariance_check(scen, 2, a=a))
