"""
The dual side and the Singer route
==================================

For rank-one data the cocycle sigma is also a twist of the dual Hopf
algebra.  Separately, a character phi of the root subgroup gives a second
cocycle whose deformation rescales mu.
"""

import json

from hopf_forge import taft
from hopf_forge.deform import singer_deformation, taft_dual_report

d = taft(3, 2, 1)

rep = taft_dual_report(d)
for key in ("theta_xi_eq_alpha_xi_theta", "delta_sigma_xi_unchanged", "delta_sigma_theta"):
    print(f"{key:40s} {rep[key]}")
print("twist conditions:", rep["twist_conditions"])

# zeta expanded in the dual basis: only the phi = theta^p version matches
print(json.dumps(rep["dual_basis_expansion"], indent=1))

###############################################################################
# Singer route with the default nontrivial phi

s = singer_deformation(d)
print("phi =", s["phi"], " mu' =", s["mu_prime"])
print(json.dumps(s["rescaling"], indent=1))
