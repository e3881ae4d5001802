"""
A linked pair
=============

Two vertices over Z/6 with chi_2 = chi_1^{-1}.  The linking cocycle is a
truncated q-exponential of eta_{2,1}; it produces x2 x1 - q x1 x2 = 1 - g^2.
"""

from hopf_forge import assemble_sigma, linked_pair
from hopf_forge.cocycles import graded_parts
from hopf_forge.deform import deform_multiplication, formal_deformation_components, match_lifting

d = linked_pair(3, 2, lam=1, mu=(1, 1))
asm = assemble_sigma(d)
A = asm.algebra
print("dim A =", A.dim)

# the linking factor is built on a quotient and pulled back
print("linking factors:", len(asm.linking.factors), " on an algebra of dim", asm.linking.algebra.dim)

gp = graded_parts(asm.sigma)
print("lowest nonzero degree s =", gp.s, " sigma_s Hochschild:", gp.infinitesimal_hochschild.passed)

D = deform_multiplication(A, asm.sigma)
fc = formal_deformation_components(D, gp.s)
print("degree drops of m_sigma:", fc["degrees"])
print("m_s = sigma_s*m - m*sigma_s:", fc["m_s_matches"])

for rel in match_lifting(D, d).relations:
    print(("ok  " if rel["residual_zero"] else "BAD ") + rel["name"])
