"""
Deforming a rank-one algebra
============================

Start from the bosonized quantum line over Z/6, with x^3 = 0, and twist its
product by a 2-cocycle until x^3 = 1 - g^3.
"""

from hopf_forge import assemble_sigma, is_multiplicative_cocycle, taft
from hopf_forge.deform import deform_multiplication, match_lifting
from hopf_forge.cyclotomic import print_scalar

# N = 3, |G| = 6, mu = 1
d = taft(3, 2, 1)
print("dimension:", d.dimension, " q =", print_scalar(d.q(0, 0)))

# sigma = eps (x) eps + zeta lives on u(D, 0, 0)
asm = assemble_sigma(d)
A = asm.algebra
print("support of sigma:", len(asm.sigma))

verdict = is_multiplicative_cocycle(asm.sigma)
print("normalized, multiplicative, invertible:",
      verdict.normalized.passed, verdict.multiplicative.passed, verdict.invertible.passed)

###############################################################################
# The twisted product.  Only pairs whose x-degrees add up to at least N move.

D = deform_multiplication(A, asm.sigma, verdict=verdict)
x = A.x(0)
x3 = D.power(x, 3)
print("x^3 in A_sigma:", {str(A.labels[k]): print_scalar(c) for k, c in sorted(x3.items())})

changed = sum(D.mult[u][v] != A.mult[u][v] for u in range(A.dim) for v in range(A.dim))
print(f"{changed} of {A.dim ** 2} basis products changed")

###############################################################################
# Compare with the presented algebra u(D, 0, mu).

m = match_lifting(D, d)
for rel in m.relations:
    print(f"  {'ok ' if rel['residual_zero'] else 'BAD'} {rel['name']}")
print("isomorphic to the presented lifting:", m.passed)
