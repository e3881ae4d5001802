"""
Hilbert series of quantum linear spaces
=======================================

Ranks of the quantum symmetrizer degree by degree, against the product
formula prod_i (1 - t^{N_i}) / (1 - t).
"""

from hopf_forge.corpus import corpus
from hopf_forge.nichols import DiagonalBraiding, expected_hilbert_series, nichols_hilbert_series, top_degree

seen = set()
for name, d in corpus(max_dimension=100):
    B = DiagonalBraiding.from_datum(d)
    if B.matrix in seen:
        continue
    seen.add(B.matrix)
    deg = top_degree(d.N) + 1
    ranks = nichols_hilbert_series(B, deg)
    flag = "" if ranks == expected_hilbert_series(d.N, deg) else "  <-- mismatch"
    print(f"{name:45s} N={d.N}  {ranks}{flag}")
