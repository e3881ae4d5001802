"""Quantum symmetrizers of diagonal braidings and Nichols-algebra dimensions.

Convention: c(x_i (x) x_j) = b_ij x_j (x) x_i with b_ij = chi_j(g_i).  Tensor
words are tuples of vertex indices; an operator on V^{(x)n} is stored by
columns, ``op[u] = {v: coefficient}`` meaning op(u) = sum coefficient * v.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from math import prod

from .abelian_group import PointedDatum
from .cyclotomic import CyclotomicScalar
from .linalg import rank
from .sparse import acc

EXPLICIT_MAX_DEGREE = 7
WORD_CAP = 10**4


class SymmetrizerCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class DiagonalBraiding:
    theta: int
    matrix: tuple  # matrix[i][j] = b_ij

    @classmethod
    def from_datum(cls, d: PointedDatum) -> "DiagonalBraiding":
        return cls(d.theta, tuple(tuple(d.q(i, j) for j in range(d.theta)) for i in range(d.theta)))

    @property
    def conductor(self) -> int:
        return self.matrix[0][0].conductor

    def one(self) -> CyclotomicScalar:
        return CyclotomicScalar.rational(self.conductor, 1)


def _words(theta: int, n: int):
    return list(itertools.product(range(theta), repeat=n))


def _check_cap(theta: int, n: int):
    if theta ** n > WORD_CAP:
        raise SymmetrizerCapExceeded(f"theta^n = {theta ** n} exceeds {WORD_CAP}")


def identity_operator(n: int, B: DiagonalBraiding) -> dict:
    one = B.one()
    return {u: {u: one} for u in _words(B.theta, n)}


def compose(a: dict, b: dict) -> dict:
    """a o b."""
    out = {}
    for u, col in b.items():
        res = {}
        for v, c in col.items():
            for w, d in a[v].items():
                acc(res, w, c * d)
        out[u] = res
    return out


def add_operators(a: dict, b: dict) -> dict:
    out = {}
    for u in a.keys() | b.keys():
        res = dict(a.get(u, {}))
        for w, c in b.get(u, {}).items():
            acc(res, w, c)
        out[u] = res
    return out


def _apply_c(word, k, B, coeff):
    # c on slots (k, k+1), 0-based k
    i, j = word[k], word[k + 1]
    return word[:k] + (j, i) + word[k + 2:], coeff * B.matrix[i][j]


def braid_word_action(word, n: int, B: DiagonalBraiding) -> dict:
    """c_{s_1} c_{s_2} ... c_{s_r} (composition, rightmost applied first); indices 1..n-1."""
    for s in word:
        if not 1 <= s <= n - 1:
            raise ValueError(f"braid generator {s} out of range for n={n}")
    _check_cap(B.theta, n)
    one = B.one()
    out = {}
    for u in _words(B.theta, n):
        w, c = u, one
        for s in reversed(word):
            w, c = _apply_c(w, s - 1, B, c)
        out[u] = {w: c}
    return out


def reduced_word(perm, largest: bool = False) -> list:
    """A reduced word (1-based) for a permutation of 0..n-1 in one-line notation.

    Built greedily from left descents: the smallest one gives the
    lexicographically minimal reduced word, the largest one another reduced
    word of the same element.
    """
    w = list(perm)
    n = len(w)
    pos = {v: i for i, v in enumerate(w)}
    word = []
    while True:
        descents = [k for k in range(n - 1) if pos[k] > pos[k + 1]]
        if not descents:
            return word
        k = max(descents) if largest else min(descents)
        word.append(k + 1)
        # w <- s_k w  swaps the values k and k+1
        a, b = pos[k], pos[k + 1]
        w[a], w[b] = k + 1, k
        pos[k], pos[k + 1] = b, a


def word_to_permutation(word, n: int) -> tuple:
    """Permutation s_{w_1} ... s_{w_r} in one-line notation (values moved by left multiplication)."""
    w = list(range(n))
    for s in reversed(word):
        # left multiply by s: swap values s-1 and s
        a, b = w.index(s - 1), w.index(s)
        w[a], w[b] = s, s - 1
    return tuple(w)


def quantum_symmetrizer(n: int, B: DiagonalBraiding, method: str = "auto") -> dict:
    """S_n = sum over S_n of the braid operators T_w.

    ``explicit`` sums T_w along lexicographically minimal reduced words of
    every permutation (n <= 7).  ``factorized`` uses
    S_n = (S_{n-1} (x) 1) o sum_k c_{n-1} ... c_k, the minimal coset
    representatives of S_{n-1} in S_n.
    """
    _check_cap(B.theta, n)
    if method == "auto":
        method = "explicit" if n <= 4 else "factorized"
    if method == "explicit":
        if n > EXPLICIT_MAX_DEGREE:
            raise SymmetrizerCapExceeded(f"explicit enumeration limited to n <= {EXPLICIT_MAX_DEGREE}")
        total = {u: {} for u in _words(B.theta, n)}
        for perm in itertools.permutations(range(n)):
            op = braid_word_action(reduced_word(perm), n, B)
            total = add_operators(total, op)
        return total
    if method != "factorized":
        raise ValueError(f"unknown method {method!r}")
    S = identity_operator(0, B)
    for m in range(1, n + 1):
        S = _factor_step(S, m, B)
    return S


def _factor_step(S_prev: dict, m: int, B: DiagonalBraiding) -> dict:
    one = B.one()
    # coset sum: letter at slot k travels to the end
    coset = {}
    for u in _words(B.theta, m):
        col = {}
        for k in range(m):
            w, c = u, one
            for t in range(k, m - 1):
                w, c = _apply_c(w, t, B, c)
            acc(col, w, c)
        coset[u] = col
    lifted = {}
    for u in _words(B.theta, m):
        head, last = u[:-1], u[-1:]
        lifted[u] = {v + last: c for v, c in S_prev[head].items()}
    return compose(lifted, coset)


def matsumoto_check(n: int, B: DiagonalBraiding, samples: int = 5, seed: int = 0) -> bool:
    """T_w agrees along two different reduced words for sampled permutations."""
    rng = random.Random(seed)
    perms = list(itertools.permutations(range(n)))
    chosen = perms if len(perms) <= samples else rng.sample(perms, samples)
    for perm in chosen:
        w1 = reduced_word(perm)
        w2 = reduced_word(perm, largest=True)
        if braid_word_action(w1, n, B) != braid_word_action(w2, n, B):
            return False
    return True


def weight_blocks(op: dict) -> dict:
    """Group columns by the multiset of letters (the operators preserve it)."""
    blocks = {}
    for u, col in op.items():
        blocks.setdefault(tuple(sorted(u)), []).append(col)
    return blocks


def symmetrizer_rank(op: dict) -> int:
    return sum(rank(cols) for _, cols in sorted(weight_blocks(op).items()))


def nichols_hilbert_series(B: DiagonalBraiding, max_degree: int, method: str = "auto") -> list:
    """Ranks of S_n for n = 0..max_degree."""
    out = []
    S = identity_operator(0, B)
    for n in range(0, max_degree + 1):
        _check_cap(B.theta, n)
        if n > 0:
            if method == "explicit":
                S = quantum_symmetrizer(n, B, "explicit")
            else:
                S = _factor_step(S, n, B)
        out.append(symmetrizer_rank(S))
    return out


def expected_hilbert_series(N, max_degree: int) -> list:
    """Coefficients of prod_i (1 + t + ... + t^{N_i - 1}) up to max_degree."""
    poly = [1]
    for n in N:
        new = [0] * (len(poly) + n - 1)
        for a, c in enumerate(poly):
            for k in range(n):
                new[a + k] += c
        poly = new
    return [poly[d] if d < len(poly) else 0 for d in range(max_degree + 1)]


def top_degree(N) -> int:
    return sum(n - 1 for n in N)


def total_dimension(N) -> int:
    return prod(N)


def apply_operator(op: dict, vec: dict) -> dict:
    out = {}
    for u, c in vec.items():
        for w, d in op[u].items():
            acc(out, w, c * d)
    return out


def commutator_in_kernel(B: DiagonalBraiding, i: int, j: int) -> bool:
    """S_2 kills x_j (x) x_i - b_ji x_i (x) x_j, the braided commutator."""
    S2 = quantum_symmetrizer(2, B)
    one = B.one()
    vec = {}
    acc(vec, (j, i), one)
    acc(vec, (i, j), -B.matrix[j][i])
    return not apply_operator(S2, vec)


def power_in_kernel(B: DiagonalBraiding, i: int, n: int) -> bool:
    """S_n kills x_i^{(x) n}."""
    S = quantum_symmetrizer(n, B)
    return not S[(i,) * n]
