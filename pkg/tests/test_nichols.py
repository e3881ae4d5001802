import cmath
import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hopf_forge.corpus import independent_pair, linked_pair, quantum_plane, taft
from hopf_forge.hopf_core import q_factorial
from hopf_forge.linalg import rank
from hopf_forge.nichols import (
    DiagonalBraiding,
    SymmetrizerCapExceeded,
    braid_word_action,
    commutator_in_kernel,
    identity_operator,
    matsumoto_check,
    nichols_hilbert_series,
    power_in_kernel,
    quantum_symmetrizer,
    reduced_word,
    symmetrizer_rank,
    word_to_permutation,
)
from hopf_forge.cyclotomic import CyclotomicScalar


def poly_oracle(N, top):
    poly = np.array([1], dtype=object)
    for n in N:
        poly = np.convolve(poly, np.ones(n, dtype=object))
    out = list(poly) + [0] * (top + 1)
    return [int(c) for c in out[: top + 1]]


def numeric(x: CyclotomicScalar):
    z = cmath.exp(2j * cmath.pi / x.conductor)
    return complex(sum(float(c) * z**k for k, c in enumerate(x.coeffs)))


def numeric_rank(op):
    words = sorted(op)
    pos = {w: i for i, w in enumerate(words)}
    M = np.zeros((len(words), len(words)), dtype=complex)
    for u, col in op.items():
        for v, c in col.items():
            M[pos[v], pos[u]] = numeric(c)
    return int(np.linalg.matrix_rank(M, tol=1e-8))


def test_empty_word_is_identity():
    B = DiagonalBraiding.from_datum(linked_pair())
    assert braid_word_action([], 3, B) == identity_operator(3, B)


def test_rank_one_flip():
    d = taft()
    B = DiagonalBraiding.from_datum(d)
    assert braid_word_action([1], 2, B) == {(0, 0): {(0, 0): d.q(0, 0)}}


def test_braid_relation():
    for d in (linked_pair(), independent_pair(3), quantum_plane()):
        B = DiagonalBraiding.from_datum(d)
        assert braid_word_action([1, 2, 1], 3, B) == braid_word_action([2, 1, 2], 3, B)


def test_index_out_of_range():
    B = DiagonalBraiding.from_datum(taft())
    with pytest.raises(ValueError):
        braid_word_action([3], 3, B)


def test_low_degree_symmetrizers():
    B = DiagonalBraiding.from_datum(linked_pair())
    assert quantum_symmetrizer(1, B) == identity_operator(1, B)
    s2 = quantum_symmetrizer(2, B)
    c = braid_word_action([1], 2, B)
    for u in s2:
        expected = dict(c[u])
        for w, v in identity_operator(2, B)[u].items():
            expected[w] = expected.get(w, 0 * v) + v
        assert s2[u] == {k: v for k, v in expected.items() if v}


@pytest.mark.parametrize("N", [2, 3, 4, 5])
def test_rank_one_scalar_is_q_factorial(N):
    d = taft(N, 2, 0)
    B = DiagonalBraiding.from_datum(d)
    q = d.q(0, 0)
    for n in range(0, 2 * N + 1):
        S = quantum_symmetrizer(n, B)
        word = (0,) * n
        assert S[word].get(word, 0 * q) == q_factorial(n, q)


def test_taft_ranks():
    B = DiagonalBraiding.from_datum(taft())
    assert nichols_hilbert_series(B, 6) == [1, 1, 1, 0, 0, 0, 0]


def test_quantum_plane_ranks():
    B = DiagonalBraiding.from_datum(quantum_plane())
    ranks = nichols_hilbert_series(B, 4)
    assert ranks == [1, 2, 1, 0, 0] == poly_oracle([2, 2], 4)
    assert sum(ranks) == 4


@pytest.mark.parametrize("datum", [linked_pair(), independent_pair(3), independent_pair(4, twisted=False)])
def test_ranks_match_generating_function(datum):
    B = DiagonalBraiding.from_datum(datum)
    top = sum(n - 1 for n in datum.N) + 1
    assert nichols_hilbert_series(B, top) == poly_oracle(datum.N, top)


@pytest.mark.parametrize("datum", [linked_pair(), independent_pair(3)])
def test_explicit_and_factorized_agree(datum):
    B = DiagonalBraiding.from_datum(datum)
    for n in range(1, 6):
        assert quantum_symmetrizer(n, B, "explicit") == quantum_symmetrizer(n, B, "factorized")


def test_ranks_against_numeric_oracle():
    B = DiagonalBraiding.from_datum(independent_pair(3))
    for n in range(1, 5):
        S = quantum_symmetrizer(n, B)
        assert symmetrizer_rank(S) == numeric_rank(S)


@pytest.mark.parametrize("datum", [linked_pair(), independent_pair(3), quantum_plane()])
def test_matsumoto_all_permutations(datum):
    B = DiagonalBraiding.from_datum(datum)
    for n in range(2, 6):
        assert matsumoto_check(n, B, samples=10**6)


@given(st.permutations(list(range(6))))
def test_reduced_words(perm):
    perm = tuple(perm)
    inversions = sum(1 for i, j in itertools.combinations(range(6), 2) if perm[i] > perm[j])
    for largest in (False, True):
        w = reduced_word(perm, largest=largest)
        assert len(w) == inversions
        assert word_to_permutation(w, 6) == perm


def test_kernel_relations():
    for d in (linked_pair(), independent_pair(3)):
        B = DiagonalBraiding.from_datum(d)
        for i in range(d.theta):
            assert power_in_kernel(B, i, d.N[i])
            assert not power_in_kernel(B, i, d.N[i] - 1)
        assert commutator_in_kernel(B, 0, 1)


def test_cap():
    B = DiagonalBraiding.from_datum(linked_pair())
    with pytest.raises(SymmetrizerCapExceeded):
        quantum_symmetrizer(14, B)
    with pytest.raises(SymmetrizerCapExceeded):
        quantum_symmetrizer(8, DiagonalBraiding.from_datum(taft()), "explicit")


@st.composite
def small_matrices(draw):
    n = draw(st.integers(1, 5))
    m = draw(st.integers(1, 5))
    entries = draw(st.lists(st.integers(-2, 2), min_size=n * m, max_size=n * m))
    return [[entries[i * m + j] for j in range(m)] for i in range(n)]


@given(small_matrices())
def test_bareiss_rank_matches_numpy(M):
    rows = [{j: CyclotomicScalar.rational(3, v) for j, v in enumerate(r) if v} for r in M]
    assert rank(rows) == int(np.linalg.matrix_rank(np.array(M, dtype=float)))
