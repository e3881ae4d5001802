import itertools

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from hopf_forge import FiniteAbelianGroup, PbwHopfAlgebra, PointedDatum, gauss_binomial, q_factorial, verify_hopf_axioms
from hopf_forge.corpus import independent_pair, linked_pair, quantum_plane, taft
from hopf_forge.cyclotomic import CyclotomicScalar, root_of_unity
from hopf_forge.functionals import (
    NotInvertible,
    PairFunctional,
    convolution_inverse,
    convolve,
    counit_functional,
)
from hopf_forge.hopf_core import DimensionCapExceeded, Rewriter, q_integer

T = sympy.Symbol("t")


def q_binomial_poly(n, i):
    """Gaussian polynomial as an exact quotient of integer polynomials in t."""
    if not 0 <= i <= n:
        return sympy.Integer(0)
    num = sympy.prod([1 - T ** (n - k) for k in range(i)])
    den = sympy.prod([1 - T ** (k + 1) for k in range(i)])
    return sympy.Poly(sympy.cancel(num / den), T)


def evaluate(poly, q):
    out = q * 0
    for (k,), c in poly.terms():
        out = out + q**k * int(c)
    return out


# -- q-calculus ---------------------------------------------------------------

def test_gauss_small_cases():
    q = root_of_unity(7, 1)
    assert gauss_binomial(5, 0, q).is_one()
    assert gauss_binomial(3, 1, q) == 1 + q + q * q


def test_gauss_vanishing_at_root_of_unity():
    q = root_of_unity(4, 1)
    assert gauss_binomial(4, 2, q).is_zero()
    for N in (2, 3, 5, 6):
        q = root_of_unity(N, 1)
        assert all(gauss_binomial(N, i, q).is_zero() for i in range(1, N))


def test_gauss_out_of_range():
    with pytest.raises(ValueError):
        gauss_binomial(3, 4, root_of_unity(3, 1))


@pytest.mark.parametrize("L", [5, 6, 8, 12])
def test_gauss_against_polynomial_oracle(L):
    q = root_of_unity(L, 1)
    for n in range(0, 9):
        for i in range(0, n + 1):
            assert gauss_binomial(n, i, q) == evaluate(q_binomial_poly(n, i), q)


@pytest.mark.parametrize("N", [2, 3, 4, 5, 6])
def test_q_vandermonde(N):
    q = root_of_unity(N, 1)
    for i, k in itertools.product(range(N), repeat=2):
        for beta in range(i + k + 1):
            lhs = q * 0
            for s in range(beta + 1):
                v = beta - s
                if s <= i and v <= k:
                    lhs = lhs + gauss_binomial(i, s, q) * gauss_binomial(k, v, q) * q ** (s * (k - v))
            assert lhs == gauss_binomial(i + k, beta, q)


@pytest.mark.parametrize("N", [3, 4, 5, 6])
def test_factorial_reciprocal_identity(N):
    q = root_of_unity(N, 1)
    for u, s in itertools.product(range(1, N), repeat=2):
        assert q_integer(u, q) * q**s + q_integer(s, q) == q_integer(u + s, q)

    def a(r, t):
        return 1 / (q_factorial(r, q) * q_factorial(t, q))

    # the reciprocal form needs (u+s)_q = 1, i.e. the stratum u + s = N + 1
    for u in range(2, N):
        s = N + 1 - u
        assert a(u - 1, s) * q**s + a(u, s - 1) == a(u, s)
    assert a(0, 1) * q + a(1, 0) != a(1, 1)


# -- the PBW algebra ------------------------------------------------------------

def test_relations_of_taft(taft_datum):
    A = PbwHopfAlgebra(taft_datum)
    q = taft_datum.q(0, 0)
    g = (1,)
    assert A.normal_form([("g", g), ("x", 0)]) == {A.index((1,), g): q}
    # x^3 = 1 - g^3
    assert A.normal_form([("x", 0)] * 3) == {A.index((0,), (0,)): 1 + 0 * q, A.index((0,), (3,)): -1 + 0 * q}


def test_linking_relation(linked_datum):
    A = PbwHopfAlgebra(linked_datum)
    q = linked_datum.q(1, 0)
    one = q**0
    expected = {A.index((1, 1), (0,)): q, A.index((0, 0), (0,)): one, A.index((0, 0), (2,)): -one}
    assert A.normal_form([("x", 1), ("x", 0)]) == expected


@pytest.mark.parametrize("datum", [taft(), linked_pair(), quantum_plane(), independent_pair(3)])
def test_dimension_and_basis(datum):
    A = PbwHopfAlgebra(datum)
    assert A.dim == datum.group.order * datum.N[0] * (datum.N[1] if datum.theta > 1 else 1)
    # every basis monomial is a fixed point of the rewriter
    for i in range(A.dim):
        a, g = A.labels[i]
        word = [("x", v) for v, e in enumerate(a) for _ in range(e)] + [("g", g)]
        assert A.normal_form(word) == {i: A.one_scalar}


def test_basis_order(linked_datum):
    A = PbwHopfAlgebra(linked_datum)
    keys = [(sum(a), a, g) for a, g in A.labels]
    assert keys == sorted(keys)


def test_comultiplication_of_generators(taft_datum):
    A = PbwHopfAlgebra(taft_datum)
    one = A.one_scalar
    g = (1,)
    gi = A.index((0,), g)
    assert A.comultiply(gi) == {(gi, gi): one}
    x, e, xg = A.index((1,), (0,)), A.index((0,), (0,)), A.index((0,), g)
    assert A.comultiply(x) == {(x, e): one, (xg, x): one}


def test_comultiplication_of_x_squared(taft_datum):
    A = PbwHopfAlgebra(taft_datum)
    q = taft_datum.q(0, 0)
    x2, x, e = A.index((2,), (0,)), A.index((1,), (0,)), A.index((0,), (0,))
    xg, g2 = A.index((1,), (1,)), A.index((0,), (2,))
    assert A.comultiply(x2) == {(x2, e): q**0, (xg, x): 1 + q, (g2, x2): q**0}
    assert 1 + q == gauss_binomial(2, 1, q)


def test_antipode_values(taft_datum):
    A = PbwHopfAlgebra(taft_datum)
    e = A.index((0,), (0,))
    assert A.antipode[e] == {e: A.one_scalar}
    for h in A.gelems:
        inv = A.group.inv(h)
        assert A.antipode[A.index((0,), h)] == {A.index((0,), inv): A.one_scalar}
    x = A.index((1,), (0,))
    # x * 1 + g * S(x) = 0
    total = {}
    for j, k, c in A.comult[x]:
        for t, v in A.product(A.basis(j), A.antipode[k]).items():
            total[t] = total.get(t, 0 * c) + v * c
    assert all(v.is_zero() for v in total.values())


@pytest.mark.parametrize("datum", [taft(), taft(2, 2, 1), linked_pair(), quantum_plane(), independent_pair(3)])
def test_axioms_pass(datum):
    assert verify_hopf_axioms(PbwHopfAlgebra(datum)).passed


def test_group_algebra_alone():
    d = PointedDatum(FiniteAbelianGroup([3]), 3, [], [])
    A = PbwHopfAlgebra(d)
    assert A.dim == 3
    assert verify_hopf_axioms(A).passed


class SignFlippedRewriter(Rewriter):
    def commute(self, j, i):
        return [(-c, w) if len(w) == 2 else (c, w) for c, w in super().commute(j, i)]


def test_fault_injection_breaks_compatibility():
    d = linked_pair(3, 2, 1, (0, 0))
    A = PbwHopfAlgebra(d, rewriter_cls=SignFlippedRewriter)
    report = verify_hopf_axioms(A)
    assert not report["bialgebra compatibility"].passed
    assert report["bialgebra compatibility"].witness is not None


def test_grading_preserved_without_liftings():
    A = PbwHopfAlgebra(linked_pair(3, 2, 0, (0, 0)))
    for u, v in itertools.product(range(A.dim), repeat=2):
        assert all(A.degree[w] == A.degree[u] + A.degree[v] for w in A.mult[u][v])


def test_grading_filtered_with_liftings(linked_datum):
    A = PbwHopfAlgebra(linked_datum)
    for u, v in itertools.product(range(A.dim), repeat=2):
        assert all(A.degree[w] <= A.degree[u] + A.degree[v] for w in A.mult[u][v])


def test_confluence_on_triples():
    for d in (linked_pair(), independent_pair(3)):
        A = PbwHopfAlgebra(d)
        letters = [("x", i) for i in range(d.theta)] + [("g", g) for g in d.group.elements[:3]]
        for a, b, c in itertools.product(letters, repeat=3):
            ab = A.normal_form([a, b])
            left = {}
            for t, v in ab.items():
                for w, s in A.product({t: v}, A.normal_form([c])).items():
                    left[w] = left.get(w, 0 * v) + s
            right = A.product(A.normal_form([a]), A.normal_form([b, c]))
            assert {k: v for k, v in left.items() if v} == right == A.normal_form([a, b, c])


def test_dimension_cap():
    with pytest.raises(DimensionCapExceeded):
        PbwHopfAlgebra(taft(5, 4, 1), dim_cap=50)


def test_structure_dump_shape(taft_datum):
    sc = PbwHopfAlgebra(taft_datum).structure_constants()
    assert sc["dimension"] == 18
    assert sc["basis"][0] == {"a": [0], "g": [0]}
    assert set(sc) == {"dimension", "basis", "mult", "comult", "antipode"}


# -- convolution ---------------------------------------------------------------

def test_counit_is_unit(taft_sigma):
    sigma = taft_sigma.sigma
    eps = counit_functional(sigma.algebra, 2)
    assert convolve(sigma, eps) == sigma == convolve(eps, sigma)


def test_zeta_squares_to_zero(taft_sigma):
    eps = counit_functional(taft_sigma.algebra, 2)
    zeta = taft_sigma.sigma - eps
    assert convolve(zeta, zeta).is_zero()
    assert convolution_inverse(taft_sigma.sigma) == eps - zeta


def test_root_cocycles_commute(linked_datum):
    from hopf_forge.cocycles import base_algebra, zeta_cocycle

    A = base_algebra(linked_datum)
    z1, z2 = zeta_cocycle(A, 0), zeta_cocycle(A, 1)
    assert convolve(z1, z2) == convolve(z2, z1)


def test_inverse_of_counit():
    A = PbwHopfAlgebra(taft(2, 2, 0))
    eps = counit_functional(A, 2)
    assert convolution_inverse(eps) == eps


def test_inverse_precondition():
    A = PbwHopfAlgebra(taft(2, 2, 0))
    eps = counit_functional(A, 2)
    with pytest.raises(NotInvertible):
        convolution_inverse(eps.scale(2))
    # relaxed mode accepts an invertible degree-0 part
    inv = convolution_inverse(eps.scale(2), strict=False)
    assert convolve(inv, eps.scale(2)) == eps


def test_inverse_of_linked_root_part(linked_sigma):
    sigma = linked_sigma.root_part
    inv = convolution_inverse(sigma)
    eps = counit_functional(sigma.algebra, 2)
    assert convolve(sigma, inv) == eps == convolve(inv, sigma)


@st.composite
def random_functionals(draw, A, count):
    out = []
    for _ in range(count):
        keys = draw(st.lists(st.tuples(st.integers(0, A.dim - 1), st.integers(0, A.dim - 1)),
                             min_size=1, max_size=12, unique=True))
        vals = draw(st.lists(st.integers(-3, 3), min_size=len(keys), max_size=len(keys)))
        out.append(PairFunctional(A, {k: CyclotomicScalar.rational(A.conductor, v) for k, v in zip(keys, vals)}))
    return out


SMALL = PbwHopfAlgebra(taft(2, 2, 1))


@given(random_functionals(SMALL, 3))
def test_convolution_associative(fs):
    f, g, h = fs
    assert convolve(convolve(f, g), h) == convolve(f, convolve(g, h))
    eps = counit_functional(SMALL, 2)
    assert convolve(f, eps) == f
