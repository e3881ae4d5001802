"""Deforming cocycles for bosonized quantum linear spaces.

Constructors: the root-vector cocycles zeta_i, the linking cocycles
eta_{j,i} = (d_j * chi_i) (x) d_i, their (q-)exponentials, the pullback of
the linking cocycle from u(D', 0, 0) over G/G_0, the assembled cocycle
sigma_{lambda,mu} * e^{sum mu_i zeta_i}, and the Singer cocycle of a central
extension kG_0 -> u(D, 0, mu) -> u(D', 0, 0).

Verifiers: Hochschild 2-cocycle identity and multiplicative (Sweedler)
cocycle identity on every basis triple, plus graded decompositions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .abelian_group import (
    Character,
    PointedDatum,
    QuotientGroup,
    character_pairing,
    linkable,
    root_subgroup,
)
from .cyclotomic import CyclotomicScalar, cyc_inv, multiplicative_order
from .functionals import (
    Functional,
    LinearFunctional,
    NotInvertible,
    PairFunctional,
    compose_with_mult,
    convolution_inverse,
    convolve,
    counit_functional,
    make_functional,
    tensor_functionals,
    with_counit,
)
from .hopf_core import AxiomResult, PbwHopfAlgebra, gauss_binomial, q_factorial
from .sparse import acc, add_scaled
from .sweeps import first_failure

__all__ = [
    "extended_character",
    "skew_derivation",
    "check_skew_derivation",
    "zeta_cocycle",
    "eta_functional",
    "is_hochschild_cocycle",
    "exp_functional",
    "exp_q_functional",
    "quotient_algebra",
    "pullback",
    "transfer",
    "linking_cocycle",
    "assemble_sigma",
    "is_multiplicative_cocycle",
    "CocycleVerdict",
    "graded_parts",
    "GradedDecomposition",
    "root_commutation_check",
    "root_sum_left",
    "root_sum_right",
    "q_vandermonde_holds",
    "linking_operands",
    "singer_cocycle",
    "SingerCocycle",
    "CocycleError",
]


class CocycleError(ValueError):
    pass


# ---------------------------------------------------------------------------
# linear functionals on A

def extended_character(A: PbwHopfAlgebra, i: int) -> LinearFunctional:
    """chi_i(x^a g) = eps(x^a) chi_i(g)."""
    chi = A.rewriter.chi_val[i]
    return LinearFunctional(A, {(gi,): chi[gi] for gi in range(A.ng)}, 0)


def skew_derivation(A: PbwHopfAlgebra, r: int) -> LinearFunctional:
    """d_r(x_r g) = 1 for every group element g, zero on the other PBW monomials."""
    a = [0] * A.theta
    a[r] = 1
    pos = A.exp_index[tuple(a)]
    return LinearFunctional(A, {(A.index_from(pos, gi),): A.one_scalar for gi in range(A.ng)}, 1)


def check_skew_derivation(A: PbwHopfAlgebra, r: int) -> bool:
    """d_r o m == d_r (x) eps + chi_r (x) d_r as functionals on A (x) A."""
    d = skew_derivation(A, r)
    lhs = compose_with_mult(d, 0)
    rhs = with_counit(d, "right") + tensor_functionals(extended_character(A, r), d)
    return lhs == rhs


# ---------------------------------------------------------------------------
# Hochschild cocycles

def zeta_cocycle(A: PbwHopfAlgebra, i: int) -> PairFunctional:
    """zeta_i(x^a g, x^b h) = chi_i(g)^{b_i} when a = a_i e_i, b = b_i e_i and a_i + b_i = N_i."""
    N = A.N[i]
    chi = A.rewriter.chi_val[i]
    values = {}
    for ai in range(1, N):
        bi = N - ai
        a = [0] * A.theta
        b = [0] * A.theta
        a[i], b[i] = ai, bi
        pa, pb = A.exp_index[tuple(a)], A.exp_index[tuple(b)]
        for g in range(A.ng):
            val = chi[g] ** bi
            for h in range(A.ng):
                values[(A.index_from(pa, g), A.index_from(pb, h))] = val
    return PairFunctional(A, values, N)


def eta_functional(A: PbwHopfAlgebra, j: int, i: int, check_linkable: bool = True) -> PairFunctional:
    """eta_{j,i} = (d_j * chi_i) (x) d_i."""
    if check_linkable and not linkable(A.datum, i, j):
        raise CocycleError(f"vertices {i + 1},{j + 1} are not linkable")
    left = convolve(skew_derivation(A, j), extended_character(A, i))
    return tensor_functionals(left, skew_derivation(A, i))


def _by_slot(f: Functional, slot: int) -> dict:
    out = {}
    for key, v in f.values.items():
        out.setdefault(key[slot], []).append((key[1 - slot], v))
    return out


def is_hochschild_cocycle(f: PairFunctional, mult=None) -> AxiomResult:
    """eps(a) f(b,c) + f(a,bc) == f(a,b) eps(c) + f(ab,c) on every basis triple.

    The sweep is organised by the middle index b; for each b the defect is
    accumulated sparsely over (a, c).
    """
    A = f.algebra
    M = mult if mult is not None else A.mult
    n = A.dim
    first = _by_slot(f, 0)
    second = _by_slot(f, 1)
    grouplike = [(i, e) for i, e in enumerate(A.counit) if e]

    def defect(b):
        out = {}
        for c, v in first.get(b, ()):
            for a, e in grouplike:
                acc(out, (a, c), e * v)
        for c in range(n):
            for t, m in M[b][c].items():
                for a, v in second.get(t, ()):
                    acc(out, (a, c), m * v)
        for a, v in second.get(b, ()):
            for c, e in grouplike:
                acc(out, (a, c), -(v * e))
        for a in range(n):
            for t, m in M[a][b].items():
                for c, v in first.get(t, ()):
                    acc(out, (a, c), -(m * v))
        if out:
            a, c = min(out)
            return (a, b, c)
        return None

    _, witness = first_failure(defect, range(n))
    return AxiomResult("hochschild", witness is None, n ** 3, witness)


# ---------------------------------------------------------------------------
# exponentials

def exp_functional(f: Functional) -> Functional:
    """e^f = sum f^{*i} / i!, for f vanishing on degree-0 tuples (so f is nilpotent)."""
    if any(f.key_degree(k) == 0 for k in f.values):
        raise CocycleError("exp needs a functional vanishing in degree 0")
    A = f.algebra
    out = counit_functional(A, f.arity)
    power = out
    bound = f.arity * A.max_degree + 1
    for i in range(1, bound + 1):
        power = convolve(power, f)
        if power.is_zero():
            return out
        out = out + power.scale(Fraction(1, factorial(i)))
    if not convolve(power, f).is_zero():
        raise CocycleError("convolution powers did not vanish")
    return out


def exp_q_functional(f: Functional, q: CyclotomicScalar) -> Functional:
    """exp_q(f) = sum_{m < l} f^{*m} / (m)!_q with l the order of q."""
    ell = multiplicative_order(q)
    if ell is None or ell < 2:
        raise CocycleError("exp_q needs a root of unity of order at least 2")
    A = f.algebra
    out = counit_functional(A, f.arity)
    power = out
    for m in range(1, ell):
        power = convolve(power, f)
        fact = q_factorial(m, q)
        if fact.is_zero():
            raise CocycleError(f"(m)!_q vanishes at m={m}")
        if not power.is_zero():
            out = out + power.scale(cyc_inv(fact))
    return out


# ---------------------------------------------------------------------------
# multiplicative cocycles

@dataclass
class CocycleVerdict:
    normalized: AxiomResult
    multiplicative: AxiomResult
    invertible: AxiomResult
    inverse: Functional | None = None

    @property
    def passed(self) -> bool:
        return self.normalized.passed and self.multiplicative.passed and self.invertible.passed

    def to_dict(self) -> dict:
        return {
            "normalized": self.normalized.passed,
            "multiplicative": self.multiplicative.passed,
            "invertible": self.invertible.passed,
            "detail": {
                "normalized": self.normalized.to_dict(),
                "multiplicative": self.multiplicative.to_dict(),
                "invertible": self.invertible.to_dict(),
            },
        }


def _sigma_times_m(sigma: PairFunctional, M) -> list:
    """SM[u][v] = sum sigma(u_1, v_1) u_2 v_2, as sparse elements of A."""
    A = sigma.algebra
    sv = sigma.values
    n = A.dim
    table = []
    for u in range(n):
        du = A.comult[u]
        row = []
        for v in range(n):
            out = {}
            dv = A.comult[v]
            for j, k, c in du:
                for j2, k2, c2 in dv:
                    s = sv.get((j, j2))
                    if s is not None:
                        add_scaled(out, M[k][k2], s * c * c2)
            row.append(out)
        table.append(row)
    return table


def is_multiplicative_cocycle(sigma: PairFunctional, mult=None, check_inverse: bool = True) -> CocycleVerdict:
    """Normalization, the cocycle identity on all basis triples, and convolution invertibility.

    The identity (eps (x) sigma) * sigma(1 (x) m) = (sigma (x) eps) * sigma(m (x) 1)
    reads sigma(u, SM[v,w]) = sigma(SM[u,v], w) with SM = sigma * m.
    """
    A = sigma.algebra
    M = mult if mult is not None else A.mult
    n = A.dim
    unit_idx = next(iter(A.unit))
    bad = None
    for u in range(n):
        e = A.counit[u]
        if sigma(unit_idx, u) != e or sigma(u, unit_idx) != e:
            bad = u
            break
    normalized = AxiomResult("normalized", bad is None, n, bad)

    SM = _sigma_times_m(sigma, M)
    first = _by_slot(sigma, 0)
    second = _by_slot(sigma, 1)

    def defect(v):
        out = {}
        for w in range(n):
            for t, c in SM[v][w].items():
                for u, s in second.get(t, ()):
                    acc(out, (u, w), c * s)
        for u in range(n):
            for t, c in SM[u][v].items():
                for w, s in first.get(t, ()):
                    acc(out, (u, w), -(c * s))
        if out:
            u, w = min(out)
            return (u, v, w)
        return None

    _, witness = first_failure(defect, range(n))
    multiplicative = AxiomResult("multiplicative", witness is None, n ** 3, witness)

    inverse = None
    if check_inverse:
        try:
            inverse = convolution_inverse(sigma, strict=False)
            invertible = AxiomResult("invertible", True, 1)
        except NotInvertible as exc:
            invertible = AxiomResult("invertible", False, 1, str(exc))
    else:
        invertible = AxiomResult("invertible", True, 0)
    return CocycleVerdict(normalized, multiplicative, invertible, inverse)


@dataclass
class GradedDecomposition:
    parts: dict
    s: int | None
    infinitesimal: Functional | None
    infinitesimal_hochschild: AxiomResult | None

    def to_dict(self) -> dict:
        return {
            "degrees": sorted(self.parts),
            "s": self.s,
            "infinitesimal_is_hochschild": None
            if self.infinitesimal_hochschild is None
            else self.infinitesimal_hochschild.passed,
        }


def graded_parts(sigma: PairFunctional, check_hochschild: bool = True) -> GradedDecomposition:
    """Split sigma by total label degree; sigma_0 must be eps (x) eps."""
    parts = sigma.homogeneous_parts()
    eps = counit_functional(sigma.algebra, sigma.arity)
    if parts.get(0) != eps:
        raise CocycleError("degree-0 part of sigma is not the counit")
    positive = [d for d, p in parts.items() if d > 0 and not p.is_zero()]
    if not positive:
        return GradedDecomposition(parts, None, None, None)
    s = min(positive)
    inf = parts[s]
    verdict = is_hochschild_cocycle(inf) if check_hochschild else None
    return GradedDecomposition(parts, s, inf, verdict)


# ---------------------------------------------------------------------------
# quotient by G_0 and pullbacks

def quotient_algebra(datum: PointedDatum, kernel=None):
    """C = u(D', 0, 0) over G' = G / G_0, and the quotient group."""
    if kernel is None:
        kernel = root_subgroup(datum)
    Q = QuotientGroup(datum.group, kernel)
    zero = CyclotomicScalar.rational(datum.conductor, 0)
    d0 = datum.with_parameters(lam={}, mu=[zero] * datum.theta).with_group(Q)
    return PbwHopfAlgebra(d0, group=Q, validate=False), Q


def projection_indices(A: PbwHopfAlgebra, C: PbwHopfAlgebra) -> list:
    """Basis index map x^a g -> x^a (g mod G_0)."""
    Q = C.group
    return [
        C.index_from(u // A.ng, C.gidx[Q.canonical(A.gelems[u % A.ng])])
        for u in range(A.dim)
    ]


def pullback(f: Functional, A: PbwHopfAlgebra) -> Functional:
    """f o (pi (x) ... (x) pi) for the projection A -> C = f.algebra."""
    C = f.algebra
    pi = projection_indices(A, C)
    fibres = {}
    for u, c in enumerate(pi):
        fibres.setdefault(c, []).append(u)
    out = {}
    for key, v in f.values.items():
        for combo in itertools.product(*(fibres.get(c, ()) for c in key)):
            out[combo] = v
    return make_functional(A, f.arity, out, f.degree)


def transfer(f: Functional, algebra) -> Functional:
    """The same table viewed on another algebra with identical basis labels."""
    if algebra.labels != f.algebra.labels:
        raise ValueError("basis labels differ")
    return make_functional(algebra, f.arity, f.values, f.degree)


# ---------------------------------------------------------------------------
# linking and the assembled cocycle

@dataclass
class LinkingCocycle:
    algebra: PbwHopfAlgebra  # C = u(D', 0, 0)
    quotient: QuotientGroup
    sigma: PairFunctional
    factors: list = field(default_factory=list)  # (pair, exp_q factor)
    order_independent: bool | None = None


def linking_cocycle(datum: PointedDatum, check_order: bool = True) -> LinkingCocycle:
    """sigma_lambda on C: product over linked pairs (ascending) of exp_{chi_i(g_j)}(lambda_ij eta_{j,i})."""
    C, Q = quotient_algebra(datum)
    pairs = datum.linked_pairs()
    seen = set()
    for i, j in pairs:
        if i in seen or j in seen:
            raise CocycleError("linked pairs do not form a matching")
        seen.update((i, j))
    eps = counit_functional(C, 2)
    factors = []
    for i, j in pairs:
        q = character_pairing(datum.chi[i], datum.g[j], datum.group, datum.conductor)
        order = multiplicative_order(q)
        if order is None or order < 2:
            raise CocycleError(f"chi_{i + 1}(g_{j + 1}) has order < 2")
        eta = eta_functional(C, j, i, check_linkable=False).scale(datum.lambda_of(i, j))
        factors.append(((i, j), exp_q_functional(eta, q)))
    sigma = eps
    for _, fac in factors:
        sigma = convolve(sigma, fac)
    independent = None
    if check_order and len(factors) > 1:
        rev = eps
        for _, fac in reversed(factors):
            rev = convolve(rev, fac)
        independent = rev == sigma
    return LinkingCocycle(C, Q, sigma, factors, independent)


@dataclass
class AssembledCocycle:
    algebra: PbwHopfAlgebra  # u(D, 0, 0)
    sigma: PairFunctional
    linking: LinkingCocycle
    sigma_lambda_mu: PairFunctional
    root_part: PairFunctional


def base_algebra(datum: PointedDatum, **kw) -> PbwHopfAlgebra:
    zero = CyclotomicScalar.rational(datum.conductor, 0)
    return PbwHopfAlgebra(datum.with_parameters(lam={}, mu=[zero] * datum.theta), **kw)


def assemble_sigma(datum: PointedDatum, A: PbwHopfAlgebra | None = None) -> AssembledCocycle:
    """sigma = sigma_{lambda,mu} * e^{sum mu_i zeta_i} on u(D, 0, 0)."""
    if A is None:
        A = base_algebra(datum)
    link = linking_cocycle(datum)
    slm = pullback(link.sigma, A)
    zeta = PairFunctional(A, {}, None)
    for i, mu in enumerate(datum.mu):
        if mu:
            zeta = zeta + zeta_cocycle(A, i).scale(mu)
    root = exp_functional(zeta) if not zeta.is_zero() else counit_functional(A, 2)
    sigma = convolve(slm, root)
    return AssembledCocycle(A, sigma, link, slm, root)


# ---------------------------------------------------------------------------
# identities behind the root-vector cocycles

def root_commutation_check(A: PbwHopfAlgebra, i: int, j: int) -> dict:
    """Whether eps(x)zeta_i commutes with zeta_j(1(x)m), and zeta_i(x)eps with zeta_j(m(x)1)."""
    zi, zj = zeta_cocycle(A, i), zeta_cocycle(A, j)
    left_a = with_counit(zi, "left")
    left_b = compose_with_mult(zj, 1)
    right_a = with_counit(zi, "right")
    right_b = compose_with_mult(zj, 0)
    return {
        "S_l": convolve(left_a, left_b) == convolve(left_b, left_a),
        "S_r": convolve(right_a, right_b) == convolve(right_b, right_a),
    }


def root_sum_left(s: int, p: int, N: int, q: CyclotomicScalar) -> CyclotomicScalar:
    """sum_{u+v=N} C(s,u)_q C(p,v)_q q^{u(p-v)} (terms with u > s or v > p vanish)."""
    total = q * 0
    for u in range(0, N + 1):
        v = N - u
        if u <= s and v <= p:
            total = total + gauss_binomial(s, u, q) * gauss_binomial(p, v, q) * q ** (u * (p - v))
    return total


def root_sum_right(r: int, s: int, N: int, q: CyclotomicScalar) -> CyclotomicScalar:
    """sum_{u+v=N} C(r,u)_q C(s,v)_q q^{u(s-v)}."""
    total = q * 0
    for u in range(0, N + 1):
        v = N - u
        if u <= r and v <= s:
            total = total + gauss_binomial(r, u, q) * gauss_binomial(s, v, q) * q ** (u * (s - v))
    return total


def q_vandermonde_holds(i: int, k: int, beta: int, q: CyclotomicScalar) -> bool:
    """sum_{s+v=beta} C(i,s)_q C(k,v)_q q^{s(k-v)} == C(i+k, beta)_q."""
    total = q * 0
    for s in range(0, beta + 1):
        v = beta - s
        if s <= i and v <= k:
            total = total + gauss_binomial(i, s, q) * gauss_binomial(k, v, q) * q ** (s * (k - v))
    return total == gauss_binomial(i + k, beta, q)


def linking_operands(A: PbwHopfAlgebra, j: int, i: int) -> dict:
    """Functionals a, b, c on A(x)A(x)A used to split exp_q of eta_{j,i} composed with m.

    a = eps (x) (d_j*chi_i) (x) d_i,  b = (d_j*chi_i) (x) d_i (x) eps,
    c = (d_j*chi_i) (x) chi_i (x) d_i.
    """
    dchi = convolve(skew_derivation(A, j), extended_character(A, i))
    di = skew_derivation(A, i)
    eps = counit_functional(A, 1)
    return {
        "a": tensor_functionals(eps, dchi, di),
        "b": tensor_functionals(dchi, di, eps),
        "c": tensor_functionals(dchi, extended_character(A, i), di),
    }


# ---------------------------------------------------------------------------
# Singer cocycle of the central extension kG_0 -> B -> C

def _hom_convolve(coalg, target, f, h):
    out = []
    for c in range(coalg.dim):
        acc_el = {}
        for j, k, coef in coalg.comult[c]:
            fj, hk = f[j], h[k]
            if fj and hk:
                add_scaled(acc_el, target.product(fj, hk), coef)
        out.append(acc_el)
    return out


def _invert_grouplike_term(target, el):
    if len(el) != 1:
        raise NotInvertible("degree-0 value is not a multiple of a group-like")
    (i, c), = el.items()
    if not target.is_group_like(i) or not c:
        raise NotInvertible("degree-0 value is not a multiple of a group-like")
    inv_idx = next(iter(target.antipode[i]))
    return {inv_idx: cyc_inv(c)}


def hom_convolution_inverse(coalg, target, f):
    """Inverse of f in Hom(coalg, target) by recursion on the label degree.

    Uses that Delta(x^a g) contains x^a g (x) g exactly once with coefficient
    one and no other term with a full-degree left factor.
    """
    unit = target.unit
    inv = [None] * coalg.dim
    order = sorted(range(coalg.dim), key=lambda c: (coalg.degree[c], c))
    for c in order:
        rhs = {}
        if coalg.counit[c]:
            add_scaled(rhs, unit, coalg.counit[c])
        lead = None
        for j, k, coef in coalg.comult[c]:
            if j == c:
                if lead is not None:
                    raise NotInvertible("ambiguous leading coproduct term")
                lead = (k, coef)
                continue
            if inv[j] is None:
                raise NotInvertible("coproduct term of equal degree")
            if inv[j] and f[k]:
                add_scaled(rhs, target.product(inv[j], f[k]), -coef)
        if lead is None:
            raise NotInvertible("no leading coproduct term")
        k, coef = lead
        finv = _invert_grouplike_term(target, f[k])
        inv[c] = {i: v * cyc_inv(coef) for i, v in target.product(rhs, finv).items()}
    eps = [dict((i, v * coalg.counit[c]) for i, v in unit.items()) if coalg.counit[c] else {}
           for c in range(coalg.dim)]
    if _hom_convolve(coalg, target, f, inv) != eps or _hom_convolve(coalg, target, inv, f) != eps:
        raise NotInvertible("recursion did not give a two-sided inverse")
    return inv


@dataclass
class SingerCocycle:
    B: PbwHopfAlgebra  # u(D, 0, mu)
    C: PbwHopfAlgebra  # u(D', 0, 0)
    kernel: tuple
    phi: Character
    xi: list
    xi_inv: list
    chi: list
    chi_inv: list
    a: dict  # (x, y) -> element of kG_0 inside B
    sigma: PairFunctional  # phi o a on C
    representative_independent: bool
    representative_witness: object
    values_in_kernel: bool

    def phi_value(self, h) -> CyclotomicScalar:
        G = self.B.group
        return character_pairing(self.phi, h, G, self.B.datum.conductor)


def default_phi(datum: PointedDatum, kernel) -> Character:
    """First character of G (lexicographic) that is nontrivial on the kernel."""
    G = datum.group
    for chi in G.characters():
        if any(not character_pairing(chi, h, G, datum.conductor).is_one() for h in kernel):
            return chi
    return Character((0,) * len(G.invariant_factors))


def singer_cocycle(datum: PointedDatum, phi: Character | None = None) -> SingerCocycle:
    """sigma' = phi o a for the Singer cocycle a of kG_0 -> u(D,0,mu) -> u(D',0,0).

    The section xi: B -> kG_0 is the right kG_0-module map with
    xi(x^a r h) = delta_{a,0} h, where r is the least coset representative
    and h in G_0.  It fixes the group-likes of G_0 and is the counit on the
    PBW monomials x^a r.
    """
    kernel = root_subgroup(datum, only_nonzero_mu=True)
    G = datum.group
    if len(kernel) <= 1:
        raise CocycleError("G_0 is trivial: no root vector parameter is active")
    zero = CyclotomicScalar.rational(datum.conductor, 0)
    B = PbwHopfAlgebra(datum.with_parameters(lam={}))
    C, Q = quotient_algebra(datum.with_parameters(lam={}), kernel)
    if phi is None:
        phi = default_phi(datum, kernel)
    one = B.one_scalar
    kernel_set = set(kernel)

    xi = []
    for u in range(B.dim):
        a = B.exps_of(u)
        if any(a):
            xi.append({})
            continue
        _, h = Q.split(B.group_of(u))
        xi.append({B.index_from(0, B.gidx[h]): one})
    xi_inv = hom_convolution_inverse(B, B, xi)

    ident = [{u: one} for u in range(B.dim)]
    chi_on_B = _hom_convolve(B, B, xi_inv, ident)
    pi = projection_indices(B, C)
    chi = [None] * C.dim
    rep_witness = None
    for u in range(B.dim):
        c = pi[u]
        a = B.exps_of(u)
        g = B.group_of(u)
        canonical = B.index(a, Q.canonical(g))
        if u == canonical:
            chi[c] = chi_on_B[u]
    for u in range(B.dim):
        if chi_on_B[u] != chi[pi[u]] and rep_witness is None:
            rep_witness = u
    chi_inv = hom_convolution_inverse(C, B, chi)

    a_vals = {}
    in_kernel = True
    for x in range(C.dim):
        for y in range(C.dim):
            total = {}
            for j, k, c in C.comult[x]:
                cj = chi[j]
                for j2, k2, c2 in C.comult[y]:
                    left = B.product(cj, chi[j2])
                    if not left:
                        continue
                    right = {}
                    for t, m in C.mult[k][k2].items():
                        add_scaled(right, chi_inv[t], m)
                    if right:
                        add_scaled(total, B.product(left, right), c * c2)
            for idx in total:
                if B.degree[idx] != 0 or B.group_of(idx) not in kernel_set:
                    in_kernel = False
            if total:
                a_vals[(x, y)] = total

    sigma_vals = {}
    for key, el in a_vals.items():
        val = zero
        for idx, c in el.items():
            val = val + c * character_pairing(phi, B.group_of(idx), G, datum.conductor)
        if val:
            sigma_vals[key] = val
    sigma = PairFunctional(C, sigma_vals)
    return SingerCocycle(B, C, tuple(kernel), phi, xi, xi_inv, chi, chi_inv, a_vals, sigma,
                         rep_witness is None, rep_witness, in_kernel)
