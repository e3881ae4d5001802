"""Finite abelian groups in invariant-factor form, characters, and pointed data.

Group elements and characters are exponent tuples.  A character with
exponents (c_1, ..., c_k) sends the j-th generator to z^(c_j * L / m_j).
"""

from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass, field
from functools import cached_property
from math import prod

from .cyclotomic import CyclotomicScalar, multiplicative_order, print_scalar, root_of_unity

GroupElement = tuple


class FiniteAbelianGroup:
    """Z/m_1 x ... x Z/m_k; elements enumerated in lexicographic exponent order."""

    def __init__(self, invariant_factors):
        factors = tuple(int(m) for m in invariant_factors)
        if any(m < 2 for m in factors):
            raise ValueError("invariant factors must be integers >= 2")
        self.invariant_factors = factors

    def __eq__(self, other):
        return isinstance(other, FiniteAbelianGroup) and other.invariant_factors == self.invariant_factors

    def __hash__(self):
        return hash(self.invariant_factors)

    def __repr__(self):
        return f"FiniteAbelianGroup({list(self.invariant_factors)})"

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)

    @property
    def exponent(self) -> int:
        out = 1
        for m in self.invariant_factors:
            out = out * m // _gcd(out, m)
        return out

    @cached_property
    def elements(self) -> tuple[GroupElement, ...]:
        return tuple(itertools.product(*(range(m) for m in self.invariant_factors)))

    @cached_property
    def index(self) -> dict:
        return {g: i for i, g in enumerate(self.elements)}

    @property
    def identity(self) -> GroupElement:
        return tuple(0 for _ in self.invariant_factors)

    def element(self, exps) -> GroupElement:
        exps = tuple(int(e) for e in exps)
        if len(exps) != len(self.invariant_factors):
            raise ValueError(f"expected {len(self.invariant_factors)} exponents, got {len(exps)}")
        return tuple(e % m for e, m in zip(exps, self.invariant_factors))

    def mul(self, g: GroupElement, h: GroupElement) -> GroupElement:
        return tuple((a + b) % m for a, b, m in zip(g, h, self.invariant_factors))

    def inv(self, g: GroupElement) -> GroupElement:
        return tuple((-a) % m for a, m in zip(g, self.invariant_factors))

    def power(self, g: GroupElement, n: int) -> GroupElement:
        return tuple((a * n) % m for a, m in zip(g, self.invariant_factors))

    def element_order(self, g: GroupElement) -> int:
        n = 1
        for a, m in zip(g, self.invariant_factors):
            k = m // _gcd(a, m)
            n = n * k // _gcd(n, k)
        return n

    def canonical(self, g: GroupElement) -> GroupElement:
        return g

    def characters(self) -> list["Character"]:
        return [Character(c) for c in self.elements]

    def subgroup(self, generators) -> list[GroupElement]:
        """Elements of the subgroup generated by ``generators`` in enumeration order."""
        seen = {self.identity}
        frontier = [self.identity]
        gens = [tuple(g) for g in generators]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.mul(x, g)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return sorted(seen)


class QuotientGroup:
    """G / H with cosets represented by their least exponent vector.

    Exposes the same element interface as FiniteAbelianGroup so algebras can
    be built over it.
    """

    def __init__(self, parent: FiniteAbelianGroup, subgroup_elements):
        self.parent = parent
        self.kernel = tuple(sorted(set(subgroup_elements)))
        self._canon = {}
        for g in parent.elements:
            self._canon[g] = min(parent.mul(g, h) for h in self.kernel)
        self.invariant_factors = parent.invariant_factors

    def __repr__(self):
        return f"QuotientGroup({self.parent!r}, kernel of order {len(self.kernel)})"

    @cached_property
    def elements(self) -> tuple[GroupElement, ...]:
        return tuple(sorted(set(self._canon.values())))

    @cached_property
    def index(self) -> dict:
        return {g: i for i, g in enumerate(self.elements)}

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> GroupElement:
        return self.parent.identity

    def canonical(self, g: GroupElement) -> GroupElement:
        return self._canon[tuple(g)]

    def element(self, exps) -> GroupElement:
        return self.canonical(self.parent.element(exps))

    def mul(self, g, h):
        return self._canon[self.parent.mul(g, h)]

    def inv(self, g):
        return self._canon[self.parent.inv(g)]

    def power(self, g, n):
        return self._canon[self.parent.power(g, n)]

    def element_order(self, g) -> int:
        n, x = 1, g
        while x != self.identity:
            x = self.mul(x, g)
            n += 1
        return n

    def split(self, g: GroupElement) -> tuple[GroupElement, GroupElement]:
        """Write g = rep * h with rep the coset representative and h in the kernel."""
        rep = self._canon[tuple(g)]
        return rep, self.parent.mul(g, self.parent.inv(rep))


@dataclass(frozen=True)
class Character:
    exponents: tuple

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(int(c) for c in self.exponents))

    def exponent_of(self, group, g: GroupElement, conductor: int) -> int:
        total = 0
        for c, e, m in zip(self.exponents, g, group.invariant_factors):
            total += c * e * (conductor // m)
        return total % conductor

    def mul(self, other: "Character", group) -> "Character":
        return Character(tuple((a + b) % m for a, b, m in zip(self.exponents, other.exponents, group.invariant_factors)))

    def power(self, n: int, group) -> "Character":
        return Character(tuple((a * n) % m for a, m in zip(self.exponents, group.invariant_factors)))

    def is_trivial(self) -> bool:
        return not any(self.exponents)


def character_pairing(chi: Character, g: GroupElement, group, conductor: int) -> CyclotomicScalar:
    """chi(g) = z^(sum_j c_j e_j L/m_j)."""
    if any(conductor % m for m in group.invariant_factors):
        raise ValueError(f"conductor {conductor} is not divisible by every invariant factor")
    return root_of_unity(conductor, chi.exponent_of(group, g, conductor))


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


@dataclass
class PointedDatum:
    """Quantum-linear-space datum (G, g_i, chi_i) with linking and root-vector parameters.

    ``lam`` maps (i, j) with i < j (0-based) to the linking scalar; ``mu`` has one
    scalar per vertex.  ``N`` is recomputed from the group data on construction
    of algebras; declared values are only compared by :func:`validate_datum`.
    """

    group: FiniteAbelianGroup
    conductor: int
    g: list
    chi: list
    mu: list = field(default_factory=list)
    lam: dict = field(default_factory=dict)
    declared_N: list | None = None

    def __post_init__(self):
        self.g = [tuple(x) for x in self.g]
        self.chi = [c if isinstance(c, Character) else Character(c) for c in self.chi]
        zero = CyclotomicScalar.rational(self.conductor, 0)
        if not self.mu:
            self.mu = [zero] * len(self.g)
        self.mu = [_as_scalar(m, self.conductor) for m in self.mu]
        self.lam = {(int(i), int(j)): _as_scalar(v, self.conductor) for (i, j), v in self.lam.items()}

    @property
    def theta(self) -> int:
        return len(self.g)

    def pairing(self, chi_index: int, g: GroupElement) -> CyclotomicScalar:
        return character_pairing(self.chi[chi_index], g, self.group, self.conductor)

    def q(self, i: int, j: int) -> CyclotomicScalar:
        """chi_j(g_i)."""
        return self.pairing(j, self.g[i])

    @property
    def N(self) -> list[int]:
        out = []
        for i in range(self.theta):
            n = multiplicative_order(self.q(i, i))
            out.append(n if n is not None else 0)
        return out

    def linked_pairs(self) -> list[tuple[int, int]]:
        return sorted(p for p, v in self.lam.items() if not v.is_zero())

    def lambda_of(self, i: int, j: int) -> CyclotomicScalar:
        key = (min(i, j), max(i, j))
        v = self.lam.get(key)
        return v if v is not None else CyclotomicScalar.rational(self.conductor, 0)

    @property
    def dimension(self) -> int:
        return self.group.order * prod(self.N)

    def with_parameters(self, lam=None, mu=None) -> "PointedDatum":
        return PointedDatum(
            group=self.group,
            conductor=self.conductor,
            g=list(self.g),
            chi=list(self.chi),
            mu=list(self.mu) if mu is None else list(mu),
            lam=dict(self.lam) if lam is None else dict(lam),
        )

    def with_group(self, group) -> "PointedDatum":
        d = self.with_parameters()
        d.group = group
        d.g = [group.canonical(x) for x in d.g]
        return d

    def canonical_text(self) -> str:
        lines = [
            f"invariant_factors={','.join(map(str, self.group.invariant_factors))}",
            f"conductor={self.conductor}",
            f"theta={self.theta}",
        ]
        for i in range(self.theta):
            lines.append(f"g.{i + 1}={','.join(map(str, self.g[i]))}")
            lines.append(f"chi.{i + 1}={','.join(map(str, self.chi[i].exponents))}")
            lines.append(f"mu.{i + 1}={print_scalar(self.mu[i])}")
        for (i, j) in sorted(self.lam):
            lines.append(f"lambda.{i + 1}.{j + 1}={print_scalar(self.lam[(i, j)])}")
        return "\n".join(lines)

    def datum_hash(self) -> str:
        return hashlib.sha256(self.canonical_text().encode()).hexdigest()[:16]


def _as_scalar(v, conductor):
    if isinstance(v, CyclotomicScalar):
        if v.conductor != conductor:
            raise ValueError(f"scalar has conductor {v.conductor}, datum uses {conductor}")
        return v
    if isinstance(v, str):
        from .cyclotomic import parse_scalar

        return parse_scalar(v, conductor)
    return CyclotomicScalar.rational(conductor, v)


def linkable(d: PointedDatum, i: int, j: int) -> bool:
    """chi_i chi_j = eps and g_i g_j != 1."""
    G = d.group
    return d.chi[i].mul(d.chi[j], G).is_trivial() and G.mul(d.g[i], d.g[j]) != G.identity


def validate_datum(d: PointedDatum) -> list[str]:
    """Every violated datum condition, as human-readable strings.  Empty means valid."""
    out = []
    G = d.group
    L = d.conductor
    for m in G.invariant_factors:
        if L % m:
            out.append(f"conductor {L} not divisible by invariant factor {m}")
    if out:
        return out
    if len(d.chi) != len(d.g):
        out.append("g and chi lists differ in length")
        return out
    k = len(G.invariant_factors)
    for i, (g, chi) in enumerate(zip(d.g, d.chi)):
        if len(g) != k or any(not 0 <= e < m for e, m in zip(g, G.invariant_factors)):
            out.append(f"vertex {i + 1}: g out of range {g}")
        if len(chi.exponents) != k or any(not 0 <= c < m for c, m in zip(chi.exponents, G.invariant_factors)):
            out.append(f"vertex {i + 1}: chi out of range {chi.exponents}")
    if out:
        return out
    if len(d.mu) != d.theta:
        out.append(f"expected {d.theta} root-vector parameters, got {len(d.mu)}")
        return out

    N = d.N
    for i in range(d.theta):
        qii = d.q(i, i)
        if qii.is_one():
            out.append(f"vertex {i + 1}: q_ii has order 1")
        if d.declared_N is not None and i < len(d.declared_N) and d.declared_N[i] is not None:
            if d.declared_N[i] != N[i]:
                out.append(f"vertex {i + 1}: declared N={d.declared_N[i]} but order of q_ii is {N[i]}")
    for i in range(d.theta):
        for j in range(i + 1, d.theta):
            if not (d.q(i, j) * d.q(j, i)).is_one():
                out.append(f"vertices {i + 1},{j + 1}: Cartan condition q_ij*q_ji = 1 fails")

    for i in range(d.theta):
        if d.mu[i].is_zero() or N[i] < 2:
            continue
        if not d.chi[i].power(N[i], G).is_trivial():
            out.append(f"vertex {i + 1}: mu nonzero but chi^N is not trivial")
        if G.power(d.g[i], N[i]) == G.identity:
            out.append(f"vertex {i + 1}: mu nonzero but g^N = 1")

    used = {}
    for (i, j), v in sorted(d.lam.items()):
        if not (0 <= i < j < d.theta):
            out.append(f"lambda index ({i + 1},{j + 1}) invalid")
            continue
        if v.is_zero():
            continue
        if not linkable(d, i, j):
            out.append(f"vertices {i + 1},{j + 1}: pair not linkable")
        for v_ in (i, j):
            if v_ in used:
                out.append(
                    f"vertex {v_ + 1}: linked in two pairs ({used[v_][0] + 1},{used[v_][1] + 1}) and ({i + 1},{j + 1})"
                )
            used[v_] = (i, j)
        order = multiplicative_order(d.pairing(i, d.g[j]))
        if order is None or order < 2:
            out.append(f"vertices {i + 1},{j + 1}: chi_i(g_j) has order < 2")
    return out


def root_subgroup(d: PointedDatum, only_nonzero_mu: bool = False) -> list[GroupElement]:
    """Subgroup generated by the g_i^{N_i} with chi_i^{N_i} trivial and g_i^{N_i} != 1.

    With ``only_nonzero_mu`` the generators are restricted to vertices with mu_i != 0.
    """
    G = d.group
    gens = []
    for i, n in enumerate(d.N):
        if only_nonzero_mu and d.mu[i].is_zero():
            continue
        h = G.power(d.g[i], n)
        if d.chi[i].power(n, G).is_trivial() and h != G.identity:
            gens.append(h)
    return G.subgroup(gens)
