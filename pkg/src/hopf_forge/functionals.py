"""Functionals on tensor powers of a finite-dimensional Hopf algebra.

A functional on A^{(x)k} is a sparse table keyed by k-tuples of basis
indices.  The convolution product uses the coalgebra structure of A^{(x)k}
(componentwise comultiplication), so for k = 2 it is the product in
(A (x) A)* that governs 2-cocycles.
"""

from __future__ import annotations

import itertools
import json

from .cyclotomic import CyclotomicScalar, cyc_inv, print_scalar
from .sparse import acc

__all__ = [
    "Functional",
    "LinearFunctional",
    "PairFunctional",
    "TripleFunctional",
    "make_functional",
    "counit_functional",
    "convolve",
    "convolution_power",
    "convolution_inverse",
    "NotInvertible",
    "compose_with_mult",
    "with_counit",
    "tensor_functionals",
]


class NotInvertible(ArithmeticError):
    pass


class Functional:
    """Element of (A^{(x)k})*, stored as {k-tuple of basis indices: scalar}."""

    arity = None

    def __init__(self, algebra, values=None, degree=None):
        self.algebra = algebra
        self.values = {}
        if values:
            for k, v in values.items():
                if v:
                    self.values[k] = v
        # homogeneity tag: the functional lives on total label degree ``degree``
        self.degree = degree

    # -- evaluation -----------------------------------------------------------
    def __call__(self, *idx):
        return self.values.get(tuple(idx), self.algebra.zero_scalar)

    def evaluate(self, *elements) -> CyclotomicScalar:
        """Multilinear extension to sparse elements of A."""
        total = self.algebra.zero_scalar
        for combo in itertools.product(*(el.items() for el in elements)):
            key = tuple(i for i, _ in combo)
            v = self.values.get(key)
            if v is not None:
                c = v
                for _, a in combo:
                    c = c * a
                total = total + c
        return total

    def items(self):
        return self.values.items()

    def __len__(self):
        return len(self.values)

    def is_zero(self) -> bool:
        return not self.values

    # -- vector space operations ---------------------------------------------------
    def _like(self, values, degree=None):
        return make_functional(self.algebra, self.arity, values, degree)

    def __add__(self, other):
        _same_space(self, other)
        out = dict(self.values)
        for k, v in other.values.items():
            acc(out, k, v)
        deg = self.degree if self.degree == other.degree else None
        return self._like(out, deg)

    def __neg__(self):
        return self._like({k: -v for k, v in self.values.items()}, self.degree)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if not isinstance(c, CyclotomicScalar):
            c = CyclotomicScalar.rational(self.algebra.conductor, c)
        return self._like({k: v * c for k, v in self.values.items()}, self.degree)

    def __mul__(self, c):
        return self.scale(c)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Functional):
            return NotImplemented
        return self.arity == other.arity and self.values == other.values

    def __hash__(self):
        return hash((self.arity, frozenset(self.values.items())))

    def __repr__(self):
        return f"{type(self).__name__}(arity={self.arity}, support={len(self.values)}, degree={self.degree})"

    # -- grading -------------------------------------------------------------
    def key_degree(self, key) -> int:
        deg = self.algebra.degree
        return sum(deg[i] for i in key)

    def homogeneous_parts(self) -> dict:
        """Split by total label degree: {degree: functional}."""
        parts = {}
        for k, v in self.values.items():
            parts.setdefault(self.key_degree(k), {})[k] = v
        return {d: self._like(vals, d) for d, vals in sorted(parts.items())}

    def part(self, d: int):
        return self._like({k: v for k, v in self.values.items() if self.key_degree(k) == d}, d)

    # -- serialization -----------------------------------------------------------
    def to_json_dict(self, kind: str = "functional", datum_hash: str | None = None) -> dict:
        values = {
            ",".join(map(str, k)): print_scalar(v) for k, v in sorted(self.values.items())
        }
        meta = {"kind": kind, "degree": self.degree, "arity": self.arity}
        if datum_hash is not None:
            meta["datum_hash"] = datum_hash
        return {"meta": meta, "values": values}

    def dump_json(self, **kw) -> str:
        return json.dumps(self.to_json_dict(**kw), sort_keys=True, indent=1)


class LinearFunctional(Functional):
    arity = 1

    def __call__(self, i):
        return self.values.get((i,), self.algebra.zero_scalar)


class PairFunctional(Functional):
    arity = 2


class TripleFunctional(Functional):
    arity = 3


_CLASSES = {1: LinearFunctional, 2: PairFunctional, 3: TripleFunctional}


def make_functional(algebra, arity: int, values=None, degree=None) -> Functional:
    cls = _CLASSES.get(arity)
    if cls is None:
        cls = type(f"Functional{arity}", (Functional,), {"arity": arity})
        _CLASSES[arity] = cls
    return cls(algebra, values, degree)


def _same_space(f, h):
    if f.algebra is not h.algebra:
        raise ValueError("functionals live on different algebras")
    if f.arity != h.arity:
        raise ValueError(f"arity mismatch: {f.arity} vs {h.arity}")


def counit_functional(algebra, arity: int = 2) -> Functional:
    """epsilon^{(x)k}."""
    grouplike = [(i, e) for i, e in enumerate(algebra.counit) if e]
    values = {}
    for combo in itertools.product(grouplike, repeat=arity):
        c = algebra.one_scalar
        for _, e in combo:
            c = c * e
        values[tuple(i for i, _ in combo)] = c
    return make_functional(algebra, arity, values, 0)


# ---------------------------------------------------------------------------
# convolution

def _cost_pairs(f, h):
    return len(f.values) * len(h.values)


def _cost_factor(f, index):
    total = 0
    for key in f.values:
        p = 1
        for i in key:
            p *= len(index[i])
        total += p
    return total


def convolve(f: Functional, h: Functional) -> Functional:
    """(f*h)(u_1..u_k) = sum f(u_1(1)..u_k(1)) h(u_1(2)..u_k(2)).

    Three equivalent evaluation orders are available; the cheapest one for
    the given supports is used.
    """
    _same_space(f, h)
    A = f.algebra
    out = {}
    if not f.values or not h.values:
        return f._like(out)
    costs = {
        "pairs": _cost_pairs(f, h),
        "left": _cost_factor(f, A.left_factor_index),
        "right": _cost_factor(h, A.right_factor_index),
    }
    route = min(costs, key=lambda r: (costs[r], r))
    if route == "pairs":
        dm = A.dual_mult
        for s, a in f.values.items():
            for t, b in h.values.items():
                lists = []
                for sm, tm in zip(s, t):
                    entry = dm.get((sm, tm))
                    if entry is None:
                        break
                    lists.append(entry)
                else:
                    ab = a * b
                    for combo in itertools.product(*lists):
                        c = ab
                        for _, cm in combo:
                            c = c * cm
                        acc(out, tuple(u for u, _ in combo), c)
    elif route == "left":
        lfi = A.left_factor_index
        hv = h.values
        for s, a in f.values.items():
            for combo in itertools.product(*(lfi[i] for i in s)):
                b = hv.get(tuple(t for _, t, _ in combo))
                if b is None:
                    continue
                c = a * b
                for _, _, cm in combo:
                    c = c * cm
                acc(out, tuple(u for u, _, _ in combo), c)
    else:
        rfi = A.right_factor_index
        fv = f.values
        for t, b in h.values.items():
            for combo in itertools.product(*(rfi[i] for i in t)):
                a = fv.get(tuple(s for _, s, _ in combo))
                if a is None:
                    continue
                c = a * b
                for _, _, cm in combo:
                    c = c * cm
                acc(out, tuple(u for u, _, _ in combo), c)
    deg = f.degree + h.degree if f.degree is not None and h.degree is not None else None
    return f._like(out, deg)


def convolution_power(f: Functional, n: int) -> Functional:
    out = counit_functional(f.algebra, f.arity)
    for _ in range(n):
        out = convolve(out, f)
    return out


def convolution_inverse(sigma: Functional, verify: bool = True, strict: bool = True) -> Functional:
    """Inverse by the graded recursion eta_l = -eta_0 * sum_{i>=1} sigma_i * eta_{l-i}.

    With ``strict`` the degree-0 part must be the counit (then eta_0 = eps).
    Otherwise it may be any functional supported on group-like tuples with
    nonzero values; on those tuples convolution is pointwise, so eta_0 is
    the pointwise reciprocal.  The result is checked on both sides.
    """
    A = sigma.algebra
    k = sigma.arity
    eps = counit_functional(A, k)
    parts = sigma.homogeneous_parts()
    s0 = parts.get(0, sigma._like({}, 0))
    if strict:
        if s0 != eps:
            raise NotInvertible("degree-0 part is not the counit")
        eta0 = eps
    else:
        if set(s0.values) != set(eps.values):
            raise NotInvertible("degree-0 part vanishes on some group-like tuple")
        if any(not A.is_group_like(i) for key in s0.values for i in key):
            raise NotInvertible("degree-0 part is not supported on group-likes")
        eta0 = sigma._like({key: cyc_inv(v) * eps.values[key] * eps.values[key]
                            for key, v in s0.values.items()}, 0)
    top = k * A.max_degree
    eta = {0: eta0}
    for ell in range(1, top + 1):
        acc_vals = {}
        for i in range(1, ell + 1):
            si = parts.get(i)
            if si is None or si.is_zero():
                continue
            prev = eta[ell - i]
            if prev.is_zero():
                continue
            for key, v in convolve(si, prev).values.items():
                acc(acc_vals, key, -v)
        rest = sigma._like(acc_vals, ell)
        eta[ell] = rest if eta0 is eps else convolve(eta0, rest)
    inv_vals = {}
    for part in eta.values():
        for key, v in part.values.items():
            acc(inv_vals, key, v)
    inv = sigma._like(inv_vals)
    if verify:
        if convolve(sigma, inv) != eps or convolve(inv, sigma) != eps:
            raise NotInvertible("graded recursion did not produce a two-sided inverse")
    return inv


# ---------------------------------------------------------------------------
# composing with multiplication and counits

def compose_with_mult(f: Functional, position: int, mult=None) -> Functional:
    """f o (1 (x) .. m .. (x) 1) with m acting on slots (position, position+1) of the result."""
    A = f.algebra
    M = mult if mult is not None else A.mult
    k = f.arity
    if not 0 <= position < k:
        raise ValueError("position out of range")
    # group f's support by the slot that receives the product
    by_slot = {}
    for key, v in f.values.items():
        by_slot.setdefault(key[position], []).append((key, v))
    out = {}
    n = A.dim
    for a in range(n):
        row = M[a]
        for b in range(n):
            prod_ab = row[b]
            for t, c in prod_ab.items():
                for key, v in by_slot.get(t, ()):
                    acc(out, key[:position] + (a, b) + key[position + 1:], c * v)
    return make_functional(A, k + 1, out, f.degree)


def with_counit(f: Functional, side: str) -> Functional:
    """eps (x) f  (side='left') or f (x) eps  (side='right')."""
    A = f.algebra
    grouplike = [(i, e) for i, e in enumerate(A.counit) if e]
    out = {}
    for key, v in f.values.items():
        for i, e in grouplike:
            nk = (i,) + key if side == "left" else key + (i,)
            out[nk] = v * e
    return make_functional(A, f.arity + 1, out, f.degree)


def tensor_functionals(*fs: Functional) -> Functional:
    """f_1 (x) ... (x) f_r as a functional on the concatenated tensor power."""
    A = fs[0].algebra
    out = {}
    for combo in itertools.product(*(f.values.items() for f in fs)):
        key = ()
        c = A.one_scalar
        for k, v in combo:
            key += k
            c = c * v
        out[key] = c
    degs = [f.degree for f in fs]
    deg = sum(degs) if all(d is not None for d in degs) else None
    return make_functional(A, sum(f.arity for f in fs), out, deg)
