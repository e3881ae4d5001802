"""Named data and a small enumerated corpus of quantum-linear-space data.

The corpus keeps |G| <= 24, at most two vertices and N_i <= 5.  It is
enumerated by families rather than exhaustively; ``max_dimension`` trims
it for the sweeps whose cost grows with dim(A)^3.
"""

from __future__ import annotations

from math import gcd

from .abelian_group import FiniteAbelianGroup, PointedDatum, validate_datum

__all__ = ["taft", "linked_pair", "quantum_plane", "independent_pair", "corpus", "CORPUS_LIMITS"]

CORPUS_LIMITS = {"group_order": 24, "theta": 2, "N": 5}


def taft(N: int = 3, p: int = 2, a=1) -> PointedDatum:
    """Rank one over Z/(Np): g the generator, chi(g) a primitive N-th root, mu = (a)."""
    n = N * p
    return PointedDatum(FiniteAbelianGroup([n]), n, [(1,)], [(p,)], mu=[a])


def linked_pair(m: int = 3, n: int = 2, lam=1, mu=(1, 1)) -> PointedDatum:
    """Two vertices over Z/(mn) with g_1 = g_2 the generator and chi_2 = chi_1^{-1} of order m."""
    order = m * n
    return PointedDatum(
        FiniteAbelianGroup([order]), order, [(1,), (1,)], [(n,), (order - n,)],
        mu=list(mu), lam={(0, 1): lam} if lam else {},
    )


def quantum_plane() -> PointedDatum:
    """q = -1 on both vertices over Z/2 x Z/2, no liftings: the exterior algebra bosonized."""
    return PointedDatum(FiniteAbelianGroup([2, 2]), 2, [(1, 0), (0, 1)], [(1, 0), (0, 1)])


def independent_pair(N: int, twisted: bool = True, mu=(0, 0)) -> PointedDatum:
    """Two vertices over Z/N x Z/N; with ``twisted`` the off-diagonal q_12 = q^{-1}, q_21 = q."""
    chi = [(1, 1), (N - 1, 1)] if twisted else [(1, 0), (0, 1)]
    return PointedDatum(FiniteAbelianGroup([N, N]), N, [(1, 0), (0, 1)], chi, mu=list(mu))


def _rank_one(max_dimension):
    for n in range(2, CORPUS_LIMITS["group_order"] + 1):
        for N in range(2, CORPUS_LIMITS["N"] + 1):
            if n % N or n * N > max_dimension:
                continue
            p = n // N
            mus = [0, 1] if N < n else [0]
            for a in mus:
                yield f"taft N={N} p={p} mu={a}", taft(N, p, a)
            if p > 1:
                # a second primitive root: chi = -p
                d = PointedDatum(FiniteAbelianGroup([n]), n, [(1,)], [(n - p,)], mu=[mus[-1]])
                yield f"rank-one N={N} |G|={n} chi=-{p} mu={mus[-1]}", d


def _linked(max_dimension):
    for order in range(3, CORPUS_LIMITS["group_order"] + 1):
        for m in range(2, CORPUS_LIMITS["N"] + 1):
            if order % m or order * m * m > max_dimension:
                continue
            n = order // m
            yield f"linked-pair m={m} n={n} lambda=0", linked_pair(m, n, lam=0, mu=(0, 0))
            mu = (1, 1) if n > 1 else (0, 0)
            yield f"linked-pair m={m} n={n} lambda=1 mu={mu[0]}", linked_pair(m, n, lam=1, mu=mu)


def _products(max_dimension):
    for a, b in [(2, 2), (2, 4), (2, 6), (2, 8), (2, 10), (2, 12), (3, 3), (3, 6), (4, 4)]:
        G = FiniteAbelianGroup([a, b])
        # g_1 = (1, 0) of order a, g_2 = (0, 1) of order b
        for c2 in range(1, b):
            N2 = b // gcd(b, c2)
            if N2 > CORPUS_LIMITS["N"] or a * b * a * N2 > max_dimension:
                continue
            plain = PointedDatum(G, b, [(1, 0), (0, 1)], [(1, 0), (0, c2)])
            # off-diagonal twist: q_12 = chi_2(g_1) and q_21 = chi_1(g_2) inverse to each other
            twisted = PointedDatum(G, b, [(1, 0), (0, 1)], [(1, b // a), (a - 1, c2)])
            for tag, d in (("", plain), (" twisted", twisted)):
                yield f"product Z/{a} x Z/{b}{tag} chi_2={d.chi[1].exponents}", d
                if N2 < b:
                    lifted = d.with_parameters(mu=[0, 1])
                    yield f"product Z/{a} x Z/{b}{tag} chi_2={d.chi[1].exponents} mu=(0,1)", lifted


def corpus(max_dimension: int | None = None) -> list[tuple[str, PointedDatum]]:
    """Valid data within the corpus limits and dim(A) <= max_dimension, in a fixed order."""
    if max_dimension is None:
        max_dimension = CORPUS_LIMITS["group_order"] * CORPUS_LIMITS["N"] ** CORPUS_LIMITS["theta"]
    out = []
    seen = set()
    for family in (_rank_one, _linked, _products):
        for name, d in family(max_dimension):
            if validate_datum(d) or d.dimension > max_dimension:
                continue
            if d.theta > CORPUS_LIMITS["theta"] or max(d.N) > CORPUS_LIMITS["N"]:
                continue
            h = d.datum_hash()
            if h in seen:
                continue
            seen.add(h)
            out.append((name, d))
    return out
