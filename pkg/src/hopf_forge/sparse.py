"""Sparse vectors as dicts key -> CyclotomicScalar, with no explicit zeros."""

from __future__ import annotations


def acc(d: dict, key, value) -> None:
    if key in d:
        s = d[key] + value
        if s:
            d[key] = s
        else:
            del d[key]
    elif value:
        d[key] = value


def add_scaled(d: dict, other: dict, c=None) -> None:
    if c is None:
        for k, v in other.items():
            acc(d, k, v)
    else:
        for k, v in other.items():
            acc(d, k, v * c)


def scaled(d: dict, c) -> dict:
    out = {}
    for k, v in d.items():
        w = v * c
        if w:
            out[k] = w
    return out


def combine(*pairs) -> dict:
    """Linear combination of sparse vectors given as (coefficient, vector) pairs."""
    out = {}
    for c, vec in pairs:
        add_scaled(out, vec, c)
    return out


def difference(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, v in b.items():
        acc(out, k, -v)
    return out
