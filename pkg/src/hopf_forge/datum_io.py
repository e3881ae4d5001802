"""Reading and writing datum files.

The format is line oriented::

    [group]
    invariant_factors = 6
    [scalars]
    conductor = 6
    [vertices]
    theta = 1
    g.1 = 1
    chi.1 = 2
    [parameters]
    mu.1 = 1

Vertex indices are 1-based.  ``#`` starts a comment.  Character entries are
exponents c_j in 0..m_j-1, the value on the j-th generator being
z^(c_j * L / m_j).  Missing mu and lambda entries default to 0.
"""

from __future__ import annotations

import re
from pathlib import Path

from .abelian_group import Character, FiniteAbelianGroup, PointedDatum, validate_datum
from .cyclotomic import ScalarSyntaxError, parse_scalar, print_scalar

__all__ = ["DatumSyntaxError", "DatumValidationError", "parse_datum_text", "parse_datum_file", "format_datum"]

_SECTIONS = {
    "group": {"invariant_factors"},
    "scalars": {"conductor"},
    "vertices": {"theta", "g", "chi", "N"},
    "parameters": {"mu", "lambda"},
}
_KEY = re.compile(r"^([A-Za-z_]+)((?:\.\d+)*)$")


class DatumSyntaxError(ValueError):
    def __init__(self, line: int | None, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class DatumValidationError(ValueError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


def _int_list(text, lineno):
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise DatumSyntaxError(lineno, f"expected comma-separated integers, got {text!r}") from None


def _unquote(text):
    if len(text) >= 2 and text[0] == text[-1] and text[0] in "\"'":
        return text[1:-1]
    return text


def parse_datum_text(text: str, validate: bool = True) -> PointedDatum:
    section = None
    seen = {}
    entries = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("["):
            if not line.endswith("]"):
                raise DatumSyntaxError(lineno, f"malformed section header {line!r}")
            section = line[1:-1].strip()
            if section not in _SECTIONS:
                raise DatumSyntaxError(lineno, f"unknown section [{section}]")
            continue
        if "=" not in line:
            raise DatumSyntaxError(lineno, f"expected key = value, got {line!r}")
        if section is None:
            raise DatumSyntaxError(lineno, "entry before any section header")
        key, value = (s.strip() for s in line.split("=", 1))
        m = _KEY.match(key)
        if not m:
            raise DatumSyntaxError(lineno, f"malformed key {key!r}")
        name = m.group(1)
        idx = tuple(int(t) for t in m.group(2).split(".")[1:])
        if name not in _SECTIONS[section]:
            raise DatumSyntaxError(lineno, f"unknown key {key!r} in [{section}]")
        arity = {"g": 1, "chi": 1, "N": 1, "mu": 1, "lambda": 2}.get(name, 0)
        if len(idx) != arity:
            raise DatumSyntaxError(lineno, f"key {key!r} needs {arity} index(es)")
        if (name, idx) in seen:
            raise DatumSyntaxError(lineno, f"duplicate key {key!r} (first on line {seen[(name, idx)]})")
        seen[(name, idx)] = lineno
        if not value:
            raise DatumSyntaxError(lineno, f"empty value for {key!r}")
        entries.append((lineno, name, idx, _unquote(value)))

    def single(name):
        for e in entries:
            if e[1] == name:
                return e
        raise DatumSyntaxError(None, f"missing required key {name!r}")

    ln, _, _, v = single("invariant_factors")
    factors = _int_list(v, ln)
    if any(f < 2 for f in factors):
        raise DatumSyntaxError(ln, "invariant factors must be >= 2")
    if any(b % a for a, b in zip(factors, factors[1:])):
        raise DatumSyntaxError(ln, "invariant factors must divide each other in order")
    G = FiniteAbelianGroup(factors)
    ln, _, _, v = single("conductor")
    try:
        L = int(v)
    except ValueError:
        raise DatumSyntaxError(ln, f"conductor must be an integer, got {v!r}") from None
    if L < 1:
        raise DatumSyntaxError(ln, "conductor must be positive")
    ln, _, _, v = single("theta")
    try:
        theta = int(v)
    except ValueError:
        raise DatumSyntaxError(ln, f"theta must be an integer, got {v!r}") from None
    if theta < 1:
        raise DatumSyntaxError(ln, "theta must be at least 1")

    k = len(factors)
    g = [None] * theta
    chi = [None] * theta
    declared = [None] * theta
    mu = ["0"] * theta
    lam = {}
    for ln, name, idx, v in entries:
        if not idx:
            continue
        if any(not 1 <= i <= theta for i in idx):
            raise DatumSyntaxError(ln, f"vertex index out of range 1..{theta}")
        i = idx[0] - 1
        if name in ("g", "chi"):
            vec = _int_list(v, ln)
            if len(vec) != k:
                raise DatumSyntaxError(ln, f"{name}.{i + 1} needs {k} entries")
            for e, mj in zip(vec, factors):
                if not 0 <= e < mj:
                    what = "character exponent" if name == "chi" else "group exponent"
                    raise DatumSyntaxError(ln, f"{what} {e} outside 0..{mj - 1}")
            if name == "g":
                g[i] = tuple(vec)
            else:
                chi[i] = Character(tuple(vec))
        elif name == "N":
            declared[i] = _int_list(v, ln)[0]
        else:
            try:
                s = parse_scalar(v, L)
            except ScalarSyntaxError as exc:
                raise DatumSyntaxError(ln, str(exc)) from None
            if name == "mu":
                mu[i] = s
            else:
                j = idx[1] - 1
                if i >= j:
                    raise DatumSyntaxError(ln, "lambda.i.j needs i < j")
                lam[(i, j)] = s
    for i in range(theta):
        if g[i] is None:
            raise DatumSyntaxError(None, f"missing g.{i + 1}")
        if chi[i] is None:
            raise DatumSyntaxError(None, f"missing chi.{i + 1}")
    for mj in factors:
        if L % mj:
            raise DatumSyntaxError(None, f"conductor {L} is not a multiple of invariant factor {mj}")

    d = PointedDatum(G, L, g, chi, mu=mu, lam=lam,
                     declared_N=declared if any(n is not None for n in declared) else None)
    if validate:
        violations = validate_datum(d)
        if violations:
            raise DatumValidationError(violations)
    return d


def parse_datum_file(path, validate: bool = True) -> PointedDatum:
    return parse_datum_text(Path(path).read_text(), validate=validate)


def format_datum(d: PointedDatum) -> str:
    """Inverse of :func:`parse_datum_text` (parameters in canonical scalar text)."""
    lines = [
        "[group]",
        f"invariant_factors = {','.join(map(str, d.group.invariant_factors))}",
        "[scalars]",
        f"conductor = {d.conductor}",
        "[vertices]",
        f"theta = {d.theta}",
    ]
    for i in range(d.theta):
        lines.append(f"g.{i + 1} = {','.join(map(str, d.g[i]))}")
        lines.append(f"chi.{i + 1} = {','.join(map(str, d.chi[i].exponents))}")
    lines.append("[parameters]")
    for i in range(d.theta):
        if not d.mu[i].is_zero():
            lines.append(f"mu.{i + 1} = {print_scalar(d.mu[i])}")
    for (i, j), v in sorted(d.lam.items()):
        if not v.is_zero():
            lines.append(f"lambda.{i + 1}.{j + 1} = {print_scalar(v)}")
    return "\n".join(lines) + "\n"
