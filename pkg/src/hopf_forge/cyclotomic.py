"""Exact arithmetic in the cyclotomic field Q(z), z a primitive L-th root of unity.

Elements are stored in the power basis 1, z, ..., z^(phi(L)-1) of
Q[z]/Phi_L(z) as a tuple of integer numerators over one positive common
denominator.  All scalars in the package live here.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence

__all__ = [
    "CyclotomicScalar",
    "ConductorMismatch",
    "ScalarSyntaxError",
    "cyclotomic_polynomial",
    "euler_phi",
    "root_of_unity",
    "scalar",
    "cyc_arith",
    "cyc_inv",
    "multiplicative_order",
    "parse_scalar",
    "print_scalar",
]

MAX_EXPONENT = 10**6

# memo tables for products and sums; values repeat heavily in verification sweeps
_CACHE_LIMIT = 200_000
_MUL_CACHE: dict = {}
_ADD_CACHE: dict = {}


class ConductorMismatch(ValueError):
    """Raised when scalars from different cyclotomic fields are combined."""


class ScalarSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


# ---------------------------------------------------------------------------
# integer polynomials (lists of ints, lowest degree first)

def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1]
        if c % lead:
            raise ArithmeticError("inexact polynomial division")
        c //= lead
        out[k] = c
        if c:
            for t, d in enumerate(den):
                num[k + t] -= c * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Phi_n as a coefficient tuple, via Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d."""
    if n < 1:
        raise ValueError("conductor must be a positive integer")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divexact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


@lru_cache(maxsize=None)
def _reduction_table(n: int) -> tuple[tuple[int, ...], ...]:
    # row k holds z^k in the power basis, for 0 <= k <= 2*phi - 2
    phi = euler_phi(n)
    cyc = cyclotomic_polynomial(n)
    rows = []
    cur = [0] * phi
    cur[0] = 1
    for _ in range(max(2 * phi - 1, 1)):
        rows.append(tuple(cur))
        # multiply by z and reduce with z^phi = -sum cyc[t] z^t
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for t in range(phi):
                cur[t] -= top * cyc[t]
    return tuple(rows)


@lru_cache(maxsize=None)
def _power_of_z(n: int, k: int) -> tuple[int, ...]:
    phi = euler_phi(n)
    k %= n
    if k < phi:
        out = [0] * phi
        out[k] = 1
        return tuple(out)
    prev = _power_of_z(n, k - 1)
    top = prev[-1]
    cur = [0] + list(prev[:-1])
    if top:
        cyc = cyclotomic_polynomial(n)
        for t in range(phi):
            cur[t] -= top * cyc[t]
    return tuple(cur)


def _normalize(num: Sequence[int], den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        num = [-c for c in num]
        den = -den
    if den != 1:
        g = gcd(den, *num)
        if g != 1:
            num = [c // g for c in num]
            den //= g
    if not any(num):
        return tuple(0 for _ in num), 1
    return tuple(num), den


class CyclotomicScalar:
    """Element of Q(z_L).  Immutable; hashable; arithmetic only within one conductor."""

    __slots__ = ("conductor", "num", "den", "_hash")

    def __init__(self, conductor: int, num: Sequence[int], den: int = 1, _normalized: bool = False):
        if not _normalized:
            if len(num) != euler_phi(conductor):
                raise ValueError(
                    f"expected {euler_phi(conductor)} coordinates for conductor {conductor}, got {len(num)}"
                )
            if den == 0:
                raise ZeroDivisionError("zero denominator")
            num, den = _normalize([int(c) for c in num], int(den))
        self.conductor = conductor
        self.num = num
        self.den = den
        self._hash = None

    # -- construction helpers -------------------------------------------------
    @classmethod
    def from_coeffs(cls, conductor: int, coeffs: Iterable) -> "CyclotomicScalar":
        fr = [Fraction(c) for c in coeffs]
        den = 1
        for c in fr:
            den = den * c.denominator // gcd(den, c.denominator)
        return cls(conductor, [int(c * den) for c in fr], den)

    @classmethod
    def rational(cls, conductor: int, value) -> "CyclotomicScalar":
        value = Fraction(value)
        num = [0] * euler_phi(conductor)
        num[0] = value.numerator
        return cls(conductor, num, value.denominator)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.num)

    # -- predicates -------------------------------------------------------------
    def is_zero(self) -> bool:
        return not any(self.num)

    def is_one(self) -> bool:
        return self.den == 1 and self.num[0] == 1 and not any(self.num[1:])

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def __bool__(self) -> bool:
        return any(self.num)

    # -- arithmetic -------------------------------------------------------------
    def _coerce(self, other) -> "CyclotomicScalar":
        if isinstance(other, CyclotomicScalar):
            if other.conductor != self.conductor:
                raise ConductorMismatch(
                    f"conductor {self.conductor} vs {other.conductor}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicScalar.rational(self.conductor, other)
        return NotImplemented

    def __add__(self, other):
        if type(other) is not CyclotomicScalar or other.conductor != self.conductor:
            other = self._coerce(other)
            if other is NotImplemented:
                return other
        key = (self.conductor, self.num, self.den, other.num, other.den)
        hit = _ADD_CACHE.get(key)
        if hit is not None:
            return hit
        if self.den == other.den:
            num = [a + b for a, b in zip(self.num, other.num)]
            den = self.den
        else:
            num = [a * other.den + b * self.den for a, b in zip(self.num, other.num)]
            den = self.den * other.den
        n, d = _normalize(num, den)
        out = CyclotomicScalar(self.conductor, n, d, True)
        if len(_ADD_CACHE) > _CACHE_LIMIT:
            _ADD_CACHE.clear()
        _ADD_CACHE[key] = out
        return out

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicScalar(self.conductor, tuple(-a for a in self.num), self.den, True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if type(other) is not CyclotomicScalar or other.conductor != self.conductor:
            other = self._coerce(other)
            if other is NotImplemented:
                return other
        key = (self.conductor, self.num, self.den, other.num, other.den)
        hit = _MUL_CACHE.get(key)
        if hit is not None:
            return hit
        a, b = self.num, other.num
        phi = len(a)
        if not any(a[1:]):
            c = a[0]
            num = [c * y for y in b]
        elif not any(b[1:]):
            c = b[0]
            num = [c * x for x in a]
        else:
            prod = [0] * (2 * phi - 1)
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        if y:
                            prod[i + j] += x * y
            num = prod[:phi]
            table = _reduction_table(self.conductor)
            for k in range(phi, 2 * phi - 1):
                c = prod[k]
                if c:
                    row = table[k]
                    for t in range(phi):
                        if row[t]:
                            num[t] += c * row[t]
        n, d = _normalize(num, self.den * other.den)
        out = CyclotomicScalar(self.conductor, n, d, True)
        if len(_MUL_CACHE) > _CACHE_LIMIT:
            _MUL_CACHE.clear()
        _MUL_CACHE[key] = out
        return out

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * cyc_inv(other)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * cyc_inv(self)

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return cyc_inv(self) ** (-k)
        result = CyclotomicScalar.rational(self.conductor, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- comparison -------------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, CyclotomicScalar):
            return (
                self.conductor == other.conductor
                and self.den == other.den
                and self.num == other.num
            )
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return (
                self.is_rational()
                and Fraction(self.num[0], self.den) == other
            )
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.conductor, self.num, self.den))
        return self._hash

    def __repr__(self):
        return f"CyclotomicScalar({self.conductor}, {print_scalar(self)!r})"

    def __str__(self):
        return print_scalar(self)


# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def root_of_unity(conductor: int, k: int) -> CyclotomicScalar:
    """z^k for the fixed primitive L-th root z."""
    return CyclotomicScalar(conductor, _power_of_z(conductor, k % conductor), 1, True)


def scalar(conductor: int, value=0) -> CyclotomicScalar:
    if isinstance(value, CyclotomicScalar):
        if value.conductor != conductor:
            raise ConductorMismatch(f"conductor {value.conductor} vs {conductor}")
        return value
    if isinstance(value, str):
        return parse_scalar(value, conductor)
    return CyclotomicScalar.rational(conductor, value)


def cyc_arith(lhs: CyclotomicScalar, rhs: CyclotomicScalar, op: str) -> CyclotomicScalar:
    if lhs.conductor != rhs.conductor:
        raise ConductorMismatch(f"conductor {lhs.conductor} vs {rhs.conductor}")
    if op == "add":
        return lhs + rhs
    if op == "sub":
        return lhs - rhs
    if op == "mul":
        return lhs * rhs
    raise ValueError(f"unknown operation {op!r}")


def _frac_poly_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _frac_poly_divmod(a: list[Fraction], b: list[Fraction]):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    while len(_frac_poly_trim(a)) >= len(b):
        shift = len(a) - len(b)
        c = a[-1] / b[-1]
        q[shift] = c
        for t, d in enumerate(b):
            a[shift + t] -= c * d
        _frac_poly_trim(a)
    return q, a


def _frac_poly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _frac_poly_sub(a, b):
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    return _frac_poly_trim([Fraction(c) for c in out])


@lru_cache(maxsize=4096)
def _inverse_cached(conductor: int, num: tuple[int, ...], den: int) -> CyclotomicScalar:
    phi = euler_phi(conductor)
    # extended Euclid on (Phi_L, x): find s with s*x = 1 mod Phi_L
    r0 = [Fraction(c) for c in cyclotomic_polynomial(conductor)]
    r1 = _frac_poly_trim([Fraction(c, den) for c in num])
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        q, r = _frac_poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _frac_poly_sub(s0, _frac_poly_mul(q, s1))
    c = r1[0]
    inv = [x / c for x in s1] + [Fraction(0)] * phi
    return CyclotomicScalar.from_coeffs(conductor, inv[:phi])


def cyc_inv(x: CyclotomicScalar) -> CyclotomicScalar:
    """Multiplicative inverse by extended gcd against Phi_L."""
    if x.is_zero():
        raise ZeroDivisionError("inverse of zero in cyclotomic field")
    if x.is_rational():
        return CyclotomicScalar.rational(x.conductor, Fraction(x.den, x.num[0]))
    return _inverse_cached(x.conductor, x.num, x.den)


def multiplicative_order(x: CyclotomicScalar) -> int | None:
    """Least n >= 1 with x**n == 1, or None when x is not a root of unity."""
    if x.is_zero():
        raise ValueError("order of zero is undefined")
    bound = x.conductor * 2 if x.conductor % 2 else x.conductor
    power = x
    for n in range(1, bound + 1):
        if power.is_one():
            return n
        power = power * x
    return None


# ---------------------------------------------------------------------------
# scalar text grammar
#
#   expr   := term (('+' | '-') term)*
#   term   := unary (('*' | '/') unary)*
#   unary  := '-' unary | power
#   power  := atom ('^' INT)?
#   atom   := INT | 'z' | '(' expr ')'

class _ScalarParser:
    def __init__(self, text: str, conductor: int):
        self.text = text
        self.conductor = conductor
        self.tokens = self._tokenize(text)
        self.pos = 0

    def _tokenize(self, text):
        tokens = []
        i = 0
        while i < len(text):
            ch = text[i]
            if ch.isspace():
                i += 1
            elif ch.isdigit():
                j = i
                while j < len(text) and text[j].isdigit():
                    j += 1
                tokens.append(("int", int(text[i:j]), i))
                i = j
            elif ch in "+-*/^()z":
                tokens.append((ch, ch, i))
                i += 1
            else:
                raise ScalarSyntaxError(f"unexpected character {ch!r}", i)
        tokens.append(("end", None, len(text)))
        return tokens

    def peek(self):
        return self.tokens[self.pos]

    def take(self, kind):
        tok = self.tokens[self.pos]
        if tok[0] != kind:
            expected = "end of input" if kind == "end" else repr(kind)
            raise ScalarSyntaxError(f"expected {expected}, found {tok[1]!r}", tok[2])
        self.pos += 1
        return tok

    def parse(self) -> CyclotomicScalar:
        value = self.expr()
        self.take("end")
        return value

    def expr(self):
        value = self.term()
        while self.peek()[0] in "+-":
            op = self.take(self.peek()[0])[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while self.peek()[0] in "*/":
            tok = self.take(self.peek()[0])
            rhs = self.unary()
            if tok[0] == "*":
                value = value * rhs
            else:
                if rhs.is_zero():
                    raise ScalarSyntaxError("division by zero", tok[2])
                value = value / rhs
        return value

    def unary(self):
        if self.peek()[0] == "-":
            self.take("-")
            return -self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "^":
            self.take("^")
            tok = self.take("int")
            if tok[1] > MAX_EXPONENT:
                raise ScalarSyntaxError("exponent too large", tok[2])
            if self._last_atom_is_z:
                return root_of_unity(self.conductor, tok[1])
            return base ** tok[1]
        return base

    def atom(self):
        self._last_atom_is_z = False
        kind, value, where = self.peek()
        if kind == "int":
            self.take("int")
            return CyclotomicScalar.rational(self.conductor, value)
        if kind == "z":
            self.take("z")
            self._last_atom_is_z = True
            return root_of_unity(self.conductor, 1)
        if kind == "(":
            self.take("(")
            value = self.expr()
            self.take(")")
            self._last_atom_is_z = False
            return value
        raise ScalarSyntaxError(f"unexpected token {value!r}", where)


def parse_scalar(text: str, conductor: int) -> CyclotomicScalar:
    """Parse an arithmetic expression in z into an exact element of Q(z_L)."""
    return _ScalarParser(text, conductor).parse()


def _format_fraction(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def print_scalar(x: CyclotomicScalar) -> str:
    """Canonical text: ascending powers of z, rationals as p/q."""
    parts = []
    for k, c in enumerate(x.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = _format_fraction(mag)
        else:
            zpart = "z" if k == 1 else f"z^{k}"
            body = zpart if mag == 1 else f"{_format_fraction(mag)}*{zpart}"
        parts.append((c < 0, body))
    if not parts:
        return "0"
    neg, body = parts[0]
    out = ("-" if neg else "") + body
    for neg, body in parts[1:]:
        out += (" - " if neg else " + ") + body
    return out
