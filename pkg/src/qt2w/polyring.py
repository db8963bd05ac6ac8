"""Dense polynomials over GF(q), least significant coefficient first."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

from .field import FieldTable, prime_factors

# degree of the zero polynomial
NEG_INF = float("-inf")


@dataclass(frozen=True)
class Poly:
    field: FieldTable
    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = tuple(int(v) for v in self.coeffs)
        end = len(c)
        while end and c[end - 1] == 0:
            end -= 1
        object.__setattr__(self, "coeffs", c[:end])

    @classmethod
    def zero(cls, field: FieldTable) -> Poly:
        return cls(field, ())

    @classmethod
    def one(cls, field: FieldTable) -> Poly:
        return cls(field, (1,))

    @classmethod
    def monomial(cls, field: FieldTable, k: int, c: int = 1) -> Poly:
        return cls(field, (0,) * k + (c,))

    @property
    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def padded(self, length: int) -> list[int]:
        """Coefficient list zero-padded (never truncated) to ``length``."""
        if len(self.coeffs) > length:
            raise ValueError(f"degree {self.degree} does not fit in length {length}")
        return list(self.coeffs) + [0] * (length - len(self.coeffs))

    def __str__(self) -> str:
        return format_poly(self)

    def __add__(self, other: Poly) -> Poly:
        return poly_add(self, other)

    def __sub__(self, other: Poly) -> Poly:
        return poly_sub(self, other)

    def __mul__(self, other: Poly) -> Poly:
        return poly_mul(self, other)


def _same_field(a: Poly, b: Poly) -> FieldTable:
    if a.field != b.field:
        raise ValueError(f"field mismatch: {a.field!r} vs {b.field!r}")
    return a.field


def poly_add(a: Poly, b: Poly) -> Poly:
    f = _same_field(a, b)
    n = max(len(a.coeffs), len(b.coeffs))
    return Poly(f, [f.add(a.coefficient(i), b.coefficient(i)) for i in range(n)])


def poly_sub(a: Poly, b: Poly) -> Poly:
    f = _same_field(a, b)
    n = max(len(a.coeffs), len(b.coeffs))
    return Poly(f, [f.sub(a.coefficient(i), b.coefficient(i)) for i in range(n)])


def poly_scale(a: Poly, c: int) -> Poly:
    f = a.field
    return Poly(f, [f.mul(c, v) for v in a.coeffs])


def poly_mul(a: Poly, b: Poly) -> Poly:
    f = _same_field(a, b)
    if a.is_zero() or b.is_zero():
        return Poly.zero(f)
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        if x == 0:
            continue
        for j, y in enumerate(b.coeffs):
            if y:
                out[i + j] = f.add(out[i + j], f.mul(x, y))
    return Poly(f, out)


def poly_divmod(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    """Long division: ``num == den * quotient + remainder``."""
    f = _same_field(num, den)
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    rem = list(num.coeffs)
    dd = len(den.coeffs) - 1
    lead_inv = f.inv(den.coeffs[-1])
    if len(rem) <= dd:
        return Poly.zero(f), num
    quot = [0] * (len(rem) - dd)
    for k in range(len(rem) - 1, dd - 1, -1):
        c = rem[k]
        if c == 0:
            continue
        c = f.mul(c, lead_inv)
        quot[k - dd] = c
        for j, d in enumerate(den.coeffs):
            if d:
                rem[k - dd + j] = f.sub(rem[k - dd + j], f.mul(c, d))
    return Poly(f, quot), Poly(f, rem[:dd])


def poly_mod(a: Poly, mod: Poly) -> Poly:
    return poly_divmod(a, mod)[1]


def poly_powmod(base: Poly, k: int, mod: Poly) -> Poly:
    result = Poly.one(base.field)
    base = poly_mod(base, mod)
    while k:
        if k & 1:
            result = poly_mod(result * base, mod)
        base = poly_mod(base * base, mod)
        k >>= 1
    return poly_mod(result, mod)


def mul_mod_twisted(a: Poly, b: Poly, m: int, lam: int) -> Poly:
    """``a * b`` in GF(q)[x] / (x^m - lam)."""
    f = _same_field(a, b)
    if lam == 0:
        raise ValueError("twist lambda must be nonzero")
    if a.degree >= m or b.degree >= m:
        raise ValueError(f"operands must have degree < {m}")
    out = [0] * m
    for i, x in enumerate(a.coeffs):
        if x == 0:
            continue
        for j, y in enumerate(b.coeffs):
            if y == 0:
                continue
            term = f.mul(x, y)
            k = i + j
            if k >= m:
                k -= m
                term = f.mul(term, lam)
            out[k] = f.add(out[k], term)
    return Poly(f, out)


def hamming_weight(a: Poly) -> int:
    return sum(1 for c in a.coeffs if c)


def is_primitive(h: Poly) -> bool:
    """True iff ``h`` is monic and the class of x has order q^t - 1 modulo ``h``."""
    t = h.degree
    if t < 1 or h.coeffs[-1] != 1 or h.coeffs[0] == 0:
        return False
    f = h.field
    order = f.q**t - 1
    x = Poly.monomial(f, 1)
    one = Poly.one(f)
    if poly_powmod(x, order, h) != one:
        return False
    return all(poly_powmod(x, order // r, h) != one for r in prime_factors(order))


def primitive_polynomials(field: FieldTable, t: int) -> Iterator[Poly]:
    """Monic primitive polynomials of degree ``t`` in ascending packed order.

    The packed order reads the coefficient vector as a base-q number with the
    constant term least significant, so over GF(2) x^4 + x + 1 precedes
    x^4 + x^3 + 1.
    """
    if t < 2:
        raise ValueError("degree must be >= 2")
    for high_first in itertools.product(range(field.q), repeat=t):
        low = tuple(reversed(high_first))
        if low[0] == 0:
            continue
        h = Poly(field, low + (1,))
        if is_primitive(h):
            yield h


def find_primitive_polynomial(field: FieldTable, t: int, index: int = 0) -> Poly:
    if index < 0:
        raise ValueError("index must be >= 0")
    count = 0
    for h in primitive_polynomials(field, t):
        if count == index:
            return h
        count += 1
    raise IndexError(f"only {count} primitive polynomials of degree {t} over {field!r}")


def poly_from_exponents(field: FieldTable, terms: Iterable[tuple[int, int]]) -> Poly:
    """Poly from ``(exponent, coefficient)`` pairs."""
    terms = list(terms)
    size = max((k for k, _ in terms), default=-1) + 1
    coeffs = [0] * size
    for k, c in terms:
        coeffs[k] = field.add(coeffs[k], c)
    return Poly(field, coeffs)


def format_poly(a: Poly) -> str:
    """Render as ``c0 + c1*x + c2*x^2``; GF(4) coefficients use 0,1,a,b."""
    if a.is_zero():
        return "0"
    parts = []
    for k, c in enumerate(a.coeffs):
        if c == 0:
            continue
        sym = a.field.format_element(c)
        if k == 0:
            parts.append(sym)
            continue
        mono = "x" if k == 1 else f"x^{k}"
        parts.append(mono if c == 1 else f"{sym}*{mono}")
    return " + ".join(parts)
