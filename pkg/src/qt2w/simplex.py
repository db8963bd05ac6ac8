"""Consta-cyclic simplex codes and twistulant matrices."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .field import FieldTable, gf
from .gfmatrix import element_dtype
from .polyring import Poly, find_primitive_polynomial, poly_divmod, poly_mul, primitive_polynomials


class IncompatibleTwist(ValueError):
    """x^n - lambda is not divisible by the chosen h(x)."""


def simplex_length(q: int, t: int) -> int:
    return (q**t - 1) // (q - 1)


def default_lambda(field: FieldTable) -> int:
    """Smallest element of order q - 1 (1 for GF(2))."""
    return field.elements_of_order(field.order)[0]


def twist_binomial(field: FieldTable, n: int, lam: int) -> Poly:
    """x^n - lam."""
    return Poly(field, (field.neg(lam),) + (0,) * (n - 1) + (1,))


@dataclass(frozen=True)
class SimplexCode:
    field: FieldTable
    t: int
    lam: int
    h: Poly
    g: Poly
    h_index: int

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def n(self) -> int:
        return simplex_length(self.q, self.t)

    @property
    def k(self) -> int:
        return self.t

    @property
    def weight(self) -> int:
        """Common weight q^(t-1) of every nonzero codeword."""
        return self.q ** (self.t - 1)

    @property
    def cyclic_equivalent(self) -> bool:
        # recorded only; no transformation to a cyclic code is attempted
        return math.gcd(self.t, self.q - 1) == 1


def iter_compatible(field: FieldTable, t: int, lam: int) -> Iterator[tuple[int, Poly]]:
    """``(h_index, h)`` for primitive degree-t polynomials dividing x^n - lam."""
    target = twist_binomial(field, simplex_length(field.q, t), lam)
    for i, h in enumerate(primitive_polynomials(field, t)):
        if poly_divmod(target, h)[1].is_zero():
            yield i, h


def compatible_h_indices(field: FieldTable, t: int, lam: int) -> list[int]:
    return [i for i, _ in iter_compatible(field, t, lam)]


def build_simplex(q: int, t: int, lam: int | None = None, h_index: int | None = None) -> SimplexCode:
    """Generator g = (x^n - lam) / h of a lam-consta-cyclic simplex code.

    ``lam`` defaults to the smallest element of order q - 1.  With
    ``h_index=None`` the first primitive polynomial compatible with ``lam``
    is used; an explicit index that does not divide x^n - lam raises
    :class:`IncompatibleTwist`.
    """
    if t < 2:
        raise ValueError("t must be >= 2")
    field = gf(q)
    if lam is None:
        lam = default_lambda(field)
    if not 0 < lam < q or field.element_order(lam) != q - 1:
        raise ValueError(f"lambda={lam} does not have order {q - 1} in {field!r}")
    n = simplex_length(q, t)
    target = twist_binomial(field, n, lam)
    if h_index is None:
        first = next(iter_compatible(field, t, lam), None)
        if first is None:
            raise IncompatibleTwist(f"no primitive polynomial of degree {t} divides x^{n} - {lam}")
        h_index, h = first
    else:
        h = find_primitive_polynomial(field, t, h_index)
    g, rem = poly_divmod(target, h)
    if not rem.is_zero():
        raise IncompatibleTwist(
            f"h_index={h_index} (h = {h}) does not divide x^{n} - {field.format_element(lam)}; "
            "try another h_index or lambda"
        )
    assert poly_mul(g, h) == target
    return SimplexCode(field, t, lam, h, g, h_index)


@dataclass(frozen=True)
class TwistulantSpec:
    m: int
    lam: int
    c: Poly


def twist_shift(row: np.ndarray, field: FieldTable, lam: int) -> np.ndarray:
    """(c_0, ..., c_{m-1}) -> (lam*c_{m-1}, c_0, ..., c_{m-2})."""
    out = np.empty_like(row)
    out[1:] = row[:-1]
    out[0] = field.mul(lam, int(row[-1]))
    return out


def twistulant_matrix(spec: TwistulantSpec) -> np.ndarray:
    field = spec.c.field
    m = spec.m
    rows = np.zeros((m, m), dtype=element_dtype(field))
    rows[0] = spec.c.padded(m)
    for i in range(1, m):
        rows[i] = twist_shift(rows[i - 1], field, spec.lam)
    return rows


def full_constacyclic_matrix(code: SimplexCode) -> np.ndarray:
    """n x n twistulant matrix of g; its row space is the simplex code."""
    return twistulant_matrix(TwistulantSpec(code.n, code.lam, code.g))
