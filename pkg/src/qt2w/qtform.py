"""Quasi-twisted block form of a consta-cyclic simplex code of composite length.

Reordering rows and columns of the n x n consta-cyclic matrix as
``0, r, ..., (m-1)r, 1, r+1, ...`` turns it into an r x r array of m x m
twistulant blocks.  Block row 0 is described by defining polynomials
a_1..a_r; block row i is block row i-1 rotated right by one block, the
wrapped entry multiplied by x modulo x^m - lambda.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .field import FieldTable
from .gfmatrix import element_dtype
from .polyring import Poly, hamming_weight, mul_mod_twisted
from .simplex import SimplexCode, full_constacyclic_matrix


def factorizations(n: int) -> list[tuple[int, int]]:
    """All ``(m, r)`` with ``m * r == n``, ascending in m."""
    return [(m, n // m) for m in range(1, n + 1) if n % m == 0]


def qt_permutation(n: int, m: int, r: int) -> tuple[list[int], list[int]]:
    if m < 1 or r < 1 or m * r != n:
        raise ValueError(f"{n} != {m} * {r}")
    order = [j * r + i for i in range(r) for j in range(m)]
    return order, list(order)


def permute(M: np.ndarray, m: int, r: int) -> np.ndarray:
    rows, cols = qt_permutation(M.shape[0], m, r)
    return M[np.ix_(rows, cols)]


@dataclass(frozen=True)
class QtDecomposition:
    code: SimplexCode
    m: int
    r: int
    polys: tuple[Poly, ...]

    @property
    def field(self) -> FieldTable:
        return self.code.field

    @property
    def lam(self) -> int:
        return self.code.lam

    @property
    def t(self) -> int:
        return self.code.t

    @property
    def trivial(self) -> bool:
        return self.m == 1 or self.r == 1


def defining_polys_direct(code: SimplexCode, m: int, r: int) -> tuple[Poly, ...]:
    """Fast path: coefficient j of a_{i+1} is the coefficient of x^(j*r + i) in g."""
    qt_permutation(code.n, m, r)
    g = code.g
    return tuple(Poly(code.field, [g.coefficient(j * r + i) for j in range(m)]) for i in range(r))


def decompose(code: SimplexCode, m: int, r: int, method: str = "explicit") -> QtDecomposition:
    """Extract a_1..a_r from block row 0 of the permuted consta-cyclic matrix.

    ``method="direct"`` reads them straight off the coefficients of g.
    """
    if method == "direct":
        polys = defining_polys_direct(code, m, r)
    elif method == "explicit":
        rows, cols = qt_permutation(code.n, m, r)
        first = full_constacyclic_matrix(code)[rows[0], cols]
        polys = tuple(Poly(code.field, first[i * m : (i + 1) * m]) for i in range(r))
    else:
        raise ValueError(f"unknown method {method!r}")
    return QtDecomposition(code, m, r, polys)


def block_poly_row(dec: QtDecomposition, i: int) -> list[Poly]:
    if not 0 <= i < dec.r:
        raise IndexError(f"block row {i} out of range for r={dec.r}")
    # x itself reduces to lambda when m = 1
    x = Poly.monomial(dec.field, 1) if dec.m > 1 else Poly(dec.field, (dec.lam,))
    row = list(dec.polys)
    for _ in range(i):
        row = [mul_mod_twisted(x, row[-1], dec.m, dec.lam)] + row[:-1]
    return row


def realize_blocks(dec: QtDecomposition, selected: list[int] | None = None) -> np.ndarray:
    """The (r*m) x (len(selected)*m) matrix A realized from the defining polynomials.

    ``selected`` holds 0-based block columns (all by default).  Vectorized
    version of ``block_poly_row`` followed by twistulant expansion; the
    property tests check both against each other and against the permuted
    consta-cyclic matrix.
    """
    f, m, r, lam = dec.field, dec.m, dec.r, dec.lam
    cols = list(range(r)) if selected is None else list(selected)
    base = np.array([p.padded(m) for p in dec.polys], dtype=np.int64).reshape(r, m)
    out = np.zeros((r * m, len(cols) * m), dtype=element_dtype(f))
    blocks = base
    for i in range(r):
        row = blocks[cols]
        for j in range(m):
            out[i * m + j] = row.reshape(-1)
            shifted = np.empty_like(row)
            shifted[:, 1:] = row[:, :-1]
            shifted[:, 0] = f.vmul(lam, row[:, -1])
            row = shifted
        # rotate right one block; the wrapped block is multiplied by x
        wrapped = blocks[-1].copy()
        xw = np.empty_like(wrapped)
        xw[1:] = wrapped[:-1]
        xw[0] = f.mul(lam, int(wrapped[-1]))
        blocks = np.vstack([xw[None, :], blocks[:-1]])
    return out


@dataclass(frozen=True)
class WeightMatrix:
    """Circulant r x r matrix of defining-polynomial weights plus provenance."""

    matrix: np.ndarray
    m: int = 1
    q: int | None = None
    t: int | None = None
    lam: int | None = None
    h_index: int | None = None

    @property
    def r(self) -> int:
        return self.matrix.shape[0]

    @property
    def d(self) -> list[int]:
        return [int(v) for v in self.matrix[0]]

    @property
    def total(self) -> int:
        """Common row sum (q^(t-1) for simplex-derived matrices)."""
        return int(self.matrix[0].sum())

    @classmethod
    def circulant(cls, d, **kw) -> WeightMatrix:
        d = np.asarray(d, dtype=np.int64)
        r = len(d)
        idx = (np.arange(r)[None, :] - np.arange(r)[:, None]) % r
        return cls(d[idx], **kw)

    def is_circulant(self) -> bool:
        W = self.matrix
        return all(np.array_equal(W[i], np.roll(W[i - 1], 1)) for i in range(1, self.r))


def weight_matrix(dec: QtDecomposition) -> WeightMatrix:
    # x-multiplication modulo x^m - lambda only moves or scales coefficients by
    # lambda != 0, so entry (i, j) has the weight of a_{(j - i) mod r}
    d = [hamming_weight(p) for p in dec.polys]
    return WeightMatrix.circulant(d, m=dec.m, q=dec.code.q, t=dec.t, lam=dec.lam, h_index=dec.code.h_index)


def weight_matrix_from_rows(dec: QtDecomposition) -> np.ndarray:
    """W computed literally from every entry of every block row (slow; for checks)."""
    return np.array([[hamming_weight(p) for p in block_poly_row(dec, i)] for i in range(dec.r)], dtype=np.int64)


def format_blocks(M: np.ndarray, field: FieldTable, m: int) -> str:
    """Render with a gap between m-wide blocks, GF(4) as 0,1,a,b."""
    lines = []
    for row in np.asarray(M):
        cells = [field.format_element(int(v)) for v in row]
        lines.append("  ".join(" ".join(cells[k : k + m]) for k in range(0, len(cells), m)))
    return "\n".join(lines)
