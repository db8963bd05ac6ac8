"""Brute-force checks on the codes picked out by the search.

Everything here works from explicit generator matrices and full codeword
enumeration, independent of the weight-matrix shortcut.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from .field import FieldTable
from .gfmatrix import row_basis
from .qtform import QtDecomposition, WeightMatrix, realize_blocks
from .search import row_sums

DEFAULT_ENUM_BOUND = 2**24
BLOCK_ENTRIES = 1 << 23


class EnumerationTooLarge(RuntimeError):
    pass


def enumeration_bound() -> int:
    return int(os.environ.get("QT2W_ENUM_BOUND", DEFAULT_ENUM_BOUND))


@dataclass(frozen=True)
class LinearCodeInstance:
    field: FieldTable
    rows: np.ndarray  # k x n, linearly independent

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def n(self) -> int:
        return self.rows.shape[1]

    @property
    def k(self) -> int:
        return self.rows.shape[0]

    @classmethod
    def from_matrix(cls, M, field: FieldTable) -> LinearCodeInstance:
        """Keep the first linearly independent rows of ``M``."""
        M = np.asarray(M, dtype=np.int64)
        if M.ndim != 2 or M.shape[1] == 0:
            raise ValueError("generator must be a non-empty 2-d matrix")
        picked, _ = row_basis(M, field)
        if not picked:
            raise ValueError("generator matrix is zero")
        return cls(field, M[picked])


def build_selected_generator(dec: QtDecomposition, S: Iterable[int]) -> LinearCodeInstance:
    """Row basis of A restricted to the 1-based block columns ``S``."""
    cols = sorted(set(S))
    if not cols:
        raise ValueError("empty column subset")
    if cols[0] < 1 or cols[-1] > dec.r:
        raise ValueError(f"columns must lie in 1..{dec.r}")
    A = realize_blocks(dec, [c - 1 for c in cols])
    return LinearCodeInstance.from_matrix(A, dec.field)


def iter_codewords(code: LinearCodeInstance, block_entries: int = BLOCK_ENTRIES) -> Iterator[np.ndarray]:
    """All q^k codewords (the zero word included) in blocks of rows.

    The trailing generator rows are expanded into a table of combinations;
    each message prefix over the leading rows then adds one offset vector.
    """
    f, G = code.field, np.asarray(code.rows, dtype=np.int64)
    q, n, k = f.q, code.n, code.k
    tail = 0
    while tail < k and q ** (tail + 1) * n <= max(block_entries, q * n):
        tail += 1
    scalars = np.arange(q, dtype=np.int64)[:, None]
    table = np.zeros((1, n), dtype=np.int64)
    for g in G[k - tail :]:
        multiples = f.vmul(scalars, g[None, :])
        table = f.vadd(table[None, :, :], multiples[:, None, :]).reshape(-1, n)
    head = G[: k - tail]
    multiples = [f.vmul(scalars, g[None, :]) for g in head]
    offset = np.zeros(n, dtype=np.int64)
    digits = [0] * len(head)
    while True:
        yield f.vadd(table, offset[None, :])
        # base-q counter over the head rows, updating the offset incrementally
        pos = 0
        while pos < len(head):
            old = digits[pos]
            digits[pos] = (old + 1) % q
            offset = f.vadd(f.vsub(offset, multiples[pos][old]), multiples[pos][digits[pos]])
            if digits[pos]:
                break
            pos += 1
        if pos == len(head):
            return


def weight_distribution(code: LinearCodeInstance, bound: int | None = None) -> dict[int, int]:
    """Weight -> count over the q^k - 1 nonzero codewords."""
    bound = enumeration_bound() if bound is None else bound
    size = code.q**code.k
    if size > bound:
        raise EnumerationTooLarge(f"{size} codewords exceeds enumeration bound {bound}")
    counts = np.zeros(code.n + 1, dtype=np.int64)
    for block in iter_codewords(code):
        counts += np.bincount(np.count_nonzero(block, axis=1), minlength=code.n + 1)
    counts[0] -= 1
    if counts[0]:
        raise AssertionError("generator rows are linearly dependent")
    return {w: int(c) for w, c in enumerate(counts) if c}


def is_two_weight(dist: dict[int, int]) -> tuple[int, int] | None:
    support = sorted(w for w, c in dist.items() if c and w)
    if len(support) == 2:
        return support[0], support[1]
    return None


def is_projective(code: LinearCodeInstance) -> bool:
    """No zero column and no column a scalar multiple of another."""
    f = code.field
    seen = set()
    for col in np.asarray(code.rows, dtype=np.int64).T:
        nz = np.flatnonzero(col)
        if nz.size == 0:
            return False
        normal = tuple(f.vmul(f.inv(int(col[nz[0]])), col).tolist())
        if normal in seen:
            return False
        seen.add(normal)
    return True


def oracle_weights_equal_row_sums(dec: QtDecomposition, S: Iterable[int], W: WeightMatrix) -> bool:
    """Cross-check the row-sum shortcut against the realized code.

    Each realized row of A over S must weigh its block row's sum, and the
    enumerated weight distribution must be exactly m * (q - 1) codewords per
    block row at that block row's sum.
    """
    S = sorted(set(S))
    sums = row_sums(W, S)
    A = realize_blocks(dec, [c - 1 for c in S])
    m = dec.m
    row_weights = np.count_nonzero(A, axis=1)
    for i, s in enumerate(sums):
        if not np.all(row_weights[i * m : (i + 1) * m] == s):
            return False
    if 0 in sums:
        return False
    code = LinearCodeInstance.from_matrix(A, dec.field)
    dist = weight_distribution(code)
    expected = Counter()
    for s in sums:
        expected[s] += m * (dec.field.q - 1)
    return dist == dict(expected)


@dataclass
class Verification:
    rank: int
    distribution: dict[int, int]
    weights: tuple[int, int] | None
    projective: bool


def verify_code(code: LinearCodeInstance) -> Verification:
    dist = weight_distribution(code)
    return Verification(code.k, dist, is_two_weight(dist), is_projective(code))
