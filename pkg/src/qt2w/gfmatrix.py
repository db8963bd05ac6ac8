"""Dense matrices over GF(q) stored as small unsigned integer arrays."""

from __future__ import annotations

import numpy as np

from .field import FieldTable


def element_dtype(field: FieldTable):
    if field.q <= 256:
        return np.uint8
    if field.q <= 65536:
        return np.uint16
    return np.uint32


def row_basis(M, field: FieldTable, limit: int | None = None, chunk: int = 512) -> tuple[list[int], np.ndarray]:
    """Greedy row basis of ``M``.

    Returns the indices of the rows that are linearly independent of all
    earlier rows, and those rows in eliminated (echelon) form.  Rows are
    reduced a chunk at a time.  Scanning stops once ``limit`` rows are found.
    """
    binary = field.q == 2
    M = np.asarray(M, dtype=np.uint8 if binary else np.int64)
    picked: list[int] = []
    echelon: list[tuple[int, np.ndarray]] = []

    def reduce(C: np.ndarray, piv: int, b: np.ndarray) -> np.ndarray:
        hit = np.flatnonzero(C[:, piv])
        if hit.size:
            if binary:
                C[hit] ^= b[None, :]
            else:
                C[hit] = field.vsub(C[hit], field.vmul(C[hit, piv : piv + 1], b[None, :]))
        return C

    for lo in range(0, M.shape[0], chunk):
        C = M[lo : lo + chunk].copy()
        for piv, b in echelon:
            C = reduce(C, piv, b)
        for i in range(C.shape[0]):
            nz = np.flatnonzero(C[i])
            if nz.size == 0:
                continue
            piv = int(nz[0])
            v = C[i].copy() if binary else field.vmul(field.inv(int(C[i, piv])), C[i])
            echelon.append((piv, v))
            picked.append(lo + i)
            if limit is not None and len(picked) >= limit:
                break
            reduce(C[i + 1 :], piv, v)
        if limit is not None and len(picked) >= limit:
            break
    ech = np.array([b for _, b in echelon], dtype=np.int64).reshape(len(echelon), M.shape[1])
    return picked, ech


def rank(M, field: FieldTable) -> int:
    return len(row_basis(M, field)[0])


def format_matrix(M, field: FieldTable) -> str:
    return "\n".join(" ".join(field.format_element(int(v)) for v in row) for row in np.asarray(M))
