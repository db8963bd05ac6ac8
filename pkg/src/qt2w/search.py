"""Search a circulant weight matrix for column subsets with two row-sum values.

Columns are numbered 1..r as in the printed tables.  A subset S is a hit when
the row sums of W over S take exactly two distinct values, both nonzero.
Because every row of W has the same total, the complement of S has row sums
``total - sums`` and so also takes two values; searching sizes up to r // 2
and complementing covers all sizes.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from typing import Iterable, Iterator

import numpy as np

from .qtform import WeightMatrix

CHUNK = 1 << 15


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True, order=True)
class SearchHit:
    p: int
    w1: int
    w2: int
    columns: tuple[int, ...]
    m: int = 1
    k: int | None = None
    q: int | None = None
    complement: bool = field(default=False, compare=False)

    @property
    def length(self) -> int:
        return self.m * self.p

    def params(self) -> str:
        q = "" if self.q is None else f"_{self.q}"
        return f"[{self.length}, {self.k}; {self.w1}, {self.w2}]{q}"


@dataclass
class SearchConfig:
    p_max: int | None = None  # defaults to r // 2
    mode: str = "exhaustive"  # or "sampled"
    budget: int = 10_000_000
    rng_seed: int | None = None
    with_complements: bool = True
    canonical: bool = True

    def resolved_p_max(self, r: int) -> int:
        p_max = r // 2 if self.p_max is None else self.p_max
        if not 1 <= p_max <= r:
            raise ValueError(f"p_max={p_max} outside 1..{r}")
        return p_max


@dataclass
class SearchResult:
    hits: list[SearchHit]
    examined: int
    truncated: bool = False

    def __iter__(self) -> Iterator[SearchHit]:
        return iter(self.hits)

    def __len__(self) -> int:
        return len(self.hits)


def _subset_index(W: WeightMatrix, S: Iterable[int]) -> list[int]:
    cols = sorted(set(S))
    if not cols:
        raise ValueError("empty column subset")
    if cols[0] < 1 or cols[-1] > W.r:
        raise ValueError(f"columns must lie in 1..{W.r}")
    return [c - 1 for c in cols]


def row_sums(W: WeightMatrix, S: Iterable[int]) -> list[int]:
    idx = _subset_index(W, S)
    return [int(v) for v in W.matrix[:, idx].sum(axis=1)]


def two_values(sums: Iterable[int]) -> tuple[int, int] | None:
    vals = sorted(set(sums))
    if len(vals) == 2 and vals[0] > 0:
        return vals[0], vals[1]
    return None


def _rotations(columns: Iterable[int], r: int) -> list[tuple[int, ...]]:
    cols = [c - 1 for c in columns]
    return [tuple(sorted((c + s) % r + 1 for c in cols)) for s in range(r)]


def canonical_rotation(columns: Iterable[int], r: int) -> tuple[int, ...]:
    """Lexicographically least cyclic rotation of a 1-based column set."""
    return min(_rotations(columns, r))


def _make_hit(W: WeightMatrix, columns, w1: int, w2: int, complement: bool = False) -> SearchHit:
    columns = tuple(sorted(columns))
    return SearchHit(len(columns), w1, w2, columns, m=W.m, k=W.t, q=W.q, complement=complement)


def complement_hit(hit: SearchHit, W: WeightMatrix) -> SearchHit:
    rest = sorted(set(range(1, W.r + 1)) - set(hit.columns))
    if not rest:
        raise ValueError("complement of the full column set is empty")
    total = W.total
    if hit.w2 >= total:
        raise ValueError("complement has a zero row sum")
    return _make_hit(W, rest, total - hit.w2, total - hit.w1, complement=not hit.complement)


def _chunks(it, size: int):
    while True:
        block = list(itertools.islice(it, size))
        if not block:
            return
        yield np.array(block, dtype=np.int64)


def _two_valued(W: np.ndarray, combos: np.ndarray):
    """For each combo row: (lo, hi) of its row sums and whether exactly two values occur."""
    sums = W[:, combos].sum(axis=2)  # r x batch
    s = np.sort(sums, axis=0)
    distinct = 1 + np.count_nonzero(np.diff(s, axis=0), axis=0)
    return s[0], s[-1], distinct == 2


def _exhaustive(W: np.ndarray, p_max: int) -> Iterator[np.ndarray]:
    r = W.shape[0]
    for p in range(1, p_max + 1):
        yield from _chunks(itertools.combinations(range(r), p), CHUNK)


def _sampled(r: int, p_max: int, budget: int, seed: int) -> tuple[list[np.ndarray], bool]:
    rng = random.Random(seed)
    per_p = max(1, budget // p_max)
    batches = []
    truncated = False
    for p in range(1, p_max + 1):
        if math.comb(r, p) <= per_p:
            batches.append(np.array(list(itertools.combinations(range(r), p)), dtype=np.int64))
            continue
        truncated = True
        seen = set()
        draws = []
        for _ in range(per_p):
            S = tuple(sorted(rng.sample(range(r), p)))
            if S not in seen:
                seen.add(S)
                draws.append(S)
        batches.append(np.array(draws, dtype=np.int64))
    return batches, truncated


def search_space(r: int, p_max: int) -> int:
    return sum(math.comb(r, p) for p in range(1, p_max + 1))


def find_two_weight_subsets(W: WeightMatrix, cfg: SearchConfig | None = None) -> SearchResult:
    """Hits sorted by (p, w1, w2, columns).

    Candidates of size <= p_max whose row sums take two values are emitted
    when both values are nonzero; with ``with_complements`` their complements
    are emitted too when the complement sums are nonzero.  In canonical mode
    hits are deduplicated up to cyclic rotation: a direct hit is shown by its
    least rotation, a complement hit as the complement of that rotation.
    """
    cfg = cfg or SearchConfig()
    r = W.r
    p_max = cfg.resolved_p_max(r)
    if cfg.budget <= 0:
        raise ValueError("budget must be positive")
    M = np.asarray(W.matrix, dtype=np.int64)
    total = W.total

    if cfg.mode == "exhaustive":
        space = search_space(r, p_max)
        if space > cfg.budget:
            raise BudgetExceeded(f"exhaustive search needs {space} subsets, budget is {cfg.budget}")
        batches: Iterable[np.ndarray] = _exhaustive(M, p_max)
        truncated = False
    elif cfg.mode == "sampled":
        if cfg.rng_seed is None:
            raise ValueError("sampled mode requires an explicit rng_seed")
        batches, truncated = _sampled(r, p_max, cfg.budget, cfg.rng_seed)
    else:
        raise ValueError(f"unknown mode {cfg.mode!r}")

    found: dict[tuple, SearchHit] = {}
    examined = 0
    full = set(range(1, r + 1))

    def emit(hit: SearchHit):
        key = canonical_rotation(hit.columns, r) if cfg.canonical else hit.columns
        found.setdefault(key, hit)

    seen: set[tuple[int, ...]] = set()  # every rotation of each orbit already handled

    for combos in batches:
        if combos.size == 0:
            continue
        examined += len(combos)
        lo, hi, ok = _two_valued(M, combos)
        for idx in np.flatnonzero(ok):
            cols = tuple(int(c) + 1 for c in combos[idx])
            w1, w2 = int(lo[idx]), int(hi[idx])
            if cfg.canonical:
                if cols in seen:
                    continue
                rots = _rotations(cols, r)
                seen.update(rots)
                cols = min(rots)
            if w1 > 0:
                emit(_make_hit(W, cols, w1, w2))
            if cfg.with_complements and w2 < total and len(cols) < r:
                emit(_make_hit(W, sorted(full - set(cols)), total - w2, total - w1, complement=True))

    hits = sorted(found.values())
    return SearchResult(hits, examined, truncated)
