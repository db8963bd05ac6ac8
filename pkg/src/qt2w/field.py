"""Finite field arithmetic over GF(p^e) backed by exp/log tables.

Elements are plain ints in ``[0, q)``.  For ``e > 1`` an element packs the
coefficients of its residue polynomial as base-``p`` digits, constant term in
the lowest digit, so in GF(4) the generator ``a`` (the class of ``x``) is 2 and
``b = 1 + a`` is 3.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

MAX_FIELD_SIZE = 2**20

GF4_SYMBOLS = "01ab"


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` by trial division, ascending."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Split ``q`` into ``(p, e)`` with ``q == p**e``; raise if not a prime power."""
    factors = prime_factors(q) if q > 1 else []
    if len(factors) != 1:
        raise ValueError(f"{q} is not a prime power")
    p = factors[0]
    e = 0
    while q > 1:
        q //= p
        e += 1
    return p, e


def _cycle(p: int, e: int, modulus: Sequence[int]) -> list[int] | None:
    """Powers of x modulo ``modulus`` as packed ints, or None if x is not primitive.

    ``modulus`` holds the low coefficients ``c_0..c_{e-1}`` of the monic
    polynomial ``x^e + c_{e-1} x^{e-1} + ... + c_0`` over GF(p).
    """
    q = p**e
    digits = [1] + [0] * (e - 1)
    seq = []
    for _ in range(q - 1):
        value = sum(d * p**i for i, d in enumerate(digits))
        if seq and value == 1:
            return None
        seq.append(value)
        lead = digits[-1]
        digits = [0] + digits[:-1]
        if lead:
            digits = [(d - lead * c) % p for d, c in zip(digits, modulus)]
    value = sum(d * p**i for i, d in enumerate(digits))
    if value != 1:
        return None
    return seq


@dataclass(frozen=True)
class FieldTable:
    """GF(p^e) realized by powers of a primitive element.

    ``modulus`` lists the low coefficients of the monic defining polynomial,
    constant term first.  ``log_table[0]`` is -1.
    """

    p: int
    e: int
    modulus: tuple[int, ...]
    exp_table: tuple[int, ...]
    log_table: tuple[int, ...]

    @property
    def q(self) -> int:
        return self.p**self.e

    @property
    def order(self) -> int:
        """Order of the multiplicative group."""
        return self.q - 1

    @property
    def primitive_element(self) -> int:
        return self.exp_table[1 % self.order]

    def __repr__(self) -> str:
        return f"GF({self.q})"

    def elements(self) -> range:
        return range(self.q)

    def _check(self, a: int) -> None:
        if not 0 <= a < self.q:
            raise ValueError(f"{a} is not an element of {self!r}")

    # scalar arithmetic

    def add(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        return self._digitwise(a, b, 1)

    def sub(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a - b) % self.p
        if self.p == 2:
            return a ^ b
        return self._digitwise(a, b, -1)

    def neg(self, a: int) -> int:
        return self.sub(0, a)

    def _digitwise(self, a: int, b: int, sign: int) -> int:
        p = self.p
        out = 0
        scale = 1
        for _ in range(self.e):
            out += ((a % p + sign * (b % p)) % p) * scale
            a //= p
            b //= p
            scale *= p
        return out

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp_table[(self.log_table[a] + self.log_table[b]) % self.order]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in {self!r}")
        return self.exp_table[(-self.log_table[a]) % self.order]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        if a == 0:
            if n < 0:
                raise ZeroDivisionError(f"0 has no inverse in {self!r}")
            return 1 if n == 0 else 0
        return self.exp_table[(self.log_table[a] * n) % self.order]

    def element_order(self, a: int) -> int:
        """Smallest ``n >= 1`` with ``a**n == 1``."""
        self._check(a)
        if a == 0:
            raise ValueError("0 has no multiplicative order")
        k = self.log_table[a]
        return self.order // math.gcd(k, self.order)

    def elements_of_order(self, n: int) -> list[int]:
        if n < 1 or self.order % n:
            raise ValueError(f"{n} does not divide {self.order}")
        return [a for a in range(1, self.q) if self.element_order(a) == n]

    # vectorized arithmetic on integer arrays

    @functools.cached_property
    def _exp_np(self) -> np.ndarray:
        return np.array(self.exp_table, dtype=np.int64)

    @functools.cached_property
    def _log_np(self) -> np.ndarray:
        return np.array(self.log_table, dtype=np.int64)

    @functools.cached_property
    def add_table(self) -> np.ndarray:
        """Full q x q addition table (only built for small fields)."""
        if self.q > 1024:
            raise ValueError("addition table only built for q <= 1024")
        a = np.arange(self.q)
        return self.vadd(a[:, None], a[None, :])

    def vadd(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.e == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        p = self.p
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        scale = 1
        for _ in range(self.e):
            out += ((a % p + b % p) % p) * scale
            a = a // p
            b = b // p
            scale *= p
        return out

    def vneg(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return a.copy()
        if self.e == 1:
            return (-a) % self.p
        p = self.p
        out = np.zeros_like(a)
        scale = 1
        for _ in range(self.e):
            out += ((-(a % p)) % p) * scale
            a = a // p
            scale *= p
        return out

    def vsub(self, a, b) -> np.ndarray:
        return self.vadd(a, self.vneg(b))

    def vmul(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.e == 1:
            return (a * b) % self.p
        # log of 0 is -1; those entries are masked out below
        prod = self._exp_np[(self._log_np[a] + self._log_np[b]) % self.order]
        return np.where((a == 0) | (b == 0), 0, prod)

    # text rendering

    def format_element(self, a: int) -> str:
        if self.q == 4:
            return GF4_SYMBOLS[a]
        return str(a)

    def parse_element(self, token: str) -> int:
        token = token.strip()
        if self.q == 4 and token in GF4_SYMBOLS:
            return GF4_SYMBOLS.index(token)
        value = int(token)
        self._check(value)
        return value


def make_field(p: int, e: int = 1, max_size: int = MAX_FIELD_SIZE) -> FieldTable:
    """Build GF(p^e) over the smallest primitive modulus.

    Candidate monic polynomials are ordered by their packed base-p value
    (constant term least significant), so GF(8) uses x^3 + x + 1.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if e < 1:
        raise ValueError("extension degree must be >= 1")
    q = p**e
    if q > max_size:
        raise ValueError(f"field size {q} exceeds bound {max_size}")
    for high_first in itertools.product(range(p), repeat=e):
        modulus = tuple(reversed(high_first))
        if modulus[0] == 0:
            continue
        seq = _cycle(p, e, modulus)
        if seq is None:
            continue
        log = [-1] * q
        for i, v in enumerate(seq):
            log[v] = i
        return FieldTable(p, e, modulus, tuple(seq), tuple(log))
    raise RuntimeError(f"no primitive polynomial of degree {e} over GF({p})")


@functools.lru_cache(maxsize=None)
def gf(q: int) -> FieldTable:
    """Cached GF(q) for a prime power ``q``."""
    p, e = prime_power(q)
    return make_field(p, e)
