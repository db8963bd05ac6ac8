"""Slow reference implementations used to freeze and cross-check expected values.

None of these touch the exp/log tables or numpy code paths under test.
"""

import itertools


def gfp_poly_mulmod(a, b, modulus, p):
    """Multiply residues (low-first digit lists) modulo a monic polynomial over GF(p).

    ``modulus`` holds the low coefficients of the monic modulus.
    """
    e = len(modulus)
    prod = [0] * (2 * e - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] = (prod[i + j] + x * y) % p
    for k in range(len(prod) - 1, e - 1, -1):
        c = prod[k]
        if c:
            prod[k] = 0
            for j, mc in enumerate(modulus):
                prod[k - e + j] = (prod[k - e + j] - c * mc) % p
    return prod[:e]


def digits(v, p, e):
    return [(v // p**i) % p for i in range(e)]


def undigits(ds, p):
    return sum(d * p**i for i, d in enumerate(ds))


def naive_mul(field, a, b):
    p, e = field.p, field.e
    return undigits(gfp_poly_mulmod(digits(a, p, e), digits(b, p, e), list(field.modulus), p), p)


def naive_add(field, a, b):
    p, e = field.p, field.e
    return undigits([(x + y) % p for x, y in zip(digits(a, p, e), digits(b, p, e))], p)


def brute_order(field, a):
    x, n = a, 1
    while x != 1:
        x = naive_mul(field, x, a)
        n += 1
    return n


def root_order_mod(h_coeffs, field):
    """Multiplicative order of x modulo the monic ``h`` over ``field`` by iteration.

    Returns None if x never returns to 1 within q^t steps.
    """
    t = len(h_coeffs) - 1
    low = list(h_coeffs[:-1])
    state = [1] + [0] * (t - 1)
    for n in range(1, field.q**t + 1):
        lead = state[-1]
        state = [0] + state[:-1]
        if lead:
            state = [field.sub(s, field.mul(lead, c)) for s, c in zip(state, low)]
        if state == [1] + [0] * (t - 1):
            return n
    return None


def naive_weight_distribution(field, rows):
    """Enumerate all q^k messages with scalar arithmetic."""
    k, n = len(rows), len(rows[0])
    dist = {}
    for msg in itertools.product(range(field.q), repeat=k):
        if not any(msg):
            continue
        word = [0] * n
        for c, row in zip(msg, rows):
            if c:
                word = [naive_add(field, w, naive_mul(field, c, int(v))) for w, v in zip(word, row)]
        w = sum(1 for v in word if v)
        dist[w] = dist.get(w, 0) + 1
    return dist


def subsets_two_valued(W, r):
    """Every nonempty subset (1-based) whose row sums take exactly two values, by brute force."""
    out = {}
    for p in range(1, r + 1):
        for S in itertools.combinations(range(r), p):
            sums = [sum(int(W[i][j]) for j in S) for i in range(r)]
            vals = sorted(set(sums))
            if len(vals) == 2 and vals[0] > 0:
                out[tuple(c + 1 for c in S)] = (vals[0], vals[1])
    return out
