import numpy as np
import pytest

from gf4_example import C_FIRST_ROW, H_INDEX, LAMBDA
from sweep import sweep_params
from qt2w.field import gf
from qt2w.gfmatrix import rank
from qt2w.polyring import Poly, poly_mul
from qt2w.simplex import (
    IncompatibleTwist,
    TwistulantSpec,
    build_simplex,
    compatible_h_indices,
    default_lambda,
    full_constacyclic_matrix,
    twist_binomial,
    twistulant_matrix,
)
from qt2w.verifier import LinearCodeInstance, weight_distribution


def gf2_divmod_int(num, den):
    """Carry-less division on bit masks (bit i = coefficient of x^i)."""
    q = 0
    while num and num.bit_length() >= den.bit_length():
        s = num.bit_length() - den.bit_length()
        q |= 1 << s
        num ^= den << s
    return q, num


def test_example_gf4_generator():
    code = build_simplex(4, 3, lam=LAMBDA, h_index=H_INDEX)
    assert (code.n, code.k, code.g.degree) == (21, 3, 18)
    assert list(code.g.padded(21)) == list(C_FIRST_ROW)


def test_binary_t4():
    code = build_simplex(2, 4, lam=1, h_index=0)
    assert (code.n, code.k) == (15, 4)
    expected, rem = gf2_divmod_int((1 << 15) | 1, 0b10011)
    assert rem == 0
    assert code.g.coeffs == tuple((expected >> i) & 1 for i in range(expected.bit_length()))
    assert code.g.degree == 11


def test_ternary_t2_exact():
    code = build_simplex(3, 2, lam=2, h_index=0)
    assert (code.n, code.k) == (4, 2)
    # x^4 - 2 = x^4 + 1 over GF(3); multiply back with schoolbook integers mod 3
    g, h = code.g.coeffs, code.h.coeffs
    prod = [0] * (len(g) + len(h) - 1)
    for i, x in enumerate(g):
        for j, y in enumerate(h):
            prod[i + j] = (prod[i + j] + x * y) % 3
    assert prod == [1, 0, 0, 0, 1]


def test_lambda_must_have_full_order():
    with pytest.raises(ValueError):
        build_simplex(5, 2, lam=4)  # order 2, not 4
    with pytest.raises(ValueError):
        build_simplex(2, 1)


def test_incompatible_h_index_is_an_error():
    F = gf(4)
    good = compatible_h_indices(F, 3, LAMBDA)
    bad = next(i for i in range(12) if i not in good)
    with pytest.raises(IncompatibleTwist):
        build_simplex(4, 3, lam=LAMBDA, h_index=bad)
    assert H_INDEX in good


def test_default_lambda():
    assert default_lambda(gf(2)) == 1
    assert default_lambda(gf(3)) == 2
    assert default_lambda(gf(4)) == 2


def test_cyclic_equivalence_metadata():
    assert build_simplex(4, 2).cyclic_equivalent is True  # gcd(2, 3) = 1
    assert build_simplex(4, 3, lam=LAMBDA).cyclic_equivalent is False


def test_twistulant_examples():
    F4, F3, F2 = gf(4), gf(3), gf(2)
    T = twistulant_matrix(TwistulantSpec(3, 3, Poly(F4, (1, 1))))
    # same rows as the first block of the printed matrix A
    assert T.tolist() == [[1, 1, 0], [0, 1, 1], [3, 0, 1]]
    assert twistulant_matrix(TwistulantSpec(2, 1, Poly.one(F2))).tolist() == [[1, 0], [0, 1]]
    T = twistulant_matrix(TwistulantSpec(3, 2, Poly(F3, (0, 0, 1))))
    assert T.tolist() == [[0, 0, 1], [2, 0, 0], [0, 2, 0]]
    with pytest.raises(ValueError):
        twistulant_matrix(TwistulantSpec(2, 1, Poly(F2, (0, 0, 1))))


def test_example_full_matrix():
    code = build_simplex(4, 3, lam=LAMBDA, h_index=H_INDEX)
    C = full_constacyclic_matrix(code)
    assert C.shape == (21, 21)
    assert list(C[0]) == list(C_FIRST_ROW)
    assert rank(C, code.field) == 3
    assert set(np.count_nonzero(C, axis=1)) == {16}


@pytest.mark.slow
@pytest.mark.parametrize("q,t", sweep_params())
def test_simplex_invariants_sweep(q, t):
    F = gf(q)
    for lam in F.elements_of_order(q - 1)[:2]:
        code = build_simplex(q, t, lam=lam)
        assert poly_mul(code.g, code.h) == twist_binomial(F, code.n, lam)
        assert code.g.degree == code.n - t
        C = full_constacyclic_matrix(code)
        # consecutive rows are lambda-consta-cyclic shifts
        assert np.array_equal(C[1:, 1:], C[:-1, :-1])
        assert np.array_equal(C[1:, 0], F.vmul(lam, C[:-1, -1]))
        G = LinearCodeInstance.from_matrix(C, F)
        assert G.k == t
        assert weight_distribution(G) == {q ** (t - 1): q**t - 1}
