"""Values transcribed from the GF(4), n = 21 worked example.

GF(4) symbols: 0, 1, a (=2), b = 1 + a (=3).
"""

import numpy as np

SYM = {"0": 0, "1": 1, "a": 2, "b": 3}


def parse_rows(text):
    return np.array([[SYM[c] for c in line.split()] for line in text.strip().splitlines()], dtype=np.int64)


LAMBDA = 3
H_INDEX = 2

# first row of the printed 21 x 21 consta-cyclic matrix
C_FIRST_ROW = parse_rows("1 b 0 b b b a 1 1 a 1 a 0 1 0 a b 1 1 0 0")[0]

# the polynomial as printed in formula form: {exponent: coefficient}
C_PRINTED_FORMULA = {0: 1, 1: 3, 3: 3, 4: 3, 5: 3, 6: 2, 7: 1, 8: 1, 9: 2, 10: 1, 11: 2, 15: 1, 16: 3, 17: 1, 18: 1}

# first block row of the printed permuted matrix A (rows 0..2)
A_BLOCK_ROW0 = parse_rows(
    """
1 1 0 b 1 a 0 a b b 1 1 b a 1 b 0 0 a 1 0
0 1 1 1 b 1 a 0 a b b 1 b b a 0 b 0 0 a 1
b 0 1 b 1 b 1 a 0 b b b 1 b b 0 0 b b 0 a
"""
)

# rows 4..5 of the printed A; printed row 3 drops an entry and is omitted
A_ROWS_4_5 = parse_rows(
    """
b 0 a 0 1 1 1 b 1 a 0 a b b 1 b b a 0 b 0
1 b 0 b 0 1 b 1 b 1 a 0 b b b 1 b b 0 0 b
"""
)

# printed defining polynomials a_1..a_7, coefficients low first
A_PRINTED = [
    (1, 1),
    (3, 2, 1),  # as printed; the printed matrices give (3, 1, 2)
    (0, 2, 3),
    (3, 1, 1),
    (3, 2, 1),
    (3,),
    (2, 1),
]
A_FROM_MATRIX = [tuple(int(v) for v in A_BLOCK_ROW0[0, 3 * i : 3 * i + 3]) for i in range(7)]

W = np.array(
    [
        [2, 3, 2, 3, 3, 1, 2],
        [2, 2, 3, 2, 3, 3, 1],
        [1, 2, 2, 3, 2, 3, 3],
        [3, 1, 2, 2, 3, 2, 3],
        [3, 3, 1, 2, 2, 3, 2],
        [2, 3, 3, 1, 2, 2, 3],
        [3, 2, 3, 3, 1, 2, 2],
    ]
)

SUMS_124 = [8, 6, 6, 6, 8, 6, 8]
SUMS_3567 = [8, 10, 10, 10, 8, 10, 8]

G_124 = parse_rows(
    """
1 1 0 b 1 a b 1 1
0 1 1 1 b 1 b b 1
b 0 1 b 1 b b b b
"""
)

G_3567 = parse_rows(
    """
0 a b b a 1 b 0 0 a 1 0
a 0 a b b a 0 b 0 0 a 1
1 a 0 1 b b 0 0 b b 0 a
"""
)
