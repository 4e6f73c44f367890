"""Published tables and small rosters, kept verbatim for regression checks."""

from __future__ import annotations

from .poly import Poly

q = Poly.gen()
_1q = 1 + q

# gamma_{n,k}(q), 1 <= n <= 5
GAMMA_Q = {
    (1, 0): Poly.const(1),
    (2, 0): Poly.const(1),
    (3, 0): Poly.const(1),
    (3, 1): q * _1q,
    (4, 0): Poly.const(1),
    (4, 1): q * _1q * (q ** 2 + q + 2),
    (5, 0): Poly.const(1),
    (5, 1): q * _1q * (q ** 4 + 2 * q ** 3 + 3 * q ** 2 + 2 * q + 3),
    (5, 2): q ** 2 * _1q ** 2 * (q ** 4 + q ** 3 + q ** 2 + 1),
}

# sum of q^inv over DE_{n,k}, 0 <= n <= 4
INV_DE = {
    (0, 0): Poly.const(1),
    (1, 0): Poly(),
    (2, 0): Poly(), (2, 1): q,
    (3, 0): Poly(), (3, 1): q ** 2,
    (4, 0): Poly(), (4, 1): q ** 3, (4, 2): q ** 2 + q ** 4 + 2 * q ** 5 + q ** 6,
}

GAMMA2 = [
    [1],
    [0, 1],
    [0, 1, 1],
    [0, 1, 3, 1],
    [0, 1, 9, 6, 1],
    [0, 1, 23, 35, 10, 1],
    [0, 1, 53, 184, 95, 15, 1],
]

HATGAMMA2 = [
    [1],
    [0, 1],
    [0, 1, 3],
    [0, 1, 7, 11],
    [0, 1, 15, 54, 57],
    [0, 1, 31, 197, 458, 361],
    [0, 1, 63, 648, 2551, 4379, 2763],
]

# coefficient lists of D_n^(2)(t) and d_n^(2)(t), n = 1..4
D2 = {
    1: [0, 1],
    2: [0, 1, 3, 1],
    3: [0, 1, 7, 13, 7, 1],
    4: [0, 1, 15, 57, 87, 57, 15, 1],
}
d2 = {
    1: [0, 1],
    2: [0, 4, 1],
    3: [0, 8, 20, 1],
    4: [0, 16, 144, 72, 1],
}

DD_4_1 = ["1324", "1423", "2314", "2413", "3412", "2134", "3124", "4123"]
DE_4_1 = ["4123"]
DE_4_2 = ["2143", "3412", "4321", "4312", "3421"]
CODERANGEMENTS_4 = ["2143", "3142", "3241", "4123", "4132", "4213", "4231", "4312", "4321"]

# the 3-colored example permutation and its history
EXAMPLE_COLORED = "4 7^1 2 5^1 1^2 6 3"
EXAMPLE_HISTORY_STEPS = ["NE", "NE", "E", "E", "SE", "E", "SE"]
EXAMPLE_HISTORY_LABELS = [(0, -2), (-1, 0), (1, 0), (-1, 1), (2, 2), (0, 1), (1, 1)]
EXAMPLE_WEIGHT = {"q": 6, "t": 2, "tt": 2, "w": 2, "wt": 1, "x": 1, "y": 2, "yt": 2}

# length-11 3-colored history
LONG_HISTORY_LABELS = [(-1, 1), (0, -2), (-2, 0), (-2, 3), (0, -1), (3, 1),
                       (1, 1), (1, 0), (0, 0), (1, 2), (1, 1)]
LONG_HISTORY_STEPS = ["E", "NE", "NE", "E", "NE", "SE", "SE", "E", "NE", "SE", "SE"]
