"""Published binding energies (-E, fm^-1) for m1 = m2 = 5 fm^-1, V0 = 1.

Each row is (n, l, a, approximation, numerical). Values are copied as
printed, including the few entries given to five decimals.
"""
from __future__ import annotations

from typing import NamedTuple

SCREENINGS = (0.01, 0.005, 0.001)


class GoldenRow(NamedTuple):
    n: int
    l: int
    a: float
    approx: float
    numeric: float


def _expand(rows):
    out = []
    for n, l, *pairs in rows:
        for a, (approx, numeric) in zip(SCREENINGS, zip(pairs[::2], pairs[1::2])):
            out.append(GoldenRow(n, l, a, approx, numeric))
    return tuple(out)


# n, l, then (approx, numeric) for a = 0.01, 0.005, 0.001
SS_TABLE = _expand([
    (1, 0, 0.5032, 0.5035, 0.5082, 0.5084, 0.5122, 0.5124),
    (2, 0, 0.1843, 0.1912, 0.1892, 0.1960, 0.1932, 0.2000),
    (2, 1, 0.0709, 0.0718, 0.07568, 0.0765, 0.0796, 0.0803),
    (3, 0, 0.0907, 0.0978, 0.0956, 0.1025, 0.0995, 0.1064),
    (3, 1, 0.0419, 0.0416, 0.0465, 0.0460, 0.0504, 0.0499),
    (3, 2, 0.0258, 0.0258, 0.0303, 0.0300, 0.0341, 0.0337),
    (4, 0, 0.0516, 0.0568, 0.0563, 0.0615, 0.0602, 0.0653),
    (4, 1, 0.0262, 0.0266, 0.0307, 0.0308, 0.0345, 0.0346),
    (4, 2, 0.0167, 0.0165, 0.0210, 0.0204, 0.0248, 0.0241),
    (4, 3, 0.0109, 0.0116, 0.0149, 0.0153, 0.0187, 0.0189),
    (5, 0, 0.0317, 0.0355, 0.0362, 0.0399, 0.0401, 0.0437),
    (6, 0, 0.0203, 0.0231, 0.0247, 0.0273, 0.0285, 0.0311),
    (7, 0, 0.0133, 0.0154, 0.0174, 0.0194, 0.0211, 0.0231),
])

SCHRODINGER_TABLE = _expand([
    (1, 0, 0.2926, 0.2944, 0.3025, 0.3019, 0.3105, 0.3103),
    (2, 0, 0.1191, 0.1229, 0.1289, 0.1287, 0.1369, 0.1342),
    (2, 1, 0.0584, 0.0577, 0.0682, 0.0684, 0.0761, 0.0762),
    (3, 0, 0.0584, 0.0680, 0.0682, 0.0731, 0.0761, 0.0778),
    (3, 1, 0.0305, 0.0334, 0.0401, 0.0413, 0.0480, 0.0475),
    (3, 2, 0.0154, 0.0155, 0.0249, 0.0242, 0.0327, 0.0320),
    (4, 0, 0.0305, 0.0419, 0.0401, 0.0467, 0.0480, 0.0509),
    (4, 1, 0.0154, 0.0214, 0.0249, 0.0277, 0.0327, 0.0330),
    (4, 2, 0.0065, 0.0095, 0.0157, 0.0165, 0.0235, 0.0229),
    (4, 3, 0.0008, 0.0010, 0.0098, 0.0099, 0.0175, 0.0178),
    (5, 0, 0.0154, 0.0274, 0.0249, 0.0318, 0.0327, 0.0359),
    (6, 0, 0.0065, 0.0084, 0.0157, 0.0226, 0.0235, 0.0264),
    (7, 0, 0.0008, 0.00105, 0.00985, 0.0165, 0.0175, 0.0202),
])

TABLES = {1: SS_TABLE, 2: SCHRODINGER_TABLE}

# quoted |E_approx - E_num| / |E_num| in percent for the SS table
QUOTED_PERCENT_ERRORS = {
    0.001: {(1, 0): 0.0454, (2, 0): 3.403, (2, 1): 0.866, (3, 0): 6.478, (3, 1): 0.936, (3, 2): 1.292},
    0.01: {(1, 0): 0.269, (2, 0): 3.598, (2, 1): 1.238, (3, 0): 7.206, (3, 1): 0.596, (3, 2): 0.150},
}


def golden_row(table: int, n: int, l: int, a: float) -> GoldenRow:
    for row in TABLES[table]:
        if (row.n, row.l) == (n, l) and abs(row.a - a) < 1e-12:
            return row
    raise KeyError((table, n, l, a))


def percent_error(approx: float, numeric: float) -> float:
    return 100.0 * abs(approx - numeric) / abs(numeric)
