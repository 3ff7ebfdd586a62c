"""Printed reference values that the verification suites compare against."""
from __future__ import annotations

# c_1..c_10 of S' on Q_10 as coefficients of the basis class in each codegree;
# codegree 5 is the pair of plane-class coefficients, unordered because the
# two families may be swapped
Q10_SPRIME_CHERN: dict[int, int | tuple[int, int]] = {
    1: -8,
    2: 32,
    3: -84,
    4: 160,
    5: (-244, -220),
    6: 528,
    7: -484,
    8: 352,
    9: -176,
    10: 0,
}

# numerical dimension of the Ulrich spinor bundle(s) on Q_n
ULRICH_SPINOR_NU: dict[int, int] = {2: 1, 3: 3, 4: 3, 5: 6, 6: 6, 7: 14, 8: 15, 9: 24, 10: 24}

# nu of the non-spinor non-big models, which equals n + rank - 2
NONSPINOR_NONBIG_NU: dict[tuple[int, int, int], int] = {(4, 1, 1): 6, (6, 2, 0): 12, (6, 0, 2): 12}
