"""Reference difference sets, orderings and parameter rows.

These are the literal sets (in their reference element order) that the
reproduction suite and the tests compare against.
"""

from __future__ import annotations

# P^4(F_2): (31, 15, 7), Frobenius compatible block order, j = 1, k = 3
D5_MOD31 = (1, 3, 15, 2, 6, 30, 4, 12, 29, 8, 24, 27, 16, 17, 23)
# D5_MOD31 - 1, same order; not fixed by multiplication with 2
D5_MOD31_SHIFTED = (0, 2, 14, 1, 5, 29, 3, 11, 28, 7, 23, 26, 15, 16, 22)
# D5_MOD31 ascending; not Frobenius compatible
D5_MOD31_SORTED = (1, 2, 3, 4, 6, 8, 12, 15, 16, 17, 23, 24, 27, 29, 30)
D5_MOD31_ORBITS = ((1, 2, 4, 8, 16), (3, 6, 12, 24, 17), (15, 30, 29, 27, 23))

# P^3(F_3): (40, 13, 4)
D4_MOD40 = (21, 22, 23, 25, 26, 29, 34, 35, 38, 0, 5, 7, 15)
D4_MOD40_PLUS20 = (1, 2, 3, 5, 6, 9, 14, 15, 18, 20, 25, 27, 35)
D4_MOD40_ORBITS = ((21, 23, 29, 7), (22, 26, 34, 38), (25, 35), (5, 15), (0,))
D4_MOD40_FIXED = (0, 20)

# P^4(F_3): (121, 40, 13), Frobenius and Wada compatible, eight 5-orbits
D5_MOD121 = (
    1, 4, 7, 11, 13, 34, 25, 67, 3, 12, 21, 33, 39, 102, 75, 80,
    9, 36, 63, 99, 117, 64, 104, 119, 27, 108, 68, 55, 109, 71, 70, 115,
    81, 82, 83, 44, 85, 92, 89, 103,
)

# (m, p, e) -> (q, ell, f)
PRIME_CASE_ROWS = {
    (2, 5, 1): (6, 31, 3),
    (4, 2, 1): (15, 31, 5),
    (4, 3, 1): (40, 121, 5),
    (4, 7, 1): (400, 2801, 5),
    (6, 2, 1): (63, 127, 7),
    (6, 3, 1): (364, 1093, 7),
    (6, 5, 1): (3906, 19531, 7),
    (10, 2, 1): (1023, 2047, 11),
}

# rows whose full reproduction is gated: dessin too large, or search open
LARGE_DESSIN_ROWS = {(6, 5, 1), (10, 2, 1)}
OPEN_SEARCH_ROWS = {(10, 2, 1)}

# (m, p, e) -> {subgroup order: accepted orbit count or None}
SUBGROUP_EXAMPLES = {
    (4, 2, 2): {10: None, 5: 17},
    (6, 2, 2): {7: 195},
}
