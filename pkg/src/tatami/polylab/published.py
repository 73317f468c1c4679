"""Published reference values used by the checkers and tests.

All lists are indexed from n = 2.
"""

BALANCED_COUNTS = (
    0, 0, 2, 2, 0, 0, 10, 20, 0, 0, 114, 210, 0, 0, 1322, 2460, 0, 0, 16428,
    31122, 0, 0, 214660, 410378, 0, 0, 2897424, 5575682, 0, 0, 40046134,
    77445152, 0, 0, 563527294, 1093987598, 0, 0, 8042361426, 15660579168, 0, 0,
    116083167058, 226608224226, 0, 0, 1691193906828, 3308255447206, 0, 0,
    24830916046462, 48658330768786, 0, 0, 366990100477712,
)

P_AT_MINUS_ONE = (
    1, -1, 2, -4, 6, -14, 20, -48, 70, -166, 252, -584, 924, -2092, 3432,
    -7616, 12870, -28102, 48620, -104824, 184756, -394404, 705432, -1494240,
    2704156, -5692636, 10400600,
)

P_ABS_COEFF_SUMS = (
    1, 3, 4, 10, 10, 22, 28, 64, 76, 180, 260, 606, 932, 2124, 3440, 7666,
    12872, 28178, 48620, 104946, 184756, 394638, 705432, 1494600, 2704156,
    5693376, 10400600,
)

# rows n = 2..10, coefficient k at position k
VH_TABLE = {
    2: (1,),
    3: (1, 2),
    4: (1, 2, 3, 2),
    5: (1, 2, 3, 6, 4, 2, 2),
    6: (1, 2, 3, 6, 9, 8, 7, 6, 2, 2, 2),
    7: (1, 2, 3, 6, 9, 14, 15, 14, 14, 10, 8, 6, 4, 2, 2, 2),
    8: (1, 2, 3, 6, 9, 14, 22, 24, 25, 28, 25, 22, 19, 14, 10, 10, 8, 4, 4, 2, 2, 2),
    9: (1, 2, 3, 6, 9, 14, 22, 32, 37, 42, 49, 48, 49, 46, 38, 34, 30, 24, 20, 16,
        12, 12, 10, 6, 4, 4, 2, 2, 2),
    10: (1, 2, 3, 6, 9, 14, 22, 32, 46, 56, 66, 78, 84, 90, 92, 88, 81, 76, 69, 58,
         51, 44, 38, 34, 28, 22, 20, 16, 14, 12, 8, 6, 4, 4, 2, 2, 2),
}

# rows n = 3..11
P_TABLE = {
    3: (1, 2),
    4: (1, 1, 2),
    5: (1, 1, 2, 4, 0, 2),
    6: (1, 0, 1, 2, 2, -2, 2),
    7: (1, 0, 1, 2, 2, 4, -2, 4, 0, 2, -2, 2),
    8: (1, 0, 1, 1, 2, 3, 4, -2, 2, 0, 4, -2, 2, -2, 2),
    9: (1, 0, 1, 1, 2, 3, 4, 6, -2, 6, 0, 8, -2, 4, -4, 6, -2, 4, -2, 2, -2, 2),
    10: (1, -1, 1, 0, 1, 1, 1, 2, 2, -6, 6, -2, 6, -6, 4, -4, 6, -6, 6, -4, 4, -4, 2),
    11: (1, -1, 1, 0, 1, 1, 1, 2, 2, 4, -8, 10, -4, 10, -8, 8, -8, 10, -10, 12, -8, 10,
         -12, 10, -6, 6, -6, 6, -4, 4, -4, 2),
}

# n = 11, transcribed separately from the term-by-term expansion
P11_EXPANDED = (
    1, -1, 1, 0, 1, 1, 1, 2, 2, 4, -8, 10, -4, 10, -8, 8,
    -8, 10, -10, 12, -8, 10, -12, 10, -6, 6, -6, 6, -4, 4, -4, 2,
)
