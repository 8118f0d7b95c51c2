"""Reference values checked in by hand before the pipeline existed."""

STIRLING_ROWS = [
    [1],
    [1, 1],
    [1, 3, 1],
    [1, 7, 6, 1],
    [1, 15, 25, 10, 1],
    [1, 31, 90, 65, 15, 1],
    [1, 63, 301, 350, 140, 21, 1],
    [1, 127, 966, 1701, 1050, 266, 28, 1],
    [1, 255, 3025, 7770, 6951, 2646, 462, 36, 1],
    [1, 511, 9330, 34105, 42525, 22827, 5880, 750, 45, 1],
]

ISN_ROWS = [
    [1],
    [3, 1],
    [7, 6, 1],
    [15, 25, 10, 1],
    [31, 90, 65, 15, 1],
    [63, 301, 350, 140, 21, 1],
    [127, 966, 1701, 1050, 266, 28, 1],
    [255, 3025, 7770, 6951, 2646, 462, 36, 1],
    [511, 9330, 34105, 42525, 22827, 5880, 750, 45, 1],
    [1023, 28501, 145750, 246730, 179487, 63987, 11880, 1155, 55, 1],
]

F3 = {3: 2, 4: 9, 5: 6, 6: 1}

# l = 4..14
F4_TOTAL = [25, 304, 1165, 2188, 2487, 1882, 989, 364, 91, 14, 1]

# l = 4..30
F5_TOTAL = [
    30, 2026, 41430, 376350, 2003655, 7286000, 19794315, 42481630, 74703675,
    110336120, 139213315, 151755930, 143939615, 119234250, 86346985, 54596500,
    30040395, 14306710, 5852905, 2035800, 593775, 142506, 27405, 4060, 435, 30, 1,
]

# k=4 prefix branching set (ceee, cece, ceec, cecc): |F_y(4, l)| for l = 4..14
F4_BY_ASSIGNMENT = {
    "1000": [4, 40, 115, 146, 103, 43, 10, 1, 0, 0, 0],
    "0001": [4, 40, 115, 146, 103, 43, 10, 1, 0, 0, 0],
    "0100": [6, 47, 120, 147, 103, 43, 10, 1, 0, 0, 0],
    "0010": [6, 47, 120, 147, 103, 43, 10, 1, 0, 0, 0],
    "1100": [0, 14, 77, 159, 172, 111, 44, 10, 1, 0, 0],
    "1010": [0, 14, 77, 159, 172, 111, 44, 10, 1, 0, 0],
    "0101": [0, 14, 77, 159, 172, 111, 44, 10, 1, 0, 0],
    "0011": [0, 14, 77, 159, 172, 111, 44, 10, 1, 0, 0],
    "1001": [1, 20, 94, 184, 191, 118, 45, 10, 1, 0, 0],
    "0110": [4, 44, 141, 222, 205, 120, 45, 10, 1, 0, 0],
    "1110": [0, 4, 44, 141, 222, 205, 120, 45, 10, 1, 0],
    "0111": [0, 4, 44, 141, 222, 205, 120, 45, 10, 1, 0],
    "1111": [0, 0, 4, 44, 141, 222, 205, 120, 45, 10, 1],
    "1101": [0, 1, 30, 117, 203, 198, 119, 45, 10, 1, 0],
    "1011": [0, 1, 30, 117, 203, 198, 119, 45, 10, 1, 0],
    "0000": [0] * 11,
}

DESIGNS_7_4 = 1_868_650
DESIGNS_9_5 = 65_691_305_652
ORDERED_7_4 = 44_847_600
