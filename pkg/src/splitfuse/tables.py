"""Reference values published for the complete bipartite and multipartite families.

These are lookup data, not computed results: the case selector for the
minimum-edge formulas consults them for tabulated instances, and the test
suite compares the formulas and the orbit oracle against them.
"""

from __future__ import annotations

# (n, m) -> (orbit size, min |E|, min max-degree), rows with n >= m >= 2
BIPARTITE_TABLE: dict[tuple[int, int], tuple[int, int, int]] = {
    (2, 2): (11, 3, 2),
    (3, 2): (14, 4, 3),
    (4, 2): (17, 5, 4),
    (3, 3): (18, 5, 3),
    (5, 2): (20, 6, 5),
    (4, 3): (22, 6, 4),
    (6, 2): (23, 7, 6),
    (5, 3): (26, 7, 5),
    (4, 4): (27, 7, 4),
    (7, 2): (26, 8, 7),
    (6, 3): (30, 8, 6),
    (5, 4): (32, 8, 5),
    (8, 2): (29, 9, 8),
    (7, 3): (34, 9, 7),
    (6, 4): (37, 9, 6),
    (5, 5): (38, 9, 5),
    (9, 2): (32, 10, 9),
    (8, 3): (38, 10, 8),
    (7, 4): (42, 10, 7),
    (6, 5): (44, 10, 6),
    (10, 2): (35, 11, 10),
    (9, 3): (42, 11, 9),
    (8, 4): (47, 11, 8),
    (7, 5): (50, 11, 7),
    (6, 6): (51, 11, 6),
}

# parts -> (multipartite orbit, min |E|, min max-degree + 1,
#           clique-star orbit, min |E|, min max-degree + 1,
#           split-fuse CZ, time steps, qubits, auxiliary qubits)
MULTIPARTITE_TABLE: dict[tuple[int, ...], tuple[int, ...]] = {
    (2, 2, 2): (40, 6, 4, 41, 6, 4, 11, 4, 12, 6),
    (3, 2, 2): (50, 7, 5, 52, 7, 5, 12, 5, 13, 6),
    (4, 2, 2): (60, 8, 6, 63, 8, 6, 13, 6, 14, 6),
    (3, 3, 2): (62, 8, 5, 66, 8, 5, 13, 5, 14, 6),
    (2, 2, 2, 2): (149, 10, 5, 148, 9, 4, 15, 5, 16, 8),
    (5, 2, 2): (70, 9, 7, 74, 9, 7, 14, 7, 15, 6),
    (4, 3, 2): (74, 9, 6, 80, 9, 6, 14, 6, 15, 6),
    (3, 3, 3): (76, 10, 6, 84, 9, 5, 14, 5, 15, 6),
    (3, 2, 2, 2): (190, 11, 5, 188, 10, 5, 16, 5, 17, 8),
    (6, 2, 2): (80, 10, 8, 85, 10, 8, 15, 8, 16, 6),
    (5, 3, 2): (86, 10, 7, 94, 10, 7, 15, 7, 16, 6),
    (4, 4, 2): (88, 10, 6, 97, 10, 6, 15, 6, 16, 6),
    (4, 3, 3): (90, 11, 7, 102, 10, 6, 15, 6, 16, 6),
    (4, 2, 2, 2): (231, 12, 6, 228, 11, 6, 17, 6, 18, 8),
    (3, 3, 2, 2): (242, 12, 5, 238, 11, 5, 17, 5, 18, 8),
    (2, 2, 2, 2, 2): (526, 12, 5, 527, 13, 6, 19, 6, 20, 10),
    (7, 2, 2): (90, 11, 9, 96, 11, 9, 16, 9, 17, 6),
    (6, 3, 2): (98, 11, 8, 108, 11, 8, 16, 8, 17, 6),
    (5, 4, 2): (102, 11, 7, 114, 11, 7, 16, 7, 17, 6),
    (5, 3, 3): (104, 12, 8, 120, 11, 7, 16, 7, 17, 6),
    (5, 2, 2, 2): (272, 13, 7, 268, 12, 7, 18, 7, 19, 8),
    (4, 4, 3): (106, 12, 7, 124, 11, 6, 16, 6, 17, 6),
    (4, 3, 2, 2): (294, 13, 6, 288, 12, 6, 18, 6, 19, 8),
    (3, 3, 3, 2): (308, 13, 5, 300, 12, 5, 18, 5, 19, 8),
    (3, 2, 2, 2, 2): (674, 13, 5, 676, 14, 6, 20, 6, 21, 10),
    (8, 2, 2): (100, 12, 10, 107, 12, 10, 17, 10, 18, 6),
    (7, 3, 2): (110, 12, 9, 122, 12, 9, 17, 9, 18, 6),
    (6, 4, 2): (116, 12, 8, 131, 12, 8, 17, 8, 18, 6),
    (6, 3, 3): (118, 13, 9, 138, 12, 8, 17, 8, 18, 6),
    (6, 2, 2, 2): (313, 14, 8, 308, 13, 8, 19, 8, 20, 8),
    (5, 5, 2): (118, 12, 7, 134, 12, 7, 17, 7, 18, 6),
    (5, 4, 3): (122, 13, 8, 146, 12, 7, 17, 7, 18, 6),
    (5, 3, 2, 2): (346, 14, 7, 338, 13, 7, 19, 7, 20, 8),
    (4, 4, 4): (124, 14, 8, 151, 12, 6, 17, 6, 18, 6),
    (4, 4, 2, 2): (357, 14, 6, 348, 13, 6, 19, 6, 20, 8),
    (4, 3, 3, 2): (374, 14, 6, 362, 13, 6, 19, 6, 20, 8),
    (4, 2, 2, 2, 2): (822, 14, 6, 825, 15, 6, 21, 6, 22, 10),
    (3, 3, 3, 3): (392, 14, 6, 376, 15, 6, 19, 5, 20, 8),
    (3, 3, 2, 2, 2): (862, 14, 5, 866, 15, 6, 21, 6, 22, 10),
    (2, 2, 2, 2, 2, 2): (1823, 16, 7, 1822, 15, 6, 23, 7, 24, 12),
    (8, 8, 8): (436, 30, 16, 779, 24, 10, 29, 10, 30, 6),
    (6, 6, 6, 6): (2885, 26, 9, 2260, 33, 12, 31, 8, 32, 8),
    (9, 8, 8): (470, 31, 17, 862, 25, 11, 30, 11, 31, 6),
    (7, 6, 6, 6): (3266, 27, 10, 2516, 34, 13, 32, 9, 33, 8),
    (5, 5, 5, 5, 5): (9856, 36, 10, 10880, 30, 9, 34, 7, 35, 10),
    (10, 8, 8): (504, 32, 18, 945, 26, 12, 31, 12, 32, 6),
    (9, 9, 8): (506, 32, 17, 954, 26, 11, 31, 11, 32, 6),
    (8, 6, 6, 6): (3647, 28, 11, 2772, 35, 14, 33, 10, 34, 8),
    (7, 7, 6, 6): (3698, 28, 10, 2798, 35, 13, 33, 9, 34, 8),
    (6, 5, 5, 5, 5): (11240, 37, 11, 12520, 31, 10, 35, 8, 36, 10),
    (11, 8, 8): (538, 33, 19, 1028, 27, 13, 32, 13, 33, 6),
    (10, 9, 8): (542, 33, 18, 1046, 27, 12, 32, 12, 33, 6),
    (9, 9, 9): (544, 34, 18, 1056, 27, 11, 32, 11, 33, 6),
    (9, 6, 6, 6): (4028, 29, 12, 3028, 36, 15, 34, 11, 35, 8),
    (8, 7, 6, 6): (4130, 29, 11, 3080, 36, 14, 34, 10, 35, 8),
    (7, 7, 7, 6): (4188, 29, 10, 3108, 36, 13, 34, 9, 35, 8),
    (7, 5, 5, 5, 5): (12624, 38, 12, 14160, 32, 11, 36, 9, 37, 10),
    (6, 6, 5, 5, 5): (12808, 38, 11, 14408, 32, 10, 36, 8, 37, 10),
}
