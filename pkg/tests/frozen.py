"""Values produced once by the brute-force routines in oracles.py.

The oracle tests recompute the cheap entries; the library tests compare against
these numbers directly.
"""

# relation vectors in the (i, j) -> i*n + j layout
R2 = {"ku": (1, []), "square": (2, [[1, 0, 0, 0]]), "dual": (1, [[1]]), "comm": (2, [[0, 1, 1, 0]]),
      "ext": (2, [[1, 0, 0, 0], [0, 0, 0, 1]]), "free2": (2, [])}
R3 = {"ku": (1, []), "dual": (1, [[1]]), "comm": (2, [[0, 1, 2, 0]]), "qm": (2, [[0, 1, 1, 0]]), "free2": (2, [])}

# |Hom(B, Z o A)| from oracles.count_into_componentwise
ADJUNCTION = [
    (2, "dual", "comm", "free2", 16),
    (2, "comm", "comm", "comm", 256),
    (2, "ext", "free2", "dual", 16),
    (2, "square", "ext", "comm", 16),
    (2, "free2", "dual", "ku", 1),
    (2, "ku", "comm", "ext", 10),
    (3, "dual", "comm", "free2", 81),
    (3, "comm", "qm", "comm", 161),
    (3, "qm", "qm", "dual", 81),
    (3, "free2", "dual", "qm", 1),
    (3, "ku", "comm", "qm", 33),
    (3, "comm", "free2", "ku", 81),
]

# coactions of T*(K[Z/2]) over F_3, from oracles.count_z2_coactions
COACTIONS = {"ku": 2, "dual": 2, "comm": 2, "qm": 2, "free2": 14}

# representations of the generator-determined algebras, from oracles.count_reps
REP_COUNTS = {
    (2, 1): {"Z/2": 1, "dual": 1, "KxK": 2},
    (2, 2): {"Z/2": 4, "dual": 4, "KxK": 8},
    (3, 1): {"Z/2": 2, "dual": 1, "KxK": 2},
    (3, 2): {"Z/2": 14, "dual": 9, "KxK": 14},
}
