"""Finite versions of two coclosed structures on ordered monoids.

``MaxPoset(n)``: objects 0..n ordered as integers with x (x) y = max(x, y).
Its cohom is ``0`` if x >= y and ``y`` otherwise.

``SubsetCategory(n)``: subsets of {1..n} (as bitmasks) under inclusion with
union as tensor.  The downsets D_x = {1..x} form a copy of MaxPoset, but the
cohom computed in the bigger category is the interval {x+1..y}, which is not
a downset when 0 < x < y.  So a monoidal subcategory can be coclosed with a
cohom that differs from the ambient one.
"""

import time

from .fincat import MonoidalTable, Preorder, relative_adjunction_with_parameter


def MaxPoset(n=8):
    P = Preorder([str(x) for x in range(n + 1)], lambda x, y: x <= y)
    return MonoidalTable(P, max, 0)


def downset(x):
    return (1 << x) - 1


def subset_label(mask):
    return "{" + ",".join(str(i + 1) for i in range(mask.bit_length()) if (mask >> i) & 1) + "}"


def SubsetCategory(n=8):
    C = Preorder([subset_label(m) for m in range(1 << n)], lambda a, b: a & ~b == 0)
    return MonoidalTable(C, lambda a, b: a | b, 0, check=n <= 4)


def cohom_P(x, y, n=None):
    if x < 0 or y < 0 or (n is not None and (x > n or y > n)):
        raise ValueError(f"({x}, {y}) out of range")
    return 0 if x >= y else y


def cohom_C(X, Y, n=None):
    """Closed form on downsets; other subsets go through the search."""
    if X == downset(X.bit_length()) and Y == downset(Y.bit_length()):
        x, y = X.bit_length(), Y.bit_length()
        return 0 if x >= y else downset(y) & ~downset(x)
    if n is None:
        n = max(X.bit_length(), Y.bit_length(), 1)
    adj = relative_adjunction_with_parameter(SubsetCategory(n), [X, Y], verify=False)
    return adj.cohom[(X, Y)]


def verify_subcategory_cohom_differs(n):
    """Pairs (x, y) where cohom_P(x, y), read as the downset D_{cohom_P}, differs
    from cohom_C(D_x, D_y)."""
    witnesses = []
    for x in range(n + 1):
        for y in range(n + 1):
            a = downset(cohom_P(x, y))
            b = cohom_C(downset(x), downset(y))
            if a != b:
                witnesses.append((x, y, subset_label(a), subset_label(b)))
    return {"n": n, "count": len(witnesses), "witnesses": witnesses}


def poset_table(n=8):
    """Brute-force cohom tables for MaxPoset and for downsets of SubsetCategory,
    compared with the closed forms."""
    t0 = time.perf_counter()
    P = MaxPoset(n)
    adjP = relative_adjunction_with_parameter(P)
    mismatchP = [
        (x, y) for x in range(n + 1) for y in range(n + 1) if adjP.cohom[(x, y)] != cohom_P(x, y)
    ]
    C = SubsetCategory(n)
    D = [downset(x) for x in range(n + 1)]
    adjC = relative_adjunction_with_parameter(C, D)
    mismatchC = [
        (x, y)
        for x in range(n + 1)
        for y in range(n + 1)
        if adjC.cohom[(D[x], D[y])] != cohom_C(D[x], D[y])
    ]
    diff = verify_subcategory_cohom_differs(n)
    return {
        "n": n,
        "table_P": [[adjP.cohom[(x, y)] for y in range(n + 1)] for x in range(n + 1)],
        "table_C": [[subset_label(adjC.cohom[(D[x], D[y])]) for y in range(n + 1)] for x in range(n + 1)],
        "mismatch_P": mismatchP,
        "mismatch_C": mismatchC,
        "witness_count": diff["count"],
        "elapsed": time.perf_counter() - t0,
    }
