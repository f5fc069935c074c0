"""
==================================
The coend of a quantum plane
==================================

The quantum plane K<x,y>/(xy - q yx) has a universal coacting
comonoid, coend(A) = cohom(A, A).  Its generators z^i_j are the
entries of a 2x2 matrix, and the comultiplication is matrix
multiplication on generators.
"""
from maninkit import cohomcoend as cc
from maninkit.exactlin import QQ
from maninkit.quadalg import quantum_plane

A = quantum_plane(QQ, 2)
C = cc.coend_comonoid(A)
E = C.obj

# 16 quadratic monomials in the four generators, 3 relations among them
print("dims of coend(A):", E.dims(3))
print("relations in degree 2:", E.relations.dim)

# comultiplication on generators: z -> sum over the middle index
names = E.gen_names()
n = E.ngens
for j, col in enumerate(C.comult.columns(1)):
    terms = " + ".join(f"{names[i // n]}|{names[i % n]}" for i in sorted(col))
    print(f"  Delta {names[j]} = {terms}")

# coassociativity and counit, checked degree by degree
print("comonoid laws to degree 3:", "ok" if not C.check(3) else C.check(3))

# coev: A -> coend(A) o A is the universal coaction
d = cc.coev(A, A)
tgt = d.target.gen_names()
for j, g in enumerate(A.gen_names()):
    print(f"  coev {g} =", " + ".join(tgt[i] for i in sorted(d.columns(1)[j])))
