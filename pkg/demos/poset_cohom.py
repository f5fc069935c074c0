"""
====================================
Cohom in a poset and in its subsets
====================================

Objects 0..n under max form a coclosed monoidal poset with
cohom(x, y) = 0 if x >= y, else y.  Sitting inside the subsets of
{1..n} with union, the same objects (as downsets) get the cohom
{x+1..y} instead, which is not a downset.  So the cohom depends on
the category it is computed in.
"""
from maninkit import fincat, posetcat

n = 5
t = posetcat.poset_table(n)

print("cohom in the max-poset, row x, column y")
for row in t["table_P"]:
    print(" ".join(str(v) for v in row))

print("\ncohom of downsets computed among all subsets")
for row in t["table_C"]:
    print(" ".join(f"{v:>9}" for v in row))

print("\npairs where they differ:", t["witness_count"])

# the diamond lattice M3 under join has no cohom at all
print("M3 coclosed:", fincat.relative_adjunction_with_parameter(fincat.lattice_m3()) is not None)
