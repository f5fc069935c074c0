from itertools import product

import pytest
from hypothesis import assume, given, settings, strategies as st

from maninkit import fincat, posetcat
from maninkit.fincat import CategoryError, FinFunctor, MonoidalTable, Preorder


def chain(n):
    return Preorder([str(x) for x in range(n + 1)], lambda x, y: x <= y)


def subsets(n, drop=()):
    masks = [m for m in range(1 << n) if m not in drop]
    P = Preorder([posetcat.subset_label(m) for m in masks], lambda a, b: masks[a] & ~masks[b] == 0)
    return P, masks


def test_universal_arrow_max_poset():
    M = posetcat.MaxPoset(4)
    F = M.right(2)
    assert fincat.universal_from_functor_to_object(F, 3) == (3, M.cat.hom(3, 3)[0])
    # nothing x has max(x, 2) <= 1
    assert fincat.universal_from_functor_to_object(F, 1) is None


def test_identity_functor_is_its_own_universal_arrow():
    C = chain(3)
    Id = fincat.identity_functor(C)
    for z in C.objects:
        assert fincat.universal_from_functor_to_object(Id, z) == (z, C.identity(z))
        assert fincat.universal_from_object_to_functor(z, Id) == (z, C.identity(z))
    adj = fincat.relative_left_adjoint(Id)
    assert adj.obj == {z: z for z in C.objects}
    assert all(adj.unit[z] == C.identity(z) for z in C.objects)


def test_deleting_the_witness_makes_the_arrow_absent():
    C, _ = subsets(2)
    D, masks = subsets(2, drop=(0,))
    G = FinFunctor(D, C, [C.labels.index(posetcat.subset_label(m)) for m in masks])
    # with the empty set present the inclusion has a left adjoint at {} ...
    full = FinFunctor(C, C, list(C.objects))
    assert fincat.universal_from_object_to_functor(0, full) == (0, C.identity(0))
    # ... without it, {1} and {2} are both minimal above {} and neither is least
    assert fincat.universal_from_object_to_functor(0, G) is None
    assert fincat.relative_left_adjoint(G) is None
    # the other objects still have universal arrows
    assert fincat.relative_left_adjoint(G, C_prime=[1, 2, 3]) is not None


def test_relative_left_adjoint_of_tensor_is_cohom():
    n = 5
    M = posetcat.MaxPoset(n)
    for v in range(n + 1):
        adj = fincat.relative_left_adjoint(M.right(v))
        assert adj.check_bijection() is None
        assert adj.obj == {w: posetcat.cohom_P(v, w) for w in range(n + 1)}


def test_subset_search_matches_closed_form():
    T = posetcat.SubsetCategory(3)
    adj = fincat.relative_adjunction_with_parameter(T)
    assert adj.verify() == {}
    for (X, Y), Z in adj.table().items():
        assert Z == Y & ~X


def test_canonical_uniqueness_iso_is_identity():
    M = posetcat.MaxPoset(3)
    a1 = fincat.relative_adjunction_with_parameter(M)
    a2 = fincat.relative_adjunction_with_parameter(M, order="reverse")
    assert a1.table() == a2.table()
    assert fincat.is_identity_transformation(M.cat, fincat.uniqueness_iso(a1, a2))


def z2():
    return fincat.table_category_from_monoid([0, 1], lambda g, f: g ^ f, 0)


def test_one_object_group_category():
    C = z2()
    Id = fincat.identity_functor(C)
    assert fincat.universal_from_object_to_functor(0, Id) == (0, 0)
    # the non-identity arrow is also universal; the search keeps the first hit
    assert C.is_iso(1)
    M = MonoidalTable(C, lambda x, y: 0, 0, tensor_arr=lambda f, g: f ^ g, sigma=lambda x, y: 0)
    adj = fincat.relative_adjunction_with_parameter(M)
    assert adj.table() == {(0, 0): 0}


def test_fast_and_generic_search_agree_on_subsets():
    T = posetcat.SubsetCategory(3)
    for v in T.cat.objects:
        G = T.right(v)
        for w in T.cat.objects:
            fast = fincat.universal_from_object_to_functor(w, G)
            slow = fincat.universal_from_object_to_functor(w, G, generic=True)
            assert fast == slow


@st.composite
def posets(draw, n=5):
    rel = draw(st.lists(st.booleans(), min_size=n * n, max_size=n * n))
    le = [[x == y or (x < y and rel[x * n + y]) for y in range(n)] for x in range(n)]
    for k, x, y in product(range(n), repeat=3):
        le[x][y] = le[x][y] or (le[x][k] and le[k][y])
    return Preorder([str(i) for i in range(n)], lambda x, y: le[x][y])


@settings(max_examples=80, deadline=None)
@given(posets(4), posets(5), st.lists(st.integers(0, 4), min_size=4, max_size=4), st.integers(0, 4))
def test_universal_arrow_against_brute_force(D, C, omap, x):
    assume(all(C.leq(omap[a], omap[b]) for a in D.objects for b in D.objects if D.leq(a, b)))
    G = FinFunctor(D, C, omap)
    got = fincat.universal_from_object_to_functor(x, G)
    assert got == fincat.universal_from_object_to_functor(x, G, generic=True)
    above = [z for z in D.objects if C.leq(x, omap[z])]
    least = [p for p in above if all(D.leq(p, z) for z in above)]
    if least:
        assert got is not None and got[0] == least[0]
    else:
        assert got is None


def test_validation_errors():
    with pytest.raises(CategoryError, match="transitive"):
        Preorder(["a", "b", "c"], lambda x, y: x == y or (x, y) in {(0, 1), (1, 2)})
    with pytest.raises(CategoryError, match="monotone"):
        FinFunctor(chain(2), chain(2), [2, 1, 0])
    with pytest.raises(CategoryError, match="associativity"):
        # (2 (x) 2) (x) 1 = 2 but 2 (x) (2 (x) 1) = 1
        MonoidalTable(chain(2), [[0, 1, 2], [1, 2, 1], [2, 1, 1]], 0)
    with pytest.raises(CategoryError, match="unit law"):
        fincat.TableCategory(["*"], [(0, 0), (0, 0)], {(a, b): 1 for a in (0, 1) for b in (0, 1)}, [0])
    with pytest.raises(CategoryError, match="at most"):
        Preorder([str(i) for i in range(fincat.MAX_THIN_OBJECTS + 1)], lambda x, y: x <= y, check=False)
