import pytest
from hypothesis import given, settings, strategies as st

from maninkit import quadalg
from maninkit.exactlin import GF, QQ, Matrix, Subspace
from maninkit.quadalg import QuadraticAlgebra, Presentation
from maninkit.suites import CORPUS_ALGEBRAS, corpus_algebra
import oracles

# Hilbert series read off by hand: free 2^k, polynomial k+1, exterior 1 2 1, dual numbers 1 1
KNOWN_DIMS = {
    "ku": (1, 1, 1, 1, 1),
    "free2": (1, 2, 4, 8, 16),
    "dual_numbers": (1, 1, 0, 0, 0),
    "quantum_plane_q1": (1, 2, 3, 4, 5),
    "quantum_plane_q2": (1, 2, 3, 4, 5),
    "quantum_plane_q3": (1, 2, 3, 4, 5),
    "exterior2": (1, 2, 1, 0, 0),
}


@pytest.mark.parametrize("name", CORPUS_ALGEBRAS)
def test_corpus_dims(name):
    A = corpus_algebra(name)
    assert A.dims(4) == KNOWN_DIMS[name]
    rels = A.relations.basis.tolist() if A.relations.dim else []
    assert tuple(oracles.algebra_dim(A.ngens, rels, k, 0) for k in range(5)) == KNOWN_DIMS[name]


def rel_lists(n, p, max_rels=3):
    return st.lists(st.lists(st.integers(0, p - 1), min_size=n * n, max_size=n * n), max_size=max_rels)


@settings(max_examples=40, deadline=None)
@given(rel_lists(2, 3))
def test_dims_match_ideal_oracle(rels):
    A = QuadraticAlgebra(GF(3), 2, rels)
    for k in range(5):
        assert A.dim(k) == oracles.algebra_dim(2, rels, k, 3)


@settings(max_examples=40, deadline=None)
@given(rel_lists(2, 3), rel_lists(2, 3))
def test_white_product_is_componentwise(ra, rb):
    F = GF(3)
    A, B = QuadraticAlgebra(F, 2, ra), QuadraticAlgebra(F, 2, rb)
    W = quadalg.white_product(A, B)
    C = quadalg.white(A, B)
    for k in range(4):
        want = oracles.algebra_dim(2, ra, k, 3) * oracles.algebra_dim(2, rb, k, 3)
        assert W.dim(k) == C.dim(k) == want


def _shuffled_tensor(r, s, n, m):
    # (a a')(b b') -> (a b)(a' b')
    out = [0] * (n * m) ** 2
    for i, x in enumerate(r):
        for j, y in enumerate(s):
            if x and y:
                a, a2 = divmod(i, n)
                b, b2 = divmod(j, m)
                out[(a * m + b) * n * m + a2 * m + b2] += x * y
    return out


@settings(max_examples=30, deadline=None)
@given(rel_lists(2, 3, 2), rel_lists(2, 3, 2))
def test_black_product_relations(ra, rb):
    F = GF(3)
    A, B = QuadraticAlgebra(F, 2, ra), QuadraticAlgebra(F, 2, rb)
    K = quadalg.black_product(A, B)
    want = [_shuffled_tensor(r, s, 2, 2) for r in ra for s in rb]
    assert K.relations == Subspace(F, 16, want)


@settings(max_examples=40, deadline=None)
@given(rel_lists(2, 5))
def test_dual_is_involution(rels):
    A = QuadraticAlgebra(GF(5), 2, rels)
    D = quadalg.quadratic_dual(A)
    assert D.relations.dim + A.relations.dim == 4
    assert quadalg.quadratic_dual(D).relations == A.relations


@settings(max_examples=25, deadline=None)
@given(rel_lists(2, 2, 2), rel_lists(2, 2, 2))
def test_morphism_count_matches_oracle(ra, rb):
    F = GF(2)
    A, B = QuadraticAlgebra(F, 2, ra), QuadraticAlgebra(F, 2, rb)
    assert quadalg.count_morphisms(A, B) == oracles.count_morphisms(2, ra, 2, rb, 2)


def test_exterior_is_dual_of_polynomial():
    P = quadalg.symmetric_algebra(QQ, 2)
    E = quadalg.quadratic_dual(P)
    assert E.dims(3) == (1, 2, 1, 0)


def test_ku_is_unit_for_white():
    A = corpus_algebra("quantum_plane_q2")
    U = quadalg.KU(QQ)
    assert quadalg.white(A, U) is A
    assert quadalg.white(U, U).is_unit()


def test_morphism_violation_reported():
    A = corpus_algebra("quantum_plane_q1")
    B = corpus_algebra("free2")
    with pytest.raises(Exception):
        quadalg.GradedMorphism(A, B, Matrix.identity(2, QQ))
    f = quadalg.GradedMorphism(A, B, Matrix.identity(2, QQ), check=False)
    assert not f.is_valid()


def test_budget():
    F = GF(3)
    A = quadalg.free_algebra(F, 2)
    with pytest.raises(quadalg.BudgetError):
        quadalg.count_morphisms(A, A, budget=10)


def test_relation_degree_validation():
    with pytest.raises(ValueError):
        Presentation(QQ, 2, {1: [[1, 0]]})


def test_truncation_and_coreflection():
    F = GF(2)
    cubic = Presentation(F, 2, {3: Subspace(F, 8, [{0: 1, 7: 1}])})
    T = quadalg.truncate(cubic, 3)
    assert T.dims(3) == (1, 2, 4, 7)
    assert not T.check()
    G, eps = quadalg.coreflection_G(T)
    # no quadratic relations: G is free on two generators
    assert G.relations.dim == 0
    assert eps.is_valid()


@pytest.mark.parametrize("src", ["ku", "square", "dual", "comm", "ext", "free2"])
def test_coreflection_universal(src):
    from maninkit.suites import _coreflection_targets, fixture
    B = fixture("adjunction_f2.fix").get("algebra", src)
    for _, T in _coreflection_targets(GF(2)):
        assert quadalg.coreflection_universal_check(B, T) >= 1


def test_coreflection_needs_degree_two():
    T = quadalg.truncate(quadalg.free_algebra(QQ, 2), 1)
    with pytest.raises(quadalg.TruncationError):
        quadalg.coreflection_G(T)


@pytest.mark.parametrize("a,b", [("quantum_plane_q2", "dual_numbers"), ("exterior2", "free2"), ("ku", "exterior2")])
def test_white_relations_via_coreflection(a, b):
    ok, g, w = quadalg.white_relations_match(corpus_algebra(a), corpus_algebra(b))
    assert ok and g == w


def test_identity_between_different_quantum_planes():
    q2, q3 = corpus_algebra("quantum_plane_q2"), corpus_algebra("quantum_plane_q3")
    assert quadalg.GradedMorphism(q2, q2, Matrix.identity(2, QQ)).is_valid()
    with pytest.raises(quadalg.RelationError) as ei:
        quadalg.GradedMorphism(q2, q3, Matrix.identity(2, QQ))
    assert ei.value.degree == 2
    # sparse coordinates in the basis xx, xy, yx, yy: the witness is xy - 2 yx
    assert ei.value.relation == {1: 1, 2: -2}
    assert quadalg.GradedMorphism(q2, q3, Matrix([[0, 0], [0, 0]], QQ)).is_valid()
