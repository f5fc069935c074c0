import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from maninkit import linrep
from maninkit.exactlin import GF, QQ, Matrix
import oracles
from frozen import REP_COUNTS as FROZEN_COUNTS


def vec(m):
    """hom(V, W) coordinates: entry (i, b) sits at i*nV + b."""
    return [[x] for row in m for x in row]


small = st.integers(1, 3)
entries = st.integers(-3, 3)


@st.composite
def mat(draw, r, c):
    return draw(st.lists(st.lists(entries, min_size=c, max_size=c), min_size=r, max_size=r))


@settings(max_examples=50, deadline=None)
@given(st.data(), small, small)
def test_ev_applies_matrix(data, nV, nW):
    F = GF(7)
    h = data.draw(mat(nW, nV))
    v = data.draw(mat(nV, 1))
    x = Matrix([[a] for a in np.kron(np.array(vec(h)).ravel(), np.array(v).ravel()).tolist()], F)
    want = Matrix((np.array(h) @ np.array(v)).tolist(), F)
    assert linrep.ev(nV, nW, F) @ x == want


@settings(max_examples=50, deadline=None)
@given(st.data(), small, small, small)
def test_theta_round_trip(data, nX, nV, nW):
    F = QQ
    g = Matrix(data.draw(mat(nW, nX * nV)), F)
    f = linrep.theta_inv(g, nV, nW)
    assert f.shape == (nW * nV, nX)
    assert linrep.theta(f, nV, nW) == g
    assert linrep.theta_inv(linrep.theta(f, nV, nW), nV, nW) == f


@settings(max_examples=40, deadline=None)
@given(st.data(), small, small, small, small)
def test_pi_is_kronecker_on_maps(data, nV, nW, nV2, nW2):
    F = GF(5)
    f = data.draw(mat(nW, nV))
    g = data.draw(mat(nW2, nV2))
    x = Matrix(np.kron(np.array(vec(f)), np.array(vec(g))).tolist(), F)
    want = Matrix(vec(np.kron(np.array(f), np.array(g)).tolist()), F)
    assert linrep.pi(nV, nW, nV2, nW2, F) @ x == want
    assert linrep.pi(nV, nW, nV2, nW2, F) == linrep.pi_closed(nV, nW, nV2, nW2, F)


@settings(max_examples=30, deadline=None)
@given(st.data(), small, small, small)
def test_composition_is_matrix_product(data, nU, nV, nW):
    F = QQ
    a = data.draw(mat(nW, nV))
    b = data.draw(mat(nV, nU))
    x = Matrix(np.kron(np.array(vec(a)), np.array(vec(b))).tolist(), F)
    want = Matrix(vec((np.array(a) @ np.array(b)).tolist()), F)
    assert linrep.composition(nU, nV, nW, F) @ x == want
    assert linrep.composition(nU, nV, nW, F) == linrep.composition_closed(nU, nV, nW, F)


@settings(max_examples=30, deadline=None)
@given(st.data(), small, small, small, small)
def test_hom_map_structural(data, nV, nV2, nW, nW2):
    F = GF(3)
    f = Matrix(data.draw(mat(nV2, nV)), F)
    g = Matrix(data.draw(mat(nW2, nW)), F)
    assert linrep.hom_map(f, g) == linrep.hom_map_structural(f, g)


@pytest.mark.parametrize("p", [0, 3])
def test_pi_laws(p):
    F = GF(p) if p else QQ
    res = linrep.pi_laws((1, 2), F)
    laws = {law for law, _, _ in res}
    assert len(laws) >= 7
    assert all(ok for _, _, ok in res)


def test_unit_matches_closed_form():
    for n in (1, 2, 3):
        assert linrep.unit(n, QQ) == linrep.unit_closed(n, QQ)


def _oracle_counts(p, nV):
    I = oracles.identity(nV)

    def square(m):
        return oracles.matmul(m, m, p)

    return {
        "Z/2": oracles.count_reps(lambda ms: square(ms[0]) == I, nV, 1, p),
        "dual": oracles.count_reps(lambda ms: all(x == 0 for r in square(ms[0]) for x in r), nV, 1, p),
        "KxK": oracles.count_reps(lambda ms: square(ms[0]) == ms[0], nV, 1, p),
    }


def _algebras(F):
    return {
        "Z/2": linrep.cyclic_group_algebra(2, F),
        "dual": linrep.dual_numbers_algebra(F),
        "KxK": linrep.product_algebra(F),
    }


@pytest.mark.parametrize("p,nV", sorted(FROZEN_COUNTS))
def test_rep_counts(p, nV):
    F = GF(p)
    want = FROZEN_COUNTS[(p, nV)]
    for name, M in _algebras(F).items():
        reps = linrep.enumerate_reps(M, nV)
        acts = linrep.enumerate_actions(M, nV)
        assert len(reps) == len(acts) == want[name]
        assert {repr(linrep.action_from_rep(r, nV).tolist()) for r in reps} == {repr(a.tolist()) for a in acts}


@pytest.mark.parametrize("p,nV", [(2, 1), (2, 2), (3, 1)])
def test_frozen_counts_from_oracle(p, nV):
    assert _oracle_counts(p, nV) == FROZEN_COUNTS[(p, nV)]


def test_end_monoid_has_one_rep():
    F = GF(2)
    assert len(linrep.enumerate_reps(linrep.end_monoid(1, F), 2)) == 1


def test_enumeration_budget():
    with pytest.raises(OverflowError):
        linrep.enumerate_reps(linrep.cyclic_group_algebra(2, GF(3)), 2, budget=5)


def test_monoid_checks():
    F = QQ
    for M in _algebras(F).values():
        assert M.check() == []
    assert linrep.cyclic_group_algebra(3, F).check() == []
    assert linrep.cyclic_group_algebra(2, F).is_cocommutative()


def test_tensor_rep_of_sign_reps_is_trivial():
    F = GF(3)
    H = linrep.cyclic_group_algebra(2, F)
    sign = Matrix([[1, 2]], F)
    rr = linrep.tensor_rep(sign, sign, H, 1, 1)
    assert rr == Matrix([[1, 1]], F)
    assert linrep.is_rep(rr, H, 1) == []


def test_invalid_rep_detected():
    F = GF(3)
    H = linrep.cyclic_group_algebra(2, F)
    assert linrep.is_rep(Matrix([[1, 0]], F), H, 1)


def test_rep_morphism():
    F = QQ
    rho = Matrix([[1, 0], [0, 1], [0, 0], [1, 0]], F)
    tau = rho
    two = Matrix([[2, 0], [0, 2]], F)
    assert linrep.is_rep_morphism(two, rho, tau)
    assert not linrep.is_rep_morphism(Matrix([[1, 0], [0, 2]], F), rho, tau)


def test_semilinear_hom_universal():
    F = GF(2)
    A = linrep.SemiLinearSet(range(2), 1, F)
    B = linrep.SemiLinearSet(range(1), 1, F)
    ok, n, m = linrep.verify_hom_universal(A, B, B)
    assert ok and n == m


def test_monoid_rep_bridge():
    F = GF(3)
    table = [[0, 1], [1, 0]]
    swap = [Matrix([[1, 0], [0, 1]], F), Matrix([[0, 1], [1, 0]], F)]
    bad = [Matrix([[1]], F), Matrix([[0]], F)]
    assert linrep.monoid_rep_direct(table, 0, swap) == linrep.monoid_rep_bridge(table, 0, swap) == []
    assert linrep.monoid_rep_direct(table, 0, bad)
    assert bool(linrep.monoid_rep_direct(table, 0, bad)) == bool(linrep.monoid_rep_bridge(table, 0, bad))
