from math import comb

import pytest

from maninkit import cohomcoend as cc
from maninkit import linrep, translate
from maninkit.exactlin import GF, QQ, FieldError, Matrix
from maninkit.suites import fixture


def test_functors_on_objects():
    T, S = translate.tstar(QQ), translate.sstar(QQ)
    assert T.obj(3).dims(3) == (1, 3, 9, 27)
    # polynomial ring in 3 variables
    assert S.obj(3).dims(3) == tuple(comb(3 + k - 1, k) for k in range(4))
    assert T.obj(1).dims(3) == (1, 1, 1, 1)


def test_sstar_needs_odd_characteristic():
    with pytest.raises(FieldError):
        translate.sstar(GF(2))
    with pytest.raises(ValueError):
        translate.functor_by_name("lambda", QQ)


def test_sstar_is_not_strong():
    S = translate.sstar(QQ)
    d_big, d_white = translate.dims_comparison(S, 2, 2, 2)
    # S^2 of a 4-space versus S^2(K^2) (x) S^2(K^2)
    assert d_big[2] == comb(5, 2) == 10
    assert d_white[2] == comb(3, 2) ** 2 == 9
    with pytest.raises(ValueError):
        translate.bimon_of_contravariant(S, linrep.cyclic_group_algebra(2, QQ))


def test_tstar_phi_is_strong():
    T = translate.tstar(GF(3))
    d_big, d_white = translate.dims_comparison(T, 2, 2, 3)
    assert d_big == d_white == (1, 4, 16, 64)


@pytest.mark.parametrize("field", [QQ, GF(3)])
def test_phi_iso_flags(field):
    T = translate.tstar(field)
    assert translate.phi_transform(T, 2, 2).iso_by_degree(3) == [True] * 4
    # dim V = 1: Phi is the identity of K[u]
    P = translate.phi_transform(T, 1, 1)
    assert P.map.component(1) == Matrix([[1]], field)
    assert P.iso_by_degree(3) == [True] * 4
    S = translate.sstar(field)
    assert translate.phi_transform(S, 2, 2).iso_by_degree(3) == [True, True, False, False]


def test_phi_sstar_degree_two_shapes():
    S = translate.sstar(QQ)
    c = translate.phi_transform(S, 2, 2).map.component(2)
    # cohom(S(V*), S(V*)) has 16 - 3 = 13, S(end(V)*) has 10
    assert (c.cols, c.rows) == (13, 10)


@pytest.mark.parametrize("name", ["tstar", "sstar"])
def test_phi_naturality_and_formula(name):
    F = translate.functor_by_name(name, QQ)
    f = Matrix([[1], [2]], QQ)
    h = Matrix([[1, -1]], QQ)
    assert translate.phi_naturality(F, f, 2, h, 2) == []
    g = Matrix([[1, 0], [2, 1], [0, 1], [1, 1]], QQ)
    assert translate.phi_formula_check(F, g, 2, 2, 2) == []
    for nV in (1, 2):
        assert translate.phi_comonoid_check(F, nV, 2) == []


@pytest.mark.parametrize("fn,monoid,rep", [
    ("tstar", "dual", "nilpotent"), ("tstar", "prod", "diagonal"),
    ("sstar", "prod", "diagonal"), ("sstar", "dual", "nilpotent"),
])
def test_lift(fn, monoid, rep):
    fx = fixture("lifting.fix")
    F = translate.functor_by_name(fn, fx.field)
    M = fx.get("monoid", monoid)
    _, rho, nV = fx.get("rep", rep)
    assert linrep.is_rep(rho, M, nV) == []
    assert translate.lift_check(F, M, rho, nV, 3) == []


def test_lift_builtin_examples_match_fixture():
    fx = fixture("lifting.fix")
    _, rho, _ = translate.dual_numbers_rep(QQ)
    assert fx.get("rep", "nilpotent")[1] == rho
    _, rho, _ = translate.diagonal_rep(QQ)
    assert fx.get("rep", "diagonal")[1] == rho


def test_lift_of_trivial_rep_is_trivial():
    T = translate.tstar(QQ)
    H = linrep.cyclic_group_algebra(2, QQ)
    rho, nV = translate.trivial_rep(H)
    w = translate.lift_rep(T, rho, nV)
    assert w.source.ngens == 1 and w.target.ngens == 2
    assert translate.lift_check(T, H, rho, nV, 3) == []


def test_lift_morphism():
    T = translate.tstar(QQ)
    M, rho, nV = translate.dual_numbers_rep(QQ)
    two = Matrix([[2, 0], [0, 2]], QQ)
    assert translate.lift_morphism_check(T, two, rho, rho, 2) == []


def test_lifted_corep_is_coaction():
    T = translate.tstar(QQ)
    M, rho, nV = translate.dual_numbers_rep(QQ)
    C = translate.comon_of_contravariant(T, M)
    assert C.check(3) == []
    w = translate.lift_rep(T, rho, nV)
    # omega lands in the comonoid translated from M
    assert w.target.ngens == M.dim
    assert cc.is_comonoid_morphism(w, cc.coend_comonoid(T.obj(nV)), C, 2) is None


@pytest.mark.parametrize("fname,b,r1,r2", [
    ("monoidality_q.fix", "z2", "sign", "sign"),
    ("monoidality_q.fix", "z2", "sign", "trivial"),
    ("monoidality_f3.fix", "z2", "swap", "swap"),
    ("monoidality_f3.fix", "fz2", "split", "split"),
])
def test_lift_monoidality(fname, b, r1, r2):
    fx = fixture(fname)
    T = translate.tstar(fx.field)
    H = fx.get("bimonoid", b)
    _, a, na = fx.get("rep", r1)
    _, c, nc = fx.get("rep", r2)
    assert translate.verify_lift_monoidality(T, H, a, na, c, nc, 3) == []


def test_lift_monoidality_detects_wrong_tensor():
    # a non-representation must not pass
    fx = fixture("monoidality_f3.fix")
    T = translate.tstar(fx.field)
    H = fx.get("bimonoid", "z2")
    bad = Matrix([[1, 0]], fx.field)
    assert translate.verify_lift_monoidality(T, H, bad, 1, bad, 1, 2)


@pytest.mark.parametrize("p", [0, 2, 3])
def test_coherence(p):
    F = GF(p) if p else QQ
    T = translate.tstar(F)
    for dims in ((2, 1, 2, 2), (1, 2, 2, 1)):
        assert translate.lemsigmaphi_check(T, dims, 2) == []
    d, kk = linrep.dual_numbers_algebra(F), linrep.product_algebra(F)
    assert translate.comon_monoidality_check(T, d, kk, 2) == []
    H = linrep.cyclic_group_algebra(2, F)
    assert translate.bimon_of_contravariant(T, H).check(2) == []
