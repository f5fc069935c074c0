"""Acceptance criteria, one printed PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v`` or directly with
``python3 tests/test_acceptance.py``.
"""

import os
import subprocess
import sys
import time

import pytest

from maninkit import cohomcoend as cc
from maninkit import coreps, posetcat, translate
from maninkit.suites import CORPUS_ALGEBRAS, corpus_algebra, fixture, run_suites

sys.path.insert(0, os.path.dirname(__file__))
from frozen import ADJUNCTION  # noqa: E402


def _all_pass(reports):
    bad = [r for r in reports if r.status != "PASS"]
    return not bad, (f"{bad[0].suite} {bad[0].case}: {bad[0].witness}" if bad else "")


def crit_poset():
    t0 = time.perf_counter()
    t = posetcat.poset_table(8)
    dt = time.perf_counter() - t0
    pairs = sum(len(row) for row in t["table_P"])
    ok = pairs == 81 and not t["mismatch_P"] and not t["mismatch_C"] and dt < 5
    return ok, f"81 pairs checked in both tables, {t['witness_count']} differing pairs, {dt:.2f}s"


def crit_adjunction():
    notes = []
    ok = True
    for p in (2, 3):
        fx = fixture(f"adjunction_f{p}.fix")
        cases = [c for c in ADJUNCTION if c[0] == p]
        t0 = time.perf_counter()
        for _, a, b, z, want in cases:
            A, B, Z = (fx.get("algebra", x) for x in (a, b, z))
            left, right = cc.adjunction_counts(A, B, Z)
            trips = cc.adjunction_round_trips(A, B, Z)
            ok &= left == right == want and trips == (left, right)
        dt = time.perf_counter() - t0
        ok &= len(cases) >= 5 and dt < 60
        notes.append(f"F_{p}: {len(cases)} triples in {dt:.1f}s")
    return ok, "; ".join(notes)


def crit_white():
    reports = run_suites(["quadalg.white-dims"], degree=4)
    ok, why = _all_pass(reports)
    n = len(CORPUS_ALGEBRAS) ** 2
    return ok and len(reports) == n, why or f"{n} corpus pairs, degrees 0..4"


def crit_coend():
    reports = run_suites(["cohomcoend.coend"], degree=3)
    ok, why = _all_pass(reports)
    A = corpus_algebra("quantum_plane_q2")
    dims = cc.cohom(A, A).dims(2)
    ok &= dims == (1, 4, 13)
    qps = [f"quantum_plane_q{q}" for q in (1, 2, 3)]
    ok &= all(cc.coend_comonoid(corpus_algebra(q)).check(3) == [] for q in qps)
    return ok, why or f"{len(reports)} cases to degree 3, cohom(qp2, qp2) dims {dims}"


def crit_kappa_tensor():
    reports = run_suites(["cohomcoend.kappa", "coreps.tensor"], degree=2)
    ok, why = _all_pass(reports)
    return ok, why or f"{len(reports)} cases to degree 2, including the coaction identity"


def crit_coreflection():
    reports = run_suites(["quadalg.coreflection", "quadalg.phi-relations"], degree=3)
    ok, why = _all_pass(reports)
    pairs = sum(r.suite == "quadalg.coreflection" for r in reports)
    rel = sum(r.suite == "quadalg.phi-relations" for r in reports)
    return ok and pairs >= 20, why or f"{pairs} (B, T) pairs, {rel} relation-space comparisons"


def crit_pi():
    reports = run_suites(["linrep.pi", "linrep.reps"], degree=2)
    ok, why = _all_pass(reports)
    return ok, why or "pi laws over Q and F_3, rep/action counts over F_2 in dims 1 and 2"


def crit_lifting():
    fx = fixture("lifting.fix")
    T = translate.tstar(fx.field)
    ok = True
    for m, r in (("dual", "nilpotent"), ("prod", "diagonal")):
        M = fx.get("monoid", m)
        _, rho, nV = fx.get("rep", r)
        w = translate.lift_rep(T, rho, nV)
        C = translate.comon_of_contravariant(T, M)
        ok &= coreps.corep_check(w, C, T.obj(nV), 3) == []
    z2 = run_suites(["translate.monoidality"], degree=3)
    ok2, why = _all_pass(z2)
    two_dim = [r for r in z2 if "swap" in r.case or "split" in r.case]
    return ok and ok2 and len(two_dim) >= 1, why or f"2 lifts, {len(z2)} monoidality cases ({len(two_dim)} two-dimensional)"


def crit_full_suite():
    t0 = time.perf_counter()
    r = subprocess.run([sys.executable, "-m", "maninkit.cli", "suite", "--all", "--degree", "3"],
                       capture_output=True, text=True, timeout=600)
    dt = time.perf_counter() - t0
    tail = r.stdout.strip().splitlines()[-1] if r.stdout.strip() else r.stderr.strip()[-200:]
    return r.returncode == 0 and dt < 600, f"exit {r.returncode}, {tail}, {dt:.1f}s"


CRITERIA = [
    (1, "poset cohom tables", crit_poset),
    (2, "adjunction oracle", crit_adjunction),
    (3, "white product dims", crit_white),
    (4, "coend comonoid", crit_coend),
    (5, "kappa and tensor coreps", crit_kappa_tensor),
    (6, "coreflection G", crit_coreflection),
    (7, "pi laws and rep counts", crit_pi),
    (8, "lifting", crit_lifting),
    (9, "full suite", crit_full_suite),
]


def _line(num, name, ok, detail):
    return f"criterion {num} ({name}): {'PASS' if ok else 'FAIL'}: {detail}"


@pytest.mark.parametrize("num,name,fn", CRITERIA, ids=[f"criterion{c[0]}" for c in CRITERIA])
def test_criterion(num, name, fn, capsys):
    ok, detail = fn()
    with capsys.disabled():
        print("\n" + _line(num, name, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    failed = 0
    for num, name, fn in CRITERIA:
        ok, detail = fn()
        failed += not ok
        print(_line(num, name, ok, detail))
    sys.exit(1 if failed else 0)
