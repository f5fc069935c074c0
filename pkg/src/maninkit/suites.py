"""Law suites over the shipped corpus.

A suite is a named list of cases; each case is a module-level function and
an argument tuple, so cases can be shipped to worker processes.  A case
returns a list of failure descriptions (empty means pass).  Results come
back as ``LawReport`` rows sorted by (suite, case id).

Suite -> invariant:

    exactlin.properties       rref/kernel/annihilator/kron identities
    quadalg.white-dims        dim (A o B)_k = dim A_k dim B_k
    quadalg.dual              dual is an involution, free <-> full relations
    quadalg.coreflection      counit universal property of G, exact uniqueness
    quadalg.phi-relations     G(A o A') and the white presentation agree in degree 2
    cohomcoend.adjunction     |Hom(cohom(A,B), Z)| = |Hom(B, Z o A)|, vartheta round trips
    cohomcoend.coend          coend comonoid laws, coev naturality, cohom(qp2, qp2) dims
    cohomcoend.kappa          kappa comonoid-morphism squares
    coreps.laws               corep squares, coaction equivalence, exhaustive counts
    coreps.tensor             tensor corep associativity, unit, CoacTP, symmetry
    linrep.pi                 the pi laws as matrix identities
    linrep.reps               rep/action counts, semi-linear hom, monoid bridge
    translate.phi             Phi naturality, formula, comonoid morphism, iso flags
    translate.lift            lifted corepresentations and lifted morphisms
    translate.monoidality     lift(rho (x) rho') = lift rho o lift rho'
    translate.coherence       interchange squares, Comon(F) monoidality, Bimon(F)
    posetcat.table            max-poset and downset cohom tables
    fincat.adjunctions        absent cohom, uniqueness iso, subset category
"""

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

import numpy as np

from . import cohomcoend as cc
from . import coreps, fincat, linrep, posetcat, quadalg, translate
from .exactlin import GF, QQ, Matrix, Subspace, annihilator, intersect, kernel, kron, rref, subspace_sum
from .fixtures import load

CORPUS_ALGEBRAS = ("ku", "free2", "dual_numbers", "quantum_plane_q1", "quantum_plane_q2", "quantum_plane_q3", "exterior2")


@dataclass
class LawReport:
    suite: str
    case: str
    status: str
    degree: int
    witness: str = ""
    elapsed: float = 0.0

    def line(self, timing=False):
        cols = [self.suite, self.case, self.status, str(self.degree), self.witness or "-"]
        if timing:
            cols.append(f"{self.elapsed:.3f}s")
        return "\t".join(cols)


def corpus_dir():
    return str(resources.files("maninkit") / "corpus")


@lru_cache(maxsize=None)
def fixture(name):
    return load(os.path.join(corpus_dir(), name))


def corpus_algebra(name):
    return fixture(name + ".alg").get("algebra")


def _corpus():
    return [(n, corpus_algebra(n)) for n in CORPUS_ALGEBRAS]


def _scalar_identity(n, F, lam):
    return Matrix([[lam if i == j else 0 for j in range(n)] for i in range(n)], F)


def _fails(items):
    return [repr(x) for x in items]


# -- exactlin --------------------------------------------------------------------


def case_linear_properties(ctx, p):
    F = GF(p) if p else QQ
    rng = np.random.default_rng(ctx["seed"])
    out = []
    for trial in range(12):
        r, c = rng.integers(1, 6, size=2)
        m = Matrix(rng.integers(-3, 4, size=(r, c)).tolist(), F)
        e = rref(m)
        if rref(e) != e or Subspace(F, c, m) != Subspace(F, c, e):
            out.append(f"rref trial {trial}")
        if kernel(m).dim + m.rank() != c:
            out.append(f"rank-nullity trial {trial}")
        s = Subspace(F, c, m)
        if annihilator(annihilator(s)) != s:
            out.append(f"double annihilator trial {trial}")
        t = Subspace(F, c, rng.integers(-2, 3, size=(2, c)).tolist())
        if subspace_sum(s, t).dim + intersect(s, t).dim != s.dim + t.dim:
            out.append(f"modular law trial {trial}")
        a, b = (Matrix(rng.integers(-2, 3, size=(2, 3)).tolist(), F) for _ in range(2))
        x, y = (Matrix(rng.integers(-2, 3, size=(3, 2)).tolist(), F) for _ in range(2))
        if kron(a, b) @ kron(x, y) != kron(a @ x, b @ y):
            out.append(f"mixed product trial {trial}")
    return out


# -- quadalg ---------------------------------------------------------------------


def case_white_dims(ctx, a, b):
    A, B = corpus_algebra(a), corpus_algebra(b)
    N = max(ctx["degree"], 4)
    W = quadalg.white_product(A, B)
    C = quadalg.white(A, B)
    out = []
    for k in range(N + 1):
        want = A.dim(k) * B.dim(k)
        if W.dim(k) != want:
            out.append(f"presentation degree {k}: {W.dim(k)} != {want}")
        if C.dim(k) != want:
            out.append(f"componentwise degree {k}: {C.dim(k)} != {want}")
    return out


def case_dual(ctx, a):
    A = corpus_algebra(a)
    D = quadalg.quadratic_dual(A)
    out = []
    if quadalg.quadratic_dual(D).relations != A.relations:
        out.append("dual(dual(A)) != A")
    if D.relations.dim + A.relations.dim != A.ngens ** 2:
        out.append("relation dims do not add up")
    return out


def _coreflection_targets(F):
    three = quadalg.Presentation(F, 2, {3: Subspace(F, 8, [{0: 1, 7: 1}])})
    mixed = quadalg.Presentation(F, 2, {2: Subspace(F, 4, [{0: 1}]), 3: Subspace(F, 8, [{1: 1, 6: 1}])})
    return [
        ("free2", quadalg.truncate(quadalg.free_algebra(F, 2), 3)),
        ("comm", quadalg.truncate(quadalg.quantum_plane(F, 1), 3)),
        ("dual", quadalg.truncate(quadalg.dual_numbers(F), 3)),
        ("cubic", quadalg.truncate(three, 3)),
        ("mixed", quadalg.truncate(mixed, 3)),
    ]


def case_coreflection(ctx, src, tgt):
    fx = fixture("adjunction_f2.fix")
    F = fx.field
    B = fx.get("algebra", src)
    T = dict(_coreflection_targets(F))[tgt]
    n = quadalg.coreflection_universal_check(B, T, ctx["budget"])
    return [] if n >= 1 else ["no morphisms at all (the zero map is missing)"]


def case_phi_relations(ctx, a, b):
    ok, g, w = quadalg.white_relations_match(corpus_algebra(a), corpus_algebra(b))
    return [] if ok else [f"G relations dim {g.dim} != presentation dim {w.dim}"]


# -- cohomcoend ------------------------------------------------------------------


def case_adjunction(ctx, fname, a, b, z):
    fx = fixture(fname)
    A, B, Z = (fx.get("algebra", x) for x in (a, b, z))
    left, right = cc.adjunction_counts(A, B, Z, ctx["budget"])
    out = []
    if left != right:
        out.append(f"|Hom(cohom(A,B), Z)| = {left} != |Hom(B, Z o A)| = {right}")
    nl, nr = cc.adjunction_round_trips(A, B, Z, ctx["budget"])
    if (nl, nr) != (left, right):
        out.append("round trips did not cover the enumerated sets")
    return out


def case_coend(ctx, a):
    A = corpus_algebra(a)
    N = ctx["degree"]
    C = cc.coend_comonoid(A)
    out = [f"{law} at {w}" for law, w in C.check(N)]
    out += _fails(coreps.coaction_check(cc.coev(A, A), C, A, N))
    # coev natural in W for the identity and a scalar map
    for lam in (1, 2):
        g = quadalg.GradedMorphism(A, A, _scalar_identity(A.ngens, A.field, lam))
        lhs = quadalg.manin(cc.cohom_map_right(A, g), quadalg.identity(A)) @ cc.coev(A, A)
        rhs = cc.coev(A, A) @ g
        w = coreps.compare(lhs, rhs, N)
        if w is not None:
            out.append(f"coev naturality lambda={lam} at {w[:2]}")
    return out


def case_qp_dims(ctx):
    A = corpus_algebra("quantum_plane_q2")
    d = cc.cohom(A, A).dims(2)
    return [] if d == (1, 4, 13) else [f"dims {d}"]


def case_kappa(ctx, a, b):
    A, B = corpus_algebra(a), corpus_algebra(b)
    N = min(ctx["degree"], 2)
    k = cc.kappa(A, B, A, B)
    src = cc.coend_comonoid(quadalg.white(A, B))
    tgt = cc.tensor_comonoid(cc.coend_comonoid(A), cc.coend_comonoid(B))
    w = cc.is_comonoid_morphism(k, src, tgt, N)
    out = [] if w is None else [f"{w[0]} at {w[1]}"]
    ku = quadalg.KU(A.field)
    if coreps.compare(cc.kappa(A, ku, A, ku), quadalg.identity(cc.cohom(A, A)), N) is not None:
        out.append("kappa with a K[u] factor is not the identity")
    return out


# -- coreps ----------------------------------------------------------------------


def case_corep_laws(ctx, a):
    A = corpus_algebra(a)
    N = min(ctx["degree"], 3)
    C = cc.coend_comonoid(A)
    om = coreps.identity_corep(A)
    out = _fails(coreps.corep_check(om, C, A, N))
    d = coreps.coaction_from_corep(om, A)
    if coreps.compare(d, cc.coev(A, A), N) is not None:
        out.append("vartheta(id) != coev")
    if coreps.compare(coreps.corep_from_coaction(d, A, C.obj), om, N) is not None:
        out.append("round trip")
    triv = coreps.trivial_bimonoid(A.field)
    out += _fails(coreps.corep_check(coreps.trivial_corep(A, triv), triv, A, N))
    # a perturbed identity corep must be caught
    if A.ngens > 1:
        m = Matrix.identity(A.ngens ** 2, A.field).tolist()
        m[0][1] = 1
        bad = quadalg.GradedMorphism(om.source, om.target, Matrix(m, A.field), check=False)
        if not coreps.corep_check(bad, C, A, N) and bad.is_valid():
            out.append("perturbed corep passed")
    return out


def case_corep_counts(ctx, a):
    fx = fixture("monoidality_f3.fix")
    F = fx.field
    T = translate.tstar(F)
    B = translate.bimon_of_contravariant(T, fx.get("bimonoid", "z2"))
    A = fixture("adjunction_f3.fix").get("algebra", a)
    nc, nd = coreps.corep_coaction_counts(A, B, min(ctx["degree"], 2), ctx["budget"])
    return [] if nc == nd else [f"{nc} coreps vs {nd} coactions"]


def _lifted(fx, F, names):
    T = translate.tstar(F)
    out = []
    for n in names:
        _, rho, nV = fx.reps[n]
        out.append((translate.lift_rep(T, rho, nV), T.obj(nV)))
    return T, out


def case_tensor(ctx, fname, bname, r1, r2, r3):
    fx = fixture(fname)
    F = fx.field
    N = min(ctx["degree"], 2)
    H = fx.get("bimonoid", bname)
    T, L = _lifted(fx, F, (r1, r2, r3))
    B = translate.bimon_of_contravariant(T, H)
    (w1, c1), (w2, c2), (w3, c3) = L
    out = _fails(coreps.tensor_associativity_check((w1, w2, w3), (c1, c2, c3), B, N))
    out += _fails(coreps.tensor_unit_check(w1, c1, B, N))
    out += _fails(coreps.coactp_check(w1, w2, c1, c2, B, N))
    out += _fails(coreps.corep_check(coreps.tensor_corep(w1, w2, c1, c2, B), B, quadalg.white(c1, c2), N))
    if B.is_commutative(N):
        out += _fails(coreps.symmetry_check(w1, w2, c1, c2, B, N))
    return out


# -- linrep ----------------------------------------------------------------------


def case_pi(ctx, p):
    F = GF(p) if p else QQ
    return [f"{law} {case}" for law, case, ok in linrep.pi_laws((1, 2), F, ctx["seed"]) if not ok]


def case_reps(ctx, which):
    F = GF(2)
    M = {
        "Z/2": linrep.cyclic_group_algebra(2, F),
        "dual": linrep.dual_numbers_algebra(F),
        "KxK": linrep.product_algebra(F),
        "end1": linrep.end_monoid(1, F),
    }[which]
    out = []
    for nV in (1, 2):
        reps = linrep.enumerate_reps(M, nV, ctx["budget"])
        acts = linrep.enumerate_actions(M, nV, ctx["budget"])
        if len(reps) != len(acts):
            out.append(f"dim {nV}: {len(reps)} reps vs {len(acts)} actions")
        ra = {linrep.action_from_rep(r, nV).tolist().__repr__() for r in reps}
        if ra != {a.tolist().__repr__() for a in acts}:
            out.append(f"dim {nV}: theta does not match the sets")
    return out


def case_semilinear(ctx):
    F = GF(2)
    out = []
    A = linrep.SemiLinearSet(range(2), 1, F)
    B = linrep.SemiLinearSet(range(1), 1, F)
    Z = linrep.SemiLinearSet(range(1), 1, F)
    ok, n, m = linrep.verify_hom_universal(A, B, Z)
    if not ok:
        out.append(f"hom universal property {n} vs {m}")
    table = [[0, 1], [1, 0]]
    for rho in ([[[1]], [[1]]], [[[1, 0], [0, 1]], [[0, 1], [1, 0]]], [[[1]], [[0]]]):
        mats = [Matrix(r, F) for r in rho]
        if linrep.monoid_rep_direct(table, 0, mats) != linrep.monoid_rep_bridge(table, 0, mats):
            out.append(f"bridge disagrees on {rho}")
    return out


# -- translate -------------------------------------------------------------------


def _functor(name, p):
    F = GF(p) if p else QQ
    return translate.functor_by_name(name, F)


def case_phi(ctx, name, p):
    Fn = _functor(name, p)
    K = Fn.field
    N = min(ctx["degree"], 2)
    rng = np.random.default_rng(ctx["seed"])
    out = []
    for nV in (1, 2):
        out += _fails(translate.phi_comonoid_check(Fn, nV, N))
    f = Matrix(rng.integers(-2, 3, size=(2, 1)).tolist(), K)
    h = Matrix(rng.integers(-2, 3, size=(1, 2)).tolist(), K)
    out += _fails(translate.phi_naturality(Fn, f, 2, h, N))
    g = Matrix(rng.integers(-2, 3, size=(4, 2)).tolist(), K)
    out += _fails(translate.phi_formula_check(Fn, g, 2, 2, N))
    iso = translate.phi_transform(Fn, 2, 2).iso_by_degree(ctx["degree"])
    want = [True] * len(iso) if Fn.strong else [k < 2 for k in range(len(iso))]
    if iso != want:
        out.append(f"iso flags {iso}")
    return out


def case_lift(ctx, name, monoid, rep):
    fx = fixture("lifting.fix")
    Fn = translate.functor_by_name(name, fx.field)
    M = fx.get("monoid", monoid)
    _, rho, nV = fx.get("rep", rep)
    out = _fails(translate.lift_check(Fn, M, rho, nV, ctx["degree"]))
    # rho as a morphism of reps from (V, rho) to itself and a scalar multiple
    two = _scalar_identity(nV, fx.field, 2)
    out += _fails(translate.lift_morphism_check(Fn, two, rho, rho, min(ctx["degree"], 2)))
    return out


def case_monoidality(ctx, fname, bname, r1, r2):
    fx = fixture(fname)
    T = translate.tstar(fx.field)
    H = fx.get("bimonoid", bname)
    _, a, na = fx.get("rep", r1)
    _, b, nb = fx.get("rep", r2)
    return _fails(translate.verify_lift_monoidality(T, H, a, na, b, nb, ctx["degree"]))


def case_coherence(ctx, p):
    F = GF(p) if p else QQ
    T = translate.tstar(F)
    N = min(ctx["degree"], 2)
    out = []
    for dims in ((2, 1, 2, 2), (2, 2, 1, 2), (1, 2, 2, 1)):
        out += _fails(translate.lemsigmaphi_check(T, dims, N))
    d, kk = linrep.dual_numbers_algebra(F), linrep.product_algebra(F)
    for Fn in ([T] + ([translate.sstar(F)] if p != 2 else [])):
        out += _fails(translate.comon_monoidality_check(Fn, d, kk, N))
        C = translate.comon_of_contravariant(Fn, d)
        out += [f"Comon({Fn.name}) {law} {w}" for law, w in C.check(N)]
    for H in (linrep.cyclic_group_algebra(2, F), linrep.function_algebra([0, 1], lambda a, b: (a + b) % 2, 0, F)):
        out += _fails(translate.bimon_of_contravariant(T, H).check(N))
    S = translate.sstar(F) if p != 2 else None
    if S is not None:
        d1, d2 = translate.dims_comparison(S, 2, 2, 2)
        if (d1[2], d2[2]) != (10, 9):
            out.append(f"S* degree-2 dims {d1[2]} vs {d2[2]}")
    return out


# -- poset / fincat --------------------------------------------------------------


def case_poset(ctx, n):
    t = posetcat.poset_table(n)
    out = []
    if t["mismatch_P"]:
        out.append(f"max poset mismatches {t['mismatch_P'][:3]}")
    if t["mismatch_C"]:
        out.append(f"downset mismatches {t['mismatch_C'][:3]}")
    want = n * (n - 1) // 2
    if t["witness_count"] != want:
        out.append(f"{t['witness_count']} differing pairs, expected {want}")
    return out


def case_fincat(ctx, which):
    fx = fixture("categories.fix")
    out = []
    if which == "m3":
        if fincat.relative_adjunction_with_parameter(fx.get("category", "m3")) is not None:
            out.append("cohom found in M3")
    elif which == "uniqueness":
        C = fincat.max_poset_with_duplicate(3, 2)
        a1 = fincat.relative_adjunction_with_parameter(C)
        a2 = fincat.relative_adjunction_with_parameter(C, order="reverse")
        g = fincat.uniqueness_iso(a1, a2)
        if len(g) != len(a1.cohom):
            out.append("uniqueness iso incomplete")
    else:
        adj = fincat.relative_adjunction_with_parameter(fx.get("category", which))
        if adj is None:
            out.append("no cohom")
    return out


# -- registry --------------------------------------------------------------------


def _pairs(names):
    return [(a, b) for a in names for b in names]


# One line per suite: the invariant it exercises.
SUITE_DOCS = {
    "exactlin.properties": "rref idempotence, rank-nullity, double annihilator, modular law, Kronecker mixed product",
    "quadalg.white-dims": "white product presentation agrees with the componentwise tensor product dims",
    "quadalg.dual": "quadratic duality is an involution and relation spaces are complementary",
    "quadalg.coreflection": "the counit of G is universal: Hom(B, T) = Hom(B, G T) by enumeration",
    "quadalg.phi-relations": "G of the componentwise product recovers the white product relations in degree 2",
    "cohomcoend.adjunction": "|Hom(cohom(A,B), Z)| = |Hom(B, Z o A)| and vartheta round trips",
    "cohomcoend.coend": "coend comonoid laws, coev as a coaction, coev naturality",
    "cohomcoend.kappa": "kappa is a comonoid morphism and trivial on K[u] factors",
    "coreps.laws": "corep squares, corep/coaction correspondence, perturbed coreps are rejected",
    "coreps.tensor": "tensor corep associativity, unit, coaction identity, symmetry",
    "linrep.pi": "the pi laws as exact matrix identities",
    "linrep.reps": "representations and actions correspond bijectively; semi-linear hom universality",
    "translate.phi": "Phi naturality, formula, comonoid morphism, iso flags by degree",
    "translate.lift": "lifted representations are corepresentations; lifting is functorial",
    "translate.monoidality": "phi is an isomorphism of corepresentations between lifted tensor products",
    "translate.coherence": "phi/sigma interchange, Comon(F) monoidality, translated bimonoid axioms",
    "posetcat.table": "max-poset and downset cohom tables match their closed forms",
    "fincat.adjunctions": "cohom search, absence in M3, uniqueness up to unique iso",
}


def registry():
    """{suite: [(case id, function name, args)]}"""
    R = {}
    R["exactlin.properties"] = [(f"F_{p}" if p else "Q", "case_linear_properties", (p,)) for p in (0, 2, 3, 5)]
    R["quadalg.white-dims"] = [(f"{a}.{b}", "case_white_dims", (a, b)) for a, b in _pairs(CORPUS_ALGEBRAS)]
    R["quadalg.dual"] = [(a, "case_dual", (a,)) for a in CORPUS_ALGEBRAS]
    srcs = ["ku", "square", "dual", "comm", "ext", "free2"]
    tgts = [t for t, _ in _coreflection_targets(GF(2))]
    R["quadalg.coreflection"] = [(f"{s}->{t}", "case_coreflection", (s, t)) for s in srcs for t in tgts]
    R["quadalg.phi-relations"] = [(f"{a}.{b}", "case_phi_relations", (a, b)) for a, b in _pairs(CORPUS_ALGEBRAS)]
    trip2 = [("dual", "comm", "free2"), ("comm", "comm", "comm"), ("ext", "free2", "dual"), ("square", "ext", "comm"),
             ("free2", "dual", "ku"), ("ku", "comm", "ext")]
    trip3 = [("dual", "comm", "free2"), ("comm", "qm", "comm"), ("qm", "qm", "dual"), ("free2", "dual", "qm"),
             ("ku", "comm", "qm"), ("comm", "free2", "ku")]
    R["cohomcoend.adjunction"] = (
        [(f"F_2:{a},{b},{z}", "case_adjunction", ("adjunction_f2.fix", a, b, z)) for a, b, z in trip2]
        + [(f"F_3:{a},{b},{z}", "case_adjunction", ("adjunction_f3.fix", a, b, z)) for a, b, z in trip3]
    )
    R["cohomcoend.coend"] = [(a, "case_coend", (a,)) for a in CORPUS_ALGEBRAS] + [("dims.qp2", "case_qp_dims", ())]
    two_gen = ["free2", "quantum_plane_q2", "quantum_plane_q3", "exterior2", "dual_numbers"]
    R["cohomcoend.kappa"] = [(f"{a}.{b}", "case_kappa", (a, b)) for a, b in
                             [("quantum_plane_q2", "dual_numbers"), ("dual_numbers", "quantum_plane_q3"),
                              ("dual_numbers", "dual_numbers"), ("ku", "quantum_plane_q2"), ("exterior2", "dual_numbers")]]
    R["coreps.laws"] = [(a, "case_corep_laws", (a,)) for a in two_gen + ["ku", "quantum_plane_q1"]]
    R["coreps.laws"] += [(f"count.{a}", "case_corep_counts", (a,)) for a in ("ku", "dual", "comm")]
    R["coreps.tensor"] = [
        ("F_3:z2.swap.sign.trivial", "case_tensor", ("monoidality_f3.fix", "z2", "swap", "sign", "trivial")),
        ("F_3:z2.sign.sign.swap", "case_tensor", ("monoidality_f3.fix", "z2", "sign", "sign", "swap")),
        ("F_3:fz2.split.split.split", "case_tensor", ("monoidality_f3.fix", "fz2", "split", "split", "split")),
        ("Q:z2.sign.trivial.sign", "case_tensor", ("monoidality_q.fix", "z2", "sign", "trivial", "sign")),
    ]
    R["linrep.pi"] = [("Q", "case_pi", (0,)), ("F_3", "case_pi", (3,))]
    R["linrep.reps"] = [(w, "case_reps", (w,)) for w in ("Z/2", "dual", "KxK", "end1")] + [("semilinear", "case_semilinear", ())]
    R["translate.phi"] = [(f"{n}:{'F_3' if p else 'Q'}", "case_phi", (n, p)) for n in ("tstar", "sstar") for p in (0, 3)]
    R["translate.lift"] = [
        ("tstar.dual.nilpotent", "case_lift", ("tstar", "dual", "nilpotent")),
        ("tstar.prod.diagonal", "case_lift", ("tstar", "prod", "diagonal")),
        ("sstar.prod.diagonal", "case_lift", ("sstar", "prod", "diagonal")),
        ("sstar.dual.nilpotent", "case_lift", ("sstar", "dual", "nilpotent")),
    ]
    R["translate.monoidality"] = [
        ("Q:z2.sign.sign", "case_monoidality", ("monoidality_q.fix", "z2", "sign", "sign")),
        ("Q:z2.sign.trivial", "case_monoidality", ("monoidality_q.fix", "z2", "sign", "trivial")),
        ("F_3:z2.sign.sign", "case_monoidality", ("monoidality_f3.fix", "z2", "sign", "sign")),
        ("F_3:z2.trivial.swap", "case_monoidality", ("monoidality_f3.fix", "z2", "trivial", "swap")),
        ("F_3:z2.swap.swap", "case_monoidality", ("monoidality_f3.fix", "z2", "swap", "swap")),
        ("F_3:fz2.split.split", "case_monoidality", ("monoidality_f3.fix", "fz2", "split", "split")),
    ]
    R["translate.coherence"] = [("Q", "case_coherence", (0,)), ("F_3", "case_coherence", (3,)), ("F_2", "case_coherence", (2,))]
    R["posetcat.table"] = [("n=8", "case_poset", (8,))]
    R["fincat.adjunctions"] = [(w, "case_fincat", (w,)) for w in ("m3", "uniqueness", "max4", "subsets3", "chain")]
    return R


def _run_case(job):
    suite, case_id, fname, args, degree, seed, budget = job
    ctx = {"degree": degree, "seed": seed, "budget": budget}
    t0 = time.perf_counter()
    try:
        fails = globals()[fname](ctx, *args)
        status = "PASS" if not fails else "FAIL"
        witness = fails[0] if fails else ""
    except (quadalg.BudgetError, OverflowError) as exc:
        status, witness = "BUDGET", str(exc)
    return LawReport(suite, case_id, status, degree, witness, time.perf_counter() - t0)


def run_suites(names=None, degree=4, seed=0, budget=quadalg.DEFAULT_BUDGET, jobs=1):
    R = registry()
    names = sorted(R) if not names else list(names)
    for n in names:
        if n not in R:
            raise KeyError(n)
    jobsl = [(s, cid, fn, args, degree, seed, budget) for s in names for cid, fn, args in R[s]]
    if jobs and jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            reports = list(ex.map(_run_case, jobsl))
    else:
        reports = [_run_case(j) for j in jobsl]
    return sorted(reports, key=lambda r: (r.suite, r.case))
