"""maninkit command line.

Exit codes: 0 pass, 1 law failure, 2 input error, 3 budget exceeded.
"""

import argparse
import os
import sys

from . import cohomcoend as cc
from . import coreps, fincat, linrep, posetcat, quadalg, suites, translate
from .exactlin import FieldError, field_from_name
from .fixtures import FixtureError, load

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


class Failed(Exception):
    pass


def _default_degree():
    v = os.environ.get("MANINKIT_DEGREE")
    if v is None:
        return 4
    try:
        return int(v)
    except ValueError:
        raise FixtureError(f"MANINKIT_DEGREE must be an integer, got {v!r}") from None


def _resolve(path):
    """A path, or the name of a shipped corpus file (with or without suffix)."""
    if os.path.exists(path):
        return path
    base = suites.corpus_dir()
    for cand in (path, path + ".alg", path + ".fix"):
        full = os.path.join(base, cand)
        if os.path.exists(full):
            return full
    raise FixtureError(f"no such file or corpus entry: {path}")


def _split_ref(ref):
    """``file[:name]``"""
    if ":" in ref and not os.path.exists(ref):
        path, name = ref.rsplit(":", 1)
        return path, name
    return ref, None


def _algebra(ref):
    path, name = _split_ref(ref)
    return load(_resolve(path)).get("algebra", name)


def _fixture(ref, strict=True):
    return load(_resolve(ref), strict)


def _dims(A, N):
    return " ".join(str(d) for d in A.dims(N))


def _describe(label, A, N, out):
    P = A.presentation() if hasattr(A, "presentation") else A
    out.append(f"{label}: {A.ngens} generators, {P.relations.dim} quadratic relations")
    out.append(f"dims 0..{N}: {_dims(A, N)}")


def _relations(A, out):
    P = A.presentation()
    names = P.gen_names()
    n = len(names)
    F = A.field
    for row in P.relations.ech.rows.values():
        terms = []
        for idx, c in sorted(row.items()):
            i, j = divmod(idx, n)
            terms.append(f"{F.format(c)} {names[i]} {names[j]}")
        out.append("  rel " + " + ".join(terms))


# -- construction commands ------------------------------------------------------------


def cmd_dual(a, out):
    A = _algebra(a.algebra)
    D = quadalg.quadratic_dual(A)
    _describe("dual", D, a.degree, out)
    _relations(D, out)


def cmd_white(a, out):
    A, B = _algebra(a.left), _algebra(a.right)
    W = quadalg.white_product(A, B)
    _describe("white", W, a.degree, out)
    want = [A.dim(k) * B.dim(k) for k in range(a.degree + 1)]
    if list(W.dims(a.degree)) != want:
        raise Failed(f"presentation dims differ from the componentwise product {want}")


def cmd_black(a, out):
    A, B = _algebra(a.left), _algebra(a.right)
    _describe("black", quadalg.black_product(A, B), a.degree, out)


def cmd_cohom(a, out):
    A, B = _algebra(a.left), _algebra(a.right)
    C = cc.cohom(A, B)
    _describe("cohom", C, a.degree, out)
    d = cc.coev(A, B)
    bad = d.violation()
    if bad is not None:
        raise Failed(f"coev is not a morphism: {bad}")


def cmd_coend(a, out):
    A = _algebra(a.algebra)
    C = cc.coend_comonoid(A)
    _describe("coend", C.obj, a.degree, out)
    out.append("comultiplication on generators:")
    E = C.obj
    names = E.gen_names()
    cols = C.comult.columns(1)
    n = E.ngens
    for j, col in enumerate(cols):
        terms = [f"{E.field.format(c)}*{names[i // n]}|{names[i % n]}" for i, c in sorted(col.items())]
        out.append(f"  {names[j]} -> " + " + ".join(terms))


def cmd_truncate(a, out):
    A = _algebra(a.algebra)
    T = quadalg.truncate(A, a.degree)
    out.append(f"truncation dims 0..{a.degree}: {_dims(T, a.degree)}")
    problem = T.check()
    if problem:
        raise Failed(problem)
    G, _ = quadalg.coreflection_G(T) if a.degree >= 2 else (None, None)
    if G is not None:
        out.append(f"coreflection: {G.ngens} generators, {G.relations.dim} relations")


# -- verification commands ----------------------------------------------------------


def cmd_verify_comonoid(a, out):
    A = _algebra(a.algebra)
    C = cc.coend_comonoid(A)
    bad = C.check(a.degree)
    out.append(f"coend comonoid to degree {a.degree}: {'ok' if not bad else 'FAIL'}")
    if bad:
        raise Failed(f"{bad[0][0]} at {bad[0][1]}")


def cmd_verify_adjunction(a, out):
    A, B, Z = _algebra(a.a), _algebra(a.b), _algebra(a.z)
    left, right = cc.adjunction_counts(A, B, Z, a.budget)
    out.append(f"|Hom(cohom(A,B), Z)| = {left}")
    out.append(f"|Hom(B, Z o A)| = {right}")
    if left != right:
        raise Failed("counts differ")
    cc.adjunction_round_trips(A, B, Z, a.budget)
    out.append("vartheta round trips: ok")


def cmd_verify_corep(a, out):
    A = _algebra(a.algebra)
    N = a.degree
    C = cc.coend_comonoid(A)
    om = coreps.identity_corep(A)
    fails = coreps.corep_check(om, C, A, N)
    fails += coreps.coaction_check(coreps.coaction_from_corep(om, A), C, A, N)
    triv = coreps.trivial_bimonoid(A.field)
    fails += coreps.corep_check(coreps.trivial_corep(A, triv), triv, A, N)
    out.append(f"identity and trivial corepresentations to degree {N}: {'ok' if not fails else 'FAIL'}")
    if fails:
        raise Failed(repr(fails[0]))


def _lift_inputs(fx, a):
    names = a.reps or sorted(fx.reps)
    return [(n,) + fx.get("rep", n) for n in names]


def cmd_tensor_corep(a, out):
    fx = _fixture(a.fixture)
    T = translate.tstar(fx.field)
    H = fx.get("bimonoid", a.bimonoid)
    B = translate.bimon_of_contravariant(T, H)
    r1, r2 = (fx.get("rep", n) for n in (a.rep1, a.rep2))
    w1, w2 = translate.lift_rep(T, r1[1], r1[2]), translate.lift_rep(T, r2[1], r2[2])
    c1, c2 = T.obj(r1[2]), T.obj(r2[2])
    N = a.degree
    w = coreps.tensor_corep(w1, w2, c1, c2, B)
    out.append(f"tensor corepresentation on {c1.ngens}x{c2.ngens} generators over T*({H.name})")
    fails = coreps.corep_check(w, B, quadalg.white(c1, c2), N)
    fails += coreps.coactp_check(w1, w2, c1, c2, B, N)
    out.append(f"corep squares and coaction identity to degree {N}: {'ok' if not fails else 'FAIL'}")
    if fails:
        raise Failed(repr(fails[0]))


def cmd_verify_pi_laws(a, out):
    F = field_from_name(a.field)
    dims = tuple(int(x) for x in a.dims.split(","))
    res = linrep.pi_laws(dims, F, a.seed)
    laws = sorted({law for law, _, _ in res})
    bad = [(law, case) for law, case, ok in res if not ok]
    for law in laws:
        n = sum(1 for l, _, _ in res if l == law)
        nb = sum(1 for l, _ in bad if l == law)
        out.append(f"{law}: {n - nb}/{n}")
    if bad:
        raise Failed(f"{bad[0][0]} fails on {bad[0][1]}")


def cmd_verify_rep(a, out):
    fx = _fixture(a.fixture, strict=False)
    fails = []
    for name in sorted(set(fx.monoids) | set(fx.bimonoids)):
        M = fx.monoids.get(name) or fx.bimonoids[name]
        bad = [f"{name}: {law}" for law in M.check()]
        out.append(f"{name} ({'bimonoid' if name in fx.bimonoids else 'monoid'}, dim {M.dim}): "
                   + ("ok" if not bad else ", ".join(bad)))
        fails += bad
    for name in sorted(fx.reps):
        mname, rho, nV = fx.reps[name]
        M = fx.monoids.get(mname) or fx.bimonoids[mname]
        bad = linrep.is_rep(rho, M, nV)
        act = linrep.action_from_rep(rho, nV)
        bad += linrep.is_action(act, M, nV)
        out.append(f"{name} of {mname} on K^{nV}: {'ok' if not bad else ', '.join(bad)}")
        fails += [f"{name}: {law}" for law in bad]
    if a.count:
        if not fx.field.p:
            raise FieldError("--count needs a finite field")
        for name in sorted(set(fx.monoids) | set(fx.bimonoids)):
            M = fx.monoids.get(name) or fx.bimonoids[name]
            for nV in range(1, a.count + 1):
                r = len(linrep.enumerate_reps(M, nV, a.budget))
                s = len(linrep.enumerate_actions(M, nV, a.budget))
                out.append(f"{name} dim {nV}: {r} representations, {s} actions")
                if r != s:
                    fails.append(f"{name} dim {nV}: counts differ")
    if fails:
        raise Failed(fails[0])


def cmd_tensor_rep(a, out):
    fx = _fixture(a.fixture)
    H = fx.get("bimonoid", a.bimonoid)
    (_, r1, n1), (_, r2, n2) = fx.get("rep", a.rep1), fx.get("rep", a.rep2)
    rr = linrep.tensor_rep(r1, r2, H, n1, n2)
    labels = getattr(H, "labels", None) or [str(i) for i in range(H.dim)]
    n = n1 * n2
    for j, lab in enumerate(labels):
        col = [row[j] for row in rr.tolist()]
        rows = [" ".join(str(x) for x in col[i * n:(i + 1) * n]) for i in range(n)]
        out.append(f"{lab} -> " + " / ".join(rows))
    bad = linrep.is_rep(rr, H, n)
    if bad:
        raise Failed(", ".join(bad))


def cmd_lift_rep(a, out):
    fx = _fixture(a.fixture)
    Fn = translate.functor_by_name(a.functor, fx.field)
    fails = []
    for name, mname, rho, nV in _lift_inputs(fx, a):
        M = fx.monoids.get(mname) or fx.bimonoids[mname]
        bad = translate.lift_check(Fn, M, rho, nV, a.degree)
        iso = translate.phi_transform(Fn, nV, nV).iso_by_degree(a.degree)
        flags = "".join("y" if x else "n" for x in iso)
        out.append(f"{name}: lift via {Fn.name} to degree {a.degree}: {'ok' if not bad else 'FAIL'}; Phi iso by degree {flags}")
        fails += bad
    if fails:
        raise Failed(repr(fails[0]))


def cmd_verify_lift_monoidality(a, out):
    fx = _fixture(a.fixture)
    T = translate.tstar(fx.field)
    H = fx.get("bimonoid", a.bimonoid)
    r1, r2 = fx.get("rep", a.rep1), fx.get("rep", a.rep2)
    bad = translate.verify_lift_monoidality(T, H, r1[1], r1[2], r2[1], r2[2], a.degree)
    out.append(f"phi is an isomorphism of corepresentations to degree {a.degree}: {'ok' if not bad else 'FAIL'}")
    if bad:
        raise Failed(repr(bad[0]))


def cmd_poset_table(a, out):
    t = posetcat.poset_table(a.n)
    n = a.n
    out.append("cohom in the max-poset (row x, column y):")
    for x in range(n + 1):
        out.append(" ".join(str(v) for v in t["table_P"][x]))
    out.append("cohom of downsets in the subset category:")
    for x in range(n + 1):
        out.append(" ".join(t["table_C"][x]))
    out.append(f"pairs where the two cohoms differ: {t['witness_count']}")
    if t["mismatch_P"] or t["mismatch_C"]:
        raise Failed("brute force disagrees with the closed form")


def cmd_fincat_search(a, out):
    fx = _fixture(a.fixture)
    names = [a.category] if a.category else sorted(fx.categories)
    for name in names:
        M = fx.get("category", name)
        adj = fincat.relative_adjunction_with_parameter(M, order=a.order)
        labels = M.cat.labels
        if adj is None:
            out.append(f"{name}: no internal cohom")
            continue
        out.append(f"{name}: cohom exists on {len(labels)} objects")
        if len(labels) <= 16:
            for (v, w), c in adj.table().items():
                out.append(f"  cohom({labels[v]}, {labels[w]}) = {labels[c]}")


def cmd_suite(a, out):
    if a.list:
        for name, doc in sorted(suites.SUITE_DOCS.items()):
            out.append(f"{name}\t{doc}")
        return
    names = None if a.all or not a.names else a.names
    reports = suites.run_suites(names, degree=a.degree, seed=a.seed, budget=a.budget, jobs=a.jobs)
    for r in reports:
        out.append(r.line(a.timing))
    npass = sum(r.status == "PASS" for r in reports)
    out.append(f"# {npass}/{len(reports)} cases pass")
    if any(r.status == "BUDGET" for r in reports) and all(r.status != "FAIL" for r in reports):
        raise quadalg.BudgetError("some cases exceeded the budget")
    if npass != len(reports):
        raise Failed("law failures")


# -- parser ----------------------------------------------------------------------------


def build_parser():
    p = argparse.ArgumentParser(prog="maninkit", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--degree", type=int, default=None, help="truncation degree (default 4 or MANINKIT_DEGREE)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--budget", type=int, default=quadalg.DEFAULT_BUDGET)
    common.add_argument("--jobs", type=int, default=1)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, *args):
        s = sub.add_parser(name, parents=[common])
        for arg in args:
            if isinstance(arg, tuple):
                s.add_argument(*arg[0], **arg[1])
            else:
                s.add_argument(arg)
        s.set_defaults(fn=fn)
        return s

    add("dual", cmd_dual, "algebra")
    add("white", cmd_white, "left", "right")
    add("black", cmd_black, "left", "right")
    add("cohom", cmd_cohom, "left", "right")
    add("coend", cmd_coend, "algebra")
    add("truncate", cmd_truncate, "algebra")
    add("verify-comonoid", cmd_verify_comonoid, "algebra")
    add("verify-adjunction", cmd_verify_adjunction, "a", "b", "z")
    add("verify-corep", cmd_verify_corep, "algebra")
    add("tensor-corep", cmd_tensor_corep, "fixture", "bimonoid", "rep1", "rep2")
    add("verify-pi-laws", cmd_verify_pi_laws, (["--field"], {"default": "Q"}), (["--dims"], {"default": "1,2"}))
    add("verify-rep", cmd_verify_rep, "fixture", (["--count"], {"type": int, "default": 0}))
    add("tensor-rep", cmd_tensor_rep, "fixture", "bimonoid", "rep1", "rep2")
    add("lift-rep", cmd_lift_rep, "fixture", (["--functor"], {"choices": ["tstar", "sstar"], "default": "tstar"}),
        (["--rep"], {"dest": "reps", "action": "append"}))
    add("verify-lift-monoidality", cmd_verify_lift_monoidality, "fixture", "bimonoid", "rep1", "rep2")
    add("poset-table", cmd_poset_table, (["--n"], {"type": int, "default": 8}))
    add("fincat-search", cmd_fincat_search, "fixture", (["--category"], {"default": None}),
        (["--order"], {"choices": ["forward", "reverse"], "default": None}))
    add("suite", cmd_suite, (["names"], {"nargs": "*"}), (["--all"], {"action": "store_true"}),
        (["--timing"], {"action": "store_true"}), (["--list"], {"action": "store_true"}))
    return p


def run(argv=None, stdout=None):
    """Run a command line; returns (exit code, output lines)."""
    stdout = stdout or sys.stdout
    out = []
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return (EXIT_OK if e.code == 0 else EXIT_INPUT), out
    code = EXIT_OK
    try:
        if args.degree is None:
            args.degree = _default_degree()
        if args.degree < 0:
            raise FixtureError("--degree must be non-negative")
        if getattr(args, "order", None) == "forward":
            args.order = None
        args.fn(args, out)
    except Failed as e:
        out.append(f"FAIL: {e}")
        code = EXIT_FAIL
    except (quadalg.BudgetError, OverflowError) as e:
        out.append(f"budget exceeded: {e}")
        code = EXIT_BUDGET
    except (FixtureError, FieldError, KeyError, quadalg.RelationError, quadalg.TruncationError, ValueError) as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else e
        out.append(f"error: {msg}")
        code = EXIT_INPUT
    for line in out:
        print(line, file=stdout)
    return code, out


def main(argv=None):
    code, _ = run(argv)
    return code


if __name__ == "__main__":
    sys.exit(main())
