"""Corepresentations of comonoids in graded algebras, coactions, and tensor
products of corepresentations of bimonoids.

All maps are graded algebra morphisms; laws are compared degreewise up to a
bound ``N`` and failures carry (degree, basis index, the two columns).
"""

from .cohomcoend import (
    Comonoid,
    coev,
    cocomposition,
    cohom,
    cohom_map_left,
    cohom_map_right,
    counit_v,
    kappa,
    unit_comonoid,
    vartheta,
    vartheta_inv,
)
from .exactlin import Matrix
from .quadalg import KU, GradedMorphism, RelationError, identity, manin, sigma23, symmetry, white

GradedComonoid = Comonoid


def compare(f, g, N):
    """None if f and g agree up to degree N, else (degree, index, f column, g column)."""
    w = f.equals(g, N)
    if w is None:
        return None
    k, idx = w
    if k < 0:
        return (k, None, None, None)
    return (k, idx, f.columns(k)[idx], g.columns(k)[idx])


class Failure:
    def __init__(self, law, degree=None, witness=None):
        self.law = law
        self.degree = degree
        self.witness = witness

    def __repr__(self):
        return f"Failure({self.law!r}, degree={self.degree}, witness={self.witness})"


def _fail(law, w):
    if w is None:
        return []
    return [Failure(law, w[0], w[1:])]


class GradedBimonoid(Comonoid):
    """(X, mu, eta, Delta, eps) with all four maps graded algebra morphisms."""

    def __init__(self, obj, mult, unit, comult, counit):
        super().__init__(obj, comult, counit)
        self.mult = mult
        self.unit = unit

    def check(self, N):
        X = self.obj
        ident = identity(X)
        out = []
        for law, w in Comonoid.check(self, N):
            out.append(Failure(law, w[0] if isinstance(w, tuple) and isinstance(w[0], int) else None, w))
        m, e = self.mult, self.unit
        out += _fail("associativity", compare(m @ manin(m, ident), m @ manin(ident, m), N))
        out += _fail("left unit", compare(m @ manin(e, ident), ident, N))
        out += _fail("right unit", compare(m @ manin(ident, e), ident, N))
        D, c = self.comult, self.counit
        lhs = D @ m
        rhs = manin(m, m) @ sigma23(X, X, X, X) @ manin(D, D)
        out += _fail("comultiplication is multiplicative", compare(lhs, rhs, N))
        out += _fail("counit is multiplicative", compare(c @ m, manin(c, c), N))
        out += _fail("comultiplication is unital", compare(D @ e, manin(e, e), N))
        out += _fail("counit is unital", compare(c @ e, identity(KU(X.field)), N))
        return out

    def is_commutative(self, N=2):
        return compare(self.mult @ symmetry(self.obj, self.obj), self.mult, N) is None


def trivial_bimonoid(field):
    u = KU(field)
    i = identity(u)
    return GradedBimonoid(u, i, i, i, i)


class Corepresentation:
    def __init__(self, B, omega, comonoid):
        self.B = B
        self.omega = omega
        self.comonoid = comonoid


def corep_check(omega, comonoid, B, N=2):
    """Delta . omega = (omega o omega) . d_B and eps . omega = v_B, up to degree N."""
    out = []
    if not omega.source.same(cohom(B, B)):
        return [Failure("shape", None, "source is not coend(B)")]
    if not omega.target.same(comonoid.obj):
        return [Failure("shape", None, "target is not the comonoid")]
    bad = omega.violation(N)
    if bad is not None:
        return [Failure("relations", bad.degree, (bad.relation, bad.image))]
    d = cocomposition(B, B, B)
    out += _fail("comultiplication square", compare(comonoid.comult @ omega, manin(omega, omega) @ d, N))
    out += _fail("counit triangle", compare(comonoid.counit @ omega, counit_v(B), N))
    return out


def identity_corep(B):
    E = cohom(B, B)
    return identity(E)


def trivial_corep(B, bimonoid):
    """eta . v_B: coend(B) -> K[u] -> X."""
    return bimonoid.unit @ counit_v(B)


def coaction_from_corep(omega, B):
    """delta = (omega o id) . coev_{B,B}."""
    return vartheta(omega, B, B)


def corep_from_coaction(delta, B, X, check=True):
    return vartheta_inv(delta, B, X, check=check)


def coaction_check(delta, comonoid, B, N=2):
    X = comonoid.obj
    idB = identity(B)
    out = []
    lhs = manin(comonoid.comult, idB) @ delta
    rhs = manin(identity(X), delta) @ delta
    out += _fail("coassociativity", compare(lhs, rhs, N))
    out += _fail("counit", compare(manin(comonoid.counit, idB) @ delta, idB, N))
    return out


def corep_morphism_check(f, omega, omega2, N=2):
    """omega . cohom(f, id_V) == omega' . cohom(id_W, f) as maps cohom(W, V) -> X."""
    V, W = f.source, f.target
    bad = f.violation(N)
    if bad is not None:
        return [Failure("relations", bad.degree, (bad.relation, bad.image))]
    lhs = omega @ cohom_map_left(f, V)
    rhs = omega2 @ cohom_map_right(W, f)
    return _fail("morphism square", compare(lhs, rhs, N))


def tensor_corep(omega, omega2, B, B2, bimonoid):
    """omega'' = mu . (omega o omega') . kappa on B o B'."""
    k = kappa(B, B2, B, B2)
    return bimonoid.mult @ manin(omega, omega2) @ k


def tensor_coaction(delta, delta2, bimonoid):
    """(mu o id o id) . sigma23 . (delta o delta')."""
    X = bimonoid.obj
    B, B2 = delta.source, delta2.source
    s = sigma23(X, B, X, B2)
    return manin(bimonoid.mult, identity(B), identity(B2)) @ s @ manin(delta, delta2)


def unit_corep(bimonoid):
    """(K[u], eta): coend(K[u]) = K[u] -> X."""
    return bimonoid.unit


def tensor_associativity_check(omegas, carriers, bimonoid, N=2):
    """(w1 w2) w3 == w1 (w2 w3) as maps coend(B1 o B2 o B3) -> X."""
    (w1, w2, w3), (B1, B2, B3) = omegas, carriers
    B12, B23 = white(B1, B2), white(B2, B3)
    left = tensor_corep(tensor_corep(w1, w2, B1, B2, bimonoid), w3, B12, B3, bimonoid)
    right = tensor_corep(w1, tensor_corep(w2, w3, B2, B3, bimonoid), B1, B23, bimonoid)
    return _fail("tensor associativity", compare(left, right, N))


def tensor_unit_check(omega, B, bimonoid, N=2):
    """(K[u], eta) o omega == omega == omega o (K[u], eta)."""
    u = KU(B.field)
    e = unit_corep(bimonoid)
    out = _fail("left unit", compare(tensor_corep(e, omega, u, B, bimonoid), omega, N))
    out += _fail("right unit", compare(tensor_corep(omega, e, B, u, bimonoid), omega, N))
    return out


def coactp_check(omega, omega2, B, B2, bimonoid, N=2):
    """The coaction of omega'' equals (mu o id o id) . sigma23 . (delta o delta')."""
    w = tensor_corep(omega, omega2, B, B2, bimonoid)
    lhs = coaction_from_corep(w, white(B, B2))
    rhs = tensor_coaction(coaction_from_corep(omega, B), coaction_from_corep(omega2, B2), bimonoid)
    return _fail("coaction of the tensor corep", compare(lhs, rhs, N))


def symmetry_check(omega, omega2, B, B2, bimonoid, N=2):
    """sigma: B o B' -> B' o B is a corep morphism (needs a commutative bimonoid)."""
    w = tensor_corep(omega, omega2, B, B2, bimonoid)
    w2 = tensor_corep(omega2, omega, B2, B, bimonoid)
    return corep_morphism_check(symmetry(B, B2), w, w2, N)


def corep_coaction_counts(B, comonoid, N=2, budget=10 ** 6):
    """Count corep solutions omega and coaction solutions vartheta(omega) by
    enumerating every degree-1 matrix coend(B)_1 -> X_1.

    Returns (corep count, coaction count); a mismatch in any single case
    raises AssertionError.
    """
    from .quadalg import enumerate_degree1

    X = comonoid.obj
    E = cohom(B, B)
    nc = nd = 0
    for a in enumerate_degree1(E, X, budget):
        om = GradedMorphism(E, X, Matrix._wrap(a, X.field), check=False)
        c = not corep_check(om, comonoid, B, N)
        d = not coaction_check(coaction_from_corep(om, B), comonoid, B, N)
        if c != d:
            raise AssertionError(f"corep and coaction checks disagree at {a.tolist()}")
        nc += c
        nd += d
    return nc, nd


__all__ = [
    "Corepresentation",
    "Failure",
    "GradedBimonoid",
    "GradedComonoid",
    "RelationError",
    "coaction_check",
    "coactp_check",
    "corep_coaction_counts",
    "coaction_from_corep",
    "coev",
    "compare",
    "corep_check",
    "corep_from_coaction",
    "corep_morphism_check",
    "identity_corep",
    "symmetry_check",
    "tensor_associativity_check",
    "tensor_coaction",
    "tensor_corep",
    "tensor_unit_check",
    "trivial_bimonoid",
    "trivial_corep",
    "unit_comonoid",
    "unit_corep",
]
