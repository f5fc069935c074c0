"""Internal cohom objects for the Manin product and coendomorphism comonoids.

``cohom(A, B) = A^! * B`` with generators ``z^i_j`` (index ``i*m + j``, ``i``
running over generators of ``A`` and ``j`` over generators of ``B``).  The
coevaluation ``coev: B -> cohom(A, B) o A`` sends ``y_j`` to
``sum_i z^i_j (x) x_i``.  Every structure map below is produced by the
adjunction bijection ``vartheta`` and its inverse.
"""

from .exactlin import Matrix
from .quadalg import (
    GradedMorphism,
    KU,
    RelationError,
    black_product,
    enumerate_degree1,
    identity,
    manin,
    quadratic_dual,
    sigma23,
    white,
)

_cache = {}


def cohom(A, B):
    """The object A^! * B; cached by the keys of A and B."""
    key = (A.key(), B.key())
    C = _cache.get(key)
    if C is None:
        C = black_product(quadratic_dual(A), B)
        _cache[key] = C
    return C


def coev(A, B):
    """coev_{A,B}: B -> cohom(A, B) o A."""
    n, m = A.ngens, B.ngens
    Z = cohom(A, B)
    cols = []
    for j in range(m):
        cols.append({(i * m + j) * n + i: 1 for i in range(n)})
    d1 = Matrix.from_columns(cols, n * m * n, A.field)
    return GradedMorphism(B, white(Z, A), d1, check=False)


def vartheta(f, A, B):
    """Hom(cohom(A, B), C) -> Hom(B, C o A), f |-> (f o id_A) . coev."""
    return manin(f, identity(A)) @ coev(A, B)


def vartheta_inv(g, A, C, check=True):
    """Hom(B, C o A) -> Hom(cohom(A, B), C).

    The degree-1 part is the reshape f[c, i*m + j] = g[c*n + i, j]; with
    ``check`` the result is validated and a RelationError carries the witness.
    """
    B = g.source
    n, m = A.ngens, B.ngens
    nC = C.ngens
    if g.degree1.rows != nC * n:
        raise ValueError("target of g is not C o A")
    f1 = Matrix._wrap(g.degree1.a.reshape(nC, n * m), A.field)
    return GradedMorphism(cohom(A, B), C, f1, check=check)


def cocomposition(U, V, W):
    """d: cohom(U, W) -> cohom(V, W) o cohom(U, V)."""
    g = manin(identity(cohom(V, W)), coev(U, V)) @ coev(V, W)
    return vartheta_inv(g, U, white(cohom(V, W), cohom(U, V)))


def counit_v(A):
    """v: cohom(A, A) -> K[u], z^i_j |-> delta_ij u."""
    return vartheta_inv(identity(A), A, KU(A.field))


def kappa(A, Ap, B, Bp):
    """cohom(A o A', B o B') -> cohom(A, B) o cohom(A', B')."""
    Z, Zp = cohom(A, B), cohom(Ap, Bp)
    g = sigma23(Z, A, Zp, Ap) @ manin(coev(A, B), coev(Ap, Bp))
    return vartheta_inv(g, white(A, Ap), white(Z, Zp))


def cohom_map_right(V, g):
    """cohom(V, g): cohom(V, W) -> cohom(V, W') for g: W -> W'."""
    return vartheta_inv(coev(V, g.target) @ g, V, cohom(V, g.target))


def cohom_map_left(f, W):
    """cohom(f, W): cohom(V', W) -> cohom(V, W) for f: V -> V'."""
    V = f.source
    g = manin(identity(cohom(V, W)), f) @ coev(V, W)
    return vartheta_inv(g, f.target, cohom(V, W))


class Comonoid:
    """A comonoid (X, Delta, eps) in the Manin-product category."""

    def __init__(self, obj, comult, counit):
        self.obj = obj
        self.comult = comult
        self.counit = counit
        self.field = obj.field

    def coassociativity(self, N):
        """First degree where (Delta o id) Delta and (id o Delta) Delta differ."""
        X = self.obj
        lhs = manin(self.comult, identity(X)) @ self.comult
        rhs = manin(identity(X), self.comult) @ self.comult
        return lhs.equals(rhs, N)

    def counitality(self, N):
        X = self.obj
        ident = identity(X)
        left = (manin(self.counit, ident) @ self.comult).equals(ident, N)
        if left is not None:
            return ("left", left)
        right = (manin(ident, self.counit) @ self.comult).equals(ident, N)
        if right is not None:
            return ("right", right)
        return None

    def check(self, N):
        """List of (law, witness) failures up to degree N."""
        out = []
        w = self.coassociativity(N)
        if w is not None:
            out.append(("coassociativity", w))
        w = self.counitality(N)
        if w is not None:
            out.append(("counit", w))
        return out


def coend_comonoid(A):
    """end(A) = cohom(A, A) with Delta = d_{A,A,A} and eps = v_A."""
    return Comonoid(cohom(A, A), cocomposition(A, A, A), counit_v(A))


def unit_comonoid(field):
    u = KU(field)
    return Comonoid(u, identity(u), identity(u))


def tensor_comonoid(X, Y):
    """X o Y with Delta = sigma23 . (Delta_X o Delta_Y) and eps = eps_X o eps_Y."""
    D = sigma23(X.obj, X.obj, Y.obj, Y.obj) @ manin(X.comult, Y.comult)
    return Comonoid(white(X.obj, Y.obj), D, manin(X.counit, Y.counit))


def is_comonoid_morphism(f, X, Y, N):
    """Whether f: X.obj -> Y.obj commutes with comultiplication and counit."""
    a = (manin(f, f) @ X.comult).equals(Y.comult @ f, N)
    if a is not None:
        return ("comultiplication", a)
    b = (Y.counit @ f).equals(X.counit, N)
    if b is not None:
        return ("counit", b)
    return None


def adjunction_counts(A, B, C, budget=10 ** 7):
    """(|Hom(cohom(A,B), C)|, |Hom(B, C o A)|) by brute force over a finite field."""
    left = enumerate_degree1(cohom(A, B), C, budget)
    right = enumerate_degree1(B, white(C, A), budget)
    return len(left), len(right)


def adjunction_round_trips(A, B, C, budget=10 ** 7):
    """Check vartheta / vartheta_inv are mutually inverse on all morphisms.

    Returns the number of morphisms checked on each side; raises AssertionError
    on a mismatch.
    """
    F = A.field
    Z = cohom(A, B)
    CA = white(C, A)
    nl = nr = 0
    for f1 in enumerate_degree1(Z, C, budget):
        f = GradedMorphism(Z, C, Matrix._wrap(f1, F), check=False)
        g = vartheta(f, A, B)
        if not g.is_valid():
            raise AssertionError("vartheta produced an invalid morphism")
        back = vartheta_inv(g, A, C, check=False)
        if back.degree1 != f.degree1:
            raise AssertionError("vartheta_inv . vartheta != id")
        nl += 1
    for g1 in enumerate_degree1(B, CA, budget):
        g = GradedMorphism(B, CA, Matrix._wrap(g1, F), check=False)
        f = vartheta_inv(g, A, C, check=True)
        if vartheta(f, A, B).degree1 != g.degree1:
            raise AssertionError("vartheta . vartheta_inv != id")
        nr += 1
    return nl, nr


__all__ = [
    "Comonoid",
    "RelationError",
    "adjunction_counts",
    "adjunction_round_trips",
    "coev",
    "cocomposition",
    "coend_comonoid",
    "cohom",
    "cohom_map_left",
    "cohom_map_right",
    "counit_v",
    "is_comonoid_morphism",
    "kappa",
    "tensor_comonoid",
    "unit_comonoid",
    "vartheta",
    "vartheta_inv",
]
