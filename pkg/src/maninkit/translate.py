"""Contravariant monoidal functors from finite-dimensional vector spaces to
quadratic algebras, the transformation Phi, and the lifting of linear
representations to corepresentations.

Vector spaces are plain dimensions ``n`` (coordinates K^n) and linear maps are
``Matrix`` objects.  ``F(n)`` is a quadratic algebra whose generators are the
dual basis of K^n, and a linear map ``f: K^n -> K^m`` goes to the graded map
``F(f): F(m) -> F(n)`` with degree-1 part ``f.T``.

The colax structure ``phi_{n,m}: F(n*m) -> F(n) o F(m)`` is the identity on
generators, since both sides have the generator ``x^a (x) x^b`` at index
``a*m + b``.  For ``T*`` it is an isomorphism; for ``S*`` it is only a
surjection in degree >= 2.
"""

import numpy as np

from . import linrep
from .cohomcoend import (
    Comonoid,
    cohom_map_left,
    cohom_map_right,
    is_comonoid_morphism,
    vartheta,
    vartheta_inv,
)
from .coreps import Failure, GradedBimonoid, compare, corep_check, corep_morphism_check, tensor_corep
from .exactlin import FieldError, Matrix, kron, swap_matrix
from .quadalg import KU, GradedMorphism, free_algebra, identity, manin, sigma23, symmetric_algebra, white


class MonoidalFunctor:
    """Contravariant colax monoidal functor FVect -> (graded algebras, o).

    ``build(n)`` makes the object, ``strong`` says whether every
    ``phi_{n,m}`` is invertible.
    """

    def __init__(self, name, field, build, strong, symmetric=True):
        self.name = name
        self.field = field
        self._build = build
        self.strong = strong
        self.symmetric = symmetric
        self.contravariant = True
        self._objs = {}

    def __repr__(self):
        return f"{self.name}[{self.field}]"

    def obj(self, n):
        if n not in self._objs:
            self._objs[n] = KU(self.field) if n == 1 else self._build(n)
        return self._objs[n]

    def arr(self, f):
        """F(f): F(m) -> F(n) for f: K^n -> K^m."""
        return GradedMorphism(self.obj(f.rows), self.obj(f.cols), f.T, check=True)

    def phi(self, n, m):
        """phi_{n,m}: F(n*m) -> F(n) o F(m)."""
        src = self.obj(n * m)
        tgt = white(self.obj(n), self.obj(m))
        return GradedMorphism(src, tgt, Matrix.identity(n * m, self.field), check=True)

    def phi_inv(self, n, m):
        """The lax direction F(n) o F(m) -> F(n*m); only a morphism when strong."""
        src = white(self.obj(n), self.obj(m))
        return GradedMorphism(src, self.obj(n * m), Matrix.identity(n * m, self.field), check=True)

    def phi0(self):
        """phi: F(K) -> K[u]."""
        return identity(self.obj(1))

    def phi_many(self, dims):
        """F(n_1 ... n_r) -> F(n_1) o ... o F(n_r), the identity on generators."""
        d = int(np.prod(dims))
        return GradedMorphism(
            self.obj(d), white(*[self.obj(n) for n in dims]), Matrix.identity(d, self.field), check=True
        )


def tstar(field):
    """V |-> T(V^*), strong."""
    return MonoidalFunctor("T*", field, lambda n: free_algebra(field, n, [f"x{i + 1}" for i in range(n)]), True)


def sstar(field):
    """V |-> S(V^*), colax; needs char != 2."""
    if field.p == 2:
        raise FieldError("S* needs a field of characteristic other than 2")
    return MonoidalFunctor("S*", field, lambda n: symmetric_algebra(field, n), False)


def functor_by_name(name, field):
    key = name.lower().replace("*", "star")
    if key == "tstar":
        return tstar(field)
    if key == "sstar":
        return sstar(field)
    raise ValueError(f"unknown functor {name!r}")


# -- Comon(F), Bimon(F) --------------------------------------------------------


def comon_of_contravariant(F, M):
    """(FX, phi_{X,X} . F(mu), phi . F(eta)) for a monoid M = (X, mu, eta)."""
    n = M.dim
    comult = F.phi(n, n) @ F.arr(M.mu)
    counit = F.phi0() @ F.arr(M.eta)
    return Comonoid(F.obj(n), comult, counit)


def bimon_of_contravariant(F, H):
    """Translated bimonoid: mu = F(Delta) . phi, eta = F(eps) . phi,
    Delta = phi^-1 . F(mu), eps = phi^-1 . F(eta).  F must be strong."""
    if not F.strong:
        raise ValueError(f"{F.name} is not strong monoidal")
    n = H.dim
    X = F.obj(n)
    mult = F.arr(H.delta) @ F.phi_inv(n, n)
    unit = F.arr(H.eps)
    comult = F.phi(n, n) @ F.arr(H.mu)
    counit = F.arr(H.eta)
    return GradedBimonoid(X, mult, unit, comult, counit)


def tensor_monoid(M, M2):
    """M (x) M' = (X (x) Y, (mu (x) mu') . sigma23, eta (x) eta')."""
    n, m = M.dim, M2.dim
    s = swap_matrix((n, m, n, m), 2, M.field)
    return linrep.VecMonoid(kron(M.mu, M2.mu) @ s, kron(M.eta, M2.eta), name=f"{M.name}(x){M2.name}")


def comon_monoidality_check(F, M, M2, N=2):
    """phi_{X,Y} is a comonoid morphism Comon(F)(M (x) M') -> Comon(F)M o Comon(F)M'."""
    from .cohomcoend import tensor_comonoid

    src = comon_of_contravariant(F, tensor_monoid(M, M2))
    tgt = tensor_comonoid(comon_of_contravariant(F, M), comon_of_contravariant(F, M2))
    w = is_comonoid_morphism(F.phi(M.dim, M2.dim), src, tgt, N)
    return [] if w is None else [Failure(w[0], w[1][0], w[1])]


# -- Phi -----------------------------------------------------------------------


class PhiTransform:
    """Phi_{V,W}: cohom(FV, FW) -> F(hom(V, W)) with its checks."""

    def __init__(self, F, nV, nW):
        self.F = F
        self.nV, self.nW = nV, nW
        K = F.field
        e = F.arr(linrep.ev(nV, nW, K))
        g = F.phi(nW * nV, nV) @ e
        self.map = vartheta_inv(g, F.obj(nV), F.obj(nW * nV))

    def iso_by_degree(self, N):
        """Per degree k: True iff the degree-k component is square and invertible."""
        out = []
        for k in range(N + 1):
            c = self.map.component(k)
            out.append(c.rows == c.cols and c.rank() == c.rows)
        return out


def phi_transform(F, nV, nW):
    return PhiTransform(F, nV, nW)


def phi_naturality(F, f, nW, h, N=2):
    """Naturality squares of Phi for f: V -> V' (at W) and h: W -> W' (at V).

    Returns a list of Failures.
    """
    K = F.field
    out = []
    nV, nV2 = f.cols, f.rows
    # covariant in W: Phi_{V,W} . cohom(FV, Fh) == F(hom(V, h)) . Phi_{V,W'}
    nW1, nW2 = h.cols, h.rows
    P = phi_transform(F, nV, nW1).map
    P2 = phi_transform(F, nV, nW2).map
    lhs = P @ cohom_map_right(F.obj(nV), F.arr(h))
    rhs = F.arr(linrep.hom_map(Matrix.identity(nV, K), h)) @ P2
    w = compare(lhs, rhs, N)
    if w is not None:
        out.append(Failure("naturality in W", w[0], w))
    # contravariant in V: Phi_{V',W} . cohom(Ff, FW) == F(hom(f, W)) . Phi_{V,W}
    Q = phi_transform(F, nV, nW).map
    Q2 = phi_transform(F, nV2, nW).map
    lhs = Q2 @ cohom_map_left(F.arr(f), F.obj(nW))
    rhs = F.arr(linrep.hom_map(f, Matrix.identity(nW, K))) @ Q
    w = compare(lhs, rhs, N)
    if w is not None:
        out.append(Failure("naturality in V", w[0], w))
    return out


def phi_formula_check(F, f, nV, nW, N=2):
    """vartheta(F(f) . Phi_{V,W}) == phi_{X,V} . F(theta(f)) for f: X -> hom(V, W)."""
    nX = f.cols
    lhs = vartheta(F.arr(f) @ phi_transform(F, nV, nW).map, F.obj(nV), F.obj(nW))
    rhs = F.phi(nX, nV) @ F.arr(linrep.theta(f, nV, nW))
    w = compare(lhs, rhs, N)
    return [] if w is None else [Failure("phi formula", w[0], w)]


def phi_comonoid_check(F, nV, N=2):
    """Phi_{V,V}: coend(FV) -> Comon(F)(end V) is a comonoid morphism."""
    from .cohomcoend import coend_comonoid

    src = coend_comonoid(F.obj(nV))
    tgt = comon_of_contravariant(F, linrep.end_monoid(nV, F.field))
    w = is_comonoid_morphism(phi_transform(F, nV, nV).map, src, tgt, N)
    return [] if w is None else [Failure(w[0], w[1][0], w[1])]


# -- lifting -------------------------------------------------------------------


def lift_rep(F, rho, nV):
    """omega~ = F(rho) . Phi_{V,V}: coend(FV) -> FX."""
    return F.arr(rho) @ phi_transform(F, nV, nV).map


def lift_check(F, M, rho, nV, N=2):
    """Failures of the lifted corepresentation against Comon(F)(M)."""
    bad = linrep.is_rep(rho, M, nV)
    if bad:
        return [Failure("input rep", None, bad)]
    C = comon_of_contravariant(F, M)
    return corep_check(lift_rep(F, rho, nV), C, F.obj(nV), N)


def lift_morphism_check(F, f, rho, tau, N=2):
    """f: (V, rho) -> (W, tau) gives F(f): (FW, lift tau) -> (FV, lift rho)."""
    nV, nW = f.cols, f.rows
    if not linrep.is_rep_morphism(f, rho, tau):
        return [Failure("input morphism", None, None)]
    return corep_morphism_check(F.arr(f), lift_rep(F, tau, nW), lift_rep(F, rho, nV), N)


def verify_lift_monoidality(F, H, rho, nV, rho2, nV2, N=2):
    """phi_{V,V'} is an isomorphism of corepresentations from lift(rho (x) rho')
    to lift(rho) o lift(rho') over the translated bimonoid."""
    if not F.strong:
        raise ValueError("lift monoidality needs a strong functor")
    out = []
    for r, n, tag in ((rho, nV, "left"), (rho2, nV2, "right")):
        bad = linrep.is_rep(r, H, n)
        if bad:
            return [Failure(f"{tag} input rep", None, bad)]
    B = bimon_of_contravariant(F, H)
    for f in B.check(N):
        out.append(Failure("translated bimonoid: " + f.law, f.degree, f.witness))
    if out:
        return out
    rr = linrep.tensor_rep(rho, rho2, H, nV, nV2)
    big = lift_rep(F, rr, nV * nV2)
    small = tensor_corep(lift_rep(F, rho, nV), lift_rep(F, rho2, nV2), F.obj(nV), F.obj(nV2), B)
    for f in corep_check(big, B, F.obj(nV * nV2), N):
        out.append(Failure("lift of the tensor rep: " + f.law, f.degree, f.witness))
    for f in corep_check(small, B, white(F.obj(nV), F.obj(nV2)), N):
        out.append(Failure("tensor of the lifts: " + f.law, f.degree, f.witness))
    out += corep_morphism_check(F.phi(nV, nV2), big, small, N)
    for f in corep_morphism_check(F.phi_inv(nV, nV2), small, big, N):
        out.append(Failure("inverse: " + f.law, f.degree, f.witness))
    return out


# -- coherence -----------------------------------------------------------------


def lemsigmaphi_check(F, dims, N=2):
    """Both interchange squares for the lax structure of a strong F on
    X, Y, Z, W of dimensions ``dims``."""
    if not F.strong:
        raise ValueError("the interchange squares use phi^-1; F must be strong")
    K = F.field
    x, y, z, w = dims
    O = [F.obj(d) for d in dims]
    out = []

    def lax(a, b):
        return F.phi_inv(a, b)

    # phi_{XY,ZW} . (phi o phi) == phi_{X,YZW} . (id o phi_{YZ,W}) . (id o phi_{Y,Z} o id)
    lhs = lax(x * y, z * w) @ manin(lax(x, y), lax(z, w))
    r1 = manin(identity(O[0]), lax(y, z), identity(O[3]))
    r2 = manin(identity(O[0]), lax(y * z, w))
    rhs = lax(x, y * z * w) @ r2 @ r1
    c = compare(lhs, rhs, N)
    if c is not None:
        out.append(Failure("phi associativity square", c[0], c))
    # F(sigma23) . phi_{XZ,YW} . (phi o phi) . sigma23 == phi_{XY,ZW} . (phi o phi)
    s = swap_matrix((x, y, z, w), 2, K)
    a = F.arr(s) @ lax(x * z, y * w) @ manin(lax(x, z), lax(y, w)) @ sigma23(*O)
    b = lax(x * y, z * w) @ manin(lax(x, y), lax(z, w))
    c = compare(a, b, N)
    if c is not None:
        out.append(Failure("phi sigma square", c[0], c))
    return out


def dims_comparison(F, n, m, N):
    """Degreewise dims of F(n*m) and F(n) o F(m)."""
    return F.obj(n * m).dims(N), white(F.obj(n), F.obj(m)).dims(N)


# -- example data ----------------------------------------------------------------


def dual_numbers_rep(K):
    """K[t]/(t^2) on K^2 with t |-> E_12."""
    M = linrep.dual_numbers_algebra(K)
    rho = Matrix([[1, 0], [0, 1], [0, 0], [1, 0]], K)
    return M, rho, 2


def diagonal_rep(K):
    """K x K on K^2 acting diagonally, e_i |-> E_ii."""
    M = linrep.product_algebra(K)
    rho = Matrix([[1, 0], [0, 0], [0, 0], [0, 1]], K)
    return M, rho, 2


def sign_rep(K):
    """K[Z/2] on K by g |-> -1."""
    H = linrep.cyclic_group_algebra(2, K)
    return H, Matrix([[1, -1]], K), 1


def trivial_rep(H):
    return H.eps, 1


__all__ = [
    "MonoidalFunctor",
    "PhiTransform",
    "bimon_of_contravariant",
    "comon_monoidality_check",
    "comon_of_contravariant",
    "diagonal_rep",
    "dims_comparison",
    "dual_numbers_rep",
    "functor_by_name",
    "lemsigmaphi_check",
    "lift_check",
    "lift_morphism_check",
    "lift_rep",
    "phi_comonoid_check",
    "phi_formula_check",
    "phi_naturality",
    "phi_transform",
    "sign_rep",
    "sstar",
    "tensor_monoid",
    "trivial_rep",
    "tstar",
    "verify_lift_monoidality",
]
