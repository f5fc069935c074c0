"""Internal hom of finite-dimensional vector spaces and of finite semi-linear
sets, the Kronecker map pi, representations and actions.

Coordinates: ``hom(V, W)`` has the matrix units ``E_ab`` (a in W, b in V) at
index ``a * dim V + b``, so a linear map is stored row-major.  Tensor indices
are lexicographic.  Every structure map is built from ``ev`` through
``theta_inv``; the closed forms (matrix product, Kronecker product) are kept
separately and compared against them in the law suites.
"""

from itertools import product as iproduct

import numpy as np

from .exactlin import DimensionError, FieldError, Matrix, kron, swap_matrix


def _I(n, F):
    return Matrix.identity(n, F)


def ev(nV, nW, F):
    """ev_{V,W}: hom(V,W) (x) V -> W."""
    a = np.zeros((nW, nW * nV * nV), dtype=F.dtype)
    for i in range(nW):
        for b in range(nV):
            a[i, (i * nV + b) * nV + b] = 1
    return Matrix._wrap(a, F)


def theta(f, nV, nW):
    """theta(f) = ev . (f (x) id_V) for f: X -> hom(V, W)."""
    F = f.field
    return ev(nV, nW, F) @ kron(f, _I(nV, F))


def theta_inv(g, nV, nW):
    """g: X (x) V -> W  |->  f: X -> hom(V, W) with f[a*nV + b, x] = g[a, x*nV + b]."""
    if g.rows != nW or g.cols % nV:
        raise DimensionError("g is not a map X (x) V -> W")
    nX = g.cols // nV
    a = g.a.reshape(nW, nX, nV).transpose(0, 2, 1).reshape(nW * nV, nX)
    return Matrix._wrap(np.ascontiguousarray(a), g.field)


def sigma(n, m, F):
    """sigma_{X,Y}: X (x) Y -> Y (x) X."""
    return swap_matrix((n, m), 1, F)


def sigma_at(dims, a, F):
    return swap_matrix(dims, a, F)


def unit(nV, F):
    """u_V = theta_inv(id_V): K -> end(V)."""
    return theta_inv(_I(nV, F), nV, nV)


def unit_closed(nV, F):
    return Matrix([[1 if a == b else 0] for a in range(nV) for b in range(nV)], F)


def composition(nU, nV, nW, F):
    """c_{U,V,W}: hom(V,W) (x) hom(U,V) -> hom(U,W), via theta_inv(ev . (id (x) ev))."""
    g = ev(nV, nW, F) @ kron(_I(nW * nV, F), ev(nU, nV, F))
    return theta_inv(g, nU, nW)


def composition_closed(nU, nV, nW, F):
    """Matrix multiplication on matrix units: E_ab E_b'c = delta_bb' E_ac."""
    a = np.zeros((nW * nU, nW * nV * nV * nU), dtype=F.dtype)
    for i in range(nW):
        for b in range(nV):
            for c in range(nU):
                a[i * nU + c, (i * nV + b) * (nV * nU) + b * nU + c] = 1
    return Matrix._wrap(a, F)


def hom_map(f, g):
    """hom(f, g): hom(V', W) -> hom(V, W'), h |-> g h f, for f: V -> V', g: W -> W'."""
    return kron(g, f.T)


def hom_map_structural(f, g):
    """theta_inv(g . ev_{V',W} . (id (x) f))."""
    nV, nV2 = f.cols, f.rows
    nW, nW2 = g.cols, g.rows
    F = f.field
    h = g @ ev(nV2, nW, F) @ kron(_I(nW * nV2, F), f)
    return theta_inv(h, nV, nW2)


def pi(nV, nW, nV2, nW2, F):
    """pi: [V,W] (x) [V',W'] -> [V (x) V', W (x) W'] = theta_inv((ev (x) ev) . sigma23)."""
    s = swap_matrix((nW * nV, nW2 * nV2, nV, nV2), 2, F)
    g = kron(ev(nV, nW, F), ev(nV2, nW2, F)) @ s
    return theta_inv(g, nV * nV2, nW * nW2)


def pi_closed(nV, nW, nV2, nW2, F):
    """Kronecker map E_ab (x) E_a'b' |-> E_(aa'),(bb')."""
    n = nW * nV * nW2 * nV2
    a = np.zeros((nW * nW2 * nV * nV2, n), dtype=F.dtype)
    for i, b, i2, b2 in iproduct(range(nW), range(nV), range(nW2), range(nV2)):
        src = (i * nV + b) * (nW2 * nV2) + i2 * nV2 + b2
        dst = (i * nW2 + i2) * (nV * nV2) + b * nV2 + b2
        a[dst, src] = 1
    return Matrix._wrap(a, F)


def pi_defining_check(nV, nW, nV2, nW2, F, p=None):
    """ev . (pi (x) id) == (ev (x) ev) . sigma23."""
    p = p if p is not None else pi(nV, nW, nV2, nW2, F)
    lhs = ev(nV * nV2, nW * nW2, F) @ kron(p, _I(nV * nV2, F))
    rhs = kron(ev(nV, nW, F), ev(nV2, nW2, F)) @ swap_matrix((nW * nV, nW2 * nV2, nV, nV2), 2, F)
    return lhs == rhs


# -- law suites --------------------------------------------------------------


def _sample_maps(n, m, F, rng, k=3):
    """A few maps K^n -> K^m: matrix units and random matrices."""
    out = []
    for i in range(min(k, n * m)):
        a = np.zeros((m, n), dtype=np.int64)
        a.flat[i] = 1
        out.append(Matrix(a.tolist(), F))
    for _ in range(k):
        vals = rng.integers(-2, 3, size=(m, n)).tolist()
        out.append(Matrix(vals, F))
    return out


def pi_laws(dims, F, seed=0):
    """Run all laws for pi on the dimensions in ``dims``; returns (law, case, ok) triples."""
    rng = np.random.default_rng(seed)
    results = []

    def rec(law, case, ok):
        results.append((law, case, bool(ok)))

    for nV, nW, nV2, nW2 in iproduct(dims, repeat=4):
        case = (nV, nW, nV2, nW2)
        P = pi(nV, nW, nV2, nW2, F)
        rec("definition", case, pi_defining_check(nV, nW, nV2, nW2, F, P))
        rec("closed form", case, P == pi_closed(nV, nW, nV2, nW2, F))
        # naturality: pi . (hom(f,g) (x) hom(f',g')) = hom(f (x) f', g (x) g') . pi
        ok = True
        for m in (1, 2):
            f = _sample_maps(m, nV, F, rng, 1)[-1]
            g = _sample_maps(nW, m, F, rng, 1)[-1]
            f2 = _sample_maps(2, nV2, F, rng, 1)[-1]
            g2 = _sample_maps(nW2, nW2, F, rng, 1)[-1]
            lhs = pi(m, m, 2, nW2, F) @ kron(hom_map(f, g), hom_map(f2, g2))
            rhs = hom_map(kron(f, f2), kron(g, g2)) @ P
            ok &= lhs == rhs
        rec("naturality", case, ok)
        # sigma compatibility
        lhs = hom_map(sigma(nV2, nV, F), sigma(nW, nW2, F)) @ P
        rhs = pi(nV2, nW2, nV, nW, F) @ sigma(nW * nV, nW2 * nV2, F)
        rec("sigma", case, lhs == rhs)
    for nU, nV, nW in iproduct(dims, repeat=3):
        for nU2, nV2, nW2 in ((1, 1, 1), (nU, nW, nV), (2, 1, 2)):
            case = (nU, nV, nW, nU2, nV2, nW2)
            lhs = composition(nU * nU2, nV * nV2, nW * nW2, F) @ kron(pi(nV, nW, nV2, nW2, F), pi(nU, nV, nU2, nV2, F))
            s = swap_matrix((nW * nV, nW2 * nV2, nV * nU, nV2 * nU2), 2, F)
            rhs = pi(nU, nW, nU2, nW2, F) @ kron(composition(nU, nV, nW, F), composition(nU2, nV2, nW2, F)) @ s
            rec("c-compatibility", case, lhs == rhs)
    for a, b, c in iproduct(dims, repeat=3):
        for nV, nW, nV2, nW2, nV3, nW3 in ((a, b, b, c, c, a), (a, a, b, b, c, c)):
            case = (nV, nW, nV2, nW2, nV3, nW3)
            lhs = pi(nV * nV2, nW * nW2, nV3, nW3, F) @ kron(pi(nV, nW, nV2, nW2, F), _I(nW3 * nV3, F))
            rhs = pi(nV, nW, nV2 * nV3, nW2 * nW3, F) @ kron(_I(nW * nV, F), pi(nV2, nW2, nV3, nW3, F))
            rec("associativity", case, lhs == rhs)
    for nV, nW in iproduct(dims, repeat=2):
        case = (nV, nW)
        ident = _I(nW * nV, F)
        rec("unit degeneration", case, pi(1, 1, nV, nW, F) == ident and pi(nV, nW, 1, 1, F) == ident)
        # Lemuc triangles
        rec("unit triangles", case,
            composition(nV, nW, nW, F) @ kron(unit(nW, F), ident) == ident
            and composition(nV, nV, nW, F) @ kron(ident, unit(nV, F)) == ident)
    for nV, nV2 in iproduct(dims, repeat=2):
        case = (nV, nV2)
        P = pi(nV, nV, nV2, nV2, F)
        s = swap_matrix((nV * nV, nV2 * nV2, nV * nV, nV2 * nV2), 2, F)
        mult = P @ kron(composition(nV, nV, nV, F), composition(nV2, nV2, nV2, F)) @ s
        mult2 = composition(nV * nV2, nV * nV2, nV * nV2, F) @ kron(P, P)
        units = P @ kron(unit(nV, F), unit(nV2, F)) == unit(nV * nV2, F)
        rec("monoid morphism", case, mult == mult2 and units)
        # end-level sigma lemma
        n = nV * nV2
        lhs = hom_map(sigma(nV, nV2, F), _I(nV2 * nV, F)) @ hom_map(sigma(nV2, nV, F), sigma(nV, nV2, F))
        rhs = hom_map(_I(n, F), sigma(nV, nV2, F))
        rec("sigma on ends", case,
            lhs == rhs and hom_map(sigma(nV2, nV, F), sigma(nV, nV2, F)) @ P == pi(nV2, nV2, nV, nV, F) @ sigma(nV * nV, nV2 * nV2, F))
    return results


# -- monoids, bimonoids, representations ---------------------------------------


class VecMonoid:
    """Finite-dimensional algebra (dim, mu: X (x) X -> X, eta: K -> X)."""

    def __init__(self, mu, eta, name="", check=True):
        self.mu = mu
        self.eta = eta
        self.field = mu.field
        self.dim = mu.rows
        self.name = name
        if mu.shape != (self.dim, self.dim * self.dim) or eta.shape != (self.dim, 1):
            raise DimensionError("structure maps have the wrong shape")
        if check:
            bad = self.check()
            if bad:
                raise ValueError(f"monoid axiom fails: {bad}")

    def check(self):
        n, F = self.dim, self.field
        out = []
        if self.mu @ kron(self.mu, _I(n, F)) != self.mu @ kron(_I(n, F), self.mu):
            out.append("associativity")
        if self.mu @ kron(self.eta, _I(n, F)) != _I(n, F) or self.mu @ kron(_I(n, F), self.eta) != _I(n, F):
            out.append("unit")
        return out


class VecBimonoid(VecMonoid):
    def __init__(self, mu, eta, delta, eps, name="", check=True):
        self.delta = delta
        self.eps = eps
        super().__init__(mu, eta, name, check=False)
        if delta.shape != (self.dim * self.dim, self.dim) or eps.shape != (1, self.dim):
            raise DimensionError("costructure maps have the wrong shape")
        if check:
            bad = self.check()
            if bad:
                raise ValueError(f"bimonoid axiom fails: {bad}")

    def check(self):
        out = VecMonoid.check(self)
        n, F = self.dim, self.field
        D, e = self.delta, self.eps
        I = _I(n, F)
        if kron(D, I) @ D != kron(I, D) @ D:
            out.append("coassociativity")
        if kron(e, I) @ D != I or kron(I, e) @ D != I:
            out.append("counit")
        s = swap_matrix((n, n, n, n), 2, F)
        if D @ self.mu != kron(self.mu, self.mu) @ s @ kron(D, D):
            out.append("comultiplication is multiplicative")
        if e @ self.mu != kron(e, e):
            out.append("counit is multiplicative")
        if D @ self.eta != kron(self.eta, self.eta) or e @ self.eta != Matrix([[1]], F):
            out.append("unit compatibility")
        return out

    def is_cocommutative(self):
        return sigma(self.dim, self.dim, self.field) @ self.delta == self.delta


def end_monoid(nV, F):
    """end(V) = (hom(V,V), c_V, u_V)."""
    return VecMonoid(composition(nV, nV, nV, F), unit(nV, F), name=f"end({nV})")


def group_algebra(elements, mult, unit_el, F, name="K[G]"):
    """K[G] of a finite group/monoid table, Delta group-like."""
    n = len(elements)
    mu = np.zeros((n, n * n), dtype=F.dtype)
    for a in range(n):
        for b in range(n):
            mu[mult(a, b), a * n + b] = 1
    eta = np.zeros((n, 1), dtype=F.dtype)
    eta[unit_el, 0] = 1
    D = np.zeros((n * n, n), dtype=F.dtype)
    for a in range(n):
        D[a * n + a, a] = 1
    eps = np.ones((1, n), dtype=F.dtype)
    return VecBimonoid(Matrix._wrap(mu, F), Matrix._wrap(eta, F), Matrix._wrap(D, F), Matrix._wrap(eps, F), name)


def cyclic_group_algebra(n, F):
    return group_algebra(list(range(n)), lambda a, b: (a + b) % n, 0, F, f"K[Z/{n}]")


def function_algebra(elements, mult, unit_el, F, name="K^G"):
    """Functions on a finite group: pointwise product, Delta dual to the group law."""
    n = len(elements)
    mu = np.zeros((n, n * n), dtype=F.dtype)
    for a in range(n):
        mu[a, a * n + a] = 1
    eta = np.ones((n, 1), dtype=F.dtype)
    D = np.zeros((n * n, n), dtype=F.dtype)
    for a in range(n):
        for b in range(n):
            D[a * n + b, mult(a, b)] = 1
    eps = np.zeros((1, n), dtype=F.dtype)
    eps[0, unit_el] = 1
    return VecBimonoid(Matrix._wrap(mu, F), Matrix._wrap(eta, F), Matrix._wrap(D, F), Matrix._wrap(eps, F), name)


def dual_numbers_algebra(F):
    """K[t]/(t^2) with basis (1, t)."""
    mu = Matrix([[1, 0, 0, 0], [0, 1, 1, 0]], F)
    return VecMonoid(mu, Matrix([[1], [0]], F), name="K[t]/(t^2)")


def product_algebra(F):
    """K x K with idempotent basis (e1, e2)."""
    mu = Matrix([[1, 0, 0, 0], [0, 0, 0, 1]], F)
    return VecMonoid(mu, Matrix([[1], [1]], F), name="KxK")


def is_rep(rho, X, nV):
    """rho . mu = c . (rho (x) rho) and rho . eta = u; returns list of failures."""
    F = X.field
    out = []
    if rho.shape != (nV * nV, X.dim):
        raise DimensionError("rho has the wrong shape")
    if rho @ X.mu != composition(nV, nV, nV, F) @ kron(rho, rho):
        out.append("multiplicativity")
    if rho @ X.eta != unit(nV, F):
        out.append("unit")
    return out


def is_action(a, X, nV):
    F = X.field
    out = []
    I = _I(nV, F)
    if a @ kron(X.mu, I) != a @ kron(_I(X.dim, F), a):
        out.append("associativity")
    if a @ kron(X.eta, I) != I:
        out.append("unit")
    return out


def action_from_rep(rho, nV):
    return theta(rho, nV, nV)


def rep_from_action(a, nV):
    return theta_inv(a, nV, nV)


def is_rep_morphism(f, rho, tau):
    """hom(id, f) . rho == hom(f, id) . tau for f: V -> W."""
    nV, nW = f.cols, f.rows
    F = f.field
    return hom_map(_I(nV, F), f) @ rho == hom_map(f, _I(nW, F)) @ tau


def tensor_rep(rho, rho2, B, nV, nV2):
    """rho'' = pi . (rho (x) rho') . Delta."""
    return pi(nV, nV, nV2, nV2, B.field) @ kron(rho, rho2) @ B.delta


def tensor_action(a, a2, B, nV, nV2):
    """a'' = (a (x) a') . sigma23 . (Delta (x) id (x) id)."""
    F = B.field
    n = B.dim
    s = swap_matrix((n, n, nV, nV2), 2, F)
    return kron(a, a2) @ s @ kron(B.delta, _I(nV * nV2, F))


def counit_rep(B):
    """(K, eps): the unit object of the representation category."""
    return B.eps


def enumerate_reps(X, nV, budget=10 ** 7):
    """All representations of X on K^nV over a finite field (brute force)."""
    return _enumerate(X, nV, budget, lambda m: not is_rep(m, X, nV), (nV * nV, X.dim))


def enumerate_actions(X, nV, budget=10 ** 7):
    return _enumerate(X, nV, budget, lambda m: not is_action(m, X, nV), (nV, X.dim * nV))


def _enumerate(X, nV, budget, ok, shape):
    F = X.field
    if not F.p:
        raise FieldError("enumeration needs a finite field")
    e = shape[0] * shape[1]
    if F.p ** e > budget:
        raise OverflowError(f"{F.p ** e} candidates exceed the budget {budget}")
    out = []
    for vals in iproduct(range(F.p), repeat=e):
        m = Matrix._wrap(np.array(vals, dtype=np.int64).reshape(shape), F)
        if ok(m):
            out.append(m)
    return out


# -- semi-linear sets ----------------------------------------------------------


class SemiLinearSet:
    """X x V: a finite set of labels and a vector space of dimension ``dim``."""

    def __init__(self, points, dim, field):
        self.points = list(points)
        self.dim = dim
        self.field = field

    @property
    def size(self):
        return len(self.points)

    def __eq__(self, other):
        return (
            isinstance(other, SemiLinearSet)
            and self.points == other.points
            and self.dim == other.dim
            and self.field == other.field
        )

    def __repr__(self):
        return f"SemiLinearSet({len(self.points)} points, dim {self.dim})"


def sl_unit(F):
    return SemiLinearSet([0], 1, F)


def sl_vect(nV, F):
    """{0} x V."""
    return SemiLinearSet([0], nV, F)


def sl_tensor_obj(A, B):
    return SemiLinearSet(list(iproduct(A.points, B.points)), A.dim * B.dim, A.field)


class SemiLinearMap:
    """(phi, f_x): phi is a tuple of target point indices, fx a list of matrices."""

    def __init__(self, source, target, phi, fx, check=True):
        self.source = source
        self.target = target
        self.phi = tuple(phi)
        self.fx = list(fx)
        if check:
            if len(self.phi) != source.size or len(self.fx) != source.size:
                raise DimensionError("semi-linear map needs one value per point")
            for f in self.fx:
                if f.shape != (target.dim, source.dim):
                    raise DimensionError("linear component has the wrong shape")
                if f.field != source.field:
                    raise FieldError("field mismatch")
            for y in self.phi:
                if not 0 <= y < target.size:
                    raise DimensionError("point map out of range")

    def __matmul__(self, other):
        """(psi, g) . (phi, f) = (psi phi, g_{phi(x)} f_x)."""
        phi = tuple(self.phi[y] for y in other.phi)
        fx = [self.fx[other.phi[x]] @ other.fx[x] for x in range(other.source.size)]
        return SemiLinearMap(other.source, self.target, phi, fx, check=False)

    def __eq__(self, other):
        return self.phi == other.phi and all(a == b for a, b in zip(self.fx, other.fx))

    def key(self):
        return (self.phi, tuple(tuple(map(tuple, f.tolist())) for f in self.fx))

    def __repr__(self):
        return f"SemiLinearMap(phi={self.phi})"


def sl_identity(A):
    return SemiLinearMap(A, A, range(A.size), [_I(A.dim, A.field)] * A.size, check=False)


def sl_tensor(f, g):
    src = sl_tensor_obj(f.source, g.source)
    tgt = sl_tensor_obj(f.target, g.target)
    m = g.target.size
    phi = [f.phi[x] * m + g.phi[y] for x in range(f.source.size) for y in range(g.source.size)]
    fx = [kron(f.fx[x], g.fx[y]) for x in range(f.source.size) for y in range(g.source.size)]
    return SemiLinearMap(src, tgt, phi, fx, check=False)


def sl_sigma(A, B):
    src = sl_tensor_obj(A, B)
    tgt = sl_tensor_obj(B, A)
    phi = [y * A.size + x for x in range(A.size) for y in range(B.size)]
    s = sigma(A.dim, B.dim, A.field)
    return SemiLinearMap(src, tgt, phi, [s] * src.size, check=False)


def hom_object(A, B):
    """hom(X x V, Y x W) = Hom(X, Y) x Hom(X, hom(V, W)) with its ev.

    Linear coordinates: function f: X -> hom(V,W) at index x*(nW*nV) + a*nV + b.
    """
    F = A.field
    nX, nY = A.size, B.size
    nV, nW = A.dim, B.dim
    funcs = list(iproduct(range(nY), repeat=nX))
    L = nX * nW * nV
    H = SemiLinearSet(funcs, L, F)
    src = sl_tensor_obj(H, A)
    phi, fx = [], []
    for phi_x in funcs:
        for x in range(nX):
            phi.append(phi_x[x])
            a = np.zeros((nW, L * nV), dtype=F.dtype)
            for i in range(nW):
                for b in range(nV):
                    a[i, (x * nW * nV + i * nV + b) * nV + b] = 1
            fx.append(Matrix._wrap(a, F))
    return H, SemiLinearMap(src, B, phi, fx, check=False)


def all_sl_maps(A, B, budget=10 ** 7):
    """Every semi-linear map A -> B over a finite field."""
    F = A.field
    if not F.p:
        raise FieldError("enumeration needs a finite field")
    entries = B.dim * A.dim
    total = B.size ** A.size * F.p ** (entries * A.size)
    if total > budget:
        raise OverflowError(f"{total} semi-linear maps exceed the budget {budget}")
    mats = [
        Matrix._wrap(np.array(v, dtype=np.int64).reshape(B.dim, A.dim), F)
        for v in iproduct(range(F.p), repeat=entries)
    ]
    for phi in iproduct(range(B.size), repeat=A.size):
        for fx in iproduct(mats, repeat=A.size):
            yield SemiLinearMap(A, B, phi, list(fx), check=False)


def count_sl_maps(A, B):
    return B.size ** A.size * A.field.p ** (B.dim * A.dim * A.size)


def verify_hom_universal(A, B, Z, budget=10 ** 6):
    """Exhaustively check that k |-> ev . (k (x) id) is a bijection
    Hom(Z, hom(A,B)) -> Hom(Z (x) A, B).  Returns (ok, |Hom(Z, hom)|, |Hom(Z (x) A, B)|)."""
    H, e = hom_object(A, B)
    idA = sl_identity(A)
    seen = set()
    n = 0
    for k in all_sl_maps(Z, H, budget):
        h = e @ sl_tensor(k, idA)
        key = h.key()
        if key in seen:
            return False, n, count_sl_maps(sl_tensor_obj(Z, A), B)
        seen.add(key)
        n += 1
    target = count_sl_maps(sl_tensor_obj(Z, A), B)
    return n == target, n, target


def sl_end_monoid(nV, F):
    """end({0} x V) = {0} x end(V) as a semi-linear monoid (mult, unit)."""
    P = sl_vect(nV * nV, F)
    mult = SemiLinearMap(sl_tensor_obj(P, P), P, [0], [composition(nV, nV, nV, F)], check=False)
    u = SemiLinearMap(sl_unit(F), P, [0], [unit(nV, F)], check=False)
    return P, mult, u


def monoid_semilinear(table, unit_el, F):
    """S_M = (X x K, (mu_X, id), (eta_X, id)) for a multiplication table."""
    n = len(table)
    check_monoid_table(table, unit_el)
    S = SemiLinearSet(range(n), 1, F)
    one = Matrix([[1]], F)
    mult = SemiLinearMap(sl_tensor_obj(S, S), S, [table[a][b] for a in range(n) for b in range(n)], [one] * (n * n), check=False)
    eta = SemiLinearMap(sl_unit(F), S, [unit_el], [one], check=False)
    return S, mult, eta


def check_monoid_table(table, unit_el):
    n = len(table)
    for a in range(n):
        if len(table[a]) != n or any(not 0 <= v < n for v in table[a]):
            raise ValueError("multiplication table is not square or has entries out of range")
        if table[unit_el][a] != a or table[a][unit_el] != a:
            raise ValueError(f"{unit_el} is not a unit")
    for a, b, c in iproduct(range(n), repeat=3):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise ValueError(f"table is not associative at ({a}, {b}, {c})")


def monoid_rep_direct(table, unit_el, rho):
    """Witnesses (x, y) with rho(x) rho(y) != rho(xy), plus ('unit',) if rho(e) != id."""
    n = len(table)
    F = rho[0].field
    out = []
    for x in range(n):
        for y in range(n):
            if rho[x] @ rho[y] != rho[table[x][y]]:
                out.append((x, y))
    if rho[unit_el] != _I(rho[0].rows, F):
        out.append(("unit",))
    return out


def monoid_rep_bridge(table, unit_el, rho):
    """Same witnesses computed through semi-linear monoid morphisms S_M -> end({0} x V)."""
    F = rho[0].field
    nV = rho[0].rows
    n = len(table)
    S, mult, eta = monoid_semilinear(table, unit_el, F)
    P, c, u = sl_end_monoid(nV, F)
    vec = [Matrix([[v] for row in r.tolist() for v in row], F) for r in rho]
    rhat = SemiLinearMap(S, P, [0] * n, vec, check=False)
    lhs = rhat @ mult
    rhs = c @ sl_tensor(rhat, rhat)
    out = []
    for i in range(n * n):
        if lhs.fx[i] != rhs.fx[i]:
            out.append(divmod(i, n))
    if rhat @ eta != u:
        out.append(("unit",))
    return out
