"""Graded algebras given by presentations, truncations and Manin products.

Every algebra exposes the same degreewise interface:

* ``dim(k)`` and ``ngens`` (= ``dim(1)``),
* ``mul(i, a, j, b)``: product of basis element ``a`` of degree ``i`` with
  basis element ``b`` of degree ``j`` as a sparse vector (dict) of degree
  ``i + j``,
* ``basis_words(k)``: for degree-1-generated algebras, each basis element of
  degree ``k`` written as (basis element of degree ``k-1``) * (generator).

Presentations ``T(V)/(R)`` use the lexicographic monomial basis of ``V^k``; the
basis of ``A_k`` is the set of monomials that are not pivots of the reduced
echelon basis of the ideal component ``I_k``.  Manin (white) products
``X o Y`` are computed componentwise, ``(X o Y)_k = X_k (x) Y_k``, and are
flattened so that ``(X o Y) o Z`` and ``X o (Y o Z)`` are the same object and
``K[u]`` factors disappear.
"""

from itertools import product as iproduct

import numpy as np

from .exactlin import (
    DimensionError,
    Echelon,
    FieldError,
    Matrix,
    Subspace,
    annihilator,
    kernel,
    kron,
    permutation_matrix,
    tensor_permutation,
)


class RelationError(ValueError):
    """A degree-1 map does not preserve relations; carries the witness."""

    def __init__(self, message, degree=None, relation=None, image=None):
        super().__init__(message)
        self.degree = degree
        self.relation = relation
        self.image = image


class BudgetError(RuntimeError):
    pass


class TruncationError(ValueError):
    pass


DEFAULT_BUDGET = 10 ** 7


def _acc(out, j, c, p):
    if p:
        w = (out.get(j, 0) + c) % p
    else:
        w = out.get(j, 0) + c
    if w:
        out[j] = w
    else:
        out.pop(j, None)


def _mul(a, b, p):
    return (a * b) % p if p else a * b


class GradedAlgebra:
    """Common degreewise interface; see the module docstring."""

    field = None
    is_quadratic = True

    @property
    def ngens(self):
        return self.dim(1)

    def dim(self, k):
        raise NotImplementedError

    def dims(self, N):
        return tuple(self.dim(k) for k in range(N + 1))

    def mul(self, i, a, j, b):
        raise NotImplementedError

    def mul_gen(self, k, a, g):
        return self.mul(k - 1, a, 1, g)

    def basis_words(self, k):
        return None

    @property
    def generated_in_degree_one(self):
        return True

    def key(self):
        raise NotImplementedError

    def same(self, other):
        return isinstance(other, GradedAlgebra) and self.key() == other.key()

    def factors(self):
        return (self,)

    def is_unit(self):
        return False

    # sparse arithmetic -------------------------------------------------
    def multiply(self, i, u, j, v):
        """Product of sparse elements u (degree i) and v (degree j)."""
        p = self.field.p
        out = {}
        for a, x in u.items():
            for b, y in v.items():
                xy = _mul(x, y, p)
                for c, z in self.mul(i, a, j, b).items():
                    _acc(out, c, _mul(xy, z, p), p)
        return out

    def word(self, letters):
        """Normal form of a word in the generators."""
        u = {0: 1}
        for k, g in enumerate(letters, start=1):
            u = self.multiply(k - 1, u, 1, {g: 1})
            if not u:
                break
        return u

    def free_image(self, k, vec):
        """Image in A_k of a vector of V^{(x)k} given as {word index: coeff}."""
        n = self.ngens
        p = self.field.p
        out = {}
        for idx, c in vec.items():
            letters = []
            for _ in range(k):
                idx, r = divmod(idx, n)
                letters.append(r)
            for j, z in self.word(letters[::-1]).items():
                _acc(out, j, _mul(c, z, p), p)
        return out

    def multiplication_matrix(self, k):
        """Dense matrix V^{(x)k} -> A_k (the quotient map in degree k)."""
        n = self.ngens
        cols = []
        for letters in iproduct(range(n), repeat=k):
            cols.append(self.word(letters))
        return Matrix.from_columns(cols, self.dim(k), self.field)

    def relation_space(self, k=2):
        """Kernel of V^{(x)k} -> A_k."""
        return kernel(self.multiplication_matrix(k))

    def presentation(self):
        """Quadratic presentation with the same generators (degree 2 relations)."""
        if not self.is_quadratic:
            raise ValueError("algebra is not quadratic")
        return QuadraticAlgebra(self.field, self.gen_names(), self.relation_space(2))

    def gen_names(self):
        return [f"g{i}" for i in range(self.ngens)]

    def mult_matrix(self, i, j):
        """m_{i,j}: A_i (x) A_j -> A_{i+j} as a dense matrix."""
        di, dj = self.dim(i), self.dim(j)
        cols = [self.mul(i, a, j, b) for a in range(di) for b in range(dj)]
        return Matrix.from_columns(cols, self.dim(i + j), self.field)


class Presentation(GradedAlgebra):
    """T(V)/(R_2 + R_3 + ...) with homogeneous relations of degree >= 2."""

    def __init__(self, field, gens, relations):
        if isinstance(gens, int):
            gens = [f"x{i + 1}" for i in range(gens)]
        self.field = field
        self._gens = list(gens)
        n = len(self._gens)
        self.n = n
        rels = {}
        for d, s in dict(relations).items():
            if d < 2:
                raise ValueError("relations must have degree >= 2")
            if not isinstance(s, Subspace):
                s = Subspace(field, n ** d, s)
            if s.field != field:
                raise FieldError("relation space over a different field")
            if s.ambient_dim != n ** d:
                raise DimensionError(f"degree-{d} relations need ambient dimension {n ** d}")
            if s.dim:
                rels[d] = s
        if 2 not in rels:
            rels[2] = Subspace(field, n * n)
        self.rels = rels
        self.is_quadratic = set(rels) == {2}
        self._ideal = {}
        self._std = {}
        self._stdidx = {}
        self._mulcache = {}

    @property
    def relations(self):
        return self.rels[2]

    def gen_names(self):
        return list(self._gens)

    def key(self):
        items = tuple(
            (d, tuple(map(tuple, s.basis.tolist()))) for d, s in sorted(self.rels.items())
        )
        if self.is_unit():
            return ("K[u]", self.field.p)
        return ("P", self.field.p, self.n, items)

    def is_unit(self):
        return self.n == 1 and all(s.dim == 0 for s in self.rels.values())

    def ideal(self, k):
        """Echelon basis of I_k inside V^{(x)k}."""
        if k in self._ideal:
            return self._ideal[k]
        n = self.n
        if k < 2:
            e = Echelon(self.field, n ** k)
        else:
            prev = self.ideal(k - 1)
            rows = {}
            for c, r in prev.rows.items():
                for x in range(n):
                    rows[c * n + x] = {j * n + x: v for j, v in r.items()}
            e = Echelon.from_reduced(self.field, n ** k, rows)
            for d, s in self.rels.items():
                if d > k:
                    continue
                shift = n ** d
                brows = list(s.ech.rows.values())
                for pre in range(n ** (k - d)):
                    base = pre * shift
                    for r in brows:
                        e.add({base + j: v for j, v in r.items()})
        self._ideal[k] = e
        return e

    def standard(self, k):
        if k not in self._std:
            piv = self.ideal(k).rows
            std = [c for c in range(self.n ** k) if c not in piv]
            self._std[k] = std
            self._stdidx[k] = {c: i for i, c in enumerate(std)}
        return self._std[k]

    def dim(self, k):
        if k < 0:
            return 0
        return len(self.standard(k))

    def normal_form(self, k, col):
        """Sparse normal form of the monomial with index ``col`` in V^{(x)k}."""
        self.standard(k)
        idx = self._stdidx[k]
        if col in idx:
            return {idx[col]: 1}
        row = self.ideal(k).rows[col]
        f = self.field
        return {idx[j]: f.neg(v) for j, v in row.items() if j != col}

    def mul(self, i, a, j, b):
        key = (i, a, j, b)
        out = self._mulcache.get(key)
        if out is None:
            if i + j < 0 or i < 0 or j < 0:
                out = {}
            else:
                ca = self.standard(i)[a]
                cb = self.standard(j)[b]
                out = self.normal_form(i + j, ca * self.n ** j + cb)
            self._mulcache[key] = out
        return out

    def basis_words(self, k):
        if k == 0:
            return [None]
        n = self.n
        self.standard(k - 1)
        pidx = self._stdidx[k - 1]
        return [(pidx[c // n], c % n) for c in self.standard(k)]

    def relation_space(self, k=2):
        e = self.ideal(k)
        return Subspace._from_echelon(e.copy())

    def presentation(self):
        if not self.is_quadratic:
            raise ValueError("algebra is not quadratic")
        return self

    def monomial_label(self, k, i):
        c = self.standard(k)[i]
        letters = []
        for _ in range(k):
            c, r = divmod(c, self.n)
            letters.append(self._gens[r])
        return "*".join(letters[::-1]) if letters else "1"

    def __repr__(self):
        kind = "QuadraticAlgebra" if self.is_quadratic else "Presentation"
        rel = ", ".join(f"deg {d}: {s.dim}" for d, s in sorted(self.rels.items()))
        return f"{kind}[{self.field}](gens={self._gens}, relations {rel})"


class QuadraticAlgebra(Presentation):
    """T(V)/(R) with R a subspace of V (x) V."""

    def __init__(self, field, gens, relations=None):
        if isinstance(gens, int):
            gens = [f"x{i + 1}" for i in range(gens)]
        n = len(gens)
        if relations is None:
            relations = Subspace(field, n * n)
        elif not isinstance(relations, Subspace):
            relations = Subspace(field, n * n, relations)
        super().__init__(field, gens, {2: relations})


def KU(field):
    """The polynomial algebra K[u], unit of the Manin product."""
    return QuadraticAlgebra(field, ["u"])


def free_algebra(field, n, names=None):
    return QuadraticAlgebra(field, names or [f"x{i + 1}" for i in range(n)])


def dual_numbers(field, name="e"):
    return QuadraticAlgebra(field, [name], Subspace.full(field, 1))


def quantum_plane(field, q, names=("x", "y")):
    """K<x,y>/(x y - q y x)."""
    q = field(q)
    return QuadraticAlgebra(field, list(names), [[0, 1, field.neg(q), 0]])


def symmetric_algebra(field, n, names=None):
    """Commutative polynomial algebra: relations x_i x_j - x_j x_i."""
    rows = []
    for i in range(n):
        for j in range(i + 1, n):
            rows.append({i * n + j: 1, j * n + i: field.neg(1)})
    return QuadraticAlgebra(field, names or [f"t{i + 1}" for i in range(n)], Subspace(field, n * n, rows))


class ManinProduct(GradedAlgebra):
    """Componentwise white product X_1 o ... o X_r (flattened, no K[u] factors)."""

    def __init__(self, factors):
        self._factors = tuple(factors)
        self.field = self._factors[0].field
        self.is_quadratic = all(f.is_quadratic for f in self._factors)
        self._mulcache = {}

    def factors(self):
        return self._factors

    def key(self):
        return ("o",) + tuple(f.key() for f in self._factors)

    @property
    def generated_in_degree_one(self):
        return all(f.generated_in_degree_one for f in self._factors)

    def dim(self, k):
        d = 1
        for f in self._factors:
            d *= f.dim(k)
        return d

    def _split(self, k, a):
        out = []
        for f in reversed(self._factors):
            a, r = divmod(a, f.dim(k))
            out.append(r)
        return out[::-1]

    def _join(self, k, parts):
        a = 0
        for f, r in zip(self._factors, parts):
            a = a * f.dim(k) + r
        return a

    def mul(self, i, a, j, b):
        key = (i, a, j, b)
        out = self._mulcache.get(key)
        if out is not None:
            return out
        p = self.field.p
        pa = self._split(i, a)
        pb = self._split(j, b)
        k = i + j
        terms = {0: 1}
        for f, x, y in zip(self._factors, pa, pb):
            dk = f.dim(k)
            piece = f.mul(i, x, j, y)
            new = {}
            for idx, c in terms.items():
                for r, z in piece.items():
                    new[idx * dk + r] = _mul(c, z, p)
            terms = new
            if not terms:
                break
        self._mulcache[key] = terms
        return terms

    def basis_words(self, k):
        parts = [f.basis_words(k) for f in self._factors]
        if any(pw is None for pw in parts):
            return None
        if k == 0:
            return [None]
        out = []
        for combo in iproduct(*parts):
            pre = 0
            gen = 0
            for f, (pa, g) in zip(self._factors, combo):
                pre = pre * f.dim(k - 1) + pa
                gen = gen * f.ngens + g
            out.append((pre, gen))
        return out

    def gen_names(self):
        names = [f.gen_names() for f in self._factors]
        return ["(" + "|".join(t) + ")" for t in iproduct(*names)]

    def __repr__(self):
        return " o ".join(f"[{f!r}]" for f in self._factors)


def white(*algebras):
    """Componentwise Manin product with strict associativity and unit."""
    if not algebras:
        raise ValueError("white needs at least one algebra")
    field = algebras[0].field
    flat = []
    for a in algebras:
        if a.field != field:
            raise FieldError("field mismatch in Manin product")
        for f in a.factors():
            if not f.is_unit():
                flat.append(f)
    if not flat:
        return KU(field)
    if len(flat) == 1:
        return flat[0]
    return ManinProduct(flat)


def _shuffle23(field, n, m):
    # (V (x) V) (x) (W (x) W) -> (V (x) W) (x) (V (x) W)
    return permutation_matrix(tensor_permutation((n, n, m, m), (0, 2, 1, 3)), field)


def white_product(A, B):
    """Quadratic presentation of A o B: relations sigma23(R_A (x) W^2 + V^2 (x) R_B)."""
    A = A.presentation()
    B = B.presentation()
    if A.field != B.field:
        raise FieldError("field mismatch in white product")
    f = A.field
    n, m = A.n, B.n
    s = _shuffle23(f, n, m)
    rows = []
    if A.relations.dim:
        rows.append(kron(A.relations.basis, Matrix.identity(m * m, f)))
    if B.relations.dim:
        rows.append(kron(Matrix.identity(n * n, f), B.relations.basis))
    vecs = []
    for r in rows:
        vecs.extend((s @ r.T).T.sparse_rows())
    names = [f"({a}|{b})" for a in A.gen_names() for b in B.gen_names()]
    return QuadraticAlgebra(f, names, Subspace(f, (n * m) ** 2, vecs))


def black_product(A, B):
    """Quadratic presentation of A * B: relations sigma23(R_A (x) R_B)."""
    A = A.presentation()
    B = B.presentation()
    if A.field != B.field:
        raise FieldError("field mismatch in black product")
    f = A.field
    n, m = A.n, B.n
    names = [f"({a}|{b})" for a in A.gen_names() for b in B.gen_names()]
    if A.relations.dim == 0 or B.relations.dim == 0:
        return QuadraticAlgebra(f, names, Subspace(f, (n * m) ** 2))
    s = _shuffle23(f, n, m)
    t = kron(A.relations.basis, B.relations.basis)
    return QuadraticAlgebra(f, names, Subspace(f, (n * m) ** 2, (s @ t.T).T))


def quadratic_dual(A):
    """A^!: dual generators, relations the annihilator of R_A."""
    A = A.presentation()
    names = [g[:-1] if g.endswith("*") else g + "*" for g in A.gen_names()]
    return QuadraticAlgebra(A.field, names, annihilator(A.relations))


class GradedTruncation(GradedAlgebra):
    """Explicit graded components C_lo..C_N with multiplication matrices.

    ``mult[(i, j)]`` is the matrix of C_i (x) C_j -> C_{i+j}; entries with
    ``i + j`` outside the stored range are absent.  Degree 0 carries the unit
    vector ``unit``.
    """

    def __init__(self, field, dims, mult, unit=None, low=0, check=True):
        self.field = field
        if isinstance(dims, dict):
            self._dims = dict(dims)
        else:
            self._dims = {low + k: d for k, d in enumerate(dims)}
        self.low = min(self._dims)
        self.N = max(self._dims)
        self._mult = {}
        for (i, j), m in mult.items():
            if not isinstance(m, Matrix):
                m = Matrix(m, field, (self._dims[i + j], self._dims[i] * self._dims[j]))
            self._mult[(i, j)] = m
        d0 = self._dims.get(0, 0)
        self.unit = unit if unit is not None else ([1] + [0] * (d0 - 1) if d0 else [])
        self._cols = {}
        self.is_quadratic = False
        if check:
            problem = self.check()
            if problem:
                raise ValueError(problem)

    def key(self):
        items = tuple(sorted((ij, tuple(map(tuple, m.tolist()))) for ij, m in self._mult.items()))
        return ("T", self.field.p, tuple(sorted(self._dims.items())), items)

    def dim(self, k):
        if k > self.N:
            raise TruncationError(f"degree {k} beyond truncation bound {self.N}")
        return self._dims.get(k, 0)

    def mult_matrix(self, i, j):
        if (i, j) in self._mult:
            return self._mult[(i, j)]
        if self.dim(i) * self.dim(j) == 0 or i + j > self.N:
            return Matrix.zeros(self.dim(i + j) if i + j <= self.N else 0, self.dim(i) * self.dim(j), self.field)
        raise TruncationError(f"multiplication C_{i} x C_{j} not stored")

    def mul(self, i, a, j, b):
        key = (i, j)
        cols = self._cols.get(key)
        if cols is None:
            cols = self.mult_matrix(i, j).sparse_columns()
            self._cols[key] = cols
        return cols[a * self.dim(j) + b]

    @property
    def generated_in_degree_one(self):
        for k in range(2, self.N + 1):
            if self.dim(k) and self.mult_matrix(k - 1, 1).rank() < self.dim(k):
                return False
        return self.low >= 0

    def basis_words(self, k):
        return None

    def check(self):
        """Unit and associativity laws degreewise; returns a message or None."""
        f = self.field
        d0 = self._dims.get(0, 0)
        if self.low == 0 and d0 != 1:
            return "degree-0 component must be one-dimensional"
        degs = range(self.low, self.N + 1)
        if d0:
            e = Matrix([self.unit], f).T
            for j in degs:
                if j not in self._dims or (0, j) not in self._mult and self.dim(j):
                    if self.dim(j) and ((0, j) not in self._mult or (j, 0) not in self._mult):
                        return f"missing unit multiplication in degree {j}"
                    continue
                idj = Matrix.identity(self.dim(j), f)
                if self.dim(j) == 0:
                    continue
                if self._mult[(0, j)] @ kron(e, idj) != idj:
                    return f"left unit law fails in degree {j}"
                if self._mult[(j, 0)] @ kron(idj, e) != idj:
                    return f"right unit law fails in degree {j}"
        for i in degs:
            for j in degs:
                for k in degs:
                    if not (self.low <= i + j + k <= self.N and self.low <= i + j <= self.N and self.low <= j + k <= self.N):
                        continue
                    if self.dim(i) * self.dim(j) * self.dim(k) == 0:
                        continue
                    lhs = self.mult_matrix(i + j, k) @ kron(self.mult_matrix(i, j), Matrix.identity(self.dim(k), f))
                    rhs = self.mult_matrix(i, j + k) @ kron(Matrix.identity(self.dim(i), f), self.mult_matrix(j, k))
                    if lhs != rhs:
                        return f"associativity fails for degrees ({i},{j},{k})"
        return None

    def __repr__(self):
        return f"GradedTruncation[{self.field}](dims={[self._dims.get(k, 0) for k in range(self.low, self.N + 1)]})"


def truncate(A, N):
    """Degreewise components C_0..C_N of a graded algebra with all m_{i,j}."""
    if N < 0:
        raise ValueError("truncation bound must be non-negative")
    dims = [A.dim(k) for k in range(N + 1)]
    mult = {}
    for i in range(N + 1):
        for j in range(N + 1 - i):
            mult[(i, j)] = A.mult_matrix(i, j)
    return GradedTruncation(A.field, dims, mult, check=False)


def truncation_from_presentation(field, n, relations, N):
    """Truncation of T(V)/(relations) where relations maps degree -> vectors."""
    return truncate(Presentation(field, n, relations), N)


def coreflection_G(T):
    """G(T) = T(C_1)/(I_2) with I_2 = ker(m_{1,1}), and the counit eps: G(T) -> T.

    The counit is the identity in degree 1; G only sees the subalgebra
    generated by C_1 and only its quadratic relations.
    """
    if T.N < 2:
        raise TruncationError("coreflection needs components up to degree 2")
    f = T.field
    n = T.dim(1)
    I2 = kernel(T.mult_matrix(1, 1)) if n else Subspace(f, 0)
    G = QuadraticAlgebra(f, [f"c{i + 1}" for i in range(n)], I2)
    eps = GradedMorphism(G, T, Matrix.identity(n, f), check=True)
    return G, eps


def coreflection_factor(f, G, eps):
    """The unique h: B -> G(T) with eps . h = f, for B generated in degree one."""
    h = GradedMorphism(f.source, G, f.degree1, check=True)
    if (eps @ h).equals(f, eps.target.N) is not None:
        raise AssertionError("eps . h != f")
    return h


def coreflection_universal_check(B, T, budget=DEFAULT_BUDGET):
    """Brute-force the counit universal property over a finite field.

    Every degree-1 matrix f_1: B_1 -> T_1 is tried; the valid ones must be
    exactly the degree-1 parts of Hom(B, G(T)), and for each the factor h
    satisfies eps . h = f up to the truncation bound.  Returns the number of
    morphisms B -> T.
    """
    f = T.field
    if not f.p:
        raise FieldError("universal-property enumeration needs a finite field")
    G, eps = coreflection_G(T)
    n, m = B.ngens, T.dim(1)
    if f.p ** (n * m) > budget:
        raise BudgetError(f"{f.p ** (n * m)} candidates exceed the budget {budget}")
    through_G = {tuple(a.ravel()) for a in enumerate_degree1(B, G, budget)}
    count = 0
    for vals in iproduct(range(f.p), repeat=n * m):
        f1 = Matrix._wrap(np.array(vals, dtype=np.int64).reshape(m, n), f)
        g = GradedMorphism(B, T, f1, check=False)
        ok = g.is_valid()
        if ok != (tuple(vals) in through_G):
            raise AssertionError(f"Hom(B, T) and Hom(B, G T) disagree at {f1.tolist()}")
        if ok:
            coreflection_factor(g, G, eps)
            count += 1
    return count


def white_relations_match(A, B, N=2):
    """Degree-2 relations of G(componentwise A o B) against the white presentation.

    Returns (equal, G relations, presentation relations).
    """
    G, _ = coreflection_G(truncate(ManinProduct([A.presentation(), B.presentation()]), max(N, 2)))
    W = white_product(A, B)
    return G.relations == W.relations, G.relations, W.relations


class GradedMorphism:
    """Graded algebra map.

    Stored as the degree-1 matrix (target gens x source gens) when the source
    is generated in degree one; otherwise explicit components ``f_k`` are
    given for the stored degrees.
    """

    def __init__(self, source, target, degree1, components=None, check=True, degree=None):
        if source.field != target.field:
            raise FieldError("source and target over different fields")
        self.source = source
        self.target = target
        self.field = source.field
        if not isinstance(degree1, Matrix):
            degree1 = Matrix(degree1, self.field, (target.ngens, source.ngens))
        if degree1.shape != (target.ngens, source.ngens):
            raise DimensionError(
                f"degree-1 matrix has shape {degree1.shape}, expected {(target.ngens, source.ngens)}"
            )
        self.degree1 = degree1
        self.components = dict(components or {})
        self.components.setdefault(1, degree1)
        self._cols = {}
        if check:
            w = self.violation(degree)
            if w is not None:
                raise w

    # evaluation -----------------------------------------------------------
    def columns(self, k):
        """Sparse columns of f_k indexed by the source basis of degree k."""
        if k in self._cols:
            return self._cols[k]
        if k == 0:
            cols = [{0: 1}] if self.target.dim(0) else [{}]
            cols = cols * self.source.dim(0) if self.source.dim(0) else []
        elif k in self.components and (k != 1 or not self.source.generated_in_degree_one or True):
            cols = self.components[k].sparse_columns()
        else:
            words = self.source.basis_words(k) if self.source.generated_in_degree_one else None
            if words is None:
                raise TruncationError(f"no degree-{k} component available")
            prev = self.columns(k - 1)
            first = self.columns(1)
            T = self.target
            cols = [T.multiply(k - 1, prev[a], 1, first[g]) for a, g in words]
        self._cols[k] = cols
        return cols

    def component(self, k):
        return Matrix.from_columns(self.columns(k), self.target.dim(k), self.field)

    def apply_free(self, k, vec):
        """Image of a tensor {word index: coeff} of source generators."""
        n = self.source.ngens
        first = self.columns(1)
        p = self.field.p
        T = self.target
        out = {}
        for idx, c in vec.items():
            letters = []
            for _ in range(k):
                idx, r = divmod(idx, n)
                letters.append(r)
            u = {0: 1}
            for d, g in enumerate(reversed(letters), start=1):
                u = T.multiply(d - 1, u, 1, first[g])
                if not u:
                    break
            for j, z in u.items():
                _acc(out, j, _mul(c, z, p), p)
        return out

    def violation(self, degree=None):
        """First relation not mapped to zero, as a RelationError (or None)."""
        S = self.source
        if isinstance(S, GradedTruncation) or not S.generated_in_degree_one:
            return self._truncation_violation(degree)
        if isinstance(S, Presentation):
            rel_items = sorted(S.rels.items())
        else:
            top = 2 if S.is_quadratic else (degree or 2)
            rel_items = [(k, S.relation_space(k)) for k in range(2, top + 1)]
        for d, s in rel_items:
            if degree is not None and d > degree and not S.is_quadratic:
                continue
            if d > self._max_target_degree():
                continue
            for row in s.ech.rows.values():
                img = self.apply_free(d, row)
                if img:
                    return RelationError(
                        f"relation of degree {d} not preserved", degree=d, relation=row, image=img
                    )
        return None

    def _max_target_degree(self):
        return getattr(self.target, "N", 10 ** 9)

    def _truncation_violation(self, degree=None):
        S = self.source
        top = min(S.N, self._max_target_degree())
        if degree is not None:
            top = min(top, degree)
        for i in range(max(S.low, 1), top + 1):
            for j in range(max(S.low, 1), top + 1 - i):
                lhs = self.component(i + j) @ S.mult_matrix(i, j)
                rhs = self.target.mult_matrix(i, j) @ kron(self.component(i), self.component(j))
                if lhs != rhs:
                    return RelationError(f"multiplication C_{i} x C_{j} not preserved", degree=i + j)
        return None

    def is_valid(self, degree=None):
        return self.violation(degree) is None

    # structure ------------------------------------------------------------
    def __matmul__(self, other):
        """Composition self . other (apply ``other`` first)."""
        if not other.target.same(self.source):
            raise ValueError("composition: target of the first map is not the source of the second")
        if other.source.generated_in_degree_one:
            return GradedMorphism(other.source, self.target, self.degree1 @ other.degree1, check=False)
        comps = {}
        for k in other.components:
            comps[k] = self.component(k) @ other.components[k]
        return GradedMorphism(other.source, self.target, comps[1], comps, check=False)

    def equals(self, other, N):
        """Compare components up to degree N; returns (degree, index) of first difference or None."""
        if not (self.source.same(other.source) and self.target.same(other.target)):
            return (-1, None)
        for k in range(0, N + 1):
            a = self.columns(k)
            b = other.columns(k)
            for idx, (x, y) in enumerate(zip(a, b)):
                if x != y:
                    return (k, idx)
        return None

    def __eq__(self, other):
        if not isinstance(other, GradedMorphism):
            return NotImplemented
        return (
            self.source.same(other.source)
            and self.target.same(other.target)
            and self.degree1 == other.degree1
            and all(self.components.get(k) == other.components.get(k) for k in set(self.components) | set(other.components))
        )

    __hash__ = None

    def __repr__(self):
        return f"GradedMorphism({self.source.ngens} -> {self.target.ngens} gens, degree1={self.degree1.tolist()})"


def identity(A):
    if A.generated_in_degree_one:
        return GradedMorphism(A, A, Matrix.identity(A.ngens, A.field), check=False)
    comps = {k: Matrix.identity(A.dim(k), A.field) for k in range(A.low, A.N + 1)}
    return GradedMorphism(A, A, comps[1], comps, check=False)


def morphism_from_degree1(f1, A, B):
    """The graded morphism A -> B with degree-1 part f1; raises RelationError."""
    return GradedMorphism(A, B, f1, check=True)


def manin(*maps):
    """Manin product f_1 o ... o f_r of morphisms."""
    src = white(*[m.source for m in maps])
    tgt = white(*[m.target for m in maps])
    d1 = maps[0].degree1
    for m in maps[1:]:
        d1 = kron(d1, m.degree1)
    return GradedMorphism(src, tgt, d1, check=False)


def twist(algebras, order):
    """Permutation of Manin factors: white(*algebras) -> white(*algebras[order])."""
    src = white(*algebras)
    tgt = white(*[algebras[o] for o in order])
    perm = tensor_permutation([a.ngens for a in algebras], order)
    return GradedMorphism(src, tgt, permutation_matrix(perm, src.field), check=False)


def symmetry(X, Y):
    return twist([X, Y], (1, 0))


def sigma23(X, Y, Z, W):
    return twist([X, Y, Z, W], (0, 2, 1, 3))


def unit_map(X):
    """The unique graded map K[u] -> X sending u to 0 in degree one is not unital;
    this returns K[u] -> K[u] identity when X is K[u]."""
    return identity(X)


def enumerate_degree1(A, B, budget=DEFAULT_BUDGET, chunk=1 << 15):
    """All degree-1 matrices (B.ngens x A.ngens) that define morphisms A -> B.

    Brute force over a finite field; yields numpy arrays of shape (m, n).
    """
    f = A.field
    if not f.p:
        raise FieldError("enumeration needs a finite field")
    if not A.is_quadratic:
        raise ValueError("enumeration needs a quadratic source")
    p = f.p
    n, m = A.ngens, B.ngens
    e = n * m
    total = p ** e
    if total > budget:
        raise BudgetError(f"{total} candidate matrices exceed the budget {budget}")
    R = A.relation_space(2)
    rels = [r for r in R.ech.rows.values()]
    if rels and m:
        M2 = np.array(B.multiplication_matrix(2).a, dtype=np.int64)
        rmats = []
        for r in rels:
            a = np.zeros((n, n), dtype=np.int64)
            for idx, v in r.items():
                a[idx // n, idx % n] = v
            rmats.append(a)
    out = []
    for start in range(0, total, chunk):
        idx = np.arange(start, min(total, start + chunk), dtype=np.int64)
        digits = np.empty((len(idx), e), dtype=np.int64)
        rest = idx.copy()
        for t in range(e - 1, -1, -1):
            digits[:, t] = rest % p
            rest //= p
        F = digits.reshape(-1, m, n)
        ok = np.ones(len(idx), dtype=bool)
        if rels and m:
            for r in rmats:
                T = np.einsum("kia,kjb,ab->kij", F, F, r) % p
                img = (T.reshape(len(idx), m * m) @ M2.T) % p
                ok &= ~img.any(axis=1)
        out.extend(F[ok])
    return out


def count_morphisms(A, B, budget=DEFAULT_BUDGET):
    return len(enumerate_degree1(A, B, budget))
