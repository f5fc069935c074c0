"""Exact linear algebra over the rationals and small prime fields.

Matrices are dense numpy arrays: ``int64`` reduced mod p for prime fields and
``object`` arrays of ``int``/``Fraction`` for the rationals.  Row reduction is
done on sparse rows (dicts), which keeps relation spaces of tensor powers cheap.

Tensor products of coordinate spaces use the lexicographic convention: the
basis vector (i, j) of ``A (x) B`` has index ``i * dim(B) + j``.
"""

from fractions import Fraction
from functools import lru_cache

import numpy as np


class FieldError(ValueError):
    pass


class DimensionError(ValueError):
    pass


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _qn(x):
    # canonical rational: int when integral
    if type(x) is Fraction and x.denominator == 1:
        return x.numerator
    return x


_qn_array = np.frompyfunc(_qn, 1, 1)


class Field:
    """Q (``p == 0``) or the prime field F_p with p < 2**16."""

    def __init__(self, p=0):
        p = int(p)
        if p != 0 and not (_is_prime(p) and p < 2 ** 16):
            raise FieldError(f"unsupported field characteristic {p}")
        self.p = p

    @property
    def name(self):
        return "Q" if self.p == 0 else f"F_{self.p}"

    @property
    def char(self):
        return self.p

    @property
    def is_finite(self):
        return self.p != 0

    @property
    def dtype(self):
        return np.int64 if self.p else object

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return self.name

    def __call__(self, x):
        if isinstance(x, Scalar):
            if x.field != self:
                raise FieldError(f"scalar over {x.field} used in {self}")
            return x.value
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, (bool, np.bool_)):
            x = int(x)
        if isinstance(x, np.integer):
            x = int(x)
        if self.p:
            if isinstance(x, Fraction):
                return self.div(x.numerator % self.p, x.denominator % self.p)
            if not isinstance(x, int):
                raise FieldError(f"cannot coerce {x!r} into {self}")
            return x % self.p
        if isinstance(x, int):
            return x
        if isinstance(x, Fraction):
            return _qn(x)
        raise FieldError(f"cannot coerce {x!r} into {self}")

    def parse(self, token):
        token = token.strip()
        try:
            if "/" in token:
                a, b = token.split("/")
                return self.div(self(int(a)), self(int(b)))
            return self(int(token))
        except (ValueError, ZeroDivisionError) as exc:
            raise FieldError(f"bad scalar {token!r}: {exc}") from None

    def format(self, x):
        return str(x)

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def add(self, a, b):
        return (a + b) % self.p if self.p else _qn(a + b)

    def sub(self, a, b):
        return (a - b) % self.p if self.p else _qn(a - b)

    def mul(self, a, b):
        return (a * b) % self.p if self.p else _qn(a * b)

    def neg(self, a):
        return (-a) % self.p if self.p else -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("division by zero in " + self.name)
        if self.p:
            return pow(int(a), -1, self.p)
        return _qn(Fraction(1) / a)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def elements(self):
        if not self.p:
            raise FieldError("Q is infinite")
        return range(self.p)

    def array(self, data, shape=None):
        if isinstance(data, Matrix):
            if data.field != self:
                raise FieldError(f"matrix over {data.field} used in {self}")
            return data.a
        if isinstance(data, np.ndarray) and data.dtype.kind in "iu":
            a = data.astype(np.int64) % self.p if self.p else data.astype(object)
            if not self.p:
                a = np.frompyfunc(int, 1, 1)(a).astype(object) if a.size else a
            return a.reshape(shape) if shape is not None else a
        if self.p:
            a = np.array(data, dtype=object)
            if a.size:
                a = np.frompyfunc(self, 1, 1)(a)
            a = a.astype(np.int64)
        else:
            a = np.array(data, dtype=object)
            if a.size:
                a = np.frompyfunc(self, 1, 1)(a)
        if shape is not None:
            a = a.reshape(shape)
        return a

    def normalize(self, a):
        if self.p:
            return np.asarray(a, dtype=np.int64) % self.p
        a = np.asarray(a, dtype=object)
        return _qn_array(a).astype(object) if a.size else a


QQ = Field(0)


@lru_cache(maxsize=None)
def GF(p):
    return Field(p)


def field_from_name(name):
    name = name.strip()
    if name in ("Q", "QQ", "0"):
        return QQ
    if name.startswith("F_"):
        name = name[2:]
    elif name.startswith("GF"):
        name = name[2:].strip("()")
    try:
        return GF(int(name))
    except ValueError:
        raise FieldError(f"unknown field {name!r}") from None


class Scalar:
    __slots__ = ("value", "field")

    def __init__(self, value, field):
        self.field = field
        self.value = field(value)

    def _other(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldError(f"mixed-field arithmetic: {self.field} and {other.field}")
            return other.value
        return self.field(other)

    def __add__(self, other):
        return Scalar(self.field.add(self.value, self._other(other)), self.field)

    __radd__ = __add__

    def __sub__(self, other):
        return Scalar(self.field.sub(self.value, self._other(other)), self.field)

    def __rsub__(self, other):
        return Scalar(self.field.sub(self._other(other), self.value), self.field)

    def __mul__(self, other):
        return Scalar(self.field.mul(self.value, self._other(other)), self.field)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return Scalar(self.field.div(self.value, self._other(other)), self.field)

    def __rtruediv__(self, other):
        return Scalar(self.field.div(self._other(other), self.value), self.field)

    def __neg__(self):
        return Scalar(self.field.neg(self.value), self.field)

    def inverse(self):
        return Scalar(self.field.inv(self.value), self.field)

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        try:
            return self.value == self.field(other)
        except FieldError:
            return False

    def __hash__(self):
        return hash((self.field.p, self.value))

    def __repr__(self):
        return f"{self.value} in {self.field}"


class Matrix:
    """Dense matrix over an exact field.  Values are treated as immutable."""

    __slots__ = ("a", "field")

    def __init__(self, data, field, shape=None):
        self.field = field
        a = field.array(data, shape)
        if a.ndim == 1 and shape is None:
            a = a.reshape(1, -1) if a.size else a.reshape(0, 0)
        if a.ndim != 2:
            raise DimensionError("matrix data must be two-dimensional")
        self.a = a

    @classmethod
    def _wrap(cls, a, field):
        m = cls.__new__(cls)
        m.a = a
        m.field = field
        return m

    @classmethod
    def zeros(cls, rows, cols, field):
        return cls._wrap(np.zeros((rows, cols), dtype=field.dtype), field)

    @classmethod
    def identity(cls, n, field):
        a = np.zeros((n, n), dtype=field.dtype)
        for i in range(n):
            a[i, i] = 1
        return cls._wrap(a, field)

    @classmethod
    def from_columns(cls, cols, rows, field):
        """Build from sparse columns (dicts row -> value)."""
        a = np.zeros((rows, len(cols)), dtype=field.dtype)
        for j, col in enumerate(cols):
            for i, v in col.items():
                a[i, j] = v
        return cls._wrap(a, field)

    @property
    def rows(self):
        return self.a.shape[0]

    @property
    def cols(self):
        return self.a.shape[1]

    @property
    def shape(self):
        return self.a.shape

    def _check(self, other):
        if not isinstance(other, Matrix):
            raise TypeError("expected a Matrix")
        if other.field != self.field:
            raise FieldError(f"field mismatch: {self.field} vs {other.field}")

    def __matmul__(self, other):
        self._check(other)
        if self.cols != other.rows:
            raise DimensionError(f"cannot compose {self.shape} with {other.shape}")
        f = self.field
        if self.cols == 0:
            return Matrix.zeros(self.rows, other.cols, f)
        if f.p:
            return Matrix._wrap((self.a @ other.a) % f.p, f)
        return Matrix._wrap(f.normalize(self.a.dot(other.a)), f)

    def __add__(self, other):
        self._check(other)
        if self.shape != other.shape:
            raise DimensionError("shape mismatch in sum")
        return Matrix._wrap(self.field.normalize(self.a + other.a), self.field)

    def __sub__(self, other):
        self._check(other)
        if self.shape != other.shape:
            raise DimensionError("shape mismatch in difference")
        return Matrix._wrap(self.field.normalize(self.a - other.a), self.field)

    def __neg__(self):
        return Matrix._wrap(self.field.normalize(-self.a), self.field)

    def scale(self, s):
        s = self.field(s)
        return Matrix._wrap(self.field.normalize(self.a * s), self.field)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and other.field == self.field
            and other.shape == self.shape
            and bool(np.all(self.a == other.a))
        )

    __hash__ = None

    @property
    def T(self):
        return Matrix._wrap(self.a.T.copy(), self.field)

    def submatrix(self, rows=None, cols=None):
        a = self.a
        if rows is not None:
            a = a[np.asarray(rows, dtype=np.int64), :]
        if cols is not None:
            a = a[:, np.asarray(cols, dtype=np.int64)]
        return Matrix._wrap(a.copy(), self.field)

    def entry(self, i, j):
        return Scalar(self.a[i, j], self.field)

    def column(self, j):
        return self.a[:, j]

    def reshape(self, rows, cols):
        return Matrix._wrap(self.a.reshape(rows, cols).copy(), self.field)

    def is_zero(self):
        return not np.any(self.a != 0)

    def tolist(self):
        if self.field.p:
            return [[int(x) for x in row] for row in self.a]
        return [[_qn(x) for x in row] for row in self.a]

    def sparse_rows(self):
        out = []
        for row in self.a:
            nz = np.nonzero(row)[0]
            out.append({int(j): (int(row[j]) if self.field.p else row[j]) for j in nz})
        return out

    def sparse_columns(self):
        return Matrix._wrap(self.a.T, self.field).sparse_rows()

    def rank(self):
        return rref(self).rows

    def hstack(self, other):
        self._check(other)
        return Matrix._wrap(np.hstack([self.a, other.a]), self.field)

    def vstack(self, other):
        self._check(other)
        return Matrix._wrap(np.vstack([self.a, other.a]), self.field)

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.tolist())
        return f"Matrix[{self.field}]({self.rows}x{self.cols}: {body})"


def kron(a, b):
    a._check(b)
    f = a.field
    if a.a.size == 0 or b.a.size == 0:
        return Matrix.zeros(a.rows * b.rows, a.cols * b.cols, f)
    if f.p:
        return Matrix._wrap(np.kron(a.a, b.a) % f.p, f)
    return Matrix._wrap(f.normalize(np.kron(a.a, b.a)), f)


def kron_all(mats):
    out = mats[0]
    for m in mats[1:]:
        out = kron(out, m)
    return out


def permutation_matrix(perm, field):
    """Matrix sending basis vector j to basis vector perm[j]."""
    n = len(perm)
    a = np.zeros((n, n), dtype=field.dtype)
    for j, i in enumerate(perm):
        a[i, j] = 1
    return Matrix._wrap(a, field)


def tensor_permutation(dims, order):
    """Index map for permuting tensor factors.

    ``dims`` are the factor dimensions and ``order`` lists, for each output
    position, the input factor placed there.  Returns ``perm`` with
    ``perm[input_index] = output_index``.
    """
    dims = list(dims)
    total = int(np.prod(dims)) if dims else 1
    idx = np.arange(total).reshape(dims) if dims else np.arange(1)
    out = np.transpose(idx, order).reshape(-1)
    perm = np.empty(total, dtype=np.int64)
    perm[out] = np.arange(total)
    return perm


def swap_matrix(dims, a, field):
    """sigma^{(a,a+1)}: swap adjacent tensor factors a and a+1 (1-based)."""
    order = list(range(len(dims)))
    order[a - 1], order[a] = order[a], order[a - 1]
    return permutation_matrix(tensor_permutation(dims, order), field)


class Echelon:
    """Reduced row-echelon basis kept as sparse rows keyed by pivot column."""

    def __init__(self, field, ncols):
        self.field = field
        self.ncols = ncols
        self.rows = {}

    @classmethod
    def from_reduced(cls, field, ncols, rows):
        e = cls(field, ncols)
        e.rows = rows
        return e

    def copy(self):
        return Echelon.from_reduced(self.field, self.ncols, {c: dict(r) for c, r in self.rows.items()})

    def reduce(self, row):
        r = {j: v for j, v in row.items() if v != 0}
        hits = [c for c in r if c in self.rows]
        if not hits:
            return r
        p = self.field.p
        for c in hits:
            a = r.pop(c)
            for j, v in self.rows[c].items():
                if j == c:
                    continue
                if p:
                    w = (r.get(j, 0) - a * v) % p
                else:
                    w = _qn(r.get(j, 0) - a * v)
                if w:
                    r[j] = w
                else:
                    r.pop(j, None)
        return r

    def add(self, row):
        r = self.reduce(row)
        if not r:
            return False
        f = self.field
        p = f.p
        c0 = min(r)
        lead = r[c0]
        if lead != 1:
            inv = f.inv(lead)
            if p:
                r = {j: (v * inv) % p for j, v in r.items()}
            else:
                r = {j: _qn(v * inv) for j, v in r.items()}
        for prow in self.rows.values():
            a = prow.get(c0)
            if a is None:
                continue
            del prow[c0]
            for j, v in r.items():
                if j == c0:
                    continue
                if p:
                    w = (prow.get(j, 0) - a * v) % p
                else:
                    w = _qn(prow.get(j, 0) - a * v)
                if w:
                    prow[j] = w
                else:
                    prow.pop(j, None)
        self.rows[c0] = r
        return True

    def extend(self, rows):
        for r in rows:
            self.add(r)
        return self

    @property
    def rank(self):
        return len(self.rows)

    def pivots(self):
        return sorted(self.rows)

    def contains(self, row):
        return not self.reduce(row)

    def to_matrix(self):
        piv = self.pivots()
        a = np.zeros((len(piv), self.ncols), dtype=self.field.dtype)
        for i, c in enumerate(piv):
            for j, v in self.rows[c].items():
                a[i, j] = v
        return Matrix._wrap(a, self.field)


def rref(m):
    """Unique reduced row-echelon form of ``m`` with zero rows dropped."""
    return Echelon(m.field, m.cols).extend(m.sparse_rows()).to_matrix()


class Subspace:
    """Subspace of K^n stored by its canonical reduced row-echelon basis."""

    __slots__ = ("field", "ambient_dim", "ech", "_basis")

    def __init__(self, field, ambient_dim, vectors=()):
        self.field = field
        self.ambient_dim = ambient_dim
        if isinstance(vectors, Matrix):
            if vectors.field != field:
                raise FieldError("field mismatch")
            if vectors.rows and vectors.cols != ambient_dim:
                raise DimensionError("basis vectors have the wrong length")
            rows = vectors.sparse_rows()
        else:
            rows = []
            for v in vectors:
                if isinstance(v, dict):
                    rows.append({j: field(x) for j, x in v.items()})
                else:
                    vv = field.array(v).reshape(-1)
                    if len(vv) != ambient_dim:
                        raise DimensionError("vector has the wrong length")
                    rows.append({int(j): vv[j] for j in np.nonzero(vv)[0]})
        self.ech = Echelon(field, ambient_dim).extend(rows)
        self._basis = None

    @classmethod
    def _from_echelon(cls, ech):
        s = cls.__new__(cls)
        s.field = ech.field
        s.ambient_dim = ech.ncols
        s.ech = ech
        s._basis = None
        return s

    @classmethod
    def zero(cls, field, n):
        return cls(field, n)

    @classmethod
    def full(cls, field, n):
        return cls(field, n, [{i: 1} for i in range(n)])

    @property
    def dim(self):
        return self.ech.rank

    @property
    def basis(self):
        if self._basis is None:
            self._basis = self.ech.to_matrix()
        return self._basis

    def pivots(self):
        return self.ech.pivots()

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.field == other.field
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.field.p, self.ambient_dim, tuple(map(tuple, self.basis.tolist()))))

    def contains(self, v):
        return contains(self, v)

    def __repr__(self):
        return f"Subspace(dim {self.dim} in {self.field}^{self.ambient_dim})"


def _check_pair(a, b):
    if a.field != b.field:
        raise FieldError(f"field mismatch: {a.field} vs {b.field}")
    if a.ambient_dim != b.ambient_dim:
        raise DimensionError("ambient dimensions differ")


def kernel(m):
    """Right kernel {v : m v = 0} as a subspace of K^cols."""
    ech = Echelon(m.field, m.cols).extend(m.sparse_rows())
    piv = set(ech.rows)
    f = m.field
    vecs = []
    for j in range(m.cols):
        if j in piv:
            continue
        v = {j: 1}
        for c, row in ech.rows.items():
            x = row.get(j)
            if x:
                v[c] = f.neg(x)
        vecs.append(v)
    return Subspace(f, m.cols, vecs)


def annihilator(s):
    """Functionals (dual-basis coordinates) vanishing on ``s``."""
    if s.dim == 0:
        return Subspace.full(s.field, s.ambient_dim)
    return kernel(s.basis)


def subspace_sum(a, b):
    _check_pair(a, b)
    ech = a.ech.copy()
    for r in b.ech.rows.values():
        ech.add(r)
    return Subspace._from_echelon(ech)


def intersect(a, b):
    _check_pair(a, b)
    return annihilator(subspace_sum(annihilator(a), annihilator(b)))


def contains(s, v):
    if isinstance(v, dict):
        row = v
    else:
        vv = s.field.array(v).reshape(-1)
        if len(vv) != s.ambient_dim:
            raise DimensionError("vector has the wrong length")
        row = {int(j): vv[j] for j in np.nonzero(vv)[0]}
    return s.ech.contains(row)


def image(m, s=None):
    """Image of a subspace (default: the whole source) under ``m``."""
    if s is None:
        return Subspace(m.field, m.rows, m.T.sparse_rows())
    return Subspace(m.field, m.rows, (m @ s.basis.T).T.sparse_rows())


def tensor_subspace(a, b):
    """a (x) b inside K^{n} (x) K^{m}."""
    if a.field != b.field:
        raise FieldError("field mismatch")
    return Subspace(a.field, a.ambient_dim * b.ambient_dim, kron(a.basis, b.basis))
