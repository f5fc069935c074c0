"""Plain-text fixture files.

A file is a sequence of sections.  Each header line starts with ``@`` and
the following lines, up to the next header, are its entries::

    @field Q

    @algebra qp2
    gens x y
    rel x*y - 2*y*x

    @algebra qp3
    builtin quantum_plane 3

    @monoid dual
    basis 1 t
    unit 1
    prod t t = 0

    @bimonoid z2
    builtin group 2

    @rep nilp
    of dual
    dim 2
    act t = 0 1 / 0 0

    @category m3
    builtin m3

Lines are split on whitespace; ``#`` starts a comment.  A term is a
``*``-product of an optional scalar and labels, e.g. ``-2*y*x`` or
``1/2*g|g`` (``|`` separates tensor factors).  Scalars are integers or
fractions; over F_p they are reduced mod p.  Errors carry line and column.
"""

import numpy as np

from . import linrep
from .exactlin import FieldError, Matrix, Subspace, field_from_name
from .quadalg import KU, QuadraticAlgebra, dual_numbers, free_algebra, quantum_plane, symmetric_algebra

SECTIONS = ("field", "algebra", "monoid", "bimonoid", "rep", "category")
_TABLES = {"algebra": "algebras", "monoid": "monoids", "bimonoid": "bimonoids", "rep": "reps", "category": "categories"}


class FixtureError(ValueError):
    def __init__(self, msg, line=None, col=None, path=None):
        self.msg, self.line, self.col, self.path = msg, line, col, path
        where = ":".join(str(x) for x in (path, line, col) if x is not None)
        super().__init__(f"{where}: {msg}" if where else msg)


class Token:
    __slots__ = ("text", "line", "col")

    def __init__(self, text, line, col):
        self.text, self.line, self.col = text, line, col

    def error(self, msg):
        return FixtureError(msg, self.line, self.col)


def tokenize(line, lineno):
    out = []
    i = 0
    code = line.split("#", 1)[0]
    while i < len(code):
        if code[i].isspace():
            i += 1
            continue
        j = i
        while j < len(code) and not code[j].isspace():
            j += 1
        out.append(Token(code[i:j], lineno, i + 1))
        i = j
    return out


class Section:
    def __init__(self, kind, name, header, lines):
        self.kind, self.name, self.header, self.lines = kind, name, header, lines

    def entries(self):
        """{keyword: [token lists]} in file order."""
        out = {}
        for toks in self.lines:
            out.setdefault(toks[0].text, []).append(toks)
        return out


class Fixture:
    def __init__(self, field, path=None):
        self.field = field
        self.path = path
        self.algebras = {}
        self.monoids = {}
        self.bimonoids = {}
        self.reps = {}
        self.categories = {}

    def get(self, kind, name=None):
        table = getattr(self, _TABLES[kind])
        if name is None:
            if len(table) != 1:
                raise FixtureError(f"expected exactly one {kind} in {self.path}, found {len(table)}")
            return next(iter(table.values()))
        if name not in table:
            raise FixtureError(f"no {kind} named {name!r} in {self.path}")
        return table[name]


def _split_sections(text):
    sections = []
    cur = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = tokenize(raw, lineno)
        if not toks:
            continue
        head = toks[0]
        if head.text.startswith("@"):
            kind = head.text[1:]
            if kind not in SECTIONS:
                raise head.error(f"unknown section {head.text!r}")
            cur = Section(kind, None, head, [])
            rest = toks[1:]
            if kind == "field":
                cur.lines.extend([rest] if rest else [])
            else:
                if len(rest) != 1:
                    raise head.error(f"@{kind} needs exactly one name")
                cur.name = rest[0].text
            sections.append(cur)
        else:
            if cur is None:
                raise head.error("entry outside of any section")
            cur.lines.append(toks)
    return sections


def parse(text, path=None, strict=True):
    """With ``strict=False`` monoid axioms and representation laws are left for
    the caller to check; shapes and labels are always validated."""
    try:
        return _parse(text, path, strict)
    except FixtureError as e:
        if e.path is None and path is not None:
            raise FixtureError(e.msg, e.line, e.col, path) from None
        raise


def _parse(text, path, strict=True):
    sections = _split_sections(text)
    fields = [s for s in sections if s.kind == "field"]
    if len(fields) != 1:
        where = fields[1].header if len(fields) > 1 else None
        raise FixtureError(
            "a fixture needs exactly one @field section", where.line if where else None, where.col if where else None
        )
    fs = fields[0]
    toks = [t for line in fs.lines for t in line]
    if len(toks) != 1:
        bad = toks[1] if len(toks) > 1 else fs.header
        raise bad.error("@field takes one field name (Q, F_p); other entries need their own section")
    try:
        F = field_from_name(toks[0].text)
    except FieldError as e:
        raise toks[0].error(str(e)) from None
    fx = Fixture(F, path)
    for s in sections:
        if s.kind == "field":
            continue
        table = getattr(fx, _TABLES[s.kind])
        if s.name in table:
            raise s.header.error(f"duplicate {s.kind} {s.name!r}")
        if s.kind == "algebra":
            table[s.name] = _algebra(s, F)
        elif s.kind == "monoid":
            table[s.name] = _monoid(s, F, False, strict)
        elif s.kind == "bimonoid":
            table[s.name] = _monoid(s, F, True, strict)
        elif s.kind == "rep":
            table[s.name] = _rep(s, F, fx, strict)
        else:
            table[s.name] = _category(s)
    return fx


def load(path, strict=True):
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read(), path, strict)


# -- pieces ------------------------------------------------------------------------


def _scalar(tok, F, text=None):
    try:
        return F.parse(text if text is not None else tok.text)
    except FieldError as e:
        raise tok.error(str(e)) from None


def _int(tok, lo=0):
    try:
        v = int(tok.text)
    except ValueError:
        raise tok.error(f"expected an integer, got {tok.text!r}") from None
    if v < lo:
        raise tok.error(f"expected an integer >= {lo}")
    return v


def _is_scalar(s):
    t = s.lstrip("-")
    if "/" in t:
        a, _, b = t.partition("/")
        return a.isdigit() and b.isdigit()
    return t.isdigit()


def linear_combination(toks, F, label):
    """Parse ``t1 + t2 - t3`` into [(coeff, key)] where ``label`` maps a term's
    label part (list of strings) and a token to a key."""
    out = []
    sign = 1
    expect_term = True
    pending = None
    for tok in toks:
        t = tok.text
        if t in ("+", "-"):
            if t == "-":
                sign = -sign
            expect_term = True
            pending = tok
            continue
        if not expect_term:
            raise tok.error("missing + or - between terms")
        body = t
        if body[0] in "+-" and len(body) > 1:
            if body[0] == "-":
                sign = -sign
            body = body[1:]
        parts = body.split("*")
        scalars = []
        while parts and _is_scalar(parts[0]):
            scalars.append(parts.pop(0))
        if any(p == "" for p in parts):
            raise tok.error(f"malformed term {t!r}")
        if not parts:
            # a bare number: either a basis label such as "1" or the zero term
            parts = [scalars.pop()]
            c = F(sign)
            for x in scalars:
                c = F.mul(c, _scalar(tok, F, x))
            try:
                key = label(parts, tok)
            except FixtureError:
                if F.mul(c, _scalar(tok, F, parts[0])) != 0:
                    raise
                key = None
        else:
            c = F(sign)
            for x in scalars:
                c = F.mul(c, _scalar(tok, F, x))
            key = label(parts, tok)
        if key is not None:
            out.append((c, key))
        sign = 1
        expect_term = False
        pending = None
    if pending is not None:
        raise pending.error("dangling sign")
    return out


def _builtin_algebra(toks, F):
    kind = toks[1].text if len(toks) > 1 else None
    args = toks[2:]
    if kind in ("ku", "K[u]", "unit"):
        return KU(F)
    if kind == "free":
        return free_algebra(F, _int(args[0], 0))
    if kind == "symmetric":
        return symmetric_algebra(F, _int(args[0], 1))
    if kind == "dual_numbers":
        return dual_numbers(F)
    if kind == "quantum_plane":
        if not args:
            raise toks[1].error("quantum_plane needs q")
        return quantum_plane(F, _scalar(args[0], F))
    raise (toks[1] if len(toks) > 1 else toks[0]).error(f"unknown builtin algebra {kind!r}")


def _algebra(s, F):
    e = s.entries()
    if "builtin" in e:
        if len(s.lines) != 1:
            raise s.lines[1][0].error("builtin algebras take no further entries")
        return _builtin_algebra(e["builtin"][0], F)
    if "gens" not in e:
        raise s.header.error("algebra needs a gens line")
    gens = [t.text for t in e["gens"][0][1:]]
    if len(set(gens)) != len(gens):
        raise e["gens"][0][0].error("repeated generator label")
    idx = {g: i for i, g in enumerate(gens)}
    n = len(gens)

    def word(parts, tok):
        if len(parts) != 2:
            raise tok.error("relations must be quadratic (two generators per term)")
        for p in parts:
            if p not in idx:
                raise tok.error(f"unknown generator {p!r}")
        return idx[parts[0]] * n + idx[parts[1]]

    rows = []
    for key, lines in e.items():
        if key not in ("gens", "rel"):
            raise lines[0][0].error(f"unknown algebra entry {key!r}")
    for line in e.get("rel", []):
        vec = {}
        for c, k in linear_combination(line[1:], F, word):
            vec[k] = F.add(vec.get(k, 0), c)
        vec = {k: v for k, v in vec.items() if v != 0}
        if vec:
            rows.append(vec)
    return QuadraticAlgebra(F, gens, Subspace(F, n * n, rows) if rows else None)


def _builtin_monoid(toks, F, bimonoid):
    kind = toks[1].text if len(toks) > 1 else None
    args = toks[2:]
    if kind == "group":
        return linrep.cyclic_group_algebra(_int(args[0], 1), F)
    if kind == "function":
        n = _int(args[0], 1)
        return linrep.function_algebra(list(range(n)), lambda a, b: (a + b) % n, 0, F, f"K^(Z/{n})")
    if not bimonoid:
        if kind == "dual_numbers":
            return linrep.dual_numbers_algebra(F)
        if kind == "product":
            return linrep.product_algebra(F)
        if kind == "end":
            return linrep.end_monoid(_int(args[0], 1), F)
    raise (toks[1] if len(toks) > 1 else toks[0]).error(f"unknown builtin {kind!r}")


def _monoid(s, F, bimonoid, strict=True):
    e = s.entries()
    if "builtin" in e:
        return _builtin_monoid(e["builtin"][0], F, bimonoid)
    allowed = {"basis", "unit", "prod"} | ({"coprod", "counit"} if bimonoid else set())
    for key, lines in e.items():
        if key not in allowed:
            raise lines[0][0].error(f"unknown entry {key!r}")
    if "basis" not in e or "unit" not in e:
        raise s.header.error("needs basis and unit lines")
    basis = [t.text for t in e["basis"][0][1:]]
    idx = {b: i for i, b in enumerate(basis)}
    n = len(basis)

    def elem(parts, tok):
        if len(parts) != 1 or parts[0] not in idx:
            raise tok.error(f"unknown basis element {'*'.join(parts)!r}")
        return idx[parts[0]]

    def vector(toks):
        v = np.zeros(n, dtype=object)
        for c, k in linear_combination(toks, F, elem):
            v[k] = F.add(v[k], c)
        return v

    utoks = e["unit"][0][1:]
    eta = vector(utoks)
    mu = np.zeros((n, n * n), dtype=object)
    unit_label = utoks[0].text if len(utoks) == 1 and utoks[0].text in idx else None
    if unit_label is not None:
        u = idx[unit_label]
        for b in range(n):
            mu[b, u * n + b] = 1
            mu[b, b * n + u] = 1
    for line in e.get("prod", []):
        eq = _split_eq(line)
        a, b = line[1], line[2]
        if len(line) < 5 or eq != 3 or a.text not in idx or b.text not in idx:
            raise line[0].error("prod lines look like: prod a b = <combination>")
        mu[:, idx[a.text] * n + idx[b.text]] = vector(line[4:])
    mu = Matrix([[F(x) for x in row] for row in mu.tolist()], F)
    eta = Matrix([[F(x)] for x in eta.tolist()], F)
    if not bimonoid:
        try:
            M = linrep.VecMonoid(mu, eta, name=s.name, check=strict)
        except ValueError as exc:
            raise s.header.error(str(exc)) from None
        M.labels = basis
        return M

    def pair(parts, tok):
        p = parts[0].split("|") if len(parts) == 1 else None
        if not p or len(p) != 2 or p[0] not in idx or p[1] not in idx:
            raise tok.error(f"expected a|b with basis labels, got {'*'.join(parts)!r}")
        return idx[p[0]] * n + idx[p[1]]

    D = np.zeros((n * n, n), dtype=object)
    for line in e.get("coprod", []):
        if len(line) < 4 or line[2].text != "=" or line[1].text not in idx:
            raise line[0].error("coprod lines look like: coprod a = <combination of x|y>")
        for c, k in linear_combination(line[3:], F, pair):
            D[k, idx[line[1].text]] = F.add(D[k, idx[line[1].text]], c)
    eps = np.zeros((1, n), dtype=object)
    for line in e.get("counit", []):
        if len(line) != 4 or line[2].text != "=" or line[1].text not in idx:
            raise line[0].error("counit lines look like: counit a = <scalar>")
        eps[0, idx[line[1].text]] = _scalar(line[3], F)
    D = Matrix([[F(x) for x in row] for row in D.tolist()], F)
    eps = Matrix([[F(x) for x in row] for row in eps.tolist()], F)
    try:
        B = linrep.VecBimonoid(mu, eta, D, eps, name=s.name, check=strict)
    except ValueError as exc:
        raise s.header.error(str(exc)) from None
    B.labels = basis
    return B


def _split_eq(line):
    for i, t in enumerate(line):
        if t.text == "=":
            return i
    return None


def _rep(s, F, fx, strict):
    e = s.entries()
    for key, lines in e.items():
        if key not in ("of", "dim", "act", "trivial"):
            raise lines[0][0].error(f"unknown rep entry {key!r}")
    if "of" not in e or "dim" not in e:
        raise s.header.error("rep needs 'of' and 'dim' lines")
    mtok = e["of"][0][1]
    M = fx.monoids.get(mtok.text) or fx.bimonoids.get(mtok.text)
    if M is None:
        raise mtok.error(f"unknown monoid {mtok.text!r} (declare it earlier)")
    nV = _int(e["dim"][0][1], 1)
    if "trivial" in e:
        if not hasattr(M, "eps"):
            raise e["trivial"][0][0].error("trivial reps need a bimonoid")
        rho = linrep.unit_closed(nV, F) @ M.eps
        return (mtok.text, rho, nV)
    cols = {}
    for line in e.get("act", []):
        if len(line) < 3 or line[2].text != "=":
            raise line[0].error("act lines look like: act <basis index or label> = row / row")
        cols[line[1]] = _matrix(line[3:], nV, F)
    rho = np.zeros((nV * nV, M.dim), dtype=object)
    labels = getattr(M, "labels", None) or [str(i) for i in range(M.dim)]
    eta = [x for row in M.eta.tolist() for x in row]
    if sorted(eta) == [0] * (M.dim - 1) + [1]:
        rho[:, eta.index(1)] = np.eye(nV, dtype=np.int64).astype(object).ravel()
    for tok, m in cols.items():
        if tok.text in labels:
            j = labels.index(tok.text)
        elif tok.text.isdigit():
            j = int(tok.text)
            if j >= M.dim:
                raise tok.error("basis index out of range")
        else:
            raise tok.error(f"unknown basis label {tok.text!r} (labels: {' '.join(labels)})")
        rho[:, j] = m.ravel()
    rho = Matrix([[F(x) for x in row] for row in rho.tolist()], F)
    bad = linrep.is_rep(rho, M, nV) if strict else []
    if bad:
        raise s.header.error(f"not a representation: {', '.join(bad)}")
    return (mtok.text, rho, nV)


def _matrix(toks, n, F):
    rows, cur = [], []
    for t in toks:
        if t.text == "/":
            rows.append(cur)
            cur = []
        else:
            cur.append(_scalar(t, F))
    rows.append(cur)
    if len(rows) != n or any(len(r) != n for r in rows):
        raise toks[0].error(f"expected a {n}x{n} matrix")
    return np.array(rows, dtype=object)


def _category(s):
    from . import fincat, posetcat

    e = s.entries()
    if "builtin" in e:
        t = e["builtin"][0]
        kind = t[1].text if len(t) > 1 else None
        if kind == "maxposet":
            return posetcat.MaxPoset(_int(t[2], 0))
        if kind == "subsets":
            return posetcat.SubsetCategory(_int(t[2], 0))
        if kind == "m3":
            return fincat.lattice_m3()
        raise (t[1] if len(t) > 1 else t[0]).error(f"unknown builtin category {kind!r}")
    for key, lines in e.items():
        if key not in ("objects", "leq", "tensor", "unit"):
            raise lines[0][0].error(f"unknown category entry {key!r}")
    if "objects" not in e:
        raise s.header.error("category needs an objects line")
    labels = [t.text for t in e["objects"][0][1:]]
    idx = {x: i for i, x in enumerate(labels)}

    def obj(tok):
        if tok.text not in idx:
            raise tok.error(f"unknown object {tok.text!r}")
        return idx[tok.text]

    le = {(i, i) for i in range(len(labels))}
    for line in e.get("leq", []):
        if len(line) != 3:
            raise line[0].error("leq lines look like: leq x y")
        le.add((obj(line[1]), obj(line[2])))
    changed = True
    while changed:
        changed = False
        for a, b in list(le):
            for c, d in list(le):
                if b == c and (a, d) not in le:
                    le.add((a, d))
                    changed = True
    table = {}
    for line in e.get("tensor", []):
        if len(line) != 5 or line[3].text != "=":
            raise line[0].error("tensor lines look like: tensor x y = z")
        table[(obj(line[1]), obj(line[2]))] = obj(line[4])
    if "unit" not in e:
        raise s.header.error("category needs a unit line")
    unit = obj(e["unit"][0][1])
    n = len(labels)
    for a in range(n):
        table.setdefault((unit, a), a)
        table.setdefault((a, unit), a)
    missing = [(a, b) for a in range(n) for b in range(n) if (a, b) not in table]
    if missing:
        a, b = missing[0]
        raise s.header.error(f"tensor table has no entry for ({labels[a]}, {labels[b]})")
    try:
        P = fincat.Preorder(labels, lambda x, y: (x, y) in le)
        return fincat.MonoidalTable(P, lambda x, y: table[(x, y)], unit)
    except (fincat.CategoryError, ValueError) as exc:
        raise s.header.error(str(exc)) from None
