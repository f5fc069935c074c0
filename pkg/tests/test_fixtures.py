import os

import pytest
from hypothesis import given, settings, strategies as st

from maninkit import fixtures
from maninkit.exactlin import GF, QQ, Subspace
from maninkit.fixtures import FixtureError
from maninkit.suites import corpus_dir


@pytest.mark.parametrize("text,line,col,msg", [
    ("@algebra a\ngens x\n", None, None, "exactly one @field"),
    ("@field Q\n@field F_3\n", 2, 1, "exactly one @field"),
    ("@field F_3\n@algebra a\ngens x y\nrel 1/0*x*y\n", 4, 5, "division by zero"),
    ("@field Q\n@algebra a\ngens x y\nrel x*z\n", 4, 5, "unknown generator 'z'"),
    ("@field Q\n@widget w\n", 2, 1, "unknown section"),
    ("@field Q\n@algebra a\ngens x\nrel x*x*x\n", 4, 5, "quadratic"),
    ("@field Q\n@algebra a\nbuiltin banana\n", 3, 9, "unknown builtin"),
    ("@field R\n", 1, 8, "unknown field"),
    ("@field Q\n@algebra a\ngens x\n@algebra a\ngens y\n", 4, 1, "duplicate algebra"),
    ("@field Q\ngens x\n", 2, 1, "@field takes one field name"),
    ("@field F_3\n@bimonoid z\nbuiltin group 2\n@rep r\nof z\ndim 2\nact 1 = 1 0 / 0\n", 7, 9, "2x2"),
    ("@field F_3\n@bimonoid z\nbuiltin group 2\n@rep r\nof z\ndim 1\nact g = 0\n", 7, 5, "unknown basis label"),
    ("@field F_3\n@bimonoid z\nbuiltin group 2\n@rep r\nof z\ndim 1\nact 1 = 0\n", 4, 1, "not a representation"),
    ("@field F_3\n@rep r\nof z\ndim 1\n", 3, 4, "unknown monoid"),
])
def test_errors_carry_position(text, line, col, msg):
    with pytest.raises(FixtureError) as ei:
        fixtures.parse(text, "case.fix")
    e = ei.value
    assert (e.line, e.col) == (line, col)
    assert msg in str(e)
    assert str(e).startswith("case.fix")


def test_comments_and_blank_lines():
    fx = fixtures.parse("# header\n\n@field F_5  # five\n@algebra a\ngens x y\n\nrel 7*x*y - 3/2*y*x\n", "c.fix")
    A = fx.get("algebra", "a")
    # over F_5: 7 = 2 and 3/2 = 4, so 2 xy - 4 yx spans the same line as xy + 3 yx
    assert A.relations == Subspace(GF(5), 4, [[0, 1, 3, 0]])


coeff = st.integers(-6, 6)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(coeff, coeff, coeff, coeff), max_size=3), st.sampled_from([0, 3, 7]))
def test_relations_round_trip(rows, p):
    F = GF(p) if p else QQ
    words = ["x*x", "x*y", "y*x", "y*y"]
    lines = []
    for r in rows:
        terms = [f"{c}*{w}" for c, w in zip(r, words) if c]
        if terms:
            lines.append("rel " + " + ".join(terms).replace("+ -", "- "))
    text = f"@field {'Q' if not p else f'F_{p}'}\n@algebra a\ngens x y\n" + "\n".join(lines) + "\n"
    A = fixtures.parse(text).get("algebra")
    assert A.relations == Subspace(F, 4, [list(r) for r in rows])


def test_every_corpus_file_loads():
    names = sorted(os.listdir(corpus_dir()))
    assert len(names) >= 12
    for n in names:
        fx = fixtures.load(os.path.join(corpus_dir(), n))
        assert fx.algebras or fx.monoids or fx.bimonoids or fx.categories


def test_get_requires_name_when_ambiguous():
    fx = fixtures.load(os.path.join(corpus_dir(), "adjunction_f2.fix"))
    with pytest.raises(FixtureError):
        fx.get("algebra")
    with pytest.raises(FixtureError):
        fx.get("algebra", "nope")


def test_builtins():
    fx = fixtures.parse(
        "@field F_3\n@algebra q\nbuiltin quantum_plane 2\n@algebra s\nbuiltin symmetric 3\n"
        "@bimonoid g\nbuiltin group 3\n@monoid e\nbuiltin end 2\n@category c\nbuiltin maxposet 3\n"
    )
    assert fx.get("algebra", "q").dims(3) == (1, 2, 3, 4)
    assert fx.get("algebra", "s").dims(2) == (1, 3, 6)
    assert fx.get("bimonoid", "g").check() == []
    assert fx.get("monoid", "e").dim == 4
    assert len(fx.get("category", "c").cat.labels) == 4


def test_explicit_monoid_is_validated():
    text = "@field Q\n@monoid m\nbasis e a\nunit e\nprod a a = a + e\n"
    fx = fixtures.parse(text)
    assert fx.get("monoid", "m").check() == []
