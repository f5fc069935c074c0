import io
import subprocess
import sys

import pytest

from maninkit import cli


def run(*argv):
    buf = io.StringIO()
    code, _ = cli.run(list(argv), stdout=buf)
    return code, buf.getvalue()


BAD_REP = "@field F_3\n@bimonoid z\nbuiltin group 2\n@rep r\nof z\ndim 1\nact 1 = 0\n"


def test_cohom_quantum_plane():
    code, out = run("cohom", "quantum_plane_q2.alg", "quantum_plane_q2.alg", "--degree", "2")
    assert code == 0
    assert "dims 0..2: 1 4 13" in out


def test_default_degree_and_env(monkeypatch):
    code, out = run("dual", "free2")
    assert code == 0 and "dims 0..4:" in out
    monkeypatch.setenv("MANINKIT_DEGREE", "2")
    code, out = run("dual", "free2")
    assert "dims 0..2: 1 2 0" in out
    monkeypatch.setenv("MANINKIT_DEGREE", "two")
    assert run("dual", "free2")[0] == 2


@pytest.mark.parametrize("argv", [
    ("white", "quantum_plane_q2", "dual_numbers", "--degree", "3"),
    ("black", "free2", "exterior2", "--degree", "3"),
    ("coend", "dual_numbers", "--degree", "2"),
    ("truncate", "quantum_plane_q3", "--degree", "3"),
    ("verify-comonoid", "exterior2", "--degree", "3"),
    ("verify-adjunction", "adjunction_f2.fix:ku", "adjunction_f2.fix:comm", "adjunction_f2.fix:ext"),
    ("verify-corep", "quantum_plane_q2", "--degree", "2"),
    ("tensor-corep", "monoidality_f3.fix", "z2", "sign", "swap", "--degree", "2"),
    ("verify-pi-laws", "--field", "F_3"),
    ("verify-rep", "monoidality_f3.fix", "--count", "1"),
    ("tensor-rep", "monoidality_f3.fix", "z2", "sign", "swap"),
    ("lift-rep", "lifting.fix", "--degree", "2"),
    ("lift-rep", "lifting.fix", "--functor", "sstar", "--rep", "diagonal", "--degree", "2"),
    ("verify-lift-monoidality", "monoidality_q.fix", "z2", "sign", "sign", "--degree", "2"),
    ("poset-table", "--n", "3"),
    ("fincat-search", "categories.fix", "--category", "chain"),
    ("suite", "posetcat.table", "--degree", "2"),
])
def test_commands_pass(argv):
    code, out = run(*argv)
    assert code == 0, out
    assert out


def test_output_is_deterministic():
    a = run("suite", "translate.phi", "linrep.pi", "--degree", "2")
    b = run("suite", "translate.phi", "linrep.pi", "--degree", "2")
    assert a == b
    assert "\t0." not in a[1]


def test_timing_column():
    code, out = run("suite", "posetcat.table", "--degree", "2", "--timing")
    assert code == 0
    assert len(out.splitlines()[0].split("\t")) == 6


def test_suite_list():
    code, out = run("suite", "--list")
    assert code == 0 and "cohomcoend.adjunction\t" in out


def test_poset_table_n8():
    code, out = run("poset-table")
    assert code == 0
    lines = out.splitlines()
    assert lines[1].split() == [str(y) for y in range(9)]
    assert lines[-1] == "pairs where the two cohoms differ: 28"


def test_law_failure_exit_1(tmp_path):
    p = tmp_path / "bad.fix"
    p.write_text(BAD_REP)
    code, out = run("verify-rep", str(p))
    assert code == 1
    assert "FAIL: r: multiplicativity" in out


@pytest.mark.parametrize("argv", [
    ("cohom", "nosuch", "free2"),
    ("frobnicate",),
    ("suite", "no.such.suite"),
    ("verify-pi-laws", "--field", "F_4"),
    ("dual", "adjunction_f2.fix"),
    ("lift-rep", "lifting.fix", "--functor", "sstar", "--degree", "-1"),
])
def test_input_errors_exit_2(argv):
    assert run(*argv)[0] == 2


def test_parse_error_location(tmp_path):
    p = tmp_path / "bad.alg"
    p.write_text("@field Q\n@algebra a\ngens x y\nrel x*w\n")
    code, out = run("dual", str(p))
    assert code == 2
    assert f"{p}:4:5: unknown generator 'w'" in out


def test_invalid_rep_is_input_error_elsewhere(tmp_path):
    p = tmp_path / "bad.fix"
    p.write_text(BAD_REP)
    assert run("lift-rep", str(p))[0] == 2


def test_budget_exit_3():
    code, out = run("verify-adjunction", "adjunction_f3.fix:free2", "adjunction_f3.fix:free2",
                    "adjunction_f3.fix:free2", "--budget", "100")
    assert code == 3 and "budget" in out
    assert run("verify-rep", "monoidality_f3.fix", "--count", "2", "--budget", "10")[0] == 3


def test_sstar_in_char_2_is_input_error(tmp_path):
    p = tmp_path / "f2.fix"
    p.write_text("@field F_2\n@monoid d\nbuiltin dual_numbers\n@rep r\nof d\ndim 1\nact 1 = 0\n")
    assert run("lift-rep", str(p), "--functor", "sstar")[0] == 2
    assert run("lift-rep", str(p), "--functor", "tstar", "--degree", "2")[0] == 0


def test_console_script():
    r = subprocess.run([sys.executable, "-m", "maninkit.cli", "cohom", "quantum_plane_q2", "quantum_plane_q2",
                        "--degree", "2"], capture_output=True, text=True)
    assert r.returncode == 0
    assert "1 4 13" in r.stdout
