import io
import os

import pytest

from termfan.cli import main

SESSIONS = os.path.join(os.path.dirname(__file__), os.pardir, "sessions")


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def session(name):
    return os.path.join(SESSIONS, name)


def test_bound():
    assert run("bound", "--d", "2", "--t", "2") == (0, "32\n", "")


def test_fan_report():
    code, out, _ = run("fan", session("parabola.session"), "--weight-bound", "3")
    assert code == 0
    ideals = [l for l in out.splitlines() if l.startswith("ideal=")]
    assert len(ideals) == 2
    assert "exhausted=true" in out


def test_fan_is_reproducible_with_seed():
    args = ("fan", session("hyperbola.session"), "--weight-bound", "2", "--rounds", "10", "--seed", "3")
    assert run(*args) == run(*args)


def test_verify_universal_passes_and_fails():
    code, out, _ = run("verify-universal", session("hyperbola.session"), "--samples", "50", "--seed", "1")
    assert code == 0 and "PASS" in out
    code, out, _ = run("verify-universal", session("hyperbola.session"), "--samples", "50", "--seed", "1", "--drop", "0")
    assert code == 1
    assert "failure: witness=matrix" in out


def test_verify_universal_with_explicit_basis():
    code, out, _ = run("verify-universal", session("parabola.session"), "--basis", "x^2 - y", "--samples", "20")
    assert code == 0


def test_gb_and_reduced_gb():
    code, out, _ = run("reduced-gb", session("parabola.session"), "--ordering", "ylex")
    assert code == 0
    assert "leading ideal: <y>" in out
    code, out, _ = run("gb", session("parabola.session"))
    assert "leading ideal: <x^2>" in out


def test_weyl_session():
    code, out, _ = run("fan", session("weyl.session"))
    assert code == 0 and "ideal=<x*dx>" in out


def test_classify_prints_witness():
    code, out, _ = run("classify", "table D=2 deg1=(y,z) deg2=(yz,y^2,z^2)", "--vars", "y,z")
    assert code == 0
    assert "compatible=no" in out and "degree=yes" in out
    assert "witness: y < z but y*y > z*y" in out


def test_dist():
    assert run("dist", "lex", "grlex", "--vars", "x,y")[1] == "2^-2\n"


def test_hilbert():
    code, out, _ = run("hilbert", "--ideal", "x^2, xy", "--vars", "x,y")
    assert code == 0
    assert "HP(s) = s + 2" in out and "ind = 1" in out


def test_macaulay_and_slice():
    assert run("macaulay", session("parabola.session"), "--cap", "3")[0] == 0
    code, out, _ = run("slice-lm", session("parabola.session"), "--degree", "3")
    assert code == 0 and out.strip() == "x^3, x^2*y, x^2"


def test_degree_fan():
    code, out, _ = run("degree-fan", session("parabola.session"), "--depth", "3")
    assert code == 0 and out.startswith("ideal=<x^2>")


def test_perturb():
    code, out, _ = run("perturb", "grlex", "--vars", "x,y", "--r", "2")
    assert code == 0
    assert "distance: 2^-4" in out and "compatible=no" in out


@pytest.mark.parametrize(
    "argv",
    [
        ("nonsense",),
        ("bound", "--d", "x", "--t", "1"),
        ("classify", "spiral", "--vars", "x,y"),
        ("hilbert", "--ideal", "x^2 -", "--vars", "x"),
        ("fan", "/nonexistent.session"),
        ("perturb", "grlex", "--vars", "x", "--r", "1"),
        ("verify-universal", os.path.join(SESSIONS, "parabola.session"), "--drop", "9"),
    ],
)
def test_input_errors_exit_2(argv):
    code, _, err = run(*argv)
    assert code == 2
