import pytest

from termfan.algebra import commutative
from termfan.groebner import IdealSpec
from termfan.parsing import parse_polynomial
from termfan.poly import RingSignature

XY = RingSignature(("x", "y"))


def ideal(*texts, sig=XY):
    return IdealSpec(commutative(sig), tuple(parse_polynomial(s, sig) for s in texts))


REGRESSION = {
    "parabola": ("x^2 - y",),
    "lines": ("x + y", "x - y"),
    "hyperbola": ("x*y - 1", "y^2 - 1"),
}


@pytest.fixture
def xy():
    return XY


@pytest.fixture(params=sorted(REGRESSION))
def regression_ideal(request):
    return ideal(*REGRESSION[request.param])


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
