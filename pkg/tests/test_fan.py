import random

import pytest

from termfan.algebra import weyl
from termfan.fan import (
    FanEntry,
    FanResult,
    degree_bound_quadric,
    degree_table_count,
    enumerate_leading_ideals_admissible,
    enumerate_leading_ideals_degree,
    graded_tables,
    minimal_leading_ideals,
    universal_gb,
    verify_universal,
)
from termfan.groebner import IdealSpec, leading_ideal, reduced_basis
from termfan.ideals import MonomialIdeal
from termfan.orderings import grlex, random_admissible_ordering
from termfan.parsing import parse_polynomial
from termfan.poly import RingSignature, leading_term

from conftest import XY, ideal
from oracles import principal_truncation, row_echelon_leaders


def M(*gens):
    return MonomialIdeal(XY, gens)


def P(text):
    return parse_polynomial(text, XY)


def test_parabola_fan():
    F = enumerate_leading_ideals_admissible(ideal("x^2 - y"), 3)
    assert F.ideal_set() == {M((2, 0)), M((0, 1))}
    assert F.exhausted


def test_linear_fan():
    F = enumerate_leading_ideals_admissible(ideal("x + y", "x - y"), 2)
    assert F.ideal_set() == {M((1, 0), (0, 1))}


def test_unit_fan():
    F = enumerate_leading_ideals_admissible(ideal("1"), 2)
    assert F.ideal_set() == {M((0, 0))}


def test_small_bound_is_not_exhausted():
    assert not enumerate_leading_ideals_admissible(ideal("x^2 - y"), 1).exhausted
    with pytest.raises(ValueError):
        enumerate_leading_ideals_admissible(ideal("x^2 - y"), 0)


def test_witnesses_reproduce_their_ideals(regression_ideal):
    F = enumerate_leading_ideals_admissible(regression_ideal, 4)
    for e in F.entries:
        assert leading_ideal(regression_ideal, e.ordering) == e.ideal


def test_random_orderings_land_in_the_fan(regression_ideal):
    F = enumerate_leading_ideals_admissible(regression_ideal, 4)
    rng = random.Random(11)
    for _ in range(60):
        assert leading_ideal(regression_ideal, random_admissible_ordering(2, rng)) in F.ideal_set()


def test_stability_rounds_are_seeded():
    a = enumerate_leading_ideals_admissible(ideal("x*y - 1", "y^2 - 1"), 2, stability_rounds=20, seed=4)
    b = enumerate_leading_ideals_admissible(ideal("x*y - 1", "y^2 - 1"), 2, stability_rounds=20, seed=4)
    assert a.report(XY) == b.report(XY)


def _fake(*ideals):
    return FanResult([FanEntry(grlex(2), I, None) for I in ideals], {}, True)


def test_minimalization():
    assert minimal_leading_ideals(_fake(M((1, 0)), M((1, 0), (0, 1)))).ideal_set() == {M((1, 0))}
    assert len(minimal_leading_ideals(_fake(M((2, 0)), M((0, 1))))) == 2
    assert len(minimal_leading_ideals(_fake(M((2, 0))))) == 1


def test_table_count():
    assert degree_table_count(2, 3) == 1 * 2 * 6 * 24
    assert sum(1 for _ in graded_tables(2, 2)) == 12


def test_degree_fan_examples():
    assert enumerate_leading_ideals_degree(ideal("x^2 - y"), 3).ideal_set() == {M((2, 0))}
    assert enumerate_leading_ideals_degree(ideal("x", "y"), 2).ideal_set() == {M((1, 0), (0, 1))}
    assert enumerate_leading_ideals_degree(ideal("1"), 1).ideal_set() == {M((0, 0))}


def test_degree_fan_matches_elimination():
    g = P("x^2 - y^2")
    rows = principal_truncation(g.terms, 2, 3)
    want = {MonomialIdeal(XY, row_echelon_leaders(rows, t.key)) for t in graded_tables(2, 3)}
    got = enumerate_leading_ideals_degree(ideal("x^2 - y^2"), 3).ideal_set()
    assert got == want and len(got) == 8


def test_degree_fan_budget():
    with pytest.raises(ValueError, match="smaller depth"):
        enumerate_leading_ideals_degree(ideal("x^2 - y"), 5)


def test_universal_gb_examples():
    L = ideal("x^2 - y")
    assert universal_gb(L, enumerate_leading_ideals_admissible(L, 3)) == [P("x^2 - y")]
    L = ideal("x + y", "x - y")
    assert set(universal_gb(L, enumerate_leading_ideals_admissible(L, 2))) == {P("x"), P("y")}
    L = ideal("1")
    assert universal_gb(L, enumerate_leading_ideals_admissible(L, 2)) == [P("1")]


def test_universal_gb_needs_bases():
    with pytest.raises(ValueError):
        universal_gb(ideal("x"), _fake(M((1, 0))))


def test_verify_universal(regression_ideal):
    U = universal_gb(regression_ideal, enumerate_leading_ideals_admissible(regression_ideal, 4))
    rng = random.Random(2)
    ords = [random_admissible_ordering(2, rng) for _ in range(200)]
    assert verify_universal(U, regression_ideal, ords).passed
    rep = verify_universal([], ideal("x^2 - y"), ords[:5])
    assert not rep.passed and rep.failures


def test_hyperbola_universal_basis_is_needed_in_full():
    L = ideal("x*y - 1", "y^2 - 1")
    U = universal_gb(L, enumerate_leading_ideals_admissible(L, 4))
    rng = random.Random(9)
    ords = [random_admissible_ordering(2, rng) for _ in range(200)]
    for k in range(len(U)):
        rest = U[:k] + U[k + 1:]
        assert not verify_universal(rest, L, ords).passed


def test_weyl_fans_are_antichains():
    S = RingSignature(("x", "d"))
    A = weyl(S, [("x", "d")])
    for text, want in (("d", {MonomialIdeal(S, [(0, 1)])}), ("x*d - 1", {MonomialIdeal(S, [(1, 1)])})):
        L = IdealSpec(A, (parse_polynomial(text, S, noncommutative=True),))
        F = enumerate_leading_ideals_admissible(L, 4)
        assert F.ideal_set() == want and F.exhausted
        assert minimal_leading_ideals(F).ideal_set() == F.ideal_set()


def test_report_format():
    F = enumerate_leading_ideals_admissible(ideal("x^2 - y"), 3)
    lines = F.report(XY).splitlines()
    assert lines[0].startswith("ideal=<") and " witness=matrix [[" in lines[0] and " gb={" in lines[0]
    assert lines[-1] == "exhausted=true"


def test_degree_bound():
    assert degree_bound_quadric(1, 1) == 3
    assert degree_bound_quadric(2, 2) == 32
    assert degree_bound_quadric(1, 2) == 5
