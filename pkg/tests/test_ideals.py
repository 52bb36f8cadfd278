from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from termfan.ideals import (
    MonomialIdeal,
    contains_monomial,
    equals,
    hilbert_function,
    hilbert_polynomial_and_index,
    regularity_index,
    standard_monomials_up_to,
    subset,
)
from termfan.poly import RingSignature

from oracles import hilbert_count

X = RingSignature(("x",))
XY = RingSignature(("x", "y"))
XYZ = RingSignature(("x", "y", "z"))


def I2(*gens):
    return MonomialIdeal(XY, gens)


def test_minimalization():
    assert I2((2, 0), (3, 0)).generators == {(2, 0)}
    assert I2().is_zero()
    assert I2((1, 1), (2, 0), (0, 2), (2, 1)).generators == {(1, 1), (2, 0), (0, 2)}


def test_membership():
    assert contains_monomial(I2((2, 0)), (2, 1))
    assert not contains_monomial(I2((2, 0)), (1, 1))
    assert contains_monomial(I2((1, 1), (0, 3)), (0, 4))


def test_inclusion():
    assert subset(I2((2, 0)), I2((1, 0)))
    assert not subset(I2((2, 0)), I2((0, 1))) and not subset(I2((0, 1)), I2((2, 0)))
    assert equals(I2((2, 0), (1, 1)), I2((1, 1), (2, 0)))


def test_printing():
    assert str(I2((2, 0), (1, 1))) == "<x^2, x*y>"
    assert str(I2()) == "<>"


def test_hilbert_examples():
    assert hilbert_function(I2(), 3) == comb(5, 2)
    assert hilbert_function(I2((0, 0)), 4) == 0
    assert hilbert_function(I2((2, 0), (1, 1)), 2) == 4


def test_hilbert_polynomial_examples():
    h = hilbert_polynomial_and_index(I2((2, 0), (1, 1)))
    assert h.format_hp() == "s + 2" and h.regularity_index == 1
    h = hilbert_polynomial_and_index(MonomialIdeal(X, []))
    assert h.format_hp() == "s + 1" and h.regularity_index == 0
    h = hilbert_polynomial_and_index(MonomialIdeal(X, [(1,)]))
    assert h.format_hp() == "1" and h.regularity_index == 0
    h = hilbert_polynomial_and_index(MonomialIdeal(XYZ, [(2, 0, 0), (0, 2, 0), (0, 0, 2)]))
    assert h.format_hp() == "8" and h.regularity_index == 3


def test_standard_monomials():
    assert standard_monomials_up_to(I2((2, 0), (1, 1)), 2) == [(0, 0), (0, 1), (1, 0), (0, 2)]
    assert standard_monomials_up_to(I2((0, 0)), 5) == []
    assert standard_monomials_up_to(MonomialIdeal(X, []), 2) == [(0,), (1,), (2,)]


def test_profile_generator_limit():
    gens = [(i, 30 - i) for i in range(25)]
    with pytest.raises(ValueError):
        hilbert_function(I2(*gens), 3)


def test_index_is_not_monotone_under_inclusion():
    # <x^5> sits inside <x, y^5> yet has the smaller index of regularity
    small, big = I2((5, 0)), I2((1, 0), (0, 5))
    assert subset(small, big)
    assert regularity_index(small) == 3
    assert regularity_index(big) == 4
    assert regularity_index(MonomialIdeal(X, [])) == 0
    assert regularity_index(MonomialIdeal(X, [(3,)])) == 2


gen_lists = st.integers(1, 3).flatmap(
    lambda t: st.tuples(
        st.just(t),
        st.lists(st.lists(st.integers(0, 3), min_size=t, max_size=t).map(tuple), max_size=5),
    )
)


@settings(max_examples=80, deadline=None)
@given(gen_lists)
def test_hilbert_function_matches_enumeration(tg):
    t, gens = tg
    sig = RingSignature(tuple("xyz"[:t]))
    I = MonomialIdeal(sig, gens)
    for s in range(8):
        assert hilbert_function(I, s) == hilbert_count(gens, t, s)


@settings(max_examples=80, deadline=None)
@given(gen_lists)
def test_polynomial_agrees_past_index(tg):
    t, gens = tg
    sig = RingSignature(tuple("xyz"[:t]))
    I = MonomialIdeal(sig, gens)
    h = hilbert_polynomial_and_index(I)
    for s in range(h.regularity_index, h.regularity_index + 6):
        assert h.hp(s) == hilbert_count(gens, t, s)
    if h.regularity_index > 0:
        s = h.regularity_index - 1
        assert h.hp(s) != hilbert_count(gens, t, s)


@settings(max_examples=80, deadline=None)
@given(gen_lists, st.data())
def test_strict_inclusion_is_visible(tg, data):
    t, gens = tg
    sig = RingSignature(tuple("xyz"[:t]))
    I = MonomialIdeal(sig, gens)
    extra = data.draw(st.lists(st.integers(0, 3), min_size=t, max_size=t).map(tuple))
    J = MonomialIdeal(sig, list(gens) + [extra])
    if I == J:
        return
    top = J.max_generator_degree() + t + 1
    assert any(hilbert_function(I, s) != hilbert_function(J, s) for s in range(top + 1))
    assert all(hilbert_function(I, s) >= hilbert_function(J, s) for s in range(top + 1))
