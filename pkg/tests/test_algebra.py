import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from termfan.algebra import (
    NotSolvableError,
    check_multiplicative,
    check_solvable_type,
    commutative,
    normal_form_product,
    solvable,
    weyl,
)
from termfan.orderings import grlex, lex
from termfan.parsing import parse_ordering, parse_polynomial
from termfan.poly import Polynomial, RingSignature

from oracles import apply_weyl, compose_on

XD = RingSignature(("x", "d"))
A1 = weyl(XD, [("x", "d")])
X2D2 = RingSignature(("x", "y", "dx", "dy"))
A2 = weyl(X2D2, [("x", "dx"), ("y", "dy")])


def P(text, sig=XD):
    return parse_polynomial(text, sig, noncommutative=True)


def test_weyl_examples():
    assert normal_form_product(A1, P("d"), P("x")) == P("x*d + 1")
    assert normal_form_product(A1, P("x"), P("d")) == P("x*d")
    assert normal_form_product(A1, P("d^2"), P("x")) == P("x*d^2 + 2*d")


def test_reversed_pair_order():
    # derivation listed before its variable
    S = RingSignature(("d", "x"))
    A = weyl(S, [("x", "d")])
    assert normal_form_product(A, P("d", S), P("x", S)) == P("d*x", S)
    assert normal_form_product(A, P("x", S), P("d", S)) == P("d*x - 1", S)


small_weyl = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 3)), st.integers(-3, 3).map(Fraction), min_size=1, max_size=4
).map(lambda d: Polynomial(XD, d))


@settings(max_examples=60, deadline=None)
@given(small_weyl, small_weyl)
def test_weyl_product_acts_as_composition(a, b):
    ab = normal_form_product(A1, a, b)
    for n in range(8):
        f = {n: Fraction(1)}
        assert apply_weyl(ab.terms, f) == compose_on(a.terms, b.terms, f)


def quantum_plane():
    S = RingSignature(("x", "y"))
    return solvable(S, {(0, 1): (Fraction(3, 2), Polynomial.zero(S))})


def enveloping():
    # two-dimensional non-abelian Lie algebra: y*x = x*y + y
    S = RingSignature(("x", "y"))
    return solvable(S, {(0, 1): (1, parse_polynomial("y", S))})


def sl2():
    S = RingSignature(("e", "f", "h"))
    return solvable(
        S,
        {
            (0, 1): (1, parse_polynomial("-h", S)),
            (0, 2): (1, parse_polynomial("2*e", S)),
            (1, 2): (1, parse_polynomial("-2*f", S)),
        },
    )


ALGEBRAS = {"weyl2": A2, "quantum": quantum_plane(), "lie2": enveloping(), "sl2": sl2()}


@pytest.mark.parametrize("name", sorted(ALGEBRAS))
def test_associativity(name):
    A = ALGEBRAS[name]
    rng = random.Random(name)
    t = A.sig.t

    def rand():
        terms = {tuple(rng.randint(0, 2) for _ in range(t)): Fraction(rng.randint(-3, 3)) for _ in range(3)}
        return Polynomial(A.sig, terms) or Polynomial.constant(A.sig, 1)

    for _ in range(15):
        a, b, c = rand(), rand(), rand()
        left = normal_form_product(A, normal_form_product(A, a, b), c)
        right = normal_form_product(A, a, normal_form_product(A, b, c))
        assert left == right


def test_solvable_type_checks():
    S = RingSignature(("x", "y"))
    assert check_solvable_type(commutative(S), lex(2))
    assert check_solvable_type(A1, grlex(2))
    bad = solvable(S, {(0, 1): (1, parse_polynomial("x^2*y", S))})
    res = check_solvable_type(bad, grlex(2))
    assert not res and res.witness == (0, 1)
    with pytest.raises(ValueError):
        check_solvable_type(A1, parse_ordering("table D=2 deg1=(x,d) deg2=(x*d,x^2,d^2)", XD))


def test_multiplicativity_counterexample():
    S = RingSignature(("y", "z"))
    ord = parse_ordering("table D=2 deg1=(y,z) deg2=(y^2,z^2,y*z)", S)
    yz = parse_polynomial("y + z", S)
    res = check_multiplicative(commutative(S), ord, [(yz, yz)])
    assert not res
    _, _, got, expected = res.witness
    assert got == (1, 1) and expected == (0, 2)


def test_multiplicativity_holds_for_weyl_grlex():
    rng = random.Random(3)

    def rand():
        terms = {}
        while not terms:
            for _ in range(3):
                m = (rng.randint(0, 3), rng.randint(0, 3))
                if sum(m) <= 3 and rng.random() < 0.8:
                    terms[m] = Fraction(rng.randint(1, 5))
        return Polynomial(XD, terms)

    assert check_multiplicative(A1, grlex(2), [(rand(), rand()) for _ in range(100)])


def test_multiplicativity_rejects_zero():
    with pytest.raises(ValueError):
        check_multiplicative(A1, grlex(2), [(P("x"), Polynomial.zero(XD))])


def test_runaway_relation_hits_budget():
    S = RingSignature(("x", "y"))
    A = solvable(S, {(0, 1): (1, parse_polynomial("x^2*y^2", S))})
    with pytest.raises(NotSolvableError, match="not solvable-type"):
        A.mono_product((0, 1), (2, 0))
