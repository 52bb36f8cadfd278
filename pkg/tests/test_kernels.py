import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from termfan import _pykernels as py
from termfan import kernels

from oracles import hilbert_count

try:
    from termfan import _ckernels as cy
except ImportError:  # extension not built
    cy = None

needs_ext = pytest.mark.skipif(cy is None, reason="compiled kernels not built")

mono = st.lists(st.integers(0, 6), min_size=3, max_size=3).map(tuple)


def test_backend_is_reported():
    assert kernels.BACKEND in ("cython", "python")


@needs_ext
@given(mono, mono)
def test_binary_ops_agree(a, b):
    assert cy.mono_mul(a, b) == py.mono_mul(a, b)
    assert cy.mono_lcm(a, b) == py.mono_lcm(a, b)
    assert cy.mono_divides(a, b) == py.mono_divides(a, b)
    if py.mono_divides(a, b):
        assert cy.mono_quotient(b, a) == py.mono_quotient(b, a)


@needs_ext
@given(st.lists(mono, max_size=6), mono)
def test_first_divisor_agrees(lms, m):
    assert cy.first_divisor(m, lms) == py.first_divisor(m, lms)


@needs_ext
@given(st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3).map(tuple), min_size=1, max_size=3), mono)
def test_matrix_key_agrees(rows, m):
    assert tuple(cy.matrix_key(tuple(rows), m)) == tuple(py.matrix_key(tuple(rows), m))


@needs_ext
@settings(max_examples=60)
@given(st.lists(mono, min_size=0, max_size=7))
def test_profile_agrees(gens):
    assert cy.lcm_degree_profile(gens) == py.lcm_degree_profile(gens)


def test_first_divisor_picks_lowest_index():
    assert py.first_divisor((2, 2), [(3, 0), (1, 1), (0, 1)]) == 1
    assert py.first_divisor((0, 0), [(1, 0)]) == -1


@pytest.mark.parametrize("impl", [py] + ([cy] if cy else []), ids=lambda m: m.__name__)
def test_profile_matches_counting(impl):
    from math import comb

    rng = random.Random(7)
    for _ in range(40):
        t = rng.randint(1, 3)
        gens = [tuple(rng.randint(0, 3) for _ in range(t)) for _ in range(rng.randint(1, 5))]
        prof = impl.lcm_degree_profile(gens)
        for s in range(7):
            got = sum(c * comb(s - a + t, t) for a, c in prof.items() if a <= s)
            assert got == hilbert_count(gens, t, s)
