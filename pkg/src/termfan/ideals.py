"""Monomial ideals, their Hilbert functions and Hilbert polynomials.

``HF_I(s)`` counts the monomials of degree at most ``s`` outside ``I``
(affine Hilbert function).  It is evaluated by inclusion-exclusion over the
minimal generators: a subset with lcm of degree ``a`` contributes
``(-1)**|subset| * C(s - a + t, t)`` when ``a <= s``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable

from .kernels import lcm_degree_profile, mono_divides
from .poly import RingSignature, format_monomial, grevlex_key, monomials_up_to

MAX_HILBERT_GENERATORS = 20


class MonomialIdeal:
    """Monomial ideal stored by its minimal generators."""

    __slots__ = ("sig", "generators", "_profile")

    def __init__(self, sig: RingSignature, generators: Iterable = ()):
        self.sig = sig
        gens = {tuple(g) for g in generators}
        for g in gens:
            if len(g) != sig.t or any(e < 0 for e in g):
                raise ValueError(f"bad exponent vector {g}")
        # keep g unless some other generator divides it
        ordered = sorted(gens, key=lambda m: (sum(m), grevlex_key(m)))
        minimal: list = []
        for g in ordered:
            if not any(mono_divides(h, g) for h in minimal):
                minimal.append(g)
        self.generators = frozenset(minimal)
        self._profile = None

    def __repr__(self):
        return f"MonomialIdeal({self})"

    def __str__(self):
        gens = self.sorted_generators()
        return "<" + ", ".join(format_monomial(g, self.sig) for g in gens) + ">"

    def sorted_generators(self) -> list:
        return sorted(self.generators, key=grevlex_key, reverse=True)

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.sig == other.sig and self.generators == other.generators

    def __hash__(self):
        return hash((self.sig, self.generators))

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        return self.sig.one() in self.generators

    def max_generator_degree(self) -> int:
        return max((sum(g) for g in self.generators), default=0)

    def __contains__(self, m) -> bool:
        return contains_monomial(self, m)

    def profile(self) -> dict:
        """Signed lcm-degree counts used by the inclusion-exclusion formula."""
        if self._profile is None:
            if len(self.generators) > MAX_HILBERT_GENERATORS:
                raise ValueError(
                    f"inclusion-exclusion limited to {MAX_HILBERT_GENERATORS} generators, "
                    f"got {len(self.generators)}"
                )
            self._profile = lcm_degree_profile(sorted(self.generators))
        return self._profile


def from_generators(sig: RingSignature, ms: Iterable) -> MonomialIdeal:
    return MonomialIdeal(sig, ms)


def contains_monomial(I: MonomialIdeal, m) -> bool:
    m = tuple(m)
    return any(mono_divides(g, m) for g in I.generators)


def subset(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    if I.sig != J.sig:
        raise ValueError("signature mismatch")
    return all(contains_monomial(J, g) for g in I.generators)


def equals(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    return subset(I, J) and subset(J, I)


def hilbert_function(I: MonomialIdeal, s: int) -> int:
    if s < 0:
        raise ValueError("s must be non-negative")
    t = I.sig.t
    return sum(c * comb(s - a + t, t) for a, c in I.profile().items() if a <= s)


def standard_monomials_up_to(I: MonomialIdeal, s: int) -> list:
    if s < 0:
        raise ValueError("s must be non-negative")
    ms = [m for m in monomials_up_to(I.sig.t, s) if not contains_monomial(I, m)]
    return sorted(ms, key=grevlex_key)


def _interpolate(xs, ys) -> list:
    """Coefficients (constant term first) of the interpolating polynomial."""
    n = len(xs)
    coeffs = [Fraction(0)] * n
    for i in range(n):
        # Lagrange basis polynomial for node i, expanded
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j in range(n):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xs[j] * basis[k + 1]
            denom *= xs[i] - xs[j]
        for k in range(n):
            coeffs[k] += ys[i] * basis[k] / denom
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def eval_poly(coeffs, s) -> Fraction:
    out = Fraction(0)
    for c in reversed(coeffs):
        out = out * s + c
    return out


@dataclass(frozen=True)
class HilbertData:
    hf_values: tuple  # HF(0), ..., HF(s_max)
    hp_coeffs: tuple  # constant term first
    regularity_index: int

    def hp(self, s) -> Fraction:
        return eval_poly(self.hp_coeffs, s)

    def format_hp(self, var: str = "s") -> str:
        terms = []
        for k in range(len(self.hp_coeffs) - 1, -1, -1):
            c = self.hp_coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            if mono and abs(c) == 1:
                body = mono
            elif mono:
                body = f"{abs(c)}*{mono}"
            else:
                body = str(abs(c))
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def hilbert_polynomial_and_index(I: MonomialIdeal) -> HilbertData:
    """Hilbert polynomial and index of regularity of ``I``.

    A term ``C(s - a + t, t)`` agrees with its polynomial extension once
    ``s >= a - t``.  The lcm degrees ``a`` can exceed every generator degree
    (``<x^2, y^2, z^2>`` has ``a = 6``), so the interpolation nodes start at
    ``max(s*, a_max - t)`` with ``s*`` the largest generator degree.
    """
    t = I.sig.t
    a_max = max((a for a, c in I.profile().items() if c), default=0)
    s_star = max(I.max_generator_degree(), a_max - t)
    xs = list(range(s_star, s_star + t + 1))
    coeffs = _interpolate(xs, [hilbert_function(I, s) for s in xs])
    hf = tuple(hilbert_function(I, s) for s in range(s_star + t + 1))
    ind = 0
    for s in range(s_star, -1, -1):
        if hf[s] != eval_poly(coeffs, s):
            ind = s + 1
            break
    return HilbertData(hf, tuple(coeffs), ind)


def regularity_index(I: MonomialIdeal) -> int:
    return hilbert_polynomial_and_index(I).regularity_index
