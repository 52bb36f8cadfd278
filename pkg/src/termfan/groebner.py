"""Left Groebner bases in commutative and solvable-type algebras."""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Sequence

from . import algebra as alg
from .algebra import AlgebraPresentation, NotSolvableError, check_solvable_type, left_mul_monomial
from .ideals import MonomialIdeal, contains_monomial, standard_monomials_up_to
from .kernels import first_divisor, mono_divides, mono_lcm, mono_quotient
from .orderings import OrderingSpec, Tri, classify, grevlex
from .poly import Polynomial, leading_term, monomials_up_to

PAIR_BUDGET = 200_000


class GroebnerError(RuntimeError):
    pass


@dataclass(frozen=True)
class IdealSpec:
    """Left ideal of ``algebra`` generated by ``generators``.

    Zero generators are dropped, so an empty generator list is the zero ideal.
    """

    algebra: AlgebraPresentation
    generators: tuple
    side: str = "left"

    def __post_init__(self):
        if self.side != "left":
            raise ValueError("only left ideals are supported")
        gens = []
        for g in self.generators:
            if g.sig != self.algebra.sig:
                raise ValueError("generator over a different signature")
            if g and g not in gens:
                gens.append(g)
        object.__setattr__(self, "generators", tuple(gens))

    @property
    def sig(self):
        return self.algebra.sig


@dataclass(frozen=True)
class GroebnerBasis:
    elements: tuple
    ordering: OrderingSpec
    algebra: AlgebraPresentation
    reduced: bool = False

    def leading_monomials(self) -> list:
        return [leading_term(g, self.ordering)[0] for g in self.elements]

    def leading_ideal(self) -> MonomialIdeal:
        return MonomialIdeal(self.algebra.sig, self.leading_monomials())

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def lines(self) -> list:
        return [str(g) for g in self.elements]


def _require_admissible(ord: OrderingSpec):
    depth = getattr(ord, "depth", 0)
    if classify(ord, window=max(2, depth + 1)).admissible is not Tri.YES:
        raise ValueError("ordering is not admissible; division needs a well-ordering")


def _require_solvable(A: AlgebraPresentation, ord: OrderingSpec):
    _require_admissible(ord)
    chk = check_solvable_type(A, ord)
    if not chk:
        i, j = chk.witness
        names = A.sig.var_names
        raise ValueError(f"algebra is not of solvable type for this ordering (pair {names[i]}, {names[j]})")


def monic(p: Polynomial, ord: OrderingSpec) -> Polynomial:
    _, c = leading_term(p, ord)
    return p if c == 1 else p.scale(1 / c)


@dataclass
class Division:
    quotients: list
    remainder: Polynomial

    def __iter__(self):
        return iter((self.quotients, self.remainder))


def _divide(a: Polynomial, F: Sequence[Polynomial], lms: list, ord, A) -> Division:
    """Division with precomputed leading monomials ``lms`` of ``F``."""
    sig = a.sig
    key = ord.key
    p = dict(a.terms)
    heap = [(_neg(key(m)), m) for m in p]
    heapq.heapify(heap)
    quot = [dict() for _ in F]
    rem: dict = {}
    commutative = A.is_commutative
    while heap:
        _, m = heapq.heappop(heap)
        c = p.pop(m, None)
        if c is None:
            continue
        k = first_divisor(m, lms)
        if k < 0:
            rem[m] = c
            continue
        u = mono_quotient(m, lms[k])
        f = F[k]
        if commutative:
            lc = f.terms[lms[k]]
            uf = f.shift(u)
        else:
            uf = left_mul_monomial(A, u, f)
            lm_uf, lc = leading_term(uf, ord)
            if lm_uf != m:
                raise NotSolvableError("leading monomials are not multiplicative for this ordering")
        coef = c / lc
        alg._acc(quot[k], u, coef)
        for n, v in uf.terms.items():
            if n == m:
                continue
            old = p.get(n)
            if old is None:
                p[n] = -coef * v
                heapq.heappush(heap, (_neg(key(n)), n))
            else:
                new = old - coef * v
                if new:
                    p[n] = new
                else:
                    del p[n]
    return Division([Polynomial._raw(sig, q) for q in quot], Polynomial._raw(sig, rem))


class _neg:
    """Reverses the order of a sort key so heapq pops the largest first."""

    __slots__ = ("k",)

    def __init__(self, k):
        self.k = k

    def __lt__(self, other):
        return self.k > other.k

    def __eq__(self, other):
        return self.k == other.k


def divide(a: Polynomial, F: Sequence[Polynomial], ord: OrderingSpec, A: AlgebraPresentation) -> Division:
    """Left division ``a = sum(q_f * f) + r``.

    At each step the lowest-index divisor whose leading monomial divides the
    current leading monomial is used; otherwise that term moves to ``r``.
    """
    _require_solvable(A, ord)
    if any(not f for f in F):
        raise ValueError("zero divisor in division")
    lms = [leading_term(f, ord)[0] for f in F]
    return _divide(a, list(F), lms, ord, A)


def _spoly(A, f, g, lmf, lmg, ord) -> Polynomial:
    lcm = mono_lcm(lmf, lmg)
    uf = left_mul_monomial(A, mono_quotient(lcm, lmf), f)
    vg = left_mul_monomial(A, mono_quotient(lcm, lmg), g)
    cf = uf.terms[lcm] if A.is_commutative else leading_term(uf, ord)[1]
    cg = vg.terms[lcm] if A.is_commutative else leading_term(vg, ord)[1]
    return uf.scale(1 / cf) - vg.scale(1 / cg)


def s_polynomial(A: AlgebraPresentation, f: Polynomial, g: Polynomial, ord: OrderingSpec) -> Polynomial:
    return _spoly(A, f, g, leading_term(f, ord)[0], leading_term(g, ord)[0], ord)


def buchberger(L: IdealSpec, ord: OrderingSpec, pair_budget: int = PAIR_BUDGET) -> GroebnerBasis:
    """Complete the generators of ``L`` to a left Groebner basis.

    Pairs are processed by increasing lcm degree, then index.  The coprime
    criterion is used only for commutative algebras.
    """
    A = L.algebra
    _require_solvable(A, ord)
    G: list = []
    lms: list = []
    pairs: list = []
    commutative = A.is_commutative

    def add(h):
        h = monic(h, ord)
        lm = leading_term(h, ord)[0]
        n = len(G)
        for i, lmi in enumerate(lms):
            lcm = mono_lcm(lmi, lm)
            if commutative and sum(lcm) == sum(lmi) + sum(lm):
                continue
            heapq.heappush(pairs, (sum(lcm), i, n))
        G.append(h)
        lms.append(lm)

    for g in L.generators:
        r = _divide(g, G, lms, ord, A).remainder if G else g
        if r:
            add(r)
    processed = 0
    while pairs:
        _, i, j = heapq.heappop(pairs)
        processed += 1
        if processed > pair_budget:
            raise GroebnerError(f"pair budget {pair_budget} exceeded with {len(G)} basis elements")
        s = _spoly(A, G[i], G[j], lms[i], lms[j], ord)
        if not s:
            continue
        r = _divide(s, G, lms, ord, A).remainder
        if r:
            add(r)
    return GroebnerBasis(tuple(G), ord, A, reduced=False)


def reduce_gb(G: GroebnerBasis) -> GroebnerBasis:
    """Reduced Groebner basis: drop redundant elements, tail-reduce, make monic."""
    ord, A = G.ordering, G.algebra
    elems = [monic(g, ord) for g in G.elements if g]
    while True:
        lms = [leading_term(g, ord)[0] for g in elems]
        # rule (a): drop g whose leading monomial lies in the others' ideal
        drop = next(
            (k for k, lm in enumerate(lms) if any(mono_divides(lms[i], lm) for i in range(len(lms)) if i != k)),
            None,
        )
        if drop is not None:
            del elems[drop]
            continue
        # rule (b): replace g by its remainder modulo the others
        changed = False
        for k, g in enumerate(elems):
            others = elems[:k] + elems[k + 1:]
            olms = lms[:k] + lms[k + 1:]
            if any(first_divisor(n, olms) >= 0 for n in g.terms):
                r = _divide(g, others, olms, ord, A).remainder
                elems[k] = monic(r, ord)
                changed = True
                break
        if not changed:
            break
    elems.sort(key=lambda g: ord.key(leading_term(g, ord)[0]), reverse=True)
    return GroebnerBasis(tuple(elems), ord, A, reduced=True)


def is_reduced(G: GroebnerBasis) -> bool:
    ord = G.ordering
    lms = [leading_term(g, ord)[0] for g in G.elements]
    for k, g in enumerate(G.elements):
        if leading_term(g, ord)[1] != 1:
            return False
        others = lms[:k] + lms[k + 1:]
        if any(first_divisor(n, others) >= 0 for n in g.terms):
            return False
    return True


def s_remainders(G: GroebnerBasis, ord: OrderingSpec | None = None) -> list:
    """Remainders of all S-polynomials of ``G`` (under ``ord`` if given)."""
    ord = ord or G.ordering
    A = G.algebra
    elems = list(G.elements)
    lms = [leading_term(g, ord)[0] for g in elems]
    out = []
    for i in range(len(elems)):
        for j in range(i + 1, len(elems)):
            s = _spoly(A, elems[i], elems[j], lms[i], lms[j], ord)
            out.append(_divide(s, elems, lms, ord, A).remainder)
    return out


def reduced_basis(L: IdealSpec, ord: OrderingSpec) -> GroebnerBasis:
    return reduce_gb(buchberger(L, ord))


def leading_ideal(L: IdealSpec, ord: OrderingSpec) -> MonomialIdeal:
    return reduced_basis(L, ord).leading_ideal()


def contains(G: GroebnerBasis, p: Polynomial) -> bool:
    """Ideal membership through a Groebner basis."""
    if not p:
        return True
    lms = G.leading_monomials()
    return not _divide(p, list(G.elements), lms, G.ordering, G.algebra).remainder


# -- degree truncations ---------------------------------------------------------


def _truncated_span(L: IdealSpec, s: int, dco: OrderingSpec | None = None) -> list:
    """Spanning set of ``L_{<=s}``.

    Products ``u * g`` with ``deg(u) + deg(g) <= s`` over a Groebner basis
    for a degree-compatible ordering span the truncation, because standard
    representations never raise the degree.
    """
    A = L.algebra
    t = A.sig.t
    dco = dco or grevlex(t)
    G = reduced_basis(L, dco)
    rows = []
    for g in G.elements:
        dg = g.total_degree()
        for u in monomials_up_to(t, s - dg) if dg <= s else []:
            rows.append(left_mul_monomial(A, u, g))
    return rows


def _echelon_pivots(rows: list, ord: OrderingSpec) -> dict:
    """Leading monomials of the span of ``rows`` under ``ord``."""
    key = ord.key
    pivots: dict = {}
    for row in rows:
        p = dict(row.terms)
        while p:
            m = max(p, key=key)
            piv = pivots.get(m)
            if piv is None:
                c = p[m]
                pivots[m] = {n: v / c for n, v in p.items()}
                break
            c = p[m]
            for n, v in piv.items():
                w = p.get(n, 0) - c * v
                if w:
                    p[n] = w
                else:
                    p.pop(n, None)
    return pivots


def truncated_rank(L: IdealSpec, s: int) -> int:
    """Dimension of ``L_{<=s}``."""
    return len(_echelon_pivots(_truncated_span(L, s), grevlex(L.sig.t)))


def slice_leading_monomials(L: IdealSpec, ord: OrderingSpec, s: int) -> set:
    """``{LM(f) : f in L, deg(f) <= s, f != 0}`` for a degree ordering."""
    if not L.algebra.is_commutative:
        raise ValueError("slice triangularization is only available for commutative algebras")
    depth = getattr(ord, "depth", 0)
    if not classify(ord, window=max(2, depth + 1)).degree:
        raise ValueError("slice triangularization needs a degree ordering")
    if s < 0:
        raise ValueError("s must be non-negative")
    return set(_echelon_pivots(_truncated_span(L, s), ord))


# -- Macaulay basis check -------------------------------------------------------


@dataclass
class MacaulayReport:
    passed: bool
    standard: list
    leading: MonomialIdeal
    failures: list = field(default_factory=list)
    dimension_checked: bool = False

    def lines(self, sig) -> list:
        from .poly import format_monomial

        out = [f"leading ideal: {self.leading}"]
        out.append("standard monomials: " + ", ".join(format_monomial(m, sig) for m in self.standard))
        out.append(f"dimension count checked: {'yes' if self.dimension_checked else 'no'}")
        out.extend(f"failure: {f}" for f in self.failures)
        out.append("PASS" if self.passed else "FAIL")
        return out


def macaulay_check(L: IdealSpec, ord: OrderingSpec, cap: int) -> MacaulayReport:
    """Check that standard monomials are a basis of the quotient through degree ``cap``."""
    A = L.algebra
    if A.kind not in ("commutative", "weyl"):
        raise ValueError("macaulay_check supports commutative and Weyl algebras")
    G = reduced_basis(L, ord)
    I = G.leading_ideal()
    t = A.sig.t
    B = standard_monomials_up_to(I, cap)
    Bset = set(B)
    failures = []
    elems, lms = list(G.elements), G.leading_monomials()
    for m in monomials_up_to(t, cap):
        mono = Polynomial.monomial(A.sig, m)
        r = _divide(mono, elems, lms, ord, A).remainder if elems else mono
        bad = [n for n in r.terms if contains_monomial(I, n)]
        if bad:
            failures.append(f"remainder of {m} has non-standard monomials {bad}")
        if m in Bset and r != mono:
            failures.append(f"standard monomial {m} does not reduce to itself")
    checked = False
    depth = getattr(ord, "depth", 0)
    cls = classify(ord, window=max(2, depth + 1))
    if cls.degree and cls.compatible is Tri.YES:
        checked = True
        for s in range(cap + 1):
            rank = len(_echelon_pivots(_truncated_span(L, s, ord), ord))
            nb = sum(1 for m in B if sum(m) <= s)
            if nb != comb(s + t, t) - rank:
                failures.append(f"degree {s}: |B|={nb} but C(s+t,t)-rank={comb(s + t, t) - rank}")
    return MacaulayReport(not failures, B, I, failures, checked)
