"""Leading ideals across families of orderings and universal Groebner bases."""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .groebner import GroebnerBasis, IdealSpec, _echelon_pivots, _truncated_span, contains, reduced_basis
from .ideals import MonomialIdeal, subset
from .orderings import (
    GradedTableOrdering,
    OrderingSpec,
    grlex,
    orderings_for_weight,
    random_admissible_ordering,
    weight_vectors,
)
from .poly import Polynomial, grevlex_key, leading_term, monomials_of_degree

DEGREE_SWEEP_BUDGET = 10**6


@dataclass
class FanEntry:
    ordering: OrderingSpec
    ideal: MonomialIdeal
    basis: GroebnerBasis | None = None


@dataclass
class FanResult:
    entries: list
    config: dict = field(default_factory=dict)
    exhausted: bool = False

    def ideals(self) -> list:
        return [e.ideal for e in self.entries]

    def ideal_set(self) -> frozenset:
        return frozenset(self.ideals())

    def __len__(self):
        return len(self.entries)

    def report(self, sig) -> str:
        lines = []
        for e in sorted(self.entries, key=lambda e: str(e.ideal)):
            line = f"ideal={e.ideal} witness={e.ordering.describe(sig)}"
            if e.basis is not None:
                line += " gb={" + ", ".join(str(g) for g in e.basis.elements) + "}"
            lines.append(line)
        cfg = " ".join(f"{k}={v}" for k, v in self.config.items())
        if cfg:
            lines.append(f"config {cfg}")
        lines.append(f"exhausted={'true' if self.exhausted else 'false'}")
        return "\n".join(lines)


def _known_cone(entries: list, ord: OrderingSpec):
    # a reduced basis whose leading monomials are unchanged under ``ord`` is a
    # Groebner basis for ``ord`` too, since leading ideals of admissible
    # orderings are never strictly nested
    for e in entries:
        G = e.basis
        if all(leading_term(g, ord)[0] == m for g, m in zip(G.elements, G.leading_monomials())):
            return e
    return None


def enumerate_leading_ideals_admissible(
    L: IdealSpec,
    weight_bound: int,
    stability_rounds: int = 0,
    seed: int = 0,
) -> FanResult:
    """Sweep matrix orderings with weight rows in ``0..W`` and collect leading ideals.

    Weight levels are visited in increasing order; ``exhausted`` is set when
    the last level (and the random extra rounds) found nothing new.
    """
    if weight_bound < 1:
        raise ValueError("weight bound must be at least 1")
    t = L.sig.t
    entries: list = []

    def visit(ord) -> bool:
        if entries and _known_cone(entries, ord) is not None:
            return False
        G = reduced_basis(L, ord)
        I = G.leading_ideal()
        if any(e.ideal == I for e in entries):
            return False
        entries.append(FanEntry(ord, I, G))
        return True

    new_at_level = 0
    for level in range(1, weight_bound + 1):
        new_at_level = 0
        for w in weight_vectors(t, level, exact_max=True):
            for ord in orderings_for_weight(w):
                new_at_level += visit(ord)
    new_random = 0
    rng = random.Random(seed)
    for _ in range(stability_rounds):
        new_random += visit(random_admissible_ordering(t, rng, bound=4 * weight_bound))
    exhausted = weight_bound >= 2 and new_at_level == 0 and new_random == 0
    config = {"weight_bound": weight_bound, "stability_rounds": stability_rounds, "seed": seed}
    return FanResult(entries, config, exhausted)


def minimal_leading_ideals(F: FanResult) -> FanResult:
    keep = []
    for e in F.entries:
        if not any(o.ideal != e.ideal and subset(o.ideal, e.ideal) for o in F.entries):
            keep.append(e)
    return FanResult(keep, dict(F.config), F.exhausted)


def degree_table_count(t: int, depth: int) -> int:
    n = 1
    for d in range(depth + 1):
        n *= math.factorial(len(monomials_of_degree(t, d)))
    return n


def graded_tables(t: int, depth: int, fallback=None) -> Iterable[GradedTableOrdering]:
    fallback = fallback or grlex(t)
    per_degree = [list(itertools.permutations(monomials_of_degree(t, d))) for d in range(depth + 1)]
    for slices in itertools.product(*per_degree):
        yield GradedTableOrdering(depth, slices, fallback)


def enumerate_leading_ideals_degree(L: IdealSpec, depth: int) -> FanResult:
    """All leading ideals, truncated at ``depth``, over every graded table of that depth."""
    if not L.algebra.is_commutative:
        raise ValueError("degree-ordering enumeration needs a commutative algebra")
    t = L.sig.t
    total = degree_table_count(t, depth)
    if total > DEGREE_SWEEP_BUDGET:
        raise ValueError(f"{total} graded tables exceed the budget {DEGREE_SWEEP_BUDGET}; try a smaller depth")
    rows = _truncated_span(L, depth)
    seen: dict = {}
    for table in graded_tables(t, depth):
        I = MonomialIdeal(L.sig, _echelon_pivots(rows, table))
        if I not in seen:
            seen[I] = FanEntry(table, I, None)
    config = {"depth": depth, "tables": total}
    return FanResult(list(seen.values()), config, exhausted=True)


def universal_gb(L: IdealSpec, F: FanResult) -> list:
    """Union of the reduced Groebner bases stored in ``F``, up to scalars.

    Elements are scaled so the canonically largest term has coefficient 1.
    """
    out: list = []
    for e in F.entries:
        if e.basis is None:
            raise ValueError("fan entries carry no Groebner bases")
        for g in e.basis.elements:
            # bases for different cones are monic in different terms
            g = g.scale(1 / g.sorted_terms()[0][1])
            if g not in out:
                out.append(g)
    out.sort(key=lambda g: [grevlex_key(m) for m, _ in g.sorted_terms()], reverse=True)
    return out


@dataclass
class UniversalReport:
    checked: int
    failures: list = field(default_factory=list)  # (ordering, expected ideal, got ideal)
    non_members: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures and not self.non_members

    def lines(self, sig) -> list:
        out = [f"orderings checked: {self.checked}"]
        for p in self.non_members:
            out.append(f"not in ideal: {p}")
        for ord, want, got in self.failures[:5]:
            out.append(f"failure: witness={ord.describe(sig)} leading ideal={want} but <LM(U)>={got}")
        if len(self.failures) > 5:
            out.append(f"... {len(self.failures) - 5} more failing orderings")
        out.append("PASS" if self.passed else "FAIL")
        return out


def verify_universal(U: Sequence[Polynomial], L: IdealSpec, orderings: Iterable[OrderingSpec]) -> UniversalReport:
    """Check that ``U`` lies in ``L`` and is a Groebner basis for every ordering given."""
    orderings = list(orderings)
    ref = reduced_basis(L, orderings[0] if orderings else grlex(L.sig.t))
    non_members = [u for u in U if not contains(ref, u)]
    failures = []
    for ord in orderings:
        want = reduced_basis(L, ord).leading_ideal()
        got = MonomialIdeal(L.sig, [leading_term(u, ord)[0] for u in U if u])
        if got != want:
            failures.append((ord, want, got))
    return UniversalReport(len(orderings), failures, non_members)


def degree_bound_quadric(d: int, t: int) -> int:
    """Ceiling of ``2 * ((d**2 + 2*d) / 2) ** (2 ** (t - 1))``."""
    if d < 1 or t < 1:
        raise ValueError("d and t must be positive")
    value = 2 * Fraction(d * d + 2 * d, 2) ** (2 ** (t - 1))
    return math.ceil(value)
