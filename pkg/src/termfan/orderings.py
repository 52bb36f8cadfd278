"""Total orderings on monomials.

Two representations are supported:

* :class:`MatrixOrdering` compares ``Gamma @ u`` and ``Gamma @ v``
  lexicographically.  Every matrix ordering is compatible with
  multiplication.
* :class:`GradedTableOrdering` lists every degree slice up to a depth ``D``
  explicitly and falls back to a matrix ordering inside higher degrees.  These
  are always degree orderings but need not be compatible.

Both expose ``key(m)``; comparing keys is comparing monomials.
"""

from __future__ import annotations

import enum
import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

from .kernels import matrix_key, mono_mul
from .poly import RingSignature, format_monomial, monomials_of_degree, monomials_up_to

LT, EQ, GT = -1, 0, 1


def _rank(rows: Sequence[Sequence[int]]) -> int:
    mat = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    ncols = len(mat[0]) if mat else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(mat)) if mat[r][col]), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                f = mat[r][col] / mat[rank][col]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[rank])]
        rank += 1
    return rank


def _lex_positive(v) -> bool:
    for x in v:
        if x:
            return x > 0
    return False


@dataclass(frozen=True)
class MatrixOrdering:
    """Ordering by lexicographic comparison of integer weight rows.

    Rows dependent on earlier rows are dropped and the matrix is padded with
    unit rows (natural variable order) up to rank ``t``, so the ordering is
    always total.
    """

    rows: tuple
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self):
        rows = [tuple(int(x) for x in row) for row in self.rows]
        if not rows:
            raise ValueError("a matrix ordering needs at least one row")
        t = len(rows[0])
        if t == 0 or any(len(r) != t for r in rows):
            raise ValueError("matrix rows must all have the same positive length")
        # rows in the span of earlier rows never break a tie
        kept: list = []
        for r in rows + [tuple(1 if k == i else 0 for k in range(t)) for i in range(t)]:
            if len(kept) == t:
                break
            if _rank(kept + [r]) > len(kept):
                kept.append(r)
        object.__setattr__(self, "rows", tuple(kept))

    @property
    def t(self) -> int:
        return len(self.rows[0])

    def key(self, m):
        k = self._cache.get(m)
        if k is None:
            k = matrix_key(self.rows, m)
            self._cache[m] = k
        return k

    def columns(self):
        return list(zip(*self.rows))

    def describe(self, sig: RingSignature | None = None) -> str:
        body = ",".join("[" + ",".join(str(x) for x in row) + "]" for row in self.rows)
        return f"matrix [{body}]"

    def __str__(self):
        return self.describe()


@dataclass(frozen=True)
class GradedTableOrdering:
    """Degree ordering given slice by slice up to ``depth``.

    ``slices[d]`` lists every monomial of degree ``d`` in ascending order.
    Degrees above ``depth`` are ordered by ``fallback`` inside each degree.
    """

    depth: int
    slices: tuple
    fallback: MatrixOrdering
    _rank: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self):
        t = self.fallback.t
        slices = tuple(tuple(tuple(m) for m in s) for s in self.slices)
        if len(slices) != self.depth + 1:
            raise ValueError(f"expected {self.depth + 1} slices, got {len(slices)}")
        for d, s in enumerate(slices):
            expected = set(monomials_of_degree(t, d))
            if len(s) != len(expected) or set(s) != expected:
                raise ValueError(f"slice {d} is not a permutation of the degree-{d} monomials")
        object.__setattr__(self, "slices", slices)
        ranks = {}
        for s in slices:
            for i, m in enumerate(s):
                ranks[m] = i
        self._rank.update(ranks)

    @property
    def t(self) -> int:
        return self.fallback.t

    def key(self, m):
        d = sum(m)
        if d <= self.depth:
            return (d, self._rank[m])
        return (d, self.fallback.key(m))

    def describe(self, sig: RingSignature | None = None) -> str:
        sig = sig or RingSignature(tuple(f"x{i + 1}" for i in range(self.t)))
        parts = [f"table D={self.depth}"]
        for d in range(1, self.depth + 1):
            parts.append(f"deg{d}=(" + ",".join(format_monomial(m, sig) for m in self.slices[d]) + ")")
        parts.append(f"fallback={self.fallback.describe(sig)}")
        return " ".join(parts)

    def __str__(self):
        return self.describe()


OrderingSpec = MatrixOrdering | GradedTableOrdering


def compare(ord: OrderingSpec, m1, m2) -> int:
    """Return ``LT`` (-1), ``EQ`` (0) or ``GT`` (1)."""
    k1, k2 = ord.key(tuple(m1)), ord.key(tuple(m2))
    return (k1 > k2) - (k1 < k2)


def sort_monomials(ord: OrderingSpec, ms, descending=False) -> list:
    return sorted(ms, key=ord.key, reverse=descending)


# -- named orderings --------------------------------------------------------


def _var_order(t: int, order) -> list:
    """Variable indices from largest to smallest (default natural order)."""
    order = list(range(t)) if order is None else list(order)
    if sorted(order) != list(range(t)):
        raise ValueError(f"variable order {order} is not a permutation of range({t})")
    return order


def _unit(t, i, sign=1):
    return tuple(sign if k == i else 0 for k in range(t))


def lex(t: int, order=None) -> MatrixOrdering:
    """Pure lex with ``order[0] > order[1] > ...``."""
    return MatrixOrdering(tuple(_unit(t, i) for i in _var_order(t, order)))


def grlex(t: int, order=None) -> MatrixOrdering:
    return MatrixOrdering(((1,) * t,) + lex(t, order).rows)


def grevlex(t: int, order=None) -> MatrixOrdering:
    order = _var_order(t, order)
    rows = [(1,) * t] + [_unit(t, i, -1) for i in reversed(order[1:])]
    return MatrixOrdering(tuple(rows))


def weighted(weights, tie: str = "lex", order=None) -> MatrixOrdering:
    """Weight vector first, ties broken by ``lex``, ``grlex`` or ``grevlex``."""
    t = len(weights)
    ties = {"lex": lex, "grlex": grlex, "grevlex": grevlex}
    if tie not in ties:
        raise ValueError(f"unknown tie-break ordering {tie!r}")
    return MatrixOrdering((tuple(weights),) + ties[tie](t, order).rows)


def table_from(ord: OrderingSpec, depth: int, fallback: MatrixOrdering | None = None) -> GradedTableOrdering:
    """Graded table copying the degree slices of ``ord`` up to ``depth``."""
    if fallback is None:
        fallback = ord if isinstance(ord, MatrixOrdering) else ord.fallback
    t = ord.t
    slices = [sorted(monomials_of_degree(t, d), key=ord.key) for d in range(depth + 1)]
    return GradedTableOrdering(depth, tuple(tuple(s) for s in slices), fallback)


# -- classification ---------------------------------------------------------


class Tri(enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown-beyond-window"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class OrderingClassification:
    founded_at_one: bool
    compatible: Tri
    degree: bool
    admissible: Tri
    well: Tri
    witness: tuple | None = None  # (u, v, g): u < v but u*g > v*g

    def summary(self) -> str:
        lines = [
            f"founded_at_one={'yes' if self.founded_at_one else 'no'}",
            f"compatible={self.compatible}",
            f"degree={'yes' if self.degree else 'no'}",
            f"admissible={self.admissible}",
            f"well={self.well}",
        ]
        return "\n".join(lines)


def _is_degree_matrix(ord: MatrixOrdering) -> bool:
    first = ord.rows[0]
    return first[0] > 0 and all(x == first[0] for x in first)


def classify(ord: OrderingSpec, window: int = 4) -> OrderingClassification:
    """Place ``ord`` in the classes SO_1, CO, DO, AO and WO.

    Matrix orderings are classified exactly.  For graded tables
    compatibility is searched in the degree window; it is exact once
    ``window`` exceeds the table depth.
    """
    if window < 2:
        raise ValueError("window must be at least 2")
    if isinstance(ord, MatrixOrdering):
        founded = all(_lex_positive(col) for col in ord.columns())
        adm = Tri.YES if founded else Tri.NO
        return OrderingClassification(
            founded_at_one=founded,
            compatible=Tri.YES,
            degree=_is_degree_matrix(ord),
            admissible=adm,
            well=adm,
        )
    witness = _table_incompatibility(ord, window)
    if witness is not None:
        comp = Tri.NO
    elif window > ord.depth:
        comp = Tri.YES
    else:
        comp = Tri.UNKNOWN
    return OrderingClassification(
        founded_at_one=True,
        compatible=comp,
        degree=True,
        admissible=comp,
        well=Tri.YES,
        witness=witness,
    )


def _table_incompatibility(ord: GradedTableOrdering, window: int):
    """First (u, v, g) with u < v and u*g > v*g inside the window, or None.

    Shifting a slice by ``g`` is injective, so only adjacent pairs of each
    slice need checking.  Once a shift leaves the table, the image order is
    the fallback matrix order, which is independent of ``g``.
    """
    t, D = ord.t, ord.depth
    top = min(D, window)
    for d in range(1, top + 1):
        pairs = list(zip(ord.slices[d], ord.slices[d][1:]))
        for e in range(1, top - d + 1):
            for g in monomials_of_degree(t, e):
                for lo, hi in pairs:
                    if ord.key(mono_mul(lo, g)) > ord.key(mono_mul(hi, g)):
                        return (lo, hi, g)
        if window > D:
            g = (D + 1 - d,) + (0,) * (t - 1)
            for lo, hi in pairs:
                if ord.fallback.key(lo) > ord.fallback.key(hi):
                    return (lo, hi, g)
    return None


def is_admissible(ord: OrderingSpec) -> bool:
    return classify(ord, window=max(2, getattr(ord, "depth", 0) + 1)).admissible is Tri.YES


def is_degree(ord: OrderingSpec) -> bool:
    return classify(ord).degree


# -- metric -----------------------------------------------------------------


@dataclass(frozen=True)
class Distance:
    """Filtration distance; when ``exact`` is False the true value is < ``value``."""

    value: Fraction
    exact: bool = True
    depth: int | None = None  # largest i with agreement on S_i, if exact

    def __str__(self):
        if self.value == 0:
            return "0"
        exp = self.value.denominator.bit_length() - 1
        return f"2^-{exp}" if self.exact else f"< 2^-{exp}"


def agree_on(o1: OrderingSpec, o2: OrderingSpec, monomials) -> bool:
    ms = list(monomials)
    return sorted(ms, key=o1.key) == sorted(ms, key=o2.key)


def metric_distance(o1: OrderingSpec, o2: OrderingSpec, cap: int = 8) -> Distance:
    """Distance ``2**-r`` with ``r`` the deepest slice ``S_r`` of agreement.

    ``S_i`` is the set of monomials of degree below ``i``.  Agreement is
    checked through ``S_{cap+1}``; beyond that only the bound ``< 2**-cap`` is
    reported.  Zero is returned only for identical specifications.
    """
    if cap < 1:
        raise ValueError("cap must be at least 1")
    if o1.t != o2.t:
        raise ValueError("orderings live on different numbers of variables")
    if o1 == o2:
        return Distance(Fraction(0), True, None)
    t = o1.t
    for i in range(2, cap + 2):
        # S_i \ S_{i-1} is the degree i-1 slice
        if not agree_on(o1, o2, monomials_up_to(t, i - 1)):
            return Distance(Fraction(1, 2 ** (i - 1)), True, i - 1)
    return Distance(Fraction(1, 2**cap), False, None)


# -- nowhere density --------------------------------------------------------


def perturb_to_incompatible(ord: OrderingSpec, r: int) -> GradedTableOrdering:
    """Degree ordering within ``2**-(r+1)`` of ``ord`` that is not compatible.

    Slices up to degree ``r+1`` are copied.  In degree ``r+2`` the pair
    ``x1**(r+2)``, ``x1**(r+1)*x2`` is made adjacent and then reversed with
    respect to what compatibility forces.
    """
    t = ord.t
    if t < 2:
        raise ValueError("needs at least two variables")
    if r < 1:
        raise ValueError("r must be at least 1")
    if not classify(ord).degree:
        raise ValueError("perturbation requires a degree ordering")
    depth = max(r + 2, getattr(ord, "depth", 0))
    base = table_from(ord, depth)
    slices = [list(s) for s in base.slices]
    top = r + 2
    a = (r + 2,) + (0,) * (t - 1)
    b = (r + 1, 1) + (0,) * (t - 2)
    s = slices[top]
    lo, hi = (a, b) if s.index(a) < s.index(b) else (b, a)
    s.remove(hi)
    s.insert(s.index(lo), hi)
    slices[top] = s
    return GradedTableOrdering(depth, tuple(tuple(x) for x in slices), base.fallback)


# -- sampling ---------------------------------------------------------------


def _perm_rows(t: int, perm) -> tuple:
    return tuple(_unit(t, i) for i in perm)


def weight_vectors(t: int, bound: int, exact_max: bool = False) -> Iterator[tuple]:
    """Nonzero vectors in ``{0..bound}**t``; with ``exact_max`` only those reaching ``bound``."""
    for w in itertools.product(range(bound + 1), repeat=t):
        if not any(w):
            continue
        if exact_max and max(w) != bound:
            continue
        yield w


def orderings_for_weight(w) -> Iterator[MatrixOrdering]:
    t = len(w)
    for perm in itertools.permutations(range(t)):
        yield MatrixOrdering((tuple(w),) + _perm_rows(t, perm))


def sample_matrix_orderings(t: int, weight_bound: int) -> Iterator[MatrixOrdering]:
    """Admissible orderings: a weight row in ``0..W`` then a lex tie-break."""
    if weight_bound < 1:
        raise ValueError("weight bound must be at least 1")
    for w in weight_vectors(t, weight_bound):
        yield from orderings_for_weight(w)


def random_admissible_ordering(t: int, rng: random.Random, bound: int = 12) -> MatrixOrdering:
    """Random admissible matrix ordering.

    Two random weight rows (the second may be negative) followed by a random
    permutation tie-break; redrawn until every column is lex-positive.
    """
    while True:
        first = tuple(rng.randint(0, bound) for _ in range(t))
        if not any(first):
            continue
        second = tuple(rng.randint(-bound, bound) for _ in range(t))
        perm = list(range(t))
        rng.shuffle(perm)
        ord = MatrixOrdering((first, second) + _perm_rows(t, perm))
        if all(_lex_positive(col) for col in ord.columns()):
            return ord


def random_graded_table(t: int, depth: int, rng: random.Random, fallback: MatrixOrdering | None = None) -> GradedTableOrdering:
    slices = []
    for d in range(depth + 1):
        s = monomials_of_degree(t, d)
        rng.shuffle(s)
        slices.append(tuple(s))
    return GradedTableOrdering(depth, tuple(slices), fallback or grlex(t))
