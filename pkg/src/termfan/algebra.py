"""Algebras given by normal-ordering commutation relations.

The canonical basis is the set of commutative monomials read in the natural
variable order.  For each pair ``i < j`` a relation

    x_j * x_i = c_ij * x_i * x_j + p_ij

rewrites an out-of-order adjacent pair.  Missing pairs commute.  Commutative
rings, Weyl algebras and general solvable tables share this presentation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .kernels import mono_mul
from .orderings import OrderingSpec, Tri, classify
from .poly import Polynomial, RingSignature, leading_term, mul_commutative

STEP_BUDGET = 10**6


class NotSolvableError(RuntimeError):
    """Rewriting did not terminate within the step budget."""


@dataclass(frozen=True)
class AlgebraPresentation:
    sig: RingSignature
    relations: dict  # (i, j) with i < j -> (c, p)
    kind: str = "solvable"
    weyl_pairs: tuple = ()
    _memo: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self):
        if self.kind not in ("commutative", "weyl", "solvable"):
            raise ValueError(f"unknown algebra kind {self.kind!r}")
        rels = {}
        for (i, j), (c, p) in self.relations.items():
            if not 0 <= i < j < self.sig.t:
                raise ValueError(f"relation pair ({i}, {j}) must satisfy 0 <= i < j < t")
            c = Fraction(c)
            if c == 0:
                raise ValueError(f"relation ({i}, {j}) has zero scalar")
            if p.sig != self.sig:
                raise ValueError("relation polynomial over a different signature")
            if c != 1 or p:
                rels[(i, j)] = (c, p)
        object.__setattr__(self, "relations", rels)

    def __hash__(self):
        return hash((self.sig, self.kind, frozenset((k, v[0], v[1]) for k, v in self.relations.items())))

    @property
    def is_commutative(self) -> bool:
        return not self.relations

    def relation(self, i: int, j: int):
        return self.relations.get((i, j), (Fraction(1), None))

    def is_quadric(self) -> bool:
        return all(not p or p.total_degree() <= 2 for _, p in self.relations.values())

    def describe(self) -> str:
        if self.kind == "commutative":
            return "relations commutative"
        if self.kind == "weyl":
            pairs = " ".join(f"({a}:{b})" for a, b in self.weyl_pairs)
            return f"relations weyl pairs={pairs}"
        lines = ["relations solvable"]
        names = self.sig.var_names
        for (i, j), (c, p) in sorted(self.relations.items()):
            lines.append(f"rel {names[j]} {names[i]}: c={c} p={p}")
        return "\n".join(lines)

    # -- products -----------------------------------------------------------

    def mono_product(self, m1: tuple, m2: tuple) -> dict:
        """Normal form of the basis product ``m1 * m2`` as ``{monomial: coeff}``."""
        hit = self._memo.get((m1, m2))
        if hit is not None:
            return hit
        if self.is_commutative or _in_order(m1, m2):
            return {mono_mul(m1, m2): Fraction(1)}
        steps = [0]
        try:
            return self._product(m1, m2, steps)
        except RecursionError:
            raise NotSolvableError("presentation not solvable-type for any registered ordering") from None

    def _tick(self, steps):
        steps[0] += 1
        if steps[0] > STEP_BUDGET:
            raise NotSolvableError("presentation not solvable-type for any registered ordering")

    def _product(self, m1, m2, steps) -> dict:
        # peel the last variable of m1: m1 * m2 = m1' * (x_i * m2)
        key = (m1, m2)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        if _in_order(m1, m2):
            out = {mono_mul(m1, m2): Fraction(1)}
        else:
            self._tick(steps)
            i = max(k for k, e in enumerate(m1) if e)
            rest = _dec(m1, i)
            out = {}
            for n, c in self._var_times(i, m2, steps).items():
                for q, v in self._product(rest, n, steps).items():
                    _acc(out, q, c * v)
        self._memo[key] = out
        return out

    def _var_times(self, i, m, steps) -> dict:
        # x_i * m via x_i * x_k = c * x_k * x_i + p for the first variable x_k of m
        key = (i, m)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        k = next((k for k, e in enumerate(m) if e), None)
        if k is None or i <= k:
            out = {_inc(m, i): Fraction(1)}
        else:
            self._tick(steps)
            tail = _dec(m, k)
            c, p = self.relation(k, i)
            out = {}
            for n, v in self._var_times(i, tail, steps).items():
                for q, w in self._var_times(k, n, steps).items():
                    _acc(out, q, c * v * w)
            if p is not None:
                for pm, pc in p.terms.items():
                    for q, w in self._product(pm, tail, steps).items():
                        _acc(out, q, pc * w)
        self._memo[key] = out
        return out


def _inc(m, i) -> tuple:
    return m[:i] + (m[i] + 1,) + m[i + 1:]


def _dec(m, i) -> tuple:
    return m[:i] + (m[i] - 1,) + m[i + 1:]


def _in_order(m1, m2) -> bool:
    last = max((i for i, e in enumerate(m1) if e), default=-1)
    first = min((i for i, e in enumerate(m2) if e), default=len(m2))
    return last <= first


def _acc(d: dict, k, c):
    v = d.get(k, 0) + c
    if v:
        d[k] = v
    else:
        d.pop(k, None)


# -- constructors -------------------------------------------------------------


def commutative(sig: RingSignature) -> AlgebraPresentation:
    return AlgebraPresentation(sig, {}, "commutative")


def weyl(sig: RingSignature, pairs: Sequence[tuple]) -> AlgebraPresentation:
    """Weyl algebra with ``d * x = x * d + 1`` for each ``(x, d)`` pair."""
    rels = {}
    seen = set()
    for xname, dname in pairs:
        xi, di = sig.index(xname), sig.index(dname)
        if xi == di or xi in seen or di in seen:
            raise ValueError(f"invalid Weyl pair ({xname}:{dname})")
        seen.update((xi, di))
        if xi < di:
            rels[(xi, di)] = (1, Polynomial.constant(sig, 1))
        else:
            # x * d = d * x - 1 with d first in the normal order
            rels[(di, xi)] = (1, Polynomial.constant(sig, -1))
    return AlgebraPresentation(sig, rels, "weyl", tuple(pairs))


def solvable(sig: RingSignature, relations: dict) -> AlgebraPresentation:
    return AlgebraPresentation(sig, dict(relations), "solvable")


def normal_form_product(A: AlgebraPresentation, a: Polynomial, b: Polynomial) -> Polynomial:
    if a.sig != A.sig or b.sig != A.sig:
        raise ValueError("signature mismatch")
    if A.is_commutative:
        return mul_commutative(a, b)
    out: dict = {}
    for m1, c1 in a.terms.items():
        for m2, c2 in b.terms.items():
            c = c1 * c2
            for m, v in A.mono_product(m1, m2).items():
                _acc(out, m, c * v)
    return Polynomial._raw(A.sig, out)


def left_mul_monomial(A: AlgebraPresentation, u: tuple, f: Polynomial) -> Polynomial:
    """``X^u * f`` in ``A``."""
    if A.is_commutative:
        return f.shift(u)
    out: dict = {}
    for m, c in f.terms.items():
        for n, v in A.mono_product(u, m).items():
            _acc(out, n, c * v)
    return Polynomial._raw(A.sig, out)


# -- checks -------------------------------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    witness: object = None

    def __bool__(self):
        return self.ok


def check_solvable_type(A: AlgebraPresentation, ord: OrderingSpec) -> CheckResult:
    """Every nonzero ``p_ij`` must have leading monomial below ``x_i * x_j``.

    The witness on failure is the offending index pair ``(i, j)``.
    """
    depth = getattr(ord, "depth", 0)
    if classify(ord, window=max(2, depth + 1)).admissible is not Tri.YES:
        raise ValueError("check_solvable_type needs an admissible ordering")
    for (i, j), (c, p) in sorted(A.relations.items()):
        if not p:
            continue
        lm, _ = leading_term(p, ord)
        xij = mono_mul(A.sig.var(i), A.sig.var(j))
        if not ord.key(lm) < ord.key(xij):
            return CheckResult(False, (i, j))
    return CheckResult(True)


def check_multiplicative(A: AlgebraPresentation, ord: OrderingSpec, samples: Iterable[tuple]) -> CheckResult:
    """Search ``samples`` for a pair with ``LM(a*b) != LM(a)*LM(b)``.

    The witness is ``(a, b, LM(a*b), LM(a)*LM(b))``; ``LM(a*b)`` is None
    when the product vanishes.
    """
    for a, b in samples:
        if not a or not b:
            raise ValueError("zero polynomial in multiplicativity samples")
        ab = normal_form_product(A, a, b)
        expected = mono_mul(leading_term(a, ord)[0], leading_term(b, ord)[0])
        got = leading_term(ab, ord)[0] if ab else None
        if got != expected:
            return CheckResult(False, (a, b, got, expected))
    return CheckResult(True)
