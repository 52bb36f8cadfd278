"""Exact multivariate polynomials over the rationals.

Monomials are plain tuples of non-negative integers (one exponent per
variable).  A :class:`Polynomial` is an immutable map from monomials to
nonzero :class:`fractions.Fraction` coefficients.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .kernels import mono_mul

Monomial = tuple

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


@dataclass(frozen=True)
class RingSignature:
    """Number of variables and their names, in the natural variable order."""

    var_names: tuple

    def __post_init__(self):
        names = tuple(self.var_names)
        object.__setattr__(self, "var_names", names)
        if not names:
            raise ValueError("a ring needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        for name in names:
            if not _IDENT.match(name):
                raise ValueError(f"invalid variable name {name!r}")

    @property
    def t(self) -> int:
        return len(self.var_names)

    def index(self, name: str) -> int:
        try:
            return self.var_names.index(name)
        except ValueError:
            raise ValueError(f"unknown variable {name!r}") from None

    def one(self) -> Monomial:
        return (0,) * self.t

    def var(self, name_or_index) -> Monomial:
        i = name_or_index if isinstance(name_or_index, int) else self.index(name_or_index)
        return tuple(1 if k == i else 0 for k in range(self.t))


def degree(m: Monomial) -> int:
    return sum(m)


def grevlex_key(m: Monomial):
    """Sort key for the canonical (graded reverse lexicographic) order."""
    return (sum(m), tuple(-e for e in reversed(m)))


def monomials_of_degree(t: int, d: int) -> list:
    """All exponent vectors of length ``t`` and total degree ``d``."""
    if t == 1:
        return [(d,)]
    out = []
    for a in range(d, -1, -1):
        for rest in monomials_of_degree(t - 1, d - a):
            out.append((a,) + rest)
    return out


def monomials_up_to(t: int, d: int) -> list:
    out = []
    for k in range(d + 1):
        out.extend(monomials_of_degree(t, k))
    return out


def format_monomial(m: Monomial, sig: RingSignature) -> str:
    parts = []
    for name, e in zip(sig.var_names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


class Polynomial:
    """Immutable polynomial with rational coefficients over a signature."""

    __slots__ = ("sig", "terms", "_hash")

    def __init__(self, sig: RingSignature, terms: Mapping | None = None):
        self.sig = sig
        clean = {}
        if terms:
            t = sig.t
            for m, c in terms.items():
                m = tuple(m)
                if len(m) != t or any(e < 0 for e in m):
                    raise ValueError(f"bad exponent vector {m} for {t} variables")
                c = Fraction(c)
                if c:
                    clean[m] = clean.get(m, 0) + c
                    if not clean[m]:
                        del clean[m]
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, sig, terms):
        # trusted constructor: keys are valid tuples, values nonzero Fractions
        p = cls.__new__(cls)
        p.sig = sig
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, sig):
        return cls._raw(sig, {})

    @classmethod
    def constant(cls, sig, c):
        c = Fraction(c)
        return cls._raw(sig, {sig.one(): c} if c else {})

    @classmethod
    def monomial(cls, sig, m, c=1):
        c = Fraction(c)
        return cls._raw(sig, {tuple(m): c} if c else {})

    @classmethod
    def variable(cls, sig, name):
        return cls._raw(sig, {sig.var(name): Fraction(1)})

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.sig == other.sig and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self.sig, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.sig, frozenset(self.terms.items())))
        return self._hash

    def _check(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.sig, other)
        if not isinstance(other, Polynomial):
            raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")
        if other.sig != self.sig:
            raise ValueError("signature mismatch")
        return other

    def __add__(self, other):
        return add(self, self._check(other))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.sig, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return add(self, -self._check(other))

    def __rsub__(self, other):
        return add(self._check(other), -self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return mul_commutative(self, self._check(other))

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        out = Polynomial.constant(self.sig, 1)
        for _ in range(n):
            out = out * self
        return out

    def scale(self, c) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return Polynomial.zero(self.sig)
        return Polynomial._raw(self.sig, {m: c * v for m, v in self.terms.items()})

    def shift(self, u: Monomial) -> "Polynomial":
        """Multiply by the monomial ``u`` (commutatively)."""
        return Polynomial._raw(self.sig, {mono_mul(m, u): c for m, c in self.terms.items()})

    def coefficient(self, m: Monomial) -> Fraction:
        return self.terms.get(tuple(m), Fraction(0))

    def total_degree(self) -> int:
        if not self.terms:
            raise ValueError("degree of the zero polynomial is undefined")
        return max(sum(m) for m in self.terms)

    def sorted_terms(self):
        """Terms in canonical order (grevlex, largest first)."""
        return sorted(self.terms.items(), key=lambda mc: grevlex_key(mc[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for k, (m, c) in enumerate(self.sorted_terms()):
            neg = c < 0
            a = -c if neg else c
            if m == self.sig.one():
                body = str(a)
            elif a == 1:
                body = format_monomial(m, self.sig)
            else:
                body = f"{a}*{format_monomial(m, self.sig)}"
            if k == 0:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def __repr__(self):
        return f"Polynomial({str(self)!r}, vars={','.join(self.sig.var_names)})"


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    if p.sig != q.sig:
        raise ValueError("signature mismatch")
    if len(p.terms) < len(q.terms):
        p, q = q, p
    out = dict(p.terms)
    for m, c in q.terms.items():
        v = out.get(m)
        if v is None:
            out[m] = c
        else:
            v += c
            if v:
                out[m] = v
            else:
                del out[m]
    return Polynomial._raw(p.sig, out)


def mul_commutative(p: Polynomial, q: Polynomial) -> Polynomial:
    if p.sig != q.sig:
        raise ValueError("signature mismatch")
    out: dict = {}
    for m1, c1 in p.terms.items():
        for m2, c2 in q.terms.items():
            m = mono_mul(m1, m2)
            v = out.get(m, 0) + c1 * c2
            if v:
                out[m] = v
            else:
                out.pop(m, None)
    return Polynomial._raw(p.sig, out)


def support(p: Polynomial) -> frozenset:
    return frozenset(p.terms)


def leading_term(p: Polynomial, ord) -> tuple:
    """Return ``(LM, LC)`` of ``p`` with respect to the ordering ``ord``."""
    if not p.terms:
        raise ValueError("leading term of zero")
    m = max(p.terms, key=ord.key)
    return m, p.terms[m]


def leading_monomial(p: Polynomial, ord) -> Monomial:
    return leading_term(p, ord)[0]


def sum_polys(sig: RingSignature, polys: Iterable[Polynomial]) -> Polynomial:
    out = Polynomial.zero(sig)
    for p in polys:
        out = add(out, p)
    return out
