"""Line-oriented session files.

Example::

    # the parabola
    ring x, y
    relations commutative
    ordering main = grlex
    ordering elim = lex order=(y,x)
    generators x^2 - y
    param weight-bound = 3

Weyl algebras use ``relations weyl pairs=(x:dx) (y:dy)``.  General solvable
tables use ``relations solvable`` followed by one ``rel j i: c=<q> p=<poly>``
line per pair, meaning ``j * i = c * i * j + p``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from . import algebra as alg
from .groebner import IdealSpec
from .orderings import OrderingSpec, grlex
from .parsing import ParseError, parse_ordering, parse_polynomial, parse_polynomial_list
from .poly import RingSignature


@dataclass
class Session:
    sig: RingSignature
    algebra: alg.AlgebraPresentation
    orderings: dict = field(default_factory=dict)
    generators: list = field(default_factory=list)
    params: dict = field(default_factory=dict)

    def ideal(self) -> IdealSpec:
        return IdealSpec(self.algebra, tuple(self.generators))

    def ordering(self, name: str | None) -> OrderingSpec:
        """Named ordering from the file, or an ordering written inline."""
        if name is None:
            if self.orderings:
                return next(iter(self.orderings.values()))
            return grlex(self.sig.t)
        if name in self.orderings:
            return self.orderings[name]
        return parse_ordering(name, self.sig)

    @property
    def noncommutative(self) -> bool:
        return not self.algebra.is_commutative


def parse_session(text: str) -> Session:
    sig = None
    kind = None
    weyl_pairs: list = []
    rel_lines: list = []
    ordering_lines: list = []
    generator_lines: list = []
    params: dict = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        if head == "ring":
            if sig is not None:
                raise ParseError("duplicate ring line", None, lineno)
            names = [n.strip() for n in rest.split(",") if n.strip()]
            try:
                sig = RingSignature(tuple(names))
            except ValueError as exc:
                raise ParseError(str(exc), None, lineno) from None
        elif head == "relations":
            kind, _, spec = rest.partition(" ")
            if kind not in ("commutative", "weyl", "solvable"):
                raise ParseError(f"unknown relations kind {kind!r}", None, lineno)
            if kind == "weyl":
                weyl_pairs = re.findall(r"\(\s*(\w+)\s*:\s*(\w+)\s*\)", spec)
                if not weyl_pairs:
                    raise ParseError("weyl relations need pairs=(x:dx)", None, lineno)
        elif head == "rel":
            rel_lines.append((lineno, rest))
        elif head == "ordering":
            name, eq, body = rest.partition("=")
            if not eq or not name.strip():
                raise ParseError("ordering lines look like 'ordering NAME = SPEC'", None, lineno)
            ordering_lines.append((lineno, name.strip(), body.strip()))
        elif head in ("generators", "generator"):
            generator_lines.append((lineno, rest))
        elif head == "param":
            key, eq, value = rest.partition("=")
            if not eq:
                raise ParseError("param lines look like 'param KEY = VALUE'", None, lineno)
            params[key.strip()] = value.strip()
        else:
            raise ParseError(f"unknown directive {head!r}", 1, lineno)
    if sig is None:
        raise ParseError("session has no ring line")
    kind = kind or "commutative"
    if rel_lines and kind != "solvable":
        raise ParseError("rel lines need 'relations solvable'", None, rel_lines[0][0])
    try:
        if kind == "commutative":
            A = alg.commutative(sig)
        elif kind == "weyl":
            A = alg.weyl(sig, weyl_pairs)
        else:
            A = alg.solvable(sig, _parse_relations(rel_lines, sig))
    except ParseError:
        raise
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    nc = not A.is_commutative
    orderings = {}
    for lineno, name, body in ordering_lines:
        orderings[name] = parse_ordering(body, sig, lineno)
    gens = []
    for lineno, body in generator_lines:
        gens.extend(parse_polynomial_list(body, sig, noncommutative=nc, line=lineno))
    return Session(sig, A, orderings, gens, params)


def _parse_relations(rel_lines, sig) -> dict:
    rels = {}
    pat = re.compile(r"(\w+)\s+(\w+)\s*:\s*c\s*=\s*(\S+)\s+p\s*=\s*(.+)$")
    for lineno, body in rel_lines:
        m = pat.match(body)
        if m is None:
            raise ParseError("rel lines look like 'rel j i: c=<rational> p=<poly>'", None, lineno)
        jname, iname, c, p = m.groups()
        try:
            j, i = _var_ref(jname, sig), _var_ref(iname, sig)
            c = Fraction(c)
        except ValueError as exc:
            raise ParseError(str(exc), None, lineno) from None
        if not i < j:
            raise ParseError(f"rel {jname} {iname}: the first variable must come later in the ring order", None, lineno)
        rels[(i, j)] = (c, parse_polynomial(p, sig, noncommutative=True, line=lineno))
    return rels


def _var_ref(name: str, sig) -> int:
    if name.isdigit():
        k = int(name) - 1
        if not 0 <= k < sig.t:
            raise ValueError(f"variable number {name} out of range")
        return k
    return sig.index(name)


def load_session(path: str) -> Session:
    with open(path, encoding="utf-8") as fh:
        return parse_session(fh.read())
