"""Text syntax for polynomials, monomials and orderings.

Polynomial grammar (whitespace is ignored)::

    poly    := ['+'|'-'] term (('+'|'-') term)*
    term    := coeff ['*' powprod] | powprod
    coeff   := integer ['/' positive-integer]
    powprod := var ['^' nat] ('*' var ['^' nat])*
"""

from __future__ import annotations

import ast
import re
from fractions import Fraction

from .orderings import (
    GradedTableOrdering,
    MatrixOrdering,
    OrderingSpec,
    grevlex,
    grlex,
    lex,
    weighted,
)
from .poly import Polynomial, RingSignature, format_monomial, monomials_of_degree


class ParseError(ValueError):
    def __init__(self, message: str, column: int | None = None, line: int | None = None):
        self.message = message
        self.column = column
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if column is not None:
            where.append(f"column {column}")
        super().__init__(f"{message} at {', '.join(where)}" if where else message)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


def _tokenize(text: str, line=None):
    toks = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        col = m.start(m.lastindex) + 1
        if m.group(1):
            toks.append(("num", m.group(1), col))
        elif m.group(2):
            toks.append(("id", m.group(2), col))
        else:
            ch = m.group(3)
            if ch not in "+-*/^":
                raise ParseError(f"unexpected character {ch!r}", col, line)
            toks.append((ch, ch, col))
        pos = m.end()
    toks.append(("end", "", len(text) + 1))
    return toks


class _Parser:
    def __init__(self, text, sig, noncommutative, line):
        self.toks = _tokenize(text, line)
        self.i = 0
        self.sig = sig
        self.nc = noncommutative
        self.line = line

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def fail(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, tok[2], self.line)

    def poly(self):
        terms: dict = {}
        sign = 1
        if self.peek()[0] in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
        while True:
            m, c = self.term()
            terms[m] = terms.get(m, 0) + sign * c
            tok = self.peek()
            if tok[0] == "end":
                break
            if tok[0] not in ("+", "-"):
                self.fail(f"expected '+' or '-', got {tok[1]!r}")
            sign = -1 if self.take()[0] == "-" else 1
        return Polynomial(self.sig, terms)

    def term(self):
        tok = self.peek()
        if tok[0] == "num":
            c = self.coeff()
            if self.peek()[0] == "*":
                self.take()
                return self.powprod(), c
            return self.sig.one(), c
        if tok[0] == "id":
            return self.powprod(), Fraction(1)
        self.fail("expected a term")

    def coeff(self):
        num = int(self.take()[1])
        if self.peek()[0] == "/":
            self.take()
            tok = self.peek()
            if tok[0] != "num":
                self.fail("expected a denominator")
            self.take()
            den = int(tok[1])
            if den == 0:
                self.fail("zero denominator", tok)
            return Fraction(num, den)
        return Fraction(num)

    def powprod(self):
        exps = [0] * self.sig.t
        last = -1
        while True:
            tok = self.peek()
            if tok[0] != "id":
                self.fail("expected a variable")
            self.take()
            if tok[1] not in self.sig.var_names:
                self.fail(f"unknown variable {tok[1]!r}", tok)
            i = self.sig.index(tok[1])
            if self.nc and i < last:
                self.fail(
                    f"variable {tok[1]!r} out of normal order; write products as "
                    + "*".join(self.sig.var_names),
                    tok,
                )
            last = i
            e = 1
            if self.peek()[0] == "^":
                self.take()
                etok = self.peek()
                if etok[0] != "num":
                    self.fail("malformed exponent")
                self.take()
                e = int(etok[1])
            exps[i] += e
            if self.peek()[0] == "*" and self.toks[self.i + 1][0] == "id":
                self.take()
                continue
            if self.peek()[0] == "*":
                self.take()
                self.fail("expected a variable")
            return tuple(exps)


def parse_polynomial(text: str, sig: RingSignature, noncommutative: bool = False, line: int | None = None) -> Polynomial:
    return _Parser(text, sig, noncommutative, line).poly()


def parse_polynomial_list(text: str, sig: RingSignature, sep: str = ",", noncommutative=False, line=None) -> list:
    parts = [p for p in (s.strip() for s in text.split(sep)) if p]
    return [parse_polynomial(p, sig, noncommutative, line) for p in parts]


def _segment(word: str, names) -> list | None:
    # split a juxtaposed product like "yz" into variable names
    if not word:
        return []
    for n in sorted(names, key=len, reverse=True):
        if word.startswith(n):
            rest = _segment(word[len(n):], names)
            if rest is not None:
                return [n] + rest
    return None


def parse_monomial(text: str, sig: RingSignature, line: int | None = None) -> tuple:
    text = text.strip()
    if text == "1":
        return sig.one()
    if "*" not in text:
        # juxtaposition: "yz", "y^2z"
        parts = re.findall(r"([A-Za-z_][A-Za-z_]*)(?:\^(\d+))?", text)
        if "".join(a + (f"^{b}" if b else "") for a, b in parts) == text:
            factors = []
            for word, e in parts:
                seg = _segment(word, sig.var_names)
                if seg is None:
                    raise ParseError(f"cannot read {word!r} as a product of variables", None, line)
                factors.extend(seg[:-1])
                factors.append(seg[-1] + (f"^{e}" if e else ""))
            text = "*".join(factors)
    p = parse_polynomial(text, sig, line=line)
    if len(p.terms) != 1 or next(iter(p.terms.values())) != 1:
        raise ParseError(f"{text!r} is not a monomial", None, line)
    return next(iter(p.terms))


# -- orderings ------------------------------------------------------------------


def _names_tuple(value: str) -> list:
    value = value.strip()
    if not (value.startswith("(") and value.endswith(")")):
        raise ParseError(f"expected a parenthesized list, got {value!r}")
    return [v.strip() for v in value[1:-1].split(",") if v.strip()]


def _kv(text: str) -> dict:
    out = {}
    for m in re.finditer(r"(\w+)\s*=\s*(\([^)]*\)|\S+)", text):
        out[m.group(1)] = m.group(2)
    return out


def parse_ordering(text: str, sig: RingSignature, line: int | None = None) -> OrderingSpec:
    """Parse ``lex``, ``grlex``, ``grevlex``, ``matrix [[..]]``, ``weighted ...`` or ``table ...``."""
    text = text.strip()
    head, _, rest = text.partition(" ")
    t = sig.t
    try:
        if head in ("lex", "grlex", "grevlex"):
            kv = _kv(rest)
            order = None
            if "order" in kv:
                order = [sig.index(n) for n in _names_tuple(kv["order"])]
            return {"lex": lex, "grlex": grlex, "grevlex": grevlex}[head](t, order)
        if head == "matrix":
            rows = ast.literal_eval(rest.strip())
            if not isinstance(rows, (list, tuple)) or not all(isinstance(r, (list, tuple)) for r in rows):
                raise ParseError("matrix must be a list of integer rows", None, line)
            if any(len(r) != t for r in rows):
                raise ParseError(f"matrix rows must have {t} entries", None, line)
            return MatrixOrdering(tuple(tuple(int(x) for x in r) for r in rows))
        if head == "weighted":
            kv = _kv(rest)
            if "w" not in kv:
                raise ParseError("weighted ordering needs w=(...)", None, line)
            w = tuple(int(x) for x in _names_tuple(kv["w"]))
            if len(w) != t:
                raise ParseError(f"weight vector must have {t} entries", None, line)
            order = [sig.index(n) for n in _names_tuple(kv["order"])] if "order" in kv else None
            return weighted(w, kv.get("tie", "lex"), order)
        if head == "table":
            body, _, fb = rest.partition("fallback=")
            fallback = parse_ordering(fb, sig, line) if fb.strip() else grlex(t)
            if not isinstance(fallback, MatrixOrdering):
                raise ParseError("table fallback must be a matrix ordering", None, line)
            kv = _kv(body)
            if "D" not in kv:
                raise ParseError("table ordering needs D=<depth>", None, line)
            depth = int(kv["D"])
            slices = [(sig.one(),)]
            for d in range(1, depth + 1):
                if f"deg{d}" not in kv:
                    raise ParseError(f"table ordering is missing deg{d}=(...)", None, line)
                slices.append(tuple(parse_monomial(m, sig, line) for m in _names_tuple(kv[f"deg{d}"])))
            return GradedTableOrdering(depth, tuple(slices), fallback)
    except ParseError:
        raise
    except (ValueError, SyntaxError, TypeError) as exc:
        raise ParseError(f"bad ordering {text!r}: {exc}", None, line) from None
    raise ParseError(f"unknown ordering {head!r}", None, line)


def format_ordering(ord: OrderingSpec, sig: RingSignature) -> str:
    return ord.describe(sig)


def format_monomials(ms, sig: RingSignature) -> str:
    return ", ".join(format_monomial(m, sig) for m in ms)


__all__ = [
    "ParseError",
    "parse_polynomial",
    "parse_polynomial_list",
    "parse_monomial",
    "parse_ordering",
    "format_ordering",
    "format_monomials",
    "monomials_of_degree",
]
