"""Command-line interface.

Exit status is 0 on success, 1 when a mathematical check fails and 2 on
input errors.
"""

from __future__ import annotations

import argparse
import random
import sys

from . import fan as fanmod
from . import groebner as gb
from .algebra import NotSolvableError
from .ideals import MonomialIdeal, hilbert_polynomial_and_index, standard_monomials_up_to
from .orderings import classify, metric_distance, perturb_to_incompatible, random_admissible_ordering
from .parsing import ParseError, format_monomials, parse_monomial, parse_ordering, parse_polynomial_list
from .poly import RingSignature, format_monomial
from .session import Session, load_session

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _sig(args) -> RingSignature:
    names = [n.strip() for n in args.vars.split(",") if n.strip()]
    try:
        return RingSignature(tuple(names))
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _session(args) -> Session:
    try:
        return load_session(args.session)
    except OSError as exc:
        raise InputError(f"cannot read session: {exc}") from None


def _param(args, session, name, default):
    value = getattr(args, name.replace("-", "_"), None)
    if value is not None:
        return value
    if name in session.params:
        try:
            return int(session.params[name])
        except ValueError:
            raise InputError(f"param {name} must be an integer") from None
    return default


def cmd_classify(args, out):
    sig = _sig(args)
    ord = parse_ordering(args.ordering, sig)
    c = classify(ord, window=args.window)
    out.append(c.summary())
    if c.witness is not None:
        u, v, g = c.witness
        out.append(
            f"witness: {format_monomial(u, sig)} < {format_monomial(v, sig)} but "
            f"{format_monomial(u, sig)}*{format_monomial(g, sig)} > {format_monomial(v, sig)}*{format_monomial(g, sig)}"
        )
    return EXIT_OK


def cmd_dist(args, out):
    sig = _sig(args)
    d = metric_distance(parse_ordering(args.ord1, sig), parse_ordering(args.ord2, sig), cap=args.cap)
    out.append(str(d))
    return EXIT_OK


def cmd_gb(args, out, reduced=False):
    s = _session(args)
    ord = s.ordering(args.ordering)
    G = gb.buchberger(s.ideal(), ord)
    if reduced:
        G = gb.reduce_gb(G)
    elems = sorted(G.elements, key=lambda g: ord.key(gb.leading_term(g, ord)[0]), reverse=True)
    out.append(f"ordering: {ord.describe(s.sig)}")
    out.extend(str(g) for g in elems)
    out.append(f"leading ideal: {G.leading_ideal()}")
    return EXIT_OK


def cmd_reduced_gb(args, out):
    return cmd_gb(args, out, reduced=True)


def _fan(args, s):
    W = _param(args, s, "weight-bound", 3)
    R = _param(args, s, "rounds", 0)
    return fanmod.enumerate_leading_ideals_admissible(s.ideal(), W, R, seed=args.seed)


def cmd_fan(args, out):
    s = _session(args)
    out.append(_fan(args, s).report(s.sig))
    return EXIT_OK


def cmd_degree_fan(args, out):
    s = _session(args)
    L = s.ideal()
    default = max((g.total_degree() for g in L.generators), default=0) + 2
    D = _param(args, s, "depth", default)
    out.append(fanmod.enumerate_leading_ideals_degree(L, D).report(s.sig))
    return EXIT_OK


def cmd_universal_gb(args, out):
    s = _session(args)
    U = fanmod.universal_gb(s.ideal(), _fan(args, s))
    out.extend(str(u) for u in U)
    return EXIT_OK


def cmd_verify_universal(args, out):
    s = _session(args)
    L = s.ideal()
    if args.basis is not None:
        U = parse_polynomial_list(args.basis, s.sig, sep=";", noncommutative=s.noncommutative)
    else:
        U = fanmod.universal_gb(L, _fan(args, s))
    if args.drop is not None:
        if not 0 <= args.drop < len(U):
            raise InputError(f"--drop index {args.drop} out of range for {len(U)} elements")
        U = U[: args.drop] + U[args.drop + 1:]
    rng = random.Random(args.seed)
    ords = [random_admissible_ordering(s.sig.t, rng) for _ in range(args.samples)]
    rep = fanmod.verify_universal(U, L, ords)
    out.append("U = {" + ", ".join(str(u) for u in U) + "}")
    out.extend(rep.lines(s.sig))
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_hilbert(args, out):
    sig = _sig(args)
    parts = [p for p in (x.strip() for x in args.ideal.split(",")) if p]
    I = MonomialIdeal(sig, [parse_monomial(p, sig) for p in parts])
    h = hilbert_polynomial_and_index(I)
    upto = args.upto if args.upto is not None else len(h.hf_values) - 1
    from .ideals import hilbert_function

    out.append(f"ideal: {I}")
    out.append("HF: " + " ".join(str(hilbert_function(I, s)) for s in range(upto + 1)))
    out.append(f"HP(s) = {h.format_hp()}")
    out.append(f"ind = {h.regularity_index}")
    out.append(f"standard monomials up to degree {upto}: " + format_monomials(standard_monomials_up_to(I, upto), sig))
    return EXIT_OK


def cmd_macaulay(args, out):
    s = _session(args)
    ord = s.ordering(args.ordering)
    rep = gb.macaulay_check(s.ideal(), ord, args.cap)
    out.extend(rep.lines(s.sig))
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_slice_lm(args, out):
    s = _session(args)
    ord = s.ordering(args.ordering)
    lms = gb.slice_leading_monomials(s.ideal(), ord, args.degree)
    out.append(format_monomials(sorted(lms, key=ord.key, reverse=True), s.sig))
    return EXIT_OK


def cmd_perturb(args, out):
    sig = _sig(args)
    ord = parse_ordering(args.ordering, sig)
    p = perturb_to_incompatible(ord, args.r)
    out.append(p.describe(sig))
    out.append(f"distance: {metric_distance(ord, p, cap=args.r + 4)}")
    c = classify(p, window=p.depth + 1)
    out.append(f"degree={'yes' if c.degree else 'no'} compatible={c.compatible}")
    return EXIT_OK


def cmd_bound(args, out):
    out.append(str(fanmod.degree_bound_quadric(args.d, args.t)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="termfan", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def session_cmd(name, func, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("session")
        sp.set_defaults(func=func)
        return sp

    sp = sub.add_parser("classify", help="classify an ordering")
    sp.add_argument("ordering")
    sp.add_argument("--vars", required=True)
    sp.add_argument("--window", type=int, default=6)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("dist", help="filtration distance of two orderings")
    sp.add_argument("ord1")
    sp.add_argument("ord2")
    sp.add_argument("--vars", required=True)
    sp.add_argument("--cap", type=int, default=8)
    sp.set_defaults(func=cmd_dist)

    for name, func in (("gb", cmd_gb), ("reduced-gb", cmd_reduced_gb)):
        sp = session_cmd(name, func, "Groebner basis of the session ideal")
        sp.add_argument("--ordering")

    for name, func in (("fan", cmd_fan), ("universal-gb", cmd_universal_gb)):
        sp = session_cmd(name, func, "sweep admissible matrix orderings")
        sp.add_argument("--weight-bound", type=int)
        sp.add_argument("--rounds", type=int)
        sp.add_argument("--seed", type=int, default=0)

    sp = session_cmd("degree-fan", cmd_degree_fan, "sweep all graded tables of a depth")
    sp.add_argument("--depth", type=int)

    sp = session_cmd("verify-universal", cmd_verify_universal, "check a universal Groebner basis")
    sp.add_argument("--samples", type=int, default=100)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--weight-bound", type=int)
    sp.add_argument("--rounds", type=int)
    sp.add_argument("--basis", help="candidate basis, polynomials separated by ';'")
    sp.add_argument("--drop", type=int, help="remove the element with this index before checking")

    sp = sub.add_parser("hilbert", help="Hilbert data of a monomial ideal")
    sp.add_argument("--ideal", required=True)
    sp.add_argument("--vars", required=True)
    sp.add_argument("--upto", type=int)
    sp.set_defaults(func=cmd_hilbert)

    sp = session_cmd("macaulay", cmd_macaulay, "check the standard-monomial basis")
    sp.add_argument("--cap", type=int, default=4)
    sp.add_argument("--ordering")

    sp = session_cmd("slice-lm", cmd_slice_lm, "leading monomials of a degree truncation")
    sp.add_argument("--degree", type=int, required=True)
    sp.add_argument("--ordering")

    sp = sub.add_parser("perturb", help="incompatible degree ordering near a given one")
    sp.add_argument("ordering")
    sp.add_argument("--vars", required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.set_defaults(func=cmd_perturb)

    sp = sub.add_parser("bound", help="degree bound for quadric solvable algebras")
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--t", type=int, required=True)
    sp.set_defaults(func=cmd_bound)
    return p


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out: list = []
    try:
        code = args.func(args, out)
    except (InputError, ParseError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INPUT
    except (NotSolvableError, gb.GroebnerError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_FAIL
    except ValueError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INPUT
    for line in out:
        print(line, file=stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
