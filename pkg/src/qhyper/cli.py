"""Batch command line: ``qhyper <command> ...``.

Exit codes: 0 success, 1 usage, parse or precondition error, 2 verification failure.
"""
import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from qhyper.algebra import AlgElt, star
from qhyper.bundles import Section, WeightMismatchError
from qhyper.coeffs import PoleError, qrat_eval
from qhyper.connection import NotHorizontalError, covariant_D
from qhyper.expr import ParseError, parse_alg, parse_form, parse_value
from qhyper.forms import Form, NotBaseFormError, differential, form_star, hodge_left, hodge_right

EXIT_OK, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2
TABLE_COLUMNS = ["table", "n", "family", "t", "k", "l", "eigenvalue"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def default_bound():
    raw = os.environ.get("QH_BOUND", "")
    try:
        return int(raw) if raw else 4
    except ValueError:
        raise UsageError(f"QH_BOUND must be an integer, got {raw!r}")


def _render(v):
    return v.render()


def cmd_eval(args):
    return _render(parse_value(args.expr))


def cmd_d(args):
    return _render(differential(parse_form(args.expr)))


def cmd_D(args):
    return _render(covariant_D(parse_form(args.expr)))


def cmd_star(args):
    v = parse_value(args.expr)
    if isinstance(v, Form):
        return _render(form_star(v))
    if isinstance(v, AlgElt):
        return _render(star(v))
    return _render(v)


def cmd_hodge(args):
    u = parse_form(args.expr)
    return _render(hodge_left(u) if args.side == "left" else hodge_right(u))


def cmd_laplacian(args):
    from qhyper.laplacians import (
        base_laplacian_left,
        base_laplacian_right,
        gauge_laplacian_left,
        gauge_laplacian_right,
    )

    if args.base:
        u = parse_form(args.expr)
        f = base_laplacian_left if args.side == "left" else base_laplacian_right
        return _render(f(u))
    T = Section(parse_alg(args.expr), args.n)
    f = gauge_laplacian_left if args.side == "left" else gauge_laplacian_right
    return _render(f(None, T))


def cmd_commutator(args):
    from qhyper.laplacians import gauge_commutator

    return _render(gauge_commutator(args.n, Section(parse_alg(args.expr), args.n)))


def _default_n(which):
    return {1: 0, 2: 1, 3: -1, 4: 1, 5: -1}[which]


def cmd_tables(args):
    from qhyper.laplacians import spectrum_table

    bound = args.bound if args.bound is not None else default_bound()
    n = args.n if args.n is not None else _default_n(args.which)
    rows = spectrum_table(args.which, n, bound)
    at_q = Fraction(args.at_q) if args.at_q is not None else None
    records = []
    for r in rows:
        d = r.as_dict()
        if at_q is not None:
            d["value"] = str(qrat_eval(r.eigenvalue, at_q))
        records.append(d)
    cols = TABLE_COLUMNS + (["value"] if at_q is not None else [])
    if args.format == "json":
        return "\n".join(json.dumps(d, sort_keys=False) for d in records)
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\r\n")
    w.writeheader()
    w.writerows(records)
    return buf.getvalue()


def cmd_verify(args):
    from qhyper.checks import run_suites

    bound = args.bound if args.bound is not None else default_bound()
    checks = run_suites(args.suite, bound)
    lines = []
    for c in checks:
        status = "PASS" if c.ok else "FAIL"
        line = f"{status} [{c.suite}] {c.name}"
        if c.detail:
            line += f": {c.detail}"
        lines.append(line)
    failed = sum(not c.ok for c in checks)
    lines.append(f"{len(checks) - failed} passed, {failed} failed")
    return "\n".join(lines), (EXIT_VERIFY if failed else EXIT_OK)


def build_parser():
    p = _Parser(prog="qhyper", description="Exact computations on SU_q(1,1) and the quantum hyperboloid.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    for name, fn, help_ in (
        ("eval", cmd_eval, "normalize and print an expression"),
        ("d", cmd_d, "exterior derivative"),
        ("D", cmd_D, "covariant derivative of the canonical connection"),
        ("star", cmd_star, "the * involution"),
    ):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("expr")
        sp.set_defaults(func=fn)

    sp = sub.add_parser("hodge", help="Hodge operator on a base form")
    sp.add_argument("--side", choices=("left", "right"), default="left")
    sp.add_argument("expr")
    sp.set_defaults(func=cmd_hodge)

    sp = sub.add_parser("laplacian", help="gauge Laplacian on a section (or base Laplacian with --base)")
    sp.add_argument("--side", choices=("left", "right"), default="left")
    sp.add_argument("--n", type=int, default=None, help="section degree (defaults to the z-degree)")
    sp.add_argument("--base", action="store_true", help="apply the base Laplacian to a base form")
    sp.add_argument("expr")
    sp.set_defaults(func=cmd_laplacian)

    sp = sub.add_parser("tables", help="spectrum tables, checked operator against closed form")
    sp.add_argument("--which", type=int, choices=range(1, 6), required=True)
    sp.add_argument("--n", type=int, default=None)
    sp.add_argument("--bound", type=int, default=None)
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.add_argument("--at-q", dest="at_q", default=None, help="add a column with the value at this rational q")
    sp.set_defaults(func=cmd_tables)

    sp = sub.add_parser("commutator", help="right(left(T)) - left(right(T))")
    sp.add_argument("--n", type=int, default=None)
    sp.add_argument("expr")
    sp.set_defaults(func=cmd_commutator)

    sp = sub.add_parser("verify", help="run invariant suites")
    sp.add_argument("--suite", choices=("relations", "calculus", "bundles", "spectra", "all"), default="all")
    sp.add_argument("--bound", type=int, default=None)
    sp.set_defaults(func=cmd_verify)
    return p


def run(argv, out=None, err=None):
    """Run a command; returns the exit status."""
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        result = args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=err)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"parse error {exc}", file=err)
        return EXIT_USAGE
    except (ValueError, ArithmeticError, IndexError, NotBaseFormError, NotHorizontalError, WeightMismatchError) as exc:
        kind = "pole" if isinstance(exc, PoleError) else "error"
        print(f"{kind}: {exc}", file=err)
        return EXIT_USAGE
    status = EXIT_OK
    if isinstance(result, tuple):
        result, status = result
    print(result, file=out, end="" if result.endswith("\n") else "\n")
    return status


def main(argv=None):
    sys.exit(run(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
