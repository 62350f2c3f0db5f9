"""Command-line front end: ``qumbral {table,poly,expand,functional,audit}``.

Exit status is 0 on success (falsified identities included), 1 on usage
errors and 2 when an internal consistency check trips.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import genocchi as geno
from .appell import make_family
from .audit import DEFAULT_Q_GRID, FORMATS, REGISTRY, RunConfig, run_audit
from .errors import ConsistencyError, QUmbralError
from .formatting import format_poly, format_rational, parse_rational, parse_rational_list, poly_to_json
from .qcore import QContext
from .qpoly import Poly
from .qseries import Series, e_q_series
from .umbral import apply
from .verdict import AuditVerdict

FAMILIES = ("bernoulli", "euler", "genocchi")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# -- argument parsing ----------------------------------------------------------------


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _q_value(text: str) -> Fraction:
    q = _rational(text)
    if not (0 < q < 1 or q == 1):
        raise argparse.ArgumentTypeError(f"q must satisfy 0 < q < 1 or q = 1, got {text}")
    return q


def _q_grid(text: str) -> tuple[Fraction, ...]:
    return tuple(_q_value(tok) for tok in text.split(","))


def _poly_literal(text: str) -> list[Fraction]:
    try:
        return parse_rational_list(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _family_name(text: str) -> str:
    if text in FAMILIES or re.fullmatch(r"genocchi\^[1-9]\d*", text):
        return text
    raise argparse.ArgumentTypeError(f"unknown family {text!r}")


def _common(sub: argparse.ArgumentParser, grid: bool = False) -> None:
    if grid:
        sub.add_argument("--q-grid", "--q", dest="q_grid", type=_q_grid, default=None,
                         help="comma-separated q values (default 1/3,1/2,2/3,9/10 plus q=1)")
    else:
        sub.add_argument("--q", "--q-grid", dest="q", type=_q_value, default=Fraction(1, 2),
                         help="rational q with 0 < q < 1, or 1 (default 1/2)")
    sub.add_argument("--n", "--nmax", dest="n", type=int, default=None)
    sub.add_argument("--m", "--mmax", dest="m", type=int, default=None)
    sub.add_argument("--truncation-margin", type=int, default=4)
    sub.add_argument("--format", choices=FORMATS, default="text")
    sub.add_argument("--output", default=None, help="write to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qumbral", description="Exact q-Appell tables, expansions and identity audits.")
    subs = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    table = subs.add_parser("table", help="numbers or polynomials of a family for n = 0..N")
    table.add_argument("--family", type=_family_name, required=True,
                       help="bernoulli, euler, genocchi or genocchi^m")
    mode = table.add_mutually_exclusive_group()
    mode.add_argument("--numbers", action="store_true", help="list the numbers A_n (default)")
    mode.add_argument("--polynomials", action="store_true", help="list coefficient rows of A_n(x)")
    _common(table)

    poly = subs.add_parser("poly", help="print one polynomial A_n(x)")
    poly.add_argument("--family", type=_family_name, required=True)
    _common(poly)

    expand = subs.add_parser("expand", help="expand a polynomial over a basis")
    expand.add_argument("--basis", required=True,
                        help="monomial, xm1, bernoulli, euler, genocchi or genocchi^m")
    expand.add_argument("--p", type=_poly_literal, required=True, help='ascending coefficients "c0,c1,..."')
    _common(expand)

    functional = subs.add_parser("functional", help="evaluate <f(t) | p(x)>")
    functional.add_argument("--f", required=True,
                            help="eq, eq+1, eq-1, eq(y*t), eq(y*t)+1, eq(y*t)-1, t^k, "
                                 "bern-det, euler-det, geno-det, bern-g, euler-g, geno-g")
    functional.add_argument("--p", type=_poly_literal, required=True)
    functional.add_argument("--y", type=_rational, default=None)
    _common(functional)

    audit = subs.add_parser("audit", help="audit registered identities over a q grid")
    which = audit.add_mutually_exclusive_group(required=True)
    which.add_argument("--identity", action="append", help="identity id (repeatable)")
    which.add_argument("--all", action="store_true")
    which.add_argument("--list", action="store_true", help="list identity ids and exit")
    audit.add_argument("--jobs", type=int, default=1, help="worker threads (output order is fixed)")
    _common(audit, grid=True)
    return parser


# -- commands ---------------------------------------------------------------------------


def cmd_table(args) -> str:
    ctx = QContext(args.q)
    fam = make_family(args.family, ctx)
    nmax = 10 if args.n is None else args.n
    if nmax < 0:
        raise UsageError("--n must be >= 0")
    if args.polynomials:
        rows = [poly_to_json(fam.polynomial(n)) for n in range(nmax + 1)]
        if args.format == "json":
            return json.dumps({"family": args.family, "q": format_rational(args.q), "polynomials": rows}, indent=2)
        if args.format == "csv":
            return _csv([["n", "coefficients"]] + [[n, ",".join(r)] for n, r in enumerate(rows)])
        return "\n".join(",".join(r) if r else "0" for r in rows)
    values = [format_rational(fam.number(n)) for n in range(nmax + 1)]
    if args.format == "json":
        return json.dumps({"family": args.family, "q": format_rational(args.q), "numbers": values}, indent=2)
    if args.format == "csv":
        return _csv([["n", "value"]] + [[n, v] for n, v in enumerate(values)])
    return "\n".join(values)


def cmd_poly(args) -> str:
    ctx = QContext(args.q)
    fam = make_family(args.family, ctx)
    if args.n is None or args.n < 0:
        raise UsageError("poly needs --n >= 0")
    p = fam.polynomial(args.n)
    if args.format == "json":
        return json.dumps(
            {"family": args.family, "q": format_rational(args.q), "n": args.n, "coefficients": poly_to_json(p)},
            indent=2,
        )
    if args.format == "csv":
        return _csv([["k", "coefficient"]] + [[k, c] for k, c in enumerate(poly_to_json(p))])
    return format_poly(p)


def expand_basis(p: Poly, basis: str, m: Optional[int] = None) -> geno.BasisExpansion:
    if basis == "genocchi^m":
        if m is None:
            raise UsageError("basis genocchi^m needs --m")
        basis = f"genocchi^{m}"
    if basis == "genocchi":
        return geno.to_genocchi_basis(p)
    match = re.fullmatch(r"genocchi\^([1-9]\d*)", basis)
    if match:
        return geno.expand_in_order_m_basis(p, int(match.group(1)))
    if basis in ("monomial", "xm1", "bernoulli", "euler"):
        return geno.expand(p, basis)
    raise UsageError(f"unknown basis {basis!r}")


def cmd_expand(args) -> str:
    ctx = QContext(args.q)
    e = expand_basis(Poly(ctx, args.p), args.basis, args.m)
    coeffs = [format_rational(c) for c in e.coeffs]
    alternatives = {name: [format_rational(c) for c in cs] for name, cs in e.alternatives}
    if args.format == "json":
        return json.dumps(
            {
                "basis": e.basis,
                "q": format_rational(args.q),
                "offset": e.offset,
                "coeffs": coeffs,
                "alternatives": alternatives,
                "discrepancies": list(e.discrepancies),
            },
            indent=2,
        )
    if args.format == "csv":
        return _csv([["index", "coefficient"]] + [[e.offset + i, c] for i, c in enumerate(coeffs)])
    lines = [f"basis {e.basis}", f"offset {e.offset}", "coeffs [" + ", ".join(coeffs) + "]"]
    for name, cs in alternatives.items():
        flag = " (disagrees)" if name in e.discrepancies else ""
        lines.append(f"route {name}: [" + ", ".join(cs) + "]" + flag)
    return "\n".join(lines)


_EQ = re.compile(r"eq(\(y\*t\))?([+-]1)?")
_TPOW = re.compile(r"t\^(-?\d+)")


def parse_functional(name: str, ctx: QContext, N: int, y: Optional[Fraction] = None) -> Series:
    """Series named by ``name`` through ``t**N``."""
    name = name.replace(" ", "")
    match = _EQ.fullmatch(name)
    if match:
        f = e_q_series(ctx, N)
        if match.group(1):
            if y is None:
                raise UsageError(f"{name} needs --y")
            f = f.scale(y)
        if match.group(2):
            f = f + int(match.group(2))
        return f
    match = _TPOW.fullmatch(name)
    if match:
        k = int(match.group(1))
        return Series.monomial(ctx, k, max(N, k))
    families = {"bern": "bernoulli", "euler": "euler", "geno": "genocchi"}
    head, _, kind = name.partition("-")
    if head in families and kind in ("det", "g"):
        fam = make_family(families[head], ctx)
        return fam.det_series(N) if kind == "det" else fam.g_series(N)
    raise UsageError(f"unknown functional {name!r}")


def cmd_functional(args) -> str:
    ctx = QContext(args.q)
    p = Poly(ctx, args.p)
    f = parse_functional(args.f, ctx, max(p.degree, 0), args.y)
    value = format_rational(apply(f, p))
    if args.format == "json":
        return json.dumps({"f": args.f, "q": format_rational(args.q), "p": poly_to_json(p), "value": value}, indent=2)
    if args.format == "csv":
        return _csv([["f", "value"], [args.f, value]])
    return value


def _q_str(q: Fraction) -> str:
    return format_rational(q)


def verdict_records(v: AuditVerdict) -> list[dict]:
    out = []
    for r in v.variants:
        out.append(
            {
                "identity": v.identity,
                "variant": r.variant,
                "status": r.status,
                "grid": [[_q_str(q), n, m] for q, n, m in r.grid],
                "counterexample": None if r.counterexample is None else r.counterexample.to_json(),
                "failures": r.failures,
                "stable": r.stable,
                "per_q": {_q_str(q): s for q, s in r.per_q},
            }
        )
    return out


def verdict_json(v: AuditVerdict) -> dict:
    return {
        "identity": v.identity,
        "description": v.description,
        "status": v.status,
        "resolved_variant": v.resolved_variant,
        "variants": verdict_records(v),
    }


def verdict_text(v: AuditVerdict) -> str:
    head = f"{v.identity}: {v.status}"
    if v.resolved_variant is not None:
        head += f" (verified variant: {v.resolved_variant})"
    lines = [head, f"  {v.description}"]
    for r in v.variants:
        label = r.variant or "-"
        line = f"  [{label}] {r.status} on {r.cells} cells"
        if r.failures:
            line += f", {r.failures} failing checks"
        lines.append(line)
        if not r.stable:
            per_q = ", ".join(f"q={_q_str(q)}: {s}" for q, s in r.per_q)
            lines.append(f"    UNSTABLE across q: {per_q}")
        c = r.counterexample
        if c is not None:
            where = f"q={_q_str(c.q)}"
            if c.n is not None:
                where += f" n={c.n}"
            if c.m is not None:
                where += f" m={c.m}"
            extra = "".join(f" {k}={val}" for k, val in c.inputs)
            lines.append(f"    counterexample {where}{extra}")
            lines.append(f"      lhs = {c.lhs}")
            lines.append(f"      rhs = {c.rhs}")
    return "\n".join(lines)


def cmd_audit(args) -> str:
    if args.list:
        return "\n".join(f"{ident.id}\t{ident.description}" for ident in REGISTRY.values())
    grid = args.q_grid if args.q_grid is not None else DEFAULT_Q_GRID
    cfg = RunConfig(
        q_grid=tuple(grid),
        nmax=10 if args.n is None else args.n,
        mmax=3 if args.m is None else args.m,
        truncation_margin=args.truncation_margin,
        format=args.format,
        output=args.output,
        include_classical=args.q_grid is None,
    )
    ids = None if args.all else args.identity
    try:
        verdicts = run_audit(cfg, ids, jobs=args.jobs)
    except KeyError as exc:
        raise UsageError(f"unknown identity: {exc.args[0]}") from None
    if args.format == "json":
        return json.dumps([verdict_json(v) for v in verdicts], indent=2)
    if args.format == "csv":
        rows = [["identity", "variant", "status", "cells", "failures", "stable", "q", "n", "m", "lhs", "rhs"]]
        for v in verdicts:
            for r in v.variants:
                c = r.counterexample
                rows.append(
                    [v.identity, r.variant or "", r.status, r.cells, r.failures, r.stable]
                    + ([_q_str(c.q), c.n, c.m, c.lhs, c.rhs] if c else ["", "", "", "", ""])
                )
        return _csv(rows)
    return "\n".join(verdict_text(v) for v in verdicts)


def _csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(["" if x is None else x for x in row] for row in rows)
    return buf.getvalue().rstrip("\n")


COMMANDS = {
    "table": cmd_table,
    "poly": cmd_poly,
    "expand": cmd_expand,
    "functional": cmd_functional,
    "audit": cmd_audit,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        text = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"qumbral: error: {exc}", file=sys.stderr)
        return 1
    except ConsistencyError as exc:
        print(f"qumbral: internal consistency check failed: {exc}", file=sys.stderr)
        return 2
    except (QUmbralError, ValueError) as exc:
        print(f"qumbral: error: {exc}", file=sys.stderr)
        return 1
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
