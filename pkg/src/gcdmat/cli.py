"""
Command-line interface.

    gcdmat table   --g NAME --n N [--summatory | --invert] [--format csv|json|latex]
    gcdmat build   --kind KIND [--g NAME] --n N [--format csv|json|latex]
    gcdmat det     --kind KIND [--g NAME] --n N
    gcdmat verify  --check ID|all [--g NAME] (--n N | --sweep MAX) [--timing]
    gcdmat explore --left FN --right FN --op add|sub|mul --n N [--emit-matrix] [--timing]

Exit status: 0 success, 1 verification failure, 2 usage error, 3 size cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import arithfun, limits, matbuild
from .errors import CapExceededError, GcdMatError
from .exactla import det_bareiss
from .explore import COMBINERS, ExploreSpec, explore_problem1
from .verify import all_passed, list_checks, verify

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_CAP = 3

MATRIX_KINDS = ("classic", "t1", "t2", "t3", "hform", "C", "D", "Dprime", "G", "diag")
FORMATS = ("csv", "json", "latex")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


# -- output formats ---------------------------------------------------------

def matrix_to_csv(m: matbuild.IntMatrix) -> str:
    return "".join(",".join(str(v) for v in row) + "\n" for row in m.rows)


def matrix_from_csv(text: str) -> matbuild.IntMatrix:
    rows = [line.split(",") for line in text.splitlines() if line.strip()]
    return matbuild.matrix([int(v) for v in row] for row in rows)


def matrix_to_json(m: matbuild.IntMatrix) -> str:
    return json.dumps({
        "n_rows": m.n_rows,
        "n_cols": m.n_cols,
        "entries": [[str(v) for v in row] for row in m.rows],
    }) + "\n"


def matrix_to_latex(m: matbuild.IntMatrix) -> str:
    lines = ["\\begin{tabular}{" + "r" * m.n_cols + "}"]
    for k, row in enumerate(m.rows):
        end = " \\\\" if k < m.n_rows - 1 else ""
        lines.append(" & ".join(str(v) for v in row) + end)
    lines.append("\\end{tabular}")
    return "\n".join(lines) + "\n"


def format_matrix(m, fmt):
    return {"csv": matrix_to_csv, "json": matrix_to_json, "latex": matrix_to_latex}[fmt](m)


def format_table(t: arithfun.FunctionTable, fmt: str) -> str:
    if fmt == "csv":
        # one value per line: the same layout load_custom reads
        return "".join(f"{v}\n" for v in t.values)
    if fmt == "json":
        return json.dumps({"name": t.name, "n": t.n, "values": [str(v) for v in t.values]}) + "\n"
    lines = ["\\begin{tabular}{rr}", "$k$ & $g(k)$ \\\\"]
    lines += [f"{k} & {v}" + (" \\\\" if k < t.n else "") for k, v in enumerate(t.values, start=1)]
    lines.append("\\end{tabular}")
    return "\n".join(lines) + "\n"


# -- subcommands ------------------------------------------------------------

def _check_cap(what, n, cap):
    if n < 1:
        raise UsageError(f"{what}: --n must be positive, got {n}")
    if n > cap:
        raise CapExceededError(what, n, cap)


def _need_g(args):
    if args.g is None:
        raise UsageError(f"--kind {args.kind} needs --g")
    return arithfun.resolve(args.g, args.n)


def _matrix_for(args) -> matbuild.IntMatrix:
    kind = args.kind
    if kind in matbuild.INDICATOR_KINDS:
        return matbuild.build_indicator(kind, args.n)
    g = _need_g(args)
    if kind == "classic":
        return matbuild.build_classic_gcd(g)
    if kind == "G":
        return matbuild.build_G(g)
    if kind == "diag":
        return matbuild.build_diag(g)
    if kind == "hform":
        return matbuild.build_hform(g)[0]
    return matbuild.build_theorem(kind.upper(), g)[0]


def cmd_table(args, out):
    _check_cap("table", args.n, limits.DEFAULT_TABLE_CAP)
    t = arithfun.resolve(args.g, args.n)
    if args.summatory:
        t = arithfun.summatory(t)
    elif args.invert:
        t = arithfun.mobius_invert(t)
    out.write(format_table(t, args.format))
    return EXIT_OK


def cmd_build(args, out):
    _check_cap("build", args.n, limits.DEFAULT_MATRIX_CAP)
    out.write(format_matrix(_matrix_for(args), args.format))
    return EXIT_OK


def cmd_det(args, out):
    _check_cap("det", args.n, limits.det_cap())
    out.write(f"{det_bareiss(_matrix_for(args))}\n")
    return EXIT_OK


def cmd_verify(args, out):
    if args.n is None and args.sweep is None:
        raise UsageError("verify needs --n or --sweep")
    infos = {c.check_id: c for c in list_checks()}
    if args.check == "all":
        ids = sorted(infos)
    elif args.check in infos:
        ids = [args.check]
    else:
        raise UsageError(f"unknown check {args.check!r}; known: all, {', '.join(infos)}")
    top = args.sweep if args.sweep is not None else args.n
    if top < 1:
        raise UsageError("--n / --sweep must be positive")
    ns = range(1, top + 1) if args.sweep is not None else [top]
    det_limit = limits.det_cap()
    caps = {c: det_limit if infos[c].kind == "det" else limits.DEFAULT_MATRIX_CAP for c in ids}
    for c in ids:
        _check_cap(f"verify {c}", top, caps[c])
    g = arithfun.resolve(args.g, top)
    reports = [verify(c, g, n, caps[c]) for c in ids for n in ns]
    for r in reports:
        out.write(r.to_json(timing=args.timing) + "\n")
    return EXIT_OK if all_passed(reports) else EXIT_FAILED


def cmd_explore(args, out):
    _check_cap("explore", args.n, limits.det_cap())
    left = arithfun.resolve(args.left, args.n).renamed(args.left)
    right = arithfun.resolve(args.right, args.n).renamed(args.right)
    report = explore_problem1(ExploreSpec(left, right, args.op, args.n), emit_matrix=args.emit_matrix, cap=None)
    out.write(report.to_json(timing=args.timing) + "\n")
    return EXIT_OK if report.consistent else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="gcdmat", description="Generalized GCD matrices: builders, determinants and identity checks.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    t = sub.add_parser("table", help="tabulate an arithmetical function")
    t.add_argument("--g", required=True, help="builtin name, custom:PATH, optionally with -summatory/-invert")
    t.add_argument("--n", type=int, required=True)
    mode = t.add_mutually_exclusive_group()
    mode.add_argument("--summatory", action="store_true", help="emit sum of g(d) over d | k")
    mode.add_argument("--invert", action="store_true", help="emit the Moebius inverse mu * g")
    t.add_argument("--format", choices=FORMATS, default="csv")

    b = sub.add_parser("build", help="emit a matrix")
    b.add_argument("--kind", choices=MATRIX_KINDS, required=True)
    b.add_argument("--g")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--format", choices=FORMATS, default="csv")

    d = sub.add_parser("det", help="exact determinant of a matrix")
    d.add_argument("--kind", choices=MATRIX_KINDS, required=True)
    d.add_argument("--g")
    d.add_argument("--n", type=int, required=True)

    v = sub.add_parser("verify", help="run identity checks, one JSON report per line")
    v.add_argument("--check", required=True, help="check id or 'all'")
    v.add_argument("--g", default="phi", help="function table (default: phi)")
    v.add_argument("--n", type=int)
    v.add_argument("--sweep", type=int, metavar="MAX", help="run every n in 1..MAX")
    v.add_argument("--timing", action="store_true", help="report real elapsed_ms instead of 0")

    e = sub.add_parser("explore", help="determinant, rank and structure of [left(i) op right(gcd(i,j))]")
    e.add_argument("--left", required=True)
    e.add_argument("--right", required=True)
    e.add_argument("--op", choices=tuple(COMBINERS), required=True)
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--emit-matrix", action="store_true")
    e.add_argument("--timing", action="store_true")
    return p


_COMMANDS = {
    "table": cmd_table,
    "build": cmd_build,
    "det": cmd_det,
    "verify": cmd_verify,
    "explore": cmd_explore,
}


def run(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        return _COMMANDS[args.command](args, out)
    except SystemExit as exc:  # --help
        return exc.code if isinstance(exc.code, int) else EXIT_OK
    except CapExceededError as exc:
        err.write(f"gcdmat: cap exceeded: {exc}\n")
        return EXIT_CAP
    except (UsageError, GcdMatError, ValueError) as exc:
        err.write(f"gcdmat: {exc}\n")
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
