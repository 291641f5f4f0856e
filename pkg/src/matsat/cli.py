"""Command-line interface.

Exit statuses: 0 success (``contains``: pattern found), 1 ``contains``
found no occurrence, 2 usage or format error, 3 contract or verification
failure, 4 search budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog
from .catalog import UnknownMatrix, classification_report, format_report
from .classify import classify
from .core import ContractError, FormatError, Matrix, contains, format_matrix, parse_matrix
from .search import BudgetExceeded, SearchBudget, SymmetryGroup, ex_exact, sat_exact
from .witness import VerificationError, compose, construct_w, saturate, verify

EXIT_OK, EXIT_AVOIDS, EXIT_USAGE, EXIT_CONTRACT, EXIT_BUDGET = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def load_matrix(source: str) -> Matrix:
    """Resolve ``@NAME`` (catalog), ``-`` (stdin) or a file path."""
    if source.startswith("@"):
        return catalog.builtin(source[1:]).matrix
    if source == "-":
        return parse_matrix(sys.stdin.read())
    try:
        with open(source) as fh:
            return parse_matrix(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {source}: {exc.strerror}") from None


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--quiet", action="store_true", help="suppress everything but the result")
    common.add_argument("--max-cells", type=_positive_int, default=20)
    common.add_argument("--time-limit", type=float, default=None, help="seconds")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="matsat", description="Saturation of 0-1 matrix patterns.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="structural class of a pattern")
    p.add_argument("pattern")

    p = sub.add_parser("contains", parents=[common], help="find an occurrence of P in M")
    p.add_argument("matrix")
    p.add_argument("pattern")

    w = sub.add_parser("witness", help="witness construction and checks")
    wsub = w.add_subparsers(dest="witness_command", required=True)
    p = wsub.add_parser("construct", parents=[common], help="build W(P)")
    p.add_argument("pattern")
    p = wsub.add_parser("verify", parents=[common], help="witness report for M and P")
    p.add_argument("matrix")
    p.add_argument("pattern")
    p = wsub.add_parser("compose", parents=[common], help="combine horizontal and vertical witnesses")
    p.add_argument("horizontal")
    p.add_argument("vertical")
    p.add_argument("pattern")

    p = sub.add_parser("saturate", parents=[common], help="greedily saturate M for P")
    p.add_argument("matrix")
    p.add_argument("pattern")

    for name in ("sat-exact", "ex-exact"):
        p = sub.add_parser(name, parents=[common], help=f"exact {name[:2]}(P, m, n)")
        p.add_argument("pattern")
        p.add_argument("m", type=_positive_int)
        p.add_argument("n", type=_positive_int)

    p = sub.add_parser("report", parents=[common], help="classification of small permutation matrices")
    p.add_argument("--max-size", type=_positive_int, default=6)
    p.add_argument("--group", choices=[g.value for g in SymmetryGroup], default=SymmetryGroup.REFLECTIONS.value)

    sub.add_parser("list", parents=[common], help="catalog names")
    return parser


def _emit(args, data: dict, text: str):
    if args.json:
        print(json.dumps(data, indent=2))
    else:
        print(text)


def _record_text(data: dict) -> str:
    width = max(len(k) for k in data)
    return "\n".join(f"{k.ljust(width)}  {json.dumps(v) if not isinstance(v, str) else v}" for k, v in data.items())


def _run(args) -> int:
    cmd = args.command
    if cmd == "classify":
        label = classify(load_matrix(args.pattern)).to_dict()
        _emit(args, label, _record_text(label))
        return EXIT_OK

    if cmd == "contains":
        m, p = load_matrix(args.matrix), load_matrix(args.pattern)
        occ = contains(m, p)
        if occ is None:
            _emit(args, {"contains": False, "occurrence": None}, "AVOIDS")
            return EXIT_AVOIDS
        d = occ.to_dict()
        _emit(args, {"contains": True, "occurrence": d}, f"rows {d['rows']}\ncols {d['cols']}")
        return EXIT_OK

    if cmd == "witness":
        sub = args.witness_command
        if sub == "construct":
            w = construct_w(load_matrix(args.pattern))
            meta = w.to_dict()
            data = {**meta, "matrix": format_matrix(w.result).split("\n")}
            text = format_matrix(w.result)
            if not args.quiet:
                text += "\n# " + " ".join(f"{k}={json.dumps(v)}" for k, v in meta.items())
            _emit(args, data, text)
            return EXIT_OK
        if sub == "verify":
            report = verify(load_matrix(args.matrix), load_matrix(args.pattern)).to_dict()
            _emit(args, report, _record_text(report))
            return EXIT_OK
        if sub == "compose":
            out = compose(load_matrix(args.horizontal), load_matrix(args.vertical), load_matrix(args.pattern))
            _emit(args, {"matrix": format_matrix(out).split("\n")}, format_matrix(out))
            return EXIT_OK

    if cmd == "saturate":
        out = saturate(load_matrix(args.matrix), load_matrix(args.pattern))
        _emit(args, {"weight": out.weight, "matrix": format_matrix(out).split("\n")}, format_matrix(out))
        return EXIT_OK

    if cmd in ("sat-exact", "ex-exact"):
        fn = sat_exact if cmd == "sat-exact" else ex_exact
        budget = SearchBudget(max_cells=args.max_cells, time_limit=args.time_limit)
        value, m = fn(load_matrix(args.pattern), args.m, args.n, budget)
        text = format_matrix(m) if args.quiet else f"{value}\n{format_matrix(m)}"
        _emit(args, {"value": value, "matrix": format_matrix(m).split("\n")}, text)
        return EXIT_OK

    if cmd == "report":
        if args.max_size > 7:
            raise UsageError("--max-size must be at most 7")
        records = classification_report(args.max_size, SymmetryGroup(args.group))
        _emit(args, {"classes": [r.to_dict() for r in records]}, format_report(records))
        return EXIT_OK

    if cmd == "list":
        entries = {n: catalog.builtin(n).source for n in catalog.names()}
        _emit(args, entries, "\n".join(f"{n}\t{s}" for n, s in entries.items()))
        return EXIT_OK

    raise UsageError(f"unknown command {cmd}")  # pragma: no cover


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _run(args)
    except (UsageError, FormatError, UnknownMatrix) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        if exc.occurrence is not None:
            print(f"occurrence: {json.dumps(exc.occurrence.to_dict())}", file=sys.stderr)
        return EXIT_CONTRACT
    except ContractError as exc:
        print(f"contract violation: {exc}", file=sys.stderr)
        return EXIT_CONTRACT
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc} (lower bound {exc.lower_bound})", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
