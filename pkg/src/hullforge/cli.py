"""Command-line front end: ``construct``, ``verify-tables`` and ``sweep``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .constructions import THEOREMS
from .errors import HullforgeError, VerificationError
from .report import RunReport, run_construct, run_sweep, run_tables

EXIT_OK, EXIT_ERROR, EXIT_PARAMS, EXIT_MISMATCH = 0, 1, 2, 3


def _q_list(values: list[str]) -> list[int]:
    out: list[int] = []
    for v in values:
        out.extend(int(x) for x in v.split(",") if x.strip())
    return out


def _table_id(value: str) -> str:
    if value not in ("2", "3", "4"):
        raise argparse.ArgumentTypeError(f"no table {value!r}; choose 2, 3 or 4")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hullforge", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("json", "csv", "text"), default="text")
        p.add_argument("--out", type=Path, help="write the report here instead of stdout")

    c = sub.add_parser("construct", help="build and verify one instance")
    c.add_argument("--theorem", required=True, choices=THEOREMS)
    c.add_argument("--q", type=int, required=True)
    for name in ("m", "n", "k", "l"):
        c.add_argument(f"--{name}", type=int)
    common(c)

    t = sub.add_parser("verify-tables", help="reproduce the tabulated codes")
    t.add_argument("tables", nargs="*", type=_table_id, metavar="TABLE", help="any of 2, 3, 4 (default: all)")
    t.add_argument("--scope", choices=("fast", "full"), default="fast")
    common(t)

    s = sub.add_parser("sweep", help="verify every legal parameter tuple of a construction")
    s.add_argument("--theorem", required=True, choices=THEOREMS)
    s.add_argument("--q", action="append", required=True, help="alphabet parameter(s), repeat or comma-separate")
    s.add_argument("--jobs", type=int, default=1)
    common(s)
    return parser


def _emit(report: RunReport, fmt: str, out: Path | None) -> None:
    text = report.render(fmt)
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "construct":
            params = {k: getattr(args, k) for k in ("q", "m", "n", "k", "l") if getattr(args, k) is not None}
            report = run_construct(args.theorem, params)
        elif args.command == "verify-tables":
            report = run_tables(args.tables or ("2", "3", "4"), args.scope)
        else:
            report = run_sweep(args.theorem, _q_list(args.q), jobs=args.jobs)
    except VerificationError as exc:
        print(f"hullforge: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (HullforgeError, ValueError) as exc:
        print(f"hullforge: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PARAMS if isinstance(exc, ValueError) else EXIT_ERROR
    _emit(report, args.format, args.out)
    if not report.ok:
        for it in report.items:
            if it["verdict"] != "PASS":
                print(f"hullforge: FAIL {it['theorem']} {it['params']}: {'; '.join(it.get('reasons', []))}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK
