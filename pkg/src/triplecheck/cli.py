"""Command-line front end: ``catalog``, ``verify`` and ``dump``.

Exit codes: 0 all verdicts pass, 1 some verdict fails, 2 usage error,
3 malformed or unknown algebra, 4 output could not be written.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__, catalog
from .algebra import AlgebraError, AlgebraFormatError, classify
from .fileformat import dumps_algebra, load_algebra
from .report import to_json, to_text
from .verifier import SuiteError, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_ALGEBRA, EXIT_IO = 0, 1, 2, 3, 4


class _Exit(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def resolve_algebra(ref: str):
    """Catalog name or path to an algebra file; returns (algebra, params)."""
    if ref in catalog.CATALOG:
        a = catalog.get(ref)
        return a, None
    path = Path(ref)
    if not path.exists():
        raise _Exit(EXIT_ALGEBRA, f"unknown algebra {ref!r}: not a catalog name or an existing file")
    try:
        return load_algebra(path)
    except AlgebraFormatError as exc:
        raise _Exit(EXIT_ALGEBRA, f"malformed algebra file {ref}: {exc}") from None
    except OSError as exc:
        raise _Exit(EXIT_ALGEBRA, f"cannot read {ref}: {exc.strerror}") from None


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        Path(out).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise _Exit(EXIT_IO, f"cannot write {out}: {exc.strerror}") from None


def cmd_catalog(args) -> int:
    rows = []
    for name in catalog.CATALOG:
        a = catalog.get(name)
        props = classify(a)
        rows.append({"name": name, "dim": a.dim, "kind": a.kind, "unital": a.is_unital,
                     "properties": props.holding()})
    if args.format == "json":
        _emit(json.dumps(rows, indent=2) + "\n", args.out)
    else:
        lines = [f"{r['name']:<18} dim={r['dim']:<3} {r['kind']:<8} {', '.join(r['properties'])}" for r in rows]
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _suite_list(raw: list[str] | None) -> list[str]:
    if not raw:
        return ["all"]
    return [s.strip() for item in raw for s in item.split(",") if s.strip()]


def cmd_verify(args) -> int:
    algebra, params = resolve_algebra(args.algebra)
    try:
        report = run_suite(
            algebra,
            _suite_list(args.suite),
            mode=args.mode,
            samples=args.samples,
            seed=args.seed,
            params=params,
        )
    except SuiteError as exc:
        raise _Exit(EXIT_USAGE, str(exc)) from None
    except AlgebraError as exc:
        raise _Exit(EXIT_ALGEBRA, str(exc)) from None
    _emit(to_json(report) if args.format == "json" else to_text(report), args.out)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_dump(args) -> int:
    algebra, params = resolve_algebra(args.algebra)
    _emit(dumps_algebra(algebra, params), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="triplecheck", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", help="list built-in algebras")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("verify", help="run identity suites")
    p.add_argument("--algebra", required=True, help="catalog name or algebra file path")
    p.add_argument("--suite", action="append",
                   help="suite id or group (all, core, operator, lts, structure); repeatable or comma-separated")
    p.add_argument("--mode", choices=("exhaustive", "random"),
                   help="default: exhaustive where the tuple count allows")
    p.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("dump", help="write an algebra in the file format")
    p.add_argument("--algebra", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_dump)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _Exit as exc:
        print(f"triplecheck: {exc}", file=sys.stderr)
        return exc.code
