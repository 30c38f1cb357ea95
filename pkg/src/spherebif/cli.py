"""Command-line front end.

Subcommands: decompose, spectrum, levels, bif, classify, search, selftest.
Output is byte-deterministic for a given input and version. Exit codes:
0 success, 1 malformed input, 2 invariant violation, 3 route mismatch or
theorem-verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import MalformedInput, SpherebifError
from .report import (
    canonical_json,
    render_text,
    report_bif,
    report_classify,
    report_decompose,
    report_levels,
    report_search,
    report_spectrum,
)
from .selftest import run_selftest
from .spectrum import parse_level
from .system import parse_spec


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spherebif",
        description=(
            "Exact bifurcation-index arithmetic and continuum classification "
            "for symmetric elliptic systems on spheres."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, spec=True, level=False, m_max=False, mu_max=False):
        if spec:
            p.add_argument("--spec", required=True, help="path to the system JSON record")
        if level:
            p.add_argument("--level", required=True, help="level label: +m, -m or 0")
        if m_max:
            p.add_argument("--m-max", type=int, default=6, help="largest harmonic index (default 6)")
        if mu_max:
            p.add_argument("--mu-max", type=int, default=6, help="search depth (default 6)")
        p.add_argument("--format", choices=("text", "json"), default="text")

    common(sub.add_parser("decompose", help="isotypic multiplicity tables"), m_max=True)
    common(sub.add_parser("spectrum", help="exact spectrum table at a level"), level=True, m_max=True)
    common(sub.add_parser("levels", help="candidate bifurcation level set"), m_max=True)
    common(sub.add_parser("bif", help="bifurcation index by all routes"), level=True)
    common(sub.add_parser("classify", help="full report with verdicts"), m_max=True, mu_max=True)
    common(sub.add_parser("search", help="bounded-pattern search"), mu_max=True)
    selftest = sub.add_parser("selftest", help="run the invariant suite")
    selftest.add_argument("--grid", choices=("small", "full"), default="small")
    selftest.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def _load_spec(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            document = json.load(fh)
    except OSError as exc:
        raise MalformedInput(f"cannot read spec file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"spec file {path} is not valid JSON: {exc}") from exc
    return parse_spec(document)


def _run(args) -> dict:
    if args.command == "selftest":
        return run_selftest(args.grid)
    spec = _load_spec(args.spec)
    if args.command == "decompose":
        return report_decompose(spec, args.m_max)
    if args.command == "spectrum":
        return report_spectrum(spec, parse_level(spec.N, args.level), args.m_max)
    if args.command == "levels":
        return report_levels(spec, args.m_max)
    if args.command == "bif":
        return report_bif(spec, parse_level(spec.N, args.level))
    if args.command == "classify":
        return report_classify(spec, args.m_max, args.mu_max)
    if args.command == "search":
        return report_search(spec, args.mu_max)
    raise MalformedInput(f"unknown command {args.command!r}")


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        report = _run(args)
    except SpherebifError as exc:
        print(f"error[{type(exc).__name__}] {args.command}: {exc}", file=sys.stderr)
        return exc.exit_code
    if args.format == "json":
        print(canonical_json(report))
    else:
        print(render_text(report), end="")
    return 0


if __name__ == "__main__":
    sys.exit(main())
