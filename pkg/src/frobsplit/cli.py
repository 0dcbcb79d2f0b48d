"""Command-line interface.

Exit codes: 0 success and verified; 2 input error; 3 the candidate is not
a splitting; 4 unsupported decomposition or budget exhausted; 5 a
verification pass or oracle/probe comparison failed. The FROBSPLIT_BUDGET
environment variable overrides both iteration caps (Groebner pair
reductions and closure rounds); explicit flags win over the environment.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import document, frobenius, groebner
from .errors import (
    BudgetExceededError,
    InputError,
    NotASplittingError,
    UnsupportedIdealError,
    VerificationFailedError,
)
from .figures import render_hasse_figure
from .lattice import enumerate_all
from .oracle import monomial_oracle_report, probe_report
from .parsing import parse_input

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NOT_SPLITTING = 3
EXIT_UNSUPPORTED = 4
EXIT_VERIFICATION = 5


def _read_input(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_bytes(path: str | None, data: bytes):
    if path is None or path == "-":
        sys.stdout.write(data.decode("utf-8"))
    else:
        with open(path, "wb") as fh:
            fh.write(data)


def _write_text(path: str, text: str):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _apply_budgets(args):
    env = os.environ.get("FROBSPLIT_BUDGET")
    if env is not None:
        try:
            cap = int(env)
        except ValueError:
            raise InputError(f"FROBSPLIT_BUDGET must be an integer, got {env!r}")
        if cap <= 0:
            raise InputError("FROBSPLIT_BUDGET must be positive")
        groebner.DEFAULT_PAIR_BUDGET = cap
        frobenius.DEFAULT_CLOSURE_ROUNDS = cap
    if getattr(args, "budget", None) is not None:
        groebner.DEFAULT_PAIR_BUDGET = args.budget
    if getattr(args, "closure_rounds", None) is not None:
        frobenius.DEFAULT_CLOSURE_ROUNDS = args.closure_rounds


def cmd_enumerate(args) -> int:
    spec = parse_input(_read_input(args.input))
    splitting = frobenius.validate_splitting(spec.f)
    try:
        lattice = enumerate_all(splitting, parallel=args.parallel)
    except VerificationFailedError as exc:
        for failure in exc.report.failures():
            print(f"verification failed: {failure.name}: {failure.details}", file=sys.stderr)
        return EXIT_VERIFICATION
    doc = document.lattice_document(lattice, count_convention=args.count)
    _write_bytes(args.output, document.to_json_bytes(doc))
    if args.dot:
        _write_text(args.dot, document.to_dot(doc))
    if args.table:
        _write_text(args.table, document.to_table(doc))
    if args.fig:
        render_hasse_figure(doc, args.fig)
    return EXIT_OK if doc["verification"]["passed"] else EXIT_VERIFICATION


def cmd_oracle_monomial(args) -> int:
    report = monomial_oracle_report(args.nvars, args.p)
    _write_bytes(args.output, (json.dumps(report, sort_keys=True, indent=2) + "\n").encode())
    return EXIT_OK if report["agree"] else EXIT_VERIFICATION


def cmd_probe(args) -> int:
    spec = parse_input(_read_input(args.input))
    splitting = frobenius.validate_splitting(spec.f)
    lattice = enumerate_all(splitting)
    report = probe_report(
        splitting, lattice, count=args.probes, seed=args.seed, max_deg=args.max_deg
    )
    _write_bytes(args.output, (json.dumps(report, sort_keys=True, indent=2) + "\n").encode())
    return EXIT_OK if report["passed"] else EXIT_VERIFICATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="frobsplit",
        description="Enumerate all compatibly split subvarieties of affine "
        "space for a given Frobenius splitting over F_p.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    enum = sub.add_parser("enumerate", help="enumerate and verify the full lattice")
    enum.add_argument("-i", "--input", help="session file (default: stdin)")
    enum.add_argument("-o", "--output", help="JSON output path (default: stdout)")
    enum.add_argument("--dot", help="write the Hasse diagram as a DOT file")
    enum.add_argument("--fig", help="render the Hasse diagram to an image file")
    enum.add_argument("--table", help="write the member table as TSV")
    enum.add_argument(
        "--count",
        choices=("all", "proper-nonzero"),
        default="all",
        help="headline counting convention (default: all)",
    )
    enum.add_argument("--parallel", action="store_true", help="process branches concurrently")
    enum.add_argument("--budget", type=int, help="Groebner pair-reduction cap")
    enum.add_argument("--closure-rounds", type=int, help="compatible-closure round cap")
    enum.set_defaults(func=cmd_enumerate)

    oracle = sub.add_parser(
        "oracle-monomial",
        help="exhaustive squarefree-monomial oracle vs enumeration (n <= 3)",
    )
    oracle.add_argument("-n", "--nvars", type=int, required=True)
    oracle.add_argument("-p", type=int, required=True, dest="p")
    oracle.add_argument("-o", "--output", help="JSON report path (default: stdout)")
    oracle.add_argument("--budget", type=int, help="Groebner pair-reduction cap")
    oracle.set_defaults(func=cmd_oracle_monomial)

    probe = sub.add_parser(
        "probe", help="seeded random closure probes against the enumerated lattice"
    )
    probe.add_argument("-i", "--input", help="session file (default: stdin)")
    probe.add_argument("-o", "--output", help="JSON report path (default: stdout)")
    probe.add_argument("--probes", type=int, default=100)
    probe.add_argument("--seed", type=int, default=0)
    probe.add_argument("--max-deg", type=int, default=3)
    probe.add_argument("--budget", type=int, help="Groebner pair-reduction cap")
    probe.set_defaults(func=cmd_probe)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _apply_budgets(args)
        return args.func(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NotASplittingError as exc:
        print(f"NOT_A_SPLITTING: {exc}", file=sys.stderr)
        return EXIT_NOT_SPLITTING
    except UnsupportedIdealError as exc:
        print(f"UNSUPPORTED: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
