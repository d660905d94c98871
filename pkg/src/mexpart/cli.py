"""Command-line front end.

Subcommands: ``count``, ``enumerate``, ``map``, ``gf``, ``verify``,
``table``.  Objects stream one per line in the textual grammar (partition
``8 7 3 2 1 1``, overpartition ``~6 ~4 3``, colored partition ``5_2 1_1``,
empty object ``-``), so maps compose via shell pipes.  Exit codes: 0 on
success, 1 on verification failure, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import io
import json
import os
import sys
from contextlib import redirect_stderr, redirect_stdout
from typing import Iterable

from . import oracle
from .bijections import (
    even_forward,
    even_inverse,
    mex_forward,
    mex_inverse,
    odd_forward,
    odd_inverse,
)
from .families import ColoredPartition, Family, Overpartition, count_family, enumerate_family
from .partitions import Partition
from .qseries import DEFAULT_DEGREE, gf_pmex

__all__ = ["main", "run"]

DEGREE_ENV_VAR = "MEX_DEFAULT_DEGREE"

_MAPS = {
    "t5": mex_forward,
    "t5inv": mex_inverse,
    "odd": odd_forward,
    "oddinv": odd_inverse,
    "even": even_forward,
    "eveninv": even_inverse,
}
# domain type parser per map id
_PARSERS = {
    "t5": lambda text, r: Partition.from_text(text),
    "t5inv": lambda text, r: Overpartition.from_text(text),
    "odd": lambda text, r: Partition.from_text(text),
    "oddinv": lambda text, r: Overpartition.from_text(text),
    "even": ColoredPartition.from_text,
    "eveninv": lambda text, r: Overpartition.from_text(text),
}


class CliError(Exception):
    """Usage-level failure; reported on stderr with exit code 2."""


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mexpart",
        description="Exact counting, enumeration, and bijections for partition mex runs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    families = ("p", "pbar", "pmex", "obar", "pe", "po2")

    cmd = sub.add_parser("count", help="print the size of a family at one weight")
    cmd.add_argument("--family", required=True, choices=families)
    cmd.add_argument("--n", required=True, type=int)
    cmd.add_argument("--r", type=int)

    cmd = sub.add_parser("enumerate", help="print every member of a family, one per line")
    cmd.add_argument("--family", required=True, choices=families)
    cmd.add_argument("--n", required=True, type=int)
    cmd.add_argument("--r", type=int)
    cmd.add_argument("--format", choices=("text", "jsonl"), default="text")

    cmd = sub.add_parser("map", help="apply a bijection to objects read from stdin")
    cmd.add_argument("--bijection", required=True, choices=sorted(_MAPS))
    cmd.add_argument("--r", required=True, type=int)
    cmd.add_argument("--format", choices=("text", "jsonl"), default="text")

    cmd = sub.add_parser("gf", help="print generating-function coefficients 0..degree")
    cmd.add_argument("--r", required=True, type=int)
    cmd.add_argument("--degree", type=int)

    cmd = sub.add_parser("verify", help="run the count and round-trip oracles")
    cmd.add_argument("--max-n", required=True, type=int)
    cmd.add_argument("--max-r", required=True, type=int)

    cmd = sub.add_parser("table", help="recompute one of the six reference tables")
    cmd.add_argument("--id", required=True, type=int, choices=oracle.TABLE_IDS)

    return parser


def _family_from_args(args) -> Family:
    try:
        if args.family in ("p", "pbar"):
            if args.r is not None:
                raise ValueError(f"family {args.family!r} takes no --r")
            return Family(args.family)
        if args.r is None:
            raise ValueError(f"family {args.family!r} requires --r")
        return Family(args.family, args.r)
    except ValueError as exc:
        raise CliError(str(exc)) from exc


def _record(obj) -> str:
    if isinstance(obj, Partition):
        payload = {"parts": list(obj.parts)}
    elif isinstance(obj, Overpartition):
        payload = {"overlined": list(obj.overlined), "plain": list(obj.plain)}
    else:
        payload = {"parts": [[size, color] for size, color in obj.parts]}
    return json.dumps(payload, separators=(",", ":"))


def _emit(obj, fmt: str) -> None:
    print(_record(obj) if fmt == "jsonl" else obj.text())


def _iter_lines(stdin) -> Iterable[str]:
    if stdin is None:
        return ()
    if isinstance(stdin, str):
        return stdin.splitlines()
    return (line.rstrip("\n") for line in stdin)


def _default_degree() -> int:
    raw = os.environ.get(DEGREE_ENV_VAR)
    if raw is None:
        return DEFAULT_DEGREE
    try:
        degree = int(raw)
    except ValueError:
        raise CliError(f"{DEGREE_ENV_VAR} must be a decimal integer, got {raw!r}")
    if degree < 0:
        raise CliError(f"{DEGREE_ENV_VAR} must be nonnegative, got {degree}")
    return degree


def _cmd_count(args, stdin) -> int:
    family = _family_from_args(args)
    try:
        print(count_family(family, args.n))
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    return 0


def _cmd_enumerate(args, stdin) -> int:
    family = _family_from_args(args)
    try:
        members = enumerate_family(family, args.n)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    for obj in members:
        _emit(obj, args.format)
    return 0


def _cmd_map(args, stdin) -> int:
    if args.r < 1:
        raise CliError("--r must be a positive integer")
    if args.bijection in ("odd", "oddinv") and args.r % 2 == 0:
        raise CliError(f"bijection {args.bijection!r} requires odd --r")
    if args.bijection in ("even", "eveninv") and args.r % 2 == 1:
        raise CliError(f"bijection {args.bijection!r} requires even --r")
    apply_map = _MAPS[args.bijection]
    parse = _PARSERS[args.bijection]
    for lineno, raw in enumerate(_iter_lines(stdin), start=1):
        text = raw.strip()
        if not text:
            continue
        try:
            obj = parse(text, args.r)
            image = apply_map(obj, args.r)
        except ValueError as exc:
            raise CliError(f"line {lineno}: {exc}") from exc
        _emit(image, args.format)
    return 0


def _cmd_gf(args, stdin) -> int:
    degree = args.degree if args.degree is not None else _default_degree()
    try:
        series = gf_pmex(args.r, degree)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    for n, value in enumerate(series.coeffs):
        print(f"{n}\t{value}")
    return 0


def _cmd_verify(args, stdin) -> int:
    try:
        counts = oracle.verify_counts(args.max_n, args.max_r)
        trips = oracle.verify_roundtrips(args.max_n, args.max_r)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    for report in (counts, trips):
        for check in report.failures():
            print(check.describe())
    print(f"counts: {len(counts.checks)} checks, {len(counts.failures())} failures")
    print(f"roundtrips: {len(trips.checks)} checks, {len(trips.failures())} failures")
    return 0 if counts.overall and trips.overall else 1


def _cmd_table(args, stdin) -> int:
    print(oracle.reproduce_table(args.id), end="")
    return 0


_COMMANDS = {
    "count": _cmd_count,
    "enumerate": _cmd_enumerate,
    "map": _cmd_map,
    "gf": _cmd_gf,
    "verify": _cmd_verify,
    "table": _cmd_table,
}


def run(argv, stdin=None) -> tuple[int, str, str]:
    """Execute one invocation and return (exit code, stdout text, stderr text).

    ``stdin`` may be None, a string, or an iterable of lines; only ``map``
    reads it.
    """
    out = io.StringIO()
    err = io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        try:
            args = _build_parser().parse_args(list(argv))
            code = _COMMANDS[args.command](args, stdin)
        except SystemExit as exc:  # argparse reports its own usage errors
            code = exc.code if isinstance(exc.code, int) else 2
        except CliError as exc:
            print(f"error: {exc}", file=sys.stderr)
            code = 2
    return code, out.getvalue(), err.getvalue()


def main() -> int:
    code, out, err = run(sys.argv[1:], sys.stdin)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
