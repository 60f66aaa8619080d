"""Command-line interface: ``vsrep diagnose | heart | catalog | selftest``.

Exit codes: 0 very simple, 10 not very simple, 2 undecided in the requested
mode (minimal-submodule cap overflow), 1 bad input.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import catalog as cat
from .heart import heart
from .io import ParseError, diagnosis_report, dumps, file_digest, read_input
from .meataxe import DEFAULT_CAP, MinimalCountExceedsCap
from .normalg import very_simple_exact, very_simple_randomized
from .perm import PermGroup
from .rep import Representation, perm_to_rep

EXIT_VERY_SIMPLE = 0
EXIT_PARSE = 1
EXIT_CAP = 2
EXIT_NOT_VERY_SIMPLE = 10


def _default_seed() -> int:
    raw = os.environ.get("VSREP_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise ParseError(f"VSREP_SEED must be an integer, got {raw!r}") from None


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _resolve(args) -> tuple[PermGroup | Representation, str]:
    if args.catalog:
        name, *params = args.catalog
        try:
            obj = cat.build(name, *(int(p) for p in params))
        except ValueError as exc:
            raise ParseError(str(exc)) from exc
        return obj, "catalog:" + " ".join(args.catalog)
    if not args.input:
        raise ParseError("give an input file or --catalog NAME [PARAM]")
    return read_input(args.input), file_digest(args.input)


def _as_rep(obj, use_heart: bool) -> Representation:
    if isinstance(obj, Representation):
        if use_heart:
            raise ParseError("--heart applies to permutation groups only")
        return obj
    if use_heart:
        try:
            return heart(obj).rep
        except ValueError as exc:
            raise ParseError(str(exc)) from exc
    return perm_to_rep(obj)


def cmd_diagnose(args) -> int:
    obj, source = _resolve(args)
    rep = _as_rep(obj, args.heart)
    if args.heart:
        source += " (heart)"
    seed = args.seed if args.seed is not None else _default_seed()
    try:
        if args.mode == "exact":
            d = very_simple_exact(rep, seed, args.cap, args.all_witnesses)
        else:
            d = very_simple_randomized(rep, seed, args.trials, args.all_witnesses)
    except MinimalCountExceedsCap as exc:
        report = {"input": source, "dim": rep.dim, "mode": args.mode, "seed": seed, "verdict": "Undecided", "error": str(exc)}
        _emit(dumps(report), args.out)
        return EXIT_CAP
    d.verify(rep)
    _emit(dumps(diagnosis_report(d, rep, source)), args.out)
    return EXIT_VERY_SIMPLE if d.very_simple else EXIT_NOT_VERY_SIMPLE


def cmd_heart(args) -> int:
    obj, _source = _resolve(args)
    if not isinstance(obj, PermGroup):
        raise ParseError("the heart needs a permutation group")
    try:
        h = heart(obj)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    _emit(dumps(h.rep.to_json()), args.out)
    return 0


def cmd_catalog(args) -> int:
    if args.action == "list":
        for name in cat.names():
            e = cat.CATALOG[name]
            params = f" <{e.params}>" if e.params else ""
            sys.stdout.write(f"{name}{params}  [{e.kind}]  {e.description}\n")
        return 0
    if not args.name:
        raise ParseError("catalog build needs a name")
    try:
        obj = cat.build(args.name, *args.params)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    _emit(dumps(obj.to_json()), args.out)
    return 0


def cmd_selftest(args) -> int:
    from .selftest import run_selftest

    return 0 if run_selftest(quick=args.quick, stream=sys.stdout) else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="vsrep", description="Decide whether a representation over a finite field is very simple.")
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("diagnose", help="run the very-simplicity decision")
    d.add_argument("input", nargs="?", help="representation or permutation-group JSON file")
    d.add_argument("--catalog", nargs="+", metavar="NAME", help="built-in entry and its parameter")
    d.add_argument("--heart", action="store_true", help="diagnose the heart of a permutation group")
    d.add_argument("--mode", choices=["exact", "randomized"], default="exact")
    d.add_argument("--seed", type=int, default=None, help="random seed (default: $VSREP_SEED or 0)")
    d.add_argument("--trials", type=int, default=64)
    d.add_argument("--cap", type=int, default=DEFAULT_CAP, help="minimal-submodule cap per homogeneous type")
    d.add_argument("--all-witnesses", action="store_true", help="report every distinct proper closure")
    d.add_argument("--out")
    d.set_defaults(func=cmd_diagnose)

    h = sub.add_parser("heart", help="write the heart of a permutation group")
    h.add_argument("input", nargs="?")
    h.add_argument("--catalog", nargs="+", metavar="NAME")
    h.add_argument("--out")
    h.set_defaults(func=cmd_heart)

    c = sub.add_parser("catalog", help="list or build catalog entries")
    c.add_argument("action", choices=["list", "build"])
    c.add_argument("name", nargs="?")
    c.add_argument("params", nargs="*", type=int)
    c.add_argument("--out")
    c.set_defaults(func=cmd_catalog)

    s = sub.add_parser("selftest", help="run the built-in oracle and property checks")
    s.add_argument("--quick", action="store_true", help="skip the dimension-4 oracle tier")
    s.set_defaults(func=cmd_selftest)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        sys.stderr.write(f"vsrep: {exc}\n")
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
