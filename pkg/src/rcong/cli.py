"""``rcong`` command-line interface.

Exit codes: 0 for an affirmative answer, 1 for a negative finding (not
congruent, unsolvable, a statement falsified), 2 for usage errors.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys
from dataclasses import asdict
from typing import Any, Sequence

from . import oracle
from .classes import class_table, members_in_range
from .core import CongruenceClaim, Convention, Modulus, canonical_r
from .shift import cycle_decomposition, generated_subgroup, order, shift_permutation
from .solver import solve_linear

_INT = re.compile(r"-?\d+")


class UsageError(Exception):
    pass


def _integer(text: str) -> int:
    if not _INT.fullmatch(text):
        raise argparse.ArgumentTypeError(f"not a decimal integer: {text!r}")
    return int(text)


def _modulus(value: int) -> Modulus:
    try:
        return Modulus(value)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep or not _INT.fullmatch(lo) or not _INT.fullmatch(hi):
        raise UsageError(f"bad range {text!r}; expected lo..hi, e.g. -5..14")
    lo_i, hi_i = int(lo), int(hi)
    if lo_i > hi_i:
        raise UsageError(f"empty range {text!r}")
    return lo_i, hi_i


def _emit(fmt: str, command: str, inputs: dict[str, Any], result: dict[str, Any], text: str) -> None:
    if fmt == "json":
        print(json.dumps({"command": command, "inputs": inputs, "result": result}, indent=2, ensure_ascii=False))
    else:
        print(text)


# -- subcommands ---------------------------------------------------------------


def cmd_check(args: argparse.Namespace) -> int:
    m = _modulus(args.m)
    conv = Convention.BALANCED if args.balanced else Convention.LEAST_NONNEGATIVE
    claim = CongruenceClaim(args.a, args.b, args.r, m)
    congruent = claim.holds
    result = {
        "congruent": congruent,
        "q": claim.quotient,
        "classification": claim.kind.value,
        "canonical_r": canonical_r(args.a, args.b, m, conv),
    }
    lines = [
        f"{claim}: {'congruent' if congruent else 'not congruent'}",
        f"  witness q:    {result['q'] if congruent else '-'}",
        f"  type:         {result['classification']}",
        f"  canonical r:  {result['canonical_r']} ({conv.value})",
    ]
    inputs = {"a": args.a, "b": args.b, "r": args.r, "m": int(m), "convention": conv.value}
    _emit(args.format, "check", inputs, result, "\n".join(lines))
    return 0 if congruent else 1


def cmd_classes(args: argparse.Namespace) -> int:
    m = _modulus(args.m)
    span = _parse_range(args.range) if args.range is not None else None
    table = class_table(m, args.r)
    rows = []
    lines = [f"r-residue classes for r = {args.r} modulo {m}"]
    for a, cls in table.rows:
        row: dict[str, Any] = {"a": a, "rho": cls.rho}
        line = f"  class of {a} = {cls}"
        if span is not None:
            row["members"] = members_in_range(cls, *span)
            line += "  {" + ", ".join(map(str, row["members"])) + "}"
        rows.append(row)
        lines.append(line)
    inputs: dict[str, Any] = {"m": int(m), "r": args.r}
    if span is not None:
        inputs["range"] = list(span)
    _emit(args.format, "classes", inputs, {"rows": rows}, "\n".join(lines))
    return 0


def cmd_perm(args: argparse.Namespace) -> int:
    m = _modulus(args.m)
    f = shift_permutation(m, args.r)
    cycles = cycle_decomposition(f)
    subgroup = generated_subgroup(f)
    mapping = f.mapping()
    width = len(str(m - 1))
    top = " ".join(str(i).rjust(width) for i in range(m))
    bottom = " ".join(str(j).rjust(width) for j in mapping)
    result = {
        "shift": f.shift,
        "identity": f.is_identity,
        "mapping": mapping,
        "cycles": [list(c) for c in cycles],
        "order": order(f),
        "subgroup_size": len(subgroup),
        "subgroup_shifts": [g.shift for g in subgroup],
    }
    lines = [
        f"shift by {args.r} on residues modulo {m}" + (" (identity)" if f.is_identity else ""),
        f"  ( {top} )",
        f"  ( {bottom} )",
        "  cycles:        " + "".join("(" + " ".join(map(str, c)) + ")" for c in cycles),
        f"  order:         {result['order']}",
        f"  subgroup size: {result['subgroup_size']}",
    ]
    _emit(args.format, "perm", {"m": int(m), "r": args.r}, result, "\n".join(lines))
    return 0


def cmd_solve(args: argparse.Namespace) -> int:
    m = _modulus(args.m)
    sol = solve_linear(args.a, args.b, args.r, m)
    g = math.gcd(args.a, m)
    result = {"solvable": sol.solvable, "gcd": g, "modulus": int(m), "solutions": list(sol.solutions)}
    head = f"{args.a}x ≡_{args.r} {args.b} (mod {m})"
    if sol.solvable:
        text = f"{head}: x ∈ {{{', '.join(map(str, sol.solutions))}}} (mod {m})"
    else:
        text = f"{head}: no solution, gcd({args.a}, {m}) = {g} does not divide {args.b + args.r}"
    inputs = {"a": args.a, "b": args.b, "r": args.r, "m": int(m)}
    _emit(args.format, "solve", inputs, result, text)
    return 0 if sol.solvable else 1


def _report_lines(rep: oracle.VerificationReport, indent: str = "") -> list[str]:
    lines = [
        f"{indent}{rep.lemma} [{rep.reading}] {rep.verdict.value.upper()}"
        f"  ({rep.cases_checked} cases, {rep.counterexample_count} counterexamples)",
        f"{indent}  {rep.statement}",
    ]
    for ce in rep.counterexamples:
        lines.append(f"{indent}  counterexample: " + ", ".join(f"{k}={v}" for k, v in ce.items()))
    for alt in rep.alternatives:
        lines.extend(_report_lines(alt, indent + "  alt: "))
    return lines


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        bounds = oracle.Bounds.parse(args.bounds) if args.bounds else oracle.Bounds()
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.lemma == "all":
        ids = list(oracle.LEMMA_IDS)
    elif args.lemma in oracle.LEMMAS:
        ids = [args.lemma]
    else:
        raise UsageError(f"unknown lemma id {args.lemma!r}; known: all, {', '.join(oracle.LEMMA_IDS)}")
    if args.limit < 0:
        raise UsageError("--limit must be nonnegative")
    reports = [oracle.verify(lemma, bounds, args.limit) for lemma in ids]
    ok = all(rep.confirmed for rep in reports)
    result = {"all_confirmed": ok, "reports": [rep.to_dict() for rep in reports]}
    text = "\n".join(line for rep in reports for line in _report_lines(rep))
    inputs = {"lemma": args.lemma, "bounds": asdict(bounds), "limit": args.limit}
    _emit(args.format, "verify", inputs, result, text)
    return 0 if ok else 1


# -- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rcong", description="Calculus of r-congruences a ≡_r b (mod m).")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help: str, *ints: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        for arg in ints:
            p.add_argument(arg, type=_integer)
        p.add_argument("--format", choices=("text", "json"), default="text")
        return p

    p = add("check", "test a ≡_r b (mod m)", "a", "b", "r", "m")
    p.add_argument("--balanced", action="store_true", help="balanced remainder for canonical r")
    p.set_defaults(func=cmd_check)

    p = add("classes", "tabulate the r-residue classes modulo m", "m", "r")
    p.add_argument("--range", metavar="LO..HI", help="list members of each class in [LO, HI]")
    p.set_defaults(func=cmd_classes)

    p = add("perm", "the shift permutation by r on residues modulo m", "m", "r")
    p.set_defaults(func=cmd_perm)

    p = add("solve", "solve a*x ≡_r b (mod m)", "a", "b", "r", "m")
    p.set_defaults(func=cmd_solve)

    p = add("verify", "exhaustively check a statement over a bounded grid")
    p.add_argument("lemma", help="lemma id or 'all'")
    p.add_argument("--bounds", metavar="SPEC", help="e.g. m=8,v=8,k=4,n=3")
    p.add_argument("--limit", type=int, default=10, help="counterexamples kept per report")
    p.set_defaults(func=cmd_verify)
    return parser


def _join_option_values(argv: Sequence[str]) -> list[str]:
    # "--range -5..14" would otherwise be read as an unknown option
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in ("--range", "--bounds"):
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def main(argv: Sequence[str] | None = None) -> int:
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    parser = build_parser()
    args = parser.parse_args(_join_option_values(sys.argv[1:] if argv is None else argv))
    try:
        return args.func(args)
    except UsageError as exc:
        parser.exit(2, f"rcong {args.command}: error: {exc}\n")


if __name__ == "__main__":
    sys.exit(main())
