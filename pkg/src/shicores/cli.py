"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 parse error, 3 limits or
unsupported rank, 4 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Sequence

from . import bijection, checks, cores
from .render import UnsupportedRankError, render_svg

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_LIMIT, EXIT_IO = 0, 1, 2, 3, 4


@dataclass(frozen=True)
class Limits:
    """Desk-scale ceilings; anything larger exits with code 3."""

    max_catalog: int = 50_000
    max_verify_rank: int = 5
    max_verify_alcoves: int = 5_000  # (mn+1)^(n-1) alcoves in the dilated simplex
    max_render_m: int = 6


LIMITS = Limits()

TSV_COLUMNS = ("core", "vector", "word", "length", "narayana_k", "removable_counts")

ROW_SCHEMA = {
    "type": "object",
    "properties": {
        "core": {"type": "string"},
        "vector": {"type": "array", "items": {"type": "integer"}},
        "word": {"type": "array", "items": {"type": "integer"}},
        "length": {"type": "integer", "minimum": 0},
        "narayana_k": {"type": "integer", "minimum": 0},
        "removable_counts": {"type": "array", "items": {"type": "integer", "minimum": 0}},
    },
    "required": list(TSV_COLUMNS),
    "additionalProperties": False,
}


class LimitError(Exception):
    pass


def bracket(values: Sequence[int]) -> str:
    return "[" + ",".join(str(v) for v in values) + "]"


def catalog_row(e: bijection.CatalogEntry) -> dict:
    return {
        "core": str(e.core),
        "vector": list(e.vector),
        "word": list(e.word),
        "length": len(e.word),
        "narayana_k": e.narayana_k,
        "removable_counts": list(e.removable_counts),
    }


def tsv_line(row: dict) -> str:
    return "\t".join(
        [
            row["core"],
            bracket(row["vector"]),
            " ".join(map(str, row["word"])),
            str(row["length"]),
            str(row["narayana_k"]),
            bracket(row["removable_counts"]),
        ]
    )


def _check_rank(n: int, m: int) -> None:
    if n < 2 or m < 1:
        raise LimitError("need --n >= 2 and --m >= 1")


def cmd_core(args, out) -> int:
    try:
        lam = cores.parse_partition(args.partition)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    n, m = args.n, args.m
    _check_rank(n, m)
    t = m * n + 1
    print(f"partition: {lam}", file=out)
    print(f"size: {lam.size}", file=out)
    print(f"first-column hooks: {' '.join(map(str, cores.first_column_hooks(lam))) or '-'}", file=out)
    print("hook lengths:", file=out)
    for i, p in enumerate(lam.parts, start=1):
        print("  " + " ".join(str(cores.hook_length(lam, i, j)) for j in range(1, p + 1)), file=out)
    print("residues:", file=out)
    for i, p in enumerate(lam.parts, start=1):
        print("  " + " ".join(str(cores.residue(i, j, n)) for j in range(1, p + 1)), file=out)
    rem, add = cores.box_counts(lam, n)
    print(f"residue counts: {bracket(cores.residue_counts(lam, n))}", file=out)
    print(f"removable counts: {bracket(rem)}", file=out)
    print(f"addable counts: {bracket(add)}", file=out)
    is_core = cores.is_t_core_hooks(lam, n)
    print(f"{n}-core: {'yes' if is_core else 'no'}", file=out)
    print(f"{t}-core: {'yes' if cores.is_t_core_hooks(lam, t) else 'no'}", file=out)
    if is_core:
        ab = cores.abacus(lam, n)
        print("balanced abacus (level | runners 0..n-1, beads in parentheses):", file=out)
        print(ab.render(), file=out)
        print(f"n-vector: {bracket(ab.bead_top_levels)}", file=out)
    else:
        print("n-vector: n/a (not an n-core)", file=out)
    return EXIT_OK


def cmd_enumerate(args, out) -> int:
    n, m = args.n, args.m
    _check_rank(n, m)
    size = bijection.anderson_count(n, m)
    if size > LIMITS.max_catalog:
        raise LimitError(f"catalog would have {size} rows (limit {LIMITS.max_catalog})")
    cat = bijection.enumerate_catalog(n, m)
    hist = cat.narayana()
    if args.format == "json":
        for e in cat:
            print(json.dumps(catalog_row(e), separators=(",", ":")), file=out)
        print(json.dumps({"count": len(cat), "narayana": list(hist)}, separators=(",", ":")), file=out)
    else:
        print("\t".join(TSV_COLUMNS), file=out)
        for e in cat:
            print(tsv_line(catalog_row(e)), file=out)
        print(f"# count: {len(cat)}; narayana: {' '.join(map(str, hist))}", file=out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    n, m = args.n, args.m
    _check_rank(n, m)
    if n > LIMITS.max_verify_rank or (m * n + 1) ** (n - 1) > LIMITS.max_verify_alcoves:
        raise LimitError(f"n={n}, m={m} is beyond desk-scale verification")
    results: list[checks.CheckResult] = []
    suite = args.suite
    if suite in ("all", "oracle"):
        results.append(checks.check_oracle(n, m))
        results.append(checks.check_catalog(n, m))
    if suite in ("all", "haiman"):
        rep = bijection.verify_haiman(n, m)
        print(rep.summary(), file=out)
        results.append(checks.CheckResult(f"haiman n={n} m={m}", rep.alcoves_in_region, rep.failures))
    if suite in ("all", "props"):
        results.extend(checks.property_suite(seed=args.seed, cases=args.cases))
    status = EXIT_OK
    for r in results:
        print(f"{'PASS' if r.ok else 'FAIL'}  {r.name} ({r.cases} cases)", file=out)
        if not r.ok and status == EXIT_OK:
            print(f"  counterexample: {r.failures[0]}", file=out)
            status = EXIT_FAIL
    return status


def cmd_render(args, out) -> int:
    if args.n != 3:
        raise UnsupportedRankError(f"render supports --n 3 only, got {args.n}")
    _check_rank(args.n, args.m)
    if args.m > LIMITS.max_render_m:
        raise LimitError(f"--m {args.m} exceeds {LIMITS.max_render_m}")
    svg = render_svg(args.n, args.m)
    if args.out == "-":
        out.write(svg)
        return EXIT_OK
    try:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(svg)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    shaded = svg.count('class="minimal"')
    print(f"wrote {args.out} ({shaded} shaded alcoves)", file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="shicores", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("core", help="hooks, residues, abacus and n-vector of a partition")
    c.add_argument("partition", help="comma-separated parts, or - for the empty partition")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--m", type=int, default=1, help="also test for an (mn+1)-core")
    c.set_defaults(func=cmd_core)

    e = sub.add_parser("enumerate", help="list all simultaneous (n, mn+1)-cores")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--m", type=int, required=True)
    e.add_argument("--format", choices=("tsv", "json"), default="tsv")
    e.set_defaults(func=cmd_enumerate)

    v = sub.add_parser("verify", help="run oracle, Haiman and property checks")
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--m", type=int, default=1)
    v.add_argument("--suite", choices=("all", "oracle", "haiman", "props"), default="all")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--cases", type=int, default=200)
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("render", help="SVG of the dominant m-minimal alcoves (n = 3)")
    r.add_argument("--n", type=int, default=3)
    r.add_argument("--m", type=int, required=True)
    r.add_argument("--out", default="-", help="output file, - for stdout")
    r.set_defaults(func=cmd_render)
    return p


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (LimitError, UnsupportedRankError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT


if __name__ == "__main__":
    sys.exit(main())
