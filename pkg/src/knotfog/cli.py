"""Command-line front end.

    knotfog invariants <expr> [--json]   invariant report for one expression
    knotfog family-table --n <k>         the Whitehead-double family, n = 1..k
    knotfog selftest                     run the acceptance criteria

Exit codes: 0 success, 1 self-test failure, 2 usage or parse error.
Data output is byte-identical across runs; timing diagnostics go to
stderr only.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys

from . import classical, firstorder, selftest
from .classical import KnotFacts
from .firstorder import FirstOrderResult
from .knotlang import Kfam, ParseError, Wh0, parse, render, validate


@dataclasses.dataclass(frozen=True)
class Report:
    """Exactly the evaluated engines' outputs; no recomputation here."""

    expression: str
    facts: KnotFacts
    fog: FirstOrderResult
    warnings: tuple[str, ...]

    def to_json(self) -> dict:
        return {
            "expression": self.expression,
            "facts": self.facts.to_json(),
            "first_order_genus": self.fog.to_json(),
            "warnings": list(self.warnings),
        }


def build_report(text: str) -> Report:
    expr = parse(text)
    return Report(
        expression=render(expr),
        facts=classical.facts_of(expr),
        fog=firstorder.first_order_genus(expr),
        warnings=tuple(validate(expr)),
    )


def render_report(report: Report) -> str:
    facts = report.facts
    lines = [
        f"expression   {report.expression}",
        f"genus        {facts.genus}",
        f"alexander    {'unknown' if facts.alexander is None else facts.alexander}",
        f"slice        {facts.slice}",
        f"in_R         {facts.in_R}",
        f"trivial      {facts.trivial}",
        f"g1           {report.fog.interval}",
        "g1 bounds:",
    ]
    for record in report.fog.provenance:
        lines.append(f"  {record.bound} {record.value}  {record.rule}")
    if report.warnings:
        lines.append("warnings:")
        lines.extend(f"  {w}" for w in report.warnings)
    else:
        lines.append("warnings: none")
    return "\n".join(lines)


_FAMILY_HEADER = ("knot", "g", "alexander", "slice", "g1_lo", "g1_hi")


def family_table(n_max: int) -> str:
    """The headline family: same classical data, pairwise-distinct g1."""
    rows = [_FAMILY_HEADER]
    seen: list[int] = []
    for n in range(1, n_max + 1):
        e = Wh0(Kfam(n))
        facts = classical.facts_of(e)
        fog = firstorder.first_order_genus(e)
        assert fog.interval.is_point(), f"family row {n} has an open interval"
        assert facts.genus == classical.IntInterval.point(1)
        assert facts.alexander is not None and facts.alexander.is_one()
        assert str(facts.slice) == "yes"
        seen.append(fog.lo)
        rows.append((render(e), str(facts.genus.lo), str(facts.alexander),
                     str(facts.slice), str(fog.lo), str(fog.hi)))
    assert len(set(seen)) == len(seen), f"family g1 values not pairwise distinct: {seen}"
    widths = [max(len(row[i]) for row in rows) for i in range(len(_FAMILY_HEADER))]
    return "\n".join(
        "  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip()
        for row in rows
    )


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="knotfog",
        description="Exact knot invariants and certified first-order genus intervals.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_inv = sub.add_parser("invariants", help="invariant report for one expression")
    p_inv.add_argument("expression", help="e.g. 'wh0(kfam(2))' or 'trefoil # fig8'")
    p_inv.add_argument("--json", action="store_true", help="emit JSON instead of a table")

    p_fam = sub.add_parser("family-table",
                           help="Whitehead doubles of the pretzel family")
    p_fam.add_argument("--n", type=int, required=True, metavar="K",
                       help="number of rows, 1..12")

    sub.add_parser("selftest", help="run every acceptance criterion")

    args = parser.parse_args(argv)

    if args.command == "invariants":
        try:
            report = build_report(args.expression)
        except ParseError as exc:
            print(f"parse error: {exc}", file=sys.stderr)
            return 2
        if args.json:
            print(json.dumps(report.to_json(), indent=2))
        else:
            print(render_report(report))
        return 0

    if args.command == "family-table":
        if not 1 <= args.n <= 12:
            parser.error(f"--n must be in 1..12, got {args.n}")
        print(family_table(args.n))
        return 0

    # selftest
    results = selftest.run_all()
    for result in results:
        status = "PASS" if result.passed else "FAIL"
        print(f"{status} {result.name}")
        if not result.passed:
            print(f"     {result.detail}")
        print(f"{result.name}: {result.seconds:.3f}s", file=sys.stderr)
    failed = sum(not r.passed for r in results)
    print(f"{len(results) - failed}/{len(results)} criteria passed")
    return 1 if failed else 0


def entry() -> None:  # console-script wrapper
    sys.exit(main())


if __name__ == "__main__":
    entry()
