"""Command line front end: gen, verify, enumerate, constraints, oracle, families.

Exit codes: 0 on success (and a Magic verdict), 1 when verification fails or
a family is expected to fail, 2 for usage and input errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .construct import (
    FAMILIES,
    OrthogonalityError,
    build_square,
    diagonal_constraints,
    editor_square,
    family_figure,
    solve_assignments,
)
from .enumeration import (
    FamilyCensus,
    canonicalize,
    census,
    enumerate_family,
    oracle_search,
)
from .model import Square, ValueAssignment
from .verify import VerificationReport, Verdict, verify_magic, verify_orthogonality


class SquareParseError(ValueError):
    """Input text could not be read as a square."""


@dataclass(frozen=True)
class SquareDocument:
    """A square plus optional provenance metadata, ready to serialize."""

    order: int
    cells: tuple[tuple[int, ...], ...]
    family: str | None = None
    latin_values: tuple[int, ...] | None = None
    greek_values: tuple[int, ...] | None = None


def parse_square(text: str) -> SquareDocument:
    """Read a square from whitespace grid text or a structured document.

    Grid text holds one row per line with whitespace-separated integers;
    the order is the number of non-blank lines and every row must match it.
    Structured input is a JSON object with at least an "order" and "cells".
    """
    stripped = text.strip()
    if not stripped:
        raise SquareParseError("empty input: expected a square grid")
    if stripped.startswith("{"):
        return _parse_structured(stripped)

    rows: list[tuple[int, list[str]]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        tokens = line.split()
        if tokens:
            rows.append((lineno, tokens))
    order = len(rows)
    for lineno, tokens in rows:
        if len(tokens) != order:
            raise SquareParseError(
                f"ragged grid at line {lineno}: expected {order} cells, "
                f"found {len(tokens)}"
            )
    cells = []
    for lineno, tokens in rows:
        row = []
        for column, token in enumerate(tokens, start=1):
            try:
                row.append(int(token))
            except ValueError:
                raise SquareParseError(
                    f"invalid integer {token!r} at line {lineno}, "
                    f"column {column}"
                ) from None
        cells.append(tuple(row))
    return SquareDocument(order=order, cells=tuple(cells))


def _parse_structured(text: str) -> SquareDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SquareParseError(f"invalid structured document: {exc}") from None
    if not isinstance(data, dict):
        raise SquareParseError("structured document must be an object")
    if "cells" not in data:
        raise SquareParseError("structured document is missing 'cells'")
    raw_cells = data["cells"]
    if not isinstance(raw_cells, list) or not raw_cells:
        raise SquareParseError("'cells' must be a non-empty list of rows")
    cells = []
    for i, row in enumerate(raw_cells):
        if not isinstance(row, list):
            raise SquareParseError(f"'cells' row {i} is not a list")
        for j, value in enumerate(row):
            if not isinstance(value, int) or isinstance(value, bool):
                raise SquareParseError(
                    f"cell ({i}, {j}) is not an integer: {value!r}"
                )
        cells.append(tuple(row))
    order = data.get("order", len(cells))
    if not isinstance(order, int) or order != len(cells):
        raise SquareParseError(
            f"'order' is {order!r} but 'cells' has {len(cells)} rows"
        )
    for i, row in enumerate(cells):
        if len(row) != order:
            raise SquareParseError(
                f"ragged grid at row {i}: expected {order} cells, "
                f"found {len(row)}"
            )
    family = data.get("family")
    latin = data.get("latin_values")
    greek = data.get("greek_values")
    return SquareDocument(
        order=order,
        cells=tuple(cells),
        family=family if isinstance(family, str) else None,
        latin_values=tuple(latin) if isinstance(latin, list) else None,
        greek_values=tuple(greek) if isinstance(greek, list) else None,
    )


def _grid_text(cells) -> str:
    width = max(len(str(value)) for row in cells for value in row)
    return "\n".join(
        " ".join(str(value).rjust(width) for value in row) for row in cells
    )


def _json_text(payload) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=False)


def render(obj, fmt: str = "text") -> str:
    """Serialize a SquareDocument, VerificationReport, or FamilyCensus."""
    if fmt not in ("text", "structured"):
        raise ValueError(f"format must be 'text' or 'structured', got {fmt!r}")
    if isinstance(obj, SquareDocument):
        return _render_document(obj, fmt)
    if isinstance(obj, VerificationReport):
        return _render_report(obj, fmt)
    if isinstance(obj, FamilyCensus):
        return _render_census(obj, fmt)
    raise ValueError(f"cannot render object of type {type(obj).__name__}")


def _render_document(doc: SquareDocument, fmt: str) -> str:
    if fmt == "text":
        return _grid_text(doc.cells)
    payload: dict = {"order": doc.order, "cells": [list(row) for row in doc.cells]}
    if doc.family is not None:
        payload["family"] = doc.family
    if doc.latin_values is not None:
        payload["latin_values"] = list(doc.latin_values)
    if doc.greek_values is not None:
        payload["greek_values"] = list(doc.greek_values)
    return _json_text(payload)


def _render_report(report: VerificationReport, fmt: str) -> str:
    if fmt == "structured":
        payload = {
            "order": report.order,
            "expected_sum": report.expected_sum,
            "verdict": report.verdict.value,
            "bijection_ok": report.bijection_ok,
            "line_sums": {str(line): s for line, s in report.line_sums.items()},
            "violations": [str(line) for line in report.violations],
            "duplicate_values": [
                {"value": value, "positions": [list(p) for p in places]}
                for value, places in report.duplicate_values
            ],
        }
        return _json_text(payload)
    lines = [
        f"order: {report.order}",
        f"expected sum: {report.expected_sum}",
        f"verdict: {report.verdict.value}",
        f"bijection: {'ok' if report.bijection_ok else 'broken'}",
    ]
    if report.violations:
        lines.append("violations:")
        for line in report.violations:
            lines.append(f"  {line}: sum {report.line_sums[line]}")
    else:
        lines.append("violations: (none)")
    if report.duplicate_values:
        lines.append("duplicate values:")
        for value, places in report.duplicate_values:
            spots = ", ".join(str(p) for p in places)
            lines.append(f"  {value} at {spots}")
    return "\n".join(lines)


def _render_census(result: FamilyCensus, fmt: str) -> str:
    if fmt == "structured":
        return _json_text(
            {
                "family": result.family_id,
                "assignments_total": result.assignments_total,
                "squares_distinct": result.squares_distinct,
                "squares_distinct_dihedral": result.squares_distinct_dihedral,
            }
        )
    return "\n".join(
        [
            f"family: {result.family_id}",
            f"assignments: {result.assignments_total}",
            f"distinct squares: {result.squares_distinct}",
            f"distinct squares up to symmetry: {result.squares_distinct_dihedral}",
        ]
    )


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _csv_ints(text: str, flag: str) -> tuple[int, ...]:
    try:
        return tuple(int(part.strip()) for part in text.split(","))
    except ValueError:
        raise ValueError(
            f"{flag} expects comma-separated integers, got {text!r}"
        ) from None


def _known_family(family_id: str) -> str:
    if family_id not in FAMILIES:
        known = ", ".join(FAMILIES)
        raise ValueError(f"unknown family {family_id!r} (known: {known})")
    return family_id


def _cmd_gen(args) -> int:
    family_id = _known_family(args.family)
    if family_id == "e6.editor":
        if args.latin is not None or args.greek is not None:
            raise ValueError("e6.editor is a fixed square and takes no letter values")
        square = editor_square()
        print(render(SquareDocument(square.order, square.cells, family=family_id), args.format))
        return 0
    figure = family_figure(family_id, variant=args.variant)
    orth = verify_orthogonality(figure)
    if not orth.ok:
        raise OrthogonalityError(orth)
    if (args.latin is None) != (args.greek is None):
        raise ValueError("provide both --latin and --greek, or neither")
    if args.latin is None:
        assignment = next(
            solve_assignments(diagonal_constraints(figure), figure.order), None
        )
        if assignment is None:
            raise ValueError(f"family {family_id} admits no satisfying assignment")
    else:
        assignment = ValueAssignment(
            _csv_ints(args.latin, "--latin"), _csv_ints(args.greek, "--greek")
        )
    square = build_square(family_id, assignment, variant=args.variant)
    doc = SquareDocument(
        order=square.order,
        cells=square.cells,
        family=family_id,
        latin_values=assignment.latin_values,
        greek_values=assignment.greek_values,
    )
    print(render(doc, args.format))
    return 0


def _cmd_verify(args) -> int:
    doc = parse_square(_read_input(args.input))
    report = verify_magic(Square(doc.cells))
    print(render(report, args.format))
    return 0 if report.verdict is Verdict.MAGIC else 1


def _cmd_enumerate(args) -> int:
    family_id = _known_family(args.family)
    if family_id == "e6.paired":
        raise OrthogonalityError(verify_orthogonality(family_figure(family_id)))
    if family_id == "e6.editor":
        raise ValueError("e6.editor is a single fixed square; use gen")
    if args.count_only:
        print(render(census(family_id, variant=args.variant), args.format))
        return 0
    seen: set = set()
    emitted = 0
    collected = []
    for square in enumerate_family(family_id, variant=args.variant):
        if args.dedup == "dihedral":
            key = canonicalize(square).square.cells
            if key in seen:
                continue
            seen.add(key)
        if args.format == "structured":
            collected.append([list(row) for row in square.cells])
        else:
            if emitted:
                print()
            print(_grid_text(square.cells))
        emitted += 1
    if args.format == "structured":
        print(_json_text({"family": family_id, "count": emitted, "squares": collected}))
    return 0


def _cmd_constraints(args) -> int:
    family_id = _known_family(args.family)
    figure = family_figure(family_id, variant=args.variant)
    constraints = diagonal_constraints(figure)
    if args.format == "structured":
        payload = {
            "family": family_id,
            "constraints": [
                {
                    "text": str(c),
                    "latin": list(c.latin),
                    "greek": list(c.greek),
                }
                for c in constraints
            ],
        }
        print(_json_text(payload))
        return 0
    if not constraints:
        print("(none)")
        return 0
    for constraint in constraints:
        print(constraint)
    return 0


def _cmd_oracle(args) -> int:
    squares = oracle_search(args.order)
    ordered = sorted(
        squares, key=lambda s: (canonicalize(s).square.cells, s.cells)
    )
    if args.count_only:
        if args.format == "structured":
            print(_json_text({"order": args.order, "count": len(ordered)}))
        else:
            print(f"order: {args.order}")
            print(f"squares: {len(ordered)}")
        return 0
    if args.format == "structured":
        payload = {
            "order": args.order,
            "count": len(ordered),
            "squares": [[list(row) for row in s.cells] for s in ordered],
        }
        print(_json_text(payload))
        return 0
    for k, square in enumerate(ordered):
        if k:
            print()
        print(_grid_text(square.cells))
    return 0


def _cmd_families(args) -> int:
    width = max(len(family_id) for family_id in FAMILIES)
    for family in FAMILIES.values():
        print(f"{family.family_id.ljust(width)}  order {family.order}  {family.summary}")
    return 0


_COMMANDS = {
    "gen": _cmd_gen,
    "verify": _cmd_verify,
    "enumerate": _cmd_enumerate,
    "constraints": _cmd_constraints,
    "oracle": _cmd_oracle,
    "families": _cmd_families,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latinmagic",
        description="Build, audit, and enumerate magic squares made from "
        "superposed Latin and Greek letter grids.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="build one square from a family")
    p.add_argument("--family", required=True, help="family id, see 'families'")
    p.add_argument("--latin", help="comma-separated Latin letter values in letter order")
    p.add_argument("--greek", help="comma-separated Greek letter values in letter order")
    p.add_argument("--variant", choices=("c", "d"), default="c")
    p.add_argument("--format", choices=("text", "structured"), default="text")

    p = sub.add_parser("verify", help="audit a square from a file or '-' (stdin)")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--format", choices=("text", "structured"), default="text")

    p = sub.add_parser("enumerate", help="list every square a family produces")
    p.add_argument("--family", required=True)
    p.add_argument("--dedup", choices=("none", "dihedral"), default="none")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--variant", choices=("c", "d"), default="c")
    p.add_argument("--format", choices=("text", "structured"), default="text")

    p = sub.add_parser("constraints", help="show a family's letter-value conditions")
    p.add_argument("--family", required=True)
    p.add_argument("--variant", choices=("c", "d"), default="c")
    p.add_argument("--format", choices=("text", "structured"), default="text")

    p = sub.add_parser("oracle", help="exhaustively list all magic squares of an order")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--format", choices=("text", "structured"), default="text")

    sub.add_parser("families", help="list the known families")
    return parser


def run(argv: list[str] | None = None) -> int:
    """Parse arguments and execute; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _COMMANDS[args.command](args)
    except OrthogonalityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))
