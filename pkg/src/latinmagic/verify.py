"""Line-sum and pair-uniqueness audits for squares and letter grids.

A square of order x has 2x+2 lines: x rows, x columns, the main diagonal
(top-left to bottom-right) and the anti diagonal (top-right to bottom-left).
Magic means every line hits the expected sum and the cells are a bijection
onto 1..x*x; SemiMagic keeps rows and columns right but misses at least one
diagonal.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum

from .model import Role, Square, SuperposedGrid, SymbolGrid, SymbolId, magic_constant


class LineKind(Enum):
    ROW = "row"
    COLUMN = "column"
    MAIN_DIAGONAL = "main diagonal"
    ANTI_DIAGONAL = "anti diagonal"


@dataclass(frozen=True)
class LineId:
    """One of the 2x+2 lines of an order-x square."""

    kind: LineKind
    index: int = 0

    def __str__(self) -> str:
        if self.kind in (LineKind.ROW, LineKind.COLUMN):
            return f"{self.kind.value} {self.index}"
        return self.kind.value


class Verdict(Enum):
    MAGIC = "Magic"
    SEMI_MAGIC = "SemiMagic"
    NOT_MAGIC = "NotMagic"


def all_lines(x: int) -> tuple[LineId, ...]:
    """Rows first, then columns, then the two diagonals."""
    if x < 1:
        raise ValueError(f"order must be >= 1, got {x}")
    return (
        tuple(LineId(LineKind.ROW, i) for i in range(x))
        + tuple(LineId(LineKind.COLUMN, j) for j in range(x))
        + (LineId(LineKind.MAIN_DIAGONAL), LineId(LineKind.ANTI_DIAGONAL))
    )


def line_positions(line: LineId, x: int) -> tuple[tuple[int, int], ...]:
    """Row-major cell positions belonging to the given line."""
    if line.kind in (LineKind.ROW, LineKind.COLUMN) and not 0 <= line.index < x:
        raise ValueError(f"line index {line.index} outside 0..{x - 1}")
    if line.kind is LineKind.ROW:
        return tuple((line.index, j) for j in range(x))
    if line.kind is LineKind.COLUMN:
        return tuple((i, line.index) for i in range(x))
    if line.kind is LineKind.MAIN_DIAGONAL:
        return tuple((i, i) for i in range(x))
    return tuple((i, x - 1 - i) for i in range(x))


def line_sums(square: Square) -> dict[LineId, int]:
    """Sum of every line of the square, keyed by line."""
    x = square.order
    sums: dict[LineId, int] = {}
    for line in all_lines(x):
        sums[line] = sum(square.cells[i][j] for (i, j) in line_positions(line, x))
    return sums


@dataclass(frozen=True)
class VerificationReport:
    order: int
    expected_sum: int
    line_sums: dict[LineId, int]
    bijection_ok: bool
    duplicate_values: tuple[tuple[int, tuple[tuple[int, int], ...]], ...]
    violations: tuple[LineId, ...]
    verdict: Verdict


def verify_magic(square: Square) -> VerificationReport:
    """Audit an arbitrary integer square against the order-x magic contract.

    The expected sum is always magic_constant(x) for the square's own order;
    input values are not assumed to lie in 1..x*x, they are just checked.
    """
    x = square.order
    expected = magic_constant(x)
    sums = line_sums(square)
    violations = tuple(
        line for line in all_lines(x) if sums[line] != expected
    )

    positions: dict[int, list[tuple[int, int]]] = {}
    for i, row in enumerate(square.cells):
        for j, value in enumerate(row):
            positions.setdefault(value, []).append((i, j))
    duplicates = tuple(
        (value, tuple(places))
        for value, places in sorted(positions.items())
        if len(places) > 1
    )
    wanted = set(range(1, x * x + 1))
    bijection_ok = not duplicates and set(positions) == wanted

    rows_cols_ok = all(
        sums[line] == expected
        for line in all_lines(x)
        if line.kind in (LineKind.ROW, LineKind.COLUMN)
    )
    if bijection_ok and not violations:
        verdict = Verdict.MAGIC
    elif bijection_ok and rows_cols_ok:
        verdict = Verdict.SEMI_MAGIC
    else:
        verdict = Verdict.NOT_MAGIC

    return VerificationReport(
        order=x,
        expected_sum=expected,
        line_sums=sums,
        bijection_ok=bijection_ok,
        duplicate_values=duplicates,
        violations=violations,
        verdict=verdict,
    )


@dataclass(frozen=True)
class RepeatReport:
    """Lines of a component grid that repeat a symbol, with multiplicities."""

    ok: bool
    repeats: tuple[tuple[LineId, SymbolId, int], ...]


def verify_latin(grid: SymbolGrid, include_diagonals: bool = False) -> RepeatReport:
    """Report symbols appearing two or more times in any row or column.

    With include_diagonals=True the two diagonals are audited as well; the
    construction rules deliberately allow repeats there, so the caller picks.
    """
    x = grid.order
    lines = [
        line
        for line in all_lines(x)
        if include_diagonals
        or line.kind in (LineKind.ROW, LineKind.COLUMN)
    ]
    repeats: list[tuple[LineId, SymbolId, int]] = []
    for line in lines:
        counts = Counter(grid.cells[i][j] for (i, j) in line_positions(line, x))
        for index in sorted(counts):
            if counts[index] >= 2:
                repeats.append((line, SymbolId(grid.role, index), counts[index]))
    return RepeatReport(ok=not repeats, repeats=tuple(repeats))


@dataclass(frozen=True)
class OrthogonalityReport:
    """Whether every (latin, greek) pair occurs exactly once in a pair grid."""

    ok: bool
    duplicate_pairs: tuple[
        tuple[tuple[int, int], tuple[tuple[int, int], ...]], ...
    ]
    missing_pairs: tuple[tuple[int, int], ...]


def verify_orthogonality(pairs: SuperposedGrid) -> OrthogonalityReport:
    """Check pair uniqueness; duplicates come with their cell positions."""
    x = pairs.order
    seen: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for i, row in enumerate(pairs.cells):
        for j, pair in enumerate(row):
            seen.setdefault(tuple(pair), []).append((i, j))
    duplicates = tuple(
        (pair, tuple(places))
        for pair, places in sorted(seen.items())
        if len(places) > 1
    )
    missing = tuple(
        (l, g)
        for l in range(x)
        for g in range(x)
        if (l, g) not in seen
    )
    return OrthogonalityReport(
        ok=not duplicates and not missing,
        duplicate_pairs=duplicates,
        missing_pairs=missing,
    )


def pair_name(pair: tuple[int, int]) -> str:
    """Compact letter form of a (latin, greek) index pair, e.g. 'bβ'."""
    return (
        SymbolId(Role.LATIN, pair[0]).letter
        + SymbolId(Role.GREEK, pair[1]).letter
    )
