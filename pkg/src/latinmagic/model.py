"""Core value types for letter grids, superposition, and evaluation.

Every number k in 1..x*x splits uniquely as k = m*x + n with 0 <= m <= x-1
and 1 <= n <= x.  The multiples-of-x part is written with Latin letters and
the 1..x part with Greek letters, so an x-by-x grid of letter pairs plus a
value for each letter determines a numeric square.  The types here are
immutable values; all operations are pure.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

LATIN_LETTERS = "abcdef"
GREEK_LETTERS = "αβγδεζ"


class Role(Enum):
    """Which alphabet a symbol grid is written in."""

    LATIN = "latin"
    GREEK = "greek"


@dataclass(frozen=True)
class SymbolId:
    """One abstract symbol: a role plus a 0-based index within its alphabet."""

    role: Role
    index: int

    def __post_init__(self) -> None:
        if self.index < 0:
            raise ValueError(f"symbol index must be >= 0, got {self.index}")

    @property
    def letter(self) -> str:
        table = LATIN_LETTERS if self.role is Role.LATIN else GREEK_LETTERS
        if self.index < len(table):
            return table[self.index]
        return f"{self.role.value}{self.index}"

    def __str__(self) -> str:
        return self.letter


def _check_square(cells: tuple, what: str) -> int:
    order = len(cells)
    if order == 0:
        raise ValueError(f"{what} must have at least one row")
    for i, row in enumerate(cells):
        if len(row) != order:
            raise ValueError(
                f"{what} row {i} has {len(row)} cells, expected {order}"
            )
    return order


@dataclass(frozen=True)
class SymbolGrid:
    """A square grid of symbol indices drawn from a single alphabet.

    Cells hold 0-based indices; row 0 is the top row and cell (i, j) sits at
    row i, column j.  Rows and columns are not required to be complete
    alphabets: the verifier reports letter repeats rather than rejecting them.
    """

    role: Role
    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        order = _check_square(self.cells, "symbol grid")
        for i, row in enumerate(self.cells):
            for j, idx in enumerate(row):
                if not isinstance(idx, int) or isinstance(idx, bool):
                    raise ValueError(f"cell ({i}, {j}) is not an integer index")
                if not 0 <= idx < order:
                    raise ValueError(
                        f"cell ({i}, {j}) index {idx} outside 0..{order - 1}"
                    )

    @property
    def order(self) -> int:
        return len(self.cells)

    def symbol(self, i: int, j: int) -> SymbolId:
        return SymbolId(self.role, self.cells[i][j])


@dataclass(frozen=True)
class SuperposedGrid:
    """A grid of (latin index, greek index) pairs, one pair per cell."""

    cells: tuple[tuple[tuple[int, int], ...], ...]

    def __post_init__(self) -> None:
        order = _check_square(self.cells, "superposed grid")
        for i, row in enumerate(self.cells):
            for j, pair in enumerate(row):
                if len(pair) != 2:
                    raise ValueError(f"cell ({i}, {j}) must hold a pair")
                for idx in pair:
                    if not 0 <= idx < order:
                        raise ValueError(
                            f"cell ({i}, {j}) index {idx} outside 0..{order - 1}"
                        )

    @property
    def order(self) -> int:
        return len(self.cells)

    def latin_component(self) -> SymbolGrid:
        return SymbolGrid(
            Role.LATIN,
            tuple(tuple(pair[0] for pair in row) for row in self.cells),
        )

    def greek_component(self) -> SymbolGrid:
        return SymbolGrid(
            Role.GREEK,
            tuple(tuple(pair[1] for pair in row) for row in self.cells),
        )


@dataclass(frozen=True)
class ValueAssignment:
    """Values given to each letter of both alphabets, in letter order.

    latin_values must be a permutation of {0, x, 2x, ..., (x-1)x} and
    greek_values a permutation of {1, ..., x}; together they make every
    latin+greek sum land in 1..x*x exactly once per distinct pair.
    """

    latin_values: tuple[int, ...]
    greek_values: tuple[int, ...]

    def __post_init__(self) -> None:
        x = len(self.latin_values)
        if len(self.greek_values) != x:
            raise ValueError(
                "latin and greek value lists must have the same length, got "
                f"{x} and {len(self.greek_values)}"
            )
        if x == 0:
            raise ValueError("value assignment must cover at least one letter")
        if sorted(self.latin_values) != [i * x for i in range(x)]:
            raise ValueError(
                f"latin values must be a permutation of multiples of {x} "
                f"(0..{(x - 1) * x}), got {list(self.latin_values)}"
            )
        if sorted(self.greek_values) != list(range(1, x + 1)):
            raise ValueError(
                f"greek values must be a permutation of 1..{x}, "
                f"got {list(self.greek_values)}"
            )

    @property
    def order(self) -> int:
        return len(self.latin_values)


@dataclass(frozen=True)
class Square:
    """A numeric square grid.

    Cells are plain integers with no range restriction so that malformed
    input can still be loaded and audited by the verifier.
    """

    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        _check_square(self.cells, "square")
        for i, row in enumerate(self.cells):
            for j, value in enumerate(row):
                if not isinstance(value, int) or isinstance(value, bool):
                    raise ValueError(f"cell ({i}, {j}) is not an integer")

    @property
    def order(self) -> int:
        return len(self.cells)


def magic_constant(x: int) -> int:
    """Common line sum of an x-by-x square holding 1..x*x: x*(1 + x*x)/2."""
    if x < 1:
        raise ValueError(f"order must be >= 1, got {x}")
    return x * (1 + x * x) // 2


def decompose(k: int, x: int) -> tuple[int, int]:
    """Split k in 1..x*x into (m, n) with k = m*x + n, 0 <= m < x, 1 <= n <= x."""
    if x < 1:
        raise ValueError(f"order must be >= 1, got {x}")
    if not 1 <= k <= x * x:
        raise ValueError(f"value {k} outside 1..{x * x}")
    m = (k - 1) // x
    n = k - m * x
    return m, n


def compose(m: int, n: int, x: int) -> int:
    """Inverse of decompose: m*x + n with the same range checks."""
    if x < 1:
        raise ValueError(f"order must be >= 1, got {x}")
    if not 0 <= m <= x - 1:
        raise ValueError(f"multiple part {m} outside 0..{x - 1}")
    if not 1 <= n <= x:
        raise ValueError(f"unit part {n} outside 1..{x}")
    return m * x + n


def superpose(latin: SymbolGrid, greek: SymbolGrid) -> SuperposedGrid:
    """Pair two same-order component grids cell by cell."""
    if latin.role is not Role.LATIN:
        raise ValueError(f"first component must be latin, got {latin.role.value}")
    if greek.role is not Role.GREEK:
        raise ValueError(f"second component must be greek, got {greek.role.value}")
    if latin.order != greek.order:
        raise ValueError(
            f"component orders differ: {latin.order} vs {greek.order}"
        )
    return SuperposedGrid(
        tuple(
            tuple(
                (latin.cells[i][j], greek.cells[i][j])
                for j in range(latin.order)
            )
            for i in range(latin.order)
        )
    )


def evaluate(pairs: SuperposedGrid, assignment: ValueAssignment) -> Square:
    """Turn a pair grid into numbers: cell value = latin value + greek value."""
    if pairs.order != assignment.order:
        raise ValueError(
            f"grid order {pairs.order} does not match assignment order "
            f"{assignment.order}"
        )
    latin = assignment.latin_values
    greek = assignment.greek_values
    return Square(
        tuple(
            tuple(latin[l] + greek[g] for (l, g) in row) for row in pairs.cells
        )
    )
