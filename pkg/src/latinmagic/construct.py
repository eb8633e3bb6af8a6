"""Figure families, reflection and rotation rules, and line constraints.

Each family is a grid of letter pairs whose rows and columns already sum
correctly for every value assignment; lines that repeat letters force linear
conditions on the letter values.  Solving those conditions and evaluating
the figure yields magic squares.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd

from .model import (
    GREEK_LETTERS,
    LATIN_LETTERS,
    Role,
    Square,
    SuperposedGrid,
    SymbolGrid,
    SymbolId,
    ValueAssignment,
    evaluate,
    superpose,
)
from .verify import (
    OrthogonalityReport,
    all_lines,
    line_positions,
    pair_name,
    verify_orthogonality,
)

MAX_SOLVE_ORDER = 6


class Axis(Enum):
    """Mirror axis used to derive a Greek component from a Latin one."""

    MIDDLE_COLUMN = "middle column"
    MIDDLE_ROW = "middle row"
    MAIN_DIAGONAL = "main diagonal"
    ANTI_DIAGONAL = "anti diagonal"


class MirrorConflictError(ValueError):
    """Two cells that mirror each other hold the same Latin letter."""

    def __init__(self, axis, first, second, letter):
        self.axis = axis
        self.first = first
        self.second = second
        self.letter = letter
        super().__init__(
            f"cells {first} and {second} mirror across the {axis.value} "
            f"but both hold '{letter}'"
        )


class ConstraintViolationError(ValueError):
    """A value assignment breaks one of a figure's line constraints."""

    def __init__(self, constraint, assignment):
        self.constraint = constraint
        self.assignment = assignment
        super().__init__(f"assignment violates line constraint: {constraint}")


class OrthogonalityError(ValueError):
    """A figure repeats some letter pair, so no assignment can be magic."""

    def __init__(self, report: OrthogonalityReport):
        self.report = report
        dups = ", ".join(
            f"{pair_name(pair)} at {', '.join(map(str, places))}"
            for pair, places in report.duplicate_pairs
        )
        super().__init__(f"figure repeats letter pairs: {dups}")


def _mirror(axis: Axis, x: int):
    if axis is Axis.MIDDLE_COLUMN:
        return lambda i, j: (i, x - 1 - j)
    if axis is Axis.MIDDLE_ROW:
        return lambda i, j: (x - 1 - i, j)
    if axis is Axis.MAIN_DIAGONAL:
        return lambda i, j: (j, i)
    return lambda i, j: (x - 1 - j, x - 1 - i)


def reflect_greek(latin: SymbolGrid, axis: Axis) -> SymbolGrid:
    """Derive the Greek component by mirroring the Latin one.

    A cell on the axis keeps its own Latin letter's index; any other cell
    takes the index of the Latin letter at its mirror image.  Requires every
    off-axis mirror pair to hold two different Latin letters, otherwise the
    superposed figure would repeat a doubled pair.
    """
    if latin.role is not Role.LATIN:
        raise ValueError("reflect_greek expects a latin component")
    x = latin.order
    if axis in (Axis.MIDDLE_COLUMN, Axis.MIDDLE_ROW) and x % 2 == 0:
        raise ValueError(f"{axis.value} axis needs an odd order, got {x}")
    mirror = _mirror(axis, x)
    for i in range(x):
        for j in range(x):
            mi, mj = mirror(i, j)
            if (mi, mj) <= (i, j):
                continue
            if latin.cells[i][j] == latin.cells[mi][mj]:
                raise MirrorConflictError(
                    axis,
                    (i, j),
                    (mi, mj),
                    SymbolId(Role.LATIN, latin.cells[i][j]).letter,
                )
    cells = tuple(
        tuple(latin.cells[mirror(i, j)[0]][mirror(i, j)[1]] for j in range(x))
        for i in range(x)
    )
    return SymbolGrid(Role.GREEK, cells)


def rotate_lines(grid: SuperposedGrid, axis: str, shift: int) -> SuperposedGrid:
    """Cyclically shift whole columns or rows.

    axis is "columns" or "rows".  A shift of -1 moves the first column (or
    row) to the far end; +1 moves the last one to the front.
    """
    if axis not in ("columns", "rows"):
        raise ValueError(f"axis must be 'columns' or 'rows', got {axis!r}")
    x = grid.order
    shift %= x
    if axis == "columns":
        cells = tuple(
            tuple(row[(j - shift) % x] for j in range(x)) for row in grid.cells
        )
    else:
        cells = tuple(grid.cells[(i - shift) % x] for i in range(x))
    return SuperposedGrid(cells)


@dataclass(frozen=True)
class LinearConstraint:
    """A linear condition on letter values: sum of coeff * value == 0.

    Coefficients are listed per alphabet in letter order.  Within each
    alphabet they sum to zero, because they arise as letter multiplicities
    of an x-cell line minus one each.
    """

    latin: tuple[int, ...]
    greek: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.latin) != len(self.greek):
            raise ValueError("latin and greek coefficient lists differ in length")
        if not self.latin:
            raise ValueError("constraint must cover at least one letter")
        if sum(self.latin) != 0 or sum(self.greek) != 0:
            raise ValueError("coefficients must sum to zero within each alphabet")
        if not any(self.latin) and not any(self.greek):
            raise ValueError("constraint must have a nonzero coefficient")

    @property
    def order(self) -> int:
        return len(self.latin)

    def vector(self) -> tuple[int, ...]:
        return self.latin + self.greek

    def is_coupled(self) -> bool:
        return any(self.latin) and any(self.greek)

    def latin_side(self) -> "LinearConstraint":
        return LinearConstraint(self.latin, (0,) * self.order)

    def greek_side(self) -> "LinearConstraint":
        return LinearConstraint((0,) * self.order, self.greek)

    def canonical_key(self) -> tuple[int, ...]:
        """Sign- and scale-normalized vector; equal keys mean equal conditions."""
        vec = self.vector()
        g = 0
        for c in vec:
            g = gcd(g, abs(c))
        vec = tuple(c // g for c in vec)
        first = next(c for c in vec if c)
        if first < 0:
            vec = tuple(-c for c in vec)
        return vec

    def residual(self, assignment: ValueAssignment) -> int:
        return sum(
            c * v for c, v in zip(self.latin, assignment.latin_values)
        ) + sum(c * v for c, v in zip(self.greek, assignment.greek_values))

    def holds(self, assignment: ValueAssignment) -> bool:
        return self.residual(assignment) == 0

    def __str__(self) -> str:
        left: list[str] = []
        right: list[str] = []
        for role, letters, coeffs in (
            (Role.LATIN, LATIN_LETTERS, self.latin),
            (Role.GREEK, GREEK_LETTERS, self.greek),
        ):
            for index, coeff in enumerate(coeffs):
                if coeff == 0:
                    continue
                letter = SymbolId(role, index).letter
                term = letter if abs(coeff) == 1 else f"{abs(coeff)}{letter}"
                (left if coeff > 0 else right).append(term)
        return f"{'+'.join(left)} = {'+'.join(right)}"


def _rref(vectors):
    """Reduced row echelon basis over the rationals, rows sorted by pivot."""
    basis: list[list[Fraction]] = []
    pivots: list[int] = []
    for vec in vectors:
        row = [Fraction(c) for c in vec]
        for brow, bp in zip(basis, pivots):
            if row[bp]:
                f = row[bp]
                row = [r - f * b for r, b in zip(row, brow)]
        pivot = next((k for k, val in enumerate(row) if val), None)
        if pivot is None:
            continue
        inv = row[pivot]
        row = [r / inv for r in row]
        for k, (brow, bp) in enumerate(zip(basis, pivots)):
            if brow[pivot]:
                f = brow[pivot]
                basis[k] = [b - f * r for b, r in zip(brow, row)]
        basis.append(row)
        pivots.append(pivot)
    order = sorted(range(len(basis)), key=lambda k: pivots[k])
    return [basis[k] for k in order], [pivots[k] for k in order]


def _in_span(basis, pivots, vec) -> bool:
    row = [Fraction(c) for c in vec]
    for brow, bp in zip(basis, pivots):
        if row[bp]:
            f = row[bp]
            row = [r - f * b for r, b in zip(row, brow)]
    return not any(row)


def constraint_system_basis(
    constraints,
) -> tuple[LinearConstraint, ...]:
    """Canonical basis of a constraint system, for equivalence comparisons.

    Two systems constrain assignments identically exactly when their bases
    are equal.  Rows come out with integer coefficients, positive leading
    coefficient, sorted by leading position.
    """
    constraints = tuple(constraints)
    if not constraints:
        return ()
    x = constraints[0].order
    for c in constraints:
        if c.order != x:
            raise ValueError("constraints mix different orders")
    basis, _pivots = _rref(c.vector() for c in constraints)
    rows = []
    for row in basis:
        scale = 1
        for value in row:
            scale = scale * value.denominator // gcd(scale, value.denominator)
        ints = [int(value * scale) for value in row]
        rows.append(LinearConstraint(tuple(ints[:x]), tuple(ints[x:])))
    return tuple(rows)


def equivalent_systems(first, second) -> bool:
    """True when two constraint sets admit exactly the same assignments."""
    return constraint_system_basis(first) == constraint_system_basis(second)


def diagonal_constraints(pairs: SuperposedGrid) -> tuple[LinearConstraint, ...]:
    """Extract the value conditions imposed by lines with repeated letters.

    Every line must sum to the total of all Latin plus all Greek values, so
    a line whose letter multiset deviates from one-of-each forces a linear
    condition (multiplicity minus one per letter).  Lines are scanned in
    row, column, diagonal order; duplicates collapse to the first form seen.
    A condition that couples both alphabets is split into its per-alphabet
    halves when the system already implies each half separately.
    """
    x = pairs.order
    raw: list[LinearConstraint] = []
    seen: set[tuple[int, ...]] = set()
    for line in all_lines(x):
        latin_count = [0] * x
        greek_count = [0] * x
        for i, j in line_positions(line, x):
            l, g = pairs.cells[i][j]
            latin_count[l] += 1
            greek_count[g] += 1
        latin = tuple(c - 1 for c in latin_count)
        greek = tuple(c - 1 for c in greek_count)
        if not any(latin) and not any(greek):
            continue
        constraint = LinearConstraint(latin, greek)
        key = constraint.canonical_key()
        if key not in seen:
            seen.add(key)
            raw.append(constraint)

    basis, pivots = _rref(c.vector() for c in raw)
    out: list[LinearConstraint] = []
    out_seen: set[tuple[int, ...]] = set()
    for constraint in raw:
        parts = [constraint]
        if constraint.is_coupled() and _in_span(
            basis, pivots, constraint.latin_side().vector()
        ):
            parts = [constraint.latin_side(), constraint.greek_side()]
        for part in parts:
            key = part.canonical_key()
            if key not in out_seen:
                out_seen.add(key)
                out.append(part)
    return tuple(out)


def solve_assignments(constraints, x: int):
    """Yield every ValueAssignment of order x satisfying all constraints.

    Enumerates the full permutation space, so x is capped at
    MAX_SOLVE_ORDER.  Output order is lexicographic over the pair
    (latin value tuple, greek value tuple).
    """
    if not 1 <= x <= MAX_SOLVE_ORDER:
        raise ValueError(
            f"assignment enumeration is capped at order {MAX_SOLVE_ORDER}, got {x}"
        )
    constraints = tuple(constraints)
    for c in constraints:
        if c.order != x:
            raise ValueError(
                f"constraint order {c.order} does not match requested order {x}"
            )
    latin_domain = tuple(i * x for i in range(x))
    greek_domain = tuple(range(1, x + 1))

    # A pair satisfies a constraint when the latin part's contribution is
    # the exact negative of the greek part's, so bucket greek permutations
    # by their contribution vector and look latin ones up against it.
    buckets: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for greek in itertools.permutations(greek_domain):
        key = tuple(
            sum(c * v for c, v in zip(constraint.greek, greek))
            for constraint in constraints
        )
        buckets.setdefault(key, []).append(greek)
    for latin in itertools.permutations(latin_domain):
        need = tuple(
            -sum(c * v for c, v in zip(constraint.latin, latin))
            for constraint in constraints
        )
        for greek in buckets.get(need, ()):
            yield ValueAssignment(latin, greek)


# --- figure families -------------------------------------------------------

_LATIN_INDEX = {ch: k for k, ch in enumerate(LATIN_LETTERS)}
_GREEK_INDEX = {ch: k for k, ch in enumerate(GREEK_LETTERS)}


def _letter_grid(text: str) -> SymbolGrid:
    cells = tuple(
        tuple(_LATIN_INDEX[token] for token in line.split())
        for line in text.strip().splitlines()
    )
    return SymbolGrid(Role.LATIN, cells)


def _pair_grid(text: str) -> SuperposedGrid:
    cells = tuple(
        tuple(
            (_LATIN_INDEX[token[0]], _GREEK_INDEX[token[1]])
            for token in line.split()
        )
        for line in text.strip().splitlines()
    )
    return SuperposedGrid(cells)


_L3_REFLECT = _letter_grid("""
a b c
b c a
c a b
""")

_L4_DIAG_C = _letter_grid("""
a b c d
d c b a
b a d c
c d a b
""")

# The only other order-4 arrangement with both diagonals complete once the
# first row is fixed: the main diagonal runs a, d, b, c instead of a, c, d, b.
_L4_DIAG_D = _letter_grid("""
a b c d
c d a b
d c b a
b a d c
""")

_L4_BLOCK = _letter_grid("""
a a d d
d d a a
b b c c
c c b b
""")

_L4_INTERLEAVE = _letter_grid("""
a d a d
b c b c
d a d a
c b c b
""")

_L5_DIAG = _letter_grid("""
a b c d e
e c d a b
d e b c a
b d a e c
c a e b d
""")

_L5_CENTER = _letter_grid("""
c d e a b
b c d e a
a b c d e
e a b c d
d e a b c
""")

_E6_PAIRED = _pair_grid("""
aα aζ aβ fε fγ fδ
fα fζ fβ aε aγ aδ
bα bζ bβ eε eγ eδ
eζ eα eε bβ bδ bγ
cζ cα cε dβ dδ dγ
dζ dα dε cβ cδ cγ
""")

_EDITOR_CELLS = (
    (3, 36, 30, 4, 11, 27),
    (22, 13, 35, 12, 14, 15),
    (16, 18, 8, 31, 17, 21),
    (28, 20, 6, 29, 19, 9),
    (32, 23, 25, 2, 24, 5),
    (10, 1, 7, 33, 26, 34),
)


@dataclass(frozen=True)
class Family:
    """A named figure family: its id, order, and a one-line description."""

    family_id: str
    order: int
    summary: str


FAMILIES: dict[str, Family] = {
    f.family_id: f
    for f in (
        Family("e3.reflect", 3, "Greek part mirrors the Latin part across the middle column"),
        Family("e3.rotated", 3, "e3.reflect with its first column moved to the end"),
        Family("e4.diag", 4, "both diagonals complete; mirrored across the main diagonal (variants c and d)"),
        Family("e4.rotated", 4, "e4.diag with its first column moved to the end"),
        Family("e4.block", 4, "rows pair two letters; mirrored across the main diagonal"),
        Family("e4.interleave", 4, "rows alternate two letters; mirrored across the main diagonal"),
        Family("e5.diag", 5, "both diagonals complete; mirrored across the middle column"),
        Family("e5.rotated", 5, "e5.diag with its first column moved to the end"),
        Family("e5.center", 5, "main diagonal repeats one letter; mirrored across the middle row"),
        Family("e6.paired", 6, "letters paired by rows and columns; repeats two pairs, kept as a negative fixture"),
        Family("e6.editor", 6, "one fixed order-6 magic square with no free letter values"),
    )
}

_REFLECTED: dict[str, tuple[SymbolGrid, Axis]] = {
    "e3.reflect": (_L3_REFLECT, Axis.MIDDLE_COLUMN),
    "e4.block": (_L4_BLOCK, Axis.MAIN_DIAGONAL),
    "e4.interleave": (_L4_INTERLEAVE, Axis.MAIN_DIAGONAL),
    "e5.diag": (_L5_DIAG, Axis.MIDDLE_COLUMN),
    "e5.center": (_L5_CENTER, Axis.MIDDLE_ROW),
}

_ROTATED: dict[str, str] = {
    "e3.rotated": "e3.reflect",
    "e4.rotated": "e4.diag",
    "e5.rotated": "e5.diag",
}


def family_figure(family_id: str, variant: str = "c") -> SuperposedGrid:
    """The lettered pair grid of a family, built by its own rule."""
    if family_id not in FAMILIES:
        known = ", ".join(FAMILIES)
        raise ValueError(f"unknown family {family_id!r} (known: {known})")
    if family_id == "e6.editor":
        raise ValueError(
            "e6.editor is a fixed numeric square with no letter figure; "
            "use editor_square()"
        )
    if variant not in ("c", "d"):
        raise ValueError(f"variant must be 'c' or 'd', got {variant!r}")
    if variant == "d" and family_id != "e4.diag":
        raise ValueError("variant 'd' only applies to e4.diag")
    if family_id == "e6.paired":
        return _E6_PAIRED
    if family_id == "e4.diag":
        latin = _L4_DIAG_D if variant == "d" else _L4_DIAG_C
        return superpose(latin, reflect_greek(latin, Axis.MAIN_DIAGONAL))
    if family_id in _ROTATED:
        return rotate_lines(family_figure(_ROTATED[family_id]), "columns", -1)
    latin, axis = _REFLECTED[family_id]
    return superpose(latin, reflect_greek(latin, axis))


def editor_square() -> Square:
    """The fixed order-6 square attached to the e6.editor family."""
    return Square(_EDITOR_CELLS)


def build_square(
    family_id: str, assignment: ValueAssignment, variant: str = "c"
) -> Square:
    """Evaluate a family figure under an assignment, checking preconditions.

    The figure must use each letter pair exactly once (e6.paired never does,
    and is always reported through OrthogonalityError) and the assignment
    must satisfy every line constraint of the figure.
    """
    figure = family_figure(family_id, variant=variant)
    orth = verify_orthogonality(figure)
    if not orth.ok:
        raise OrthogonalityError(orth)
    if figure.order != assignment.order:
        raise ValueError(
            f"family {family_id} has order {figure.order}, assignment has "
            f"order {assignment.order}"
        )
    for constraint in diagonal_constraints(figure):
        if not constraint.holds(assignment):
            raise ConstraintViolationError(constraint, assignment)
    return evaluate(figure, assignment)
