"""Magic squares from superposed Latin and Greek letter grids.

The package splits each number 1..x*x into a multiple-of-x part (Latin
letters) plus a 1..x part (Greek letters), builds lettered figures whose
rows and columns are sum-correct by construction, extracts the linear
conditions the diagonals impose on letter values, and enumerates or checks
the resulting squares.
"""
from .construct import (
    FAMILIES,
    MAX_SOLVE_ORDER,
    Axis,
    ConstraintViolationError,
    Family,
    LinearConstraint,
    MirrorConflictError,
    OrthogonalityError,
    build_square,
    constraint_system_basis,
    diagonal_constraints,
    editor_square,
    equivalent_systems,
    family_figure,
    reflect_greek,
    rotate_lines,
    solve_assignments,
)
from .enumeration import (
    ORACLE_MAX_ORDER,
    CanonicalSquare,
    FamilyCensus,
    SubsetReport,
    canonicalize,
    census,
    dihedral_images,
    enumerate_family,
    oracle_search,
    subset_check,
)
from .model import (
    GREEK_LETTERS,
    LATIN_LETTERS,
    Role,
    Square,
    SuperposedGrid,
    SymbolGrid,
    SymbolId,
    ValueAssignment,
    compose,
    decompose,
    evaluate,
    magic_constant,
    superpose,
)
from .verify import (
    LineId,
    LineKind,
    OrthogonalityReport,
    RepeatReport,
    VerificationReport,
    Verdict,
    all_lines,
    line_positions,
    line_sums,
    pair_name,
    verify_latin,
    verify_magic,
    verify_orthogonality,
)

__version__ = "0.1.0"

__all__ = [
    "Axis",
    "CanonicalSquare",
    "ConstraintViolationError",
    "FAMILIES",
    "Family",
    "FamilyCensus",
    "GREEK_LETTERS",
    "LATIN_LETTERS",
    "LineId",
    "LineKind",
    "LinearConstraint",
    "MAX_SOLVE_ORDER",
    "MirrorConflictError",
    "ORACLE_MAX_ORDER",
    "OrthogonalityError",
    "OrthogonalityReport",
    "RepeatReport",
    "Role",
    "Square",
    "SubsetReport",
    "SuperposedGrid",
    "SymbolGrid",
    "SymbolId",
    "ValueAssignment",
    "VerificationReport",
    "Verdict",
    "all_lines",
    "build_square",
    "canonicalize",
    "census",
    "compose",
    "constraint_system_basis",
    "decompose",
    "diagonal_constraints",
    "dihedral_images",
    "editor_square",
    "enumerate_family",
    "equivalent_systems",
    "evaluate",
    "family_figure",
    "line_positions",
    "line_sums",
    "magic_constant",
    "oracle_search",
    "pair_name",
    "reflect_greek",
    "rotate_lines",
    "solve_assignments",
    "subset_check",
    "superpose",
    "verify_latin",
    "verify_magic",
    "verify_orthogonality",
]
