"""Magic, pandiagonal, and Franklin squares built from quotient/remainder
grid pairs.

The core identity is M[r][c] = n * Q[r][c] + R[r][c] + 1: every square M
with cells 1..n^2 splits uniquely into a quotient grid Q and remainder grid
R with values 0..n-1, and composing well-chosen Q/R pairs back together is
how the classic bent-diagonal squares are constructed.  This package
verifies squares line by line, decomposes and composes them, expands seed
patterns into full squares, searches exhaustively for natural Franklin
squares, and ships the classic examples as checksummed fixtures.
"""

from .composition import compose, decompose, is_orthogonal
from .core import (
    AuxPair,
    IndexTargets,
    Square,
    aux_constant,
    is_balanced,
    is_natural,
    magic_constant,
)
from .fixtures import FixtureEntry, FixtureError, FixtureKind
from .lines import LineDescriptor, LineFamily, family_lines
from .patterns import (
    Archetype,
    GeneratedSquare,
    SeedPattern,
    canonical_row_seed,
    find_remainder_seeds,
    generate,
    preset,
    preset_names,
)
from .search import SearchMode, SearchOptions, SearchOutcome, search_natural_franklin
from .verify import (
    ClassifyOutcome,
    ConditionResult,
    ConditionStatus,
    PropertyReport,
    check_lines,
    classify,
    verify,
)

__version__ = "0.1.0"

__all__ = [
    "Archetype",
    "AuxPair",
    "ClassifyOutcome",
    "ConditionResult",
    "ConditionStatus",
    "FixtureEntry",
    "FixtureError",
    "FixtureKind",
    "GeneratedSquare",
    "IndexTargets",
    "LineDescriptor",
    "LineFamily",
    "PropertyReport",
    "SearchMode",
    "SearchOptions",
    "SearchOutcome",
    "SeedPattern",
    "Square",
    "aux_constant",
    "canonical_row_seed",
    "check_lines",
    "classify",
    "compose",
    "decompose",
    "family_lines",
    "find_remainder_seeds",
    "generate",
    "is_balanced",
    "is_natural",
    "is_orthogonal",
    "magic_constant",
    "preset",
    "preset_names",
    "search_natural_franklin",
    "verify",
    "__version__",
]
