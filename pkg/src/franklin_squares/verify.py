"""Evaluate a square against every line-sum condition and classify it.

verify() produces a PropertyReport: one ConditionResult per condition
family (rows, columns, both main diagonals, wraparound diagonals, the four
bent families, half-lines, 2x2 subsquares) plus derived flags. Every
failing line is reported with its actual sum, sorted by (family, shift),
so claims about exactly which lines fail are checkable.

Status semantics:
  PASSED / FAILED     the condition was checked line by line.
  NOT_APPLICABLE      the geometry does not exist (odd order has no bent
                      diagonals, half-lines, or aligned subsquare grid).
  UNSATISFIABLE       the geometry exists but no square could pass: an odd
                      target for the doubled half-line comparison, or a
                      subsquare target 4*line_sum/n that is not an integer.
                      Failing lines are still listed with actual sums.

Half-lines are compared doubled (2 x half-sum == line target) so odd
targets such as 111 never leave integer arithmetic. A square is Franklin
when rows, columns, all four bent families, all half-lines, and all
subsquares pass; the flag is false whenever any of those sections is not
PASSED, including structurally unsatisfiable sections.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .core import IndexTargets, Square, is_balanced, is_natural
from .lines import (
    BENT_FAMILIES,
    HALF_LINE_FAMILIES,
    LineDescriptor,
    LineFamily,
    family_lines,
)


class ConditionStatus(Enum):
    PASSED = "passed"
    FAILED = "failed"
    NOT_APPLICABLE = "not_applicable"
    UNSATISFIABLE = "unsatisfiable"


_FAMILY_ORDER = {family: i for i, family in enumerate(LineFamily)}


@dataclass(frozen=True)
class ConditionResult:
    """Outcome of one condition: which lines were checked, which failed."""

    condition: str
    status: ConditionStatus
    target: int | None
    doubled: bool
    lines_checked: int
    failures: tuple[tuple[LineDescriptor, int], ...]

    @property
    def passed(self) -> bool:
        return self.status is ConditionStatus.PASSED

    def failing_shifts(self, family: LineFamily) -> tuple[int, ...]:
        return tuple(d.shift for d, _ in self.failures if d.family is family)


@dataclass(frozen=True)
class PropertyReport:
    """Full verification report for one square at one target."""

    order: int
    targets: IndexTargets
    conditions: tuple[ConditionResult, ...]
    semi_magic: bool
    magic: bool
    pandiagonal: bool
    franklin: bool
    pandiagonal_franklin: bool
    natural: bool
    balanced: bool

    def condition(self, name: str) -> ConditionResult:
        for result in self.conditions:
            if result.condition == name:
                return result
        raise KeyError(name)


def check_lines(
    sq: Square,
    lines: tuple[LineDescriptor, ...],
    target: int,
    doubled: bool = False,
    condition: str = "lines",
) -> ConditionResult:
    """Sum each line over sq; a line fails when its (optionally doubled)
    sum differs from the target."""
    n = sq.order
    failures = []
    for line in lines:
        for r, c in line.cells:
            if not (0 <= r < n and 0 <= c < n):
                raise ValueError(
                    f"line {line.family.value} #{line.shift} does not fit order {n}"
                )
        actual = sum(sq.cells[r][c] for r, c in line.cells)
        compared = 2 * actual if doubled else actual
        if compared != target:
            failures.append((line, actual))
    failures.sort(key=lambda f: (_FAMILY_ORDER[f[0].family], f[0].shift))
    status = ConditionStatus.PASSED if not failures else ConditionStatus.FAILED
    return ConditionResult(
        condition=condition,
        status=status,
        target=target,
        doubled=doubled,
        lines_checked=len(lines),
        failures=tuple(failures),
    )


def _not_applicable(condition: str) -> ConditionResult:
    return ConditionResult(
        condition=condition,
        status=ConditionStatus.NOT_APPLICABLE,
        target=None,
        doubled=False,
        lines_checked=0,
        failures=(),
    )


def _subsquare_result(sq: Square, targets: IndexTargets) -> ConditionResult:
    """Subsquares compare n * (4-cell sum) against 4 * line_sum so the
    check stays exact when 4*line_sum/n is not an integer; in that case no
    square can pass and the section is UNSATISFIABLE."""
    n = sq.order
    lines = family_lines(n, LineFamily.SUBSQUARE_2x2)
    target = targets.subsquare_target()
    failures = []
    for line in lines:
        actual = sum(sq.cells[r][c] for r, c in line.cells)
        if n * actual != 4 * targets.line_sum:
            failures.append((line, actual))
    failures.sort(key=lambda f: (_FAMILY_ORDER[f[0].family], f[0].shift))
    if target is None:
        status = ConditionStatus.UNSATISFIABLE
    elif failures:
        status = ConditionStatus.FAILED
    else:
        status = ConditionStatus.PASSED
    return ConditionResult(
        condition="subsquares",
        status=status,
        target=target,
        doubled=False,
        lines_checked=len(lines),
        failures=tuple(failures),
    )


def verify(sq: Square, targets: IndexTargets) -> PropertyReport:
    """Check every condition family of sq at targets.line_sum."""
    n = sq.order
    if targets.order != n:
        raise ValueError(f"targets are for order {targets.order}, square is {n}")
    m = targets.line_sum

    conditions: list[ConditionResult] = [
        check_lines(sq, family_lines(n, LineFamily.ROW), m, condition="rows"),
        check_lines(sq, family_lines(n, LineFamily.COLUMN), m, condition="columns"),
        check_lines(
            sq, family_lines(n, LineFamily.MAIN_DIAGONAL), m,
            condition="main_diagonal",
        ),
        check_lines(
            sq, family_lines(n, LineFamily.CROSS_DIAGONAL), m,
            condition="cross_diagonal",
        ),
        check_lines(
            sq,
            family_lines(n, LineFamily.PANDIAG_DOWNRIGHT)
            + family_lines(n, LineFamily.PANDIAG_DOWNLEFT),
            m,
            condition="pandiagonals",
        ),
    ]

    even = n % 2 == 0
    if even:
        for family in BENT_FAMILIES:
            conditions.append(
                check_lines(
                    sq, family_lines(n, family), m,
                    condition=family.value.lower(),
                )
            )
        half_lines = tuple(
            line for kind in HALF_LINE_FAMILIES for line in family_lines(n, kind)
        )
        half = check_lines(sq, half_lines, m, doubled=True, condition="half_lines")
        if m % 2 != 0:
            # every doubled half-line sum is even, an odd target cannot hold
            half = ConditionResult(
                condition=half.condition,
                status=ConditionStatus.UNSATISFIABLE,
                target=half.target,
                doubled=True,
                lines_checked=half.lines_checked,
                failures=half.failures,
            )
        conditions.append(half)
        conditions.append(_subsquare_result(sq, targets))
    else:
        for family in BENT_FAMILIES:
            conditions.append(_not_applicable(family.value.lower()))
        conditions.append(_not_applicable("half_lines"))
        conditions.append(_not_applicable("subsquares"))

    by_name = {c.condition: c for c in conditions}
    semi_magic = by_name["rows"].passed and by_name["columns"].passed
    magic = (
        semi_magic
        and by_name["main_diagonal"].passed
        and by_name["cross_diagonal"].passed
    )
    pandiagonal = by_name["pandiagonals"].passed
    franklin = (
        semi_magic
        and all(by_name[f.value.lower()].passed for f in BENT_FAMILIES)
        and by_name["half_lines"].passed
        and by_name["subsquares"].passed
    )
    return PropertyReport(
        order=n,
        targets=targets,
        conditions=tuple(conditions),
        semi_magic=semi_magic,
        magic=magic,
        pandiagonal=pandiagonal,
        franklin=franklin,
        pandiagonal_franklin=franklin and pandiagonal,
        natural=is_natural(sq),
        balanced=is_balanced(sq),
    )


@dataclass(frozen=True)
class ClassifyOutcome:
    """Labels a square earns at its automatically chosen target."""

    labels: frozenset[str]
    target_inferred: bool
    report: PropertyReport


def classify(sq: Square) -> ClassifyOutcome:
    """Pick the target from the square itself and label it.

    Natural squares are checked at n(n^2+1)/2, balanced squares at
    n(n-1)/2; anything else is checked at its first row sum and flagged
    as an inferred target.
    """
    n = sq.order
    inferred = False
    if is_natural(sq):
        targets = IndexTargets.natural(n)
    elif is_balanced(sq):
        targets = IndexTargets.balanced(n)
    else:
        targets = IndexTargets(n, sum(sq.cells[0]))
        inferred = True
    report = verify(sq, targets)
    labels = set()
    if report.natural:
        labels.add("natural")
    if report.balanced:
        labels.add("balanced")
    if report.semi_magic:
        labels.add("semi-magic")
    if report.magic:
        labels.add("magic")
    if report.pandiagonal:
        labels.add("pandiagonal")
    if report.franklin:
        labels.add("franklin")
    if report.pandiagonal_franklin:
        labels.add("pandiagonal-franklin")
    return ClassifyOutcome(
        labels=frozenset(labels), target_inferred=inferred, report=report
    )
