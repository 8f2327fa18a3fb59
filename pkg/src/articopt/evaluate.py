"""Scoring candidate plans for optimality mistakes, plus the unit-cap check.

A mistake is a necessary course excluded from, or an unnecessary excess
course included in, a candidate plan. The count is the minimum symmetric
difference between the candidate and any optimal plan, which scores every
optimal plan as zero mistakes and counts both mistake kinds symmetrically.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal

from .errors import ValidationError
from .ingest import Catalog
from .model import Plan, Selection, total_units
from .solver import Constraints, solve, _requirement_views

DEFAULT_UNIT_CAP = Decimal("60")


@dataclass(frozen=True)
class MistakeReport:
    missing: int
    excess: int
    nearest_optimum: Plan
    unfulfilled: tuple[tuple[str, str], ...]

    @property
    def total(self) -> int:
        return self.missing + self.excess


@dataclass(frozen=True)
class UnitCapCheck:
    total_units: Decimal
    cap: Decimal

    @property
    def passed(self) -> bool:
        return self.total_units <= self.cap


def score_plan(candidate: Plan, selection: Selection) -> MistakeReport:
    """Compare a candidate against the nearest optimal plan.

    Nearest means minimum symmetric difference; ties prefer the larger
    intersection with the candidate, then the lexicographically smallest
    plan. Unknown candidate courses are a validation error.
    """
    unknown = sorted(c for c in candidate if c not in selection.catalog.courses)
    if unknown:
        raise ValidationError(f"unresolved course: {', '.join(unknown)}")

    solution = solve(selection, Constraints())
    nearest = min(
        solution.all_optima,
        key=lambda plan: (
            len(candidate ^ plan),
            -len(candidate & plan),
            tuple(sorted(plan)),
        ),
    )
    unfulfilled = tuple(
        (view.agreement_id, view.requirement_id)
        for view in _requirement_views(selection, frozenset())
        if not view.satisfied_by(frozenset(candidate))
    )
    return MistakeReport(
        missing=len(nearest - candidate),
        excess=len(candidate - nearest),
        nearest_optimum=nearest,
        unfulfilled=unfulfilled,
    )


def unit_cap_check(
    plan: Plan, catalog: Catalog, cap: Decimal = DEFAULT_UNIT_CAP
) -> UnitCapCheck:
    """Strict comparison: exactly at the cap still passes."""
    return UnitCapCheck(total_units=total_units(plan, catalog), cap=cap)
