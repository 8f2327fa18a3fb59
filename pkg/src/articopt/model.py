"""Domain types and requirement-satisfaction semantics.

Course ids are plain strings, normalized once at the boundary (trim plus
whitespace collapse, case-sensitive). A plan is a frozenset of course ids.
All types are immutable after construction and safe to share across threads.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from decimal import Decimal
from typing import Iterable, TYPE_CHECKING

from .errors import ValidationError

if TYPE_CHECKING:
    from .ingest import Catalog

Plan = frozenset[str]

AGREEMENT_KINDS = ("major", "general_education", "associate_degree")

_WS_RUN = re.compile(r"\s+")
_LEADING_LETTERS = re.compile(r"^[A-Za-z]+")

MAX_COURSE_UNITS = Decimal("20")


def normalize_course_id(raw: str) -> str:
    """Trim and collapse internal whitespace runs to a single space."""
    normalized = _WS_RUN.sub(" ", raw.strip())
    if not normalized:
        raise ValidationError("course id must be non-empty")
    return normalized


def department_of(course_id: str) -> str:
    """Longest leading run of letters, e.g. ``PSYC A100`` -> ``PSYC``."""
    match = _LEADING_LETTERS.match(course_id)
    if match is None:
        raise ValidationError(
            f"course id {course_id!r} has no leading department letters"
        )
    return match.group(0)


def make_plan(course_ids: Iterable[str]) -> Plan:
    """Normalize each id and collect into a plan (set semantics)."""
    return frozenset(normalize_course_id(c) for c in course_ids)


@dataclass(frozen=True)
class Course:
    id: str
    title: str
    units: Decimal = Decimal("3.0")

    def __post_init__(self) -> None:
        if self.units < 0:
            raise ValidationError(f"course {self.id!r}: units must be >= 0")
        if self.units > MAX_COURSE_UNITS:
            raise ValidationError(
                f"course {self.id!r}: units {self.units} exceed {MAX_COURSE_UNITS}"
            )
        if self.units != self.units.quantize(Decimal("0.1")):
            raise ValidationError(
                f"course {self.id!r}: units carry more than one decimal place"
            )


@dataclass(frozen=True)
class OptionGroup:
    """A conjunction of courses: taking the group means taking ALL of them."""

    courses: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.courses:
            raise ValidationError("option group must list at least one course")
        if len(set(self.courses)) != len(self.courses):
            raise ValidationError(
                f"option group {self.courses} repeats a course"
            )

    @property
    def course_set(self) -> frozenset[str]:
        return frozenset(self.courses)

    @property
    def department(self) -> str:
        """Department of the group's first course (drives distinctness rules)."""
        return department_of(self.courses[0])


@dataclass(frozen=True)
class Requirement:
    id: str
    label: str
    options: tuple[OptionGroup, ...]
    choose: int = 1
    distinct_departments: bool = False

    def __post_init__(self) -> None:
        if not self.options:
            raise ValidationError(f"requirement {self.id!r}: no option groups")
        if self.choose < 1:
            raise ValidationError(f"requirement {self.id!r}: choose must be >= 1")
        if self.choose > len(self.options):
            raise ValidationError(
                f"requirement {self.id!r}: choose {self.choose} exceeds "
                f"{len(self.options)} option groups"
            )
        if self.distinct_departments:
            departments = {g.department for g in self.options}
            if len(departments) < self.choose:
                raise ValidationError(
                    f"requirement {self.id!r}: needs {self.choose} distinct "
                    f"departments but options span only {len(departments)}"
                )


@dataclass(frozen=True)
class Agreement:
    college: str
    institution: str
    major: str
    year: str
    kind: str
    requirements: tuple[Requirement, ...]

    def __post_init__(self) -> None:
        if self.kind not in AGREEMENT_KINDS:
            raise ValidationError(
                f"agreement kind {self.kind!r} not one of {AGREEMENT_KINDS}"
            )
        if not self.requirements:
            raise ValidationError("agreement must list at least one requirement")
        seen: set[str] = set()
        for requirement in self.requirements:
            if requirement.id in seen:
                raise ValidationError(
                    f"duplicate requirement id {requirement.id!r} in agreement"
                )
            seen.add(requirement.id)

    @property
    def store_id(self) -> str:
        return f"{self.institution}|{self.major}|{self.year}"


@dataclass(frozen=True)
class Selection:
    """Agreements chosen by the user, plus the catalog they resolve against."""

    college: str
    agreements: tuple[Agreement, ...]
    catalog: "Catalog"

    def __post_init__(self) -> None:
        if not self.agreements:
            raise ValidationError("selection must name at least one agreement")
        for agreement in self.agreements:
            if agreement.college != self.college:
                raise ValidationError(
                    f"agreement {agreement.store_id!r} belongs to "
                    f"{agreement.college!r}, not {self.college!r}"
                )


@dataclass(frozen=True)
class Constraints:
    pinned: frozenset[str] = field(default_factory=frozenset)
    excluded: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        overlap = self.pinned & self.excluded
        if overlap:
            raise ValidationError(
                f"courses both pinned and excluded: {sorted(overlap)}"
            )


def satisfies(plan: Plan, requirement: Requirement) -> bool:
    """True iff ``choose`` distinct option groups are fully inside the plan.

    With ``distinct_departments``, the contained groups must additionally
    span at least ``choose`` distinct first-course departments.
    """
    contained = [g for g in requirement.options if g.course_set <= plan]
    if requirement.distinct_departments:
        return len({g.department for g in contained}) >= requirement.choose
    return len(contained) >= requirement.choose


def plan_satisfies_all(plan: Plan, selection: Selection) -> bool:
    """Set-cover semantics: one course may serve any number of requirements."""
    return all(
        satisfies(plan, requirement)
        for agreement in selection.agreements
        for requirement in agreement.requirements
    )


def total_units(plan: Plan, catalog: "Catalog") -> Decimal:
    """Sum of semester units over the plan, exact decimal arithmetic."""
    total = Decimal("0.0")
    for course_id in sorted(plan):
        course = catalog.courses.get(course_id)
        if course is None:
            raise ValidationError(f"unresolved course: {course_id}")
        total += course.units
    return total
