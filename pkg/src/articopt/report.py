"""Combined-report synthesis and rendering.

A solution is folded into the combined articulation report shape: one
"complete this" row per forced course, then one "complete ONE" row per
cluster of remaining requirements that share interchangeable option groups
across the optimal family. Only optimality-preserving options are listed.
When the optimal family does not factor into independent rows, the report
falls back to enumerating the optima explicitly instead of presenting a
misleading product structure.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from decimal import Decimal
from enum import Enum
from math import prod
from typing import Any

from .errors import ValidationError
from .model import OptionGroup, Plan, Selection, total_units
from .solver import Solution, _requirement_views

COMPLETE_THIS_TEXT = "Complete the course in this row."
COMPLETE_ONE_TEXT = "Complete ONE of the course options listed in this row."
END_OF_REPORT = "END OF REPORT"


class RowInstruction(str, Enum):
    COMPLETE_THIS = "COMPLETE_THIS"
    COMPLETE_ONE = "COMPLETE_ONE"


@dataclass(frozen=True)
class AgreementEcho:
    institution: str
    major: str
    year: str
    kind: str

    @property
    def display(self) -> str:
        suffix = " Major" if self.kind == "major" else ""
        return f"{self.institution} – {self.major}{suffix}"


@dataclass(frozen=True)
class ReportRow:
    instruction: RowInstruction
    options: tuple[OptionGroup, ...]
    satisfies: tuple[tuple[str, str], ...]

    def __post_init__(self) -> None:
        if self.instruction is RowInstruction.COMPLETE_THIS:
            if len(self.options) != 1:
                raise ValidationError("a complete-this row holds exactly one group")
        elif len(self.options) < 2:
            raise ValidationError("a complete-one row needs at least two options")


@dataclass(frozen=True)
class CombinedReport:
    college: str
    agreements: tuple[AgreementEcho, ...]
    rows: tuple[ReportRow, ...]
    separable: bool
    explicit_optima: tuple[tuple[str, ...], ...] | None
    opt_size: int
    units_min: Decimal
    units_max: Decimal
    course_titles: dict[str, str]


def _first_appearance_orders(
    selection: Selection,
) -> tuple[dict[str, int], dict[frozenset[str], tuple[int, OptionGroup]]]:
    """Assign every course and option group its first-encounter ordinal."""
    course_order: dict[str, int] = {}
    group_order: dict[frozenset[str], tuple[int, OptionGroup]] = {}
    ordinal = 0
    for agreement in selection.agreements:
        for requirement in agreement.requirements:
            for group in requirement.options:
                key = group.course_set
                if key not in group_order:
                    group_order[key] = (ordinal, group)
                for course in group.courses:
                    if course not in course_order:
                        course_order[course] = ordinal
                    ordinal += 1
    return course_order, group_order


def synthesize_rows(solution: Solution, selection: Selection) -> CombinedReport:
    """Fold a solution into combined-report rows (see module docstring)."""
    views = _requirement_views(selection, solution.constraints_applied.excluded)
    forced = solution.forced
    optima = solution.all_optima
    course_order, group_order = _first_appearance_orders(selection)

    echo = tuple(
        AgreementEcho(a.institution, a.major, a.year, a.kind)
        for a in selection.agreements
    )
    groups_by_agreement: dict[str, list[frozenset[str]]] = {}
    for view in views:
        groups_by_agreement.setdefault(view.agreement_id, []).extend(view.groups)

    def annotate(hit: Any) -> tuple[tuple[str, str], ...]:
        pairs = []
        for agreement in selection.agreements:
            if any(hit(g) for g in groups_by_agreement.get(agreement.store_id, [])):
                pairs.append((agreement.institution, agreement.major))
        return tuple(pairs)

    forced_rows = [
        ReportRow(
            instruction=RowInstruction.COMPLETE_THIS,
            options=(OptionGroup(courses=(course,)),),
            satisfies=annotate(lambda g, c=course: c in g),
        )
        for course in sorted(
            forced, key=lambda c: (course_order.get(c, len(course_order)), c)
        )
    ]

    # Interchangeable-option clusters over requirements the forced set leaves
    # unsatisfied. usable(P, r): attainable groups inside optimum P that are
    # not swallowed by the forced set; any such group can serve in some
    # witness family for r, so sharing one makes two requirements a cluster.
    residual = [
        (idx, view)
        for idx, view in enumerate(views)
        if not view.satisfied_by(forced)
    ]
    usable: dict[int, set[frozenset[str]]] = {idx: set() for idx, _ in residual}
    for plan in optima:
        for idx, view in residual:
            for g in view.groups:
                if g <= plan and not (g <= forced):
                    usable[idx].add(g)

    parent = {idx: idx for idx, _ in residual}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for plan in optima:
        owner: dict[frozenset[str], int] = {}
        for idx, view in residual:
            for g in view.groups:
                if g <= plan and not (g <= forced):
                    if g in owner:
                        parent[find(idx)] = find(owner[g])
                    else:
                        owner[g] = idx

    clusters: dict[int, list[int]] = {}
    for idx, _ in residual:
        clusters.setdefault(find(idx), []).append(idx)

    choice_rows = []
    for members in clusters.values():
        groups: set[frozenset[str]] = set()
        for idx in members:
            groups |= usable[idx]
        ordered = sorted(groups, key=lambda g: group_order[g][0])
        choice_rows.append(
            (
                min(members),
                ReportRow(
                    instruction=RowInstruction.COMPLETE_ONE,
                    options=tuple(group_order[g][1] for g in ordered),
                    satisfies=annotate(lambda g, gs=groups: g in gs),
                ),
            )
        )
    choice_rows.sort(key=lambda item: item[0])
    rows = tuple(forced_rows) + tuple(row for _, row in choice_rows)

    # Cross-product check: forced plus one pick per choice row must rebuild
    # exactly the optimal family, or the rows are not a faithful factoring.
    separable = prod(len(row.options) for _, row in choice_rows) == len(optima)
    if separable:
        combos: set[Plan] = {frozenset(forced)}
        for _, row in choice_rows:
            combos = {
                plan | group.course_set
                for plan in combos
                for group in row.options
            }
        separable = combos == optima

    explicit = None
    if not separable:
        rows = tuple(forced_rows)
        explicit = tuple(sorted(tuple(sorted(plan)) for plan in optima))

    units = sorted(total_units(plan, selection.catalog) for plan in optima)
    mentioned = set(forced) | {
        c for plan in optima for c in plan
    } | {c for row in rows for g in row.options for c in g.courses}
    titles = {
        c: selection.catalog.courses[c].title
        for c in sorted(mentioned)
        if c in selection.catalog.courses
    }

    return CombinedReport(
        college=selection.college,
        agreements=echo,
        rows=rows,
        separable=separable,
        explicit_optima=explicit,
        opt_size=solution.opt_size,
        units_min=units[0],
        units_max=units[-1],
        course_titles=titles,
    )


def _group_text(group: OptionGroup, titles: dict[str, str]) -> str:
    parts = []
    for course in group.courses:
        title = titles.get(course)
        parts.append(f"{course} - {title}" if title else course)
    return " AND ".join(parts)


def render_markdown(report: CombinedReport) -> str:
    """Deterministic markdown rendering of the combined report."""
    lines = [
        "# Combined ASSIST Articulation Report",
        "",
        "## USER INPUTS",
        "",
        f"Community College Selected: {report.college}",
        "",
        "University/Major Pairs Selected:",
        "",
    ]
    for agreement in report.agreements:
        lines.append(f"- {agreement.display} ({agreement.year})")
    lines += [
        "",
        "## REPORT COURSE REQUIREMENTS",
        "",
        "| Row Instructions | Community College Course Option(s) "
        "| Course Satisfies Which Transfer Requirement(s) |",
        "| --- | --- | --- |",
    ]
    display = {
        (a.institution, a.major): a.display for a in report.agreements
    }
    instruction_text = {
        RowInstruction.COMPLETE_THIS: COMPLETE_THIS_TEXT,
        RowInstruction.COMPLETE_ONE: COMPLETE_ONE_TEXT,
    }
    for row in report.rows:
        options = " --- Or --- ".join(
            _group_text(group, report.course_titles) for group in row.options
        )
        satisfies = "; ".join(display[pair] for pair in row.satisfies)
        lines.append(
            f"| {instruction_text[row.instruction]} | {options} | {satisfies} |"
        )
    lines.append("")
    if not report.separable and report.explicit_optima is not None:
        lines += ["## OPTIMAL PLANS (non-separable)", ""]
        for i, plan in enumerate(report.explicit_optima, start=1):
            lines.append(f"{i}. {', '.join(plan)}")
        lines.append("")
    if report.units_min == report.units_max:
        units = f"{report.units_min}"
    else:
        units = f"{report.units_min}–{report.units_max}"
    lines.append(
        f"Optimal plan size: {report.opt_size} courses. Total units: {units}."
    )
    lines += ["", END_OF_REPORT, ""]
    return "\n".join(lines)


def render_json(report: CombinedReport) -> dict[str, Any]:
    """Canonical JSON-ready dict mirroring the report rows."""
    return {
        "college": report.college,
        "agreements": [
            {
                "institution": a.institution,
                "major": a.major,
                "year": a.year,
                "kind": a.kind,
            }
            for a in report.agreements
        ],
        "opt_size": report.opt_size,
        "rows": [
            {
                "instruction": row.instruction.value,
                "options": [list(group.courses) for group in row.options],
                "satisfies": [
                    [institution, major] for institution, major in row.satisfies
                ],
            }
            for row in report.rows
        ],
        "separable": report.separable,
        "explicit_optima": (
            None
            if report.explicit_optima is None
            else [list(plan) for plan in report.explicit_optima]
        ),
        "total_units_range": [float(report.units_min), float(report.units_max)],
    }


def to_canonical_json(document: Any) -> str:
    """Stable serialization: sorted keys, compact separators, UTF-8 text."""
    return json.dumps(
        document, sort_keys=True, separators=(",", ":"), ensure_ascii=False
    )
