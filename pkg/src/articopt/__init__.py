"""Optimal academic plans from community-college articulation agreements."""

from .errors import (
    ArticulationError,
    DegenerateDataError,
    ExplosionError,
    InfeasibleError,
    UniverseTooLargeError,
    ValidationError,
)
from .evaluate import MistakeReport, UnitCapCheck, score_plan, unit_cap_check
from .ingest import (
    AgreementStore,
    Catalog,
    load_agreement,
    load_catalog,
    load_store,
    resolve_plan,
    validate_selection,
)
from .model import (
    Agreement,
    Constraints,
    Course,
    OptionGroup,
    Plan,
    Requirement,
    Selection,
    department_of,
    make_plan,
    normalize_course_id,
    plan_satisfies_all,
    satisfies,
    total_units,
)
from .report import (
    CombinedReport,
    ReportRow,
    RowInstruction,
    render_json,
    render_markdown,
    synthesize_rows,
    to_canonical_json,
)
from .solver import Solution, brute_force_oracle, minimal_completion, solve
from .stats import (
    SummaryStats,
    WelchResult,
    cronbach_alpha,
    score_usability,
    welch_from_samples,
    welch_from_summary,
)

__all__ = [
    "Agreement",
    "AgreementStore",
    "ArticulationError",
    "Catalog",
    "CombinedReport",
    "Constraints",
    "Course",
    "DegenerateDataError",
    "ExplosionError",
    "InfeasibleError",
    "MistakeReport",
    "OptionGroup",
    "Plan",
    "ReportRow",
    "Requirement",
    "RowInstruction",
    "Selection",
    "Solution",
    "SummaryStats",
    "UnitCapCheck",
    "UniverseTooLargeError",
    "ValidationError",
    "WelchResult",
    "brute_force_oracle",
    "cronbach_alpha",
    "department_of",
    "load_agreement",
    "load_catalog",
    "load_store",
    "make_plan",
    "minimal_completion",
    "normalize_course_id",
    "plan_satisfies_all",
    "render_json",
    "render_markdown",
    "resolve_plan",
    "satisfies",
    "score_plan",
    "score_usability",
    "solve",
    "synthesize_rows",
    "to_canonical_json",
    "total_units",
    "unit_cap_check",
    "validate_selection",
    "welch_from_samples",
    "welch_from_summary",
]
