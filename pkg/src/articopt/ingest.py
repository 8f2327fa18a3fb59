"""Loading and validation of catalog and agreement JSON documents.

Documents are UTF-8 JSON. Unknown fields are a hard error so fixture typos
surface immediately instead of being silently ignored. Units parse as
``Decimal`` to keep unit arithmetic exact.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from decimal import Decimal, InvalidOperation
from pathlib import Path
from typing import IO, Any, Union

from .errors import ValidationError
from .model import (
    AGREEMENT_KINDS,
    Agreement,
    Course,
    OptionGroup,
    Requirement,
    Selection,
    normalize_course_id,
)

Document = Union[bytes, str, Path, IO[bytes], IO[str]]

DEFAULT_UNITS = Decimal("3.0")


@dataclass(frozen=True)
class Catalog:
    """All courses a college offers, keyed by normalized course id."""

    college: str
    courses: dict[str, Course]


@dataclass(frozen=True)
class AgreementStore:
    """A catalog plus the agreements published against it.

    Agreements are addressable by the stable id ``institution|major|year``.
    """

    catalog: Catalog
    agreements: tuple[Agreement, ...]

    def __post_init__(self) -> None:
        seen: set[str] = set()
        for agreement in self.agreements:
            if agreement.college != self.catalog.college:
                raise ValidationError(
                    f"agreement {agreement.store_id!r} belongs to "
                    f"{agreement.college!r}, not {self.catalog.college!r}"
                )
            if agreement.store_id in seen:
                raise ValidationError(
                    f"duplicate agreement id {agreement.store_id!r} in store"
                )
            seen.add(agreement.store_id)

    def get(self, store_id: str) -> Agreement:
        for agreement in self.agreements:
            if agreement.store_id == store_id:
                return agreement
        raise ValidationError(f"unknown agreement: {store_id}")


def _read_text(document: Document) -> str:
    if isinstance(document, Path):
        return document.read_text(encoding="utf-8")
    if isinstance(document, bytes):
        return document.decode("utf-8")
    if isinstance(document, str):
        return document
    data = document.read()
    if isinstance(data, bytes):
        return data.decode("utf-8")
    return data


def _parse_json(document: Document, what: str) -> Any:
    try:
        return json.loads(_read_text(document), parse_float=Decimal)
    except json.JSONDecodeError as exc:
        raise ValidationError(
            f"malformed {what} document at line {exc.lineno} column {exc.colno}: "
            f"{exc.msg}"
        ) from exc
    except UnicodeDecodeError as exc:
        raise ValidationError(f"{what} document is not valid UTF-8: {exc}") from exc


def _require_object(value: Any, what: str, allowed: set[str]) -> dict[str, Any]:
    if not isinstance(value, dict):
        raise ValidationError(f"{what} must be a JSON object")
    unknown = set(value) - allowed
    if unknown:
        raise ValidationError(f"{what} has unknown fields: {sorted(unknown)}")
    return value


def _require_str(obj: dict[str, Any], key: str, what: str) -> str:
    value = obj.get(key)
    if not isinstance(value, str) or not value.strip():
        raise ValidationError(f"{what}: field {key!r} must be a non-empty string")
    return value


def _parse_units(value: Any, course_id: str) -> Decimal:
    if value is None:
        return DEFAULT_UNITS
    if isinstance(value, bool) or not isinstance(value, (int, Decimal)):
        raise ValidationError(f"course {course_id!r}: units must be a number")
    try:
        return Decimal(value)
    except InvalidOperation as exc:  # pragma: no cover - Decimal(int) is safe
        raise ValidationError(f"course {course_id!r}: bad units {value!r}") from exc


def load_catalog(document: Document) -> Catalog:
    """Parse and validate a catalog document."""
    raw = _parse_json(document, "catalog")
    obj = _require_object(raw, "catalog", {"college", "courses"})
    college = _require_str(obj, "college", "catalog")
    if not isinstance(obj.get("courses"), list):
        raise ValidationError("catalog: field 'courses' must be an array")
    courses: dict[str, Course] = {}
    for entry in obj["courses"]:
        course_obj = _require_object(entry, "course", {"id", "title", "units"})
        course_id = normalize_course_id(_require_str(course_obj, "id", "course"))
        if course_id in courses:
            raise ValidationError(f"duplicate course id: {course_id}")
        courses[course_id] = Course(
            id=course_id,
            title=_require_str(course_obj, "title", f"course {course_id!r}"),
            units=_parse_units(course_obj.get("units"), course_id),
        )
    return Catalog(college=college, courses=courses)


def load_agreement(document: Document, catalog: Catalog) -> Agreement:
    """Parse an agreement document and resolve every course id in ``catalog``."""
    raw = _parse_json(document, "agreement")
    obj = _require_object(
        raw,
        "agreement",
        {"college", "institution", "major", "year", "kind", "requirements"},
    )
    kind = _require_str(obj, "kind", "agreement")
    if kind not in AGREEMENT_KINDS:
        raise ValidationError(
            f"agreement kind {kind!r} not one of {AGREEMENT_KINDS}"
        )
    if not isinstance(obj.get("requirements"), list) or not obj["requirements"]:
        raise ValidationError("agreement: 'requirements' must be a non-empty array")

    unresolved: list[str] = []
    requirements: list[Requirement] = []
    for entry in obj["requirements"]:
        req_obj = _require_object(
            entry,
            "requirement",
            {"id", "label", "choose", "distinct_departments", "options"},
        )
        req_id = _require_str(req_obj, "id", "requirement")
        choose = req_obj.get("choose", 1)
        if isinstance(choose, bool) or not isinstance(choose, int) or choose < 1:
            raise ValidationError(
                f"requirement {req_id!r}: 'choose' must be a positive integer"
            )
        distinct = req_obj.get("distinct_departments", False)
        if not isinstance(distinct, bool):
            raise ValidationError(
                f"requirement {req_id!r}: 'distinct_departments' must be a boolean"
            )
        raw_options = req_obj.get("options")
        if not isinstance(raw_options, list) or not raw_options:
            raise ValidationError(
                f"requirement {req_id!r}: 'options' must be a non-empty array"
            )
        groups: list[OptionGroup] = []
        for raw_group in raw_options:
            if not isinstance(raw_group, list) or not raw_group:
                raise ValidationError(
                    f"requirement {req_id!r}: each option must be a non-empty "
                    f"array of course ids"
                )
            ids = tuple(normalize_course_id(c) for c in raw_group)
            for course_id in ids:
                if course_id not in catalog.courses:
                    unresolved.append(course_id)
            groups.append(OptionGroup(courses=ids))
        requirements.append(
            Requirement(
                id=req_id,
                label=_require_str(req_obj, "label", f"requirement {req_id!r}"),
                options=tuple(groups),
                choose=choose,
                distinct_departments=distinct,
            )
        )
    if unresolved:
        unique = sorted(set(unresolved))
        raise ValidationError(f"unresolved course: {', '.join(unique)}")
    return Agreement(
        college=_require_str(obj, "college", "agreement"),
        institution=_require_str(obj, "institution", "agreement"),
        major=_require_str(obj, "major", "agreement"),
        year=_require_str(obj, "year", "agreement"),
        kind=kind,
        requirements=tuple(requirements),
    )


def load_store(data_dir: Path) -> AgreementStore:
    """Build a store from a directory of JSON documents.

    The directory must contain exactly one catalog document (an object with
    a ``courses`` field); every other ``*.json`` file is an agreement.
    """
    paths = sorted(data_dir.glob("*.json"))
    if not paths:
        raise ValidationError(f"no JSON documents under {data_dir}")
    catalog_paths = []
    agreement_paths = []
    for path in paths:
        peek = _parse_json(path, path.name)
        if isinstance(peek, dict) and "courses" in peek:
            catalog_paths.append(path)
        else:
            agreement_paths.append(path)
    if len(catalog_paths) != 1:
        raise ValidationError(
            f"{data_dir} must hold exactly one catalog document, "
            f"found {len(catalog_paths)}"
        )
    catalog = load_catalog(catalog_paths[0])
    agreements = tuple(load_agreement(p, catalog) for p in agreement_paths)
    return AgreementStore(catalog=catalog, agreements=agreements)


def validate_selection(agreement_ids: list[str], store: AgreementStore) -> Selection:
    """Resolve agreement ids against the store; reject duplicates and unknowns."""
    if not agreement_ids:
        raise ValidationError("selection must name at least one agreement")
    seen: set[str] = set()
    chosen: list[Agreement] = []
    for store_id in agreement_ids:
        if store_id in seen:
            raise ValidationError(f"duplicate agreement: {store_id}")
        seen.add(store_id)
        chosen.append(store.get(store_id))
    return Selection(
        college=store.catalog.college,
        agreements=tuple(chosen),
        catalog=store.catalog,
    )


def resolve_plan(course_ids: list[str], catalog: Catalog) -> frozenset[str]:
    """Normalize user-supplied course ids and require each to exist."""
    plan = set()
    unknown = []
    for raw in course_ids:
        course_id = normalize_course_id(raw)
        if course_id not in catalog.courses:
            unknown.append(course_id)
        plan.add(course_id)
    if unknown:
        raise ValidationError(f"unresolved course: {', '.join(sorted(set(unknown)))}")
    return frozenset(plan)


def serialize_catalog(catalog: Catalog) -> dict[str, Any]:
    return {
        "college": catalog.college,
        "courses": [
            {"id": c.id, "title": c.title, "units": float(c.units)}
            for c in sorted(catalog.courses.values(), key=lambda c: c.id)
        ],
    }


def serialize_agreement(agreement: Agreement) -> dict[str, Any]:
    return {
        "college": agreement.college,
        "institution": agreement.institution,
        "major": agreement.major,
        "year": agreement.year,
        "kind": agreement.kind,
        "requirements": [
            {
                "id": r.id,
                "label": r.label,
                "choose": r.choose,
                "distinct_departments": r.distinct_departments,
                "options": [list(g.courses) for g in r.options],
            }
            for r in agreement.requirements
        ],
    }
