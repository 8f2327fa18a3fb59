"""Shared fixtures: the two transcribed report pairs plus synthetic
instance builders for oracle-equivalence and property tests."""

from __future__ import annotations

from pathlib import Path

import pytest

from articopt import (
    Agreement,
    AgreementStore,
    Catalog,
    OptionGroup,
    Requirement,
    Selection,
    load_agreement,
    load_catalog,
    validate_selection,
)
from articopt.instances import DEPARTMENTS, build_catalog, random_instance

__all__ = [
    "DEPARTMENTS",
    "FIXTURES",
    "GOLDEN",
    "build_catalog",
    "build_selection",
    "load_selection",
    "random_instance",
]

REPO_ROOT = Path(__file__).resolve().parent.parent
FIXTURES = REPO_ROOT / "fixtures"
GOLDEN = REPO_ROOT / "golden"


def load_selection(college_dir: str, agreement_files: list[str]) -> Selection:
    catalog = load_catalog(FIXTURES / college_dir / "catalog.json")
    agreements = tuple(
        load_agreement(FIXTURES / college_dir / name, catalog)
        for name in agreement_files
    )
    store = AgreementStore(catalog=catalog, agreements=agreements)
    return validate_selection([a.store_id for a in agreements], store)


@pytest.fixture(scope="session")
def glendale() -> Selection:
    return load_selection("glendale", ["ucsd_history.json", "csuf_history.json"])


@pytest.fixture(scope="session")
def occ() -> Selection:
    return load_selection("occ", ["ucb_psychology.json", "ucla_psychology.json"])


def build_selection(
    requirement_specs: list[list[list[str]]],
    catalog: Catalog | None = None,
    chooses: list[int] | None = None,
) -> Selection:
    """One synthetic agreement; each spec entry is a list of option groups."""
    course_ids = sorted(
        {c for spec in requirement_specs for group in spec for c in group}
    )
    catalog = catalog or build_catalog(course_ids)
    requirements = tuple(
        Requirement(
            id=f"r{i}",
            label=f"Requirement {i}",
            options=tuple(OptionGroup(courses=tuple(g)) for g in spec),
            choose=(chooses[i] if chooses else 1),
        )
        for i, spec in enumerate(requirement_specs)
    )
    agreement = Agreement(
        college=catalog.college,
        institution="Test University",
        major="Testing",
        year="2021-2022",
        kind="major",
        requirements=requirements,
    )
    store = AgreementStore(catalog=catalog, agreements=(agreement,))
    return validate_selection([agreement.store_id], store)
