"""Seeded random planning instances for oracle experiments and tests.

Instances stay inside the brute-force oracle's comfort zone: at most 12
courses and 8 requirements, choose in {1, 2}, option groups of 1 or 2
courses, occasionally department-distinct, with random pins and exclusions
drawn from the course universe.
"""

from __future__ import annotations

import random
from decimal import Decimal

from .ingest import AgreementStore, Catalog, validate_selection
from .model import (
    Agreement,
    Constraints,
    Course,
    OptionGroup,
    Requirement,
    Selection,
)

DEPARTMENTS = ("MATH", "HIST", "ENG", "PSYC", "SOC", "CHEM")


def build_catalog(course_ids: list[str], units: str = "3.0") -> Catalog:
    return Catalog(
        college="Test College",
        courses={
            c: Course(id=c, title=f"Title of {c}", units=Decimal(units))
            for c in course_ids
        },
    )


def random_instance(
    rng: random.Random, with_constraints: bool = True
) -> tuple[Selection, Constraints]:
    n_courses = rng.randint(4, 12)
    course_ids = [
        f"{rng.choice(DEPARTMENTS)} {100 + i}" for i in range(n_courses)
    ]
    catalog = build_catalog(course_ids)

    n_requirements = rng.randint(1, 8)
    n_agreements = rng.randint(1, min(3, n_requirements))
    split = sorted(rng.sample(range(1, n_requirements), n_agreements - 1))
    sizes = [b - a for a, b in zip([0] + split, split + [n_requirements])]

    agreements = []
    req_counter = 0
    for a_index, size in enumerate(sizes):
        requirements = []
        for _ in range(size):
            n_options = rng.randint(1, 4)
            options = []
            for _ in range(n_options):
                group_size = rng.randint(1, min(2, n_courses))
                options.append(
                    OptionGroup(courses=tuple(rng.sample(course_ids, group_size)))
                )
            choose = 2 if n_options >= 2 and rng.random() < 0.3 else 1
            distinct = False
            if rng.random() < 0.25:
                departments = {g.department for g in options}
                distinct = len(departments) >= choose
            requirements.append(
                Requirement(
                    id=f"r{req_counter}",
                    label=f"Requirement {req_counter}",
                    options=tuple(options),
                    choose=choose,
                    distinct_departments=distinct,
                )
            )
            req_counter += 1
        agreements.append(
            Agreement(
                college=catalog.college,
                institution=f"University {a_index}",
                major="Testing",
                year="2021-2022",
                kind="major",
                requirements=tuple(requirements),
            )
        )

    store = AgreementStore(catalog=catalog, agreements=tuple(agreements))
    selection = validate_selection([a.store_id for a in agreements], store)

    constraints = Constraints()
    if with_constraints and rng.random() < 0.5:
        excluded = frozenset(
            rng.sample(course_ids, rng.randint(0, min(2, n_courses)))
        )
        remaining = [c for c in course_ids if c not in excluded]
        pinned = frozenset(
            rng.sample(remaining, rng.randint(0, min(1, len(remaining))))
        )
        constraints = Constraints(pinned=pinned, excluded=excluded)
    return selection, constraints
