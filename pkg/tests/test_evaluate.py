"""Mistake scoring against the optimal family, and the unit-cap check."""

from __future__ import annotations

import random
from decimal import Decimal

import pytest

from articopt import (
    ExplosionError,
    InfeasibleError,
    ValidationError,
    make_plan,
    plan_satisfies_all,
    score_plan,
    solve,
    unit_cap_check,
)
from conftest import build_catalog, random_instance


def test_worst_case_plan_scores_two_excess(glendale):
    candidate = make_plan(["ENG 240", "HIST 110", "ENG 200", "HIST 70"])
    report = score_plan(candidate, glendale)
    assert (report.missing, report.excess, report.total) == (0, 2, 2)
    assert report.nearest_optimum == frozenset({"ENG 200", "HIST 70"})
    assert report.unfulfilled == ()


def test_optimal_candidate_scores_zero(glendale):
    report = score_plan(make_plan(["ENG 200", "HIST 90"]), glendale)
    assert report.total == 0


def test_empty_candidate_misses_everything(glendale):
    report = score_plan(frozenset(), glendale)
    assert (report.missing, report.excess) == (2, 0)
    assert len(report.unfulfilled) == 4
    assert ("UC San Diego|History|2021-2022", "writing") in report.unfulfilled


def test_combined_report_transcription_scores_zero(occ):
    transcription = make_plan(
        [
            "PSYC A100",
            "ANTH A185",
            "BIOL A225",
            "PHIL A220",
            "MATH A182H",
            "ANTH A100",
            "CHEM A110",
        ]
    )
    assert score_plan(transcription, occ).total == 0


def test_unknown_candidate_course_is_rejected(glendale):
    with pytest.raises(ValidationError, match="FAKE 1"):
        score_plan(frozenset({"FAKE 1"}), glendale)


def test_every_optimum_scores_zero_and_junk_adds_one():
    rng = random.Random(5_150)
    checked = 0
    for _ in range(60):
        selection, _ = random_instance(rng, with_constraints=False)
        try:
            solution = solve(selection)
        except (InfeasibleError, ExplosionError):
            continue
        used = {c for plan in solution.all_optima for c in plan}
        spare = sorted(set(selection.catalog.courses) - used)
        for plan in solution.all_optima:
            assert score_plan(plan, selection).total == 0
            if spare:
                report = score_plan(plan | {spare[0]}, selection)
                assert (report.missing, report.excess) == (0, 1)
        checked += 1
    assert checked > 20


def test_total_bounded_by_distance_to_canonical():
    rng = random.Random(60_062)
    for _ in range(60):
        selection, _ = random_instance(rng, with_constraints=False)
        try:
            solution = solve(selection)
        except (InfeasibleError, ExplosionError):
            continue
        universe = sorted(selection.catalog.courses)
        candidate = frozenset(rng.sample(universe, rng.randint(0, len(universe))))
        report = score_plan(candidate, selection)
        assert report.total <= len(candidate ^ solution.canonical_plan)
        assert (report.unfulfilled == ()) == plan_satisfies_all(
            candidate, selection
        )


def test_unit_cap_passes_small_plan(glendale):
    check = unit_cap_check(make_plan(["ENG 200", "HIST 70"]), glendale.catalog)
    assert check.passed
    assert check.total_units == Decimal("6.0")


def test_unit_cap_warns_above_sixty():
    ids = [f"C {i}" for i in range(21)]
    catalog = build_catalog(ids)
    check = unit_cap_check(frozenset(ids), catalog)
    assert not check.passed
    assert check.total_units == Decimal("63.0")
    assert check.cap == Decimal("60")


def test_unit_cap_boundary_is_strict():
    ids = [f"C {i}" for i in range(20)]
    catalog = build_catalog(ids)
    check = unit_cap_check(frozenset(ids), catalog)
    assert check.total_units == Decimal("60.0")
    assert check.passed
