"""Report synthesis: row structure, separability, rendering, golden files."""

from __future__ import annotations

import json
import random
from itertools import product

import pytest

from articopt import (
    ExplosionError,
    InfeasibleError,
    RowInstruction,
    plan_satisfies_all,
    render_json,
    render_markdown,
    solve,
    synthesize_rows,
    to_canonical_json,
)
from conftest import GOLDEN, build_selection, random_instance


@pytest.fixture(scope="module")
def glendale_report(glendale):
    return synthesize_rows(solve(glendale), glendale)


@pytest.fixture(scope="module")
def occ_report(occ):
    return synthesize_rows(solve(occ), occ)


def test_figure_pair_rows(glendale_report):
    rows = glendale_report.rows
    assert len(rows) == 2
    forced_row, choice_row = rows
    assert forced_row.instruction is RowInstruction.COMPLETE_THIS
    assert forced_row.options[0].courses == ("ENG 200",)
    assert forced_row.satisfies == (
        ("UC San Diego", "History"),
        ("CSU Fullerton", "History"),
    )
    assert choice_row.instruction is RowInstruction.COMPLETE_ONE
    assert [g.courses for g in choice_row.options] == [("HIST 70",), ("HIST 90",)]
    assert choice_row.satisfies == forced_row.satisfies
    mentioned = {c for row in rows for g in row.options for c in g.courses}
    assert "HIST 50" not in mentioned
    assert "HIST 110" not in mentioned


def test_combined_psychology_rows(occ_report):
    rows = occ_report.rows
    assert len(rows) == 7
    forced = [r for r in rows if r.instruction is RowInstruction.COMPLETE_THIS]
    chooses = [r for r in rows if r.instruction is RowInstruction.COMPLETE_ONE]
    assert [r.options[0].courses[0] for r in forced] == [
        "PSYC A100",
        "ANTH A185",
        "BIOL A225",
        "PHIL A220",
        "MATH A182H",
    ]
    both = (("UC Berkeley", "Psychology"), ("UC Los Angeles", "Psychology"))
    ucb_only = (("UC Berkeley", "Psychology"),)
    ucla_only = (("UC Los Angeles", "Psychology"),)
    assert [r.satisfies for r in forced] == [
        both,
        ucb_only,
        both,
        both,
        both,
    ]
    assert [len(r.options) for r in chooses] == [9, 7]
    assert chooses[0].satisfies == ucb_only
    assert chooses[1].satisfies == ucla_only


def test_combined_psychology_is_separable(occ_report):
    assert occ_report.separable
    assert occ_report.explicit_optima is None
    assert occ_report.opt_size == 7
    assert float(occ_report.units_min) == 21.0
    assert float(occ_report.units_max) == 21.0


def test_triangle_instance_is_not_separable():
    selection = build_selection(
        [[["A 1"], ["B 2"]], [["B 2"], ["C 3"]], [["C 3"], ["A 1"]]]
    )
    solution = solve(selection)
    assert solution.forced == frozenset()
    report = synthesize_rows(solution, selection)
    assert not report.separable
    assert report.rows == ()
    assert report.explicit_optima == (
        ("A 1", "B 2"),
        ("A 1", "C 3"),
        ("B 2", "C 3"),
    )
    rendered = render_markdown(report)
    assert "OPTIMAL PLANS (non-separable)" in rendered


def _recombine(report):
    """Independent cross-product reconstruction from the emitted rows."""
    forced = frozenset(
        row.options[0].courses[0]
        for row in report.rows
        if row.instruction is RowInstruction.COMPLETE_THIS
    )
    choice_rows = [
        row for row in report.rows if row.instruction is RowInstruction.COMPLETE_ONE
    ]
    picks = product(*(row.options for row in choice_rows))
    return [
        forced | frozenset(c for group in pick for c in group.courses)
        for pick in picks
    ]


def test_row_product_soundness_and_completeness_on_random_instances():
    rng = random.Random(31_337)
    separable_seen = 0
    fallback_seen = 0
    for _ in range(200):
        selection, constraints = random_instance(rng)
        try:
            solution = solve(selection, constraints)
        except (InfeasibleError, ExplosionError):
            continue
        report = synthesize_rows(solution, selection)
        if not report.separable:
            fallback_seen += 1
            assert report.explicit_optima == tuple(
                sorted(tuple(sorted(p)) for p in solution.all_optima)
            )
            continue
        separable_seen += 1
        combos = _recombine(report)
        assert len(combos) == len(solution.all_optima)
        for combo in combos:
            extended = combo | constraints.pinned
            assert plan_satisfies_all(extended, selection)
            assert len(extended) == solution.opt_size
        assert set(combo | constraints.pinned for combo in combos) == set(
            solution.all_optima
        )
    assert separable_seen > 50


def test_annotation_soundness_on_random_instances():
    rng = random.Random(2_024)
    for _ in range(80):
        selection, _ = random_instance(rng, with_constraints=False)
        try:
            solution = solve(selection)
        except (InfeasibleError, ExplosionError):
            continue
        report = synthesize_rows(solution, selection)
        by_pair = {
            (a.institution, a.major): a for a in selection.agreements
        }
        for row in report.rows:
            assert row.satisfies, "every row names at least one agreement"
            for pair in row.satisfies:
                agreement = by_pair[pair]
                groups = {
                    g.course_set
                    for r in agreement.requirements
                    for g in r.options
                }
                if row.instruction is RowInstruction.COMPLETE_ONE:
                    assert any(g.course_set in groups for g in row.options)
                else:
                    course = row.options[0].courses[0]
                    assert any(course in g for g in groups)


def test_render_markdown_is_byte_stable(occ, occ_report):
    first = render_markdown(occ_report)
    again = render_markdown(synthesize_rows(solve(occ), occ))
    assert first == again


def test_markdown_golden_occ(occ_report):
    expected = (GOLDEN / "occ_ucb_ucla.md").read_text(encoding="utf-8")
    assert render_markdown(occ_report) == expected


def test_markdown_golden_glendale(glendale_report):
    expected = (GOLDEN / "glendale.md").read_text(encoding="utf-8")
    assert render_markdown(glendale_report) == expected


def test_json_golden_glendale(glendale_report):
    expected = (GOLDEN / "glendale.json").read_text(encoding="utf-8").strip()
    assert to_canonical_json(render_json(glendale_report)) == expected


def test_render_json_round_trips(glendale_report):
    document = render_json(glendale_report)
    assert json.loads(to_canonical_json(document)) == document


def test_render_json_row_count_for_combined_psychology(occ_report):
    assert len(render_json(occ_report)["rows"]) == 7


def test_single_option_fixture_renders_only_forced_rows():
    selection = build_selection([[["A 1"]], [["B 2"]]])
    report = synthesize_rows(solve(selection), selection)
    assert all(
        row.instruction is RowInstruction.COMPLETE_THIS for row in report.rows
    )
    assert len(report.rows) == 2
    rendered = render_markdown(report)
    assert "Complete ONE" not in rendered
    assert rendered.endswith("END OF REPORT\n")


def test_figure_instructions_render_verbatim(occ_report):
    rendered = render_markdown(occ_report)
    assert "Complete the course in this row." in rendered
    assert "Complete ONE of the course options listed in this row." in rendered
    assert rendered.count("--- Or ---") == 8 + 6
    assert "END OF REPORT" in rendered
