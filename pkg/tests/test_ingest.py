"""Document loading, validation errors, and round-trip stability."""

from __future__ import annotations

import json
import random
from decimal import Decimal

import pytest

from articopt import (
    AgreementStore,
    ValidationError,
    load_agreement,
    load_catalog,
    load_store,
    resolve_plan,
    validate_selection,
)
from articopt.ingest import serialize_agreement, serialize_catalog
from conftest import FIXTURES, random_instance


def test_occ_catalog_has_21_courses():
    catalog = load_catalog(FIXTURES / "occ" / "catalog.json")
    assert len(catalog.courses) == 21
    assert all(c.units == Decimal("3.0") for c in catalog.courses.values())


def test_glendale_agreements_structure():
    catalog = load_catalog(FIXTURES / "glendale" / "catalog.json")
    ucsd = load_agreement(FIXTURES / "glendale" / "ucsd_history.json", catalog)
    csuf = load_agreement(FIXTURES / "glendale" / "csuf_history.json", catalog)
    assert [len(r.options) for r in ucsd.requirements] == [2, 3]
    assert [len(r.options) for r in csuf.requirements] == [1, 3]
    assert ucsd.store_id == "UC San Diego|History|2021-2022"


def test_empty_courses_array_is_valid():
    catalog = load_catalog('{"college": "Nowhere College", "courses": []}')
    assert catalog.courses == {}


def test_duplicate_course_id_names_the_id():
    document = json.dumps(
        {
            "college": "C",
            "courses": [
                {"id": "PSYC A100", "title": "Intro", "units": 3.0},
                {"id": "PSYC  A100", "title": "Intro Again", "units": 3.0},
            ],
        }
    )
    with pytest.raises(ValidationError, match="PSYC A100"):
        load_catalog(document)


def test_negative_units_rejected():
    document = json.dumps(
        {
            "college": "C",
            "courses": [{"id": "A 1", "title": "T", "units": -3.0}],
        }
    )
    with pytest.raises(ValidationError, match="units"):
        load_catalog(document)


def test_units_default_when_omitted():
    document = json.dumps(
        {"college": "C", "courses": [{"id": "A 1", "title": "T"}]}
    )
    assert load_catalog(document).courses["A 1"].units == Decimal("3.0")


def test_malformed_json_reports_position():
    with pytest.raises(ValidationError, match=r"line \d+ column \d+"):
        load_catalog('{"college": "C", "courses": [')


def test_unknown_fields_are_hard_errors():
    document = json.dumps({"college": "C", "courses": [], "extra": 1})
    with pytest.raises(ValidationError, match="extra"):
        load_catalog(document)


def test_unknown_course_in_agreement_lists_all_unresolved():
    catalog = load_catalog(FIXTURES / "glendale" / "catalog.json")
    document = json.dumps(
        {
            "college": "Glendale Community College",
            "institution": "X",
            "major": "Y",
            "year": "2021-2022",
            "kind": "major",
            "requirements": [
                {
                    "id": "r0",
                    "label": "L",
                    "options": [["HIST 999"], ["HIST 998", "ENG 200"]],
                }
            ],
        }
    )
    with pytest.raises(ValidationError) as excinfo:
        load_agreement(document, catalog)
    assert "unresolved course: HIST 998, HIST 999" in str(excinfo.value)


def test_choose_above_option_count_rejected():
    catalog = load_catalog(FIXTURES / "glendale" / "catalog.json")
    document = json.dumps(
        {
            "college": "Glendale Community College",
            "institution": "X",
            "major": "Y",
            "year": "2021-2022",
            "kind": "major",
            "requirements": [
                {"id": "r0", "label": "L", "choose": 3, "options": [["ENG 200"]]}
            ],
        }
    )
    with pytest.raises(ValidationError, match="choose"):
        load_agreement(document, catalog)


def test_empty_options_rejected():
    catalog = load_catalog(FIXTURES / "glendale" / "catalog.json")
    document = json.dumps(
        {
            "college": "Glendale Community College",
            "institution": "X",
            "major": "Y",
            "year": "2021-2022",
            "kind": "major",
            "requirements": [{"id": "r0", "label": "L", "options": []}],
        }
    )
    with pytest.raises(ValidationError, match="options"):
        load_agreement(document, catalog)


def _occ_store() -> AgreementStore:
    return load_store(FIXTURES / "occ")


def test_load_store_classifies_documents():
    store = _occ_store()
    assert len(store.agreements) == 2
    assert store.catalog.college == "Orange Coast College"


def test_validate_selection_happy_path():
    store = _occ_store()
    selection = validate_selection(
        [
            "UC Berkeley|Psychology|2021-2022",
            "UC Los Angeles|Psychology|2021-2022",
        ],
        store,
    )
    assert len(selection.agreements) == 2
    assert selection.college == "Orange Coast College"


def test_validate_selection_rejects_empty():
    with pytest.raises(ValidationError, match="at least one"):
        validate_selection([], _occ_store())


def test_validate_selection_rejects_duplicates():
    store = _occ_store()
    with pytest.raises(ValidationError, match="duplicate agreement"):
        validate_selection(
            [
                "UC Berkeley|Psychology|2021-2022",
                "UC Berkeley|Psychology|2021-2022",
            ],
            store,
        )


def test_validate_selection_rejects_unknown():
    with pytest.raises(ValidationError, match="unknown agreement"):
        validate_selection(["Nowhere|Nothing|1999-2000"], _occ_store())


def test_resolve_plan_names_unknown_courses():
    store = _occ_store()
    with pytest.raises(ValidationError, match="FAKE 1"):
        resolve_plan(["PSYC A100", "FAKE 1"], store.catalog)


def test_round_trip_fixture_agreements():
    catalog = load_catalog(FIXTURES / "occ" / "catalog.json")
    original = load_agreement(FIXTURES / "occ" / "ucb_psychology.json", catalog)
    reloaded = load_agreement(
        json.dumps(serialize_agreement(original)), catalog
    )
    assert reloaded == original


def test_round_trip_random_agreements():
    rng = random.Random(711)
    for _ in range(30):
        selection, _ = random_instance(rng, with_constraints=False)
        catalog_doc = json.dumps(serialize_catalog(selection.catalog))
        catalog = load_catalog(catalog_doc)
        for agreement in selection.agreements:
            reloaded = load_agreement(
                json.dumps(serialize_agreement(agreement)), catalog
            )
            assert reloaded == agreement
