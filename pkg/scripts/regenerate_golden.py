#!/usr/bin/env python3
"""Rebuild the golden files from the fixtures.

Run after intentionally changing fixtures or rendering; review the diff
before committing.
"""

from __future__ import annotations

import io
import sys
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(REPO / "src"))

from articopt import (  # noqa: E402
    AgreementStore,
    load_agreement,
    load_catalog,
    render_json,
    render_markdown,
    solve,
    synthesize_rows,
    to_canonical_json,
    validate_selection,
)
from articopt.cli import run  # noqa: E402

FIXTURES = REPO / "fixtures"
GOLDEN = REPO / "golden"


def selection_for(college: str, agreement_files: list[str]):
    catalog = load_catalog(FIXTURES / college / "catalog.json")
    agreements = tuple(
        load_agreement(FIXTURES / college / name, catalog)
        for name in agreement_files
    )
    store = AgreementStore(catalog=catalog, agreements=agreements)
    return validate_selection([a.store_id for a in agreements], store)


def main() -> None:
    GOLDEN.mkdir(exist_ok=True)

    occ = selection_for("occ", ["ucb_psychology.json", "ucla_psychology.json"])
    occ_report = synthesize_rows(solve(occ), occ)
    (GOLDEN / "occ_ucb_ucla.md").write_text(
        render_markdown(occ_report), encoding="utf-8"
    )

    glendale = selection_for(
        "glendale", ["ucsd_history.json", "csuf_history.json"]
    )
    glendale_report = synthesize_rows(solve(glendale), glendale)
    (GOLDEN / "glendale.json").write_text(
        to_canonical_json(render_json(glendale_report)) + "\n", encoding="utf-8"
    )
    (GOLDEN / "glendale.md").write_text(
        render_markdown(glendale_report), encoding="utf-8"
    )

    solve_out = io.StringIO()
    code = run(
        [
            "solve",
            "--catalog", str(FIXTURES / "glendale" / "catalog.json"),
            "--agreement", str(FIXTURES / "glendale" / "ucsd_history.json"),
            "--agreement", str(FIXTURES / "glendale" / "csuf_history.json"),
            "--format", "json",
            "--all-optima",
        ],
        stdout=solve_out,
        stderr=io.StringIO(),
    )
    assert code == 0
    (GOLDEN / "cli_solve_glendale.json").write_text(
        solve_out.getvalue(), encoding="utf-8"
    )

    welch_out = io.StringIO()
    code = run(
        [
            "stats", "welch",
            "--m1", "3.33", "--sd1", "5.02", "--n1", "12",
            "--m2", "0", "--sd2", "0", "--n2", "12",
        ],
        stdout=welch_out,
        stderr=io.StringIO(),
    )
    assert code == 0
    (GOLDEN / "cli_welch_mistakes.txt").write_text(
        welch_out.getvalue(), encoding="utf-8"
    )

    for path in sorted(GOLDEN.iterdir()):
        print(f"wrote {path.relative_to(REPO)}")


if __name__ == "__main__":
    main()
