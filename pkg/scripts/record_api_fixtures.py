#!/usr/bin/env python3
"""Capture real HTTP API responses into frontend test fixtures.

Each fixture stores the request, the status code, and the byte-exact body
text, so the frontend suite asserts against genuine server output.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(REPO / "src"))

from fastapi.testclient import TestClient  # noqa: E402

from articopt import load_store  # noqa: E402
from articopt.service import create_app  # noqa: E402

OUT_DIR = REPO / "frontend" / "tests" / "fixtures"

GLENDALE_PAIR = [
    "UC San Diego|History|2021-2022",
    "CSU Fullerton|History|2021-2022",
]


def main() -> None:
    OUT_DIR.mkdir(parents=True, exist_ok=True)
    client = TestClient(create_app(load_store(REPO / "fixtures" / "glendale")))

    def record(name: str, method: str, path: str, body: dict | None = None):
        if method == "GET":
            response = client.get(path)
        else:
            response = client.post(path, json=body)
        fixture = {
            "request": {"method": method, "path": path, "body": body},
            "status": response.status_code,
            "raw": response.text,
        }
        target = OUT_DIR / f"{name}.json"
        target.write_text(
            json.dumps(fixture, indent=2, sort_keys=True) + "\n",
            encoding="utf-8",
        )
        print(f"wrote {target.relative_to(REPO)} ({response.status_code})")

    def solve_body(pins: list[str] = [], excludes: list[str] = []) -> dict:
        return {
            "agreement_ids": GLENDALE_PAIR,
            "pins": pins,
            "excludes": excludes,
            "unit_cap": 60,
        }

    record("agreements", "GET", "/api/agreements")
    record("solve_pair", "POST", "/api/solve", solve_body())
    record(
        "solve_exclude_hist70", "POST", "/api/solve",
        solve_body(excludes=["HIST 70"]),
    )
    record(
        "solve_exclude_writing", "POST", "/api/solve",
        solve_body(excludes=["ENG 200", "ENG 240", "HIST 70"]),
    )
    record(
        "solve_pin_hist50", "POST", "/api/solve",
        solve_body(pins=["HIST 50"]),
    )
    record(
        "solve_unit_cap5", "POST", "/api/solve",
        {
            "agreement_ids": GLENDALE_PAIR,
            "pins": [],
            "excludes": [],
            "unit_cap": 5,
        },
    )
    record(
        "score_worst", "POST", "/api/score",
        {
            "agreement_ids": GLENDALE_PAIR,
            "plan": ["ENG 240", "HIST 110", "ENG 200", "HIST 70"],
        },
    )
    record(
        "score_optimal", "POST", "/api/score",
        {"agreement_ids": GLENDALE_PAIR, "plan": ["ENG 200", "HIST 90"]},
    )
    record(
        "score_unknown", "POST", "/api/score",
        {"agreement_ids": GLENDALE_PAIR, "plan": ["FAKE 1"]},
    )


if __name__ == "__main__":
    main()
