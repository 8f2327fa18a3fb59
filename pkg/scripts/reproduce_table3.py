#!/usr/bin/env python3
"""Recompute the experiment's three Welch t-test rows from the published
summary statistics (n = 12 per condition) and print them as a table."""

from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from articopt import SummaryStats, welch_from_summary  # noqa: E402

ROWS = [
    ("Mistakes", SummaryStats(3.33, 5.02, 12), SummaryStats(0.00, 0.00, 12)),
    ("Time", SummaryStats(11.29, 4.49, 12), SummaryStats(3.89, 1.50, 12)),
    ("Usability", SummaryStats(3.28, 0.76, 12), SummaryStats(4.20, 0.80, 12)),
]


def main() -> None:
    print(f"{'Variable':<10} {'t':>7} {'df':>7} {'p':>8} {'d':>6}")
    for name, assist, prototype in ROWS:
        result = welch_from_summary(assist, prototype)
        p = "<0.001" if result.p_two_tailed < 0.001 else f"{result.p_two_tailed:.3f}"
        print(
            f"{name:<10} {result.t:>7.2f} {result.df:>7.2f} {p:>8} {result.d:>6.2f}"
        )


if __name__ == "__main__":
    main()
