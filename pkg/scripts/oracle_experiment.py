#!/usr/bin/env python3
"""Stress the exact solver against the brute-force oracle on seeded random
instances and report agreement, infeasibility rate, and timing."""

from __future__ import annotations

import argparse
import random
import statistics
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from articopt import InfeasibleError, brute_force_oracle, solve  # noqa: E402
from articopt.instances import random_instance  # noqa: E402


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--instances", type=int, default=200)
    parser.add_argument("--seed", type=int, default=424_242)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    agreements = 0
    infeasible = 0
    solve_times: list[float] = []
    optima_counts: list[int] = []

    for index in range(args.instances):
        selection, constraints = random_instance(rng)
        started = time.perf_counter()
        try:
            fast = solve(selection, constraints)
        except InfeasibleError as fast_error:
            solve_times.append(time.perf_counter() - started)
            try:
                brute_force_oracle(selection, constraints)
            except InfeasibleError as slow_error:
                if slow_error.unsatisfiable == fast_error.unsatisfiable:
                    agreements += 1
                    infeasible += 1
                    continue
            print(f"instance {index}: infeasibility mismatch")
            return 1
        solve_times.append(time.perf_counter() - started)
        slow = brute_force_oracle(selection, constraints)
        if (
            fast.opt_size == slow.opt_size
            and fast.all_optima == slow.all_optima
            and fast.forced == slow.forced
        ):
            agreements += 1
            optima_counts.append(len(fast.all_optima))
        else:
            print(f"instance {index}: solver/oracle disagreement")
            print(f"  solver: size {fast.opt_size}, {len(fast.all_optima)} optima")
            print(f"  oracle: size {slow.opt_size}, {len(slow.all_optima)} optima")
            return 1

    print(f"instances:        {args.instances}")
    print(f"agreement:        {agreements}/{args.instances} (100% required)")
    print(f"infeasible:       {infeasible}")
    print(f"solve time (ms):  median {1000 * statistics.median(solve_times):.2f}, "
          f"max {1000 * max(solve_times):.2f}")
    if optima_counts:
        print(f"optima per instance: median {statistics.median(optima_counts):.0f}, "
              f"max {max(optima_counts)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
