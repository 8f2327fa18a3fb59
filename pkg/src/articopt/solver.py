"""Exact minimum-cardinality plan search with full enumeration of optima.

The problem is a minimum hitting set (NP-hard), but articulation instances
are tiny, so the solver favors exactness over scalability: branch-and-bound
over option-group inclusion, with a lower bound from a greedily-built family
of unsatisfied requirements whose residual course pools are pairwise
disjoint. A brute-force subset-enumeration oracle with the identical
contract guards the search.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import ExplosionError, InfeasibleError, UniverseTooLargeError
from .ingest import Catalog
from .model import Constraints, Plan, Selection, total_units

ORACLE_UNIVERSE_BOUND = 20
ENUMERATION_CAP = 10_000


@dataclass(frozen=True)
class Solution:
    opt_size: int
    canonical_plan: Plan
    all_optima: frozenset[Plan]
    forced: frozenset[str]
    constraints_applied: Constraints


@dataclass(frozen=True)
class _ReqView:
    """One requirement flattened for search, exclusions already applied."""

    agreement_id: str
    requirement_id: str
    label: str
    choose: int
    distinct_departments: bool
    groups: tuple[frozenset[str], ...]
    departments: tuple[str, ...]

    def satisfied_by(self, plan: frozenset[str]) -> bool:
        if self.distinct_departments:
            present = {
                d for g, d in zip(self.groups, self.departments) if g <= plan
            }
            return len(present) >= self.choose
        return sum(1 for g in self.groups if g <= plan) >= self.choose


def _requirement_views(
    selection: Selection, excluded: frozenset[str]
) -> list[_ReqView]:
    views = []
    for agreement in selection.agreements:
        for requirement in agreement.requirements:
            attainable = [
                g for g in requirement.options if not (g.course_set & excluded)
            ]
            views.append(
                _ReqView(
                    agreement_id=agreement.store_id,
                    requirement_id=requirement.id,
                    label=requirement.label,
                    choose=requirement.choose,
                    distinct_departments=requirement.distinct_departments,
                    groups=tuple(g.course_set for g in attainable),
                    departments=tuple(g.department for g in attainable),
                )
            )
    return views


def _check_feasible(views: list[_ReqView], available: frozenset[str]) -> None:
    unsatisfiable = [
        {
            "agreement_id": v.agreement_id,
            "requirement_id": v.requirement_id,
            "label": v.label,
        }
        for v in views
        if not v.satisfied_by(available)
    ]
    if unsatisfiable:
        raise InfeasibleError(unsatisfiable)


def _residual_pool(view: _ReqView, plan: frozenset[str]) -> frozenset[str]:
    """Courses outside the plan that could still help this requirement."""
    pool: set[str] = set()
    for g in view.groups:
        pool |= g - plan
    return frozenset(pool)


def _lower_bound(views: list[_ReqView], plan: frozenset[str]) -> int:
    """Count a greedy family of unsatisfied requirements with pairwise
    disjoint residual pools; each needs at least one course of its own."""
    taken: set[str] = set()
    bound = 0
    for view in views:
        if view.satisfied_by(plan):
            continue
        pool = _residual_pool(view, plan)
        if not pool & taken:
            taken |= pool
            bound += 1
    return bound


def _branch_groups(view: _ReqView, plan: frozenset[str]) -> list[frozenset[str]]:
    return [g for g in view.groups if not (g <= plan)]


def _search(
    views: list[_ReqView], start: frozenset[str]
) -> tuple[int, set[frozenset[str]]]:
    """Two-phase branch-and-bound: find the optimum size, then re-walk the
    tree keeping every branch that can still reach that size, collecting the
    complete family of optimal plans."""

    def pick_branch(plan: frozenset[str]) -> _ReqView | None:
        best: _ReqView | None = None
        best_width = None
        for view in views:
            if view.satisfied_by(plan):
                continue
            width = len(_branch_groups(view, plan))
            if best_width is None or width < best_width:
                best, best_width = view, width
        return best

    best_size: int | None = None
    visited: set[frozenset[str]] = set()

    def minimize(plan: frozenset[str]) -> None:
        nonlocal best_size
        if plan in visited:
            return
        visited.add(plan)
        if best_size is not None and len(plan) + _lower_bound(views, plan) >= best_size:
            return
        view = pick_branch(plan)
        if view is None:
            best_size = len(plan)
            return
        for group in sorted(_branch_groups(view, plan), key=lambda g: len(g - plan)):
            minimize(plan | group)

    minimize(start)
    assert best_size is not None, "feasibility was established before search"

    optima: set[frozenset[str]] = set()
    visited.clear()

    def enumerate_at(plan: frozenset[str]) -> None:
        if plan in visited:
            return
        visited.add(plan)
        if len(plan) + _lower_bound(views, plan) > best_size:
            return
        view = pick_branch(plan)
        if view is None:
            if len(plan) == best_size:
                optima.add(plan)
                if len(optima) > ENUMERATION_CAP:
                    raise ExplosionError(
                        f"more than {ENUMERATION_CAP} optimal plans"
                    )
            return
        for group in _branch_groups(view, plan):
            enumerate_at(plan | group)

    enumerate_at(start)
    return best_size, optima


def _canonical(
    optima: set[frozenset[str]], catalog: Catalog
) -> tuple[Plan, frozenset[str]]:
    ranked = sorted(
        optima, key=lambda p: (total_units(p, catalog), tuple(sorted(p)))
    )
    forced = frozenset.intersection(*optima)
    return ranked[0], forced


def solve(selection: Selection, constraints: Constraints = Constraints()) -> Solution:
    """Minimum-cardinality plans satisfying every requirement of every
    agreement, honoring pinned and excluded courses.

    Pinned courses appear in (and count toward) every returned plan. The
    canonical plan is the optimum with the smallest total units, ties broken
    by the lexicographically smallest sorted id sequence.
    """
    views = _requirement_views(selection, constraints.excluded)
    universe = frozenset().union(*(g for v in views for g in v.groups))
    available = (universe | constraints.pinned) - constraints.excluded
    _check_feasible(views, available)
    opt_size, optima = _search(views, frozenset(constraints.pinned))
    canonical, forced = _canonical(optima, selection.catalog)
    return Solution(
        opt_size=opt_size,
        canonical_plan=canonical,
        all_optima=frozenset(optima),
        forced=forced,
        constraints_applied=constraints,
    )


def brute_force_oracle(
    selection: Selection, constraints: Constraints = Constraints()
) -> Solution:
    """Same contract as :func:`solve`, by exhaustive subset enumeration in
    increasing cardinality. Refuses candidate universes above
    ``ORACLE_UNIVERSE_BOUND`` courses."""
    views = _requirement_views(selection, constraints.excluded)
    universe = set()
    for view in views:
        for group in view.groups:
            universe |= group
    universe -= constraints.excluded
    if len(universe) > ORACLE_UNIVERSE_BOUND:
        raise UniverseTooLargeError(
            f"{len(universe)} candidate courses exceed the oracle bound "
            f"of {ORACLE_UNIVERSE_BOUND}"
        )
    available = frozenset(universe) | constraints.pinned
    _check_feasible(views, available)

    pool = sorted(universe - constraints.pinned)
    optima: set[frozenset[str]] = set()
    for extra in range(len(pool) + 1):
        for combo in combinations(pool, extra):
            plan = constraints.pinned | frozenset(combo)
            if all(v.satisfied_by(plan) for v in views):
                optima.add(plan)
        if optima:
            break
    canonical, forced = _canonical(optima, selection.catalog)
    size = len(next(iter(optima)))
    return Solution(
        opt_size=size,
        canonical_plan=canonical,
        all_optima=frozenset(optima),
        forced=forced,
        constraints_applied=constraints,
    )


def minimal_completion(plan: Plan, selection: Selection) -> frozenset[str]:
    """Smallest set of additional courses making ``plan`` satisfy everything.

    Returns the empty set when the plan already satisfies all requirements;
    ties break as in :func:`solve`, applied to the added set.
    """
    views = _requirement_views(selection, frozenset())
    universe = set()
    for view in views:
        for group in view.groups:
            universe |= group
    _check_feasible(views, frozenset(universe) | plan)
    base = frozenset(plan)
    opt_size, closures = _search(views, base)
    completions = {closure - base for closure in closures}
    ranked = sorted(
        completions,
        key=lambda q: (total_units(q, selection.catalog), tuple(sorted(q))),
    )
    return ranked[0]
