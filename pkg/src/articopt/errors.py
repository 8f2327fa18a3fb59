"""Exception types shared across the package."""

from __future__ import annotations


class ArticulationError(Exception):
    """Base class for all domain errors."""


class ValidationError(ArticulationError):
    """Malformed or unresolvable input (documents, ids, constraints)."""


class InfeasibleError(ArticulationError):
    """No plan can satisfy every requirement under the given constraints.

    ``unsatisfiable`` lists one entry per requirement that cannot be met,
    as dicts with keys ``agreement_id``, ``requirement_id``, ``label``.
    """

    def __init__(self, unsatisfiable: list[dict[str, str]]):
        self.unsatisfiable = unsatisfiable
        names = ", ".join(
            f"{u['agreement_id']}/{u['requirement_id']}" for u in unsatisfiable
        )
        super().__init__(f"infeasible: no plan satisfies {names}")


class UniverseTooLargeError(ArticulationError):
    """Brute-force oracle refused: candidate universe exceeds its bound."""


class ExplosionError(ArticulationError):
    """The family of optimal plans exceeds the enumeration cap."""


class DegenerateDataError(ArticulationError):
    """A statistic is undefined for the given data (e.g. zero variance)."""
