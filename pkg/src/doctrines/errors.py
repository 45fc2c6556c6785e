"""Shared exception types and the global arrow-search budget."""

from __future__ import annotations

import os

DEFAULT_BUDGET = 10**6
BUDGET_ENV_VAR = "DOCTRINES_BUDGET"


def resolve_budget(budget: int | None = None) -> int:
    """Effective hom-search cap: explicit argument, else environment, else default."""
    if budget is not None:
        return int(budget)
    return int(os.environ.get(BUDGET_ENV_VAR, DEFAULT_BUDGET))


class DoctrineError(Exception):
    """Base class for all library errors."""


class SearchBudgetExceeded(DoctrineError):
    """A hom-set scan would exceed the configured budget.

    Raised instead of returning a negative answer, so order decisions are
    never unsound: a witness found within budget is still reported, but
    "no witness" is only ever the result of a complete scan.
    """

    def __init__(self, needed: int, budget: int, context: str = ""):
        self.needed = needed
        self.budget = budget
        msg = f"search space of {needed} candidate arrows exceeds budget {budget}"
        if context:
            msg += f" ({context})"
        super().__init__(msg)


class CapabilityError(DoctrineError):
    """An operation needs a structure or adjoint capability the object lacks."""


class WitnessValidationError(DoctrineError):
    """A found witness failed re-certification against the defining
    inequality.  Signals an inconsistent doctrine (for instance a reindex
    that disagrees with the order-decision hooks), never a negative answer.
    """


class NoMediatingArrow(DoctrineError):
    """A declared universal property admits no mediating arrow."""


class NonUniqueMediatingArrow(DoctrineError):
    """A declared universal property admits more than one mediating arrow."""


class LoadError(DoctrineError):
    """An input file failed validation; `law` names the violated invariant."""

    def __init__(self, message: str, law: str = "format"):
        self.law = law
        super().__init__(f"[{law}] {message}")
