"""Exception hierarchy shared by all modules.

Every error carries a stable machine-readable ``code`` plus a ``details``
dict so the CLI and the HTTP service can emit structured error objects.
"""

from __future__ import annotations

from typing import Any


class TemplateChromaError(Exception):
    """Base class for all domain errors."""

    code = "error"

    def __init__(self, message: str, **details: Any):
        super().__init__(message)
        self.message = message
        self.details = details

    def to_json(self) -> dict[str, Any]:
        payload: dict[str, Any] = {"code": self.code, "message": self.message}
        if self.details:
            payload["details"] = self.details
        return payload


class DuplicatePoint(TemplateChromaError):
    code = "duplicate_point"


class RaggedTuple(TemplateChromaError):
    code = "ragged_tuple"


class TooFewPoints(TemplateChromaError):
    code = "too_few_points"


class BudgetExceeded(TemplateChromaError):
    code = "budget_exceeded"


class DimensionMismatch(TemplateChromaError):
    code = "dimension_mismatch"


class IndexOutOfRange(TemplateChromaError):
    code = "index_out_of_range"


class CollapseError(TemplateChromaError):
    """Projection onto a non-distinguisher collapsed two points."""

    code = "collapse"


class UnsupportedIndex(TemplateChromaError):
    """Cardinal arithmetic outside the supported index set."""

    code = "unsupported_index"


class Unachievable(TemplateChromaError):
    """No template with the requested chromatic number exists."""

    code = "unachievable"


class NotConjunctive(TemplateChromaError):
    """Polynomial body is not a plain sum of squared-difference atoms."""

    code = "not_conjunctive"


class DegenerateTemplate(TemplateChromaError):
    """Forced equalities collapse two variable tuples into one point."""

    code = "degenerate_template"


class PolynomialSyntaxError(TemplateChromaError):
    """Parse failure; ``position`` and ``expected`` live in details."""

    code = "syntax_error"

    def __init__(self, message: str, position: int, expected: str, **details: Any):
        super().__init__(message, position=position, expected=expected, **details)
        self.position = position
        self.expected = expected


class SamplerExhausted(TemplateChromaError):
    code = "sampler_exhausted"
