"""Exception hierarchy with stable machine-readable codes.

Every error carries a ``code`` string that is part of the public contract:
the CLI maps codes to exit statuses and the HTTP service returns them in
error bodies.
"""

from __future__ import annotations


class AcceptError(Exception):
    """Base class for all package errors."""

    code = "error"

    def __init__(self, message: str, field_path: str | None = None):
        super().__init__(message)
        self.message = message
        self.field_path = field_path

    def to_dict(self) -> dict:
        d = {"code": self.code, "message": self.message}
        if self.field_path is not None:
            d["field_path"] = self.field_path
        return d


class ValidationError(AcceptError):
    """Structurally invalid input (CLI exit code 2 / HTTP 400)."""

    code = "validation"


class InvalidCounts(ValidationError):
    code = "invalid_counts"


class DuplicateArmLabels(ValidationError):
    code = "duplicate_arm_labels"


class BadRate(ValidationError):
    code = "bad_rate"


class BadInterval(ValidationError):
    code = "bad_interval"


class BadGrid(ValidationError):
    code = "bad_grid"


class EmptyDraws(ValidationError):
    code = "empty_draws"


class TooManyCurves(ValidationError):
    code = "too_many_trials"


class BadJson(ValidationError):
    code = "bad_json"


class DegenerateArm(AcceptError):
    """An arm with 0 or n successes: the frequentist MLE diverges.

    Use the Bayesian path or summary mode for such trials.
    """

    code = "degenerate_arm"


class NotConverged(AcceptError):
    """Split R-hat above the configured limit (CLI exit 3 / HTTP 422)."""

    code = "not_converged"

    def __init__(self, message: str, rhats: dict | None = None):
        super().__init__(message)
        self.rhats = rhats or {}


class AsymmetricIntervalWarning(UserWarning):
    """Confidence interval asymmetry beyond 10% of half-width."""
