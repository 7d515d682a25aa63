"""Exception hierarchy shared by the engine, the HTTP service, and the CLI.

Every error carries a stable ``code`` so the wire layers can serialize it
without inspecting types:

    not_found           unknown dataset / snapshot / point / attribute / cell
    conflict            duplicate ids, ambiguous search labels
    contract_violation  caller broke an operation precondition
    parse_error         malformed CSV or JSON input
    config_error        schema or query configuration rejected
    capacity            input exceeds a hard size guard
"""

from __future__ import annotations

from typing import Any, Mapping


class AnalysisError(Exception):
    """Base class for all engine errors; ``code`` is the ApiError code."""

    code = "contract_violation"

    def __init__(self, message: str, *, location: Mapping[str, Any] | None = None):
        super().__init__(message)
        self.message = message
        self.location = dict(location) if location else None

    def to_payload(self) -> dict[str, Any]:
        payload: dict[str, Any] = {"code": self.code, "message": self.message}
        if self.location is not None:
            payload["location"] = self.location
        return payload


class NotFoundError(AnalysisError):
    code = "not_found"


class ConflictError(AnalysisError):
    code = "conflict"


class ContractViolation(AnalysisError):
    code = "contract_violation"


class ParseError(AnalysisError):
    code = "parse_error"


class ConfigError(AnalysisError):
    code = "config_error"


class CapacityError(AnalysisError):
    code = "capacity"
