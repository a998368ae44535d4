"""Domain errors shared by every module; each carries a stable machine code."""

from __future__ import annotations

from typing import Any


class StoreError(Exception):
    """Base class: `code` is the stable machine string, `details` structured context."""

    code = "StoreError"

    def __init__(self, message: str, **details: Any):
        super().__init__(message)
        self.details = details

    @property
    def message(self) -> str:
        return str(self)


class DuplicateId(StoreError):
    code = "DuplicateId"


class DanglingReference(StoreError):
    code = "DanglingReference"


class InvariantViolation(StoreError):
    code = "InvariantViolation"


class NotFound(StoreError):
    code = "NotFound"


class StillReferenced(StoreError):
    code = "StillReferenced"


class StepOutOfRange(StoreError):
    code = "StepOutOfRange"


class StepNotCurrent(StoreError):
    code = "StepNotCurrent"


class StepNotStarted(StoreError):
    code = "StepNotStarted"


class StepNotReady(StoreError):
    code = "StepNotReady"


class ExitChecksFailed(StoreError):
    code = "ExitChecksFailed"


class OutOfRange(StoreError):
    code = "OutOfRange"


class MissingAssessment(StoreError):
    code = "MissingAssessment"


class CatalogSyntaxError(StoreError):
    # code string kept as the plain error name; the class name avoids
    # shadowing the Python builtin.
    code = "SyntaxError"


class DuplicateEntryId(StoreError):
    code = "DuplicateEntryId"


class EmptyField(StoreError):
    code = "EmptyField"


class InvalidProject(StoreError):
    code = "InvalidProject"


class IoFailure(StoreError):
    code = "IoFailure"


class ParseError(StoreError):
    code = "ParseError"


class IntegrityMismatch(StoreError):
    code = "IntegrityMismatch"


class UnsupportedSchemaVersion(StoreError):
    code = "UnsupportedSchemaVersion"


class NothingToExport(StoreError):
    code = "NothingToExport"
