"""Exception hierarchy shared by every layer.

Each class carries a stable ``code``; the entry point turns that code into an
exit status and prints ``to_dict()`` on stderr.
"""

from typing import Any, ClassVar, Dict, Optional


class CloudCleanException(Exception):
    """Base exception for all cloudclean errors."""

    code: ClassVar[str] = "INTERNAL_ERROR"

    def __init__(
        self,
        message: str,
        code: Optional[str] = None,
        details: Optional[Dict[str, Any]] = None,
    ):
        self.message = message
        if code is not None:
            self.code = code
        self.details = details or {}
        super().__init__(self.message)

    def to_dict(self) -> Dict[str, Any]:
        """Error body written by the CLI."""
        return {"error": {"code": self.code, "message": self.message, "details": self.details}}


class EntityNotFoundError(CloudCleanException):
    """A cluster, scene or file id that does not exist."""

    code = "NOT_FOUND"

    def __init__(self, entity_type: str, entity_id: Any, message: Optional[str] = None):
        self.entity_type = entity_type
        self.entity_id = entity_id
        super().__init__(
            message or f"{entity_type} '{entity_id}' does not exist",
            details={"entity_type": entity_type, "entity_id": str(entity_id)},
        )


class ValidationError(CloudCleanException):
    """An argument, configuration value or data invariant is out of range."""

    code = "VALIDATION_ERROR"

    def __init__(self, message: str, field: Optional[str] = None, **details: Any):
        self.field = field
        super().__init__(message, details={"field": field, **details})


class DataFormatError(CloudCleanException):
    """An input file cannot be parsed as a scene, label list or report."""

    code = "DATA_FORMAT_ERROR"

    def __init__(self, message: str, path: Optional[str] = None, **details: Any):
        super().__init__(message, details={"path": path, **details})


class StorageError(CloudCleanException):
    """Reading or writing an artifact failed at the filesystem level."""

    code = "STORAGE_ERROR"

    def __init__(self, message: str, path: Optional[str] = None, **details: Any):
        super().__init__(message, details={"path": path, **details})


class StaleStateError(CloudCleanException):
    """Derived state (a boundary band) no longer matches the labels it came from."""

    code = "STALE_STATE"

    def __init__(self, message: str, expected: Any = None, actual: Any = None):
        super().__init__(message, details={"expected": expected, "actual": actual})


class NoiseInjectionError(CloudCleanException):
    """A noise model cannot be applied: infeasible rate, no boundary, stalled loop."""

    code = "NOISE_INJECTION_ERROR"
