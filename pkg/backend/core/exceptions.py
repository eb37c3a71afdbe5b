"""
Custom exceptions for backend services.
"""


class TCellSimException(Exception):
    """Base exception for service-level failures."""

    def __init__(self, message, error_code=None):
        self.message = message
        self.error_code = error_code
        super().__init__(self.message)


class ReplicateFaultError(TCellSimException):
    """Raised when a single ABM replicate fails inside an ensemble."""

    def __init__(self, replicate_index: int, cause: object):
        self.replicate_index = replicate_index
        self.cause = cause
        super().__init__(
            f"Replicate {replicate_index} failed: {cause}",
            error_code="replicate_fault",
        )


class ExportError(TCellSimException):
    """Raised when results cannot be written to or read from disk."""

    def __init__(self, path, cause: Exception):
        self.path = str(path)
        self.cause = cause
        super().__init__(f"I/O failure on {self.path}: {cause}", error_code="export_failed")
