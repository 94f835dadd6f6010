"""Exception hierarchy shared by all modules."""


class RLEntropyError(ValueError):
    """Base class for every validation failure raised by the package."""


class PBMParseError(RLEntropyError):
    """A PBM stream could not be parsed.

    ``offset`` is the byte offset at which parsing failed.
    """

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class RLEValidationError(RLEntropyError):
    """A run-length row or document violates the canonical-form invariants."""

    def __init__(self, message: str, run_index: int | None = None):
        if run_index is not None:
            message = f"{message} (run index {run_index})"
        super().__init__(message)
        self.run_index = run_index


class InvariantViolation(RLEntropyError):
    """An entropy kernel was called outside its domain."""
