"""
Exception hierarchy for ccspace.

Library operations raise these for malformed input or violated
preconditions. Mathematical outcomes (a failed axiom, a theorem instance
that does not hold) are never exceptions; they become report entries.
"""


class CcspaceError(Exception):
    """Base class for every error raised by ccspace."""


class UniverseError(CcspaceError):
    """A universe could not be built or a label does not belong to it."""


class DuplicateLabelError(UniverseError):
    def __init__(self, label: str):
        super().__init__(f"duplicate label: {label!r}")
        self.label = label


class UnknownSentenceError(UniverseError):
    def __init__(self, label: str, where: str = "universe"):
        super().__init__(f"unknown sentence {label!r} (not declared in {where})")
        self.label = label


class UniverseTooLargeError(UniverseError):
    pass


class NotASubsetError(CcspaceError):
    """A set was expected to be contained in another one and is not."""


class CapExceededError(CcspaceError):
    """An exhaustive operation was requested beyond its configured cap."""

    def __init__(self, what: str, size: int, cap: int):
        super().__init__(f"{what}: size {size} exceeds cap {cap}")
        self.size = size
        self.cap = cap


class PreconditionError(CcspaceError):
    pass


class InvalidThresholdError(PreconditionError):
    def __init__(self, epsilon):
        super().__init__(f"cognitive threshold must lie in (0, 1), got {epsilon}")
        self.epsilon = epsilon


class EmptySequenceError(PreconditionError):
    pass


class MissingOperatorError(PreconditionError):
    pass


class MetricError(CcspaceError):
    """A pseudometric is malformed or has not been validated."""


class PracticalWholeError(CcspaceError):
    """A practical whole cannot be expressed as a union of base objects."""

    def __init__(self, message: str, witness: tuple = ()):
        super().__init__(message)
        self.witness = witness


class ScenarioError(CcspaceError):
    """Scenario file could not be parsed or failed referential integrity."""


class ReportWriteError(CcspaceError):
    pass
