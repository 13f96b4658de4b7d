"""Exception hierarchy shared by all modules.

The split matters for the CLI exit codes: structural problems with a state
spec map to exit 2, numeric precondition violations to exit 3.
"""


class DiskPhaseError(Exception):
    """Base class for all package errors."""


class SpecError(DiskPhaseError):
    """Malformed state spec or run configuration."""


class TruncationError(DiskPhaseError):
    """An index or tail bound is incompatible with the truncation."""


class DomainError(DiskPhaseError):
    """Argument outside the mathematical domain of an operation."""


class AliasingError(DiskPhaseError):
    """Sampling grid too small for the state's bandwidth."""


class IllConditionedError(DiskPhaseError):
    """Computation requested in a regime where accuracy collapses."""


class DegenerateSuperpositionError(DiskPhaseError):
    """Superposition amplitudes annihilate the state."""
