"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument is outside the domain an operation is defined on."""


class UnsupportedSizeError(RuntimeError):
    """The request exceeds a configured enumeration or memory budget."""


class ConsistencyError(AssertionError):
    """An internal invariant failed; indicates a bug, not bad input."""


class CheckpointError(RuntimeError):
    """A checkpoint file cannot be resumed from (wrong config or damaged)."""
