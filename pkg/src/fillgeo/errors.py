"""Exception types used across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of a function."""


class ValidationError(ValueError):
    """A structured input (gluing word, map, instance) fails validation."""


class InternalInvariantError(RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""
