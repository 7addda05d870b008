"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class CompositionDomainError(DomainError):
    """Formal composition G(F(x)) requested with a nonzero constant term in F."""


class OutOfRangeError(DomainError, IndexError):
    """A coefficient beyond the known precision of a truncated series was requested."""
