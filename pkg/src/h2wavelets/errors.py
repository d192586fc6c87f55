"""Exception types shared across the package."""


class ParameterError(ValueError):
    """A constructor parameter lies outside its admissible range."""


class DomainError(ValueError):
    """An argument violates a mathematical domain restriction."""
