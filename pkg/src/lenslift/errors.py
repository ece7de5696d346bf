"""Exception types shared across the package."""


class NotStandardError(ValueError):
    """A disk diagram whose boundary order is not standard was passed where one is required."""


class ResourceLimitError(RuntimeError):
    """A computation was refused because its bounds exceed the configured guard."""
