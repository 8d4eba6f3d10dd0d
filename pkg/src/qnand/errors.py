"""Exception types shared across the package."""


class InvalidInputError(ValueError):
    """Malformed input data: bad leaf assignment, bad bit values, bad depth."""


class LayoutError(ValueError):
    """Register bookkeeping violation: unknown names, overlaps, width mismatch."""


class TooLargeError(ValueError):
    """Request exceeds a configured size cap (qubit width, enumeration size)."""


class InvalidConfigError(ValueError):
    """Inconsistent or unsupported run configuration."""
