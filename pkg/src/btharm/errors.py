"""Exception types shared across the package."""


class BtharmError(Exception):
    pass


class OutOfPrecision(BtharmError):
    """A result would need series coefficients beyond the known precision."""


class Singular(BtharmError):
    """Matrix with exactly-zero determinant where an invertible one is required."""


class NonIntegral(BtharmError):
    """An entry of negative valuation where integrality is required."""


class NonLaurent(BtharmError):
    """A truncated series where an exact Laurent polynomial is required."""


class OutOfWindow(BtharmError):
    """A cochain was evaluated at a cell outside its window."""


class DepthInsufficient(BtharmError):
    """A unipotent period sum did not stabilize between consecutive depths."""


class ResourceLimitExceeded(BtharmError):
    """An enumeration would exceed the configured size guard."""
