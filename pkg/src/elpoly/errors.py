"""Exception types shared across the toolkit."""


class ElpolyError(Exception):
    """Base class for all toolkit-specific errors."""


class InvalidEdgeError(ElpolyError, ValueError):
    """Raised for an edge query with identical or out-of-range endpoints."""


class UnsupportedModulusError(ElpolyError, ValueError):
    """Raised when an operation defined only for n = 2**k gets another n."""


class ResourceLimitError(ElpolyError, RuntimeError):
    """Raised when an exhaustive search exceeds its configured size bound."""


class ExtensionUndefinedError(ElpolyError, ValueError):
    """Raised when a path-to-cycle extension is requested where it is not certified."""


class MembershipError(ElpolyError, ValueError):
    """Raised when a point that must belong to a point set does not."""
