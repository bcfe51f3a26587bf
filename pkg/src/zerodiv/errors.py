"""Exception types raised across the package."""


class ZeroDivisorError(Exception):
    """Base class for every error raised by :mod:`zerodiv`."""


class InvalidTripError(ZeroDivisorError, ValueError):
    """Members do not form an associative triplet."""


class IndexBoundsError(ZeroDivisorError, ValueError):
    """A unit index or dimension parameter is outside its allowed range."""


class ContextError(ZeroDivisorError, ValueError):
    """Bad (N, S) pair or an L-index that is not a valid assessor."""


class CalibrationError(ZeroDivisorError):
    """No registered doubling convention reproduces the anchor products."""


class StructuralAnomalyError(ZeroDivisorError):
    """Discovered structure contradicts the box-kite taxonomy.

    These are never swallowed. Typical causes are a sail that will not
    close into a box-kite or a strut-reversal count outside {0, 2}.
    """


class TheoremViolation(ZeroDivisorError):
    """A count or fill law checked by the package does not hold."""


class OutOfScopeError(ZeroDivisorError, ValueError):
    """Request is outside what the recursion or command supports."""
