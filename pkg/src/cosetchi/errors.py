"""Exception types shared across the package."""


class CosetChiError(Exception):
    """Base class for all library-specific errors."""


class ParseError(CosetChiError):
    """Malformed group expression, group file, or complex file."""


class EnumerationCapExceeded(CosetChiError):
    """Group element closure grew past the configured cap."""


class AmbientMismatch(CosetChiError):
    """Two subgroup handles belong to different ambient groups."""


class NotNormal(CosetChiError):
    """Quotient requested by a non-normal subgroup."""


class NotPTI(CosetChiError):
    """The trivial-intersection closed form needs pairwise trivial Sylow intersections."""


class PClosedNoPairs(CosetChiError):
    """Minimal Sylow-intersection index needs at least two Sylow p-subgroups."""


class PosetCapExceeded(CosetChiError):
    """Coset poset element count exceeds the configured cap."""


class SimplexCapExceeded(CosetChiError):
    """Simplex count of a complex exceeds the configured cap."""


class DivisibilityViolation(CosetChiError):
    """The p'-part failed to divide a computed Euler characteristic.

    This always signals an implementation bug, never valid data.
    """


class ConsistencyError(CosetChiError):
    """Two independently computed values that must agree do not."""
