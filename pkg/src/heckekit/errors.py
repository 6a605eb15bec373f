"""Exception types shared across the package."""


class HeckeKitError(Exception):
    """Base class for all package-specific errors."""


class UnknownLabelError(HeckeKitError, ValueError):
    """Unsupported Cartan type label or lattice kind."""


class ParseError(HeckeKitError, ValueError):
    """Malformed text input (elements, polynomials, weights)."""


class DatumMismatchError(HeckeKitError, ValueError):
    """Operands built over different root data / groups."""


class NotDominantError(HeckeKitError, ValueError):
    """A dominant weight was required."""


class ResourceBudgetError(HeckeKitError, RuntimeError):
    """Requested computation exceeds the configured resource budget."""
