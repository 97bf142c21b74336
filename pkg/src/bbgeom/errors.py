"""Exception types raised across the package."""


class BBGeomError(Exception):
    """Base class for all errors raised by bbgeom."""


class ShapeError(BBGeomError, ValueError):
    """Operands have incompatible dimensions or live in different bases."""


class ValidityError(BBGeomError, ValueError):
    """An operand violates a mathematical precondition (Hermitian, unitary, ...)."""


class InvalidDimensionError(ValidityError):
    """Requested a basis or system of unsupported dimension."""


class ConfigError(BBGeomError):
    """A problem configuration could not be parsed or is inconsistent."""


class BudgetError(BBGeomError):
    """An exhaustive search would exceed its configured subset cap."""


class BranchAmbiguityError(BBGeomError):
    """A matrix logarithm hit the branch cut of the principal eigenphase."""
