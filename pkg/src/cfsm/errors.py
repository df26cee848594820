"""Exception types shared across the package."""


class ShapeError(ValueError):
    """Operand dimensions are incompatible with the requested operation."""


class ValidationError(ValueError):
    """An input file or value failed validation."""
