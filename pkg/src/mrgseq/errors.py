"""Exception types shared across the package."""


class ShapeError(ValueError):
    """Operand shapes are incompatible for the requested operation."""


class ContractError(ValueError):
    """A documented precondition of an operation was violated."""


class IngestionError(ValueError):
    """Loaded data failed a structural or numerical validity check."""


class ParseError(ValueError):
    """A data file is malformed (wrong column count, bad token, ...)."""
