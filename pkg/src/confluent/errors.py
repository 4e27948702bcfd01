"""Exception hierarchy. Every domain error derives from ConfluentError."""


class ConfluentError(ValueError):
    pass


class FieldMismatch(ConfluentError):
    pass


class DivisionByZero(ConfluentError, ZeroDivisionError):
    pass


class ParseError(ConfluentError):
    pass


class DuplicateNode(ConfluentError):
    pass


class EmptyMultiset(ConfluentError):
    pass


class DimensionMismatch(ConfluentError):
    pass


class SingularMatrix(ConfluentError):
    pass


class ZeroDiagonal(ConfluentError):
    pass


class DegreeTooHigh(ConfluentError):
    pass


class LengthMismatch(ConfluentError):
    pass


class ResidueDegreeTooHigh(ConfluentError):
    pass


class PreconditionViolation(ConfluentError):
    pass


class InternalConsistencyError(ConfluentError):
    """An identity that must hold for valid input did not; indicates a bug."""
