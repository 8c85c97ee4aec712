"""Exception types shared across the package."""


class NotPrimeError(ValueError):
    """A field characteristic is not a prime number."""


class FieldMismatchError(TypeError):
    """Values from different fields were combined."""


class NotASubfieldError(ValueError):
    """A subfield degree does not divide the extension degree."""


class ZeroPolynomialError(ValueError):
    """An operation requires a nonzero (or nonconstant) polynomial."""


class ZeroDenominatorError(ZeroDivisionError):
    """A rational function was built with denominator zero."""


class ConstantFunctionError(ValueError):
    """A rational function reduced to a constant."""


class InseparableError(ValueError):
    """An operation requires a separable rational function."""


class DegenerateTransformationError(ValueError):
    """A fractional linear transformation has determinant zero."""


class DegenerateParameterError(ValueError):
    """A family parameter degenerates the construction."""


class UnsupportedCharacteristicError(ValueError):
    """The operation is not defined in this characteristic."""


class SearchExhaustedError(RuntimeError):
    """A counterexample search ran out of candidates."""


class HypothesisNotMetError(ValueError):
    """The input does not satisfy the construction's hypothesis."""


class BudgetExceededError(RuntimeError):
    """An enumeration would exceed the candidate budget."""


class InvalidDivisorError(ValueError):
    """A ramification divisor is malformed."""


class GeneratorUnavailableError(ValueError):
    """The generator t was requested in a prime field."""


class ExpressionParseError(ValueError):
    """A CLI expression is malformed; carries the offending position."""

    def __init__(self, message, position=None):
        if position is not None:
            message = "%s (at position %d)" % (message, position)
        super().__init__(message)
        self.position = position
