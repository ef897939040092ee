"""Exception taxonomy shared across the library."""


class LinvError(Exception):
    """Base class for all library errors."""


class UnsupportedPrimeError(LinvError):
    """p is even, or not a prime at all."""


class InvalidPolynomialError(LinvError):
    """Defining polynomial is not monic/irreducible of the stated degree."""


class FieldMismatchError(LinvError):
    """Operands live over different field descriptors or contexts."""


class PadicDivisionError(LinvError, ZeroDivisionError):
    """Division by an element indistinguishable from zero."""


class NotAUnitError(LinvError):
    """Operation requires a unit (valuation zero / invertible body)."""


class LogOfZeroError(LinvError):
    """Logarithm of an element indistinguishable from zero."""


class OutsideConvergenceDomainError(LinvError):
    """Series argument outside its guaranteed convergence domain."""


class DiscontinuousCharacterError(LinvError):
    """Stored value at the pro-p generator is not a principal unit."""


class InvalidArgumentError(LinvError):
    """Argument outside the operation's domain (e.g. evaluation at 0)."""


class ZeroValuationError(LinvError):
    """Tate-parameter input is a unit; the invariant needs ord != 0."""


class UndefinedInvariantError(LinvError):
    """L-invariant of the zero class/homomorphism."""


class ZeroInputError(LinvError):
    """Pure-tensor analysis of the zero homomorphism is vacuous."""


class PreconditionViolatedError(LinvError):
    """Residual requested where its defining identity does not apply."""


class WrongCaseError(LinvError):
    """Scenario's character pair is not in the semistable twist case."""


class CrystallineSpecializationError(LinvError):
    """Extension-class data has ord = 0 (crystalline up to twist)."""


class InconsistentScenarioError(LinvError):
    """Scenario violates the cup-product consistency constraint."""


class LiteralParseError(LinvError):
    """Malformed textual literal."""
