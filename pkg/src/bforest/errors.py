"""Exception types shared across the package."""


class BforestError(Exception):
    """Base class for all package-specific errors."""


class SpecError(BforestError, ValueError):
    """Invalid bicirculant connection data."""


class HalfWithoutEvenN(SpecError):
    pass


class OutOfRange(SpecError):
    pass


class EmptySpokes(SpecError):
    pass


class NotConnected(BforestError, ValueError):
    pass


class ZeroPolynomial(BforestError, ValueError):
    pass


class InexactDivision(BforestError, ArithmeticError):
    pass


class DegenerateSystem(BforestError, ArithmeticError):
    pass


class NonIntegralResult(BforestError, ArithmeticError):
    pass


class UnitCircleAmbiguity(BforestError, ArithmeticError):
    pass


class NonConvergence(BforestError, ArithmeticError):
    pass


class NotAPerfectSquare(BforestError, ArithmeticError):
    pass


class NonDivisible(BforestError, ArithmeticError):
    pass


class NonPositiveStructure(BforestError, ArithmeticError):
    pass


class OrderExceeded(BforestError, ValueError):
    pass
