"""Exception types shared across the package."""


class GWCalcError(Exception):
    """Base class for all errors raised by gwcalc."""


class ZeroConstantTerm(GWCalcError, ArithmeticError):
    """A series with vanishing constant term was inverted."""


class LengthMismatch(GWCalcError, ValueError):
    """Two genus sequences of different length were combined."""


class SingularSystem(GWCalcError, ArithmeticError):
    """A triangular genus system has a zero diagonal."""


class CapExceeded(GWCalcError, RuntimeError):
    """An enumeration outgrew its configured caps."""


class MissingInvariant(GWCalcError, KeyError):
    """A relative invariant required by the degeneration formula is absent."""

    def __str__(self):
        return str(self.args[0]) if self.args else "missing invariant"


class NegativeC1(GWCalcError, ValueError):
    """The class pairs negatively with the first Chern class."""


class MissingDivisorData(GWCalcError, ValueError):
    """A multiple-cover solve lacks data for some divisor class A/d."""


class ParseError(GWCalcError, ValueError):
    """Malformed input document."""
