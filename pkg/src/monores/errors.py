"""Exception types shared across the package."""


class MonomialError(ValueError):
    """Base class for invalid input to monomial computations."""


class DimensionMismatch(MonomialError):
    pass


class ZeroIdealError(MonomialError):
    """An empty generator list was given (the zero ideal is not supported)."""


class UnitIdealError(MonomialError):
    """A zero exponent vector was given, so the ideal is the whole ring."""


class NotArtinianError(MonomialError):
    """The zero set of the monomials is not the origin."""


class LatticeOverflowError(OverflowError):
    """An intermediate lattice quantity left the supported integer range."""


class ParseError(MonomialError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + where)
        self.message = message
