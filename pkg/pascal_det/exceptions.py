"""
Exceptions raised by the Pascal determinantal array library.

Every error derives from PascalDetError so the command line front end can
separate usage problems (DomainError, exit status 2) from route failures
(everything else, exit status 1).
"""


class PascalDetError(Exception):
    """Base class for all library errors"""


class DomainError(PascalDetError, ValueError):
    """An argument lies outside the domain of an operation"""


class MinorRangeError(DomainError):
    """A contiguous minor does not fit inside its matrix"""


class InvalidOriginError(DomainError):
    """The staged algorithm only generates windows anchored at (0, 0)"""


class OracleCapExceeded(PascalDetError):
    """Cofactor expansion was asked for a matrix larger than its cap"""

    def __init__(self, n, cap):
        self.n = n
        self.cap = cap
        super().__init__(f"cofactor expansion capped at n={cap}, got n={n}")


class ZeroInteriorError(PascalDetError):
    """
    Condensation needs to divide by an interior entry that is zero.

    Attributes:
        generation: grid holding the zero (1 is the input matrix)
        row, col: zero-based position inside that grid
    """

    def __init__(self, generation, row, col):
        self.generation = generation
        self.row = row
        self.col = col
        super().__init__(
            f"zero interior entry in generation {generation} at ({row}, {col})"
        )


class NonExactDivisionError(PascalDetError, ArithmeticError):
    """A division that must be exact left a remainder"""

    def __init__(self, numerator, denominator, context=""):
        self.numerator = numerator
        self.denominator = denominator
        self.context = context
        super().__init__(f"{numerator} is not divisible by {denominator} ({context})")


class NonIntegralityError(PascalDetError, ArithmeticError):
    """A rational value that must be an integer is not"""

    def __init__(self, value, context=""):
        self.value = value
        self.context = context
        super().__init__(f"expected an integer, got {value} ({context})")


class RouteDisagreementError(PascalDetError):
    """Two evaluation routes produced different values for the same entry"""

    def __init__(self, values):
        self.values = dict(values)
        listing = ", ".join(f"{name}={value}" for name, value in self.values.items())
        super().__init__(f"routes disagree: {listing}")
