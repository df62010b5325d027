"""Exception hierarchy shared by all modules."""


class HfixError(Exception):
    """Base class for every error raised by hfix."""


class ParseError(HfixError, ValueError):
    """Malformed function expression; ``offset`` is a byte offset into the source."""

    def __init__(self, message, offset):
        super().__init__(f"{message} (at byte {offset})")
        self.message = message
        self.offset = offset


class IndeterminateError(HfixError, ArithmeticError):
    """Numerator and denominator vanish together (a shared root)."""


class DegenerateMobiusError(HfixError, ValueError):
    pass


class DegreeError(HfixError, ValueError):
    pass


class ScaleError(HfixError, ValueError):
    """Coefficients overflow when the denominator is made monic."""


class IdentityMapError(HfixError, ValueError):
    """The map is the identity, so every point is fixed."""


class NotAFixedPointError(HfixError, ValueError):
    pass


class ContourError(HfixError, ArithmeticError):
    """Quadrature contour passes too close to a pole or a fixed point, or does not converge."""
