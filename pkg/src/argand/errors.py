"""Exception hierarchy shared by every module of the package."""


class ArgandError(Exception):
    """Base class for all errors raised by this package."""


# -- arithmetic --------------------------------------------------------------

class NonFiniteError(ArgandError, ArithmeticError):
    """A component became NaN or infinite."""


class ZeroArgumentError(ArgandError, ValueError):
    """The argument (direction angle) of the zero line was requested."""


class NegativeModulusError(ArgandError, ValueError):
    """A polar construction was given a negative length."""


# -- polynomials -------------------------------------------------------------

class LeadingZeroError(ArgandError, ValueError):
    """The leading coefficient of a polynomial is zero."""


class EmptyPolynomialError(ArgandError, ValueError):
    """Too few coefficients were supplied."""


class ParseError(ArgandError, ValueError):
    """Malformed textual or JSON input.

    ``line`` and ``position`` locate the problem when known (1-based).
    """

    def __init__(self, message, line=None, position=None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if position is not None:
            where.append(f"position {position}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)
        self.line = line
        self.position = position


# -- iteration ---------------------------------------------------------------

class NumericalFailure(ArgandError):
    """An iterative procedure could not reach its goal.

    ``root_index`` is filled in by the all-roots driver when the failure
    happened while searching for a particular root.
    """

    root_index = None


class ZeroValueError(NumericalFailure):
    """A descent step was requested at a point that is already a root."""


class ShrinkFailureError(NumericalFailure):
    """Step halving was exhausted without producing a decrease."""


class StagnationError(NumericalFailure):
    """The modulus stopped decreasing at a useful rate."""


class MaxStepsError(NumericalFailure):
    """The per-root step budget ran out above tolerance."""


class OracleNoConvergeError(NumericalFailure):
    """Simultaneous iteration did not settle within its iteration budget."""


# -- misc --------------------------------------------------------------------

class LengthMismatchError(ArgandError, ValueError):
    """Two root sets to be paired have different sizes."""


class EmptyTraceError(ArgandError, ValueError):
    """A figure was requested from an empty trace."""
