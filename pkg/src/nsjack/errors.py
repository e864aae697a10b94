"""Exception hierarchy shared by every module.

The CLI maps these onto exit codes, so keep the three branches distinct:
user errors (bad input), singular parameters (a formula divides by zero for
the chosen k, k1), and invariant violations (an identity failed to hold, which
means a bug here).
"""


class NsJackError(Exception):
    """Base class for library errors."""


class UserInputError(NsJackError, ValueError):
    """Malformed or out-of-domain input."""


class SingularParameterError(NsJackError, ZeroDivisionError):
    """A closed form or solve divides by zero at the chosen parameters."""

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class InvariantViolation(NsJackError, AssertionError):
    """An identity that must hold exactly did not."""


class NotDivisibleError(NsJackError, ArithmeticError):
    """Exact polynomial division left a nonzero remainder."""

    def __init__(self, message, remainder):
        super().__init__(message)
        self.remainder = remainder
