"""Exception hierarchy shared by every module of the package."""


class LyndonArrayError(Exception):
    """Base class for all errors raised by lyndonarrays."""


class InvalidInput(LyndonArrayError, ValueError):
    pass


class UnknownSymbol(LyndonArrayError, KeyError):
    pass


class OutOfBounds(LyndonArrayError, IndexError):
    pass


class ModeMismatch(LyndonArrayError, ValueError):
    """A text was framed in the wrong sentinel mode for the requested operation."""


class InvalidQuery(LyndonArrayError, ValueError):
    pass


class ContractViolation(LyndonArrayError, AssertionError):
    """An LCE query broke its precondition or returned a wrong value (shadow mode)."""


class InputMismatch(LyndonArrayError, ValueError):
    """Two built results do not describe the same interior word."""


class LinearityViolation(LyndonArrayError, AssertionError):
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class VerificationFailure(LyndonArrayError, AssertionError):
    """An invariant or oracle cross-check failed; carries the first counterexample."""
