"""
Kernel error hierarchy.

Every failure the engine reports deliberately is a DownUpError. The CLI maps
``name`` to the error line and picks the exit code from ``usage``.
"""


class DownUpError(Exception):
    """Base class for all engine errors."""

    usage = False

    def __init__(self, message: str = ""):
        self.message = message or self.name
        super().__init__(self.message)

    @property
    def name(self) -> str:
        return type(self).__name__


class DivisionByZero(DownUpError, ZeroDivisionError):
    pass


class ZeroInput(DownUpError):
    pass


class NotNoetherian(DownUpError):
    pass


class NotHomogeneous(DownUpError):
    pass


class SingularChangeOfBasis(DownUpError):
    pass


class DegreeBoundExceeded(DownUpError):
    pass


class RequiresRNotOne(DownUpError):
    pass


class UnsupportedRegime(DownUpError):
    pass


class IsConformal(DownUpError):
    pass


class HypothesisFailed(DownUpError):
    """A construction precondition does not hold; ``condition`` names it."""

    def __init__(self, condition: str, message: str = ""):
        self.condition = condition
        super().__init__(message or condition)


class NeedsSquareRootOfR(DownUpError):
    pass


class UndecidableAtBound(DownUpError):
    def __init__(self, bound: int, message: str = ""):
        self.bound = bound
        super().__init__(
            message
            or f"no multiplicative relation up to exponent {bound}; declare one to go further"
        )


class ConfigError(DownUpError):
    usage = True


class ExprSyntaxError(DownUpError):
    """Malformed expression; ``position`` is the (start, end) column span."""

    usage = True

    def __init__(self, source: str, position: tuple[int, int], message: str):
        self.source = source
        self.position = position
        super().__init__(message)

    @property
    def name(self) -> str:
        return "SyntaxError"

    def caret_line(self) -> str:
        start, end = self.position
        return " " * start + "^" * max(1, end - start)


class UnknownSymbol(ExprSyntaxError):
    @property
    def name(self) -> str:
        return "UnknownSymbol"


class UsageError(DownUpError):
    usage = True


class InternalError(DownUpError):
    """An unexpected exception, wrapped so the CLI can still emit an envelope."""

    def __init__(self, error: Exception):
        self.original = error
        super().__init__(f"{type(error).__name__}: {error}")
