"""Exception hierarchy shared by every module."""


class IncidenceError(Exception):
    """Base class for all errors raised by this package."""


class FieldError(IncidenceError):
    pass


class ElementSyntaxError(FieldError, ValueError):
    pass


class UnknownGeneratorError(FieldError, ValueError):
    pass


class InvalidTowerError(FieldError, ValueError):
    pass


class TowerMismatchError(FieldError, ValueError):
    pass


class DivisionByZeroError(FieldError, ZeroDivisionError):
    pass


class ZeroDivisorError(FieldError, ZeroDivisionError):
    """An element with no inverse was found in an algebraic extension.

    This only happens when a minimal polynomial of the tower is reducible;
    ``factor`` is the nontrivial common factor that exposed it.
    """

    def __init__(self, generator: str, factor: str):
        self.generator = generator
        self.factor = factor
        super().__init__(
            f"minimal polynomial of {generator!r} is reducible: "
            f"found nontrivial factor {factor}"
        )


class GeometryError(IncidenceError, ValueError):
    pass


class DegenerateLineError(GeometryError):
    pass


class EqualPointsError(GeometryError):
    pass


class SingularMatrixError(GeometryError):
    pass


class BadPointError(IncidenceError):
    """A specialization assignment is not generic for the data at hand.

    ``condition`` is one of ``denominator``, ``point_collapse``,
    ``line_collapse`` or ``line_degenerate``.
    """

    def __init__(self, condition: str, detail: str):
        self.condition = condition
        self.detail = detail
        super().__init__(f"{condition}: {detail}")


class UnsupportedTowerError(IncidenceError, ValueError):
    pass


class RetriesExhaustedError(IncidenceError):
    def __init__(self, attempts: int, last: BadPointError):
        self.attempts = attempts
        self.last = last
        super().__init__(f"no generic assignment after {attempts} attempts; last violation: {last}")


class GuardExceededError(IncidenceError, ValueError):
    pass
