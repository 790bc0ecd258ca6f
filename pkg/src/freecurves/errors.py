"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class FreeCurvesError(Exception):
    """Base class for every error raised by the library."""


# numfield
class MixedFields(FreeCurvesError):
    pass


class DivisionByZero(FreeCurvesError, ZeroDivisionError):
    pass


class ReducibleMinpoly(FreeCurvesError):
    pass


class DegreeUnsupported(FreeCurvesError):
    pass


class ProvablyReducible(FreeCurvesError):
    pass


# polyring
class ParseError(FreeCurvesError):
    """Input text could not be turned into a polynomial or file model."""

    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        self.line = line
        self.col = col
        where = ""
        if line is not None:
            where = f"line {line}, col {col}: " if col is not None else f"line {line}: "
        elif col is not None:
            where = f"col {col}: "
        super().__init__(where + message)


class PolySyntaxError(ParseError):
    pass


class NotHomogeneous(ParseError):
    pass


class UnknownSymbol(ParseError):
    pass


class DegreeMismatch(FreeCurvesError):
    pass


class SingularMatrix(FreeCurvesError):
    pass


# syzygy
class NotReduced(FreeCurvesError):
    pass


class BudgetExceeded(FreeCurvesError):
    pass


class RankMismatch(FreeCurvesError):
    pass


class StabilizationFailure(FreeCurvesError):
    pass


class ShapeContradiction(FreeCurvesError):
    pass


class NotASyzygy(FreeCurvesError):
    pass


# localsing
class NotSingularAtOrigin(FreeCurvesError):
    pass


class NonIsolated(FreeCurvesError):
    pass


class PointNotOnCurve(FreeCurvesError):
    pass


class PointNotSingular(FreeCurvesError):
    pass


class FieldTooSmall(FreeCurvesError):
    pass


# arrangements
class FieldTowerUnsupported(FreeCurvesError):
    pass


class InvalidComponent(FreeCurvesError):
    pass


class NotLineArrangement(FreeCurvesError):
    pass


# catalog
class CatalogError(FreeCurvesError):
    pass


class UnknownName(CatalogError):
    pass


class ConstraintViolated(CatalogError):
    pass


class DegeneratePoint(CatalogError):
    pass


class DuplicateLines(CatalogError):
    pass


# cli
class FileFormatError(ParseError):
    """A line of an arrangement file does not follow the input format."""
