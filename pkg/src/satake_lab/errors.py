"""Exception hierarchy shared by every module of the package."""


class SatakeLabError(Exception):
    """Base class for all errors raised by satake_lab."""


class InvalidType(SatakeLabError):
    pass


class UnsupportedPreset(SatakeLabError):
    pass


class InvalidRootDatum(SatakeLabError):
    pass


class GroupTooLarge(SatakeLabError):
    pass


class ShapeMismatch(SatakeLabError):
    pass


class NotDominant(SatakeLabError):
    pass


class NotDominantForJ(NotDominant):
    pass


class DimensionCap(SatakeLabError):
    pass


class BasisShapeMismatch(ShapeMismatch):
    pass


class SearchBoxExhausted(SatakeLabError):
    pass


class EnumerationCap(SatakeLabError):
    pass


class NotPSmall(SatakeLabError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class WrongMode(SatakeLabError):
    pass


class AssumptionViolated(SatakeLabError):
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class OrthogonalityFails(SatakeLabError):
    """Raised when the central-character orthogonality check fails.

    ``report`` carries the failing :class:`~satake_lab.checkers.CheckReport`
    so callers can surface the witness pair.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class JacobiFailure(SatakeLabError):
    pass


class SizeCap(SatakeLabError):
    pass


class WeightOutOfRange(SatakeLabError):
    pass


class ConfigError(SatakeLabError):
    def __init__(self, message, field=None, line=None):
        where = []
        if field is not None:
            where.append(f"field {field!r}")
        if line is not None:
            where.append(f"line {line}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)
        self.field = field
        self.line = line
