"""Exception hierarchy.

Every geometric failure derives from GeometryError so callers that render
whole scenes can collect them per entity instead of aborting.
"""


class GeometryError(ValueError):
    pass


class AtObserver(GeometryError):
    """A point coincides with the observer, so it has no ray of sight."""


class AtBlowup(GeometryError):
    """A direction is too close to B to be flattened without an approach azimuth."""


class ThroughObserver(GeometryError):
    pass


class NotFrontal(GeometryError):
    pass


class FrontalLine(GeometryError):
    pass


class NotPosterior(GeometryError):
    pass


class PoleElevation(GeometryError):
    pass


class DuplicatePoints(GeometryError):
    pass


class TooFewKnots(GeometryError):
    pass


class AnteriorNotMeridian(GeometryError):
    pass


class CenterHasNoUniqueAntipode(GeometryError):
    pass


class BlowupInput(GeometryError):
    pass


class OffCircle(GeometryError):
    pass


class EmptyInput(GeometryError):
    pass


class SpanMismatch(GeometryError):
    pass


class ObserverInsideSphere(GeometryError):
    pass


class InvalidParams(GeometryError):
    pass


class ParseError(ValueError):
    def __init__(self, lineno, reason):
        super().__init__(f"line {lineno}: {reason}")
        self.lineno = lineno
        self.reason = reason
