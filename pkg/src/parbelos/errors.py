"""Exception hierarchy shared by the geometry kernel and its frontends."""


class GeometryError(Exception):
    """Base class for every error raised by this package."""


class ZeroDenominator(GeometryError):
    """A rational was requested with denominator zero."""


class CoincidentPoints(GeometryError):
    """Two points expected to be distinct coincide."""


class DegenerateLine(GeometryError):
    """Line coefficients (a, b) are both zero."""


class DegenerateCircle(GeometryError):
    """Circle with non-positive squared radius."""


class ParallelLines(GeometryError):
    """Two lines expected to intersect are parallel."""


class DegenerateTriangle(GeometryError):
    """Three points (or three lines) fail to form a proper triangle."""


class PointNotIncident(GeometryError):
    """A point required to lie on a line or circle does not."""


class FocusOnDirectrix(GeometryError):
    """Parabola with focus on its directrix is degenerate."""


class PointNotOnParabola(GeometryError):
    """A point required to lie on a parabola does not."""


class NotTangent(GeometryError):
    """A line required to be tangent to a parabola is not.

    ``index`` is the 1-based position of the offending line argument.
    """

    def __init__(self, index: int, message: str = ""):
        self.index = index
        super().__init__(message or f"line {index} is not tangent")


class ParallelTangents(GeometryError):
    """Tangent pair is parallel (or equal), so it has no intersection."""


class CircleMissesFocusOrI(GeometryError):
    """Circle does not pass through both the focus and the tangent intersection."""


class BothIntersectionsDegenerate(GeometryError):
    """Both chord intersections collapsed onto the tangent intersection point."""


class CuspsNotCollinear(GeometryError):
    """Parbelos cusps do not lie on one line."""


class CuspNotInterior(GeometryError):
    """Middle cusp is not strictly between the outer cusps."""


class DegenerateSide(GeometryError):
    """Half-plane selector is not one of the two valid sides."""


class InvalidRotation(GeometryError):
    """(p, q) does not define a rational rotation: p^2 + q^2 is not a rational square."""


class EmptyScene(GeometryError):
    """Scene has nothing drawable, or contains a degenerate (zero-length) arc."""
