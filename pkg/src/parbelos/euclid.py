"""Rational plane primitives: points, lines, circles, and incidence operations.

Everything is exact.  Lines are canonicalized primitive integer triples so
equality of lines is structural equality; circles store the squared radius
(radii are generally irrational, centers of our constructions never are).
The one operation that looks like it should leave the rationals --
intersecting a line with a circle -- is done with a known point on both via
Vieta's root factoring, which keeps the whole kernel rational-closed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    CoincidentPoints,
    DegenerateCircle,
    DegenerateLine,
    DegenerateTriangle,
    ParallelLines,
    PointNotIncident,
)
from .rational import Rational, format_rational

Scalar = Rational | int


@dataclass(frozen=True)
class Point:
    x: Rational
    y: Rational

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def __str__(self) -> str:
        return f"({format_rational(self.x)}, {format_rational(self.y)})"


def point(x: Scalar, y: Scalar) -> Point:
    """Build a point, coercing plain integers to exact rationals."""
    return Point(Fraction(x), Fraction(y))


def scale(p: Point, k: Scalar) -> Point:
    return Point(p.x * k, p.y * k)


def dot(p: Point, q: Point) -> Rational:
    return p.x * q.x + p.y * q.y


def cross(p: Point, q: Point) -> Rational:
    return p.x * q.y - p.y * q.x


def midpoint(p: Point, q: Point) -> Point:
    return Point((p.x + q.x) / 2, (p.y + q.y) / 2)


def dist_sq(p: Point, q: Point) -> Rational:
    d = q - p
    return dot(d, d)


@dataclass(frozen=True)
class Line:
    """The line a*x + b*y + c = 0 with a canonical primitive integer triple.

    Canonical form: gcd(|a|, |b|, |c|) = 1 and the leading nonzero coefficient
    (a if a != 0, else b) is positive.  Rational coefficients passed to the
    constructor are cleared to integers, so two equal lines always compare
    structurally equal.
    """

    a: int
    b: int
    c: int

    def __post_init__(self):
        a, b, c = Fraction(self.a), Fraction(self.b), Fraction(self.c)
        if a == 0 and b == 0:
            raise DegenerateLine("line needs (a, b) != (0, 0)")
        mult = math.lcm(a.denominator, b.denominator, c.denominator)
        ia, ib, ic = int(a * mult), int(b * mult), int(c * mult)
        g = math.gcd(ia, ib, ic)
        ia, ib, ic = ia // g, ib // g, ic // g
        if ia < 0 or (ia == 0 and ib < 0):
            ia, ib, ic = -ia, -ib, -ic
        object.__setattr__(self, "a", ia)
        object.__setattr__(self, "b", ib)
        object.__setattr__(self, "c", ic)

    def evaluate(self, p: Point) -> Rational:
        """Signed value a*x + b*y + c; zero exactly on the line."""
        return self.a * p.x + self.b * p.y + self.c

    def contains(self, p: Point) -> bool:
        return self.evaluate(p) == 0

    def direction(self) -> tuple[int, int]:
        """Primitive integer direction vector, sign-canonicalized.

        The first nonzero component is positive, so the vector is a pure
        function of the line (used by chord parametrizations that need a
        well-defined rational parameter).
        """
        g = math.gcd(self.a, self.b)
        dx, dy = self.b // g, -(self.a // g)
        if dx < 0 or (dx == 0 and dy < 0):
            dx, dy = -dx, -dy
        return dx, dy

    def normal(self) -> tuple[int, int]:
        """Primitive integer normal (a, b)/gcd, keeping the stored sign."""
        g = math.gcd(self.a, self.b)
        return self.a // g, self.b // g

    def __str__(self) -> str:
        return f"{self.a}x + {self.b}y + {self.c} = 0"


@dataclass(frozen=True)
class Circle:
    center: Point
    radius_sq: Rational

    def __post_init__(self):
        if self.radius_sq <= 0:
            raise DegenerateCircle(f"radius_sq must be positive, got {self.radius_sq}")


@dataclass(frozen=True)
class Segment:
    p: Point
    q: Point

    def __post_init__(self):
        if self.p == self.q:
            raise CoincidentPoints("segment endpoints coincide")

    def endpoints(self) -> frozenset[Point]:
        return frozenset((self.p, self.q))


def line_through(p: Point, q: Point) -> Line:
    """Canonical line containing two distinct points."""
    if p == q:
        raise CoincidentPoints(f"no unique line through {p} twice")
    a = q.y - p.y
    b = p.x - q.x
    c = -(a * p.x + b * p.y)
    return Line(a, b, c)


def parallel_through(line: Line, p: Point) -> Line:
    """The line through p parallel to ``line`` (equal to it if p is on it)."""
    return Line(line.a, line.b, -(line.a * p.x + line.b * p.y))


def perpendicular_through(line: Line, p: Point) -> Line:
    """The line through p perpendicular to ``line``; its direction is (a, b)."""
    return Line(line.b, -line.a, -(line.b * p.x - line.a * p.y))


def is_parallel(l1: Line, l2: Line) -> bool:
    return l1.a * l2.b - l2.a * l1.b == 0


def is_perpendicular(l1: Line, l2: Line) -> bool:
    return l1.a * l2.a + l1.b * l2.b == 0


def line_intersection(l1: Line, l2: Line) -> Point:
    det = l1.a * l2.b - l2.a * l1.b
    if det == 0:
        raise ParallelLines(f"{l1} and {l2} do not intersect")
    x = Fraction(l1.b * l2.c - l2.b * l1.c, det)
    y = Fraction(l2.a * l1.c - l1.a * l2.c, det)
    return Point(x, y)


def pedal_point(p: Point, line: Line) -> Point:
    """Orthogonal projection of p onto the line (p itself if already on it)."""
    t = Fraction(line.evaluate(p), line.a * line.a + line.b * line.b)
    return Point(p.x - t * line.a, p.y - t * line.b)


def dist_sq_point_line(p: Point, line: Line) -> Rational:
    v = line.evaluate(p)
    return Fraction(v * v, line.a * line.a + line.b * line.b)


def is_collinear(a: Point, b: Point, c: Point) -> bool:
    """Exact collinearity via the 2x2 determinant of (b - a, c - a).

    Degenerate input with repeated points is collinear under this convention.
    """
    return cross(b - a, c - a) == 0


def perpendicular_bisector(p: Point, q: Point) -> Line:
    if p == q:
        raise CoincidentPoints("perpendicular bisector needs distinct points")
    return perpendicular_through(line_through(p, q), midpoint(p, q))


def circumcircle(a: Point, b: Point, c: Point) -> Circle:
    """Unique circle through three points; center from perpendicular bisectors."""
    if is_collinear(a, b, c):
        raise DegenerateTriangle(f"collinear or coincident: {a}, {b}, {c}")
    center = line_intersection(perpendicular_bisector(a, b), perpendicular_bisector(b, c))
    return Circle(center, dist_sq(center, a))


def on_circle(circle: Circle, p: Point) -> bool:
    return dist_sq(circle.center, p) == circle.radius_sq


def second_intersection(line: Line, circle: Circle, p: Point) -> Point:
    """The other point of line ∩ circle, given the point p on both.

    Along the chord X(t) = p + t*d the incidence condition is a quadratic in t
    whose constant term vanishes because p is already on the circle, so the
    unknown root comes straight out of Vieta: t = -2 d·(p - center) / |d|^2.
    No square root is ever taken, which is what keeps the kernel inside the
    rationals.  If the line is tangent at p the second root is t = 0 and p
    itself is returned.
    """
    if not line.contains(p):
        raise PointNotIncident(f"{p} is not on {line}")
    if not on_circle(circle, p):
        raise PointNotIncident(f"{p} is not on the circle")
    dx, dy = line.direction()
    d = point(dx, dy)
    t = Fraction(-2 * dot(d, p - circle.center), dot(d, d))
    return p + scale(d, t)


def circle_point(circle: Circle, q: Point, t: Rational | None) -> Point:
    """Rational point of the circle cut out by the chord of slope t through q.

    ``t = None`` selects the vertical chord.  Every rational point of the
    circle except q is hit by exactly one parameter; a tangent chord returns
    q itself.
    """
    if not on_circle(circle, q):
        raise PointNotIncident(f"{q} is not on the circle")
    if t is None:
        chord = Line(1, 0, -q.x)
    else:
        chord = Line(t, -1, q.y - t * q.x)
    return second_intersection(chord, circle, q)


def circle_through_points(p: Point, q: Point, t: Rational) -> Circle:
    """Member t of the pencil of circles through two fixed points.

    The center is midpoint(p, q) + t*d with d the primitive integer direction
    of the perpendicular bisector of pq; t -> circle is injective and reaches
    every circle through p and q with rational center.
    """
    if p == q:
        raise CoincidentPoints("circle family needs two distinct points")
    mid = midpoint(p, q)
    dx, dy = perpendicular_bisector(p, q).direction()
    center = Point(mid.x + t * dx, mid.y + t * dy)
    return Circle(center, dist_sq(center, p))
