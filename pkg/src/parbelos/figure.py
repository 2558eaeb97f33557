"""The parbelos: three same-side parabolas over collinear cusps.

Given cusps C1, C2, C3 on any rational line (C2 strictly between the others)
and a half-plane to open into, the three parabolas have latera recta C1C2,
C2C3 and C1C3.  The four cusp tangents close into a rectangle C2 T1 T2 T3;
this module builds the whole derived cast -- circumscribing square, tangent
rectangle circumcircle, outer focus, diagonal, cusp bisector, contact point,
and the auxiliary points H, A1, A3 -- and verifies the tangency property of
the diagonal plus the five equidistance/concyclicity properties, all with
exact predicates.  Everything is expressed through kernel operations (pedals,
perpendiculars, intersections), never through coordinates of a preferred
frame, which is what makes the similarity-invariance checks meaningful.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import CuspNotInterior, CuspsNotCollinear, DegenerateSide, InvalidRotation
from .euclid import (
    Circle,
    Line,
    Point,
    circumcircle,
    dist_sq,
    dot,
    is_collinear,
    is_parallel,
    line_intersection,
    line_through,
    midpoint,
    on_circle,
    parallel_through,
    pedal_point,
    perpendicular_through,
)
from .parabola import (
    LEFT,
    RIGHT,
    Parabola,
    Side,
    canonical_elements,
    contains_point,
    is_tangent,
    parabola_from_latus_rectum,
    tangent_at,
)
from .rational import Rational
from .theorems import TheoremReport


@dataclass(frozen=True)
class ParbelosFigure:
    C1: Point
    C2: Point
    C3: Point
    inner1: Parabola
    inner2: Parabola
    outer: Parabola
    tangent_at_C1: Line
    tangent_at_C3: Line
    tangent_at_C2_left: Line
    tangent_at_C2_right: Line
    T1: Point
    T2: Point
    T3: Point
    square_R: tuple[Point, Point, Point, Point]
    center_O: Point
    circumcircle_K: Circle
    focus_F: Point
    diagonal: Line
    contact_T: Point
    bisector: Line
    H: Point
    A1: Point
    A3: Point


def build_parbelos(c1: Point, c2: Point, c3: Point, side: Side = LEFT) -> ParbelosFigure:
    """Construct the full figure from three collinear cusps.

    ``side`` selects the half-plane (left or right of the directed cusp line
    C1 -> C3) all three parabolas open into.  The contact point is computed
    as diagonal ∩ bisector and then re-certified by the exact predicates in
    :func:`verify_sondow` rather than assumed.
    """
    if side not in (LEFT, RIGHT):
        raise DegenerateSide(f"side must be 'left' or 'right', got {side!r}")
    if c1 == c3:
        raise CuspNotInterior("outer cusps coincide")
    if not is_collinear(c1, c2, c3):
        raise CuspsNotCollinear(f"{c1}, {c2}, {c3} are not collinear")
    span = c3 - c1
    t = dot(c2 - c1, span) / dot(span, span)
    if not 0 < t < 1:
        raise CuspNotInterior(f"C2 must lie strictly between C1 and C3 (got t={t})")

    inner1 = parabola_from_latus_rectum(c1, c2, side)
    inner2 = parabola_from_latus_rectum(c2, c3, side)
    outer = parabola_from_latus_rectum(c1, c3, side)

    tangent_at_c1 = tangent_at(outer, c1)
    tangent_at_c3 = tangent_at(outer, c3)
    tangent_at_c2_left = tangent_at(inner1, c2)
    tangent_at_c2_right = tangent_at(inner2, c2)

    # Pair each outer-cusp tangent with the C2 tangent it actually crosses.
    if is_parallel(tangent_at_c1, tangent_at_c2_left):
        for_t1, for_t3 = tangent_at_c2_right, tangent_at_c2_left
    else:
        for_t1, for_t3 = tangent_at_c2_left, tangent_at_c2_right
    t1 = line_intersection(tangent_at_c1, for_t1)
    t3 = line_intersection(tangent_at_c3, for_t3)
    t2 = line_intersection(tangent_at_c1, tangent_at_c3)

    cusp_line = line_through(c1, c3)
    side_c2 = parallel_through(cusp_line, c2)
    side_t2 = parallel_through(cusp_line, t2)
    side_t1 = perpendicular_through(cusp_line, t1)
    side_t3 = perpendicular_through(cusp_line, t3)
    square = (
        line_intersection(side_t1, side_c2),
        line_intersection(side_t3, side_c2),
        line_intersection(side_t3, side_t2),
        line_intersection(side_t1, side_t2),
    )

    diagonal = line_through(t1, t3)
    bisector = perpendicular_through(cusp_line, c2)
    axis1 = canonical_elements(inner1).axis
    axis2 = canonical_elements(inner2).axis
    return ParbelosFigure(
        C1=c1,
        C2=c2,
        C3=c3,
        inner1=inner1,
        inner2=inner2,
        outer=outer,
        tangent_at_C1=tangent_at_c1,
        tangent_at_C3=tangent_at_c3,
        tangent_at_C2_left=tangent_at_c2_left,
        tangent_at_C2_right=tangent_at_c2_right,
        T1=t1,
        T2=t2,
        T3=t3,
        square_R=square,
        center_O=midpoint(c2, t2),
        circumcircle_K=circumcircle(c2, t1, t2),
        focus_F=pedal_point(t2, cusp_line),
        diagonal=diagonal,
        contact_T=line_intersection(diagonal, bisector),
        bisector=bisector,
        H=line_intersection(bisector, outer.directrix),
        A1=line_intersection(axis1, inner2.directrix),
        A3=line_intersection(axis2, inner1.directrix),
    )


def _square_check(fig: ParbelosFigure) -> bool:
    """square_R has four equal sides at right angles, centered where r is."""
    r1, r2, r3, r4 = fig.square_R
    sides = (r2 - r1, r3 - r2, r4 - r3, r1 - r4)
    lengths = {dot(v, v) for v in sides}
    if len(lengths) != 1:
        return False
    if any(dot(sides[i], sides[(i + 1) % 4]) != 0 for i in range(4)):
        return False
    center_of_square = midpoint(r1, r3)
    if center_of_square != midpoint(r2, r4):
        return False
    # r's center: both diagonals of the tangent rectangle must agree on it.
    return (
        center_of_square == fig.center_O
        and fig.center_O == midpoint(fig.C2, fig.T2)
        and fig.center_O == midpoint(fig.T1, fig.T3)
    )


def sondow_checks(fig: ParbelosFigure) -> list[tuple[str, str, bool]]:
    """(label, failure detail, verdict) triples for the tangency property."""
    return [
        (
            "diagonal tangent to outer",
            "diagonal not tangent to outer",
            is_tangent(fig.outer, fig.diagonal),
        ),
        (
            "contact on parabola",
            "contact not on parabola",
            contains_point(fig.outer, fig.contact_T),
        ),
        (
            "contact on bisector",
            "contact not on bisector",
            fig.bisector.contains(fig.contact_T),
        ),
        (
            "FT equals HT",
            "FT differs from HT",
            dist_sq(fig.focus_F, fig.contact_T) == dist_sq(fig.H, fig.contact_T),
        ),
        (
            "focus on circumcircle",
            "focus not on circumcircle",
            on_circle(fig.circumcircle_K, fig.focus_F),
        ),
        (
            "R is a square centered with r",
            "R is not a square centered with r",
            _square_check(fig),
        ),
    ]


def corollary_checks(fig: ParbelosFigure) -> list[tuple[str, str, bool]]:
    """(label, failure detail, verdict) triples for the five derived properties."""
    return [
        (
            "F equidistant from T1 and T3",
            "F not equidistant from T1 and T3",
            dist_sq(fig.focus_F, fig.T1) == dist_sq(fig.focus_F, fig.T3),
        ),
        (
            "H on circumcircle",
            "H not on circumcircle",
            on_circle(fig.circumcircle_K, fig.H),
        ),
        (
            "H equidistant from T1 and T3",
            "H not equidistant from T1 and T3",
            dist_sq(fig.H, fig.T1) == dist_sq(fig.H, fig.T3),
        ),
        (
            "A1 and A3 on circumcircle",
            "A1 or A3 not on circumcircle",
            on_circle(fig.circumcircle_K, fig.A1) and on_circle(fig.circumcircle_K, fig.A3),
        ),
        (
            "A1 and A3 equidistant from C2 and T2",
            "A1 or A3 not equidistant from C2 and T2",
            dist_sq(fig.A1, fig.C2) == dist_sq(fig.A1, fig.T2)
            and dist_sq(fig.A3, fig.C2) == dist_sq(fig.A3, fig.T2),
        ),
    ]


def _report(name: str, checks: list[tuple[str, str, bool]], extra=()) -> TheoremReport:
    verdict = all(ok for _, _, ok in checks)
    detail = next((fail for _, fail, ok in checks if not ok), None)
    witnesses = tuple((label, ok) for label, _, ok in checks) + tuple(extra)
    return TheoremReport(name=name, witnesses=witnesses, verdict=verdict, failure_detail=detail)


def verify_sondow(fig: ParbelosFigure) -> TheoremReport:
    """Exact verification of the tangency property on a built figure.

    Failures are verdicts, never exceptions, so mutated figures can be used
    as negative controls.
    """
    return _report(
        "sondow-tangency",
        sondow_checks(fig),
        extra=(
            ("contact", fig.contact_T),
            ("FT_sq", dist_sq(fig.focus_F, fig.contact_T)),
            ("HT_sq", dist_sq(fig.H, fig.contact_T)),
        ),
    )


def verify_corollaries(fig: ParbelosFigure) -> TheoremReport:
    return _report(
        "parbelos-corollaries",
        corollary_checks(fig),
        extra=(
            ("FT1_sq", dist_sq(fig.focus_F, fig.T1)),
            ("A1C2_sq", dist_sq(fig.A1, fig.C2)),
        ),
    )


def rational_sqrt(value: Rational) -> Rational | None:
    """Exact square root of a rational, or None when it is irrational."""
    if value < 0:
        return None
    num, den = value.numerator, value.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn != num or rd * rd != den:
        return None
    return Fraction(rn, rd)


def similarity_transform(
    inputs: tuple[Point, Point, Point, Side],
    s: Rational,
    rot: tuple[Rational, Rational],
    shift: Point,
) -> tuple[Point, Point, Point, Side]:
    """Apply x -> s * R * x + shift to the three cusps.

    R is the rational rotation built from (p, q): it requires p^2 + q^2 to be
    the square of a rational (Pythagorean-triple rotations, so coordinates
    stay rational).  The side selector transports unchanged because the map
    preserves orientation.
    """
    c1, c2, c3, side = inputs
    if s <= 0:
        raise InvalidRotation(f"scale must be positive, got {s}")
    p, q = Fraction(rot[0]), Fraction(rot[1])
    hyp = rational_sqrt(p * p + q * q)
    if hyp is None or hyp == 0:
        raise InvalidRotation(f"(p, q) = ({p}, {q}) does not give a rational rotation")

    def apply(pt: Point) -> Point:
        x = s * (p * pt.x - q * pt.y) / hyp + shift.x
        y = s * (q * pt.x + p * pt.y) / hyp + shift.y
        return Point(x, y)

    return apply(c1), apply(c2), apply(c3), side


