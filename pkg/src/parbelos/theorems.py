"""Executable theorem checks: Simson-Wallace, Lambert, and Lambert's converse.

Each check re-walks a classical construction with exact arithmetic and
returns a report carrying every intermediate witness (pedal points, triangle
vertices, circles, constructed lines), so a frontend can print the full trace.
Verdicts are exact booleans; nothing is compared with a tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .errors import (
    BothIntersectionsDegenerate,
    CircleMissesFocusOrI,
    DegenerateTriangle,
    NotTangent,
    ParallelLines,
    ParallelTangents,
)
from .euclid import (
    Circle,
    Line,
    Point,
    circumcircle,
    is_collinear,
    is_parallel,
    line_intersection,
    line_through,
    on_circle,
    pedal_point,
    second_intersection,
)
from .parabola import Parabola, is_tangent


@dataclass(frozen=True)
class TheoremReport:
    name: str
    witnesses: tuple[tuple[str, Any], ...]
    verdict: bool
    failure_detail: str | None = None


def simson_check(p: Point, a: Point, b: Point, c: Point) -> TheoremReport:
    """Simson-Wallace agreement check for a point against a triangle.

    The pedals of p on the three side lines are collinear exactly when p is
    on the circumcircle; the report passes iff the two exact predicates agree
    (both may be true or both false).
    """
    if is_collinear(a, b, c):
        raise DegenerateTriangle(f"triangle {a}, {b}, {c} is degenerate")
    pedal_bc = pedal_point(p, line_through(b, c))
    pedal_ca = pedal_point(p, line_through(c, a))
    pedal_ab = pedal_point(p, line_through(a, b))
    circle = circumcircle(a, b, c)
    pedals_collinear = is_collinear(pedal_bc, pedal_ca, pedal_ab)
    point_on_circle = on_circle(circle, p)
    agree = pedals_collinear == point_on_circle
    detail = None
    if not agree:
        detail = (
            "pedals collinear but point off circumcircle"
            if pedals_collinear
            else "point on circumcircle but pedals not collinear"
        )
    return TheoremReport(
        name="simson-wallace",
        witnesses=(
            ("pedal_bc", pedal_bc),
            ("pedal_ca", pedal_ca),
            ("pedal_ab", pedal_ab),
            ("circumcircle", circle),
            ("pedals_collinear", pedals_collinear),
            ("point_on_circle", point_on_circle),
        ),
        verdict=agree,
        failure_detail=detail,
    )


def lambert_circumcircle_check(
    parabola: Parabola, l1: Line, l2: Line, l3: Line
) -> TheoremReport:
    """Circumcircle of a tangent triangle must pass through the focus."""
    for index, line in enumerate((l1, l2, l3), start=1):
        if not is_tangent(parabola, line):
            raise NotTangent(index)
    try:
        p12 = line_intersection(l1, l2)
        p23 = line_intersection(l2, l3)
        p31 = line_intersection(l3, l1)
    except ParallelLines as exc:
        raise DegenerateTriangle("two tangents are parallel") from exc
    if p12 == p23 or p23 == p31 or p31 == p12:
        raise DegenerateTriangle("tangents are concurrent")
    circle = circumcircle(p12, p23, p31)
    focus_on_circle = on_circle(circle, parabola.focus)
    return TheoremReport(
        name="lambert-circumcircle",
        witnesses=(
            ("vertex_12", p12),
            ("vertex_23", p23),
            ("vertex_31", p31),
            ("circumcircle", circle),
            ("focus", parabola.focus),
        ),
        verdict=focus_on_circle,
        failure_detail=None if focus_on_circle else "focus not on circumcircle",
    )


def converse_lambert(
    parabola: Parabola, l1: Line, l2: Line, circle: Circle
) -> tuple[Line, TheoremReport]:
    """Rebuild a tangent from two tangents and a circle through focus and I.

    I is the tangent intersection; each tangent meets the circle again at H_i
    (taken via the known-root second intersection, so H_i = I exactly when
    the circle is tangent to l_i there).  The constructed line joins the two
    distinct points among {H_1, H_2, I}; when one H_i collapses onto I it is
    simply the other tangent's chord, i.e. that tangent itself.  The report
    passes iff the constructed line satisfies the pedal tangency criterion.
    """
    for index, line in enumerate((l1, l2), start=1):
        if not is_tangent(parabola, line):
            raise NotTangent(index)
    if is_parallel(l1, l2):
        raise ParallelTangents(f"{l1} and {l2} have no intersection")
    intersection = line_intersection(l1, l2)
    if not (on_circle(circle, parabola.focus) and on_circle(circle, intersection)):
        raise CircleMissesFocusOrI(
            "circle must pass through the focus and the tangent intersection"
        )
    h1 = second_intersection(l1, circle, intersection)
    h2 = second_intersection(l2, circle, intersection)
    if h1 == intersection and h2 == intersection:
        raise BothIntersectionsDegenerate(
            "circle is tangent to both lines at their intersection"
        )
    if h1 == intersection:
        constructed = line_through(intersection, h2)
    elif h2 == intersection:
        constructed = line_through(h1, intersection)
    else:
        constructed = line_through(h1, h2)
    tangent = is_tangent(parabola, constructed)
    report = TheoremReport(
        name="converse-lambert",
        witnesses=(
            ("intersection", intersection),
            ("h1", h1),
            ("h2", h2),
            ("constructed", constructed),
        ),
        verdict=tangent,
        failure_detail=None if tangent else "constructed chord is not tangent",
    )
    return constructed, report
