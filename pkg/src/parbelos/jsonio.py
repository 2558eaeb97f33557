"""JSON forms of kernel values.

Rationals travel as strings ("p/q", or "p" when the denominator is 1) so the
reports stay exact; points are {"x","y"} objects, lines their canonical
integer triples.  Serialization is deterministic: dict key order is fixed by
construction, so identical inputs give byte-identical ``json.dumps`` output.
"""

from __future__ import annotations

from fractions import Fraction

from .euclid import Circle, Line, Point, Segment
from .figure import ParbelosFigure, corollary_checks, sondow_checks
from .parabola import Parabola
from .rational import format_rational


def point_json(p: Point) -> dict:
    return {"x": format_rational(p.x), "y": format_rational(p.y)}


def line_json(line: Line) -> dict:
    return {"a": line.a, "b": line.b, "c": line.c}


def circle_json(circle: Circle) -> dict:
    return {"center": point_json(circle.center), "radius_sq": format_rational(circle.radius_sq)}


def segment_json(segment: Segment) -> dict:
    return {"p": point_json(segment.p), "q": point_json(segment.q)}


def parabola_json(parabola: Parabola) -> dict:
    return {"focus": point_json(parabola.focus), "directrix": line_json(parabola.directrix)}


def figure_json(fig: ParbelosFigure) -> dict:
    """Figure fields by their attribute names."""
    return {
        "C1": point_json(fig.C1),
        "C2": point_json(fig.C2),
        "C3": point_json(fig.C3),
        "inner1": parabola_json(fig.inner1),
        "inner2": parabola_json(fig.inner2),
        "outer": parabola_json(fig.outer),
        "tangent_at_C1": line_json(fig.tangent_at_C1),
        "tangent_at_C3": line_json(fig.tangent_at_C3),
        "tangent_at_C2_left": line_json(fig.tangent_at_C2_left),
        "tangent_at_C2_right": line_json(fig.tangent_at_C2_right),
        "T1": point_json(fig.T1),
        "T2": point_json(fig.T2),
        "T3": point_json(fig.T3),
        "square_R": [point_json(p) for p in fig.square_R],
        "center_O": point_json(fig.center_O),
        "circumcircle_K": circle_json(fig.circumcircle_K),
        "focus_F": point_json(fig.focus_F),
        "diagonal": line_json(fig.diagonal),
        "contact_T": point_json(fig.contact_T),
        "bisector": line_json(fig.bisector),
        "H": point_json(fig.H),
        "A1": point_json(fig.A1),
        "A3": point_json(fig.A3),
    }


def verification_json(fig: ParbelosFigure) -> dict:
    """Figure JSON plus per-check verdicts from both verification passes."""
    sondow = sondow_checks(fig)
    corollaries = corollary_checks(fig)
    doc = figure_json(fig)
    doc["checks"] = {
        "sondow": {label: ok for label, _, ok in sondow},
        "corollaries": {label: ok for label, _, ok in corollaries},
    }
    doc["overall"] = all(ok for _, _, ok in sondow + corollaries)
    return doc


def value_json(value):
    """Generic dispatcher used for DSL bindings and assertion witnesses."""
    if isinstance(value, bool):
        return value
    if isinstance(value, (Fraction, int)):
        return format_rational(Fraction(value))
    if isinstance(value, Point):
        return point_json(value)
    if isinstance(value, Line):
        return line_json(value)
    if isinstance(value, Circle):
        return circle_json(value)
    if isinstance(value, Segment):
        return segment_json(value)
    if isinstance(value, Parabola):
        return parabola_json(value)
    if isinstance(value, ParbelosFigure):
        return figure_json(value)
    if isinstance(value, str):
        return value
    raise TypeError(f"no JSON form for {type(value).__name__}")
