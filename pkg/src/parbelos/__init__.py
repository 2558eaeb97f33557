"""Exact rational plane geometry: parbelos construction and theorem checks."""

from .dsl import EvalReport, Program, evaluate, parse_script, pretty_print, report_json
from .errors import GeometryError
from .euclid import (
    Circle,
    Line,
    Point,
    Segment,
    circle_point,
    circle_through_points,
    circumcircle,
    is_collinear,
    line_through,
    on_circle,
    pedal_point,
    perpendicular_through,
    point,
    second_intersection,
)
from .figure import (
    ParbelosFigure,
    build_parbelos,
    similarity_transform,
    verify_corollaries,
    verify_sondow,
)
from .jsonio import figure_json, verification_json
from .parabola import (
    LEFT,
    RIGHT,
    CanonicalElements,
    Parabola,
    canonical_elements,
    contains_point,
    is_tangent,
    parabola_from_latus_rectum,
    point_at_parameter,
    tangent_at,
)
from .rational import Rational, format_rational, make_rational, parse_rational, to_decimal_string
from .svg import Scene, bindings_scene, figure_scene, parabola_arc, render_svg
from .theorems import (
    TheoremReport,
    converse_lambert,
    lambert_circumcircle_check,
    simson_check,
)

__all__ = [
    "Circle",
    "CanonicalElements",
    "EvalReport",
    "GeometryError",
    "LEFT",
    "Line",
    "Parabola",
    "ParbelosFigure",
    "Point",
    "Program",
    "RIGHT",
    "Rational",
    "Scene",
    "Segment",
    "TheoremReport",
    "bindings_scene",
    "build_parbelos",
    "canonical_elements",
    "circle_point",
    "circle_through_points",
    "circumcircle",
    "contains_point",
    "converse_lambert",
    "evaluate",
    "figure_json",
    "figure_scene",
    "format_rational",
    "is_collinear",
    "is_tangent",
    "lambert_circumcircle_check",
    "line_through",
    "make_rational",
    "on_circle",
    "parabola_arc",
    "parabola_from_latus_rectum",
    "parse_rational",
    "parse_script",
    "pedal_point",
    "perpendicular_through",
    "point",
    "point_at_parameter",
    "pretty_print",
    "render_svg",
    "report_json",
    "second_intersection",
    "similarity_transform",
    "simson_check",
    "tangent_at",
    "to_decimal_string",
    "verification_json",
    "verify_corollaries",
    "verify_sondow",
]
