import pathlib
from fractions import Fraction

import pytest

from parbelos.errors import EmptyScene
from parbelos.euclid import Line, Point, line_intersection, point
from parbelos.figure import build_parbelos
from parbelos.parabola import LEFT, Parabola, tangent_at
from parbelos.svg import (
    Scene,
    bindings_scene,
    figure_scene,
    parabola_arc,
    render_svg,
)

F = Fraction

GOLDEN = pathlib.Path(__file__).parent / "data" / "parbelos_p13.svg"
P13 = build_parbelos(point(0, 0), point(1, 0), point(4, 0), LEFT)
OUTER = Parabola(point(2, 0), Line(0, 1, 2))


def test_arc_control_point_is_tangent_intersection():
    arc = parabola_arc(OUTER, F(-2), F(2))  # cusp to cusp on the outer parabola
    assert arc.p0 == point(0, 0) and arc.p1 == point(4, 0)
    expected = line_intersection(tangent_at(OUTER, arc.p0), tangent_at(OUTER, arc.p1))
    assert arc.control == expected == point(2, -2)  # the control point IS T2


def test_arc_control_points_random_parameters():
    import random

    rng = random.Random(71)
    for _ in range(60):
        t0 = F(rng.randint(-30, 30), rng.randint(1, 7))
        t1 = F(rng.randint(-30, 30), rng.randint(1, 7))
        if t0 == t1:
            continue
        arc = parabola_arc(OUTER, t0, t1)
        tangents = tangent_at(OUTER, arc.p0), tangent_at(OUTER, arc.p1)
        assert arc.control == line_intersection(*tangents)
        assert isinstance(arc.control, Point)  # exact rational, pre-serialization


def test_degenerate_arc_rejected():
    with pytest.raises(EmptyScene):
        parabola_arc(OUTER, F(0), F(0))


def test_empty_scene_rejected():
    with pytest.raises(EmptyScene):
        render_svg(Scene())
    # a scene with only an infinite line has nothing to frame either
    scene = Scene()
    scene.add_line(Line(1, 1, 0))
    with pytest.raises(EmptyScene):
        render_svg(scene)


def test_figure_scene_inventory():
    scene = figure_scene(P13)
    assert len(scene.arcs) == 3
    assert len(scene.circles) == 1
    assert len(scene.points) >= 8
    outer_arc = scene.arcs[2]
    assert outer_arc.control == P13.T2


def test_render_matches_golden_file():
    document = render_svg(figure_scene(P13))
    assert document.encode() == GOLDEN.read_bytes()


def test_render_deterministic():
    first = render_svg(figure_scene(P13))
    second = render_svg(figure_scene(build_parbelos(point(0, 0), point(1, 0), point(4, 0), LEFT)))
    assert first == second


def test_render_counts():
    document = render_svg(figure_scene(P13))
    assert document.count('class="arc"') == 3
    assert document.count("Q ") == 3
    assert document.count('class="circ"') == 1
    assert document.count("<text") == 12


def test_bindings_scene_draws_each_kind():
    from parbelos.dsl import evaluate, parse_script

    source = """\
let A = point(0, 0)
let B = point(4, 0)
let L = line(A, B)
let G = parabola_latus(A, B, left)
let K = circle2(A, B, 1)
"""
    report = evaluate(parse_script(source))
    scene = bindings_scene(report.bindings)
    assert [p.label for p in scene.points] == ["A", "B"]
    assert len(scene.lines) == 1 and len(scene.circles) == 1 and len(scene.arcs) == 1
    # parabola renders its latus arc, endpoints at the latus endpoints
    arc = scene.arcs[0]
    assert {arc.p0, arc.p1} == {point(0, 0), point(4, 0)}
    document = render_svg(scene)
    assert document.count('class="line"') == 1
    assert "<path" in document


def test_clipped_line_endpoints_inside_canvas():
    scene = Scene()
    scene.add_point(point(0, 0), "A")
    scene.add_point(point(10, 10), "B")
    scene.add_line(Line(1, -1, 0))  # the diagonal through both
    scene.add_line(Line(1, 0, -100))  # far off-screen: dropped
    document = render_svg(scene)
    assert document.count('class="line"') == 1


def test_render_custom_options():
    document = render_svg(figure_scene(P13), width=400, height=300, margin=20, decimal_digits=4)
    assert 'width="400" height="300"' in document
    assert document != render_svg(figure_scene(P13))
