import random
from fractions import Fraction

import pytest

import oracles
from parbelos.errors import (
    CoincidentPoints,
    DegenerateCircle,
    DegenerateLine,
    DegenerateTriangle,
    ParallelLines,
    PointNotIncident,
)
from parbelos.euclid import (
    Circle,
    Line,
    Point,
    Segment,
    circle_point,
    circle_through_points,
    circumcircle,
    cross,
    dist_sq,
    dot,
    is_collinear,
    is_parallel,
    is_perpendicular,
    line_intersection,
    line_through,
    midpoint,
    on_circle,
    parallel_through,
    pedal_point,
    perpendicular_bisector,
    perpendicular_through,
    point,
    second_intersection,
)

F = Fraction


def rand_point(rng, bound=30):
    return Point(F(rng.randint(-bound, bound), rng.randint(1, 12)),
                 F(rng.randint(-bound, bound), rng.randint(1, 12)))


# --- lines ---


def test_line_canonical_form():
    assert Line(2, 4, 6) == Line(1, 2, 3)
    assert Line(-1, 2, -3) == Line(1, -2, 3)
    assert Line(0, -3, 6) == Line(0, 1, -2)
    assert Line(F(1, 2), F(1, 3), F(1, 6)) == Line(3, 2, 1)
    with pytest.raises(DegenerateLine):
        Line(0, 0, 5)


def test_line_through_examples():
    assert line_through(point(0, 0), point(1, 1)) == Line(1, -1, 0)
    assert line_through(point(0, 0), point(4, 0)) == Line(0, 1, 0)
    # diagonal of the tangent rectangle; oracle: two-point line formula
    a, b, c = oracles.two_point_line((F(1, 2), F(-1, 2)), (F(5, 2), F(-3, 2)))
    assert Line(a, b, c) == Line(2, 4, 1)
    assert line_through(Point(F(1, 2), F(-1, 2)), Point(F(5, 2), F(-3, 2))) == Line(2, 4, 1)
    with pytest.raises(CoincidentPoints):
        line_through(point(1, 2), point(1, 2))


def test_line_through_contains_both_endpoints():
    rng = random.Random(11)
    for _ in range(200):
        p, q = rand_point(rng), rand_point(rng)
        if p == q:
            continue
        line = line_through(p, q)
        assert line.contains(p) and line.contains(q)


def test_perpendicular_through_examples():
    assert perpendicular_through(Line(0, 1, 0), point(1, 0)) == Line(1, 0, -1)
    assert perpendicular_through(Line(1, -1, 0), point(0, 0)) == Line(1, 1, 0)
    # dropping T2 onto the cusp line
    assert perpendicular_through(Line(0, 1, 0), point(2, -2)) == Line(1, 0, -2)


def test_parallel_and_perpendicular_predicates():
    assert is_parallel(Line(1, 2, 0), Line(2, 4, 9))
    assert not is_parallel(Line(1, 2, 0), Line(2, 1, 0))
    assert is_perpendicular(Line(1, 1, 0), Line(1, -1, 5))
    line = Line(3, -5, 7)
    perp = perpendicular_through(line, point(2, 2))
    assert is_perpendicular(line, perp) and perp.contains(point(2, 2))


def test_line_intersection():
    assert line_intersection(Line(1, 0, -1), Line(0, 1, 2)) == point(1, -2)
    with pytest.raises(ParallelLines):
        line_intersection(Line(1, 2, 0), Line(1, 2, 5))


# --- pedal points ---


def test_pedal_point_examples():
    # oracle: P - ((a*Px + b*Py + c)/(a^2+b^2)) * (a, b)
    assert oracles.project(2, 0, 1, 1, 0) == (F(1), F(-1))
    assert pedal_point(point(2, 0), Line(1, 1, 0)) == point(1, -1)
    assert oracles.project(2, 0, 2, 4, 1) == (F(3, 2), F(-1))
    assert pedal_point(point(2, 0), Line(2, 4, 1)) == Point(F(3, 2), F(-1))
    assert pedal_point(point(5, 7), Line(0, 1, -7)) == point(5, 7)


def test_pedal_point_properties():
    rng = random.Random(23)
    for _ in range(300):
        p = rand_point(rng)
        q, r = rand_point(rng), rand_point(rng)
        if q == r:
            continue
        line = line_through(q, r)
        foot = pedal_point(p, line)
        assert line.contains(foot)
        dx, dy = line.direction()
        assert dot(p - foot, point(dx, dy)) == 0
        assert (foot == p) == line.contains(p)


# --- collinearity ---


def test_is_collinear():
    assert is_collinear(point(1, -1), point(3, -1), Point(F(3, 2), F(-1)))
    assert not is_collinear(point(0, 0), point(1, 0), point(0, 1))
    # repeated-point convention: determinant is zero
    assert is_collinear(point(5, 5), point(5, 5), point(9, 2))


# --- circles ---


def test_circle_rejects_degenerate():
    with pytest.raises(DegenerateCircle):
        Circle(point(0, 0), F(0))
    with pytest.raises(DegenerateCircle):
        Circle(point(0, 0), F(-1))


def test_circumcircle_examples():
    # oracle: equal-distance linear solve
    center = oracles.circumcenter_solve((F(1), F(0)), (F(1, 2), F(-1, 2)), (F(2), F(-2)))
    assert center == (F(3, 2), F(-1))
    assert oracles.dist2(center, (F(1), F(0))) == F(5, 4)
    circle = circumcircle(point(1, 0), Point(F(1, 2), F(-1, 2)), point(2, -2))
    assert circle.center == Point(F(3, 2), F(-1)) and circle.radius_sq == F(5, 4)

    circle = circumcircle(point(1, 0), point(-1, 0), point(0, 1))
    assert circle.center == point(0, 0) and circle.radius_sq == 1

    with pytest.raises(DegenerateTriangle):
        circumcircle(point(0, 0), point(1, 1), point(2, 2))
    with pytest.raises(DegenerateTriangle):
        circumcircle(point(0, 0), point(0, 0), point(2, 3))


def test_circumcircle_contains_all_three():
    rng = random.Random(7)
    for _ in range(200):
        a, b, c = rand_point(rng), rand_point(rng), rand_point(rng)
        if is_collinear(a, b, c):
            continue
        circle = circumcircle(a, b, c)
        assert on_circle(circle, a) and on_circle(circle, b) and on_circle(circle, c)


def test_on_circle_examples():
    circle = Circle(Point(F(3, 2), F(-1)), F(5, 4))
    assert on_circle(circle, point(2, 0))
    assert on_circle(circle, point(1, -2))
    assert not on_circle(circle, point(0, 0))


# --- second intersection (Vieta) ---


def test_second_intersection_examples():
    circle = Circle(Point(F(3, 2), F(-1)), F(5, 4))
    assert second_intersection(Line(1, -1, -1), circle, point(1, 0)) == Point(F(1, 2), F(-1, 2))
    assert second_intersection(Line(1, 1, 0), circle, point(2, -2)) == Point(F(1, 2), F(-1, 2))
    # tangent: double root returns the point itself
    unit = Circle(point(0, 0), F(1))
    assert second_intersection(Line(1, 0, -1), unit, point(1, 0)) == point(1, 0)
    with pytest.raises(PointNotIncident):
        second_intersection(Line(1, -1, -1), circle, point(0, 0))


def test_second_intersection_properties():
    rng = random.Random(31)
    for _ in range(200):
        a, b, c = rand_point(rng), rand_point(rng), rand_point(rng)
        if is_collinear(a, b, c):
            continue
        circle = circumcircle(a, b, c)
        chord = line_through(a, b)
        other = second_intersection(chord, circle, a)
        assert chord.contains(other) and on_circle(circle, other)
        assert other == b or is_collinear(a, b, other)
        # involution: applying twice returns the start
        assert second_intersection(chord, circle, other) == a


def test_simson_wallace_forward_and_converse_random():
    """Pedals of a circumcircle point are collinear; of any other point, not."""
    rng = random.Random(41)
    done_forward = done_converse = 0
    while done_forward < 120 or done_converse < 120:
        a, b, c = rand_point(rng), rand_point(rng), rand_point(rng)
        if is_collinear(a, b, c):
            continue
        circle = circumcircle(a, b, c)
        if done_forward < 120:
            t = F(rng.randint(-20, 20), rng.randint(1, 9))
            p = circle_point(circle, a, t)
            pedals = [pedal_point(p, line_through(u, v)) for u, v in ((b, c), (c, a), (a, b))]
            assert is_collinear(*pedals)
            done_forward += 1
        if done_converse < 120:
            p = rand_point(rng)
            if on_circle(circle, p):
                continue
            pedals = [pedal_point(p, line_through(u, v)) for u, v in ((b, c), (c, a), (a, b))]
            assert not is_collinear(*pedals)
            done_converse += 1


# --- rational circle parametrizations ---


def test_circle_point_examples():
    circle = Circle(Point(F(3, 2), F(-1)), F(5, 4))
    assert circle_point(circle, point(1, 0), F(1)) == Point(F(1, 2), F(-1, 2))
    unit = Circle(point(0, 0), F(1))
    assert circle_point(unit, point(1, 0), None) == point(1, 0)
    # oracle: stereographic projection from (-1, 0)
    assert oracles.stereographic(F(1, 2)) == (F(3, 5), F(4, 5))
    assert circle_point(unit, point(-1, 0), F(1, 2)) == Point(F(3, 5), F(4, 5))
    with pytest.raises(PointNotIncident):
        circle_point(unit, point(2, 0), F(1))


def test_circle_point_hits_distinct_points():
    unit = Circle(point(0, 0), F(1))
    rng = random.Random(6)
    seen = {}
    for _ in range(100):
        t = F(rng.randint(-30, 30), rng.randint(1, 11))
        p = circle_point(unit, point(-1, 0), t)
        assert on_circle(unit, p)
        if t in seen:
            assert seen[t] == p
        for other_t, other_p in seen.items():
            if other_t != t:
                assert other_p != p
        seen[t] = p


def test_circle_through_points_examples():
    circle = circle_through_points(point(2, 0), point(2, -2), F(-1, 2))
    assert circle.center == Point(F(3, 2), F(-1)) and circle.radius_sq == F(5, 4)
    assert circle_through_points(point(1, 0), point(-1, 0), F(0)) == Circle(point(0, 0), F(1))
    with pytest.raises(CoincidentPoints):
        circle_through_points(point(1, 1), point(1, 1), F(1))


def test_circle_through_points_family():
    rng = random.Random(12)
    p, q = point(2, 0), point(-1, 3)
    bisector = perpendicular_bisector(p, q)
    seen: dict = {}
    for _ in range(60):
        t = F(rng.randint(-40, 40), rng.randint(1, 13))
        circle = circle_through_points(p, q, t)
        assert on_circle(circle, p) and on_circle(circle, q)
        assert bisector.contains(circle.center)
        # injective: a repeated parameter rebuilds the same circle, a new one never does
        if t in seen:
            assert seen[t] == circle
        else:
            assert circle not in seen.values()
            seen[t] = circle


# --- segments and helpers ---


def test_segment_and_midpoint():
    seg = Segment(point(0, 0), point(2, 2))
    assert seg.endpoints() == frozenset((point(0, 0), point(2, 2)))
    with pytest.raises(CoincidentPoints):
        Segment(point(1, 1), point(1, 1))
    assert midpoint(point(0, 0), point(1, 3)) == Point(F(1, 2), F(3, 2))
    assert dist_sq(point(0, 0), point(3, 4)) == 25
    assert cross(point(1, 0), point(0, 1)) == 1


def test_parallel_through():
    line = Line(2, 3, 7)
    shifted = parallel_through(line, point(1, 1))
    assert is_parallel(line, shifted) and shifted.contains(point(1, 1))
