"""Seeded randomized invariant suites over the exact kernel.

Each suite draws instances from a deterministic per-instance seed (so runs
are reproducible and identical whether executed serially or in parallel) and
checks an exact property: no tolerances, a single coordinate off by any
amount is a failure.  Generators keep rational heights small enough that the
cusp coordinates stay below 10^4 before reduction.
"""

from __future__ import annotations

import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParallelLines
from .euclid import (
    Circle,
    Line,
    Point,
    circle_through_points,
    dist_sq,
    dot,
    line_intersection,
    line_through,
    perpendicular_bisector,
    perpendicular_through,
    point,
)
from .figure import (
    build_parbelos,
    corollary_checks,
    similarity_transform,
    sondow_checks,
)
from .parabola import (
    LEFT,
    RIGHT,
    Parabola,
    Side,
    canonical_elements,
    is_tangent,
    parabola_from_latus_rectum,
    point_at_parameter,
    tangent_at,
)
from .theorems import converse_lambert, lambert_circumcircle_check


@dataclass
class SuiteResult:
    name: str
    cases: int
    failures: list[str]

    @property
    def passed(self) -> bool:
        return not self.failures


def _case_rng(seed: int, index: int) -> random.Random:
    # Distinct stream per case; identical under serial and parallel execution.
    return random.Random(seed * 1_000_003 + index)


def rand_rational(rng: random.Random, max_num: int, max_den: int) -> Fraction:
    return Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))


def rand_positive_rational(rng: random.Random, max_num: int, max_den: int) -> Fraction:
    return Fraction(rng.randint(1, max_num), rng.randint(1, max_den))


def rand_side(rng: random.Random) -> Side:
    return rng.choice((LEFT, RIGHT))


def height_scale(max_height: int) -> int:
    """Generator bound giving cusp coordinates of height <= max_height.

    With bound s a cusp coordinate is (p*q + n*d*q0) / (q0*q) for |p|, q0 <= s,
    n <= 4s, q <= 2s, |d| <= 5: numerator <= 2s^2 + 20s^2, denominator <= 2s^2,
    so s = isqrt(max_height)//5 keeps both under the cap.
    """
    return max(1, math.isqrt(max_height) // 5)


def rand_cusps(rng: random.Random, scale: int = 20) -> tuple[Point, Point, Point, Side]:
    """Three collinear cusps on a random rational line, C2 strictly interior.

    The two steps along the line share one denominator so coordinate heights
    stay within the budget analyzed in :func:`height_scale`.
    """
    base = Point(rand_rational(rng, scale, scale), rand_rational(rng, scale, scale))
    while True:
        dx, dy = rng.randint(-5, 5), rng.randint(-5, 5)
        if (dx, dy) != (0, 0):
            break
    den = rng.randint(1, 2 * scale)
    n1 = rng.randint(1, 2 * scale)
    n2 = n1 + rng.randint(1, 2 * scale)
    first, second = Fraction(n1, den), Fraction(n2, den)
    c2 = Point(base.x + first * dx, base.y + first * dy)
    c3 = Point(base.x + second * dx, base.y + second * dy)
    return base, c2, c3, rand_side(rng)


def rand_parabola(rng: random.Random) -> Parabola:
    """Random parabola via a random latus rectum and opening side."""
    e1 = Point(rand_rational(rng, 30, 12), rand_rational(rng, 30, 12))
    while True:
        e2 = Point(rand_rational(rng, 30, 12), rand_rational(rng, 30, 12))
        if e2 != e1:
            break
    return parabola_from_latus_rectum(e1, e2, rand_side(rng))


def rand_distinct_parameters(rng: random.Random, count: int) -> list[Fraction]:
    values: set[Fraction] = set()
    while len(values) < count:
        values.add(rand_rational(rng, 24, 8))
    return sorted(values)


def _run_cases(
    name: str, cases: int, seed: int, one_case, scale: int, parallel: bool = False
) -> SuiteResult:
    args = [(seed, i, scale) for i in range(cases)]
    if parallel and cases > 1:
        failures: list[str] = []
        with ProcessPoolExecutor() as pool:
            for result in pool.map(one_case, args, chunksize=64):
                failures.extend(result)
        return SuiteResult(name, cases, failures)
    failures = []
    for arg in args:
        failures.extend(one_case(arg))
    return SuiteResult(name, cases, failures)


# --- individual cases (module level so they pickle for the process pool) ---


def _sondow_case(args: tuple[int, int, int]) -> list[str]:
    seed, index, scale = args
    rng = _case_rng(seed, index)
    c1, c2, c3, side = rand_cusps(rng, scale)
    fig = build_parbelos(c1, c2, c3, side)
    failures = []
    for label, detail, ok in sondow_checks(fig) + corollary_checks(fig):
        if not ok:
            failures.append(f"case {index} ({c1} {c2} {c3} {side}): {detail}")
    return failures


def _tangency_case(args: tuple[int, int, int]) -> list[str]:
    seed, index, _scale = args
    rng = _case_rng(seed, index)
    parabola = rand_parabola(rng)
    t1, t2 = rand_distinct_parameters(rng, 2)
    p1 = point_at_parameter(parabola, t1)
    p2 = point_at_parameter(parabola, t2)
    failures = []
    if not is_tangent(parabola, tangent_at(parabola, p1)):
        failures.append(f"case {index}: tangent at parameter {t1} not certified")
    secant = line_through(p1, p2)
    if is_tangent(parabola, secant):
        failures.append(f"case {index}: secant through {t1}, {t2} certified tangent")
    return failures


def _lambert_case(args: tuple[int, int, int]) -> list[str]:
    seed, index, _scale = args
    rng = _case_rng(seed, index)
    parabola = rand_parabola(rng)
    params = rand_distinct_parameters(rng, 3)
    tangents = [tangent_at(parabola, point_at_parameter(parabola, t)) for t in params]
    report = lambert_circumcircle_check(parabola, *tangents)
    if not report.verdict:
        return [f"case {index}: focus off tangent-triangle circumcircle ({params})"]
    return []


def _converse_case(args: tuple[int, int, int]) -> list[str]:
    seed, index, _scale = args
    rng = _case_rng(seed, index)
    parabola = rand_parabola(rng)
    t1, t2 = rand_distinct_parameters(rng, 2)
    l1 = tangent_at(parabola, point_at_parameter(parabola, t1))
    l2 = tangent_at(parabola, point_at_parameter(parabola, t2))
    focus = parabola.focus
    crossing = line_intersection(l1, l2)
    failures = []
    for j in range(100):
        circle = circle_through_points(focus, crossing, rand_rational(rng, 40, 12))
        _, report = converse_lambert(parabola, l1, l2, circle)
        if not report.verdict:
            failures.append(f"case {index}.{j}: converse output not tangent")
    return failures


def degenerate_converse_circle(parabola: Parabola, l1: Line, crossing: Point) -> Circle:
    """Circle through focus and crossing, tangent to l1 at the crossing.

    Its center sits on both the perpendicular to l1 at the crossing and the
    focus-crossing perpendicular bisector, which forces the second
    intersection with l1 to collapse onto the crossing point.
    """
    center = line_intersection(
        perpendicular_through(l1, crossing),
        perpendicular_bisector(parabola.focus, crossing),
    )
    return Circle(center, dist_sq(center, crossing))


def _converse_degenerate_case(args: tuple[int, int, int]) -> list[str]:
    seed, index, _scale = args
    rng = _case_rng(seed, index)
    while True:
        parabola = rand_parabola(rng)
        t1, t2 = rand_distinct_parameters(rng, 2)
        l1 = tangent_at(parabola, point_at_parameter(parabola, t1))
        l2 = tangent_at(parabola, point_at_parameter(parabola, t2))
        crossing = line_intersection(l1, l2)
        try:
            circle = degenerate_converse_circle(parabola, l1, crossing)
        except ParallelLines:
            continue  # focus-crossing segment parallel to l1; resample
        break
    constructed, report = converse_lambert(parabola, l1, l2, circle)
    failures = []
    if not report.verdict:
        failures.append(f"case {index}: degenerate-branch output not tangent")
    if constructed != l2:
        failures.append(f"case {index}: degenerate branch should return the other tangent")
    return failures


def _replay_case(args: tuple[int, int, int]) -> list[str]:
    seed, index, scale = args
    rng = _case_rng(seed, index)
    c1, c2, c3, side = rand_cusps(rng, scale)
    fig = build_parbelos(c1, c2, c3, side)
    constructed, report = converse_lambert(
        fig.outer, fig.tangent_at_C1, fig.tangent_at_C3, fig.circumcircle_K
    )
    failures = []
    if constructed != fig.diagonal:
        failures.append(f"case {index}: replayed chord {constructed} != diagonal {fig.diagonal}")
    if not report.verdict:
        failures.append(f"case {index}: replayed chord not tangent")
    return failures


def rand_rotation(rng: random.Random) -> tuple[Fraction, Fraction]:
    """Rational rotation from a random Pythagorean pair (m^2-n^2, 2mn)."""
    m = rng.randint(2, 12)
    n = rng.randint(1, m - 1)
    p, q = Fraction(m * m - n * n), Fraction(2 * m * n)
    if rng.random() < 0.5:
        p, q = q, p
    if rng.random() < 0.5:
        q = -q
    k = rand_positive_rational(rng, 12, 12)
    return p * k, q * k


def _verdicts(fig) -> list[tuple[str, bool]]:
    return [(label, ok) for label, _, ok in sondow_checks(fig) + corollary_checks(fig)]


def _invariance_case(args: tuple[int, int, int]) -> list[str]:
    seed, index, scale = args
    rng = _case_rng(seed, index)
    inputs = rand_cusps(rng, scale)
    s = rand_positive_rational(rng, 12, 12)
    rot = rand_rotation(rng)
    shift = Point(rand_rational(rng, 30, 12), rand_rational(rng, 30, 12))
    before = build_parbelos(*inputs)
    after = build_parbelos(*similarity_transform(inputs, s, rot, shift))
    if _verdicts(before) != _verdicts(after):
        return [f"case {index}: verdicts changed under similarity (s={s}, rot={rot})"]
    return []


# --- public suites ---

DEFAULT_MAX_HEIGHT = 10_000


def run_sondow_fuzz(
    cases: int, seed: int, max_height: int = DEFAULT_MAX_HEIGHT, parallel: bool = False
) -> SuiteResult:
    scale = height_scale(max_height)
    return _run_cases("sondow+corollaries", cases, seed, _sondow_case, scale, parallel)


def run_tangency_fuzz(cases: int, seed: int, parallel: bool = False) -> SuiteResult:
    return _run_cases("tangent/secant criterion", cases, seed, _tangency_case, 0, parallel)


def run_lambert_fuzz(cases: int, seed: int, parallel: bool = False) -> SuiteResult:
    return _run_cases("lambert circumcircle", cases, seed, _lambert_case, 0, parallel)


def run_converse_lambert_fuzz(pairs: int, seed: int, parallel: bool = False) -> SuiteResult:
    result = _run_cases("converse lambert", pairs, seed, _converse_case, 0, parallel)
    degenerate = _run_cases(
        "converse lambert (tangency-degenerate)",
        max(1, pairs // 20),
        seed + 1,
        _converse_degenerate_case,
        0,
        parallel,
    )
    return SuiteResult(
        result.name, result.cases + degenerate.cases, result.failures + degenerate.failures
    )


def run_proof_replay_fuzz(
    cases: int, seed: int, max_height: int = DEFAULT_MAX_HEIGHT, parallel: bool = False
) -> SuiteResult:
    scale = height_scale(max_height)
    return _run_cases("diagonal proof replay", cases, seed, _replay_case, scale, parallel)


def run_invariance_fuzz(
    cases: int, seed: int, max_height: int = DEFAULT_MAX_HEIGHT, parallel: bool = False
) -> SuiteResult:
    scale = height_scale(max_height)
    return _run_cases("similarity invariance", cases, seed, _invariance_case, scale, parallel)


def latus_angle_failures(parabola: Parabola, label: str) -> list[str]:
    """Check 2*(d.u)^2 = |d|^2 |u|^2 at both latus endpoints.

    This is the rational restatement of the tangent making an angle of pi/4
    with the latus rectum (cos^2 = 1/2, cleared of square roots).
    """
    elements = canonical_elements(parabola)
    e1, e2 = elements.latus_endpoints.p, elements.latus_endpoints.q
    u = e2 - e1
    failures = []
    for endpoint in (e1, e2):
        dx, dy = tangent_at(parabola, endpoint).direction()
        d = point(dx, dy)
        if 2 * dot(d, u) ** 2 != dot(d, d) * dot(u, u):
            failures.append(f"{label}: tangent at {endpoint} is not at pi/4 to the latus rectum")
    return failures


def _angle_case(args: tuple[int, int, int]) -> list[str]:
    seed, index, scale = args
    rng = _case_rng(seed, index)
    c1, c2, c3, side = rand_cusps(rng, scale)
    fig = build_parbelos(c1, c2, c3, side)
    failures = []
    for label, parabola in (("inner1", fig.inner1), ("inner2", fig.inner2), ("outer", fig.outer)):
        failures.extend(latus_angle_failures(parabola, f"case {index} {label}"))
    return failures


def run_latus_angle_fuzz(
    cases: int, seed: int, max_height: int = DEFAULT_MAX_HEIGHT, parallel: bool = False
) -> SuiteResult:
    scale = height_scale(max_height)
    return _run_cases("pi/4 latus angle", cases, seed, _angle_case, scale, parallel)


def _ft_ht_case(args: tuple[int, int, int]) -> list[str]:
    seed, index, scale = args
    rng = _case_rng(seed, index)
    c1, c2, c3, side = rand_cusps(rng, scale)
    fig = build_parbelos(c1, c2, c3, side)
    if dist_sq(fig.focus_F, fig.contact_T) != dist_sq(fig.H, fig.contact_T):
        return [f"case {index}: |F-contact|^2 != |H-contact|^2"]
    return []


def run_ft_ht_fuzz(
    cases: int, seed: int, max_height: int = DEFAULT_MAX_HEIGHT, parallel: bool = False
) -> SuiteResult:
    scale = height_scale(max_height)
    return _run_cases("FT = HT", cases, seed, _ft_ht_case, scale, parallel)


def run_all(
    cases: int = 200,
    seed: int = 0,
    max_height: int = DEFAULT_MAX_HEIGHT,
    parallel: bool = False,
) -> list[SuiteResult]:
    """The full randomized suite, scaled from a single case count."""
    return [
        run_sondow_fuzz(cases, seed, max_height, parallel),
        run_tangency_fuzz(cases, seed + 101, parallel),
        run_lambert_fuzz(cases, seed + 202, parallel),
        run_converse_lambert_fuzz(max(1, cases // 10), seed + 303, parallel),
        run_proof_replay_fuzz(cases, seed + 404, max_height, parallel),
        run_invariance_fuzz(max(1, cases // 2), seed + 505, max_height, parallel),
        run_latus_angle_fuzz(cases, seed + 606, max_height, parallel),
        run_ft_ht_fuzz(cases, seed + 707, max_height, parallel),
    ]
