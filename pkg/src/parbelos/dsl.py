"""Declarative construction scripts over the exact kernel.

The language is line-oriented and single-assignment:

    # comment (to end of line)
    let NAME = constructor(arg, arg, ...)
    assert predicate(arg, arg, ...)

Arguments are rational literals (``3``, ``-1/2``), previously bound names,
dotted accesses into a bound parbelos figure (``P.T1``, ``P.outer``), or the
half-plane keywords ``left`` / ``right``.  There is no arithmetic and no
re-binding: a script is a dependency chain of kernel calls whose assertions
are the product.

Constructors:
    point(x, y)                  line(P, Q)
    circle3(A, B, C)             circle2(P, Q, t)
    parabola_latus(E1, E2, side) tangent_at(G, P)
    pedal(P, L)                  perp(L, P)
    intersect(L1, L2)            second_intersect(L, K, P)
    parbelos(C1, C2, C3, side)

Predicates:
    collinear(A, B, C)           concyclic(K, P)
    on_parabola(G, P)            tangent(G, L)
    equidistant(P, A, B)         perpendicular(L1, L2)
    eq(x, y)

All verdicts are exact; evaluation is deterministic and stops at the first
construction error, reporting the offending statement's position.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from . import euclid, parabola as parabola_mod
from .errors import GeometryError
from .euclid import Circle, Line, Point, dist_sq, dist_sq_point_line, is_perpendicular
from .figure import ParbelosFigure, build_parbelos
from .jsonio import value_json
from .parabola import Parabola
from .rational import format_rational, parse_rational


class DslError(GeometryError):
    """Base for script errors; carries a 1-based source position."""

    def __init__(self, message: str, line: int, col: int):
        self.line = line
        self.col = col
        super().__init__(f"line {line}, col {col}: {message}")


class GeoSyntaxError(DslError):
    pass


class UnknownConstructor(DslError):
    pass


class UnknownPredicate(DslError):
    pass


class DuplicateName(DslError):
    pass


class UnboundName(DslError):
    pass


class EvalError(DslError):
    """A construction failed at runtime; wraps the kernel error."""


# --- AST ---


@dataclass(frozen=True)
class RationalArg:
    value: Fraction
    line: int
    col: int

    def text(self) -> str:
        return format_rational(self.value)


@dataclass(frozen=True)
class SideArg:
    value: str
    line: int
    col: int

    def text(self) -> str:
        return self.value


@dataclass(frozen=True)
class NameArg:
    name: str
    attr: str | None
    line: int
    col: int

    def text(self) -> str:
        return self.name if self.attr is None else f"{self.name}.{self.attr}"


Arg = Union[RationalArg, SideArg, NameArg]


@dataclass(frozen=True)
class Call:
    func: str
    args: tuple[Arg, ...]
    line: int
    col: int

    def text(self) -> str:
        return f"{self.func}({', '.join(a.text() for a in self.args)})"


@dataclass(frozen=True)
class Let:
    name: str
    call: Call
    line: int
    col: int

    def text(self) -> str:
        return f"let {self.name} = {self.call.text()}"


@dataclass(frozen=True)
class Assertion:
    call: Call
    line: int
    col: int

    def text(self) -> str:
        return f"assert {self.call.text()}"


@dataclass(frozen=True)
class Program:
    statements: tuple[Union[Let, Assertion], ...]


CONSTRUCTOR_ARITY = {
    "point": 2,
    "line": 2,
    "circle3": 3,
    "circle2": 3,
    "parabola_latus": 3,
    "tangent_at": 2,
    "pedal": 2,
    "perp": 2,
    "intersect": 2,
    "second_intersect": 3,
    "parbelos": 4,
}

PREDICATE_ARITY = {
    "collinear": 3,
    "concyclic": 2,
    "on_parabola": 2,
    "tangent": 2,
    "equidistant": 3,
    "perpendicular": 2,
    "eq": 2,
}

_KEYWORDS = {"let", "assert", "left", "right"}

_TOKEN_RE = re.compile(
    r"(?P<rational>[+-]?\d+(?:/\d+)?)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<punct>[(),=.])|(?P<bad>\S)"
)


def _tokenize(line_text: str, line_no: int) -> list[tuple[str, str, int]]:
    """(kind, text, col) triples for one source line, comment stripped."""
    body = line_text.split("#", 1)[0]
    tokens = []
    for m in _TOKEN_RE.finditer(body):
        col = m.start() + 1
        if m.lastgroup == "bad":
            raise GeoSyntaxError(f"unexpected character {m.group()!r}", line_no, col)
        tokens.append((m.lastgroup, m.group(), col))
    return tokens


class _LineParser:
    def __init__(self, tokens: list[tuple[str, str, int]], line_no: int, line_len: int):
        self.tokens = tokens
        self.pos = 0
        self.line_no = line_no
        self.line_len = line_len

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(
        self,
        kind: str | None = None,
        text: str | None = None,
        describe: str | None = None,
    ):
        expected = describe or (repr(text) if text is not None else kind)
        tok = self.peek()
        if tok is None:
            raise GeoSyntaxError(
                f"unexpected end of line (expected {expected})", self.line_no, self.line_len + 1
            )
        tkind, ttext, col = tok
        if (kind is not None and tkind != kind) or (text is not None and ttext != text):
            raise GeoSyntaxError(f"expected {expected}, got {ttext!r}", self.line_no, col)
        self.pos += 1
        return tok

    def end(self):
        tok = self.peek()
        if tok is not None:
            raise GeoSyntaxError(f"trailing input {tok[1]!r}", self.line_no, tok[2])


def _parse_arg(p: _LineParser, bound: set[str]) -> Arg:
    tok = p.next()
    kind, text, col = tok
    if kind == "rational":
        return RationalArg(parse_rational(text), p.line_no, col)
    if kind == "ident":
        if text in ("left", "right"):
            return SideArg(text, p.line_no, col)
        if text in _KEYWORDS:
            raise GeoSyntaxError(f"{text!r} is a reserved word", p.line_no, col)
        attr = None
        nxt = p.peek()
        if nxt is not None and nxt[1] == ".":
            p.next()
            attr = p.next("ident", describe="an attribute name")[1]
        if text not in bound:
            raise UnboundName(f"name {text!r} is not bound", p.line_no, col)
        return NameArg(text, attr, p.line_no, col)
    raise GeoSyntaxError(f"expected an argument, got {text!r}", p.line_no, col)


def _parse_call(p: _LineParser, bound: set[str], table: dict[str, int], unknown_error) -> Call:
    kind, func, col = p.next("ident", describe="a constructor or predicate name")
    if func not in table:
        raise unknown_error(f"unknown name {func!r}", p.line_no, col)
    p.next("punct", "(")
    args: list[Arg] = []
    nxt = p.peek()
    if nxt is not None and nxt[1] == ")":
        p.next()
    else:
        while True:
            args.append(_parse_arg(p, bound))
            kind, text, tcol = p.next("punct", describe="',' or ')'")
            if text == ")":
                break
            if text != ",":
                raise GeoSyntaxError(f"expected ',' or ')', got {text!r}", p.line_no, tcol)
    if len(args) != table[func]:
        raise GeoSyntaxError(
            f"{func} expects {table[func]} arguments, got {len(args)}", p.line_no, col
        )
    return Call(func, tuple(args), p.line_no, col)


def parse_script(text: str) -> Program:
    """Parse a script; positions are 1-based (line, column).

    Binding discipline is enforced here: names bind once, and every
    referenced name must be bound on an earlier line.
    """
    statements: list[Union[Let, Assertion]] = []
    bound: set[str] = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        tokens = _tokenize(raw, line_no)
        if not tokens:
            continue
        p = _LineParser(tokens, line_no, len(raw))
        kind, head, col = p.next()
        if head == "let":
            nkind, name, ncol = p.next("ident", describe="a name")
            if name in _KEYWORDS:
                raise GeoSyntaxError(f"{name!r} is a reserved word", line_no, ncol)
            if name in bound:
                raise DuplicateName(f"name {name!r} is already bound", line_no, ncol)
            p.next("punct", "=")
            call = _parse_call(p, bound, CONSTRUCTOR_ARITY, UnknownConstructor)
            p.end()
            statements.append(Let(name, call, line_no, col))
            bound.add(name)
        elif head == "assert":
            call = _parse_call(p, bound, PREDICATE_ARITY, UnknownPredicate)
            p.end()
            statements.append(Assertion(call, line_no, col))
        else:
            raise GeoSyntaxError(f"expected 'let' or 'assert', got {head!r}", line_no, col)
    return Program(tuple(statements))


def pretty_print(program: Program) -> str:
    """Canonical text form; parse -> pretty_print -> parse is a fixed point."""
    return "".join(stmt.text() + "\n" for stmt in program.statements)


# --- evaluation ---


@dataclass
class AssertionResult:
    line: int
    pred: str
    passed: bool
    witness: dict


@dataclass
class EvalReport:
    bindings: dict[str, object]
    assertions: list[AssertionResult]

    @property
    def overall(self) -> bool:
        return all(result.passed for result in self.assertions)

    def first_failure(self) -> AssertionResult | None:
        return next((r for r in self.assertions if not r.passed), None)


_FIGURE_ALIASES = {
    "F": "focus_F",
    "O": "center_O",
    "K": "circumcircle_K",
    "contact": "contact_T",
}

_TYPE_NAMES = {
    Point: "point",
    Line: "line",
    Circle: "circle",
    Parabola: "parabola",
    Fraction: "rational",
}


def _resolve(arg: Arg, env: dict[str, object]):
    if isinstance(arg, RationalArg):
        return arg.value
    if isinstance(arg, SideArg):
        return arg.value
    value = env[arg.name]
    if arg.attr is None:
        return value
    if not isinstance(value, ParbelosFigure):
        raise EvalError(
            f"{arg.name!r} is not a figure, cannot access {arg.attr!r}", arg.line, arg.col
        )
    field = _FIGURE_ALIASES.get(arg.attr, arg.attr)
    if field not in ParbelosFigure.__dataclass_fields__:
        raise EvalError(f"figure has no field {arg.attr!r}", arg.line, arg.col)
    return getattr(value, field)


def _expect(value, cls, what: str, call: Call):
    if cls is Fraction and isinstance(value, Fraction):
        return value
    if cls is not Fraction and isinstance(value, cls):
        return value
    got = _TYPE_NAMES.get(type(value), type(value).__name__)
    raise EvalError(f"{call.func} expects a {what}, got {got}", call.line, call.col)


def _eval_constructor(call: Call, values: list) -> object:
    f = call.func
    if f == "point":
        x = _expect(values[0], Fraction, "rational", call)
        y = _expect(values[1], Fraction, "rational", call)
        return Point(x, y)
    if f == "line":
        return euclid.line_through(
            _expect(values[0], Point, "point", call), _expect(values[1], Point, "point", call)
        )
    if f == "circle3":
        return euclid.circumcircle(*(_expect(v, Point, "point", call) for v in values))
    if f == "circle2":
        return euclid.circle_through_points(
            _expect(values[0], Point, "point", call),
            _expect(values[1], Point, "point", call),
            _expect(values[2], Fraction, "rational", call),
        )
    if f == "parabola_latus":
        side = values[2]
        if side not in ("left", "right"):
            raise EvalError("side must be left or right", call.line, call.col)
        return parabola_mod.parabola_from_latus_rectum(
            _expect(values[0], Point, "point", call),
            _expect(values[1], Point, "point", call),
            side,
        )
    if f == "tangent_at":
        return parabola_mod.tangent_at(
            _expect(values[0], Parabola, "parabola", call),
            _expect(values[1], Point, "point", call),
        )
    if f == "pedal":
        return euclid.pedal_point(
            _expect(values[0], Point, "point", call), _expect(values[1], Line, "line", call)
        )
    if f == "perp":
        return euclid.perpendicular_through(
            _expect(values[0], Line, "line", call), _expect(values[1], Point, "point", call)
        )
    if f == "intersect":
        return euclid.line_intersection(
            _expect(values[0], Line, "line", call), _expect(values[1], Line, "line", call)
        )
    if f == "second_intersect":
        return euclid.second_intersection(
            _expect(values[0], Line, "line", call),
            _expect(values[1], Circle, "circle", call),
            _expect(values[2], Point, "point", call),
        )
    if f == "parbelos":
        side = values[3]
        if side not in ("left", "right"):
            raise EvalError("side must be left or right", call.line, call.col)
        return build_parbelos(
            _expect(values[0], Point, "point", call),
            _expect(values[1], Point, "point", call),
            _expect(values[2], Point, "point", call),
            side,
        )
    raise AssertionError(f"unhandled constructor {f}")


def _eval_predicate(call: Call, values: list) -> tuple[bool, dict]:
    f = call.func
    if f == "collinear":
        a, b, c = (_expect(v, Point, "point", call) for v in values)
        det = euclid.cross(b - a, c - a)
        return det == 0, {"determinant": value_json(det)}
    if f == "concyclic":
        circle = _expect(values[0], Circle, "circle", call)
        p = _expect(values[1], Point, "point", call)
        d = dist_sq(circle.center, p)
        return d == circle.radius_sq, {
            "dist_sq": value_json(d),
            "radius_sq": value_json(circle.radius_sq),
        }
    if f == "on_parabola":
        g = _expect(values[0], Parabola, "parabola", call)
        p = _expect(values[1], Point, "point", call)
        to_focus = dist_sq(p, g.focus)
        to_directrix = dist_sq_point_line(p, g.directrix)
        return to_focus == to_directrix, {
            "dist_sq_focus": value_json(to_focus),
            "dist_sq_directrix": value_json(to_directrix),
        }
    if f == "tangent":
        g = _expect(values[0], Parabola, "parabola", call)
        line = _expect(values[1], Line, "line", call)
        pedal = euclid.pedal_point(g.focus, line)
        supporting = parabola_mod.canonical_elements(g).supporting_line
        return supporting.contains(pedal), {
            "focus_pedal": value_json(pedal),
            "supporting_line": value_json(supporting),
        }
    if f == "equidistant":
        p, a, b = (_expect(v, Point, "point", call) for v in values)
        da, db = dist_sq(p, a), dist_sq(p, b)
        return da == db, {"dist_sq_first": value_json(da), "dist_sq_second": value_json(db)}
    if f == "perpendicular":
        l1 = _expect(values[0], Line, "line", call)
        l2 = _expect(values[1], Line, "line", call)
        return is_perpendicular(l1, l2), {"normal_dot": l1.a * l2.a + l1.b * l2.b}
    if f == "eq":
        left, right = values
        witness = {}
        try:
            witness = {"left": value_json(left), "right": value_json(right)}
        except TypeError:
            pass
        return left == right, witness
    raise AssertionError(f"unhandled predicate {f}")


def evaluate(program: Program) -> EvalReport:
    """Execute statements in order; stop at the first construction error.

    Assertion failures are verdicts in the report, not errors; kernel errors
    (degenerate constructions and the like) raise :class:`EvalError` carrying
    the statement position.
    """
    env: dict[str, object] = {}
    assertions: list[AssertionResult] = []
    for stmt in program.statements:
        try:
            values = [_resolve(arg, env) for arg in stmt.call.args]
            if isinstance(stmt, Let):
                env[stmt.name] = _eval_constructor(stmt.call, values)
            else:
                passed, witness = _eval_predicate(stmt.call, values)
                assertions.append(AssertionResult(stmt.line, stmt.call.text(), passed, witness))
        except DslError:
            raise
        except GeometryError as exc:
            raise EvalError(str(exc), stmt.line, stmt.col) from exc
    return EvalReport(bindings=env, assertions=assertions)


def report_json(report: EvalReport) -> dict:
    return {
        "bindings": {name: value_json(value) for name, value in report.bindings.items()},
        "assertions": [
            {"line": r.line, "pred": r.pred, "pass": r.passed, "witness": r.witness}
            for r in report.assertions
        ],
        "overall": report.overall,
    }
