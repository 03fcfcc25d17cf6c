"""Text formats: polynomials, blow-up centers and center scripts.

Polynomial grammar (whitespace is insignificant)::

    expression := ['+' | '-'] term (('+' | '-') term)*
    term       := factor ('*'? factor)*
    factor     := atom ('^' natural)*
    atom       := scalar | 'X' | 'Y' | 'Z' | '(' expression ')'
    scalar     := digits ['/' digits]

Juxtaposition (``XY``, ``(X-Y)Z``, ``X(Y+1)``) is accepted only right after a
variable or a closing parenthesis, never after a number or an exponent, so
``X^19*Z`` needs its ``*`` while ``X^19Z`` is rejected.

Centers::

    Q 1:c:0     quadratic transform at the point (1:c:0)
    Q 0:1:0     quadratic transform at the point (0:1:0)
    M <expr>    monoidal transform along the curve (Z, expr)
"""

from __future__ import annotations

import re
from typing import Union

from .errors import ParseError, PreconditionError
from .polyring import VARIABLES, Poly, format_poly
from .scalar import QQ, Field
from .transform import CurveCenter, Direction

MAX_EXPONENT = 2**32 - 1

Center = Union[Direction, CurveCenter]

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:\s*/\s*\d+)?)|(?P<var>[A-Za-z_])|(?P<op>[-+*^()]))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            rest = text[pos:]
            if rest.strip():
                bad = pos + len(rest) - len(rest.lstrip())
                raise ParseError(f"unexpected character {text[bad]!r}", position=bad)
            break
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, field: Field):
        self.text = text
        self.field = field
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message, tok=None):
        tok = tok or self.peek()
        return ParseError(message, position=tok[2])

    def parse(self) -> Poly:
        P = self.expression()
        tok = self.peek()
        if tok[0] != "end":
            raise self.error(f"unexpected {tok[1]!r}")
        return P

    def expression(self) -> Poly:
        sign = 1
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.take()
            sign = -1 if tok[1] == "-" else 1
        P = self.term() * sign
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] in "+-":
                self.take()
                rhs = self.term()
                P = P + rhs if tok[1] == "+" else P - rhs
            else:
                return P

    def term(self) -> Poly:
        P, juxtaposable = self.factor()
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] == "*":
                self.take()
                rhs, juxtaposable = self.factor()
                P = P * rhs
            elif tok[0] == "var" or (tok[0] == "op" and tok[1] == "("):
                if not juxtaposable:
                    raise self.error("explicit '*' required here")
                rhs, juxtaposable = self.factor()
                P = P * rhs
            elif tok[0] == "num":
                raise self.error("explicit '*' required before a number")
            else:
                return P

    def factor(self) -> tuple[Poly, bool]:
        P, juxtaposable = self.atom()
        while self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            tok = self.take()
            if tok[0] != "num" or "/" in tok[1]:
                raise self.error("exponent must be a natural number", tok)
            e = int(tok[1])
            if e > MAX_EXPONENT:
                raise self.error(f"exponent {e} exceeds {MAX_EXPONENT}", tok)
            P = P ** e
            juxtaposable = False
        return P, juxtaposable

    def atom(self) -> tuple[Poly, bool]:
        tok = self.take()
        kind, value, _ = tok
        if kind == "num":
            try:
                c = self.field.parse(value.replace(" ", ""))
            except (ParseError, ZeroDivisionError) as exc:
                raise self.error(f"malformed scalar {value!r}: {exc}", tok) from None
            return Poly.constant(c, self.field), False
        if kind == "var":
            if value in VARIABLES:
                return Poly.var(value, self.field), True
            raise self.error(f"unknown symbol {value!r}", tok)
        if kind == "op" and value == "(":
            P = self.expression()
            close = self.take()
            if close[0] != "op" or close[1] != ")":
                raise self.error("expected ')'", close)
            return P, True
        if kind == "end":
            raise self.error("unexpected end of input", tok)
        raise self.error(f"unexpected {value!r}", tok)


def parse_poly(text: str, field: Field = QQ) -> Poly:
    return _Parser(text, field).parse()


def print_canonical(P: Poly) -> str:
    return format_poly(P)


_NUM = r"[-+]?\d+(?:/\d+)?"
_QUAD = re.compile(rf"^\s*Q\s+({_NUM})\s*:\s*({_NUM})\s*:\s*({_NUM})\s*$")
_MONO = re.compile(r"^\s*M\s+(.+?)\s*$")


def parse_direction(text: str, field: Field = QQ) -> Direction:
    """Parse ``a:b:0`` into a normalized :class:`Direction`."""
    return _direction_from_parts(text, text.split(":"), field)


def _direction_from_parts(text, parts, field: Field) -> Direction:
    if len(parts) != 3:
        raise ParseError(f"direction {text!r} must have three coordinates a:b:0")
    try:
        a, b, z = (field.parse(p) for p in parts)
    except ZeroDivisionError:
        raise ParseError(f"malformed coordinate in {text!r}") from None
    if z:
        raise PreconditionError(f"direction {text!r} leaves the plane Z = 0")
    if a:
        return Direction.x_chart(b / a)
    if b:
        return Direction.y_chart()
    raise ParseError(f"{text!r} is not a projective point")


def parse_center(text: str, field: Field = QQ) -> Center:
    m = _QUAD.match(text)
    if m:
        return _direction_from_parts(text, list(m.groups()), field)
    m = _MONO.match(text)
    if m:
        try:
            G = parse_poly(m.group(1), field)
        except ParseError as exc:
            raise ParseError(f"bad curve generator: {exc}") from None
        return CurveCenter(G)
    raise ParseError(f"malformed center {text.strip()!r}; expected 'Q a:b:0' or 'M <expr>'")


def format_center(center: Center) -> str:
    if isinstance(center, Direction):
        return f"Q {center}"
    return f"M {center.G}"


def parse_script(text: str, field: Field = QQ) -> list[Center]:
    """One center per line; blank lines and ``#`` comments are ignored."""
    centers = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            centers.append(parse_center(line, field))
        except ParseError as exc:
            raise ParseError(str(exc), line=lineno) from None
        except PreconditionError as exc:
            raise PreconditionError(f"line {lineno}: {exc}") from None
    return centers
