"""Recursive-descent parser for ring element expressions.

Grammar (``^`` binds tighter than unary minus, which binds tighter than
``*``/``/``; juxtaposition is multiplication)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/' | <implicit>) unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' INT)?
    atom   := INT | NAME | '(' expr ')'

Names are ``Y``/``y``, ``Z``/``z``, ``X<k>`` and ``F_<k>`` (the Dickson
polynomial ``F_k(Y, Z)``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .dickson import dickson_f
from .errors import ContextError, ParseError
from .poly import Poly
from .presented import RingElement, RingKind, RingSpec, reduce

__all__ = ["parse", "parse_poly", "parse_element", "MAX_EXPONENT"]

MAX_EXPONENT = 10 ** 6

_TOKEN = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>F_\d+|X\d+|[YZyz])|(?P<op>[-+*/^()]))"
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    offset: int


def _tokenize(src: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(src):
        if src[pos:].strip() == "":
            break
        m = _TOKEN.match(src, pos)
        if not m:
            start = pos + len(src[pos:]) - len(src[pos:].lstrip())
            raise ParseError(f"unexpected character {src[start]!r}", _byte_offset(src, start))
        kind = m.lastgroup
        tokens.append(Token(kind, m.group(kind), _byte_offset(src, m.start(kind))))
        pos = m.end()
    tokens.append(Token("end", "", _byte_offset(src, len(src))))
    return tokens


def _byte_offset(src: str, index: int) -> int:
    return len(src[:index].encode("utf-8"))


class _Parser:
    def __init__(self, src: str):
        self.tokens = _tokenize(src)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def take(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expect(self, text: str):
        if self.tok.text != text:
            raise ParseError(f"expected {text!r}, found {self.tok.text or 'end of input'!r}",
                             self.tok.offset)
        return self.take()

    def parse(self):
        if self.tok.kind == "end":
            raise ParseError("empty expression", self.tok.offset)
        node = self.expr()
        if self.tok.kind != "end":
            raise ParseError(f"unexpected {self.tok.text!r}", self.tok.offset)
        return node

    def expr(self):
        node = self.term()
        while self.tok.text in ("+", "-"):
            op = self.take()
            node = ("add" if op.text == "+" else "sub", node, self.term(), op.offset)
        return node

    def term(self):
        node = self.unary()
        while True:
            t = self.tok
            if t.text in ("*", "/"):
                self.take()
                node = ("mul" if t.text == "*" else "div", node, self.unary(), t.offset)
            elif t.kind in ("int", "name") or t.text == "(":
                node = ("mul", node, self.unary(), t.offset)
            else:
                return node

    def unary(self):
        t = self.tok
        if t.text in ("+", "-"):
            self.take()
            inner = self.unary()
            return inner if t.text == "+" else ("neg", inner, t.offset)
        return self.power()

    def power(self):
        base = self.atom()
        if self.tok.text == "^":
            self.take()
            t = self.tok
            if t.kind != "int":
                raise ParseError("exponent must be a nonnegative integer literal", t.offset)
            self.take()
            e = int(t.text)
            if e > MAX_EXPONENT:
                raise ParseError(f"exponent {e} exceeds {MAX_EXPONENT}", t.offset)
            return ("pow", base, e, t.offset)
        return base

    def atom(self):
        t = self.take()
        if t.kind == "int":
            return ("num", Fraction(int(t.text)), t.offset)
        if t.kind == "name":
            return ("var", t.text, t.offset)
        if t.text == "(":
            node = self.expr()
            self.expect(")")
            return node
        raise ParseError(f"unexpected {t.text or 'end of input'!r}", t.offset)


def parse(src: str):
    """Abstract syntax tree of ``src`` as nested tuples."""
    return _Parser(src).parse()


def _constant(node) -> Fraction:
    kind = node[0]
    if kind == "num":
        return node[1]
    if kind == "neg":
        return -_constant(node[1])
    if kind in ("add", "sub", "mul", "div"):
        a, b = _constant(node[1]), _constant(node[2])
        if kind == "add":
            return a + b
        if kind == "sub":
            return a - b
        if kind == "mul":
            return a * b
        if b == 0:
            raise ParseError("division by zero", node[3])
        return a / b
    if kind == "pow":
        return _constant(node[1]) ** node[2]
    raise ParseError("divisor must be a constant", node[-1])


def _evaluate(node, var, const, divide):
    kind = node[0]
    if kind == "num":
        return const(node[1])
    if kind == "var":
        return var(node[1], node[2])
    if kind == "neg":
        return -_evaluate(node[1], var, const, divide)
    if kind == "pow":
        return _evaluate(node[1], var, const, divide) ** node[2]
    if kind == "div":
        d = _constant(node[2])
        if d == 0:
            raise ParseError("division by zero", node[3])
        return divide(_evaluate(node[1], var, const, divide), d, node[3])
    a = _evaluate(node[1], var, const, divide)
    b = _evaluate(node[2], var, const, divide)
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    return a * b


def _variable_poly(name: str, nx: int, offset: int, *, allow_z: bool = True) -> Poly:
    head = name[0]
    if head in "Yy":
        return Poly.Y(nx)
    if head in "Zz":
        if not allow_z:
            raise ParseError(f"unknown variable {name!r} in this ring", offset)
        return Poly.Z(nx)
    if head == "X":
        k = int(name[1:])
        if not 1 <= k <= nx:
            raise ParseError(f"unknown variable {name!r} in this ring", offset)
        return Poly.X(k, nx)
    k = int(name[2:])
    if k < 1:
        raise ParseError("Dickson index must be >= 1", offset)
    if k > 1 and not allow_z:
        raise ParseError(f"{name} involves Z, which this ring lacks", offset)
    f = dickson_f(k)
    return f.compose(Poly.Y(nx), Poly.Z(nx), ()) if nx else f


def parse_poly(src: str, nx: int = 0) -> Poly:
    """Parse ``src`` into a :class:`Poly` with ``nx`` X variables."""
    tree = parse(src)

    def divide(p, d, offset):
        return p.scale(1 / d)

    return _evaluate(
        tree,
        lambda name, off: _variable_poly(name, nx, off),
        lambda c: Poly.const(c, nx),
        divide,
    )


def parse_element(src: str, spec: RingSpec) -> RingElement:
    """Parse and evaluate ``src`` directly in the ring ``spec``.

    Powers are computed in the quotient ring, so large exponents stay cheap.
    """
    tree = parse(src)
    nx = spec.nx
    allow_z = spec.kind is not RingKind.GROTHENDIECK
    atoms: dict[str, RingElement] = {}

    def var(name, offset):
        if spec.kind is RingKind.STABLE and name[0] == "X":
            raise ParseError(f"unknown variable {name!r} in this ring", offset)
        key = name.upper() if name in "yz" else name
        if key not in atoms:
            poly = _variable_poly(name, nx, offset, allow_z=allow_z)
            try:
                atoms[key] = reduce(spec, poly)
            except ContextError as exc:
                raise ParseError(str(exc), offset) from None
        return atoms[key]

    def const(c):
        if c.denominator != 1:
            raise ParseError("fractional literal", 0)
        return spec.one() * int(c)

    def divide(e, d, offset):
        q = [Fraction(v) / d for v in e.vec]
        if any(v.denominator != 1 for v in q):
            raise ParseError(f"division by {d} leaves a fractional coefficient", offset)
        return spec.from_vector(int(v) for v in q)

    return _evaluate(tree, var, const, divide)
