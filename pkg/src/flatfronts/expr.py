"""Parser for Gauss-map expressions.

Grammar (whitespace ignored)::

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/') unary)*
    unary   := ('+' | '-') unary | power
    power   := atom ('^' exponent)?
    exponent:= ('+' | '-')? (number | '(' expr ')' | atom '^' exponent)
    atom    := number | name | '(' expr ')'
    number  := digits ('.' digits)?

``^`` is right-associative and ``**`` is accepted as a synonym.  Names are
``z`` (the variable), ``i`` (imaginary unit), ``wp`` / ``wpp`` (Weierstrass
function and its derivative; these select the elliptic kind, which does not
admit ``z``), and parameters.  Exponents must reduce to integers with
``|n| <= 64``.  Rational-kind parameters are replaced by their exact values at
parse time; elliptic expressions keep ``a`` free when it is unbound, since on
the square torus it stands for the numeric constant ``wp(1/2)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Union

import numpy as np

from .algebra import GaussianRational, I, RationalMap, Z

MAX_EXPONENT = 64
ELLIPTIC_TOKENS = ("wp", "wpp")


class ExprError(ValueError):
    """Parse or lowering failure; ``position`` is a 0-based column when known."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class UnboundParameterError(ExprError):
    pass


_TOKEN = re.compile(r"\s*(?:(\d+(?:\.\d+)?)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^()]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            bad = len(text) - len(text[pos:].lstrip())
            raise ExprError(f"unexpected character {text[bad]!r}", bad)
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("num", m.group(1), start))
        elif m.group(2):
            tokens.append(("name", m.group(2), start))
        else:
            op = "^" if m.group(3) == "**" else m.group(3)
            tokens.append(("op", op, start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


# AST -----------------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: GaussianRational


@dataclass(frozen=True)
class Name:
    name: str
    position: int


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object
    position: int


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.k = 0

    def peek(self):
        return self.tokens[self.k]

    def take(self):
        tok = self.tokens[self.k]
        self.k += 1
        return tok

    def expect(self, value):
        tok = self.take()
        if tok[1] != value or tok[0] == "num":
            raise ExprError(f"expected {value!r}", tok[2])
        return tok

    def parse(self):
        if self.peek()[0] == "end":
            raise ExprError("empty expression", 0)
        node = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ExprError(f"unexpected token {tok[1]!r}", tok[2])
        return node

    def expr(self):
        node = self.term()
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            _, op, pos = self.take()
            node = BinOp(op, node, self.term(), pos)
        return node

    def term(self):
        node = self.unary()
        while self.peek()[:2] in (("op", "*"), ("op", "/")):
            _, op, pos = self.take()
            node = BinOp(op, node, self.unary(), pos)
        return node

    def unary(self):
        tok = self.peek()
        if tok[:2] == ("op", "-"):
            self.take()
            return Neg(self.unary())
        if tok[:2] == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            pos = self.peek()[2]
            return Pow(base, self.exponent(pos))
        return base

    def exponent(self, pos):
        sign = 1
        while self.peek()[:2] in (("op", "-"), ("op", "+")):
            if self.take()[1] == "-":
                sign = -sign
        node = self.power()
        value = _constant_value(node, pos)
        if value.im != 0 or value.re.denominator != 1:
            raise ExprError("exponent must be an integer", pos)
        n = sign * value.re.numerator
        if abs(n) > MAX_EXPONENT:
            raise ExprError(f"exponent {n} outside the allowed range |n| <= {MAX_EXPONENT}", pos)
        return n

    def atom(self):
        kind, value, pos = self.take()
        if kind == "num":
            return Num(GaussianRational(Fraction(value)))
        if kind == "name":
            return Name(value, pos)
        if (kind, value) == ("op", "("):
            node = self.expr()
            self.expect(")")
            return node
        if kind == "end":
            raise ExprError("unexpected end of expression", pos)
        raise ExprError(f"unexpected token {value!r}", pos)


def _constant_value(node, pos) -> GaussianRational:
    try:
        value = _lower(node, {}, allow_var=False)
    except ExprError as exc:
        raise ExprError("exponent must be a constant integer", pos) from exc
    return value.num[0]


def parse_ast(text: str):
    return _Parser(text).parse()


def _names(node) -> set[str]:
    if isinstance(node, Name):
        return {node.name}
    if isinstance(node, Neg):
        return _names(node.operand)
    if isinstance(node, BinOp):
        return _names(node.left) | _names(node.right)
    if isinstance(node, Pow):
        return _names(node.base)
    return set()


def _lower(node, bindings: Mapping[str, GaussianRational], allow_var: bool = True) -> RationalMap:
    if isinstance(node, Num):
        return RationalMap.constant(node.value)
    if isinstance(node, Name):
        if node.name == "z":
            if not allow_var:
                raise ExprError("variable not allowed here", node.position)
            return RationalMap(Z)
        if node.name == "i":
            return RationalMap.constant(I)
        if node.name in ELLIPTIC_TOKENS:
            raise ExprError(f"{node.name!r} is only valid in elliptic expressions", node.position)
        if node.name not in bindings:
            raise UnboundParameterError(f"unbound parameter {node.name!r}", node.position)
        return RationalMap.constant(bindings[node.name])
    if isinstance(node, Neg):
        return -_lower(node.operand, bindings, allow_var)
    if isinstance(node, Pow):
        base = _lower(node.base, bindings, allow_var)
        try:
            return base**node.exponent
        except ZeroDivisionError as exc:
            raise ExprError("negative power of zero") from exc
    left = _lower(node.left, bindings, allow_var)
    right = _lower(node.right, bindings, allow_var)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    if node.op == "*":
        return left * right
    if right.is_zero:
        raise ExprError("division by the zero polynomial", node.position)
    return left / right


def parse_constant(text, bindings: Mapping | None = None) -> GaussianRational:
    """Exact value of a constant expression such as ``"1+i"`` or ``"-3/2"``."""
    if isinstance(text, GaussianRational):
        return text
    if isinstance(text, (int, Fraction)):
        return GaussianRational(text)
    if isinstance(text, float):
        raise TypeError("floats are not exact; pass a string or Fraction")
    value = _lower(parse_ast(str(text)), _coerce_bindings(bindings or {}), allow_var=False)
    if not value.is_constant:
        raise ExprError("constant expression expected")
    return value.num[0] if value.num else GaussianRational(0)


def _coerce_bindings(bindings: Mapping) -> dict[str, GaussianRational]:
    out = {}
    for name, value in bindings.items():
        out[name] = value if isinstance(value, GaussianRational) else parse_constant(value)
    return out


# Elliptic-symbolic expressions ---------------------------------------------


class _Dual:
    """Value/derivative pair for forward-mode differentiation in z."""

    __slots__ = ("v", "d")

    def __init__(self, v, d):
        self.v, self.d = v, d

    def __add__(self, o):
        return _Dual(self.v + o.v, self.d + o.d)

    def __sub__(self, o):
        return _Dual(self.v - o.v, self.d - o.d)

    def __mul__(self, o):
        return _Dual(self.v * o.v, self.d * o.v + self.v * o.d)

    def __truediv__(self, o):
        return _Dual(self.v / o.v, (self.d * o.v - self.v * o.d) / (o.v * o.v))

    def __neg__(self):
        return _Dual(-self.v, -self.d)

    def pow(self, n: int):
        if n == 0:
            return _Dual(np.ones_like(self.v), np.zeros_like(self.d))
        return _Dual(self.v**n, n * self.v ** (n - 1) * self.d)


@dataclass(frozen=True)
class EllipticExpr:
    """Rational expression in ``wp``, ``wpp`` and exact constants.

    ``a`` stays symbolic unless bound; on the square torus it is supplied
    numerically at evaluation time.
    """

    source: str
    ast: object
    bindings: tuple[tuple[str, GaussianRational], ...] = ()

    @property
    def free_names(self) -> set[str]:
        bound = dict(self.bindings)
        return {n for n in _names(self.ast) if n not in bound and n not in ELLIPTIC_TOKENS and n != "i"}

    def evaluate(self, wp, wpp, wppp, constants: Mapping[str, complex] | None = None):
        """Return ``(F, dF/dz)`` given ``wp``, ``wp'`` and ``wp''`` arrays."""
        env = {name: complex(value) for name, value in self.bindings}
        env.update(constants or {})
        wp = np.asarray(wp, dtype=complex)
        leaves = {
            "wp": _Dual(wp, np.asarray(wpp, dtype=complex)),
            "wpp": _Dual(np.asarray(wpp, dtype=complex), np.asarray(wppp, dtype=complex)),
        }
        zero = np.zeros_like(wp)

        def walk(node):
            if isinstance(node, Num):
                return _Dual(zero + complex(node.value), zero)
            if isinstance(node, Name):
                if node.name in leaves:
                    return leaves[node.name]
                if node.name == "i":
                    return _Dual(zero + 1j, zero)
                if node.name == "z":
                    raise ExprError("elliptic expressions admit wp and wpp only, not z", node.position)
                if node.name not in env:
                    raise UnboundParameterError(f"unbound parameter {node.name!r}", node.position)
                return _Dual(zero + env[node.name], zero)
            if isinstance(node, Neg):
                return -walk(node.operand)
            if isinstance(node, Pow):
                return walk(node.base).pow(node.exponent)
            left, right = walk(node.left), walk(node.right)
            return {"+": left.__add__, "-": left.__sub__, "*": left.__mul__, "/": left.__truediv__}[node.op](right)

        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            out = walk(self.ast)
        return out.v, out.d


FunctionValue = Union[RationalMap, EllipticExpr]


def parse_function(text: str, bindings: Mapping | None = None) -> FunctionValue:
    """Parse ``text`` into a reduced :class:`RationalMap` or an :class:`EllipticExpr`."""
    ast = parse_ast(text)
    names = _names(ast)
    bound = _coerce_bindings(bindings or {})
    if names & set(ELLIPTIC_TOKENS):
        if "z" in names:
            raise ExprError("elliptic expressions admit wp and wpp only, not z")
        for name in names - set(ELLIPTIC_TOKENS) - {"i", "a"}:
            if name not in bound:
                raise UnboundParameterError(f"unbound parameter {name!r}")
        used = tuple(sorted((n, v) for n, v in bound.items() if n in names))
        return EllipticExpr(text, ast, used)
    return _lower(ast, bound)


def parse_rational(text: str, bindings: Mapping | None = None) -> RationalMap:
    value = parse_function(text, bindings)
    if not isinstance(value, RationalMap):
        raise ExprError("rational expression in z expected")
    return value


__all__ = [
    "EllipticExpr",
    "ExprError",
    "UnboundParameterError",
    "parse_constant",
    "parse_function",
    "parse_rational",
]
