"""A tiny expression language for amplitudes f(t).

Grammar::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := ['-'] base ['^' integer]
    base   := number | 't' | 'i' | ident '(' expr ')' | '(' expr ')'
    ident  := sin | cos | exp | sinh | cosh | sqrt | log

Parentheses do not produce nodes, so ``parse(pretty(ast)) == ast``.
"""

from __future__ import annotations

import cmath
import math
import re
from dataclasses import dataclass
from typing import Callable, Union

from .airy import AnalyticIntegrand
from .errors import ParseError

FUNCTIONS: dict[str, Callable[[complex], complex]] = {
    "sin": cmath.sin,
    "cos": cmath.cos,
    "exp": cmath.exp,
    "sinh": cmath.sinh,
    "cosh": cmath.cosh,
    "sqrt": cmath.sqrt,
    "log": cmath.log,
}
BRANCHED = frozenset({"sqrt", "log"})


@dataclass(frozen=True)
class Num:
    value: float


@dataclass(frozen=True)
class Var:
    pass


@dataclass(frozen=True)
class Imag:
    pass


@dataclass(frozen=True)
class Neg:
    operand: "Node"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exponent: int


@dataclass(frozen=True)
class Call:
    name: str
    arg: "Node"


Node = Union[Num, Var, Imag, Neg, BinOp, Pow, Call]

_TOKEN = re.compile(
    r"\s*(?:(?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)|(?P<name>[A-Za-z_]\w*)|(?P<op>[-+*/^()]))"
)


@dataclass
class _Token:
    kind: str  # "num", "name", "op", "end"
    text: str
    offset: int


def _tokenize(src: str) -> list[_Token]:
    tokens = []
    pos = 0
    while True:
        while pos < len(src) and src[pos].isspace():
            pos += 1
        if pos == len(src):
            tokens.append(_Token("end", "", len(src.encode())))
            return tokens
        m = _TOKEN.match(src, pos)
        if m is None or m.end() == pos:
            raise ParseError(f"unexpected character {src[pos]!r}", len(src[:pos].encode()), ("number", "t", "i", "function", "("))
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append(_Token(kind, m.group(kind), len(src[:start].encode())))
        pos = m.end()


class _Parser:
    def __init__(self, src: str):
        self.tokens = _tokenize(src)
        self.i = 0

    @property
    def tok(self) -> _Token:
        return self.tokens[self.i]

    def fail(self, expected) -> ParseError:
        found = self.tok.text or "end of input"
        return ParseError(f"unexpected {found!r}", self.tok.offset, tuple(expected))

    def expect(self, text: str) -> None:
        if self.tok.kind == "op" and self.tok.text == text:
            self.i += 1
            return
        raise self.fail((text,))

    def parse(self) -> Node:
        node = self.expr()
        if self.tok.kind != "end":
            raise self.fail(("+", "-", "*", "/", "end of input"))
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.tok.kind == "op" and self.tok.text in "+-":
            op = self.tok.text
            self.i += 1
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Node:
        node = self.factor()
        while self.tok.kind == "op" and self.tok.text in "*/":
            op = self.tok.text
            self.i += 1
            node = BinOp(op, node, self.factor())
        return node

    def factor(self) -> Node:
        negate = False
        if self.tok.kind == "op" and self.tok.text == "-":
            negate = True
            self.i += 1
        node = self.base()
        if self.tok.kind == "op" and self.tok.text == "^":
            self.i += 1
            if self.tok.kind != "num" or not self.tok.text.isdigit():
                raise self.fail(("integer",))
            node = Pow(node, int(self.tok.text))
            self.i += 1
        return Neg(node) if negate else node

    def base(self) -> Node:
        tok = self.tok
        if tok.kind == "num":
            value = float(tok.text)
            if not math.isfinite(value):
                raise ParseError(f"number {tok.text!r} overflows", tok.offset, ("number",))
            self.i += 1
            return Num(value)
        if tok.kind == "name":
            if tok.text == "t":
                self.i += 1
                return Var()
            if tok.text == "i":
                self.i += 1
                return Imag()
            if tok.text in FUNCTIONS:
                self.i += 1
                self.expect("(")
                arg = self.expr()
                self.expect(")")
                return Call(tok.text, arg)
            raise ParseError(f"unknown name {tok.text!r}", tok.offset, ("t", "i", *sorted(FUNCTIONS)))
        if tok.kind == "op" and tok.text == "(":
            self.i += 1
            node = self.expr()
            self.expect(")")
            return node
        raise self.fail(("number", "t", "i", "function", "("))


def parse(src: str) -> Node:
    return _Parser(src).parse()


def pretty(node: Node) -> str:
    """Source text that parses back to ``node``."""
    if isinstance(node, Num):
        return repr(node.value)
    if isinstance(node, Var):
        return "t"
    if isinstance(node, Imag):
        return "i"
    if isinstance(node, Call):
        return f"{node.name}({pretty(node.arg)})"
    if isinstance(node, Pow):
        base = pretty(node.base)
        if isinstance(node.base, (Neg, Pow)):
            base = f"({base})"
        return f"{base}^{node.exponent}"
    if isinstance(node, Neg):
        inner = pretty(node.operand)
        if isinstance(node.operand, Neg):
            inner = f"({inner})"
        return f"-{inner}"
    # binary nodes carry their own parentheses
    return f"({pretty(node.left)} {node.op} {pretty(node.right)})"


def compile_node(node: Node) -> Callable[[complex], complex]:
    if isinstance(node, Num):
        v = complex(node.value)
        return lambda t: v
    if isinstance(node, Var):
        return lambda t: t
    if isinstance(node, Imag):
        return lambda t: 1j
    if isinstance(node, Neg):
        f = compile_node(node.operand)
        return lambda t: -f(t)
    if isinstance(node, Pow):
        f, k = compile_node(node.base), node.exponent
        return lambda t: f(t) ** k
    if isinstance(node, Call):
        f, fn = compile_node(node.arg), FUNCTIONS[node.name]
        return lambda t: fn(f(t))
    lf, rf = compile_node(node.left), compile_node(node.right)
    if node.op == "+":
        return lambda t: lf(t) + rf(t)
    if node.op == "-":
        return lambda t: lf(t) - rf(t)
    if node.op == "*":
        return lambda t: lf(t) * rf(t)
    return lambda t: lf(t) / rf(t)


def _real_on_real(node: Node) -> bool:
    """Conservative: no literal i and no function with a branch cut."""
    if isinstance(node, Imag):
        return False
    if isinstance(node, (Num, Var)):
        return True
    if isinstance(node, Call):
        return node.name not in BRANCHED and _real_on_real(node.arg)
    if isinstance(node, Neg):
        return _real_on_real(node.operand)
    if isinstance(node, Pow):
        return _real_on_real(node.base)
    return _real_on_real(node.left) and _real_on_real(node.right)


@dataclass(frozen=True)
class IntegrandExpr:
    source: str
    ast: Node
    real_on_real: bool

    def __post_init__(self):
        object.__setattr__(self, "_fn", compile_node(self.ast))

    def __call__(self, t: complex) -> complex:
        return self._fn(complex(t))

    def integrand(self) -> AnalyticIntegrand:
        return AnalyticIntegrand(self._fn, real_on_real=self.real_on_real, check=False)


def parse_integrand(src: str, real_on_real: bool | None = None) -> IntegrandExpr:
    """Parse ``src``; ``real_on_real`` overrides the inferred symmetry flag."""
    ast = parse(src)
    flag = _real_on_real(ast) if real_on_real is None else real_on_real
    return IntegrandExpr(src, ast, flag)
