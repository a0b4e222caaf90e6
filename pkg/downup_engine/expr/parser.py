"""
Expression language for elements, polynomials and scalars.

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := primary ('^' NAT)?
    primary:= '(' expr ')' | NUMBER | 'zeta' '(' NAT ')' | NAME

NUMBER is an integer or a fraction such as 3/4. Multiplication is always
written out; '**' is rejected. Which names are allowed depends on what is
being parsed (u, d, h, H for elements, a single variable for polynomials,
plus any bound parameters such as c and C).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Iterator, NamedTuple, Union

from downup_engine.poly.univariate import UniPoly
from downup_engine.scalars import CyclotomicScalar
from downup_engine.utils.errors import ExprSyntaxError, UnknownSymbol

ELEMENT_SYMBOLS = frozenset({"u", "d", "h", "H"})


class Token(NamedTuple):
    type: str
    value: str
    where: tuple[int, int]


TOKEN_PATTERNS = {
    "number": r"\d+(?:/\d+)?",
    "name": r"[A-Za-z_][A-Za-z0-9_]*",
    "lpar": r"\(",
    "rpar": r"\)",
    "pow2": r"\*\*",
    "mul": r"\*",
    "caret": r"\^",
    "plus": r"\+",
    "minus": r"-",
    "space": r"\s+",
    "mismatch": r".",
}
TOKEN_RE = re.compile("|".join(f"(?P<{name}>{pattern})" for name, pattern in TOKEN_PATTERNS.items()))


def tokenize(source: str) -> Iterator[Token]:
    for match in TOKEN_RE.finditer(source):
        kind = match.lastgroup
        where = match.span()
        if kind == "space":
            continue
        if kind == "mismatch":
            raise ExprSyntaxError(source, where, f"unexpected character {match.group()!r}")
        if kind == "pow2":
            raise ExprSyntaxError(source, where, "'**' is not an operator; write powers with '^'")
        yield Token(kind, match.group(), where)


# ----------------------------------------------------------------------
# Syntax tree
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Zeta:
    conductor: int


@dataclass(frozen=True)
class Sym:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: "Node"


@dataclass(frozen=True)
class BinOp:
    op: str  # '+', '-', '*'
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exponent: int


Node = Union[Num, Zeta, Sym, Neg, BinOp, Pow]


class _Parser:
    def __init__(self, source: str, symbols: Iterable[str]):
        self.source = source
        self.symbols = frozenset(symbols)
        self.tokens = list(tokenize(source))
        self.pos = 0

    def peek(self) -> Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def error(self, message: str, token: Token | None = None) -> ExprSyntaxError:
        if token is None:
            end = len(self.source)
            return ExprSyntaxError(self.source, (end, end + 1), message)
        return ExprSyntaxError(self.source, token.where, message)

    def expect(self, kind: str) -> Token:
        token = self.peek()
        if token is None or token.type != kind:
            found = "end of input" if token is None else repr(token.value)
            raise self.error(f"expected {kind}, found {found}", token)
        self.pos += 1
        return token

    def parse(self) -> Node:
        if not self.tokens:
            raise self.error("empty expression")
        node = self.expr()
        token = self.peek()
        if token is not None:
            raise self.error(f"unexpected {token.value!r} (multiplication must be written with '*')", token)
        return node

    def expr(self) -> Node:
        token = self.peek()
        if token is not None and token.type == "minus":
            self.pos += 1
            node: Node = Neg(self.term())
        else:
            node = self.term()
        while (token := self.peek()) is not None and token.type in ("plus", "minus"):
            self.pos += 1
            node = BinOp("+" if token.type == "plus" else "-", node, self.term())
        return node

    def term(self) -> Node:
        node = self.factor()
        while (token := self.peek()) is not None and token.type == "mul":
            self.pos += 1
            node = BinOp("*", node, self.factor())
        return node

    def factor(self) -> Node:
        node = self.primary()
        token = self.peek()
        if token is not None and token.type == "caret":
            self.pos += 1
            exponent = self.expect("number")
            if "/" in exponent.value:
                raise self.error("exponents must be nonnegative integers", exponent)
            node = Pow(node, int(exponent.value))
        return node

    def primary(self) -> Node:
        token = self.peek()
        if token is None:
            raise self.error("unexpected end of input")
        self.pos += 1
        if token.type == "lpar":
            node = self.expr()
            self.expect("rpar")
            return node
        if token.type == "number":
            numerator, _, denominator = token.value.partition("/")
            if denominator and int(denominator) == 0:
                raise self.error("zero denominator", token)
            return Num(Fraction(int(numerator), int(denominator or 1)))
        if token.type == "name":
            if token.value == "zeta":
                self.expect("lpar")
                conductor = self.expect("number")
                if "/" in conductor.value or int(conductor.value) < 1:
                    raise self.error("zeta needs a positive integer conductor", conductor)
                self.expect("rpar")
                return Zeta(int(conductor.value))
            if token.value not in self.symbols:
                raise UnknownSymbol(self.source, token.where, f"unknown symbol {token.value!r}")
            return Sym(token.value)
        raise self.error(f"unexpected {token.value!r}", token)


def parse_expression(source: str, symbols: Iterable[str] = ELEMENT_SYMBOLS) -> Node:
    return _Parser(source, symbols).parse()


def parse_element(source: str, bindings: Iterable[str] = ()) -> Node:
    """Syntax tree of an algebra element over u, d, h, H and any bound names."""
    return parse_expression(source, ELEMENT_SYMBOLS | set(bindings))


# ----------------------------------------------------------------------
# Printing
# ----------------------------------------------------------------------

_PREC = {"+": 1, "-": 1, "*": 2}


def _prec(node: Node) -> int:
    if isinstance(node, BinOp):
        return _PREC[node.op]
    if isinstance(node, Neg):
        return 1
    if isinstance(node, Pow):
        return 4
    if isinstance(node, Num) and node.value.denominator != 1:
        return 3
    return 5


def to_source(node: Node) -> str:
    """Print a tree so that parsing the text gives the same tree back."""
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, Zeta):
        return f"zeta({node.conductor})"
    if isinstance(node, Sym):
        return node.name
    if isinstance(node, Neg):
        inner = to_source(node.operand)
        return f"-({inner})" if _prec(node.operand) < 2 else f"-{inner}"
    if isinstance(node, Pow):
        base = to_source(node.base)
        if _prec(node.base) < 5:
            base = f"({base})"
        return f"{base}^{node.exponent}"
    level = _PREC[node.op]
    left = to_source(node.left)
    right = to_source(node.right)
    if _prec(node.left) < level or (isinstance(node.left, Neg) and level > 1):
        left = f"({left})"
    if _prec(node.right) <= level:
        right = f"({right})"
    return f"{left} {node.op} {right}" if node.op != "*" else f"{left}*{right}"


# ----------------------------------------------------------------------
# Evaluation
# ----------------------------------------------------------------------


def evaluate(node: Node, env: dict[str, Any]) -> Any:
    """Evaluate a tree in any ring whose values support +, -, * and integer powers."""
    if isinstance(node, Num):
        return CyclotomicScalar.from_fraction(node.value)
    if isinstance(node, Zeta):
        return CyclotomicScalar.zeta(node.conductor)
    if isinstance(node, Sym):
        return env[node.name]
    if isinstance(node, Neg):
        return -evaluate(node.operand, env)
    if isinstance(node, Pow):
        return evaluate(node.base, env) ** node.exponent
    left, right = evaluate(node.left, env), evaluate(node.right, env)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    return left * right


def parse_scalar(source: str, bindings: dict[str, Any] | None = None) -> CyclotomicScalar:
    """A scalar literal such as '3', '-1/2' or '1 + 2*zeta(8)^3'."""
    bindings = bindings or {}
    value = evaluate(parse_expression(source, bindings), bindings)
    return CyclotomicScalar.coerce(value)


def parse_polynomial(source: str, var: str = "h", bindings: dict[str, Any] | None = None) -> UniPoly:
    bindings = dict(bindings or {})
    env = {**bindings, var: UniPoly.x()}
    value = evaluate(parse_expression(source, env), env)
    return value if isinstance(value, UniPoly) else UniPoly.constant(value)


def element_from_source(algebra, source: str, psi: UniPoly | None = None, bindings: dict[str, Any] | None = None):
    """
    Parse and evaluate an element of ``algebra``. H stands for ud + psi(h)
    and is only available when psi is given.
    """
    bindings = dict(bindings or {})
    symbols = {"u", "d", "h"} | set(bindings)
    if psi is not None:
        symbols.add("H")
    tree = parse_expression(source, symbols)
    env: dict[str, Any] = {"u": algebra.u(), "d": algebra.d(), "h": algebra.h(), **bindings}
    if psi is not None:
        env["H"] = algebra.u() * algebra.d() + algebra.poly_h(psi)
    value = evaluate(tree, env)
    if isinstance(value, CyclotomicScalar):
        return algebra.scalar(value)
    return value
