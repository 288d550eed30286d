#!/usr/bin/env python3
"""
Symbol expressions: tokenizer, Pratt parser, printer and vectorized evaluator

Grammar (see docs/grammar.md):

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('-' | '+') unary | atom
    atom   := NUMBER | NAME | NAME '(' expr (',' expr)* ')' | '(' expr ')'

Variables are x, xi for n = 1 and x1..xn, xi1..xin otherwise; `pi` is the
only named constant.
"""

import logging
import math
import re
from dataclasses import dataclass
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np

from .errors import (
    ArityError,
    DimensionError,
    SymbolDomainError,
    SymbolSyntaxError,
    UnknownIdentifierError,
)
from .points import PhasePoint

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# AST
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Num:
    value: float


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Unary:
    op: str
    operand: "Node"


@dataclass(frozen=True)
class Binary:
    op: str
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Call:
    func: str
    arg: "Node"


Node = Union[Num, Var, Unary, Binary, Call]


def _gaussian(t):
    return np.exp(-t * t)


# name -> (numpy implementation, arity, bound of |f| when the argument is real)
FUNCTIONS: Dict[str, Tuple[Callable, int, Optional[float]]] = {
    "sin": (np.sin, 1, 1.0),
    "cos": (np.cos, 1, 1.0),
    "tanh": (np.tanh, 1, 1.0),
    "exp": (np.exp, 1, None),
    "atan": (np.arctan, 1, math.pi / 2),
    "sqrt": (np.sqrt, 1, None),
    "gaussian": (_gaussian, 1, 1.0),
}

CONSTANTS: Dict[str, float] = {"pi": math.pi}


def variable_names(n: int) -> Tuple[str, ...]:
    """Variable names for phase-space dimension n"""
    if n < 1:
        raise DimensionError(f"dimension must be >= 1, got {n}")
    if n == 1:
        return ("x", "xi")
    return tuple(f"x{i}" for i in range(1, n + 1)) + tuple(f"xi{i}" for i in range(1, n + 1))


# ---------------------------------------------------------------------------
# Tokenizer
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Token:
    kind: str  # num, name, op, end
    text: str
    offset: int  # byte offset into the UTF-8 source


_TOKEN_RE = re.compile(
    r"\s*(?:"
    r"(?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)"
    r"|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<op>[-+*/(),])"
    r")"
)


def _byte_offset(text: str, index: int) -> int:
    return len(text[:index].encode("utf-8"))


def tokenize(text: str) -> Iterator[Token]:
    """
    Split symbol text into tokens

    Raises:
        SymbolSyntaxError: On a character outside the grammar
    """
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            yield Token("end", "", _byte_offset(text, len(text)))
            return
        match = _TOKEN_RE.match(text, pos)
        if match is None or match.lastgroup is None:
            raise SymbolSyntaxError(_byte_offset(text, pos), f"unexpected character {text[pos]!r}")
        kind = match.lastgroup
        yield Token(kind, match.group(kind), _byte_offset(text, match.start(kind)))
        pos = match.end()


# ---------------------------------------------------------------------------
# Pratt parser
# ---------------------------------------------------------------------------

_BINARY_POWER = {"+": 10, "-": 10, "*": 20, "/": 20}
_PREFIX_POWER = 30


class _Parser:
    def __init__(self, text: str, variables: Sequence[str]):
        self.tokens: List[Token] = list(tokenize(text))
        self.pos = 0
        self.variables = set(variables)

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        token = self.tokens[self.pos]
        if token.kind != "end":
            self.pos += 1
        return token

    def lbp(self, token: Token) -> int:
        if token.kind == "op":
            return _BINARY_POWER.get(token.text, 0)
        return 0

    def expect(self, text: str) -> Token:
        token = self.peek()
        if token.kind != "op" or token.text != text:
            found = "end of input" if token.kind == "end" else repr(token.text)
            raise SymbolSyntaxError(token.offset, f"expected '{text}', found {found}")
        return self.advance()

    def parse(self) -> Node:
        node = self.expression(0)
        token = self.peek()
        if token.kind != "end":
            raise SymbolSyntaxError(token.offset, f"unexpected {token.text!r}")
        return node

    def expression(self, rbp: int) -> Node:
        left = self.nud(self.advance())
        while rbp < self.lbp(self.peek()):
            token = self.advance()
            left = Binary(token.text, left, self.expression(_BINARY_POWER[token.text]))
        return left

    def nud(self, token: Token) -> Node:
        if token.kind == "num":
            return Num(float(token.text))
        if token.kind == "name":
            return self.name(token)
        if token.kind == "op":
            if token.text == "(":
                node = self.expression(0)
                self.expect(")")
                return node
            if token.text == "-":
                return Unary("-", self.expression(_PREFIX_POWER))
            if token.text == "+":
                return self.expression(_PREFIX_POWER)
        if token.kind == "end":
            raise SymbolSyntaxError(token.offset, "unexpected end of input")
        raise SymbolSyntaxError(token.offset, f"unexpected {token.text!r}")

    def name(self, token: Token) -> Node:
        nxt = self.peek()
        if nxt.kind == "op" and nxt.text == "(":
            if token.text not in FUNCTIONS:
                raise UnknownIdentifierError(token.offset, f"unknown function '{token.text}'")
            self.advance()
            args = [self.expression(0)]
            while self.peek().kind == "op" and self.peek().text == ",":
                self.advance()
                args.append(self.expression(0))
            self.expect(")")
            arity = FUNCTIONS[token.text][1]
            if len(args) != arity:
                raise ArityError(
                    token.offset,
                    f"'{token.text}' takes {arity} argument(s), got {len(args)}",
                )
            return Call(token.text, args[0])
        if token.text in self.variables or token.text in CONSTANTS:
            return Var(token.text)
        if token.text in FUNCTIONS:
            raise SymbolSyntaxError(nxt.offset, f"expected '(' after '{token.text}'")
        raise UnknownIdentifierError(token.offset, f"unknown identifier '{token.text}'")


# ---------------------------------------------------------------------------
# Printer
# ---------------------------------------------------------------------------

def _precedence(node: Node) -> int:
    if isinstance(node, Binary):
        return _BINARY_POWER[node.op]
    if isinstance(node, Unary):
        return _PREFIX_POWER
    if isinstance(node, Num) and node.value < 0:
        return _PREFIX_POWER
    return 100


def _format_number(value: float) -> str:
    if value.is_integer() and abs(value) < 1e15:
        return str(int(value))
    return repr(value)


def pretty_print(node: Union[Node, "SymbolExpr"]) -> str:
    """
    Render an AST back to grammar text with the minimal parentheses

    parse(pretty_print(parse(s))) reproduces the same tree.
    """
    if isinstance(node, SymbolExpr):
        node = node.ast
    if isinstance(node, Num):
        return _format_number(node.value)
    if isinstance(node, Var):
        return node.name
    if isinstance(node, Call):
        return f"{node.func}({pretty_print(node.arg)})"
    if isinstance(node, Unary):
        inner = pretty_print(node.operand)
        if _precedence(node.operand) < _PREFIX_POWER:
            inner = f"({inner})"
        return f"-{inner}"
    prec = _precedence(node)
    left = pretty_print(node.left)
    if _precedence(node.left) < prec:
        left = f"({left})"
    right = pretty_print(node.right)
    if _precedence(node.right) <= prec:
        right = f"({right})"
    if node.op in "+-":
        return f"{left} {node.op} {right}"
    return f"{left}{node.op}{right}"


# ---------------------------------------------------------------------------
# Static bound
# ---------------------------------------------------------------------------

def static_bound(node: Node) -> Optional[float]:
    """
    A bound on |f| valid on all of phase space, or None when none is evident
    """
    if isinstance(node, Num):
        return abs(node.value)
    if isinstance(node, Var):
        return CONSTANTS.get(node.name)
    if isinstance(node, Unary):
        return static_bound(node.operand)
    if isinstance(node, Call):
        fixed = FUNCTIONS[node.func][2]
        if fixed is not None:
            return fixed
        inner = static_bound(node.arg)
        if inner is None:
            return None
        if node.func == "exp":
            return math.exp(inner)
        if node.func == "sqrt":
            return math.sqrt(inner)
        return None
    left, right = static_bound(node.left), static_bound(node.right)
    if left is None or right is None:
        return None
    if node.op in "+-":
        return left + right
    if node.op == "*":
        return left * right
    return None


# ---------------------------------------------------------------------------
# Symbol expressions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SymbolExpr:
    """
    A parsed symbol with its metadata

    Attributes:
        ast: Expression tree
        source: Text the tree was parsed from
        n: Phase-space dimension the variables refer to
        bounded: Whether a bound on |f| is known
        bound: The bound M with |f| <= M, when known
        smooth: Declared smoothness
    """
    ast: Node
    source: str
    n: int = 1
    bounded: bool = False
    bound: Optional[float] = None
    smooth: bool = True

    @property
    def variables(self) -> Tuple[str, ...]:
        return variable_names(self.n)

    def evaluate(self, **coords) -> np.ndarray:
        return evaluate_array(self, **coords)

    def __call__(self, x, xi) -> np.ndarray:
        """Phase-function view for n = 1"""
        if self.n != 1:
            raise DimensionError("only n = 1 symbols can be called as phase functions")
        return evaluate_array(self, x=x, xi=xi)

    def __str__(self) -> str:
        return pretty_print(self.ast)


def parse_symbol(
    text: str,
    n: int = 1,
    bound: Optional[float] = None,
    smooth: bool = True,
) -> SymbolExpr:
    """
    Parse symbol text into a SymbolExpr

    Args:
        text: Infix expression over the phase-space variables
        n: Phase-space dimension (variables x, xi for n = 1)
        bound: Declared bound on |f|; derived from the tree when omitted
        smooth: Declared smoothness flag

    Returns:
        SymbolExpr

    Raises:
        SymbolSyntaxError: With the byte offset of the first bad token
        UnknownIdentifierError: For names outside the grammar
        ArityError: For calls with the wrong argument count
    """
    ast = _Parser(text, variable_names(n)).parse()
    if bound is None:
        bound = static_bound(ast)
    logger.debug("parsed symbol %r (bound=%s)", text, bound)
    return SymbolExpr(ast=ast, source=text, n=n, bounded=bound is not None, bound=bound, smooth=smooth)


def parse_constant(text: str) -> float:
    """Evaluate a variable-free expression such as 'sqrt(2)' or '-1/3'"""
    ast = _Parser(text, ()).parse()
    return float(np.real(_evaluate(ast, {})))


def _evaluate(node: Node, env: Dict[str, np.ndarray]) -> np.ndarray:
    if isinstance(node, Num):
        return np.asarray(node.value, dtype=float)
    if isinstance(node, Var):
        if node.name in CONSTANTS:
            return np.asarray(CONSTANTS[node.name])
        return env[node.name]
    if isinstance(node, Unary):
        return -_evaluate(node.operand, env)
    if isinstance(node, Call):
        arg = _evaluate(node.arg, env)
        if node.func == "sqrt" and np.any(np.asarray(arg) < 0):
            raise SymbolDomainError(pretty_print(node), "square root of a negative value")
        with np.errstate(all="ignore"):
            value = FUNCTIONS[node.func][0](arg)
    else:
        left = _evaluate(node.left, env)
        right = _evaluate(node.right, env)
        if node.op == "/" and np.any(np.asarray(right) == 0):
            raise SymbolDomainError(pretty_print(node), "division by zero")
        with np.errstate(all="ignore"):
            if node.op == "+":
                value = left + right
            elif node.op == "-":
                value = left - right
            elif node.op == "*":
                value = left * right
            else:
                value = left / right
    if not np.all(np.isfinite(value)):
        raise SymbolDomainError(pretty_print(node), "non-finite value")
    return value


def evaluate_array(f: SymbolExpr, **coords) -> np.ndarray:
    """
    Evaluate f on broadcastable coordinate arrays

    Args:
        f: Parsed symbol
        **coords: One array per variable (x=..., xi=... for n = 1)

    Returns:
        Array of the broadcast shape (real dtype)

    Raises:
        DimensionError: If a variable is missing
        SymbolDomainError: Naming the offending subexpression
    """
    missing = [name for name in f.variables if name not in coords]
    if missing:
        raise DimensionError(f"missing coordinates for {', '.join(missing)}")
    env = {name: np.asarray(coords[name], dtype=float) for name in f.variables}
    shape = np.broadcast_shapes(*(a.shape for a in env.values()))
    return np.broadcast_to(_evaluate(f.ast, env), shape).astype(float)


def eval_symbol(f: SymbolExpr, X: PhasePoint) -> complex:
    """
    Evaluate f at one phase point

    Raises:
        DimensionError: If X.n differs from the symbol's dimension
        SymbolDomainError: On a domain violation
    """
    if X.n != f.n:
        raise DimensionError(f"symbol has n={f.n}, point has n={X.n}")
    names = f.variables
    coords = dict(zip(names, X.x + X.xi))
    return complex(evaluate_array(f, **coords))


class PhaseFunction:
    """
    A function F(x, xi) on the n = 1 phase space, evaluable on arrays

    Wraps symbol expressions, pullbacks of symbols on state spaces and plain
    callables behind one interface used by the quantization engine.
    """

    def __init__(
        self,
        func: Callable[[np.ndarray, np.ndarray], np.ndarray],
        label: str = "",
        bound: Optional[float] = None,
        real: Optional[bool] = None,
    ):
        self.func = func
        self.label = label
        self.bound = bound
        self.real = real

    def __call__(self, x, xi) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        xi = np.asarray(xi, dtype=float)
        values = np.asarray(self.func(x, xi))
        return np.broadcast_to(values, np.broadcast_shapes(x.shape, xi.shape))

    def __repr__(self) -> str:
        return f"PhaseFunction({self.label or self.func!r})"


def as_phase_function(F, label: Optional[str] = None) -> PhaseFunction:
    """Coerce a SymbolExpr, PhaseFunction or callable into a PhaseFunction"""
    if isinstance(F, PhaseFunction):
        return F
    if isinstance(F, SymbolExpr):
        return PhaseFunction(F, label=label or F.source, bound=F.bound, real=True)
    if callable(F):
        return PhaseFunction(F, label=label or getattr(F, "__name__", "callable"))
    raise TypeError(f"cannot use {type(F).__name__} as a phase function")
