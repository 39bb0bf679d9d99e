# file: src/disk_rigidity/parser.py
"""
Recursive-descent parser for the map DSL.

    expr    := term (('+' | '-') term)*
    term    := factor (('*' | '/') factor)*
    factor  := '-' factor | base ('^' uint)?
    base    := 'z' | 'i' | number ['i'] | '(' expr ')'
             | 'cayley(' expr ')' | 'cayinv(' expr ')'
             | 'compose(' expr ',' expr ')' | 'mobius(' expr ',' expr ',' expr ',' expr ')'

Constant subtrees fold to a single constant, so "(0.5+2i)" is one literal.
"""

import re
from typing import List, NamedTuple

import numpy as np

from .exceptions import DegenerateMobiusError, ParseError, PoleError
from .expressions import (
    CayleyFwd, CayleyInv, Const, MapExpr, MobiusNode, Z, add, compose, div, mul, neg, power, sub,
    to_rational,
)
from .mobius import Mobius

_NUMBER = "number"
_IMAGINARY = "imaginary"
_UINT = "uint"
_IDENTIFIER = "identifier"
_PLUS = "plus"
_MINUS = "minus"
_TIMES = "times"
_OVER = "over"
_POWER = "power"
_OPENPAR = "openpar"
_CLOSEPAR = "closepar"
_COMMA = "comma"
_WHITESPACE = "whitespace"
_END = "end"

_FLOAT = r"(?:[0-9]+\.?[0-9]*|\.[0-9]+)(?:[eE][+-]?[0-9]+)?"

_LEX_TABLE = [
    (_IMAGINARY, re.compile(_FLOAT + r"i(?![A-Za-z0-9_])")),
    (_UINT, re.compile(r"[0-9]+(?![0-9.eEi])")),
    (_NUMBER, re.compile(_FLOAT)),
    (_IDENTIFIER, re.compile(r"[A-Za-z_][A-Za-z0-9_]*")),
    (_PLUS, re.compile(r"\+")),
    (_MINUS, re.compile(r"-")),
    (_TIMES, re.compile(r"\*")),
    (_OVER, re.compile(r"/")),
    (_POWER, re.compile(r"\^")),
    (_OPENPAR, re.compile(r"\(")),
    (_CLOSEPAR, re.compile(r"\)")),
    (_COMMA, re.compile(r",")),
    (_WHITESPACE, re.compile(r"\s+")),
]

_FUNCTIONS = {"cayley": 1, "cayinv": 1, "compose": 2, "mobius": 4}
# Coefficients below this count as zero when testing a denominator
ZERO_COEFF_TOL = 1e-12


class Token(NamedTuple):
    tag: str
    text: str
    position: int


def tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    pos = 0
    while pos < len(text):
        for tag, pattern in _LEX_TABLE:
            match = pattern.match(text, pos)
            if match:
                if tag is not _WHITESPACE:
                    tokens.append(Token(tag, match.group(), pos))
                pos = match.end()
                break
        else:
            raise ParseError(f"Unexpected character '{text[pos]}'", text, pos)
    tokens.append(Token(_END, "", len(text)))
    return tokens


class _ParserState:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def is_next(self, *tags: str) -> bool:
        return self.current.tag in tags

    def advance(self) -> Token:
        token = self.current
        self.index += 1
        return token

    def expect(self, tag: str, what: str) -> Token:
        if not self.is_next(tag):
            self.error(f"Expected {what}")
        return self.advance()

    def error(self, message: str, position: int = None):
        token = self.current
        if position is None:
            position = token.position
            found = "end of input" if token.tag is _END else f"'{token.text}'"
            message = f"{message}, found {found}"
        raise ParseError(message, self.text, position)


def _identically_zero(expr: MapExpr) -> bool:
    numerator, _ = to_rational(expr)
    return bool(np.allclose(numerator.coef, 0, rtol=0, atol=ZERO_COEFF_TOL))


def _parse_expr(state: _ParserState) -> MapExpr:
    result = _parse_term(state)
    while state.is_next(_PLUS, _MINUS):
        op = state.advance()
        right = _parse_term(state)
        result = add(result, right) if op.tag is _PLUS else sub(result, right)
    return result


def _parse_term(state: _ParserState) -> MapExpr:
    result = _parse_factor(state)
    while state.is_next(_TIMES, _OVER):
        op = state.advance()
        right = _parse_factor(state)
        if op.tag is _TIMES:
            result = mul(result, right)
            continue
        if _identically_zero(right):
            state.error("Division by an identically zero denominator", op.position)
        try:
            result = div(result, right)
        except PoleError:
            state.error("Division by an identically zero denominator", op.position)
    return result


def _parse_factor(state: _ParserState) -> MapExpr:
    if state.is_next(_MINUS):
        state.advance()
        return neg(_parse_factor(state))
    base = _parse_base(state)
    if state.is_next(_POWER):
        state.advance()
        exponent = state.expect(_UINT, "a non-negative integer exponent")
        try:
            return power(base, int(exponent.text))
        except ParseError as e:
            state.error(e.args[0], exponent.position)
    return base


def _parse_arguments(state: _ParserState, name: str, count: int) -> List[MapExpr]:
    state.expect(_OPENPAR, f"'(' after {name}")
    args = [_parse_expr(state)]
    for _ in range(count - 1):
        state.expect(_COMMA, f"',' in {name}(...)")
        args.append(_parse_expr(state))
    state.expect(_CLOSEPAR, f"')' closing {name}(...)")
    return args


def _parse_base(state: _ParserState) -> MapExpr:
    token = state.current
    if token.tag in (_NUMBER, _UINT):
        state.advance()
        return Const(float(token.text))
    if token.tag is _IMAGINARY:
        state.advance()
        return Const(1j * float(token.text[:-1]))
    if token.tag is _OPENPAR:
        state.advance()
        inner = _parse_expr(state)
        state.expect(_CLOSEPAR, "')'")
        return inner
    if token.tag is _IDENTIFIER:
        name = token.text
        if name == "z":
            state.advance()
            return Z
        if name == "i":
            state.advance()
            return Const(1j)
        if name in _FUNCTIONS:
            state.advance()
            args = _parse_arguments(state, name, _FUNCTIONS[name])
            if name == "cayley":
                return CayleyFwd(args[0])
            if name == "cayinv":
                return CayleyInv(args[0])
            if name == "compose":
                return compose(args[0], args[1])
            if not all(isinstance(a, Const) for a in args):
                state.error("mobius(...) takes four constant coefficients", token.position)
            try:
                return MobiusNode(Mobius(*(a.value for a in args)))
            except DegenerateMobiusError as e:
                state.error(str(e), token.position)
        state.error(f"Unknown identifier '{name}'", token.position)
    state.error("Expected a term")


def parse_map(text: str) -> MapExpr:
    """Parses map-DSL text into an expression tree."""
    if not text or not text.strip():
        raise ParseError("Empty map expression", text or "", 0)
    state = _ParserState(text)
    expr = _parse_expr(state)
    if not state.is_next(_END):
        state.error("Unexpected trailing input")
    return expr


def parse_constant(text: str) -> complex:
    """Parses a constant such as "1", "-i" or "0.5+0.25i" in the map DSL."""
    expr = parse_map(text)
    if not isinstance(expr, Const):
        raise ParseError("Expected a constant", text, 0)
    return complex(expr.value)
