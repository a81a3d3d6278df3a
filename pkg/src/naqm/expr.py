"""Expression language over the sedenion algebra.

Grammar, lowest precedence first::

    expr    := term (("+" | "-") term)*
    term    := unary ("*" unary)*            left-associative, explicit "*" only
    unary   := "-" unary | primary
    primary := NUMBER | "I" | BASIS
             | "(" expr ")"
             | "[" expr "," expr "," expr "]"        ternary bracket a(bc) - (ca)b
             | "comm" "(" expr "," expr ")"           xy - yx
             | "assoc" "(" expr "," expr "," expr ")" (xy)z - x(yz)

``BASIS`` is one of ``i0``..``i7``, ``e1``..``e7``.  ``1`` is a scalar.
A number immediately followed by ``I`` (``2I``, ``0.5I``) is an imaginary
literal.  Because multiplication is not associative, ``a*b*c`` means
``(a*b)*c`` and the parser records a note for every such chain.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .algebra import AlgebraElement, BasisUnit, format_element, scalar, unit
from .brackets import associator, commutator, na_bracket

__all__ = [
    "TokenKind",
    "Token",
    "ExprError",
    "LexError",
    "ParseError",
    "EvalError",
    "ScalarLit",
    "Basis",
    "Neg",
    "Add",
    "Sub",
    "Mul",
    "Bracket3",
    "Call",
    "tokenize",
    "parse",
    "evaluate",
    "evaluate_text",
    "format_element",
]

MAX_NESTING = 100


class TokenKind(enum.Enum):
    NUMBER = "number"
    IMAG_UNIT_I = "I"
    BASIS = "basis unit"
    PLUS = "'+'"
    MINUS = "'-'"
    STAR = "'*'"
    LPAREN = "'('"
    RPAREN = "')'"
    LBRACKET = "'['"
    RBRACKET = "']'"
    COMMA = "','"
    IDENT = "function name"
    EOF = "end of input"


class Token(NamedTuple):
    kind: TokenKind
    lexeme: str
    position: int  # byte offset into the UTF-8 input


class ExprError(Exception):
    def __init__(self, position: int, message: str):
        self.position = position
        self.message = message
        super().__init__(f"{message} at offset {position}")

    def caret(self, text: str) -> str:
        """Two-line diagnostic: the input and a caret under the offending byte."""
        col = len(text.encode("utf-8")[: self.position].decode("utf-8", errors="ignore"))
        return f"{text}\n{' ' * col}^"


class LexError(ExprError):
    def __init__(self, position: int, found: str):
        self.found = found
        super().__init__(position, f"unexpected {found!r}")


class ParseError(ExprError):
    def __init__(self, position: int, expected: frozenset[str], found: str):
        self.expected = expected
        self.found = found
        super().__init__(position, f"expected {' or '.join(sorted(expected))}, found {found}")


class EvalError(ExprError):
    pass


_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?I?)
  | (?P<word>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<punct>[-+*()\[\],])
""", re.VERBOSE)
_BASIS_WORD = re.compile(r"i[0-7]|e[1-7]")
_FUNCTIONS = {"comm": 2, "assoc": 3}
_PUNCT = {
    "+": TokenKind.PLUS,
    "-": TokenKind.MINUS,
    "*": TokenKind.STAR,
    "(": TokenKind.LPAREN,
    ")": TokenKind.RPAREN,
    "[": TokenKind.LBRACKET,
    "]": TokenKind.RBRACKET,
    ",": TokenKind.COMMA,
}


def _word_kind(word: str, position: int) -> TokenKind:
    if word == "I":
        return TokenKind.IMAG_UNIT_I
    if _BASIS_WORD.fullmatch(word):
        return TokenKind.BASIS
    if word in _FUNCTIONS:
        return TokenKind.IDENT
    raise LexError(position, word)


def tokenize(text: str) -> list[Token]:
    """Longest-match lexer; the result always ends with an EOF token."""
    tokens: list[Token] = []
    ascii_only = text.isascii()
    i = 0
    byte = 0
    n = len(text)
    match = _TOKEN.match
    while i < n:
        m = match(text, i)
        if m is None:
            raise LexError(byte, text[i])
        lexeme = m.group()
        group = m.lastgroup
        if group == "punct":
            tokens.append(Token(_PUNCT[lexeme], lexeme, byte))
        elif group == "word":
            tokens.append(Token(_word_kind(lexeme, byte), lexeme, byte))
        elif group == "number":
            tokens.append(Token(TokenKind.NUMBER, lexeme, byte))
        i = m.end()
        byte += len(lexeme) if ascii_only else len(lexeme.encode("utf-8"))
    tokens.append(Token(TokenKind.EOF, "", byte))
    return tokens


# -- AST ------------------------------------------------------------------------

@dataclass(frozen=True)
class ScalarLit:
    value: complex


@dataclass(frozen=True)
class Basis:
    unit: BasisUnit


@dataclass(frozen=True)
class Neg:
    x: object


@dataclass(frozen=True)
class Add:
    left: object
    right: object


@dataclass(frozen=True)
class Sub:
    left: object
    right: object


@dataclass(frozen=True)
class Mul:
    left: object
    right: object


@dataclass(frozen=True)
class Bracket3:
    a: object
    b: object
    c: object


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple


def _number_value(lexeme: str) -> complex:
    if lexeme.endswith("I"):
        return complex(0.0, float(lexeme[:-1]))
    return complex(float(lexeme), 0.0)


class _Parser:
    def __init__(self, tokens: list[Token], notes: list[str] | None):
        if not tokens or tokens[-1].kind is not TokenKind.EOF:
            end = tokens[-1].position + len(tokens[-1].lexeme.encode()) if tokens else 0
            tokens = list(tokens) + [Token(TokenKind.EOF, "", end)]
        self.tokens = tokens
        self.pos = 0
        self.depth = 0
        self.notes = notes

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        t = self.tokens[self.pos]
        if t.kind is not TokenKind.EOF:
            self.pos += 1
        return t

    def fail(self, *expected: str):
        t = self.tok
        found = "end of input" if t.kind is TokenKind.EOF else repr(t.lexeme)
        raise ParseError(t.position, frozenset(expected), found)

    def expect(self, kind: TokenKind) -> Token:
        if self.tok.kind is not kind:
            self.fail(kind.value)
        return self.advance()

    def parse(self):
        e = self.expr()
        if self.tok.kind is not TokenKind.EOF:
            self.fail("operator", "end of input")
        return e

    def expr(self):
        left = self.term()
        while self.tok.kind in (TokenKind.PLUS, TokenKind.MINUS):
            op = self.advance().kind
            right = self.term()
            left = Add(left, right) if op is TokenKind.PLUS else Sub(left, right)
        return left

    def term(self):
        start = self.tok.position
        left = self.unary()
        stars = 0
        while self.tok.kind is TokenKind.STAR:
            self.advance()
            stars += 1
            left = Mul(left, self.unary())
        if stars >= 2 and self.notes is not None:
            self.notes.append(
                f"note: product chain at offset {start} groups left, as ((a*b)*c)...; "
                "multiplication is non-associative, so parenthesize if you mean another grouping")
        return left

    def unary(self):
        negations = 0
        while self.tok.kind is TokenKind.MINUS:
            self.advance()
            negations += 1
        node = self.primary()
        for _ in range(negations):
            node = Neg(node)
        return node

    def primary(self):
        t = self.tok
        k = t.kind
        if k is TokenKind.NUMBER:
            self.advance()
            return ScalarLit(_number_value(t.lexeme))
        if k is TokenKind.IMAG_UNIT_I:
            self.advance()
            return ScalarLit(1j)
        if k is TokenKind.BASIS:
            self.advance()
            return Basis(BasisUnit.from_token(t.lexeme))
        if k is TokenKind.LPAREN:
            self.advance()
            e = self.nested()
            self.expect(TokenKind.RPAREN)
            return e
        if k is TokenKind.LBRACKET:
            self.advance()
            args = self.arguments(3, TokenKind.RBRACKET)
            return Bracket3(*args)
        if k is TokenKind.IDENT:
            self.advance()
            self.expect(TokenKind.LPAREN)
            return Call(t.lexeme, tuple(self.arguments(_FUNCTIONS[t.lexeme], TokenKind.RPAREN)))
        self.fail("primary")

    def nested(self):
        self.depth += 1
        if self.depth > MAX_NESTING:
            raise ParseError(self.tok.position, frozenset({"shallower nesting"}), "too many open groups")
        try:
            return self.expr()
        finally:
            self.depth -= 1

    def arguments(self, count: int, closer: TokenKind) -> list:
        args = [self.nested()]
        for _ in range(count - 1):
            self.expect(TokenKind.COMMA)
            args.append(self.nested())
        self.expect(closer)
        return args


def parse(tokens: list[Token], notes: list[str] | None = None):
    """Build the AST.  Grouping notes for ``*`` chains are appended to ``notes``."""
    return _Parser(tokens, notes).parse()


def _children(node) -> tuple:
    if isinstance(node, (ScalarLit, Basis)):
        return ()
    if isinstance(node, Neg):
        return (node.x,)
    if isinstance(node, (Add, Sub, Mul)):
        return (node.left, node.right)
    if isinstance(node, Bracket3):
        return (node.a, node.b, node.c)
    if isinstance(node, Call):
        return node.args
    raise TypeError(f"not an expression node: {node!r}")


def _apply(node, args: list[AlgebraElement]) -> AlgebraElement:
    if isinstance(node, ScalarLit):
        return scalar(node.value)
    if isinstance(node, Basis):
        return unit(node.unit)
    if isinstance(node, Neg):
        return -args[0]
    if isinstance(node, Add):
        return args[0] + args[1]
    if isinstance(node, Sub):
        return args[0] - args[1]
    if isinstance(node, Mul):
        return args[0] * args[1]
    if isinstance(node, Bracket3):
        return na_bracket(*args)
    if node.name == "comm":
        return commutator(*args)
    if node.name == "assoc":
        return associator(*args)
    raise ValueError(f"unknown function {node.name!r}")


def evaluate(e) -> AlgebraElement:
    """Evaluate an AST bottom-up (iteratively, so long chains are fine)."""
    stack = [(e, False)]
    values: list[AlgebraElement] = []
    with np.errstate(over="ignore", invalid="ignore"):
        while stack:
            node, ready = stack.pop()
            kids = _children(node)
            if kids and not ready:
                stack.append((node, True))
                stack.extend((child, False) for child in reversed(kids))
                continue
            args = values[len(values) - len(kids):] if kids else []
            if kids:
                del values[len(values) - len(kids):]
            values.append(_apply(node, args))
    result = values[0]
    if not result.is_finite():
        raise EvalError(0, "coefficient overflow")
    return result


def evaluate_text(text: str, notes: list[str] | None = None) -> AlgebraElement:
    return evaluate(parse(tokenize(text), notes))
