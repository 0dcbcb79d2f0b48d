"""Input parsing: polynomial expressions and session descriptions.

A session is ``p=<int>; vars=<id>(,<id>)*; f=<polynomial-expr>;`` with the
three statements in that order. Polynomial syntax allows integer
coefficients, ``+ - * ^`` and parentheses; implicit multiplication is a
syntax error. All errors carry the character position.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .ring import GREVLEX, Polynomial, PolyRing, PrimeField

_OPS = set("+-*^(),;=")


def _tokenize(text: str, base: int = 0):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("num", text[i:j], base + i))
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j], base + i))
            i = j
        elif ch in _OPS:
            tokens.append(("op", ch, base + i))
            i += 1
        else:
            raise InputError(f"unexpected character {ch!r}", base + i)
    tokens.append(("end", "", base + len(text)))
    return tokens


class _ExprParser:
    def __init__(self, tokens, ring: PolyRing):
        self.tokens = tokens
        self.pos = 0
        self.ring = ring

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, op):
        kind, text, at = self.peek()
        if kind != "op" or text != op:
            raise InputError(f"expected {op!r}, found {text or 'end of input'!r}", at)
        return self.advance()

    def parse(self) -> Polynomial:
        value = self.expr()
        kind, text, at = self.peek()
        if kind != "end":
            raise InputError(f"unexpected {text!r} after expression", at)
        return value

    def expr(self) -> Polynomial:
        value = self.term()
        while True:
            kind, text, _ = self.peek()
            if kind == "op" and text in "+-":
                self.advance()
                rhs = self.term()
                value = value + rhs if text == "+" else value - rhs
            else:
                return value

    def term(self) -> Polynomial:
        value = self.unary()
        while True:
            kind, text, _ = self.peek()
            if kind == "op" and text == "*":
                self.advance()
                value = value * self.unary()
            else:
                return value

    def unary(self) -> Polynomial:
        kind, text, _ = self.peek()
        if kind == "op" and text == "-":
            self.advance()
            return -self.unary()
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        kind, text, _ = self.peek()
        if kind == "op" and text == "^":
            self.advance()
            kind, text, at = self.advance()
            if kind != "num":
                raise InputError("exponent must be a non-negative integer", at)
            return base ** int(text)
        return base

    def atom(self) -> Polynomial:
        kind, text, at = self.advance()
        if kind == "num":
            return self.ring.constant(int(text))
        if kind == "name":
            if text not in self.ring.vars:
                raise InputError(f"unknown variable {text!r}", at)
            return self.ring.gen(text)
        if kind == "op" and text == "(":
            value = self.expr()
            self.expect_op(")")
            return value
        raise InputError(f"expected a term, found {text or 'end of input'!r}", at)


def parse_polynomial(text: str, ring: PolyRing, base: int = 0) -> Polynomial:
    return _ExprParser(_tokenize(text, base), ring).parse()


@dataclass
class SessionSpec:
    """A parsed problem statement: prime, variables, splitting candidate."""

    p: int
    variables: tuple[str, ...]
    f: Polynomial
    source: str = ""

    @property
    def ring(self) -> PolyRing:
        return self.f.ring

    def render(self) -> str:
        return f"p={self.p}; vars={','.join(self.variables)}; f={self.f};"

    def __eq__(self, other):
        return (
            isinstance(other, SessionSpec)
            and self.p == other.p
            and self.variables == other.variables
            and self.f == other.f
        )


def parse_input(text: str) -> SessionSpec:
    """Parse ``p=..; vars=..; f=..;`` into a validated SessionSpec."""
    statements = []
    start = 0
    for i, ch in enumerate(text):
        if ch == ";":
            statements.append((text[start:i], start))
            start = i + 1
    if text[start:].strip():
        raise InputError("missing trailing ';'", len(text))
    if len(statements) != 3:
        raise InputError(
            f"expected exactly 3 statements 'p=..; vars=..; f=..;', got {len(statements)}"
        )

    def split_kv(stmt, at, expected_key):
        if "=" not in stmt:
            raise InputError(f"expected '{expected_key}=...'", at)
        key, _, value = stmt.partition("=")
        if key.strip() != expected_key:
            raise InputError(
                f"expected key {expected_key!r}, found {key.strip()!r}", at
            )
        return value, at + stmt.index("=") + 1

    p_text, p_at = split_kv(statements[0][0], statements[0][1], "p")
    try:
        p = int(p_text.strip())
    except ValueError:
        raise InputError(f"p must be an integer, got {p_text.strip()!r}", p_at)
    field = PrimeField(p)  # raises NOT_PRIME for composite p

    vars_text, vars_at = split_kv(statements[1][0], statements[1][1], "vars")
    names = tuple(v.strip() for v in vars_text.split(","))
    for v in names:
        if not v or not (v[0].isalpha() or v[0] == "_") or not all(
            c.isalnum() or c == "_" for c in v
        ):
            raise InputError(f"bad variable name {v!r}", vars_at)
    ring = PolyRing(field, names, GREVLEX)

    f_text, f_at = split_kv(statements[2][0], statements[2][1], "f")
    f = parse_polynomial(f_text, ring, base=f_at)
    return SessionSpec(p=p, variables=names, f=f, source=text)
