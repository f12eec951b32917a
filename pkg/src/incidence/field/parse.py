"""Recursive-descent parser for the element grammar.

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := "-" unary | power
    power  := atom ("^" INT)?
    atom   := INT | IDENT | "(" expr ")"

Rationals are written as integer quotients (``3/4``).  Evaluation happens
while parsing, so the result is already canonical.
"""

from __future__ import annotations

import re

from ..errors import ElementSyntaxError, UnknownGeneratorError

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


def _tokenize(expr: str) -> list[tuple[str, str]]:
    tokens = []
    for m in _TOKEN.finditer(expr):
        num, ident, sym = m.groups()
        if num is not None:
            tokens.append(("int", num))
        elif ident is not None:
            tokens.append(("ident", ident))
        elif sym is not None:
            if sym.isspace():
                continue
            if sym not in "+-*/^()":
                raise ElementSyntaxError(f"unexpected character {sym!r} in {expr!r}")
            tokens.append(("op", sym))
    return tokens


class _Parser:
    def __init__(self, expr: str, tower):
        self.expr = expr
        self.tokens = _tokenize(expr)
        self.pos = 0
        self.K = tower.field
        self.gens = tower.generator_raws

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self, value=None):
        kind, tok = self.peek()
        if kind is None or (value is not None and tok != value):
            want = repr(value) if value else "a token"
            raise ElementSyntaxError(f"expected {want} at position {self.pos} in {self.expr!r}")
        self.pos += 1
        return kind, tok

    def parse(self):
        if not self.tokens:
            raise ElementSyntaxError("empty expression")
        value = self.expr_()
        if self.pos != len(self.tokens):
            raise ElementSyntaxError(f"trailing input {self.peek()[1]!r} in {self.expr!r}")
        return value

    def expr_(self):
        K = self.K
        acc = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            _, op = self.take()
            rhs = self.term()
            acc = K.add(acc, rhs) if op == "+" else K.sub(acc, rhs)
        return acc

    def term(self):
        K = self.K
        acc = self.unary()
        while self.peek() in (("op", "*"), ("op", "/")):
            _, op = self.take()
            rhs = self.unary()
            acc = K.mul(acc, rhs) if op == "*" else K.mul(acc, K.inv(rhs))
        return acc

    def unary(self):
        if self.peek() == ("op", "-"):
            self.take()
            return self.K.neg(self.unary())
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() != ("op", "^"):
            return base
        self.take()
        kind, tok = self.take()
        if kind != "int":
            raise ElementSyntaxError(f"exponent must be a nonnegative integer literal in {self.expr!r}")
        K = self.K
        e, acc = int(tok), K.one
        while e:
            if e & 1:
                acc = K.mul(acc, base)
            e >>= 1
            if e:
                base = K.mul(base, base)
        return acc

    def atom(self):
        kind, tok = self.take()
        if kind == "int":
            return self.K.from_int(int(tok))
        if kind == "ident":
            try:
                return self.gens[tok]
            except KeyError:
                raise UnknownGeneratorError(f"unknown generator {tok!r} in {self.expr!r}") from None
        if tok == "(":
            value = self.expr_()
            self.take(")")
            return value
        raise ElementSyntaxError(f"unexpected {tok!r} in {self.expr!r}")


def parse_raw(expr: str, tower):
    return _Parser(expr, tower).parse()


def parse_element(expr: str, tower):
    """Parse ``expr`` into the canonical element of ``tower`` it denotes."""
    from .tower import FieldElement

    return FieldElement(tower, parse_raw(expr, tower))
