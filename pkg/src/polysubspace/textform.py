"""Parser for the text forms of scalars and polynomials.

Grammar (whitespace ignored)::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := ("+" | "-") unary | power
    power  := atom ("^" INT)?
    atom   := INT | "i" | "sqrt(" ["-"] INT ")" | VAR | "(" expr ")"

Division is only allowed by constants.  At most one radical may appear.
"""

from __future__ import annotations

import re
from typing import Optional, Sequence

from .errors import ParseError
from .exactfield import FieldElement, is_squarefree, squarefree_split
from .poly import Polynomial

_TOKEN = re.compile(r"\s*(?:(\d+)|(sqrt)|([A-Za-z_]\w*)|(\S))")


def _tokenize(text):
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        num, sqrt, name, sym = m.groups()
        col = m.start(m.lastindex) + 1
        if num is not None:
            tokens.append(("num", int(num), col))
        elif sqrt is not None:
            tokens.append(("sqrt", None, col))
        elif name is not None:
            tokens.append(("name", name, col))
        else:
            tokens.append(("sym", sym, col))
        pos = m.end()
    tokens.append(("end", None, len(text) + 1))
    return tokens


class _Parser:
    def __init__(self, text: str, variables: Sequence[str], d: Optional[int]):
        self.text = text
        self.tokens = _tokenize(text)
        self.k = 0
        self.variables = tuple(variables)
        self.d = d

    def peek(self):
        return self.tokens[self.k]

    def take(self):
        tok = self.tokens[self.k]
        self.k += 1
        return tok

    def fail(self, message, tok=None):
        tok = tok or self.peek()
        raise ParseError(f"{message} in {self.text!r}", column=tok[2])

    def expect(self, sym):
        tok = self.take()
        if tok[0] != "sym" or tok[1] != sym:
            self.fail(f"expected {sym!r}", tok)

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            self.fail("empty expression")
        value = self.expr()
        if self.peek()[0] != "end":
            self.fail("unexpected token")
        return value

    def expr(self):
        value = self.term()
        while self.peek()[0] == "sym" and self.peek()[1] in "+-":
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while self.peek()[0] == "sym" and self.peek()[1] in "*/":
            op = self.take()
            rhs = self.unary()
            if op[1] == "*":
                value = value * rhs
            else:
                if rhs.degree != 0:
                    self.fail("division by a non-constant or zero", op)
                value = value / rhs[0]
        return value

    def unary(self):
        tok = self.peek()
        if tok[0] == "sym" and tok[1] in "+-":
            self.take()
            value = self.unary()
            return -value if tok[1] == "-" else value
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "sym" and self.peek()[1] == "^":
            self.take()
            tok = self.take()
            if tok[0] != "num":
                self.fail("expected a non-negative integer exponent", tok)
            return base ** tok[1]
        return base

    def atom(self):
        tok = self.take()
        kind, val, _ = tok
        if kind == "num":
            return Polynomial([val])
        if kind == "sqrt":
            self.expect("(")
            neg = False
            if self.peek()[0] == "sym" and self.peek()[1] == "-":
                self.take()
                neg = True
            num = self.take()
            if num[0] != "num":
                self.fail("expected an integer radicand", num)
            self.expect(")")
            return Polynomial([self._sqrt(-num[1] if neg else num[1], num)])
        if kind == "name":
            if val == "i":
                return Polynomial([FieldElement.i()])
            if val in self.variables:
                return Polynomial([0, 1])
            self.fail(f"unknown name {val!r}", tok)
        if kind == "sym" and val == "(":
            value = self.expr()
            self.expect(")")
            return value
        self.fail("unexpected token", tok)

    def _sqrt(self, m: int, tok):
        if m == 0:
            return 0
        s, r = squarefree_split(m)
        if r == 1:
            return s
        if r == -1:
            return s * FieldElement.i()
        if self.d is None:
            self.d = r
        elif r != self.d:
            if r == -self.d:
                # convention: sqrt(-m) = i*sqrt(m) for m > 0
                return s * FieldElement(0, 0, 0, 1 if self.d > 0 else -1, d=self.d)
            self.fail(f"second radical sqrt({r}) alongside sqrt({self.d})", tok)
        assert is_squarefree(r)
        return s * FieldElement.sqrt(r)


def parse_expression(text: str, variables: Sequence[str] = ("z",), d: Optional[int] = None):
    """Parse ``text``; returns a scalar when ``variables`` is empty, else a Polynomial."""
    p = _Parser(text, variables, d).parse()
    if not variables:
        return p[0]
    return p


def parse_poly(text: str, deg_bound: Optional[int] = None, d: Optional[int] = None,
               var: str = "z") -> Polynomial:
    p = parse_expression(text, (var,), d)
    if deg_bound is None:
        deg_bound = max(p.degree, 0)
    return p.with_bound(deg_bound)
