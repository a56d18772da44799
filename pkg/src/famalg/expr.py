"""Parser for polynomial and matrix expressions over named generators.

Grammar (whitespace is insignificant)::

    matrix  := "[" row ("," row)* "]"
    row     := "[" expr ("," expr)* "]"
    expr    := ("+" | "-")? term (("+" | "-") term)*
    term    := factor (("*" | "/") factor)*
    factor  := atom ("^" INT)?
    atom    := INT | NAME | "(" expr ")"

``/`` only accepts a nonzero constant on its right, so ``1/2*h`` reads as
``(1/2)*h``.  A sign is allowed only at the start of an expression (or just
inside parentheses), which keeps ``-h^2`` equal to ``-(h^2)``.  Every string
produced by ``SymPoly.to_str`` and ``MatPoly.to_str`` parses back to the same
value.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Sequence

from .family import MatPoly
from .poly import SymPoly

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


class ExpressionError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at column {pos + 1} in {text!r}")
        self.text = text
        self.pos = pos


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        if m.group(1) is not None:
            out.append(("int", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            out.append(("name", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*/^()[],":
                raise ExpressionError(f"unexpected character {ch!r}", text, m.start(3))
            out.append(("op", ch, m.start(3)))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str, names: Sequence[str]):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.index = {nm: k for k, nm in enumerate(names)}
        self.n = len(names)

    def peek(self) -> tuple[str, str, int]:
        return self.toks[self.i]

    def take(self) -> tuple[str, str, int]:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def fail(self, msg: str, tok=None):
        tok = tok or self.peek()
        raise ExpressionError(msg, self.text, tok[2])

    def expect(self, op: str) -> None:
        tok = self.take()
        if tok[0] != "op" or tok[1] != op:
            self.fail(f"expected {op!r}", tok)

    def is_op(self, *ops: str) -> bool:
        kind, val, _ = self.peek()
        return kind == "op" and val in ops

    def expr(self) -> SymPoly:
        neg = False
        if self.is_op("+", "-"):
            neg = self.take()[1] == "-"
        acc = self.term()
        if neg:
            acc = -acc
        while self.is_op("+", "-"):
            op = self.take()[1]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> SymPoly:
        acc = self.factor()
        while self.is_op("*", "/"):
            op = self.take()[1]
            tok = self.peek()
            rhs = self.factor()
            if op == "*":
                acc = acc * rhs
            else:
                if rhs.degree() > 0:
                    self.fail("can only divide by a constant", tok)
                c = rhs.constant_term()
                if not c:
                    self.fail("division by zero", tok)
                acc = acc.scale(1 / Fraction(c))
        return acc

    def factor(self) -> SymPoly:
        base = self.atom()
        if self.is_op("^"):
            self.take()
            tok = self.take()
            if tok[0] != "int":
                self.fail("exponent must be a nonnegative integer", tok)
            base = base ** int(tok[1])
        return base

    def atom(self) -> SymPoly:
        tok = self.take()
        kind, val, _ = tok
        if kind == "int":
            return SymPoly.const(self.n, int(val))
        if kind == "name":
            if val not in self.index:
                self.fail(f"unknown generator {val!r}", tok)
            return SymPoly.gen(self.n, self.index[val])
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        self.fail("expected a number, generator or '('", tok)

    def matrix(self) -> list[list[SymPoly]]:
        self.expect("[")
        rows = [self.row()]
        while self.is_op(","):
            self.take()
            rows.append(self.row())
        self.expect("]")
        return rows

    def row(self) -> list[SymPoly]:
        self.expect("[")
        row = [self.expr()]
        while self.is_op(","):
            self.take()
            row.append(self.expr())
        self.expect("]")
        return row

    def finish(self) -> None:
        if self.peek()[0] != "end":
            self.fail("trailing input")


def parse_poly(text: str, names: Sequence[str]) -> SymPoly:
    """Parse a polynomial in the generators ``names``."""
    p = _Parser(text, names)
    out = p.expr()
    p.finish()
    return out


def parse_matrix(text: str, names: Sequence[str], d: int) -> MatPoly:
    """Parse a ``d x d`` matrix expression; a bare polynomial ``a`` means ``Id (x) a``."""
    p = _Parser(text, names)
    if p.is_op("["):
        rows = p.matrix()
        p.finish()
        if len(rows) != d or any(len(r) != d for r in rows):
            shape = f"{len(rows)}x{max(len(r) for r in rows)}"
            raise ExpressionError(f"matrix must be {d}x{d}, got {shape}", text, 0)
        return MatPoly(rows)
    a = p.expr()
    p.finish()
    return MatPoly.scalar(d, a)
