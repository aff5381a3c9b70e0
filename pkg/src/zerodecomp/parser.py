"""Reader for ``.poly`` system files.

::

    vars x, y, z          # first line: variable order, lowest first
    x^2 + y + z - 1       # one polynomial per line
    (x + y)*z^2 + 3/2*z   # explicit '*', rational literals p/q

``#`` starts a comment.  LF and CRLF line endings are both accepted.
"""

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError
from .polyring import VarOrder

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


@dataclass(frozen=True)
class SystemFile:
    order: VarOrder
    polys: tuple
    source: str = ""


def _tokenize(text, line):
    tokens = []
    for m in _TOKEN.finditer(text):
        num, name, op = m.groups()
        col = m.start(m.lastindex) + 1 if m.lastindex else m.end() + 1
        if num is not None:
            tokens.append(("num", int(num), col))
        elif name is not None:
            tokens.append(("name", name, col))
        elif op is not None:
            if op not in "+-*/^()":
                raise ParseError(f"unexpected character {op!r}", line, col)
            tokens.append(("op", op, col))
    tokens.append(("end", None, len(text) + 1))
    return tokens


class _Parser:
    def __init__(self, text, order, line=None):
        self.order = order
        self.line = line
        self.tokens = _tokenize(text, line)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def error(self, message, tok=None):
        tok = tok or self.peek()
        raise ParseError(message, self.line, tok[2])

    def expect_op(self, op):
        tok = self.take()
        if tok[0] != "op" or tok[1] != op:
            self.error(f"expected {op!r}", tok)

    def parse(self):
        if self.peek()[0] == "end":
            self.error("empty expression")
        value = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            if tok[0] in ("num", "name") or tok[1] == "(":
                self.error("missing operator (multiplication needs an explicit '*')")
            self.error(f"unexpected {tok[1]!r}")
        return value

    def expr(self):
        value = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] == "*":
            self.take()
            value = value * self.unary()
        if self.peek()[0] == "op" and self.peek()[1] == "/":
            self.error("'/' is only allowed inside a rational literal p/q")
        return value

    def unary(self):
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.take()
            inner = self.unary()
            return -inner if tok[1] == "-" else inner
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            tok = self.take()
            if tok[0] != "num":
                self.error("exponent must be a non-negative integer literal", tok)
            base = base ** tok[1]
        return base

    def atom(self):
        tok = self.take()
        kind, val, _ = tok
        if kind == "num":
            if self.peek()[0] == "op" and self.peek()[1] == "/":
                self.take()
                den = self.take()
                if den[0] != "num":
                    self.error("expected an integer denominator", den)
                if den[1] == 0:
                    self.error("zero denominator", den)
                return self.order.const(Fraction(val, den[1]))
            return self.order.const(val)
        if kind == "name":
            if val not in self.order.names:
                self.error(f"undeclared variable {val!r}", tok)
            return self.order.var(val)
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        if kind == "end":
            self.error("unexpected end of expression", tok)
        if val == "/":
            self.error("'/' is only allowed inside a rational literal p/q", tok)
        self.error(f"unexpected {val!r}", tok)


def parse_polynomial(text, order, line=None):
    return _Parser(text, order, line).parse()


def _strip_comment(line):
    return line.split("#", 1)[0]


def parse_system(text):
    """Parse a ``.poly`` document into a :class:`SystemFile`."""
    order = None
    polys = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = _strip_comment(raw).rstrip("\r")
        if not body.strip():
            continue
        if order is None:
            head = body.strip()
            if not re.match(r"vars\b", head):
                raise ParseError("first line must declare the variables: 'vars x, y, ...'", lineno, 1)
            names = [t for t in re.split(r"[,\s]+", head[4:].strip()) if t]
            if not names:
                raise ParseError("no variables declared", lineno, 1)
            for name in names:
                if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name):
                    raise ParseError(f"bad variable name {name!r}", lineno, 1)
            if len(set(names)) != len(names):
                raise ParseError("duplicate variable names", lineno, 1)
            order = VarOrder(names)
            continue
        polys.append(parse_polynomial(body, order, lineno))
    if order is None:
        raise ParseError("missing 'vars' declaration")
    if not polys:
        raise ParseError("the system has no polynomials")
    return SystemFile(order, tuple(polys), text)


def format_system(order, polys):
    lines = ["vars " + ", ".join(order.names)]
    lines.extend(str(f) for f in polys)
    return "\n".join(lines) + "\n"


def parse_point(text, order):
    """``"1,0,-1/2"`` -> tuple of Fractions matching ``order``."""
    parts = [p.strip() for p in text.split(",")]
    try:
        point = tuple(Fraction(p) for p in parts)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad point {text!r}; expected comma-separated rationals") from None
    if len(point) != len(order):
        raise ParseError(f"point has {len(point)} coordinates, expected {len(order)}")
    return point


__all__ = ["SystemFile", "parse_system", "parse_polynomial", "parse_point", "format_system"]
