"""Parsing and printing rational expressions.

Grammar (whitespace-insensitive)::

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/') unary)*
    unary   := ('+' | '-') unary | power
    power   := atom ('^' exponent)?
    exponent:= ['+' | '-'] INT | '(' ['+' | '-'] INT ')'
    atom    := NUMBER | NAME | '(' expr ')'

NUMBER is an integer or a decimal literal, read exactly. ``^`` binds
tightest, so ``-x^2`` is ``-(x^2)``; binary operators associate left.

Output lists terms by decreasing total degree, ties broken by the
exponent of the first declared variable, then the second, and so on
(larger first). With variables ``a, b, c, x, y, z`` this prints
``a - 2*b*y^3*z^-3``; ``x + y`` prints as written.
A non-polynomial result prints as ``(numerator)/(denominator)``.
"""

import re
from fractions import Fraction

from ..algebra.laurent import LaurentPolynomial
from ..algebra.rational import RationalFunction
from ..errors import ParseError, UnknownIdentifierError

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:\.\d*)?|\.\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^()]))"
)


def _tokenize(text):
    pos = 0
    tokens = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", bad)
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text, variables):
        self.tokens = _tokenize(text)
        self.i = 0
        self.names = {name: k for k, name in enumerate(variables)}
        self.n = len(variables)

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        kind, val, pos = self.take()
        if val != value:
            raise ParseError(f"expected {value!r}, found {val or 'end of input'!r}", pos)

    def parse(self):
        if self.peek()[0] == "end":
            raise ParseError("empty expression", 0)
        value = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected token {val!r}", pos)
        return value

    def expr(self):
        value = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while self.peek()[1] in ("*", "/") and self.peek()[0] == "op":
            _, op, pos = self.take()
            rhs = self.unary()
            if op == "*":
                value = value * rhs
            else:
                if rhs.is_zero:
                    raise ParseError("division by zero", pos)
                value = value / rhs
        return value

    def unary(self):
        kind, val, _ = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            inner = self.unary()
            return -inner if val == "-" else inner
        return self.power()

    def power(self):
        base = self.atom()
        kind, val, pos = self.peek()
        if kind == "op" and val == "^":
            self.take()
            k = self.exponent()
            if k < 0 and base.is_zero:
                raise ParseError("zero raised to a negative power", pos)
            return base ** k
        return base

    def exponent(self):
        kind, val, pos = self.peek()
        paren = kind == "op" and val == "("
        if paren:
            self.take()
        sign = 1
        kind, val, pos = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        kind, val, pos = self.take()
        if kind != "num" or not val.isdigit():
            raise ParseError("exponent must be an integer", pos)
        if paren:
            self.expect(")")
        return sign * int(val)

    def atom(self):
        kind, val, pos = self.take()
        if kind == "num":
            return RationalFunction.constant(self.n, Fraction(val))
        if kind == "name":
            if val not in self.names:
                raise UnknownIdentifierError(f"unknown identifier {val!r}", pos)
            return RationalFunction.variable(self.n, self.names[val])
        if kind == "op" and val == "(":
            value = self.expr()
            self.expect(")")
            return value
        raise ParseError(f"unexpected {val or 'end of input'!r}", pos)


def parse_expr(text, variables):
    """Parse ``text`` over the ordered ``variables`` into a canonical RationalFunction."""
    return _Parser(text, list(variables)).parse()


def _format_scalar(c):
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _format_monomial(e, names):
    parts = []
    for name, p in zip(names, e):
        if p == 1:
            parts.append(name)
        elif p:
            parts.append(f"{name}^{p}")
    return "*".join(parts)


def _print_key(item):
    e = item[0]
    return (-sum(e), tuple(-v for v in e))


def format_laurent(p, names):
    if p.is_zero:
        return "0"
    out = []
    for e, c in sorted(p.items(), key=_print_key):
        mono = _format_monomial(e, names)
        neg = c < 0
        mag = -c if neg else c
        if not mono:
            body = _format_scalar(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_format_scalar(mag)}*{mono}"
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(out)


def format_expr(f, names):
    """Deterministic text for ``f`` that ``parse_expr`` maps back to ``f``."""
    if isinstance(f, LaurentPolynomial):
        return format_laurent(f, names)
    num = format_laurent(f.numerator(), names)
    if f.is_laurent():
        return num
    den = format_laurent(f.den, names)
    if len(f.numerator()) > 1 or num.startswith("-"):
        num = f"({num})"
    if len(f.den) > 1 or "*" in den or "/" in den:
        den = f"({den})"
    return f"{num}/{den}"
