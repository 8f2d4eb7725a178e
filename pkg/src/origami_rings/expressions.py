"""Parser for exact value expressions.

The grammar covers integers, fractions, sqrt of a nonnegative rational,
sin/cos of rational multiples of pi, parentheses and the four
arithmetic operations:

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := '-'* atom
    atom   := NUMBER | NUMBER '/' NUMBER
            | 'sqrt' '(' rational ')'
            | ('sin' | 'cos') '(' pifraction ')'
            | '(' expr ')'

A pi fraction looks like pi, pi/4, 2pi/15 or 2*pi/15.  Parse errors
carry the offending token and its position.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .angles import Angle
from .cyclotomic import CyclotomicReal, cos_of, sin_of, sqrt_rational


class ExpressionError(ValueError):
    """Raised for unparseable or invalid value expressions."""

    def __init__(self, message: str, token: str = "", position: int = -1):
        self.token = token
        self.position = position
        if token:
            message = f"{message}: {token!r} at position {position}"
        super().__init__(message)


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<number>\d+)|(?P<name>pi|sqrt|sin|cos)|(?P<op>[-+*/()]|·))"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            rest = text[pos:].strip()
            if not rest:
                break
            raise ExpressionError("unexpected character", rest[0], pos)
        if m.group("number"):
            tokens.append(("number", m.group("number"), m.start("number")))
        elif m.group("name"):
            tokens.append(("name", m.group("name"), m.start("name")))
        else:
            op = "*" if m.group("op") == "·" else m.group("op")
            tokens.append(("op", op, m.start("op")))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.index = 0

    def peek(self):
        if self.index < len(self.tokens):
            return self.tokens[self.index]
        return ("end", "", len(self.text))

    def advance(self):
        token = self.peek()
        self.index += 1
        return token

    def expect_op(self, op: str):
        kind, value, pos = self.advance()
        if kind != "op" or value != op:
            raise ExpressionError(f"expected {op!r}", value or "end of input", pos)

    def parse(self) -> CyclotomicReal:
        value = self.expr()
        kind, text, pos = self.peek()
        if kind != "end":
            raise ExpressionError("trailing input", text, pos)
        return value

    def expr(self) -> CyclotomicReal:
        value = self.term()
        while True:
            kind, op, _ = self.peek()
            if kind == "op" and op in "+-":
                self.advance()
                right = self.term()
                value = value + right if op == "+" else value - right
            else:
                return value

    def term(self) -> CyclotomicReal:
        value = self.factor()
        while True:
            kind, op, pos = self.peek()
            if kind == "op" and op in "*/":
                self.advance()
                right = self.factor()
                if op == "*":
                    value = value * right
                else:
                    if right.is_zero:
                        raise ExpressionError("division by zero", "/", pos)
                    value = value / right
            else:
                return value

    def factor(self) -> CyclotomicReal:
        kind, value, _ = self.peek()
        if kind == "op" and value == "-":
            self.advance()
            return -self.factor()
        return self.atom()

    def atom(self) -> CyclotomicReal:
        kind, value, pos = self.advance()
        if kind == "number":
            return CyclotomicReal.from_rational(int(value))
        if kind == "op" and value == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        if kind == "name" and value == "sqrt":
            self.expect_op("(")
            radicand = self.signed_rational()
            self.expect_op(")")
            if radicand < 0:
                raise ExpressionError(
                    "sqrt of a negative rational", str(radicand), pos
                )
            return sqrt_rational(radicand)
        if kind == "name" and value in ("sin", "cos"):
            self.expect_op("(")
            multiple = self.pi_fraction()
            self.expect_op(")")
            folded = multiple % 2
            flip = False
            if folded >= 1:
                folded -= 1
                flip = True
            angle = Angle(folded.numerator, folded.denominator)
            out = sin_of(angle) if value == "sin" else cos_of(angle)
            return -out if flip else out
        raise ExpressionError("expected a value", value or "end of input", pos)

    def signed_rational(self) -> Fraction:
        negative = False
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value == "-":
                self.advance()
                negative = not negative
            else:
                break
        kind, value, pos = self.advance()
        if kind != "number":
            raise ExpressionError("expected a rational", value or "end", pos)
        out = Fraction(int(value))
        kind, op, _ = self.peek()
        if kind == "op" and op == "/":
            self.advance()
            kind, value, pos = self.advance()
            if kind != "number" or int(value) == 0:
                raise ExpressionError("expected a nonzero denominator", value, pos)
            out /= int(value)
        return -out if negative else out

    def pi_fraction(self) -> Fraction:
        """A nonnegative rational multiple of pi, as the multiplier.

        Accepts pi, pi/4, 2pi/15, 2*pi/15 and the bare zero angle 0.
        """
        numerator = 1
        kind, value, pos = self.advance()
        if kind == "number":
            numerator = int(value)
            next_kind, next_value, _ = self.peek()
            if numerator == 0 and not (next_kind == "name" and next_value == "pi"):
                return Fraction(0)
            if next_kind == "op" and next_value == "*":
                self.advance()
            kind, value, pos = self.advance()
        if not (kind == "name" and value == "pi"):
            raise ExpressionError("expected pi", value or "end", pos)
        denominator = 1
        kind, op, _ = self.peek()
        if kind == "op" and op == "/":
            self.advance()
            kind, value, pos = self.advance()
            if kind != "number" or int(value) == 0:
                raise ExpressionError("expected a nonzero denominator", value, pos)
            denominator = int(value)
        return Fraction(numerator, denominator)


def parse_expression(text: str) -> CyclotomicReal:
    """Evaluate a value expression to an exact cyclotomic real."""
    if not text.strip():
        raise ExpressionError("empty expression")
    return _Parser(text).parse()
