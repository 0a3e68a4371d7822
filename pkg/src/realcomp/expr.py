"""Arithmetic expressions over exact reals.

Grammar (whitespace is ignored between tokens)::

    expr     := term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := rational | '(' expr ')' | 'lim' '(' ident ')'
    rational := ['-'] digits ['/' digits]

``a - b`` parses as ``Sum(a, Neg(b))``.  ``lim(...)`` names one of the builtin
efficiently Cauchy sequences in :data:`realcomp.reals.BUILTIN_SEQUENCES`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from . import reals

MAX_PREC = 256


class ParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at byte {offset}")
        self.offset = offset


@dataclass(frozen=True)
class Lit:
    value: Fraction


@dataclass(frozen=True)
class Neg:
    arg: "Expr"


@dataclass(frozen=True)
class Sum:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Product:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class EffLimit:
    sequence: str


Expr = Union[Lit, Neg, Sum, Product, EffLimit]

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m is None:  # only trailing whitespace left
                break
            number, ident, sym = m.groups()
            start = m.start(m.lastindex)
            if number is not None:
                self.tokens.append(("num", number, start))
            elif ident is not None:
                self.tokens.append(("ident", ident, start))
            else:
                self.tokens.append(("sym", sym, start))
            pos = m.end()
        self.i = 0

    def offset(self, char_index: int) -> int:
        return len(self.text[:char_index].encode("utf-8"))

    def peek(self) -> tuple[str, str, int]:
        if self.i < len(self.tokens):
            return self.tokens[self.i]
        return ("end", "", len(self.text))

    def advance(self) -> tuple[str, str, int]:
        tok = self.peek()
        self.i += 1
        return tok

    def error(self, message: str, tok=None):
        tok = tok or self.peek()
        raise ParseError(message, self.offset(tok[2]))

    def expect(self, sym: str) -> None:
        kind, value, _ = self.peek()
        if kind != "sym" or value != sym:
            shown = "end of input" if kind == "end" else repr(value)
            self.error(f"expected {sym!r}, found {shown}")
        self.advance()

    def parse(self) -> Expr:
        e = self.expr()
        if self.peek()[0] != "end":
            self.error(f"unexpected {self.peek()[1]!r}")
        return e

    def expr(self) -> Expr:
        left = self.term()
        while self.peek()[0] == "sym" and self.peek()[1] in "+-":
            op = self.advance()[1]
            right = self.term()
            left = Sum(left, right) if op == "+" else Sum(left, Neg(right))
        return left

    def term(self) -> Expr:
        left = self.factor()
        while self.peek()[:2] == ("sym", "*"):
            self.advance()
            left = Product(left, self.factor())
        return left

    def factor(self) -> Expr:
        kind, value, _ = self.peek()
        if kind == "sym" and value == "(":
            self.advance()
            e = self.expr()
            self.expect(")")
            return e
        if kind == "ident":
            if value != "lim":
                self.error(f"unknown function {value!r}")
            self.advance()
            self.expect("(")
            kind, ident, _ = tok = self.peek()
            if kind != "ident":
                self.error("expected a sequence name")
            if ident not in reals.BUILTIN_SEQUENCES:
                self.error(f"unknown builtin sequence {ident!r}", tok)
            self.advance()
            self.expect(")")
            return EffLimit(ident)
        return self.rational()

    def rational(self) -> Lit:
        negative = False
        if self.peek()[:2] == ("sym", "-"):
            self.advance()
            negative = True
        kind, digits, _ = self.peek()
        if kind != "num":
            shown = "end of input" if kind == "end" else repr(digits)
            self.error(f"expected a number, found {shown}")
        self.advance()
        value = Fraction(int(digits))
        if self.peek()[:2] == ("sym", "/"):
            self.advance()
            kind, den, _ = tok = self.peek()
            if kind != "num":
                self.error("expected a denominator")
            if int(den) == 0:
                self.error("zero denominator", tok)
            self.advance()
            value /= int(den)
        return Lit(-value if negative else value)


def parse_expr(text: str) -> Expr:
    return _Parser(text).parse()


def to_name(e: Expr) -> reals.RealName:
    if isinstance(e, Lit):
        return reals.rat_name(e.value)
    if isinstance(e, Neg):
        return reals.neg_realizer(to_name(e.arg))
    if isinstance(e, Sum):
        return reals.add_realizer(to_name(e.left), to_name(e.right))
    if isinstance(e, Product):
        return reals.mul_realizer(to_name(e.left), to_name(e.right))
    if isinstance(e, EffLimit):
        return reals.lim_eff_realizer(reals.BUILTIN_SEQUENCES[e.sequence])
    raise TypeError(f"not an expression: {e!r}")


def eval_expr(e: Expr, prec_exp: int, max_prec: int = MAX_PREC) -> Fraction:
    """A rational within ``2**-prec_exp`` of the value of ``e``."""
    if not 0 <= prec_exp <= max_prec:
        raise ValueError(f"precision must be between 0 and {max_prec}")
    return to_name(e)(Fraction(1, 1 << prec_exp))


def decimal_digits(prec_exp: int) -> int:
    """``ceil(prec_exp * log10(2)) + 1``, computed exactly."""
    target = 1 << prec_exp
    d, power = 0, 1
    while power < target:
        d += 1
        power *= 10
    return d + 1


def render(r: Fraction, prec_exp: int) -> str:
    """Two lines: the exact rational ``p/q`` and a truncated decimal with its error bound."""
    digits = decimal_digits(prec_exp)
    scaled = abs(r.numerator) * 10**digits // r.denominator
    int_part, frac_part = divmod(scaled, 10**digits)
    sign = "-" if r < 0 and scaled else ""
    decimal = f"{sign}{int_part}.{frac_part:0{digits}d}"
    return f"{r.numerator}/{r.denominator}\n{decimal} ±2^-{prec_exp}"
