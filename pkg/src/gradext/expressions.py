"""Homogeneous polynomial expressions over named degree-one variables.

Grammar (whitespace ignored, juxtaposition not allowed)::

    expr   := term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := rational | 'alpha' ('^' signed-integer)? | variable

A leading sign on the first term is accepted.  ``rational`` is an integer or
``p/q``.  Coefficients are kept as Laurent monomials in ``alpha`` until
:func:`resolve_alpha` substitutes a value.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .linalg import scalar_str


class ExpressionError(ValueError):
    """Raised on malformed or inhomogeneous expressions."""


Monomial = tuple[str, ...]  # sorted multiset of variable names
# coefficient: {alpha exponent: rational}
Coeff = tuple[tuple[int, Fraction], ...]


@dataclass(frozen=True)
class PolyExpr:
    """Sum of ``coefficient * monomial`` with coefficients in Q[alpha, 1/alpha].

    ``terms`` is sorted by monomial and has no zero coefficients.
    """

    terms: tuple[tuple[Coeff, Monomial], ...]

    @classmethod
    def from_dict(cls, data: dict[Monomial, dict[int, Fraction]]) -> "PolyExpr":
        terms = []
        for mono in sorted(data):
            coeff = tuple(sorted((e, c) for e, c in data[mono].items() if c))
            if coeff:
                terms.append((coeff, mono))
        return cls(tuple(terms))

    def is_zero(self) -> bool:
        return not self.terms

    def has_alpha(self) -> bool:
        return any(e != 0 for coeff, _ in self.terms for e, _ in coeff)

    def rational_terms(self) -> list[tuple[Fraction, Monomial]]:
        """Terms as ``(rational, monomial)``; requires alpha already resolved."""
        if self.has_alpha():
            raise ExpressionError("expression still contains alpha; resolve it first")
        return [(dict(coeff)[0], mono) for coeff, mono in self.terms]

    def __str__(self) -> str:
        pieces = []
        for coeff, mono in self.terms:
            for e, c in coeff:
                factors = []
                if abs(c) != 1 or (e == 0 and not mono):
                    factors.append(scalar_str(abs(c)))
                if e:
                    factors.append("alpha" if e == 1 else f"alpha^{e}")
                pieces.append(("-" if c < 0 else "+", "*".join(factors + list(mono))))
        if not pieces:
            return "0"
        out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out


_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_][A-Za-z_0-9]*)|(\^)|([-+*])|(\S))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        num, ident, caret, op, bad = m.groups()
        if bad is not None:
            raise ExpressionError(f"unexpected character {bad!r} in {text!r}")
        if num is not None:
            tokens.append(("num", num))
        elif ident is not None:
            tokens.append(("ident", ident))
        elif caret is not None:
            tokens.append(("^", caret))
        else:
            tokens.append((op, op))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str, variables: list[str]):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0
        self.variables = set(variables)

    def peek(self) -> str | None:
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def take(self) -> tuple[str, str]:
        if self.pos >= len(self.tokens):
            raise ExpressionError(f"unexpected end of expression in {self.text!r}")
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def parse(self) -> PolyExpr:
        if not self.tokens:
            raise ExpressionError("empty expression")
        acc: dict[Monomial, dict[int, Fraction]] = {}
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
        while True:
            coeff, exp, mono = self.term()
            slot = acc.setdefault(mono, {})
            slot[exp] = slot.get(exp, Fraction(0)) + sign * coeff
            kind = self.peek()
            if kind is None:
                break
            if kind not in ("+", "-"):
                raise ExpressionError(f"expected '+' or '-' in {self.text!r}")
            sign = -1 if self.take()[0] == "-" else 1
        return PolyExpr.from_dict(acc)

    def term(self) -> tuple[Fraction, int, Monomial]:
        coeff, exp, names = Fraction(1), 0, []
        while True:
            kind, value = self.take()
            if kind == "num":
                num, _, den = value.partition("/")
                if den and int(den) == 0:
                    raise ExpressionError(f"division by zero in {value!r}")
                coeff *= Fraction(int(num), int(den) if den else 1)
            elif kind == "ident" and value == "alpha":
                e = 1
                if self.peek() == "^":
                    self.take()
                    neg = False
                    if self.peek() in ("+", "-"):
                        neg = self.take()[0] == "-"
                    k, v = self.take()
                    if k != "num" or "/" in v:
                        raise ExpressionError(f"alpha exponent must be an integer in {self.text!r}")
                    e = -int(v) if neg else int(v)
                exp += e
            elif kind == "ident":
                if value not in self.variables:
                    raise ExpressionError(f"unknown identifier {value!r}")
                names.append(value)
            else:
                raise ExpressionError(f"unexpected token {value!r} in {self.text!r}")
            if self.peek() != "*":
                return coeff, exp, tuple(sorted(names))
            self.take()


def parse(text: str, variables: list[str]) -> PolyExpr:
    """Parse ``text`` over the given variable names."""
    if len(set(variables)) != len(variables):
        raise ExpressionError("variable names must be distinct")
    if "alpha" in variables:
        raise ExpressionError("'alpha' is reserved")
    return _Parser(text, list(variables)).parse()


def resolve_alpha(e: PolyExpr, alpha) -> PolyExpr:
    """Substitute a nonzero rational for alpha."""
    alpha = Fraction(alpha)
    if alpha == 0:
        raise ExpressionError("alpha must be nonzero")
    acc: dict[Monomial, dict[int, Fraction]] = {}
    for coeff, mono in e.terms:
        value = sum((c * alpha ** k for k, c in coeff), Fraction(0))
        slot = acc.setdefault(mono, {})
        slot[0] = slot.get(0, Fraction(0)) + value
    return PolyExpr.from_dict(acc)


def homogeneous_degree(e: PolyExpr) -> int:
    if e.is_zero():
        raise ExpressionError("zero expression has no degree")
    degrees = {len(mono) for _, mono in e.terms}
    if len(degrees) != 1:
        raise ExpressionError(f"inhomogeneous expression {e} (degrees {sorted(degrees)})")
    return degrees.pop()
