"""Polynomial input language and text/JSON serialization.

Grammar (no implicit multiplication; ``/`` only inside rational literals)::

    expr   := term (("+" | "-") term)*
    term   := unary ("*" unary)*
    unary  := "-" unary | power
    power  := atom ("^" INTEGER)?
    atom   := INTEGER ("/" INTEGER)? | VARIABLE | "(" expr ")"
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InputError, ParseError
from .forms import HForm, MovingForm
from .mpoly import MPoly, ST, XYZW
from .rational import to_string

_TOKEN = re.compile(r"(?P<space>\s+)|(?P<integer>\d+)|(?P<variable>[A-Za-z_]\w*)|(?P<symbol>.)", re.S)

_ATOM_START = frozenset({"integer", "variable", "(", "-"})


class _Parser:
    def __init__(self, text: str, gens: Sequence[str]):
        self.text = text
        self.gens = tuple(gens)
        self.tokens = self._tokenize(text)
        self.pos = 0

    def _tokenize(self, text):
        tokens = []
        for m in _TOKEN.finditer(text):
            kind = m.lastgroup
            if kind == "space":
                continue
            offset = len(text[:m.start()].encode())
            value = m.group()
            tokens.append((value if kind == "symbol" else kind, value, offset))
        tokens.append(("end", "", len(text.encode())))
        return tokens

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, tok, expected, message=None):
        kind, value, offset = tok
        if message is None:
            message = "unexpected end of input" if kind == "end" else f"unexpected {value!r}"
        raise ParseError(message, offset, frozenset(expected))

    def parse(self) -> MPoly:
        result = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            if tok[0] == "/":
                self.fail(tok, {"+", "-", "*", "end"}, "division is only allowed inside a rational literal")
            self.fail(tok, {"+", "-", "*", "^", "end"})
        return result

    def expr(self) -> MPoly:
        result = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self) -> MPoly:
        result = self.unary()
        while self.peek()[0] == "*":
            self.take()
            result = result * self.unary()
        return result

    def unary(self) -> MPoly:
        if self.peek()[0] == "-":
            self.take()
            return -self.unary()
        return self.power()

    def power(self) -> MPoly:
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            tok = self.take()
            if tok[0] != "integer":
                self.fail(tok, {"integer"}, "exponent must be a nonnegative integer literal")
            base = base ** int(tok[1])
            if self.peek()[0] == "^":
                self.fail(self.peek(), {"+", "-", "*", ")", "end"}, "chained exponents need parentheses")
        return base

    def atom(self) -> MPoly:
        tok = self.take()
        kind = tok[0]
        if kind == "integer":
            value = Fraction(int(tok[1]))
            if self.peek()[0] == "/":
                self.take()
                den = self.take()
                if den[0] != "integer":
                    self.fail(den, {"integer"}, "division is only allowed inside a rational literal")
                if int(den[1]) == 0:
                    self.fail(den, {"integer"}, "zero denominator")
                value /= int(den[1])
            return MPoly.constant(value, self.gens)
        if kind == "variable":
            if tok[1] not in self.gens:
                self.fail(tok, {"integer", "(", "-"} | set(self.gens), f"unknown variable {tok[1]!r}")
            return MPoly.gen(tok[1], self.gens)
        if kind == "(":
            inner = self.expr()
            close = self.take()
            if close[0] != ")":
                self.fail(close, {")", "+", "-", "*", "^"})
            return inner
        self.fail(tok, _ATOM_START)


def parse_poly(text: str, gens: Sequence[str] = ST) -> MPoly:
    """Parse and expand a polynomial in the given variables (default s, t)."""
    return _Parser(text, gens).parse()


def _format_number(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_mpoly(f: MPoly, affine_w: bool = False) -> str:
    """Human-readable form in canonical term order, e.g. ``"x*y - z*w"``.

    ``affine_w`` sets w = 1 first.  The output parses back to ``f``.
    """
    if affine_w and "w" in f.gens:
        f = f.drop_gen("w")
    if f.is_zero:
        return "0"
    out = []
    for exps, c in f.sorted_terms():
        mono = "*".join(v if e == 1 else f"{v}^{e}" for v, e in zip(f.gens, exps) if e)
        mag = abs(Fraction(c))
        if not mono:
            body = _format_number(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_format_number(mag)}*{mono}"
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("- " if c < 0 else "+ ") + body)
    return " ".join(out)


def format_hform(h: HForm) -> str:
    """A binary form written affinely in s (sbar = 1)."""
    return format_mpoly(MPoly({(i,): c for i, c in enumerate(h.coeffs)}, ("s",)))


def format_moving(m: MovingForm) -> str:
    return " + ".join(f"({format_hform(h)})*{v}" for h, v in zip(m.coeffs, XYZW) if not h.is_zero)


def read_poly_file(path: str) -> list[str]:
    """One polynomial per line; ``#`` starts a comment; blank lines are skipped."""
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    out = []
    for line in lines:
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


# JSON payloads; every rational is a "num/den" string.


def mpoly_terms_json(f: MPoly) -> dict[str, str]:
    return {",".join(map(str, exps)): to_string(c) for exps, c in f.sorted_terms()}


def mpoly_from_terms_json(data: dict[str, str], gens: Sequence[str] = XYZW) -> MPoly:
    return MPoly({tuple(int(e) for e in key.split(",")): Fraction(v) for key, v in data.items()}, gens)


def moving_json(m: MovingForm) -> dict:
    return {
        "degree": m.degree,
        "coeffs": {v: format_hform(h) for v, h in zip(XYZW, m.coeffs)},
    }


def mu_basis_json(forms: Iterable[MovingForm]) -> list[dict]:
    return [moving_json(m) for m in forms]


def matrix_json(matrix) -> list[list[str]]:
    return [[to_string(c) for c in row] for row in matrix]
