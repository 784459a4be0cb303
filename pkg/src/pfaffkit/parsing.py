"""Text syntax for polynomials and differential forms.

    form   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor (('*' factor) | ('/' INT))*
    factor := atom ['^' INT] | '-' factor
    atom   := INT | z<i> | dz<i> ('^' dz<j>)* | '(' form ')'

``*`` between forms is the wedge product.  A caret after ``dz<i>`` continues
a wedge chain, anywhere else it is an exponent.
"""

from __future__ import annotations

import re
from fractions import Fraction
from pathlib import Path

from .exterior import DiffForm
from .ring import Ambient, Polynomial, format_polynomial

_TOKEN = re.compile(r"\s*(?:(?P<dz>dz(?P<dzi>\d+))|(?P<var>z(?P<vi>\d+))|(?P<num>\d+)|(?P<op>[-+*/^()]))")


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class _Parser:
    def __init__(self, text: str, ambient: Ambient, line: int):
        self.text = text
        self.ambient = ambient
        self.line = line
        self.tokens = self._tokenize()
        self.pos = 0

    def error(self, message, column=None):
        if column is None:
            column = self.tokens[self.pos][2] if self.pos < len(self.tokens) else len(self.text) + 1
        raise ParseError(message, self.line, column)

    def _tokenize(self):
        tokens = []
        i = 0
        text = self.text.rstrip()
        while i < len(text):
            m = _TOKEN.match(text, i)
            if not m:
                j = i
                while j < len(text) and text[j].isspace():
                    j += 1
                raise ParseError(f"unexpected character {text[j]!r}", self.line, j + 1)
            if m.group("dz"):
                tokens.append(("dz", int(m.group("dzi")), m.start("dz") + 1))
            elif m.group("var"):
                tokens.append(("var", int(m.group("vi")), m.start("var") + 1))
            elif m.group("num"):
                tokens.append(("num", int(m.group("num")), m.start("num") + 1))
            else:
                tokens.append((m.group("op"), None, m.start("op") + 1))
            i = m.end()
        return tokens

    def peek(self):
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def take(self, kind=None):
        if self.pos >= len(self.tokens):
            self.error("unexpected end of input")
        tok = self.tokens[self.pos]
        if kind is not None and tok[0] != kind:
            self.error(f"expected {kind!r}, found {tok[0]!r}")
        self.pos += 1
        return tok

    def parse(self) -> DiffForm:
        if not self.tokens:
            self.error("empty input")
        value = self.form()
        if self.pos != len(self.tokens):
            self.error(f"unexpected {self.peek()!r}")
        return value

    def form(self) -> DiffForm:
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
        value = self.term()
        if sign < 0:
            value = -value
        while self.peek() in ("+", "-"):
            op, _, col = self.take()
            rhs = self.term()
            if rhs.degree != value.degree and rhs and value:
                self.error(f"cannot add a {value.degree}-form and a {rhs.degree}-form", col)
            if not value:
                value = DiffForm.zero(self.ambient, rhs.degree)
            elif not rhs:
                rhs = DiffForm.zero(self.ambient, value.degree)
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> DiffForm:
        value = self.factor()
        while self.peek() in ("*", "/"):
            op = self.take()[0]
            if op == "*":
                value = value ^ self.factor()
            else:
                _, n, col = self.take("num")
                if n == 0:
                    self.error("division by zero", col)
                value = value * Fraction(1, n)
        return value

    def factor(self) -> DiffForm:
        if self.peek() == "-":
            self.take()
            return -self.factor()
        value = self.atom()
        if self.peek() == "^":
            col = self.tokens[self.pos][2]
            self.take()
            _, k, _ = self.take("num")
            if value.degree:
                self.error("exponent applied to a form of positive degree", col)
            p = value.coefficient() if value else Polynomial.zero(self.ambient)
            value = DiffForm.function(p ** k)
        return value

    def atom(self) -> DiffForm:
        kind, val, col = self.take()
        if kind == "num":
            return DiffForm.constant(self.ambient, val)
        if kind == "var":
            return DiffForm.function(Polynomial.variable(self.ambient, self._label(val, col)))
        if kind == "dz":
            labels = [self._label(val, col)]
            while (
                self.peek() == "^"
                and self.pos + 1 < len(self.tokens)
                and self.tokens[self.pos + 1][0] == "dz"
            ):
                self.take()
                _, v, c = self.take("dz")
                labels.append(self._label(v, c))
            return DiffForm.dz(self.ambient, *labels)
        if kind == "(":
            value = self.form()
            self.take(")")
            return value
        self.pos -= 1
        self.error(f"unexpected {kind!r}")

    def _label(self, label, col):
        if label not in self.ambient.labels:
            raise ParseError(
                f"variable index {label} outside ambient {self.ambient}", self.line, col
            )
        return label


def parse_form(text: str, ambient: Ambient, line: int = 1) -> DiffForm:
    return _Parser(text, ambient, line).parse()


def parse_polynomial(text: str, ambient: Ambient, line: int = 1) -> Polynomial:
    value = parse_form(text, ambient, line)
    if value.degree:
        raise ParseError(f"expected a polynomial, found a {value.degree}-form", line, 1)
    return value.coefficient()


def parse_polynomial_list(text: str, ambient: Ambient) -> list:
    """Comma or semicolon separated polynomials."""
    return [parse_polynomial(part, ambient) for part in re.split(r"[,;]", text) if part.strip()]


def read_lines(source: str):
    """Yield ``(line number, text)`` for non-blank lines, ``#`` comments stripped."""
    for n, raw in enumerate(source.splitlines(), start=1):
        text = raw.split("#", 1)[0]
        if text.strip():
            yield n, text


def parse_form_file(path, ambient: Ambient) -> list:
    """One form per line; blank lines and ``#`` comments are ignored."""
    source = Path(path).read_text(encoding="utf-8")
    return [parse_form(text, ambient, line=n) for n, text in read_lines(source)]


# -- printing -----------------------------------------------------------------

def _dz(form: DiffForm, idx) -> str:
    return "^".join(f"dz{lab}" for lab in idx)


def format_form(form: DiffForm) -> str:
    if form.degree == 0 or not form:
        return format_polynomial(form.coefficient()) if form.degree == 0 else "0"
    pieces = []
    for idx, p in form.items():
        lead = p.terms()[0][1]
        negative = lead < 0
        q = -p if negative else p
        if q == 1:
            body = _dz(form, idx)
        elif len(q) == 1:
            body = f"{format_polynomial(q)}*{_dz(form, idx)}"
        else:
            body = f"({format_polynomial(q)})*{_dz(form, idx)}"
        pieces.append((negative, body))
    out = ("-" if pieces[0][0] else "") + pieces[0][1]
    for negative, body in pieces[1:]:
        out += (" - " if negative else " + ") + body
    return out
