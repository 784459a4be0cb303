"""Sparse multivariate polynomials over the rationals.

A polynomial lives over an :class:`Ambient`, a block of consecutively
labelled variables ``z<first> .. z<first+nvars-1>``.  Internally monomials
are exponent tuples indexed by position; the label offset only matters for
parsing, printing and the public index arguments.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence, Union

Monomial = tuple  # tuple[int, ...] of exponents, one per ambient position

ZERO = "zero"
INHOMOGENEOUS = "inhomogeneous"


class AmbientError(ValueError):
    """Objects over different variable sets were combined."""


@dataclass(frozen=True)
class Ambient:
    """The variable block ``z<first>, ..., z<first + nvars - 1>``."""

    nvars: int
    first: int = 0

    def __post_init__(self):
        if self.nvars < 0 or self.first < 0:
            raise ValueError(f"invalid ambient {self.nvars=} {self.first=}")

    def __len__(self) -> int:
        return self.nvars

    @property
    def labels(self) -> range:
        return range(self.first, self.first + self.nvars)

    def name(self, pos: int) -> str:
        return f"z{self.first + pos}"

    def position(self, label: int) -> int:
        """Map a variable label (the subscript of ``z``) to its position."""
        if not self.first <= label < self.first + self.nvars:
            raise IndexError(
                f"variable z{label} outside ambient z{self.first}..z{self.first + self.nvars - 1}"
            )
        return label - self.first

    def extend(self, extra: int = 1) -> "Ambient":
        return Ambient(self.nvars + extra, self.first)

    def __str__(self):
        if not self.nvars:
            return "<no variables>"
        return f"z{self.first}..z{self.first + self.nvars - 1}"


def check_ambient(a: Ambient, b: Ambient) -> None:
    if a != b:
        raise AmbientError(f"ambient mismatch: {a} vs {b}")


# -- monomials --------------------------------------------------------------

def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True iff ``a`` divides ``b``."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_coprime(a: Monomial, b: Monomial) -> bool:
    return not any(x and y for x, y in zip(a, b))


@dataclass(frozen=True)
class MonomialOrder:
    """Graded reverse lexicographic or lexicographic order.

    ``priority`` lists variable positions from most to least significant;
    ``None`` means position 0 is the largest variable.
    """

    kind: str = "grevlex"
    priority: tuple | None = None

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.priority is not None:
            pr = tuple(self.priority)
            if sorted(pr) != list(range(len(pr))):
                raise ValueError(f"priority {pr} is not a permutation")
            object.__setattr__(self, "priority", pr)

    def key(self, m: Monomial):
        """Sort key: larger monomials get larger keys."""
        if self.priority is not None:
            if len(self.priority) != len(m):
                raise AmbientError("order priority length differs from ambient")
            m = tuple(m[i] for i in self.priority)
        if self.kind == "lex":
            return m
        return (sum(m), tuple(-e for e in reversed(m)))


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")

Scalar = Union[int, Fraction]


class Polynomial:
    """Immutable sparse polynomial with :class:`~fractions.Fraction` coefficients."""

    __slots__ = ("ambient", "_terms", "_hash")

    def __init__(self, ambient: Ambient, terms: Mapping[Monomial, Scalar] | None = None):
        clean = {}
        n = ambient.nvars
        for m, c in (terms or {}).items():
            m = tuple(int(e) for e in m)
            if len(m) != n or any(e < 0 for e in m):
                raise ValueError(f"bad exponent vector {m} for {n} variables")
            c = Fraction(c)
            if c:
                clean[m] = c
        self.ambient = ambient
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, ambient, terms):
        # trusted path: terms already canonical (tuple keys, nonzero Fractions)
        p = cls.__new__(cls)
        p.ambient = ambient
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, ambient: Ambient) -> "Polynomial":
        return cls._raw(ambient, {})

    @classmethod
    def constant(cls, ambient: Ambient, c: Scalar) -> "Polynomial":
        c = Fraction(c)
        return cls._raw(ambient, {(0,) * ambient.nvars: c} if c else {})

    @classmethod
    def variable(cls, ambient: Ambient, label: int) -> "Polynomial":
        pos = ambient.position(label)
        m = tuple(1 if i == pos else 0 for i in range(ambient.nvars))
        return cls._raw(ambient, {m: Fraction(1)})

    @classmethod
    def monomial(cls, ambient: Ambient, exponents: Monomial, c: Scalar = 1) -> "Polynomial":
        return cls(ambient, {tuple(exponents): c})

    # -- inspection ---------------------------------------------------------

    def terms(self, order: MonomialOrder = GREVLEX) -> list:
        """``(monomial, coefficient)`` pairs, largest monomial first."""
        return sorted(self._terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def coefficient(self, m: Monomial) -> Fraction:
        return self._terms.get(tuple(m), Fraction(0))

    def monomials(self):
        return self._terms.keys()

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return all(not any(m) for m in self._terms)

    def constant_value(self) -> Fraction:
        return self._terms.get((0,) * self.ambient.nvars, Fraction(0))

    def total_degree(self) -> int:
        """Largest total degree of a term; -1 for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    def homogeneous_degree(self):
        """Common total degree of all terms, or ``ZERO`` / ``INHOMOGENEOUS``."""
        degrees = {sum(m) for m in self._terms}
        if not degrees:
            return ZERO
        if len(degrees) > 1:
            return INHOMOGENEOUS
        return degrees.pop()

    def leading(self, order: MonomialOrder = GREVLEX):
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self._terms, key=order.key)
        return m, self._terms[m]

    def variables(self) -> list[int]:
        """Labels of the variables that actually occur."""
        used = set()
        for m in self._terms:
            used.update(i for i, e in enumerate(m) if e)
        return [self.ambient.first + i for i in sorted(used)]

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            check_ambient(self.ambient, other.ambient)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.ambient, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial._raw(self.ambient, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.ambient, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = mono_mul(m1, m2)
                v = out.get(m, 0) + c1 * c2
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return Polynomial._raw(self.ambient, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Polynomial.constant(self.ambient, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c: Scalar) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return Polynomial.zero(self.ambient)
        return Polynomial._raw(self.ambient, {m: v * c for m, v in self._terms.items()})

    def mul_term(self, mono: Monomial, c: Scalar) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return Polynomial.zero(self.ambient)
        return Polynomial._raw(
            self.ambient, {mono_mul(m, mono): v * c for m, v in self._terms.items()}
        )

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.ambient, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ambient == other.ambient and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ambient, frozenset(self._terms.items())))
        return self._hash

    # -- calculus and substitution -----------------------------------------

    def diff(self, label: int) -> "Polynomial":
        """Formal partial derivative with respect to ``z<label>``."""
        pos = self.ambient.position(label)
        return self._diff_pos(pos)

    def _diff_pos(self, pos: int) -> "Polynomial":
        out = {}
        for m, c in self._terms.items():
            e = m[pos]
            if e:
                out[m[:pos] + (e - 1,) + m[pos + 1:]] = c * e
        return Polynomial._raw(self.ambient, out)

    def substitute(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Replace each variable (in position order) by the matching image."""
        if len(images) != self.ambient.nvars:
            raise AmbientError(
                f"substitution needs {self.ambient.nvars} images, got {len(images)}"
            )
        if not images:
            return self
        target = images[0].ambient
        for img in images:
            check_ambient(target, img.ambient)
        powers = [{0: Polynomial.constant(target, 1)} for _ in images]

        def power(i, e):
            cache = powers[i]
            if e not in cache:
                cache[e] = power(i, e - 1) * images[i]
            return cache[e]

        result = Polynomial.zero(target)
        for m, c in self._terms.items():
            term = Polynomial.constant(target, c)
            for i, e in enumerate(m):
                if e:
                    term = term * power(i, e)
            result = result + term
        return result

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        if len(point) != self.ambient.nvars:
            raise AmbientError("point has wrong length")
        total = Fraction(0)
        for m, c in self._terms.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v *= Fraction(x) ** e
            total += v
        return total

    def primitive(self, order: MonomialOrder = GREVLEX) -> "Polynomial":
        """Scale to coprime integer coefficients with positive leading coefficient."""
        if not self._terms:
            return self
        den = math.lcm(*(c.denominator for c in self._terms.values()))
        num = math.gcd(*(c.numerator for c in self._terms.values()))
        factor = Fraction(den, num)
        if self.leading(order)[1] < 0:
            factor = -factor
        return self.scale(factor)

    def embed(self, ambient: Ambient) -> "Polynomial":
        """Same polynomial over a larger ambient sharing the first positions."""
        extra = ambient.nvars - self.ambient.nvars
        if extra < 0 or ambient.first != self.ambient.first:
            raise AmbientError(f"cannot embed {self.ambient} into {ambient}")
        pad = (0,) * extra
        return Polynomial._raw(ambient, {m + pad: c for m, c in self._terms.items()})

    # -- printing -----------------------------------------------------------

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r}, {self.ambient})"


def _format_monomial(ambient: Ambient, m: Monomial) -> str:
    parts = []
    for i, e in enumerate(m):
        if e == 1:
            parts.append(ambient.name(i))
        elif e:
            parts.append(f"{ambient.name(i)}^{e}")
    return "*".join(parts)


def format_polynomial(p: Polynomial, order: MonomialOrder = GREVLEX) -> str:
    if p.is_zero():
        return "0"
    out = []
    for k, (m, c) in enumerate(p.terms(order)):
        sign = "-" if c < 0 else "+"
        c = abs(c)
        mono = _format_monomial(p.ambient, m)
        if not mono:
            body = str(c)
        elif c == 1:
            body = mono
        else:
            body = f"{c}*{mono}"
        if k == 0:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


# -- functional surface -----------------------------------------------------

def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    check_ambient(p.ambient, q.ambient)
    return p + q


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    check_ambient(p.ambient, q.ambient)
    return p * q


def partial_derivative(p: Polynomial, label: int) -> Polynomial:
    return p.diff(label)


def homogeneous_degree(p: Polynomial):
    return p.homogeneous_degree()


def substitute(p: Polynomial, images: Sequence[Polynomial]) -> Polynomial:
    return p.substitute(images)


def variables(ambient: Ambient) -> list[Polynomial]:
    """The coordinate functions of ``ambient`` in position order."""
    return [Polynomial.variable(ambient, label) for label in ambient.labels]
