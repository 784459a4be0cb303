"""Polynomial differential forms, vector fields and polynomial maps.

A q-form is stored as a map from strictly increasing position tuples
``(i1 < ... < iq)`` to nonzero coefficient polynomials.  Every constructor
funnels through :func:`_canonical`, which sorts index tuples and folds the
permutation sign into the coefficient, so form equality is map equality.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from .groebner import Ideal
from .ring import INHOMOGENEOUS, ZERO, Ambient, AmbientError, Polynomial, check_ambient


def _sort_sign(idx: tuple):
    """Sorted tuple and permutation sign, or ``(None, 0)`` on a repeat."""
    if len(set(idx)) != len(idx):
        return None, 0
    inversions = sum(
        1 for a in range(len(idx)) for b in range(a + 1, len(idx)) if idx[a] > idx[b]
    )
    return tuple(sorted(idx)), (-1 if inversions % 2 else 1)


def _canonical(degree: int, terms) -> dict:
    out = {}
    for idx, p in terms:
        if not p:
            continue
        if len(idx) != degree:
            raise ValueError(f"index {idx} does not have length {degree}")
        key, sign = _sort_sign(tuple(idx))
        if not sign:
            continue
        acc = out.get(key)
        contrib = p if sign > 0 else -p
        out[key] = contrib if acc is None else acc + contrib
    return {k: v for k, v in out.items() if v}


class DiffForm:
    """Immutable degree-q form with polynomial coefficients."""

    __slots__ = ("ambient", "degree", "_terms", "_hash")

    def __init__(self, ambient: Ambient, degree: int, terms: Mapping[tuple, Polynomial] | None = None):
        """``terms`` is keyed by position tuples (not labels); any order is accepted."""
        if degree < 0:
            raise ValueError("form degree must be nonnegative")
        items = list((terms or {}).items())
        for idx, p in items:
            check_ambient(ambient, p.ambient)
            if any(not 0 <= i < ambient.nvars for i in idx):
                raise IndexError(f"index {idx} outside ambient {ambient}")
        self.ambient = ambient
        self.degree = degree
        self._terms = _canonical(degree, items)
        self._hash = None

    @classmethod
    def _raw(cls, ambient, degree, terms):
        f = cls.__new__(cls)
        f.ambient, f.degree, f._terms, f._hash = ambient, degree, terms, None
        return f

    @classmethod
    def zero(cls, ambient: Ambient, degree: int) -> "DiffForm":
        return cls._raw(ambient, degree, {})

    @classmethod
    def function(cls, p: Polynomial) -> "DiffForm":
        return cls._raw(p.ambient, 0, {(): p} if p else {})

    @classmethod
    def constant(cls, ambient: Ambient, c=1) -> "DiffForm":
        return cls.function(Polynomial.constant(ambient, c))

    @classmethod
    def dz(cls, ambient: Ambient, *labels: int) -> "DiffForm":
        """``dz_a ^ dz_b ^ ...`` for the given variable labels."""
        idx = tuple(ambient.position(lab) for lab in labels)
        return cls(ambient, len(idx), {idx: Polynomial.constant(ambient, 1)})

    @classmethod
    def from_labels(cls, ambient: Ambient, degree: int, terms: Mapping[tuple, Polynomial]) -> "DiffForm":
        return cls(
            ambient,
            degree,
            {tuple(ambient.position(lab) for lab in idx): p for idx, p in terms.items()},
        )

    # -- inspection ---------------------------------------------------------

    def items(self) -> list:
        """``(label tuple, coefficient)`` pairs in increasing index order."""
        first = self.ambient.first
        return [
            (tuple(first + i for i in idx), self._terms[idx]) for idx in sorted(self._terms)
        ]

    def coefficients(self) -> list:
        return [self._terms[idx] for idx in sorted(self._terms)]

    def coefficient(self, *labels: int) -> Polynomial:
        """Coefficient on ``dz_labels``; unsorted labels pick up the permutation sign."""
        idx = tuple(self.ambient.position(lab) for lab in labels)
        key, sign = _sort_sign(idx)
        if not sign or key not in self._terms:
            return Polynomial.zero(self.ambient)
        c = self._terms[key]
        return c if sign > 0 else -c

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def homogeneous_degree(self):
        """Common coefficient degree, or the ring's ``ZERO``/``INHOMOGENEOUS``."""
        degrees = {p.homogeneous_degree() for p in self._terms.values()}
        if not degrees:
            return ZERO
        if len(degrees) > 1 or INHOMOGENEOUS in degrees:
            return INHOMOGENEOUS
        return degrees.pop()

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "DiffForm"):
        check_ambient(self.ambient, other.ambient)
        if self.degree != other.degree:
            raise ValueError(f"cannot add a {self.degree}-form and a {other.degree}-form")

    def __add__(self, other):
        if not isinstance(other, DiffForm):
            return NotImplemented
        # the zero form is degree-agnostic, as in __eq__
        if not other._terms:
            check_ambient(self.ambient, other.ambient)
            return self
        if not self._terms:
            check_ambient(self.ambient, other.ambient)
            return other
        self._check(other)
        out = dict(self._terms)
        for k, v in other._terms.items():
            s = out[k] + v if k in out else v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return DiffForm._raw(self.ambient, self.degree, out)

    def __neg__(self):
        return DiffForm._raw(self.ambient, self.degree, {k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, DiffForm):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        """Multiplication by a polynomial or scalar (use ``^`` for wedge)."""
        if isinstance(other, DiffForm):
            return wedge(self, other)
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.ambient, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        check_ambient(self.ambient, other.ambient)
        out = {}
        for k, v in self._terms.items():
            w = v * other
            if w:
                out[k] = w
        return DiffForm._raw(self.ambient, self.degree, out)

    __rmul__ = __mul__

    def __xor__(self, other):
        if not isinstance(other, DiffForm):
            return NotImplemented
        return wedge(self, other)

    def __eq__(self, other):
        if not isinstance(other, DiffForm):
            return NotImplemented
        return (
            self.ambient == other.ambient
            and self._terms == other._terms
            and (self.degree == other.degree or not self._terms)
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ambient, frozenset(self._terms.items())))
        return self._hash

    # -- calculus -----------------------------------------------------------

    def d(self) -> "DiffForm":
        return exterior_derivative(self)

    def contract(self, X: "VecField") -> "DiffForm":
        return interior_product(X, self)

    def pullback(self, f: "PolyMap") -> "DiffForm":
        return pullback(f, self)

    def __str__(self):
        from .parsing import format_form

        return format_form(self)

    def __repr__(self):
        return f"DiffForm({str(self)!r}, degree={self.degree}, {self.ambient})"


class VecField:
    """Polynomial vector field ``sum X_i d/dz_i``."""

    __slots__ = ("ambient", "components")

    def __init__(self, ambient: Ambient, components: Sequence[Polynomial]):
        components = tuple(components)
        if len(components) != ambient.nvars:
            raise AmbientError(f"vector field needs {ambient.nvars} components")
        for c in components:
            check_ambient(ambient, c.ambient)
        self.ambient = ambient
        self.components = components

    @classmethod
    def radial(cls, ambient: Ambient) -> "VecField":
        return cls(ambient, [Polynomial.variable(ambient, lab) for lab in ambient.labels])


class PolyMap:
    """Polynomial map from ``source`` to ``target``; one component per target variable."""

    __slots__ = ("source", "target", "components", "_differentials")

    def __init__(self, source: Ambient, target: Ambient, components: Sequence[Polynomial]):
        components = tuple(components)
        if len(components) != target.nvars:
            raise AmbientError(f"map needs {target.nvars} components, got {len(components)}")
        for c in components:
            check_ambient(source, c.ambient)
        self.source = source
        self.target = target
        self.components = components
        self._differentials = None

    @classmethod
    def identity(cls, ambient: Ambient) -> "PolyMap":
        return cls(ambient, ambient, [Polynomial.variable(ambient, lab) for lab in ambient.labels])

    def component(self, label: int) -> Polynomial:
        return self.components[self.target.position(label)]

    def differentials(self) -> tuple:
        if self._differentials is None:
            self._differentials = tuple(differential(c) for c in self.components)
        return self._differentials


# -- operations -------------------------------------------------------------

def differential(p: Polynomial) -> DiffForm:
    """``dp`` as a 1-form."""
    return exterior_derivative(DiffForm.function(p))


def _wedge2(a: DiffForm, b: DiffForm) -> DiffForm:
    check_ambient(a.ambient, b.ambient)
    degree = a.degree + b.degree
    if not a._terms or not b._terms or degree > a.ambient.nvars:
        return DiffForm.zero(a.ambient, degree)
    out = {}
    for ia, pa in a._terms.items():
        for ib, pb in b._terms.items():
            key, sign = _sort_sign(ia + ib)
            if not sign:
                continue
            prod = pa * pb
            if sign < 0:
                prod = -prod
            acc = out.get(key)
            out[key] = prod if acc is None else acc + prod
    return DiffForm._raw(a.ambient, degree, {k: v for k, v in out.items() if v})


def wedge(*forms: DiffForm) -> DiffForm:
    """Exterior product, folded left to right."""
    if not forms:
        raise ValueError("wedge of no forms")
    result = forms[0]
    for f in forms[1:]:
        result = _wedge2(result, f)
    return result


def exterior_derivative(omega: DiffForm) -> DiffForm:
    out = {}
    for idx, p in omega._terms.items():
        for pos in range(omega.ambient.nvars):
            if pos in idx:
                continue
            c = p._diff_pos(pos)
            if not c:
                continue
            # dz_pos ^ dz_idx: moving dz_pos past the smaller indices
            below = sum(1 for j in idx if j < pos)
            key = tuple(sorted(idx + (pos,)))
            if below % 2:
                c = -c
            acc = out.get(key)
            out[key] = c if acc is None else acc + c
    return DiffForm._raw(
        omega.ambient, omega.degree + 1, {k: v for k, v in out.items() if v}
    )


def interior_product(X: VecField, omega: DiffForm) -> DiffForm:
    check_ambient(X.ambient, omega.ambient)
    if omega.degree == 0:
        return DiffForm.zero(omega.ambient, 0)
    out = {}
    for idx, p in omega._terms.items():
        for r, pos in enumerate(idx):
            xc = X.components[pos]
            if not xc:
                continue
            c = xc * p
            if r % 2:
                c = -c
            key = idx[:r] + idx[r + 1:]
            acc = out.get(key)
            out[key] = c if acc is None else acc + c
    return DiffForm._raw(
        omega.ambient, omega.degree - 1, {k: v for k, v in out.items() if v}
    )


def pullback(f: PolyMap, omega: DiffForm) -> DiffForm:
    check_ambient(f.target, omega.ambient)
    dfs = f.differentials()
    result = DiffForm.zero(f.source, omega.degree)
    for idx, p in omega._terms.items():
        coeff = p.substitute(f.components)
        if not coeff:
            continue
        piece = DiffForm.function(coeff)
        for pos in idx:
            piece = _wedge2(piece, dfs[pos])
        result = result + piece
    return result


def form_power(omega: DiffForm, r: int) -> DiffForm:
    """``omega ^ ... ^ omega`` (r factors); r = 0 gives the constant 1."""
    if r < 0:
        raise ValueError("power must be nonnegative")
    result = DiffForm.constant(omega.ambient, 1)
    for _ in range(r):
        result = _wedge2(result, omega)
    return result


def coefficient_ideal(omega: DiffForm) -> Ideal:
    """Ideal of all coefficients; its zero set is where ``omega`` vanishes."""
    return Ideal(omega.ambient, omega.coefficients())
