"""Pfaff systems and the predicates defined on them.

Everything here is a finite computation over the generators: "not zero"
means "not the identically zero form", and derived-system membership is
tested generator by generator (plus a constant pencil for two generators).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exterior import (
    DiffForm,
    coefficient_ideal,
    differential,
    exterior_derivative,
    form_power,
    wedge,
)
from .groebner import DimensionVerdict, Ideal, ideal_dimension, ideal_member
from .ring import Polynomial, check_ambient


class NotPfaffError(ValueError):
    """Generators do not define a Pfaff system."""


class UndefinedClassError(ValueError):
    """The class of the zero form is undefined."""


class PfaffSystem:
    """System spanned by 1-forms whose wedge is not identically zero."""

    def __init__(self, generators: Sequence[DiffForm]):
        generators = tuple(generators)
        if not generators:
            raise NotPfaffError("a Pfaff system needs at least one generator")
        ambient = generators[0].ambient
        for g in generators:
            check_ambient(ambient, g.ambient)
            if g.degree != 1:
                raise NotPfaffError(f"generator {g} is a {g.degree}-form, not a 1-form")
        top = wedge(*generators)
        if not top:
            raise NotPfaffError("generators are not generically linearly independent")
        self.ambient = ambient
        self.generators = generators
        self.wedge = top

    @property
    def k(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __repr__(self):
        return "PfaffSystem<" + ", ".join(str(g) for g in self.generators) + ">"


def witness(form: DiffForm) -> dict | None:
    """First nonzero coefficient of ``form`` with its index, for reports."""
    if not form:
        return None
    idx, p = form.items()[0]
    return {"index": list(idx), "coefficient": str(p)}


def singular_ideal(S: PfaffSystem) -> Ideal:
    return coefficient_ideal(S.wedge)


def in_derived(gamma: DiffForm, S: PfaffSystem) -> bool:
    """Whether ``d gamma`` vanishes modulo the system: ``d gamma ^ w1 ^ ... ^ wk == 0``."""
    check_ambient(gamma.ambient, S.ambient)
    if gamma.degree != 1:
        raise ValueError("derived-system membership is tested for 1-forms")
    return not wedge(exterior_derivative(gamma), S.wedge)


def is_integrable(S: PfaffSystem) -> bool:
    return all(in_derived(g, S) for g in S.generators)


def derived_pencil(S: PfaffSystem) -> DiffForm | None:
    """A constant combination ``l*w1 + m*w2`` lying in the derived system.

    Returns the combination scaled so its first coefficient has leading
    coefficient 1, or None when only the zero combination qualifies.
    """
    if S.k != 2:
        raise ValueError("pencil search is implemented for two generators")
    w1, w2 = S.generators
    A = wedge(exterior_derivative(w1), S.wedge)
    B = wedge(exterior_derivative(w2), S.wedge)
    if not A:
        return _normalized(w1)
    if not B:
        return _normalized(w2)
    idx, pa = A.items()[0]
    pb = B.coefficient(*idx)
    m, a = pa.terms()[0]
    b = pb.coefficient(m)
    if not b or A * b != B * a:
        return None
    return _normalized(w1 * b - w2 * a)


def _normalized(form: DiffForm) -> DiffForm:
    lead = form.items()[0][1].terms()[0][1]
    return form * (1 / Fraction(lead))


def class_of(beta: DiffForm) -> int:
    """The r with ``beta ^ (d beta)^r != 0`` and ``beta ^ (d beta)^(r+1) == 0``."""
    if beta.degree != 1:
        raise ValueError("class is defined for 1-forms")
    if not beta:
        raise UndefinedClassError("the zero form has no class")
    dbeta = exterior_derivative(beta)
    r = 0
    power = beta
    while True:
        power = wedge(power, dbeta)
        if not power:
            return r
        r += 1


def is_integral_variety(gens: Sequence[Polynomial], S: PfaffSystem) -> bool:
    """Whether ``V(gens)`` is integral: each ``w_i ^ df_1 ^ ... ^ df_r`` has coefficients in ``<gens>``."""
    for g in gens:
        check_ambient(S.ambient, g.ambient)
    ideal = Ideal(S.ambient, gens)
    dF = DiffForm.constant(S.ambient, 1)
    for g in gens:
        dF = wedge(dF, differential(g))
    return all(
        ideal_member(c, ideal)
        for omega in S.generators
        for c in wedge(omega, dF).coefficients()
    )


def same_system(S: PfaffSystem, T: PfaffSystem) -> bool:
    """Generic equality of the spanned subsheaves."""
    check_ambient(S.ambient, T.ambient)
    if S.k != T.k:
        raise ValueError(f"systems have different ranks {S.k} and {T.k}")
    return all(not wedge(g, T.wedge) for g in S.generators) and all(
        not wedge(g, S.wedge) for g in T.generators
    )


@dataclass(frozen=True)
class CodimReport:
    k: int
    expected: int
    sing: DimensionVerdict

    @property
    def atypical(self) -> bool:
        return not self.sing.is_empty and self.sing.codimension < self.expected

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "expected_codimension": self.expected,
            "sing": self.sing.to_dict(),
            "atypical": self.atypical,
        }


def codim_report(S: PfaffSystem) -> CodimReport:
    return CodimReport(S.k, S.k + 1, ideal_dimension(singular_ideal(S)))


# -- Engel systems --------------------------------------------------------------

BOTH_DERIVED = "both generators lie in the derived system"
NONE_DERIVED = "no constant combination of the generators lies in the derived system"


@dataclass
class EngelReport:
    condition_i: bool
    condition_ii: bool
    condition_iii: bool
    role: dict | None
    extra_iii_prime: bool
    class_of_beta: int | None
    derived_length: int | None
    sing_system: DimensionVerdict
    sing_dbeta: DimensionVerdict | None
    role_failure: str | None = None
    witnesses: dict = field(default_factory=dict)
    alpha: DiffForm | None = field(default=None, repr=False)
    beta: DiffForm | None = field(default=None, repr=False)

    @property
    def is_engel(self) -> bool:
        return self.role is not None and self.condition_i and self.condition_ii and self.condition_iii

    def to_dict(self) -> dict:
        return {
            "is_engel": self.is_engel,
            "condition_i": self.condition_i,
            "condition_ii": self.condition_ii,
            "condition_iii": self.condition_iii,
            "role": self.role,
            "role_failure": self.role_failure,
            "extra_iii_prime": self.extra_iii_prime,
            "class_of_beta": self.class_of_beta,
            "derived_length": "not determined" if self.derived_length is None else self.derived_length,
            "sing_system": self.sing_system.to_dict(),
            "sing_dbeta": None if self.sing_dbeta is None else self.sing_dbeta.to_dict(),
            "witnesses": self.witnesses,
        }


def _conditions(alpha: DiffForm, beta: DiffForm):
    ab = wedge(alpha, beta)
    dbeta = exterior_derivative(beta)
    c1 = wedge(ab, exterior_derivative(alpha))
    c2 = wedge(ab, dbeta)
    c3 = wedge(beta, dbeta)
    c3x = wedge(beta, form_power(dbeta, 2))
    return c1, c2, c3, c3x


def engel_check(S: PfaffSystem) -> EngelReport:
    """Engel conditions with the roles of the generators re-derived from the data.

    The generator lying in the derived system plays beta.  When no single
    generator qualifies, a constant pencil is tried.  When no beta can be
    fixed, each condition reports whether it holds for some assignment of
    the two generators.
    """
    if S.k != 2:
        raise ValueError(f"Engel systems have two generators, got {S.k}")
    w1, w2 = S.generators
    derived = [in_derived(w1, S), in_derived(w2, S)]
    sing = ideal_dimension(singular_ideal(S))

    beta = alpha = None
    role = failure = None
    if derived == [True, False]:
        alpha, beta, role = w2, w1, {"beta_generator": 1}
    elif derived == [False, True]:
        alpha, beta, role = w1, w2, {"beta_generator": 2}
    elif derived == [True, True]:
        failure = BOTH_DERIVED
    else:
        beta = derived_pencil(S)
        if beta is None:
            failure = NONE_DERIVED
        else:
            alpha, role = w1, {"beta_generator": "pencil"}

    if beta is None:
        verdicts = [_conditions(a, b) for a, b in ((w1, w2), (w2, w1))]
        report = EngelReport(
            condition_i=any(bool(v[0]) for v in verdicts),
            condition_ii=any(not v[1] for v in verdicts),
            condition_iii=any(bool(v[2]) for v in verdicts),
            role=None,
            extra_iii_prime=any(not v[3] for v in verdicts),
            class_of_beta=None,
            # every generator derived means the system is its own derived system
            derived_length=0 if failure == BOTH_DERIVED else None,
            sing_system=sing,
            sing_dbeta=None,
            role_failure=failure,
        )
        return report

    c1, c2, c3, c3x = _conditions(alpha, beta)
    role.update(alpha=str(alpha), beta=str(beta))
    witnesses = {}
    # nonzero coefficients back the "!= 0" verdicts (and a failed condition ii)
    for name, form in (("condition_i", c1), ("condition_ii", c2), ("condition_iii", c3)):
        w = witness(form)
        if w is not None:
            witnesses[name] = w
    report = EngelReport(
        condition_i=bool(c1),
        condition_ii=not c2,
        condition_iii=bool(c3),
        role=role,
        extra_iii_prime=not c3x,
        class_of_beta=class_of(beta),
        derived_length=None,
        sing_system=sing,
        sing_dbeta=ideal_dimension(coefficient_ideal(exterior_derivative(beta))),
        witnesses=witnesses,
        alpha=alpha,
        beta=beta,
    )
    if report.is_engel:
        # I(1) = <beta> and I(2) = 0
        report.derived_length = 2
    return report


# -- normal form verification ---------------------------------------------------

def engel_normal_form_system(f1, f2, f3, f4) -> PfaffSystem:
    """``<df4 - f3 df1, df3 - f2 df1>``."""
    df1 = differential(f1)
    return PfaffSystem([differential(f4) - df1 * f3, differential(f3) - df1 * f2])


@dataclass(frozen=True)
class NormalFormWitness:
    """Checks of the identities relating an Engel pair to supplied coordinates."""

    beta_matches: bool
    dbeta_matches: bool
    alpha_decomposes: bool
    jacobian_identity: bool
    jacobian_f2_identity: bool | None

    @property
    def holds(self) -> bool:
        return all(
            v is not False
            for v in (
                self.beta_matches,
                self.dbeta_matches,
                self.alpha_decomposes,
                self.jacobian_identity,
                self.jacobian_f2_identity,
            )
        )


def verify_normal_form(alpha, beta, f1, f3, f4, a, b, lam, f2=None) -> NormalFormWitness:
    """Verify ``beta = df4 - f3 df1`` and ``alpha - lam*beta = a df1 + b df3``.

    The Jacobian identity checked is
    ``d alpha ^ beta ^ alpha == (b da - a db) ^ df1 ^ df4 ^ df3``;
    when ``f2`` with ``a == -b f2`` is supplied, also
    ``d alpha ^ beta ^ alpha == -b^2 df2 ^ df1 ^ df4 ^ df3``.
    """
    df1, df3, df4 = differential(f1), differential(f3), differential(f4)
    lhs = wedge(exterior_derivative(alpha), beta, alpha)
    jac = wedge(differential(a) * b - differential(b) * a, df1, df4, df3)
    f2_identity = None
    if f2 is not None:
        f2_identity = (a + b * f2).is_zero() and lhs == wedge(
            differential(f2) * (-(b * b)), df1, df4, df3
        )
    return NormalFormWitness(
        beta_matches=beta == df4 - df1 * f3,
        dbeta_matches=exterior_derivative(beta) == wedge(df1, df3),
        alpha_decomposes=alpha - beta * lam == df1 * a + df3 * b,
        jacobian_identity=lhs == jac,
        jacobian_f2_identity=f2_identity,
    )
