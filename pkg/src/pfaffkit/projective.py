"""Homogeneous forms on C^(n+1) standing for twisted forms on P^n.

Degrees are tracked as coefficient degrees ``s``: a form "of degree s" has
all coefficients homogeneous of total degree ``s``.  The distribution degree
and line-bundle twist are derived from it (``d = s - 1``, twist ``d + k + 1``).
"""

from __future__ import annotations

from dataclasses import dataclass

from .exterior import (
    DiffForm,
    VecField,
    coefficient_ideal,
    differential,
    exterior_derivative,
    form_power,
    interior_product,
    wedge,
)
from .groebner import DimensionVerdict, ideal_dimension, radical_member
from .pfaff import PfaffSystem, engel_check, singular_ideal
from .ring import INHOMOGENEOUS, ZERO, Ambient


class ProjectiveError(ValueError):
    """Input is not homogeneous or violates the Euler condition."""


def radial(ambient: Ambient) -> VecField:
    return VecField.radial(ambient)


def euler_check(omega: DiffForm) -> bool:
    """``i_R omega == 0`` for the radial field R."""
    return not interior_product(radial(omega.ambient), omega)


def _coefficient_degree(omega: DiffForm) -> int:
    s = omega.homogeneous_degree()
    if s == INHOMOGENEOUS:
        raise ProjectiveError(f"{omega} has inhomogeneous coefficients")
    if s == ZERO:
        raise ProjectiveError("the zero form has no degree")
    return s


class ProjectiveSystem:
    """Pfaff system of homogeneous, Euler-compatible generators."""

    def __init__(self, system: PfaffSystem):
        degrees = []
        for g in system.generators:
            degrees.append(_coefficient_degree(g))
            if not euler_check(g):
                raise ProjectiveError(f"i_R does not annihilate {g}")
        self.system = system
        self.coefficient_degrees = tuple(degrees)

    @property
    def twists(self) -> tuple:
        # a 1-form with coefficient degree s is a section of Omega^1(s + 1)
        return tuple(s + 1 for s in self.coefficient_degrees)


@dataclass(frozen=True)
class DistributionDegree:
    coefficient_degree: int
    degree: int
    twist: int

    def to_dict(self) -> dict:
        return {
            "coefficient_degree": self.coefficient_degree,
            "degree": self.degree,
            "twist": self.twist,
        }


def degree_of(omega: DiffForm, k: int | None = None) -> DistributionDegree:
    """Degree ``d`` of a homogeneous Euler-compatible k-form and its twist ``d + k + 1``."""
    k = omega.degree if k is None else k
    if k != omega.degree:
        raise ProjectiveError(f"form has degree {omega.degree}, not {k}")
    s = _coefficient_degree(omega)
    if not euler_check(omega):
        raise ProjectiveError("form violates the Euler condition i_R omega = 0")
    d = s - 1
    return DistributionDegree(s, d, d + k + 1)


def jouanolou_sides(eta: DiffForm):
    """``(i_R d eta + d i_R eta, (q + s) eta)`` for homogeneous ``eta``."""
    if not eta:
        return eta, eta
    s = _coefficient_degree(eta)
    R = radial(eta.ambient)
    lhs = interior_product(R, exterior_derivative(eta))
    if eta.degree:
        lhs = lhs + exterior_derivative(interior_product(R, eta))
    return lhs, eta * (eta.degree + s)


def jouanolou_identity_check(eta: DiffForm) -> bool:
    lhs, rhs = jouanolou_sides(eta)
    return lhs == rhs


def jouanolou_factor(eta: DiffForm) -> int:
    return eta.degree + _coefficient_degree(eta)


@dataclass(frozen=True)
class DegeneracyReport:
    degrees: tuple
    euler_alpha: bool
    euler_beta: bool
    relations_hold: bool
    beta_dbeta_zero: bool
    alpha_beta_dalpha_zero: bool

    @property
    def degenerate(self) -> bool:
        """Euler holds and the Engel conditions (i), (iii) both collapse."""
        return self.euler_alpha and self.euler_beta and self.beta_dbeta_zero and self.alpha_beta_dalpha_zero

    def to_dict(self) -> dict:
        return {
            "degrees": list(self.degrees),
            "euler_alpha": self.euler_alpha,
            "euler_beta": self.euler_beta,
            "relations_hold": self.relations_hold,
            "beta_dbeta_zero": self.beta_dbeta_zero,
            "alpha_beta_dalpha_zero": self.alpha_beta_dalpha_zero,
            "degenerate": self.degenerate,
        }


def degeneracy_check(f1, f2, f3, f4, allow_zero_f2: bool = False) -> DegeneracyReport:
    """Homogenize the Engel normal form and test what the Euler condition forces.

    Builds ``alpha = df4 - f3 df1`` and ``beta = df3 - f2 df1``.  Since
    ``i_R df = deg(f) f``, Euler compatibility is equivalent to
    ``k4 f4 = k1 f3 f1`` and ``k3 f3 = k1 f2 f1``.
    """
    named = {"f1": f1, "f2": f2, "f3": f3, "f4": f4}
    degrees = {}
    for name, f in named.items():
        s = f.homogeneous_degree()
        if s == INHOMOGENEOUS:
            raise ProjectiveError(f"{name} = {f} is not homogeneous")
        if s == ZERO and (name != "f2" or not allow_zero_f2):
            raise ProjectiveError(f"{name} must be nonzero")
        degrees[name] = None if s == ZERO else s
    k1, k3, k4 = degrees["f1"], degrees["f3"], degrees["f4"]

    df1 = differential(f1)
    alpha = differential(f4) - df1 * f3
    beta = differential(f3) - df1 * f2
    relations = (f4 * k4 - f3 * f1 * k1).is_zero() and (f3 * k3 - f2 * f1 * k1).is_zero()
    return DegeneracyReport(
        degrees=(k1, degrees["f2"], k3, k4),
        euler_alpha=euler_check(alpha),
        euler_beta=euler_check(beta),
        relations_hold=relations,
        beta_dbeta_zero=not wedge(beta, exterior_derivative(beta)),
        alpha_beta_dalpha_zero=not wedge(alpha, beta, exterior_derivative(alpha)),
    )


def five_form_vanishing_check(beta: DiffForm) -> bool:
    """Whether ``beta ^ (d beta)^2`` vanishes for an Euler-compatible 1-form on C^5."""
    if beta.degree != 1 or beta.ambient.nvars != 5:
        raise ValueError("expected a 1-form in five variables")
    _coefficient_degree(beta)
    if not euler_check(beta):
        raise ProjectiveError("form violates the Euler condition i_R beta = 0")
    return not wedge(beta, form_power(exterior_derivative(beta), 2))


@dataclass(frozen=True)
class AtypicalityReport:
    sing_system: DimensionVerdict
    sing_dbeta: DimensionVerdict
    contraction_factor: int
    contraction_identity: bool
    containment: bool
    branch: str

    def to_dict(self) -> dict:
        return {
            "sing_system": self.sing_system.to_dict(),
            "sing_dbeta": self.sing_dbeta.to_dict(),
            "contraction_factor": self.contraction_factor,
            "contraction_identity": self.contraction_identity,
            "containment": self.containment,
            "branch": self.branch,
        }


SING_CODIM_ONE = "Sing(I) has a component of codimension one"
DBETA_CODIM_TWO = "Sing(d beta) has a component of codimension two"
NEITHER = "neither branch certified"


def atypicality_verdict(P: ProjectiveSystem, beta: DiffForm | None = None) -> AtypicalityReport:
    """Which branch of the codimension dichotomy the system realizes.

    ``beta`` defaults to the derived generator found by :func:`engel_check`;
    non-Engel systems are rejected unless the caller names beta explicitly.
    """
    S = P.system
    if beta is None:
        report = engel_check(S)
        if not report.is_engel:
            raise ProjectiveError(
                "system is not an Engel system: " + (report.role_failure or "conditions fail")
            )
        beta, alpha = report.beta, report.alpha
    else:
        others = [g for g in S.generators if g != beta]
        if len(others) != S.k - 1:
            raise ValueError("beta must be one of the generators")
        alpha = others[0]

    s = _coefficient_degree(beta)
    dbeta = exterior_derivative(beta)
    # i_R(d beta) = (s + 1) beta once i_R beta = 0
    factor = s + 1
    contraction = interior_product(radial(S.ambient), dbeta) == beta * factor

    ba = coefficient_ideal(wedge(beta, alpha))
    dbeta_ideal = coefficient_ideal(dbeta)
    containment = all(radical_member(g, dbeta_ideal) for g in ba.generators)

    sing = ideal_dimension(singular_ideal(S))
    sing_d = ideal_dimension(dbeta_ideal)
    if sing.codimension == 1:
        branch = SING_CODIM_ONE
    elif sing_d.codimension == 2:
        branch = DBETA_CODIM_TWO
    else:
        branch = NEITHER
    return AtypicalityReport(sing, sing_d, factor, contraction, containment, branch)


# -- corpus -----------------------------------------------------------------------

@dataclass(frozen=True)
class CorpusEntry:
    name: str
    ambient: Ambient
    labels: tuple
    forms: tuple
    note: str = ""

    def parsed(self) -> dict:
        from .parsing import parse_form

        return {lab: parse_form(text, self.ambient) for lab, text in zip(self.labels, self.forms)}

    def system(self) -> PfaffSystem:
        return PfaffSystem(list(self.parsed().values()))


CORPUS = {
    "canonical": CorpusEntry(
        "canonical",
        Ambient(4, first=1),
        ("omega1", "omega2"),
        ("dz4 - z3*dz1", "dz3 - z2*dz1"),
        "canonical Engel system on C^4",
    ),
    "example1": CorpusEntry(
        "example1",
        Ambient(5),
        ("alpha", "beta"),
        (
            "z0^2*dz4 - z0*z3*dz1 + (z1*z3 - z0*z4)*dz0",
            "z0^2*dz3 - z0*z2*dz1 + (z1*z2 - z0*z3)*dz0",
        ),
        "decomposable Engel system on P^4, first example",
    ),
    "example2": CorpusEntry(
        "example2",
        Ambient(5),
        ("alpha", "beta"),
        (
            "z0^3*dz1 + z3^2*z0*dz4 - (z0^2*z1 - z3^2*z4)*dz0",
            "z0^3*dz2 + z3*z4*z0*dz4 - (z0^2*z2 + z3*z4^2)*dz0",
        ),
        "second example, as printed (alpha is not Euler-compatible)",
    ),
    "example2-signfix": CorpusEntry(
        "example2-signfix",
        Ambient(5),
        ("alpha", "beta"),
        (
            "z0^3*dz1 + z3^2*z0*dz4 - (z0^2*z1 + z3^2*z4)*dz0",
            "z0^3*dz2 + z3*z4*z0*dz4 - (z0^2*z2 + z3*z4^2)*dz0",
        ),
        "second example with the dz0 sign of alpha chosen so that i_R alpha = 0",
    ),
}


def corpus(name: str) -> CorpusEntry:
    try:
        return CORPUS[name]
    except KeyError:
        raise KeyError(f"unknown corpus entry {name!r}; known: {', '.join(CORPUS)}") from None

