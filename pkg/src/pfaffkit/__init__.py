"""Exact exterior calculus for polynomial Pfaff systems and Engel distributions."""

from .exterior import (
    DiffForm,
    PolyMap,
    VecField,
    coefficient_ideal,
    differential,
    exterior_derivative,
    form_power,
    interior_product,
    pullback,
    wedge,
)
from .groebner import (
    DimensionVerdict,
    Ideal,
    groebner_basis,
    ideal_dimension,
    ideal_member,
    normal_form,
    radical_member,
    same_variety,
)
from .parsing import ParseError, format_form, parse_form, parse_polynomial
from .pfaff import (
    EngelReport,
    PfaffSystem,
    class_of,
    codim_report,
    engel_check,
    in_derived,
    is_integrable,
    is_integral_variety,
    same_system,
    singular_ideal,
    verify_normal_form,
)
from .projective import (
    CORPUS,
    ProjectiveSystem,
    atypicality_verdict,
    corpus,
    degeneracy_check,
    degree_of,
    euler_check,
    five_form_vanishing_check,
    jouanolou_identity_check,
)
from .ring import GREVLEX, LEX, Ambient, AmbientError, MonomialOrder, Polynomial

__version__ = "0.1.0"
