"""Seeded random polynomials and forms for property checks."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from .exterior import DiffForm, PolyMap, VecField, interior_product, wedge
from .ring import Ambient, Polynomial

def _coeff(rng: random.Random, bound: int) -> Fraction:
    c = 0
    while not c:
        c = rng.randint(-bound, bound)
    if rng.random() < 0.2:
        return Fraction(c, rng.randint(1, 3))
    return Fraction(c)

def random_monomial(rng: random.Random, nvars: int, degree: int) -> tuple:
    exps = [0] * nvars
    for _ in range(degree):
        exps[rng.randrange(nvars)] += 1
    return tuple(exps)

def random_polynomial(rng, ambient: Ambient, max_degree=3, max_terms=4, bound=5) -> Polynomial:
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        m = random_monomial(rng, ambient.nvars, rng.randint(0, max_degree))
        terms[m] = _coeff(rng, bound)
    return Polynomial(ambient, terms)

def random_homogeneous(rng, ambient: Ambient, degree: int, max_terms=4, bound=5) -> Polynomial:
    """Nonzero homogeneous polynomial of the given degree."""
    terms = {}
    while not terms:
        for _ in range(rng.randint(1, max_terms)):
            terms[random_monomial(rng, ambient.nvars, degree)] = _coeff(rng, bound)
    return Polynomial(ambient, terms)

def random_form(rng, ambient: Ambient, degree: int, max_terms=3, poly_degree=2, homogeneous=None) -> DiffForm:
    """Random ``degree``-form; ``homogeneous`` fixes a common coefficient degree."""
    subsets = list(itertools.combinations(range(ambient.nvars), degree))
    terms = {}
    for idx in rng.sample(subsets, min(len(subsets), rng.randint(1, max_terms))):
        if homogeneous is None:
            terms[idx] = random_polynomial(rng, ambient, max_degree=poly_degree)
        else:
            terms[idx] = random_homogeneous(rng, ambient, homogeneous, max_terms=3)
    return DiffForm(ambient, degree, terms)

def random_euler_form(rng, ambient: Ambient, s: int) -> DiffForm:
    """Nonzero homogeneous 1-form with coefficient degree ``s`` killed by ``i_R``.

    Contracting a homogeneous 2-form of coefficient degree ``s - 1`` against
    the radial field lands in the Euler locus, since ``i_R i_R = 0``.
    """
    if s < 1:
        raise ValueError("Euler-compatible 1-forms have coefficient degree >= 1")
    while True:
        theta = random_form(rng, ambient, 2, max_terms=4, homogeneous=s - 1)
        beta = interior_product(VecField.radial(ambient), theta)
        if beta:
            return beta

def random_map_with_invertible_linear_part(rng, ambient: Ambient, bound=3) -> PolyMap:
    """``z -> A z + (quadratic terms)`` with ``A`` an invertible integer matrix."""
    n = ambient.nvars
    while True:
        A = [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)]
        if _det(A):
            break
    comps = []
    for row in A:
        linear = Polynomial(
            ambient, {tuple(1 if j == i else 0 for j in range(n)): row[i] for i in range(n)}
        )
        quad = {}
        for _ in range(rng.randint(0, 2)):
            quad[random_monomial(rng, n, 2)] = _coeff(rng, bound)
        comps.append(linear + Polynomial(ambient, quad))
    return PolyMap(ambient, ambient, comps)

def _det(A) -> Fraction:
    # det A is the coefficient of the wedge of the row 1-forms
    ambient = Ambient(len(A))
    rows = [
        DiffForm(ambient, 1, {(j,): Polynomial.constant(ambient, a) for j, a in enumerate(row)})
        for row in A
    ]
    top = wedge(*rows)
    return top.coefficients()[0].constant_value() if top else Fraction(0)
