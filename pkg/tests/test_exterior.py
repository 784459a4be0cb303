import random

import pytest
from hypothesis import given, settings, strategies as st

from pfaffkit import (
    DiffForm,
    PolyMap,
    VecField,
    coefficient_ideal,
    differential,
    exterior_derivative,
    form_power,
    interior_product,
    parse_form,
    pullback,
    same_variety,
    wedge,
)
from pfaffkit.groebner import Ideal
from pfaffkit.projective import CORPUS
from pfaffkit.ring import Ambient, AmbientError, Polynomial
from pfaffkit.sampling import random_form, random_map_with_invertible_linear_part, random_polynomial

import oracle

A4 = Ambient(4, first=1)
A5 = Ambient(5)
z = [Polynomial.variable(A5, i) for i in range(5)]
seeds = st.integers(0, 2**32)


def f5(text):
    return parse_form(text, A5)


def f4(text):
    return parse_form(text, A4)


def test_wedge_examples():
    assert wedge(f4("dz1"), f4("dz1")).is_zero()
    assert wedge(f4("dz1"), f4("dz2")) == -wedge(f4("dz2"), f4("dz1"))
    assert wedge(f4("dz1"), f4("dz2")).coefficient(1, 2) == 1


def test_exterior_derivative_examples():
    d = exterior_derivative(f4("z2*dz1"))
    assert d.items() == [((1, 2), Polynomial.constant(A4, -1))]
    d = exterior_derivative(f4("dz3 - z2*dz1"))
    assert d.items() == [((1, 2), Polynomial.constant(A4, 1))]
    assert exterior_derivative(f5("z0^2")) == f5("2*z0*dz0")


def test_interior_product_examples():
    R = VecField.radial(A5)
    assert interior_product(R, CORPUS["example1"].parsed()["alpha"]).is_zero()
    assert interior_product(R, f5("dz0")) == DiffForm.function(z[0])
    assert interior_product(R, f5("dz0^dz1")) == f5("z0*dz1 - z1*dz0")
    assert interior_product(R, f5("z3")).is_zero()


def test_pullback_examples():
    omega = f5("z1*dz2^dz3 + z0*dz4^dz1")
    assert pullback(PolyMap.identity(A5), omega) == omega
    comps = [Polynomial.variable(A4, i) for i in (1, 2, 3)] + [
        Polynomial.variable(A4, 3) * Polynomial.variable(A4, 4)
    ]
    f = PolyMap(A4, A4, comps)
    assert pullback(f, f4("dz4")) == f4("z4*dz3 + z3*dz4")


def test_pullback_of_canonical_generator_is_normal_form():
    rng = random.Random(7)
    fs = [random_polynomial(rng, A4, 2, 3) for _ in range(4)]
    f = PolyMap(A4, A4, fs)
    f1, f2, f3, f4_ = fs
    assert pullback(f, f4("dz4 - z3*dz1")) == differential(f4_) - differential(f1) * f3
    assert pullback(f, f4("dz3 - z2*dz1")) == differential(f3) - differential(f1) * f2


def test_form_power_examples():
    A3 = Ambient(3, first=1)
    assert form_power(parse_form("dz1^dz2", A3), 2).is_zero()
    w = f4("dz1^dz2 + dz3^dz4")
    assert form_power(w, 2) == f4("2*dz1^dz2^dz3^dz4")
    assert form_power(w, 0) == DiffForm.constant(A4, 1)


def test_coefficient_ideal_examples():
    assert coefficient_ideal(f5("z0*dz1")).generators == (z[0],)
    alpha, beta = CORPUS["example1"].parsed().values()
    assert same_variety(coefficient_ideal(wedge(alpha, beta)), Ideal(A5, [z[0]]))
    assert coefficient_ideal(DiffForm.zero(A5, 2)).is_zero()


def test_structure_invariants():
    w = f5("z0*dz3^dz1 + z0*dz1^dz3")
    assert w.is_zero()
    assert all(list(idx) == sorted(set(idx)) for idx, _ in f5("dz4^dz0^dz2 + z1*dz2^dz0^dz3").items())
    assert wedge(f5("dz0^dz1^dz2"), f5("dz3^dz4"), f5("dz0")).is_zero()
    with pytest.raises(AmbientError):
        wedge(f5("dz0"), f4("dz1"))
    with pytest.raises(ValueError):
        f5("dz0") + f5("dz0^dz1")


def test_coefficient_with_permuted_labels():
    w = f5("z2*dz1^dz3")
    assert w.coefficient(3, 1) == -z[2]
    assert w.coefficient(1, 1).is_zero()


# -- property tests ---------------------------------------------------------------

def rnd(seed, degree, ambient=A5):
    return random_form(random.Random(seed), ambient, degree)


@settings(max_examples=100, deadline=None)
@given(seeds, st.integers(0, 4))
def test_d_squared_zero(seed, q):
    assert exterior_derivative(exterior_derivative(rnd(seed, q))).is_zero()


@settings(max_examples=100, deadline=None)
@given(seeds, st.integers(0, 3), st.integers(0, 2))
def test_graded_leibniz(seed, p, q):
    w, e = rnd(seed, p), rnd(seed + 1, q)
    lhs = exterior_derivative(wedge(w, e))
    rhs = wedge(exterior_derivative(w), e) + wedge(w, exterior_derivative(e)) * (-1) ** p
    assert lhs == rhs


@settings(max_examples=100, deadline=None)
@given(seeds, st.integers(0, 3), st.integers(0, 2))
def test_graded_commutativity(seed, p, q):
    w, e = rnd(seed, p), rnd(seed + 1, q)
    assert wedge(w, e) == wedge(e, w) * (-1) ** (p * q)


@settings(max_examples=100, deadline=None)
@given(seeds, st.integers(1, 2), st.integers(1, 2), st.integers(1, 2))
def test_wedge_associative(seed, p, q, r):
    a, b, c = rnd(seed, p), rnd(seed + 1, q), rnd(seed + 2, r)
    assert wedge(wedge(a, b), c) == wedge(a, wedge(b, c))


@settings(max_examples=100, deadline=None)
@given(seeds, st.integers(0, 3), st.integers(0, 2))
def test_interior_antiderivation(seed, p, q):
    rng = random.Random(seed)
    X = VecField(A5, [random_polynomial(rng, A5, 2, 2) for _ in range(5)])
    w, e = rnd(seed + 1, p), rnd(seed + 2, q)
    lhs = interior_product(X, wedge(w, e))
    rhs = wedge(interior_product(X, w), e) + wedge(w, interior_product(X, e)) * (-1) ** p
    assert lhs == rhs
    assert interior_product(X, interior_product(X, w)).is_zero()


@settings(max_examples=100, deadline=None)
@given(seeds, st.integers(0, 2), st.integers(0, 2))
def test_pullback_homomorphism(seed, p, q):
    f = random_map_with_invertible_linear_part(random.Random(seed), A4)
    w, e = rnd(seed + 1, p, A4), rnd(seed + 2, q, A4)
    assert pullback(f, wedge(w, e)) == wedge(pullback(f, w), pullback(f, e))
    assert pullback(f, exterior_derivative(w)) == exterior_derivative(pullback(f, w))
    assert pullback(f, w + rnd(seed + 3, p, A4)) == pullback(f, w) + pullback(f, rnd(seed + 3, p, A4))


@settings(max_examples=60, deadline=None)
@given(seeds, st.integers(0, 5))
def test_top_degree_euler_forms_vanish(seed, s):
    # a 5-form on C^5 killed by i_R must be zero
    rng = random.Random(seed)
    top = DiffForm(A5, 5, {(0, 1, 2, 3, 4): random_polynomial(rng, A5, s, 3)})
    assert interior_product(VecField.radial(A5), top).is_zero() == top.is_zero()


# -- sympy oracle -----------------------------------------------------------------

@settings(max_examples=40, deadline=None)
@given(seeds, st.integers(0, 3), st.integers(0, 2))
def test_operations_match_sympy_oracle(seed, p, q):
    w, e = rnd(seed, p), rnd(seed + 1, q)
    zs = oracle.symbols(A5)
    W, E = oracle.to_dict(w), oracle.to_dict(e)
    assert oracle.same(oracle.to_dict(wedge(w, e)), oracle.wedge(W, E))
    assert oracle.same(oracle.to_dict(exterior_derivative(w)), oracle.d(W, zs))
    assert oracle.same(oracle.to_dict(interior_product(VecField.radial(A5), w)), oracle.contract(zs, W))


def test_example_one_wedge_matches_oracle():
    alpha, beta = CORPUS["example1"].parsed().values()
    zs = oracle.symbols(A5)
    a, b = oracle.to_dict(alpha), oracle.to_dict(beta)
    assert oracle.same(oracle.to_dict(wedge(alpha, beta)), oracle.wedge(a, b))
    assert oracle.same(oracle.to_dict(exterior_derivative(beta)), oracle.d(b, zs))
