"""Buchberger Groebner bases and the ideal-theoretic queries built on them."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .ring import (
    GREVLEX,
    Ambient,
    MonomialOrder,
    Polynomial,
    check_ambient,
    mono_coprime,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)


class Ideal:
    """Ideal of a polynomial ring, given by generators.

    Groebner bases are computed lazily, once per monomial order.
    """

    def __init__(self, ambient: Ambient, generators: Iterable[Polynomial] = ()):
        gens = []
        for g in generators:
            check_ambient(ambient, g.ambient)
            if g:
                gens.append(g)
        self.ambient = ambient
        self.generators = tuple(gens)
        self._gb = {}

    def groebner(self, order: MonomialOrder = GREVLEX) -> tuple:
        """Reduced Groebner basis, primitive integer normalized, largest lead first."""
        basis = self._gb.get(order)
        if basis is None:
            basis = _reduced_basis(self.ambient, self.generators, order)
            self._gb[order] = basis
        return basis

    def is_unit(self) -> bool:
        return any(g.is_constant() for g in self.groebner())

    def is_zero(self) -> bool:
        return not self.generators

    def __contains__(self, p: Polynomial) -> bool:
        return ideal_member(p, self)

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators)
        return f"Ideal<{gens}>"


# -- reduction ---------------------------------------------------------------

def _reduce(terms: dict, basis, key) -> dict:
    """Fully reduce ``terms`` modulo ``basis`` = [(lead, lead_coeff, terms)]."""
    p = dict(terms)
    rem = {}
    while p:
        m = max(p, key=key)
        c = p[m]
        for lm, lc, g in basis:
            if mono_divides(lm, m):
                q = mono_div(m, lm)
                f = c / lc
                for gm, gc in g.items():
                    mm = mono_mul(gm, q)
                    v = p.get(mm, 0) - f * gc
                    if v:
                        p[mm] = v
                    else:
                        del p[mm]
                break
        else:
            rem[m] = c
            del p[m]
    return rem


def _primitive(terms: dict, key) -> dict:
    den = math.lcm(*(c.denominator for c in terms.values()))
    num = math.gcd(*(c.numerator for c in terms.values()))
    f = Fraction(den, num)
    if terms[max(terms, key=key)] < 0:
        f = -f
    return {m: c * f for m, c in terms.items()}


def _spoly(a, b):
    lm_a, lc_a, ta = a
    lm_b, lc_b, tb = b
    lcm = mono_lcm(lm_a, lm_b)
    qa, qb = mono_div(lcm, lm_a), mono_div(lcm, lm_b)
    out = {}
    for m, c in ta.items():
        out[mono_mul(m, qa)] = c / lc_a
    for m, c in tb.items():
        mm = mono_mul(m, qb)
        v = out.get(mm, 0) - c / lc_b
        if v:
            out[mm] = v
        else:
            out.pop(mm, None)
    return out


def _entry(terms, key):
    lm = max(terms, key=key)
    return lm, terms[lm], terms


def _buchberger(gens: list, key) -> list:
    G = []
    pairs = set()

    def add(terms):
        entry = _entry(_primitive(terms, key), key)
        j = len(G)
        G.append(entry)
        pairs.update((i, j) for i in range(j))

    for g in gens:
        add(g)
        if not any(G[-1][0]):
            return [G[-1]]

    done = set()
    while pairs:
        # normal selection strategy; index tie-break keeps runs deterministic
        i, j = min(pairs, key=lambda p: (key(mono_lcm(G[p[0]][0], G[p[1]][0])), p))
        pairs.discard((i, j))
        done.add((i, j))
        lm_i, lm_j = G[i][0], G[j][0]
        if mono_coprime(lm_i, lm_j):
            continue
        lcm = mono_lcm(lm_i, lm_j)
        if any(
            k != i and k != j
            and mono_divides(G[k][0], lcm)
            and (min(i, k), max(i, k)) in done
            and (min(j, k), max(j, k)) in done
            for k in range(len(G))
        ):
            continue
        r = _reduce(_spoly(G[i], G[j]), G, key)
        if r:
            add(r)
            if not any(G[-1][0]):
                return [G[-1]]
    return G


def _reduced_basis(ambient: Ambient, generators, order: MonomialOrder) -> tuple:
    key = order.key
    gens = [dict(g._terms) for g in generators]
    if not gens:
        return ()
    G = _buchberger(gens, key)
    # minimalize: drop elements whose lead is divisible by another lead
    G.sort(key=lambda e: key(e[0]))
    minimal = []
    for e in G:
        if not any(mono_divides(f[0], e[0]) for f in minimal):
            minimal.append(e)
    reduced = []
    for idx, e in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        r = _reduce(e[2], others, key)
        reduced.append(_entry(_primitive(r, key), key))
    reduced.sort(key=lambda e: key(e[0]), reverse=True)
    return tuple(Polynomial._raw(ambient, e[2]) for e in reduced)


# -- public operations -----------------------------------------------------

def groebner_basis(I: Ideal, order: MonomialOrder = GREVLEX) -> Ideal:
    """Ideal generated by the reduced basis of ``I``, with its cache filled."""
    basis = I.groebner(order)
    J = Ideal(I.ambient, basis)
    J._gb[order] = basis
    return J


def normal_form(p: Polynomial, I: Ideal, order: MonomialOrder = GREVLEX) -> Polynomial:
    check_ambient(p.ambient, I.ambient)
    key = order.key
    basis = [_entry(g._terms, key) for g in I.groebner(order)]
    return Polynomial._raw(p.ambient, _reduce(p._terms, basis, key))


def ideal_member(p: Polynomial, I: Ideal) -> bool:
    return normal_form(p, I).is_zero()


def radical_member(p: Polynomial, I: Ideal) -> bool:
    """Whether some power of ``p`` lies in ``I`` (Rabinowitsch trick)."""
    check_ambient(p.ambient, I.ambient)
    if ideal_member(p, I):
        return True
    big = I.ambient.extend()
    t = Polynomial.variable(big, big.first + big.nvars - 1)
    gens = [g.embed(big) for g in I.generators]
    gens.append(1 - t * p.embed(big))
    return Ideal(big, gens).is_unit()


def same_variety(I: Ideal, J: Ideal) -> bool:
    check_ambient(I.ambient, J.ambient)
    return all(radical_member(g, J) for g in I.generators) and all(
        radical_member(g, I) for g in J.generators
    )


@dataclass(frozen=True)
class DimensionVerdict:
    """Affine dimension of a variety; ``dimension == -1`` marks the empty set."""

    ambient: int
    dimension: int

    @property
    def is_empty(self) -> bool:
        return self.dimension < 0

    @property
    def codimension(self) -> int | None:
        return None if self.is_empty else self.ambient - self.dimension

    def to_dict(self) -> dict:
        if self.is_empty:
            return {"ambient": self.ambient, "dimension": "empty", "codimension": "empty"}
        return {
            "ambient": self.ambient,
            "dimension": self.dimension,
            "codimension": self.codimension,
        }

    def __str__(self):
        if self.is_empty:
            return "empty"
        return f"dim {self.dimension}, codim {self.codimension}"


def monomial_dimension(supports, nvars: int) -> int:
    """Largest set of variables containing no support set entirely.

    ``supports`` are the variable-position sets of the generating monomials
    of a monomial ideal; the result is the dimension of its zero set.
    Branches on which variable of a smallest support is forced to vanish.
    """
    supports = frozenset(frozenset(s) for s in supports)
    if frozenset() in supports:
        return -1

    @lru_cache(maxsize=None)
    def search(sups: frozenset, free: frozenset) -> int:
        if not sups:
            return len(free)
        s = min(sups, key=lambda t: (len(t), sorted(t)))
        return max(
            search(frozenset(t for t in sups if v not in t), free - {v}) for v in s
        )

    return search(supports, frozenset(range(nvars)))


def ideal_dimension(I: Ideal) -> DimensionVerdict:
    """Dimension of V(I) from the leading monomials of a grevlex basis."""
    n = I.ambient.nvars
    supports = [
        frozenset(i for i, e in enumerate(g.leading(GREVLEX)[0]) if e)
        for g in I.groebner(GREVLEX)
    ]
    return DimensionVerdict(n, monomial_dimension(supports, n))
