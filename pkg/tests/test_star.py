from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings

from famalg.enveloping import (
    UEElement,
    pbw_inverse,
    pbw_symmetrize,
    star_coefficient,
    star_product,
    ue_commutator,
    ue_mul,
)
from famalg.lie import heisenberg3, sl2
from famalg.poisson import m2_closed_form, phi_closed_form, poisson_bracket, sym_ad_invariant
from famalg.poly import SymPoly, TPoly, monomials_upto

import oracles
from conftest import polys

SL2 = sl2()
HEIS = heisenberg3()
HEIS_TABLE = {(0, 1): {2: 1}}


def test_generators_satisfy_the_defining_relation():
    e, f, h = (UEElement.gen(SL2, i) for i in range(3))
    assert ue_commutator(e, f) == h.scale(1, t_power=1)
    assert ue_commutator(h, e) == e.scale(2, t_power=1)
    # at t = 0 everything commutes
    assert ue_commutator(f, e).at_t(0).is_zero()


def test_reordering_example():
    e, f, h = (UEElement.gen(SL2, i) for i in range(3))
    # f e = e f - t h
    assert ue_mul(f, e).to_str() == "e*f - t*h"


@settings(max_examples=30, deadline=None)
@given(polys(3, 2, 3), polys(3, 2, 3), polys(3, 2, 3))
def test_ue_associative(a, b, c):
    u, v, w = (pbw_symmetrize(SL2, x) for x in (a, b, c))
    assert ue_mul(ue_mul(u, v), w) == ue_mul(u, ue_mul(v, w))


@pytest.mark.parametrize("lie", [SL2, HEIS], ids=["sl2", "heisenberg3"])
def test_pbw_round_trip(lie):
    for exps in monomials_upto(lie.n, 4):
        m = SymPoly.monomial(exps)
        assert pbw_inverse(pbw_symmetrize(lie, m)) == TPoly.of(m)


def test_symmetrization_of_ef():
    e, f, _ = SL2.gens()
    u = pbw_symmetrize(SL2, e * f)
    # (ef + fe)/2 = ef - t h/2
    assert u.to_str() == "e*f - 1/2*t*h"


def test_star_spot_value():
    e, f, h = SL2.gens()
    s = star_product(SL2, e * e, f)
    assert s[0] == e * e * f
    assert s[1] == e * h
    assert s[2] == e.scale(Fraction(-1, 3))
    assert len(s) == 3


@pytest.mark.parametrize(
    "lie,table",
    [(SL2, oracles.SL2_BRACKET), (HEIS, HEIS_TABLE)],
    ids=["sl2", "heisenberg3"],
)
def test_star_matches_word_oracle(lie, table):
    monos = monomials_upto(lie.n, 2)
    for a, b in product(monos, repeat=2):
        ref = oracles.star_words(table, lie.n, a, b)
        got = star_product(lie, SymPoly.monomial(a), SymPoly.monomial(b))
        mine = {(e, k): c for k, coeff in enumerate(got) for e, c in coeff.items()}
        assert mine == ref, (a, b)


@pytest.mark.parametrize("lie", [SL2, HEIS], ids=["sl2", "heisenberg3"])
def test_low_order_coefficients(lie):
    monos = [SymPoly.monomial(e) for e in monomials_upto(lie.n, 2)]
    for a, b in product(monos, repeat=2):
        assert star_coefficient(lie, a, b, 0) == a * b
        assert star_coefficient(lie, a, b, 1) == poisson_bracket(lie, a, b).scale(Fraction(1, 2))
        m2 = star_coefficient(lie, a, b, 2)
        assert m2 == m2_closed_form(lie, a, b)
        assert phi_closed_form(lie, a, b) == m2.scale(4)


@settings(max_examples=25, deadline=None)
@given(polys(3, 2, 2), polys(3, 2, 2), polys(3, 2, 2))
def test_star_associative(a, b, c):
    def star(x, y):
        # full t-expansion of a product of t-polynomials
        out = TPoly(3)
        for i, xi in enumerate(x):
            for j, yj in enumerate(y):
                out = out + star_product(SL2, xi, yj).shift(i + j)
        return out

    A, B, C = (TPoly.of(x) for x in (a, b, c))
    assert star(star(A, B), C) == star(A, star(B, C))


@settings(max_examples=40, deadline=None)
@given(polys(3), polys(3), polys(3))
def test_poisson_is_a_lie_bracket_and_derivation(a, b, c):
    pb = lambda x, y: poisson_bracket(SL2, x, y)
    assert pb(a, b) == -pb(b, a)
    assert (pb(a, pb(b, c)) + pb(b, pb(c, a)) + pb(c, pb(a, b))).is_zero()
    assert pb(a, b * c) == pb(a, b) * c + b * pb(a, c)


def test_casimir_is_ad_invariant():
    e, f, h = SL2.gens()
    cas = (e * f).scale(Fraction(1, 2)) + (h * h).scale(Fraction(1, 8))
    assert sym_ad_invariant(SL2, cas)
    assert not sym_ad_invariant(SL2, e * f)


def test_phi_spot_value():
    e, f, _ = SL2.gens()
    assert phi_closed_form(SL2, e * e, f) == e.scale(Fraction(-4, 3))
    assert m2_closed_form(SL2, e * e, f) == e.scale(Fraction(-1, 3))
