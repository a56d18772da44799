from fractions import Fraction

import pytest
from hypothesis import given, settings

from famalg.poly import DimensionError, SymPoly, TPoly, as_fraction, monomials, monomials_upto

from conftest import polys

X, Y, Z = (SymPoly.gen(3, i) for i in range(3))


def test_as_fraction_rejects_floats_and_bools():
    assert as_fraction("3/6") == Fraction(1, 2)
    assert as_fraction(4) == 4
    with pytest.raises(TypeError):
        as_fraction(0.5)
    with pytest.raises(TypeError):
        as_fraction(True)


def test_zero_terms_are_dropped():
    p = SymPoly(3, {(1, 0, 0): 1, (0, 1, 0): 0})
    assert dict(p.terms) == {(1, 0, 0): 1}
    assert (X - X).is_zero()
    assert (X - X).degree() == -1


def test_product_and_power():
    p = (X + Y) ** 2
    assert p == X * X + (X * Y).scale(2) + Y * Y
    assert (X * Y).degree() == 2
    assert X ** 0 == SymPoly.const(3, 1)


def test_partial_derivative():
    p = X ** 3 * Y + Z.scale("1/2")
    assert p.partial(0) == (X ** 2 * Y).scale(3)
    assert p.partial(2) == SymPoly.const(3, "1/2")
    with pytest.raises(IndexError):
        p.partial(3)


def test_dimension_mismatch():
    with pytest.raises(DimensionError):
        X + SymPoly.gen(2, 0)


def test_to_str_graded_lex_order():
    p = SymPoly.const(3, -7) + Z.scale(Fraction(-1, 2)) + (X * Y).scale(-1) + X ** 2
    assert p.to_str(["e", "f", "h"]) == "e^2 - e*f - 1/2*h - 7"
    assert SymPoly.zero(3).to_str() == "0"


def test_homogeneous_part_and_constant():
    p = X * Y + Z + SymPoly.const(3, 5)
    assert p.homogeneous_part(1) == Z
    assert p.constant_term() == 5


def test_substitute():
    p = X * Y
    assert p.substitute([Y, X + Z, Z]) == Y * X + Y * Z


def test_monomial_counts():
    assert len(monomials(3, 2)) == 6
    assert len(monomials_upto(3, 2)) == 10
    assert monomials(2, 2) == [(2, 0), (1, 1), (0, 2)]


def test_tpoly_strips_and_evaluates():
    tp = TPoly(3, [X, Y, SymPoly.zero(3)])
    assert len(tp) == 2
    assert tp[5].is_zero()
    assert tp.at(2) == X + Y.scale(2)
    assert tp.shift().at(1) == X + Y
    assert tp.to_str(["e", "f", "h"]) == "e + t*(f)"


@settings(max_examples=60, deadline=None)
@given(polys(3), polys(3), polys(3))
def test_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a + b - b == a


@settings(max_examples=60, deadline=None)
@given(polys(3), polys(3))
def test_leibniz(a, b):
    for i in range(3):
        assert (a * b).partial(i) == a.partial(i) * b + a * b.partial(i)


@settings(max_examples=60, deadline=None)
@given(polys(3))
def test_hash_consistent_with_eq(a):
    b = SymPoly(3, dict(a.terms))
    assert a == b and hash(a) == hash(b)
