from fractions import Fraction
from itertools import product

import pytest

from famalg.hochschild import (
    Cochain,
    atoms,
    circ,
    d_hochschild,
    gerstenhaber_bracket,
    identity_cochain,
    is_coboundary_witness,
    mu,
    nabla_cochain,
    poisson_cochain,
)
from famalg.family import MatPoly
from famalg.poly import SymPoly, monomials_upto


def _span(fam, degree=1):
    out = []
    for exps in monomials_upto(fam.n, degree):
        for p in range(fam.d):
            for q in range(fam.d):
                out.append(MatPoly.unit(fam.d, p, q, SymPoly.monomial(exps)))
    return out


def test_arity_is_enforced(sl2_std):
    P = poisson_cochain(sl2_std)
    with pytest.raises(TypeError):
        P(sl2_std.identity())
    with pytest.raises(ValueError):
        P + identity_cochain()


def test_circle_product_sign_for_two_cochains(sl2_std):
    P = poisson_cochain(sl2_std)
    pp = circ(P, P)
    els = _span(sl2_std)[:8]
    for a, b, c in product(els, repeat=3):
        assert pp(a, b, c) == P(a, P(b, c)) - P(P(a, b), c)


def test_PP_spot_value(sl2_std):
    e, f, _ = sl2_std.lie.gens()
    E, F = sl2_std.scalar(e), sl2_std.scalar(f)
    P = poisson_cochain(sl2_std)
    assert circ(P, P)(E, E, F) == sl2_std.scalar(e.scale(-2))


def test_circle_with_identity(sl2_std):
    P = poisson_cochain(sl2_std)
    one = identity_cochain()
    els = _span(sl2_std)[:6]
    for a, b in product(els, repeat=2):
        assert circ(P, one)(a, b) == P(a, b).scale(2)
        assert circ(one, P)(a, b) == P(a, b)


def test_mu_is_associative(sl2_std):
    m = mu()
    br = gerstenhaber_bracket(m, m)
    for a, b, c in product(_span(sl2_std)[:6], repeat=3):
        assert br(a, b, c).is_zero()


def test_differential_squares_to_zero(sl2_std):
    for name in ("nabla", "c1", "P"):
        f = atoms(sl2_std)[name]
        dd = d_hochschild(d_hochschild(f))
        els = _span(sl2_std)[:5]
        for tup in product(els, repeat=f.arity + 2):
            assert dd(*tup).is_zero(), name


def test_graded_antisymmetry(sl2_std):
    at = atoms(sl2_std)
    els = _span(sl2_std)[:5]
    for f1, f2 in [(at["P"], at["nabla"]), (at["nabla"], at["c1"]), (at["P"], at["Phi"])]:
        k, l = f1.arity, f2.arity
        sign = -1 if ((k - 1) * (l - 1)) % 2 else 1
        b12, b21 = gerstenhaber_bracket(f1, f2), gerstenhaber_bracket(f2, f1)
        for tup in product(els, repeat=k + l - 1):
            total = b12(*tup) + (b21(*tup) if sign == 1 else -b21(*tup))
            assert total.is_zero()


def test_dH_is_bracket_with_mu(sl2_std):
    m = mu()
    els = _span(sl2_std)[:6]
    for name in ("id", "nabla", "P"):
        f = atoms(sl2_std)[name]
        lhs, rhs = d_hochschild(f), gerstenhaber_bracket(m, f)
        for tup in product(els, repeat=f.arity + 1):
            assert lhs(*tup) == rhs(*tup)


def test_nabla_witnesses_minus_P_on_invariants(sl2_std):
    inv = list(sl2_std.invariant_basis(2))
    minus_P = -poisson_cochain(sl2_std)
    assert is_coboundary_witness(minus_P, nabla_cochain(sl2_std), list(product(inv, repeat=2))) == []
    e, f, _ = sl2_std.lie.gens()
    off = [(sl2_std.scalar(e), sl2_std.scalar(f))]
    assert is_coboundary_witness(minus_P, nabla_cochain(sl2_std), off) == off


def test_scale_and_labels(sl2_std):
    P = poisson_cochain(sl2_std)
    half = P.scale(Fraction(1, 2))
    e, f, h = sl2_std.lie.gens()
    E, F = sl2_std.scalar(e), sl2_std.scalar(f)
    assert half(E, F) == sl2_std.scalar(h.scale(Fraction(1, 2)))
    assert repr(circ(P, P)) == "Cochain[3]((P o P))"
    assert isinstance(-P, Cochain)
