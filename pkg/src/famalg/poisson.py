"""Poisson bracket on S(g) and the closed-form second-order cochains."""

from __future__ import annotations

from fractions import Fraction

from .lie import LieAlgebra
from .poly import DimensionError, SymPoly


def _check(lie: LieAlgebra, *polys: SymPoly) -> None:
    for p in polys:
        if p.n != lie.n:
            raise DimensionError(f"polynomial has {p.n} generators, algebra has {lie.n}")


def poisson_bracket(lie: LieAlgebra, a: SymPoly, b: SymPoly) -> SymPoly:
    """``{a, b} = c^k_ij X_k d^i a d^j b``."""
    _check(lie, a, b)
    n = lie.n
    if not a or not b or not lie.nonzero_constants:
        return SymPoly.zero(n)
    da = [a.partial(i) for i in range(n)]
    db = [b.partial(j) for j in range(n)]
    total = SymPoly.zero(n)
    for i, j, k, c in lie.nonzero_constants:
        if da[i] and db[j]:
            total = total + (lie.gen(k) * da[i] * db[j]).scale(c)
    return total


def sym_ad_invariant(lie: LieAlgebra, a: SymPoly) -> bool:
    """True iff ``{X_j, a} = 0`` for every generator, i.e. ``a`` lies in I(g)."""
    return all(not poisson_bracket(lie, lie.gen(j), a) for j in range(lie.n))


def _second_order_form(lie: LieAlgebra, a: SymPoly, b: SymPoly, w_quad: Fraction, w_lin: Fraction) -> SymPoly:
    """``w_quad c^s_ij c^t_kl X_s X_t d^i d^k a d^j d^l b
    + w_lin c^t_ks c^s_ji X_t (d^k d^j a d^i b + d^i a d^k d^j b)``, all indices summed."""
    _check(lie, a, b)
    n = lie.n
    zero = SymPoly.zero(n)
    if not a or not b or not lie.nonzero_constants:
        return zero
    da = [a.partial(i) for i in range(n)]
    db = [b.partial(i) for i in range(n)]
    dda = [[da[i].partial(k) for k in range(n)] for i in range(n)]
    ddb = [[db[j].partial(l) for l in range(n)] for j in range(n)]
    X = lie.gens()
    nz = lie.nonzero_constants

    quad = zero
    for i, j, s, c1 in nz:
        for k, l, t, c2 in nz:
            if dda[i][k] and ddb[j][l]:
                quad = quad + (X[s] * X[t] * dda[i][k] * ddb[j][l]).scale(c1 * c2)

    lin = zero
    # c^t_ks c^s_ji : first constant indexed (k, s -> t), second (j, i -> s)
    for j, i, s, c2 in nz:
        for k, s2, t, c1 in nz:
            if s2 != s:
                continue
            part = zero
            if dda[k][j] and db[i]:
                part = part + dda[k][j] * db[i]
            if da[i] and ddb[k][j]:
                part = part + da[i] * ddb[k][j]
            if part:
                lin = lin + (X[t] * part).scale(c1 * c2)
    return quad.scale(w_quad) + lin.scale(w_lin)


def m2_closed_form(lie: LieAlgebra, a: SymPoly, b: SymPoly) -> SymPoly:
    """Closed-form ``t^2`` coefficient of the symmetrized star product (weights 1/8, 1/12)."""
    return _second_order_form(lie, a, b, Fraction(1, 8), Fraction(1, 12))


def phi_closed_form(lie: LieAlgebra, a: SymPoly, b: SymPoly) -> SymPoly:
    """The 2-cochain bounding the Jacobiator of the Poisson bracket (weights 1/2, 1/3)."""
    return _second_order_form(lie, a, b, Fraction(1, 2), Fraction(1, 3))
