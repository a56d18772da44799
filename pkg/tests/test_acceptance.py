"""Acceptance criteria 1-11, one test each.

Each criterion prints a single PASS/FAIL line; the same lines are collected
into a summary at the end of the pytest run.  Running this file directly
(``python3 tests/test_acceptance.py``) prints them without pytest.
"""

from __future__ import annotations

import sys
import time
from fractions import Fraction
from itertools import product
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from famalg.enveloping import UEElement, pbw_inverse, pbw_symmetrize, star_coefficient, star_product, ue_mul
from famalg.family import FamilyAlgebra, MatPoly
from famalg.hochschild import circ, poisson_cochain
from famalg.lie import Representation, abelian, adjoint_rep, affine2, casimir, heisenberg3, sl2, standard_rep
from famalg.linalg import QMatrix, rank
from famalg.poisson import m2_closed_form, phi_closed_form, poisson_bracket
from famalg.poly import SymPoly, TPoly, monomials_upto
from famalg.suites import SUITES, run_identity_suite

from conftest import ACCEPTANCE, sl2_M


def _fam(lie, rep_fn=standard_rep) -> FamilyAlgebra:
    return FamilyAlgebra(lie, rep_fn(lie))


def _monomials(lie, degree):
    return [SymPoly.monomial(e) for e in monomials_upto(lie.n, degree)]


def _suite(fam, name, degree, budget=2000):
    rep = run_identity_suite(fam, name, degree=degree, seed=0, budget=budget)
    bad = [(c.label, c.nonzero) for c in rep.checks if c.gating and not c.ok]
    return rep, bad


def criterion_1():
    start = time.perf_counter()
    fam = _fam(sl2())
    M = sl2_M(fam)
    classical = fam.is_classical_invariant(M)
    quantum = fam.is_quantum_invariant(fam.fpbw(M))
    elapsed = time.perf_counter() - start
    ok = classical and quantum and elapsed < 1.0
    return ok, f"M classical={classical} quantum={quantum} in {elapsed:.3f}s"


def criterion_2():
    mism = []
    pairs = 0
    for lie in (sl2(), heisenberg3()):
        monos = _monomials(lie, 3)
        for a, b in product(monos, repeat=2):
            pairs += 1
            if star_coefficient(lie, a, b, 1) != poisson_bracket(lie, a, b).scale(Fraction(1, 2)):
                mism.append((lie.label, a.to_str(lie.names), b.to_str(lie.names)))
    return not mism, f"m1 = P/2 on {pairs} monomial pairs, mismatches {mism[:5]}"


def criterion_3():
    mism = []
    pairs = 0
    for lie in (sl2(), heisenberg3()):
        names = lie.names
        for a, b in product(_monomials(lie, 3), repeat=2):
            pairs += 1
            m2 = star_coefficient(lie, a, b, 2)
            closed = m2_closed_form(lie, a, b)
            if m2 != closed:
                mism.append(f"{lie.label} m2({a.to_str(names)}, {b.to_str(names)}): "
                            f"star {m2.to_str(names)} vs closed form {closed.to_str(names)}")
            if phi_closed_form(lie, a, b) != m2.scale(4):
                mism.append(f"{lie.label} phi != 4 m2 at ({a.to_str(names)}, {b.to_str(names)})")
    return not mism, f"m2 = closed form and phi = 4 m2 on {pairs} pairs; mismatches: {mism[:5] or 'none'}"


def criterion_4():
    parts = []
    ok = True
    for rep_fn in (standard_rep, adjoint_rep):
        fam = _fam(sl2(), rep_fn)
        rep, bad = _suite(fam, "main_theorem", 2)
        sign = rep.notes["sign"]
        control = rep.notes["negative_control"]
        ok &= not bad and sign["P + dH nabla = 0"] and control == "observed"
        parts.append(f"{rep.representation}: {len(fam.invariant_basis(2))} invariants, "
                     f"P + dH nabla = 0 {sign['P + dH nabla = 0']}, dH nabla = P {sign['dH nabla = P']}, "
                     f"negative control {control}")
    return ok, "; ".join(parts)


def criterion_5():
    parts = []
    ok = True
    for lie in (sl2(), affine2()):
        rep, bad = _suite(_fam(lie), "dP_zero", 2, budget=None)
        ok &= not bad and rep.budget is None
        parts.append(f"{lie.label}: {rep.tuple_count} triples, {len(bad)} failing checks")
    return ok, "dH P = 0 by full enumeration; " + "; ".join(parts)


def criterion_6():
    parts = []
    ok = True
    for lie in (sl2(), affine2()):
        rep, bad = _suite(_fam(lie), "PP_plus_dPhi", 2, budget=None)
        levels = [c.label for c in rep.checks]
        ok &= not bad and len(levels) == 2
        parts.append(f"{lie.label}: {rep.tuple_count} triples over {len(levels)} levels")
    fam = _fam(sl2())
    e, f, _ = fam.lie.gens()
    P = poisson_cochain(fam)
    spot = circ(P, P)(fam.scalar(e), fam.scalar(e), fam.scalar(f))
    spot_ok = spot == fam.scalar(e.scale(-2))
    ok &= spot_ok
    parts.append(f"(P o P)(e, e, f) = {spot.to_str(fam.lie.names)}")
    return ok, "; ".join(parts)


def criterion_7():
    fam = _fam(sl2())
    dims = [len(fam.invariant_basis(D)) for D in (0, 1)]
    basis = list(fam.invariant_basis(1))
    M = sl2_M(fam)

    def coords(A):
        return {(p, q, e): c for p in range(2) for q in range(2) for e, c in A.entries[p][q].items()}

    keys = sorted({k for A in basis + [fam.identity(), M] for k in coords(A)})
    vec = lambda A: [coords(A).get(k, Fraction(0)) for k in keys]
    same_span = rank([vec(A) for A in basis]) == 2 and rank([vec(A) for A in basis + [fam.identity(), M]]) == 2
    ok = dims == [1, 2] and same_span
    return ok, f"dims D=0,1 -> {dims}; degree-1 basis spans {{Id, M}}: {same_span}"


def criterion_8():
    sl = _fam(sl2())
    cas = casimir(sl.lie)
    nab = sl.nabla(sl.scalar(cas)) == sl2_M(sl).scale(Fraction(1, 2))
    prime = all(sl.nabla(A) == sl.nabla_prime(A) for A in sl.invariant_basis(2))
    aff = _fam(affine2())
    c1 = all(aff.nabla(A) - aff.nabla_prime(A) == -aff.chern_c1(A) for A in aff.invariant_basis(2))
    rep, bad = _suite(sl, "nabla_basis_independence", 2)
    changes = sum(1 for c in rep.checks if c.label.startswith("transported nabla"))
    basis_ok = not bad and changes == 3
    ok = nab and prime and c1 and basis_ok
    return ok, (f"nabla(Id (x) Cas) = M/2 {nab}; nabla = nabla' on sl2 invariants {prime}; "
                f"nabla - nabla' = -c1 on affine2 invariants {c1}; basis independent under {changes} changes {basis_ok}")


def criterion_9():
    trip = True
    for lie in (sl2(), heisenberg3(), affine2()):
        for m in _monomials(lie, 4):
            trip &= pbw_inverse(pbw_symmetrize(lie, m)) == TPoly.of(m)
    L = sl2()
    C = pbw_symmetrize(L, casimir(L))
    central = all((ue_mul(C, X) - ue_mul(X, C)).is_zero() for X in (UEElement.gen(L, i) for i in range(3)))
    fam = _fam(L)
    image = all(fam.is_quantum_invariant(fam.fpbw(A)) for A in fam.invariant_basis(2))
    ok = trip and central and image
    return ok, f"round trip to degree 4 {trip}; I_PBW(Cas) central {central}; fpbw(invariants) quantum invariant {image}"


def criterion_10():
    fam = _fam(sl2())
    parts = []
    ok = True
    for name in ("d_is_bracket_mu", "mu_square_zero", "mc_order2", "infinitesimal_trivial"):
        rep, bad = _suite(fam, name, 2)
        ok &= not bad
        parts.append(f"{name} {rep.tuple_count} tuples {'ok' if not bad else bad}")
    return ok, "; ".join(parts)


def criterion_11():
    L = abelian(2)
    tau = (QMatrix.from_rows([[0, 1], [0, 0]]), QMatrix.from_rows([[2, 1], [0, 2]]))
    fam = FamilyAlgebra(L, Representation(tau))
    monos = _monomials(L, 3)
    p_zero = all(poisson_bracket(L, a, b).is_zero() for a, b in product(monos, repeat=2))
    star_is_product = all(star_product(L, a, b) == TPoly.of(a * b) for a, b in product(monos, repeat=2))
    grad = all(
        fam.nabla(fam.scalar(a)) == MatPoly.tensor(tau[0], a.partial(0)) + MatPoly.tensor(tau[1], a.partial(1))
        for a in monos
    )
    failing = [name for name in SUITES if not run_identity_suite(fam, name, degree=2).passed]
    ok = p_zero and star_is_product and grad and not failing
    return ok, (f"abelian(2): P = 0 {p_zero}; star = product {star_is_product}; "
                f"nabla = contracted gradient {grad}; failing suites {failing or 'none'}")


CRITERIA = {i: globals()[f"criterion_{i}"] for i in range(1, 12)}


def _record(num: int) -> tuple[bool, str]:
    start = time.perf_counter()
    ok, detail = CRITERIA[num]()
    detail = f"{detail} [{time.perf_counter() - start:.1f}s]"
    ACCEPTANCE[num] = (ok, detail)
    print(f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
    return ok, detail


@pytest.mark.parametrize("num", list(CRITERIA))
def test_criterion(num):
    ok, detail = _record(num)
    assert ok, detail


if __name__ == "__main__":
    results = [_record(n)[0] for n in CRITERIA]
    sys.exit(0 if all(results) else 1)
