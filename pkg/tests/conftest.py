from __future__ import annotations

import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from famalg.family import FamilyAlgebra, MatPoly
from famalg.lie import adjoint_rep, affine2, heisenberg3, sl2, standard_rep
from famalg.poly import SymPoly

# filled by test_acceptance, printed at the end of the run
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        ok, text = ACCEPTANCE[num]
        terminalreporter.write_line(f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  {text}")


@pytest.fixture(scope="session")
def sl2_std() -> FamilyAlgebra:
    L = sl2()
    return FamilyAlgebra(L, standard_rep(L))


@pytest.fixture(scope="session")
def sl2_adj() -> FamilyAlgebra:
    L = sl2()
    return FamilyAlgebra(L, adjoint_rep(L))


@pytest.fixture(scope="session")
def heis_std() -> FamilyAlgebra:
    L = heisenberg3()
    return FamilyAlgebra(L, standard_rep(L))


@pytest.fixture(scope="session")
def aff_std() -> FamilyAlgebra:
    L = affine2()
    return FamilyAlgebra(L, standard_rep(L))


def sl2_M(fam: FamilyAlgebra) -> MatPoly:
    e, f, h = fam.lie.gens()
    half = Fraction(1, 2)
    return MatPoly([[h.scale(half), f], [e, h.scale(-half)]])


small_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def polys(n: int, max_deg: int = 3, max_terms: int = 4):
    exps = st.tuples(*[st.integers(0, max_deg) for _ in range(n)]).filter(lambda e: sum(e) <= max_deg)
    return st.dictionaries(exps, small_rationals, max_size=max_terms).map(lambda t: SymPoly(n, t))


def matpolys(n: int, d: int, max_deg: int = 2):
    entry = polys(n, max_deg, 2)
    return st.lists(st.lists(entry, min_size=d, max_size=d), min_size=d, max_size=d).map(MatPoly)
