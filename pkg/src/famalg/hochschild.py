"""Evaluable Hochschild cochains on End(V) (x) S(g).

A :class:`Cochain` is a multilinear map given by a Python callable; the
differential, the circle product and the Gerstenhaber bracket build new
callables from old ones.  Identities are checked by evaluating on tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .family import FamilyAlgebra, MatPoly, mat_mul
from .poly import as_fraction


@dataclass(frozen=True)
class Cochain:
    arity: int
    fn: Callable[..., MatPoly]
    label: str

    def __call__(self, *args: MatPoly) -> MatPoly:
        if len(args) != self.arity:
            raise TypeError(f"{self.label} takes {self.arity} arguments, got {len(args)}")
        return self.fn(*args)

    def _same_arity(self, other: "Cochain") -> None:
        if self.arity != other.arity:
            raise ValueError(f"cannot combine arities {self.arity} and {other.arity}")

    def __add__(self, other: "Cochain") -> "Cochain":
        self._same_arity(other)
        return Cochain(self.arity, lambda *a: self(*a) + other(*a), f"({self.label} + {other.label})")

    def __sub__(self, other: "Cochain") -> "Cochain":
        self._same_arity(other)
        return Cochain(self.arity, lambda *a: self(*a) - other(*a), f"({self.label} - {other.label})")

    def __neg__(self) -> "Cochain":
        return Cochain(self.arity, lambda *a: -self(*a), f"-{self.label}")

    def scale(self, c) -> "Cochain":
        c = as_fraction(c)
        return Cochain(self.arity, lambda *a: self(*a).scale(c), f"{c}*{self.label}")

    def __repr__(self) -> str:
        return f"Cochain[{self.arity}]({self.label})"


def d_hochschild(f: Cochain) -> Cochain:
    """``a0 f(a1..an) + sum_k (-1)^k f(.., a_{k-1} a_k, ..) + (-1)^{n+1} f(a0..a_{n-1}) a_n``."""
    n = f.arity

    def dh(*a: MatPoly) -> MatPoly:
        out = mat_mul(a[0], f(*a[1:]))
        for k in range(1, n + 1):
            args = a[: k - 1] + (mat_mul(a[k - 1], a[k]),) + a[k + 1:]
            term = f(*args)
            out = out - term if k % 2 else out + term
        last = mat_mul(f(*a[:n]), a[n])
        return out - last if (n + 1) % 2 else out + last

    return Cochain(n + 1, dh, f"dH({f.label})")


def circ(f1: Cochain, f2: Cochain) -> Cochain:
    """Signed insertion ``sum_i (-1)^{(k-i-1)(l-1)} f1(.., f2(a_{i+1}..a_{i+l}), ..)``."""
    k, l = f1.arity, f2.arity
    if k < 1 or l < 1:
        raise ValueError("circle product needs arities >= 1")

    def c(*a: MatPoly) -> MatPoly:
        out = None
        for i in range(k):
            inner = f2(*a[i:i + l])
            term = f1(*a[:i], inner, *a[i + l:])
            if ((k - i - 1) * (l - 1)) % 2:
                term = -term
            out = term if out is None else out + term
        return out

    return Cochain(k + l - 1, c, f"({f1.label} o {f2.label})")


def gerstenhaber_bracket(f1: Cochain, f2: Cochain) -> Cochain:
    """``f1 o f2 - (-1)^{(k-1)(l-1)} f2 o f1``."""
    k, l = f1.arity, f2.arity
    a, b = circ(f1, f2), circ(f2, f1)
    sign_even = ((k - 1) * (l - 1)) % 2 == 0
    combined = a - b if sign_even else a + b
    return Cochain(combined.arity, combined.fn, f"[{f1.label}, {f2.label}]_G")


# atoms

def mu() -> Cochain:
    return Cochain(2, mat_mul, "mu")


def identity_cochain() -> Cochain:
    return Cochain(1, lambda a: a, "id")


def poisson_cochain(fam: FamilyAlgebra) -> Cochain:
    return Cochain(2, fam.nc_poisson, "P")


def phi_cochain(fam: FamilyAlgebra) -> Cochain:
    return Cochain(2, fam.phi, "Phi")


def nabla_cochain(fam: FamilyAlgebra) -> Cochain:
    return Cochain(1, fam.nabla, "nabla")


def nabla_prime_cochain(fam: FamilyAlgebra) -> Cochain:
    return Cochain(1, fam.nabla_prime, "nabla'")


def c1_cochain(fam: FamilyAlgebra) -> Cochain:
    return Cochain(1, fam.chern_c1, "c1")


def star_cochain(fam: FamilyAlgebra, k: int) -> Cochain:
    """The order-``k`` coefficient ``m_k`` of the star product, as a 2-cochain."""
    return Cochain(2, lambda a, b: fam.star_coefficient(a, b, k), f"m{k}")


def atoms(fam: FamilyAlgebra) -> dict[str, Cochain]:
    return {
        "id": identity_cochain(),
        "mu": mu(),
        "P": poisson_cochain(fam),
        "Phi": phi_cochain(fam),
        "nabla": nabla_cochain(fam),
        "nabla'": nabla_prime_cochain(fam),
        "c1": c1_cochain(fam),
        "m1": star_cochain(fam, 1),
        "m2": star_cochain(fam, 2),
    }


def is_coboundary_witness(f: Cochain, g: Cochain, tuples) -> list[tuple]:
    """Pairs where ``f(a, b) != a g(b) - g(ab) + g(a) b``; empty means ``g`` witnesses ``f = dH g``."""
    dg = d_hochschild(g)
    return [t for t in tuples if not (f(*t) - dg(*t)).is_zero()]

