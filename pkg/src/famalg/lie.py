"""Lie algebras by structure constants, matrix representations and base change.

Structure constants are stored densely as ``c[i][j][k]`` with
``[X_i, X_j] = sum_k c[i][j][k] X_k`` (0-based indices throughout the code;
the configuration format and reports use 1-based indices).

Invariance under the simply connected group is only ever tested through the
Lie-algebra action; for connected simply connected groups the two agree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .linalg import QMatrix, SingularMatrixError
from .poly import SymPoly, as_fraction


class LieValidationError(ValueError):
    """A Lie algebra or representation fails its defining identities."""

    def __init__(self, violations: Sequence["Violation"]):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations[:5]))


class NotSemisimpleError(ValueError):
    pass


@dataclass(frozen=True)
class Violation:
    kind: str  # "antisymmetry", "jacobi", "homomorphism", "shape"
    indices: tuple[int, ...]  # 1-based
    detail: str = ""

    def __str__(self) -> str:
        where = ",".join(str(i) for i in self.indices)
        msg = f"{self.kind} violation at ({where})"
        return f"{msg}: {self.detail}" if self.detail else msg


Tensor3 = tuple[tuple[tuple[Fraction, ...], ...], ...]


@dataclass(frozen=True, eq=False)
class LieAlgebra:
    names: tuple[str, ...]
    c: Tensor3
    label: str = "custom"

    def __post_init__(self):
        n = len(self.names)
        if len(set(self.names)) != n:
            raise ValueError("basis names must be distinct")
        if len(self.c) != n or any(len(r) != n or any(len(s) != n for s in r) for r in self.c):
            raise ValueError("structure constant tensor must be n x n x n")

    @property
    def n(self) -> int:
        return len(self.names)

    @classmethod
    def from_tensor(cls, names: Sequence[str], c, label: str = "custom") -> "LieAlgebra":
        n = len(names)
        data = tuple(
            tuple(tuple(as_fraction(c[i][j][k]) for k in range(n)) for j in range(n)) for i in range(n)
        )
        return cls(tuple(names), data, label)

    @classmethod
    def from_brackets(
        cls,
        names: Sequence[str],
        brackets: Iterable[tuple[int, int, int, object]],
        label: str = "custom",
    ) -> "LieAlgebra":
        """Build from ``(i, j, k, value)`` entries (0-based) meaning ``c^k_ij = value``.

        Entries given only for ``(i, j)`` are mirrored to ``(j, i)`` with opposite sign;
        entries given in both orders are kept as written so inconsistencies surface
        in :func:`validate_lie`.
        """
        n = len(names)
        c = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
        given: set[tuple[int, int, int]] = set()
        for i, j, k, v in brackets:
            for idx in (i, j, k):
                if not 0 <= idx < n:
                    raise IndexError(f"bracket index {idx + 1} out of range 1..{n}")
            if (i, j, k) in given:
                raise ValueError(f"duplicate bracket entry ({i + 1},{j + 1},{k + 1})")
            given.add((i, j, k))
            c[i][j][k] = as_fraction(v)
        for i, j, k in given:
            if (j, i, k) not in given:
                c[j][i][k] = -c[i][j][k]
        return cls.from_tensor(names, c, label)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown generator {name!r}") from None

    @cached_property
    def nonzero_constants(self) -> tuple[tuple[int, int, int, Fraction], ...]:
        """Sparse list of ``(i, j, k, c^k_ij)`` with nonzero value."""
        n = self.n
        return tuple(
            (i, j, k, self.c[i][j][k])
            for i in range(n)
            for j in range(n)
            for k in range(n)
            if self.c[i][j][k]
        )

    @cached_property
    def cache(self) -> dict:
        """Per-algebra memo tables used by the enveloping-algebra routines."""
        return {}

    def gen(self, i: int) -> SymPoly:
        return SymPoly.gen(self.n, i)

    def gens(self) -> list[SymPoly]:
        return [self.gen(i) for i in range(self.n)]

    def bracket_vector(self, i: int, j: int) -> tuple[Fraction, ...]:
        return self.c[i][j]

    def ad_matrix(self, i: int) -> QMatrix:
        """Matrix of ``ad X_i`` acting on column coordinates: entry ``(k, j) = c^k_ij``."""
        n = self.n
        return QMatrix.from_rows([[self.c[i][j][k] for j in range(n)] for k in range(n)])

    def is_abelian(self) -> bool:
        return not self.nonzero_constants

    def __repr__(self) -> str:
        return f"LieAlgebra({self.label!r}, names={self.names})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.names == other.names and self.c == other.c

    def __hash__(self) -> int:
        return hash((self.names, self.c))


@dataclass(frozen=True, eq=False)
class Representation:
    """Matrices ``tau(X_i)`` of a finite-dimensional representation."""

    matrices: tuple[QMatrix, ...]
    label: str = "custom"

    @property
    def d(self) -> int:
        return self.matrices[0].shape[0] if self.matrices else 0

    def __getitem__(self, i: int) -> QMatrix:
        return self.matrices[i]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Representation):
            return NotImplemented
        return self.matrices == other.matrices

    def __hash__(self) -> int:
        return hash(self.matrices)


# presets

def sl2() -> LieAlgebra:
    """Basis ``e, f, h`` with ``[e,f]=h, [h,e]=2e, [h,f]=-2f``."""
    e, f, h = 0, 1, 2
    return LieAlgebra.from_brackets(
        ("e", "f", "h"), [(e, f, h, 1), (h, e, e, 2), (h, f, f, -2)], label="sl2"
    )


def heisenberg3() -> LieAlgebra:
    return LieAlgebra.from_brackets(("p", "q", "z"), [(0, 1, 2, 1)], label="heisenberg3")


def affine2() -> LieAlgebra:
    """The nonabelian two-dimensional algebra ``[a,b]=b``."""
    return LieAlgebra.from_brackets(("a", "b"), [(0, 1, 1, 1)], label="affine2")


def abelian(n: int) -> LieAlgebra:
    if n < 1:
        raise ValueError("abelian(n) needs n >= 1")
    names = tuple(f"x{i + 1}" for i in range(n))
    return LieAlgebra.from_brackets(names, [], label=f"abelian({n})")


PRESETS = {"sl2": sl2, "heisenberg3": heisenberg3, "affine2": affine2}


def preset(name: str) -> LieAlgebra:
    name = name.strip()
    if name.startswith("abelian(") and name.endswith(")"):
        return abelian(int(name[len("abelian("):-1]))
    try:
        return PRESETS[name]()
    except KeyError:
        raise KeyError(f"unknown algebra preset {name!r}") from None


def trivial_rep(lie: LieAlgebra) -> Representation:
    return Representation(tuple(QMatrix.zeros(1, 1) for _ in range(lie.n)), label="trivial")


def adjoint_rep(lie: LieAlgebra) -> Representation:
    return Representation(tuple(lie.ad_matrix(i) for i in range(lie.n)), label="adjoint")


def _unit(d: int, p: int, q: int, c=1) -> QMatrix:
    rows = [[0] * d for _ in range(d)]
    rows[p][q] = c
    return QMatrix.from_rows(rows)


def standard_rep(lie: LieAlgebra) -> Representation:
    """Smallest faithful matrix representation for the shipped presets."""
    if lie.label == "sl2":
        mats = (_unit(2, 0, 1), _unit(2, 1, 0), QMatrix.diag([1, -1]))
    elif lie.label == "heisenberg3":
        mats = (_unit(3, 0, 1), _unit(3, 1, 2), _unit(3, 0, 2))
    elif lie.label == "affine2":
        mats = (_unit(2, 0, 0), _unit(2, 0, 1))
    else:
        raise KeyError(f"no standard representation shipped for {lie.label!r}")
    return Representation(mats, label="standard")


def rep_preset(lie: LieAlgebra, name: str) -> Representation:
    builders = {"trivial": trivial_rep, "adjoint": adjoint_rep, "standard": standard_rep}
    try:
        return builders[name.strip()](lie)
    except KeyError as exc:
        if name.strip() in builders:
            raise
        raise KeyError(f"unknown representation preset {name!r}") from exc


# validity checks

def validate_lie(lie: LieAlgebra) -> list[Violation]:
    """Every antisymmetry and Jacobi failure; empty iff ``lie`` is a Lie algebra."""
    n, c = lie.n, lie.c
    out: list[Violation] = []
    for i in range(n):
        for j in range(i, n):
            for k in range(n):
                if c[i][j][k] != -c[j][i][k]:
                    out.append(
                        Violation(
                            "antisymmetry",
                            (i + 1, j + 1, k + 1),
                            f"c^{k + 1}_{i + 1}{j + 1}={c[i][j][k]} but c^{k + 1}_{j + 1}{i + 1}={c[j][i][k]}",
                        )
                    )
    if out:
        return out
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                for l in range(n):
                    s = sum(
                        (
                            c[i][j][m] * c[m][k][l] + c[j][k][m] * c[m][i][l] + c[k][i][m] * c[m][j][l]
                            for m in range(n)
                        ),
                        Fraction(0),
                    )
                    if s:
                        out.append(Violation("jacobi", (i + 1, j + 1, k + 1, l + 1), f"residual {s}"))
    return out


def validate_rep(lie: LieAlgebra, rep: Representation) -> list[Violation]:
    """Failures of ``[tau(X_i), tau(X_j)] = c^k_ij tau(X_k)``; empty iff ``rep`` is valid."""
    if len(rep.matrices) != lie.n:
        raise ValueError(f"representation has {len(rep.matrices)} matrices, algebra has dimension {lie.n}")
    d = rep.d
    for m in rep.matrices:
        if m.shape != (d, d):
            raise ValueError(f"representation matrices must all be {d}x{d}, got {m.shape}")
    out = []
    for i in range(lie.n):
        for j in range(i + 1, lie.n):
            lhs = rep[i] @ rep[j] - rep[j] @ rep[i]
            rhs = QMatrix.zeros(d, d)
            for k in range(lie.n):
                if lie.c[i][j][k]:
                    rhs = rhs + rep[k].scale(lie.c[i][j][k])
            if lhs != rhs:
                out.append(Violation("homomorphism", (i + 1, j + 1), f"{lie.names[i]},{lie.names[j]}"))
    return out


def killing_form(lie: LieAlgebra) -> QMatrix:
    """``B_ij = sum_{k,l} c^l_ik c^k_jl``."""
    n, c = lie.n, lie.c
    return QMatrix.from_rows(
        [
            [sum((c[i][k][l] * c[j][l][k] for k in range(n) for l in range(n)), Fraction(0)) for j in range(n)]
            for i in range(n)
        ]
    )


def casimir(lie: LieAlgebra) -> SymPoly:
    """Quadratic Casimir ``B^{ij} X_i X_j`` from the inverse Killing form."""
    B = killing_form(lie)
    try:
        Binv = B.inverse()
    except SingularMatrixError:
        raise NotSemisimpleError(f"{lie.label}: Killing form is degenerate") from None
    n = lie.n
    gens = lie.gens()
    total = SymPoly.zero(n)
    for i in range(n):
        for j in range(n):
            if Binv[i, j]:
                total = total + (gens[i] * gens[j]).scale(Binv[i, j])
    return total


# base change: new basis Y_j = sum_k T[k][j] X_k

@dataclass(frozen=True)
class BasisChange:
    T: QMatrix
    Tinv: QMatrix = field(init=False, repr=False)

    def __post_init__(self):
        m, n = self.T.shape
        if m != n:
            raise SingularMatrixError("basis change must be square")
        object.__setattr__(self, "Tinv", self.T.inverse())

    @classmethod
    def from_rows(cls, rows) -> "BasisChange":
        return cls(QMatrix.from_rows(rows))

    def compose(self, other: "BasisChange") -> "BasisChange":
        """Apply ``self`` first, then ``other`` (expressed in the new basis)."""
        return BasisChange(self.T @ other.T)

    def inverse(self) -> "BasisChange":
        return BasisChange(self.Tinv)


def change_basis(lie: LieAlgebra, bc: BasisChange, names: Sequence[str] | None = None) -> LieAlgebra:
    """Structure constants in the basis ``Y_j = T^k_j X_k``."""
    n = lie.n
    T, Ti = bc.T, bc.Tinv
    if T.shape != (n, n):
        raise ValueError("basis change has wrong size")
    c = lie.c
    # [Y_i, Y_j] = T^a_i T^b_j c^k_ab X_k = T^a_i T^b_j c^k_ab (T^-1)^m_k Y_m
    new = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for a, b, k, v in lie.nonzero_constants:
        for i in range(n):
            if not T[a, i]:
                continue
            for j in range(n):
                if not T[b, j]:
                    continue
                w = T[a, i] * T[b, j] * v
                for m in range(n):
                    if Ti[m, k]:
                        new[i][j][m] += w * Ti[m, k]
    return LieAlgebra.from_tensor(tuple(names) if names else lie.names, new, label=lie.label)


def transport_poly(p: SymPoly, bc: BasisChange) -> SymPoly:
    """Rewrite ``p`` (in old coordinates) in the new generators: ``X_k = (T^-1)^j_k Y_j``."""
    n = p.n
    Ti = bc.Tinv
    images = [
        sum((SymPoly.gen(n, j).scale(Ti[j, k]) for j in range(n) if Ti[j, k]), SymPoly.zero(n))
        for k in range(n)
    ]
    return p.substitute(images)


def transport_rep(rep: Representation, bc: BasisChange) -> Representation:
    """``tau(Y_j) = T^k_j tau(X_k)``."""
    n = len(rep.matrices)
    d = rep.d
    mats = []
    for j in range(n):
        m = QMatrix.zeros(d, d)
        for k in range(n):
            if bc.T[k, j]:
                m = m + rep[k].scale(bc.T[k, j])
        mats.append(m)
    return Representation(tuple(mats), label=rep.label)
