"""Matrix-valued polynomials End(V) (x) S(g), their quantum counterparts, and the
operators acting on them.

Elements are stored entrywise; a decomposable ``A (x) a`` is the matrix ``a * A``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, Sequence

from .enveloping import UEElement, pbw_symmetrize, star_product, ue_mul
from .lie import (
    BasisChange,
    LieAlgebra,
    Representation,
    change_basis,
    transport_poly,
    transport_rep,
    validate_lie,
    validate_rep,
    LieValidationError,
)
from .linalg import QMatrix, nullspace
from .poisson import phi_closed_form, poisson_bracket
from .poly import DimensionError, SymPoly, as_fraction, monomials, monomials_upto


class MatPoly:
    """A ``d x d`` matrix with entries in S(g) (element of End(V) (x) S(g))."""

    __slots__ = ("d", "n", "entries")

    def __init__(self, entries: Sequence[Sequence[SymPoly]]):
        rows = tuple(tuple(r) for r in entries)
        d = len(rows)
        if d == 0 or any(len(r) != d for r in rows):
            raise DimensionError("MatPoly needs a nonempty square array")
        n = rows[0][0].n
        if any(p.n != n for r in rows for p in r):
            raise DimensionError("entries over different generator counts")
        self.d = d
        self.n = n
        self.entries = rows

    @classmethod
    def _raw(cls, d: int, n: int, rows: tuple) -> "MatPoly":
        # trusted constructor: square tuple of tuples over n generators
        obj = cls.__new__(cls)
        obj.d = d
        obj.n = n
        obj.entries = rows
        return obj

    @classmethod
    def zero(cls, d: int, n: int) -> "MatPoly":
        z = SymPoly.zero(n)
        return cls([[z] * d for _ in range(d)])

    @classmethod
    def identity(cls, d: int, n: int) -> "MatPoly":
        return cls.tensor(QMatrix.identity(d), SymPoly.const(n, 1))

    @classmethod
    def scalar(cls, d: int, a: SymPoly) -> "MatPoly":
        """``Id (x) a``."""
        return cls.tensor(QMatrix.identity(d), a)

    @classmethod
    def tensor(cls, A: QMatrix, a: SymPoly) -> "MatPoly":
        """``A (x) a``."""
        d = A.shape[0]
        return cls([[a.scale(A[p, q]) for q in range(d)] for p in range(d)])

    @classmethod
    def unit(cls, d: int, p: int, q: int, a: SymPoly) -> "MatPoly":
        """``E_pq (x) a``."""
        z = SymPoly.zero(a.n)
        return cls([[a if (i, j) == (p, q) else z for j in range(d)] for i in range(d)])

    def __getitem__(self, pq: tuple[int, int]) -> SymPoly:
        p, q = pq
        return self.entries[p][q]

    def _check(self, other: "MatPoly") -> None:
        if not isinstance(other, MatPoly):
            raise TypeError("expected MatPoly")
        if self.d != other.d or self.n != other.n:
            raise DimensionError(f"shape mismatch: d={self.d},n={self.n} vs d={other.d},n={other.n}")

    def map(self, fn: Callable[[SymPoly], SymPoly]) -> "MatPoly":
        return MatPoly._raw(self.d, self.n, tuple(tuple(fn(x) for x in r) for r in self.entries))

    def __add__(self, other: "MatPoly") -> "MatPoly":
        self._check(other)
        return MatPoly._raw(self.d, self.n, tuple(
            tuple(a + b if b else a for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries)))

    def __sub__(self, other: "MatPoly") -> "MatPoly":
        self._check(other)
        return MatPoly._raw(self.d, self.n, tuple(
            tuple(a - b if b else a for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries)))

    def __neg__(self) -> "MatPoly":
        return self.map(lambda x: -x)

    def scale(self, c) -> "MatPoly":
        c = as_fraction(c)
        return self.map(lambda x: x.scale(c))

    def __matmul__(self, other: "MatPoly") -> "MatPoly":
        return mat_mul(self, other)

    def left_const(self, A: QMatrix) -> "MatPoly":
        """``A . self`` for a constant matrix ``A``."""
        return _const_mul(A, self, left=True)

    def right_const(self, A: QMatrix) -> "MatPoly":
        """``self . A`` for a constant matrix ``A``."""
        return _const_mul(A, self, left=False)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MatPoly):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def is_zero(self) -> bool:
        return all(not x for r in self.entries for x in r)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def degree(self) -> int:
        return max(x.degree() for r in self.entries for x in r)

    def partial(self, i: int) -> "MatPoly":
        return self.map(lambda x: x.partial(i))

    def is_scalar(self) -> bool:
        """True when the element is ``Id (x) a`` for some polynomial ``a``."""
        diag = self.entries[0][0]
        return all(
            (x == diag) if p == q else not x
            for p, r in enumerate(self.entries)
            for q, x in enumerate(r)
        )

    def to_str(self, names: Sequence[str] | None = None) -> str:
        rows = ", ".join("[" + ", ".join(x.to_str(names) for x in r) + "]" for r in self.entries)
        return f"[{rows}]"

    def to_lists(self, names: Sequence[str] | None = None) -> list[list[str]]:
        return [[x.to_str(names) for x in r] for r in self.entries]

    def __repr__(self) -> str:
        return f"MatPoly({self.to_str()})"


def _const_mul(A: QMatrix, M: MatPoly, left: bool) -> MatPoly:
    d = M.d
    if A.shape != (d, d):
        raise DimensionError("constant matrix has wrong size")
    z = SymPoly.zero(M.n)
    out = []
    for p in range(d):
        row = []
        for r in range(d):
            acc = z
            for q in range(d):
                if left:
                    c, x = A[p, q], M.entries[q][r]
                else:
                    c, x = A[q, r], M.entries[p][q]
                if c and x:
                    acc = acc + x.scale(c)
            row.append(acc)
        out.append(row)
    return MatPoly(out)


def lift_bilinear(op: Callable[[SymPoly, SymPoly], SymPoly], A: MatPoly, B: MatPoly) -> MatPoly:
    """``(A_i (x) a^i, B_j (x) b^j) -> A_i B_j (x) op(a^i, b^j)`` computed entrywise."""
    A._check(B)
    d, n = A.d, A.n
    Ae, Be = A.entries, B.entries
    cols = [[(q, Be[q][r]) for q in range(d) if Be[q][r]] for r in range(d)]
    z = SymPoly.zero(n)
    zero_row = (z,) * d
    out = []
    for p in range(d):
        row_a = Ae[p]
        if not any(row_a):
            out.append(zero_row)
            continue
        row = []
        for r in range(d):
            parts = [op(row_a[q], b) for q, b in cols[r] if row_a[q]]
            row.append(_sum_polys(n, parts))
        out.append(tuple(row))
    return MatPoly._raw(d, n, tuple(out))


def _sum_polys(n: int, parts: list[SymPoly]) -> SymPoly:
    parts = [x for x in parts if x]
    if not parts:
        return SymPoly.zero(n)
    if len(parts) == 1:
        return parts[0]
    acc = dict(parts[0].terms)
    for x in parts[1:]:
        for e, c in x.items():
            v = acc.get(e, 0) + c
            if v:
                acc[e] = v
            else:
                acc.pop(e, None)
    return SymPoly._raw(n, acc)


def _mul(a: SymPoly, b: SymPoly) -> SymPoly:
    return a * b


def mat_mul(A: MatPoly, B: MatPoly) -> MatPoly:
    """``(A_i (x) a^i)(B_j (x) b^j) = A_i B_j (x) a^i b^j``."""
    return lift_bilinear(_mul, A, B)


class MatUE:
    """A ``d x d`` matrix with entries in U_t(g)."""

    __slots__ = ("d", "lie", "entries")

    def __init__(self, lie: LieAlgebra, entries: Sequence[Sequence[UEElement]]):
        rows = tuple(tuple(r) for r in entries)
        d = len(rows)
        if d == 0 or any(len(r) != d for r in rows):
            raise DimensionError("MatUE needs a nonempty square array")
        self.d = d
        self.lie = lie
        self.entries = rows

    @classmethod
    def zero(cls, lie: LieAlgebra, d: int) -> "MatUE":
        z = UEElement.zero(lie)
        return cls(lie, [[z] * d for _ in range(d)])

    def __getitem__(self, pq: tuple[int, int]) -> UEElement:
        return self.entries[pq[0]][pq[1]]

    def __add__(self, other: "MatUE") -> "MatUE":
        return MatUE(self.lie, [[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)])

    def __sub__(self, other: "MatUE") -> "MatUE":
        return MatUE(self.lie, [[a - b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)])

    def __matmul__(self, other: "MatUE") -> "MatUE":
        if self.d != other.d:
            raise DimensionError("matrix size mismatch")
        d = self.d
        out = []
        for p in range(d):
            row = []
            for r in range(d):
                acc = UEElement.zero(self.lie)
                for q in range(d):
                    a, b = self.entries[p][q], other.entries[q][r]
                    if a and b:
                        acc = acc + ue_mul(a, b)
                row.append(acc)
            out.append(row)
        return MatUE(self.lie, out)

    def const_commutator(self, A: QMatrix) -> "MatUE":
        """``[A, self]`` for a constant matrix ``A``."""
        d = self.d
        out = []
        for p in range(d):
            row = []
            for r in range(d):
                acc = UEElement.zero(self.lie)
                for q in range(d):
                    if A[p, q] and self.entries[q][r]:
                        acc = acc + self.entries[q][r].scale(A[p, q])
                    if A[q, r] and self.entries[p][q]:
                        acc = acc - self.entries[p][q].scale(A[q, r])
                row.append(acc)
            out.append(row)
        return MatUE(self.lie, out)

    def map(self, fn: Callable[[UEElement], UEElement]) -> "MatUE":
        return MatUE(self.lie, [[fn(x) for x in r] for r in self.entries])

    def at_t(self, value) -> "MatUE":
        return self.map(lambda x: x.at_t(value))

    def is_zero(self) -> bool:
        return all(not x for r in self.entries for x in r)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MatUE):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def to_str(self) -> str:
        rows = ", ".join("[" + ", ".join(x.to_str() for x in r) + "]" for r in self.entries)
        return f"[{rows}]"

    def __repr__(self) -> str:
        return f"MatUE({self.to_str()})"


@dataclass(frozen=True)
class InvariantBasis:
    degree: int
    elements: tuple[MatPoly, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[MatPoly]:
        return iter(self.elements)

    def __getitem__(self, i: int) -> MatPoly:
        return self.elements[i]


class FamilyAlgebra:
    """End(V_tau) (x) S(g) for a validated Lie algebra and representation."""

    def __init__(self, lie: LieAlgebra, rep: Representation, validate: bool = True):
        if validate:
            bad = validate_lie(lie)
            if bad:
                raise LieValidationError(bad)
            bad = validate_rep(lie, rep)
            if bad:
                raise LieValidationError(bad)
        self.lie = lie
        self.rep = rep
        self._invariants: dict[int, InvariantBasis] = {}
        self._memo: dict[str, dict] = {"P": {}, "Phi": {}}

    @property
    def d(self) -> int:
        return self.rep.d

    @property
    def n(self) -> int:
        return self.lie.n

    def __repr__(self) -> str:
        return f"FamilyAlgebra({self.lie.label}/{self.rep.label})"

    def _cached(self, key: str, op: Callable[[SymPoly, SymPoly], SymPoly]) -> Callable[[SymPoly, SymPoly], SymPoly]:
        # bilinear, so expand into monomial pairs and memoize those
        memo = self._memo[key]
        n = self.n

        def run(a: SymPoly, b: SymPoly) -> SymPoly:
            out: dict = {}
            for ea, ca in a.items():
                for eb, cb in b.items():
                    r = memo.get((ea, eb))
                    if r is None:
                        r = op(SymPoly._raw(n, {ea: Fraction(1)}), SymPoly._raw(n, {eb: Fraction(1)}))
                        memo[(ea, eb)] = r
                    c = ca * cb
                    for e, v in r.items():
                        w = out.get(e, 0) + c * v
                        if w:
                            out[e] = w
                        else:
                            out.pop(e, None)
            return SymPoly._raw(n, out)

        return run

    # constructors

    def identity(self) -> MatPoly:
        return MatPoly.identity(self.d, self.n)

    def scalar(self, a: SymPoly) -> MatPoly:
        return MatPoly.scalar(self.d, a)

    def tensor(self, A: QMatrix, a: SymPoly) -> MatPoly:
        return MatPoly.tensor(A, a)

    def tau(self, i: int) -> QMatrix:
        return self.rep[i]

    def spanning_set(self, degree: int) -> list[MatPoly]:
        """``E_pq (x) monomial`` for all monomials of degree at most ``degree``."""
        out = []
        for exps in monomials_upto(self.n, degree):
            m = SymPoly.monomial(exps)
            for p in range(self.d):
                for q in range(self.d):
                    out.append(MatPoly.unit(self.d, p, q, m))
        return out

    def _check(self, A: MatPoly) -> None:
        if A.d != self.d or A.n != self.n:
            raise DimensionError(f"expected d={self.d}, n={self.n}; got d={A.d}, n={A.n}")

    # classical side

    def classical_action(self, i: int, A: MatPoly) -> MatPoly:
        """``[tau(X_i), A_j] (x) a^j + A_j (x) {X_i, a^j}``."""
        self._check(A)
        t = self.tau(i)
        X = self.lie.gen(i)
        comm = A.left_const(t) - A.right_const(t)
        return comm + A.map(lambda a: poisson_bracket(self.lie, X, a))

    def is_classical_invariant(self, A: MatPoly) -> bool:
        return all(self.classical_action(i, A).is_zero() for i in range(self.n))

    def invariant_basis(self, degree: int) -> InvariantBasis:
        """Exact basis of the invariants of degree at most ``degree``.

        The action preserves polynomial degree, so each homogeneous block is solved
        separately; within a block coordinates run over monomials then matrix
        positions ``(p, q)`` in row-major order.
        """
        if degree < 0:
            raise ValueError("degree bound must be nonnegative")
        if degree in self._invariants:
            return self._invariants[degree]
        d, n = self.d, self.n
        elements: list[MatPoly] = []
        for k in range(degree + 1):
            monos = monomials(n, k)
            coord = {(m, p, q): idx for idx, (m, p, q) in enumerate(
                (m, p, q) for m in monos for p in range(d) for q in range(d))}
            size = len(coord)
            columns = []
            for m, p, q in coord:
                el = MatPoly.unit(d, p, q, SymPoly.monomial(m))
                col: dict[int, Fraction] = {}
                for i in range(n):
                    img = self.classical_action(i, el)
                    for pp in range(d):
                        for qq in range(d):
                            for exps, c in img.entries[pp][qq].items():
                                col[i * size + coord[(exps, pp, qq)]] = c
                columns.append(col)
            rows = [[Fraction(0)] * size for _ in range(n * size)]
            for j, col in enumerate(columns):
                for r, c in col.items():
                    rows[r][j] = c
            rows = [r for r in rows if any(r)]
            vecs = nullspace(rows, size) if rows else [
                tuple(Fraction(int(i == j)) for i in range(size)) for j in range(size)
            ]
            keys = list(coord)
            for v in vecs:
                entries = [[SymPoly.zero(n) for _ in range(d)] for _ in range(d)]
                for (m, p, q), c in zip(keys, v):
                    if c:
                        entries[p][q] = entries[p][q] + SymPoly.monomial(m, c)
                elements.append(MatPoly(entries))
        basis = InvariantBasis(degree, tuple(elements))
        self._invariants[degree] = basis
        return basis

    def invariant_polynomials(self, degree: int) -> list[SymPoly]:
        """Basis of I(g) up to ``degree`` (the invariants for the trivial representation)."""
        from .lie import trivial_rep

        triv = FamilyAlgebra(self.lie, trivial_rep(self.lie), validate=False)
        return [el[0, 0] for el in triv.invariant_basis(degree)]

    # operators

    def nc_poisson(self, A: MatPoly, B: MatPoly) -> MatPoly:
        """``{A_i (x) a^i, B_j (x) b^j} = A_i B_j (x) {a^i, b^j}``."""
        self._check(A)
        self._check(B)
        lie = self.lie
        return lift_bilinear(self._cached("P", lambda a, b: poisson_bracket(lie, a, b)), A, B)

    def phi(self, A: MatPoly, B: MatPoly) -> MatPoly:
        """``AB (x) phi(a, b)``."""
        lie = self.lie
        return lift_bilinear(self._cached("Phi", lambda a, b: phi_closed_form(lie, a, b)), A, B)

    def star_coefficient(self, A: MatPoly, B: MatPoly, k: int) -> MatPoly:
        """``A_i B_j (x) m_k(a^i, b^j)``."""
        lie = self.lie
        return lift_bilinear(lambda a, b: star_product(lie, a, b)[k], A, B)

    def star_product(self, A: MatPoly, B: MatPoly) -> list[MatPoly]:
        """Coefficients of ``t^0, t^1, ...`` in ``A *_t B``."""
        self._check(A)
        self._check(B)
        lie = self.lie
        d = self.d
        cells: dict[tuple[int, int], list[SymPoly]] = {}
        top = 0
        for p in range(d):
            for r in range(d):
                acc: list[SymPoly] = []
                for q in range(d):
                    a, b = A.entries[p][q], B.entries[q][r]
                    if a and b:
                        s = star_product(lie, a, b)
                        while len(acc) < len(s):
                            acc.append(SymPoly.zero(self.n))
                        for k, c in enumerate(s):
                            acc[k] = acc[k] + c
                cells[(p, r)] = acc
                top = max(top, len(acc))
        z = SymPoly.zero(self.n)
        return [
            MatPoly([[cells[(p, r)][k] if k < len(cells[(p, r)]) else z for r in range(d)] for p in range(d)])
            for k in range(top)
        ]

    def nabla(self, A: MatPoly) -> MatPoly:
        """``A_i tau(X_k) (x) d^k a^i``, i.e. ``d^k(A) . tau(X_k)``."""
        self._check(A)
        total = MatPoly.zero(self.d, self.n)
        for k in range(self.n):
            dk = A.partial(k)
            if not dk.is_zero():
                total = total + dk.right_const(self.tau(k))
        return total

    def nabla_prime(self, A: MatPoly) -> MatPoly:
        """``tau(X_k) A_i (x) d^k a^i``."""
        self._check(A)
        total = MatPoly.zero(self.d, self.n)
        for k in range(self.n):
            dk = A.partial(k)
            if not dk.is_zero():
                total = total + dk.left_const(self.tau(k))
        return total

    def trace_ad(self) -> list[Fraction]:
        """``c^j_ij`` for each ``i``: the trace of ``ad X_i``."""
        c = self.lie.c
        return [sum((c[i][j][j] for j in range(self.n)), Fraction(0)) for i in range(self.n)]

    def chern_c1(self, A: MatPoly) -> MatPoly:
        """``A (x) a -> A (x) c^j_ij d^i a``."""
        self._check(A)
        tr = self.trace_ad()
        total = MatPoly.zero(self.d, self.n)
        for i, w in enumerate(tr):
            if w:
                total = total + A.partial(i).scale(w)
        return total

    # quantum side

    def fpbw(self, A: MatPoly) -> MatUE:
        """Entrywise symmetrization ``Id (x) I_PBW``."""
        self._check(A)
        return MatUE(self.lie, [[pbw_symmetrize(self.lie, x) for x in r] for r in A.entries])

    def quantum_action(self, i: int, U: MatUE) -> MatUE:
        """``[tau(X_i), U] + ad_{X_i}(U)`` where ``ad_X u = (X u - u X) / t`` in U_t(g)."""
        X = UEElement.gen(self.lie, i)
        ad = U.map(lambda u: (ue_mul(X, u) - ue_mul(u, X)).divide_t() if u else u)
        return U.const_commutator(self.tau(i)) + ad

    def is_quantum_invariant(self, U: MatUE) -> bool:
        if U.d != self.d:
            raise DimensionError("matrix size mismatch")
        return all(self.quantum_action(i, U).is_zero() for i in range(self.n))

    # base change

    def change_basis(self, bc: BasisChange) -> "FamilyAlgebra":
        return FamilyAlgebra(change_basis(self.lie, bc), transport_rep(self.rep, bc))

    @staticmethod
    def transport(A: MatPoly, bc: BasisChange) -> MatPoly:
        """Rewrite the polynomial entries of ``A`` in the new basis."""
        return A.map(lambda a: transport_poly(a, bc))


def embeds_scalar(fam: FamilyAlgebra, a: SymPoly) -> bool:
    """Whether ``Id (x) a`` is a classical invariant."""
    return fam.is_classical_invariant(fam.scalar(a))
