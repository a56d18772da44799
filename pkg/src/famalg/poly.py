"""Sparse commutative polynomials over the rationals.

A :class:`SymPoly` is an element of the symmetric algebra on ``n`` generators,
stored as a map from exponent tuples to nonzero :class:`~fractions.Fraction`
coefficients.  :class:`TPoly` is a polynomial in the deformation parameter
``t`` whose coefficients are :class:`SymPoly` values.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Iterable, Iterator, Mapping, Sequence

Exps = tuple[int, ...]


def as_fraction(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to Fraction. Floats are rejected."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rational coefficients")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def format_fraction(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class DimensionError(ValueError):
    """Operands live over different generator counts or matrix sizes."""


def _sort_key(exps: Exps):
    # graded lexicographic, highest first
    return (-sum(exps), tuple(-e for e in exps))


_ZEROS: dict[int, "SymPoly"] = {}


class SymPoly:
    """Immutable polynomial in ``n`` commuting generators with rational coefficients."""

    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, n: int, terms: Mapping[Exps, object] | None = None):
        self.n = n
        clean: dict[Exps, Fraction] = {}
        if terms:
            for exps, c in terms.items():
                exps = tuple(exps)
                if len(exps) != n or any(e < 0 for e in exps):
                    raise DimensionError(f"bad exponent vector {exps} for n={n}")
                c = as_fraction(c)
                if c:
                    clean[exps] = clean.get(exps, 0) + c
                    if not clean[exps]:
                        del clean[exps]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, n: int, terms: dict[Exps, Fraction]) -> "SymPoly":
        # trusted constructor: terms already clean
        obj = cls.__new__(cls)
        obj.n = n
        obj._terms = terms
        obj._hash = None
        return obj

    # construction helpers
    @classmethod
    def zero(cls, n: int) -> "SymPoly":
        z = _ZEROS.get(n)
        if z is None:
            z = _ZEROS[n] = cls._raw(n, {})
        return z

    @classmethod
    def const(cls, n: int, c=1) -> "SymPoly":
        c = as_fraction(c)
        return cls._raw(n, {(0,) * n: c} if c else {})

    @classmethod
    def gen(cls, n: int, i: int) -> "SymPoly":
        """The generator ``X_i`` (0-based index)."""
        if not 0 <= i < n:
            raise IndexError(f"generator index {i} out of range for n={n}")
        exps = [0] * n
        exps[i] = 1
        return cls._raw(n, {tuple(exps): Fraction(1)})

    @classmethod
    def monomial(cls, exps: Sequence[int], c=1) -> "SymPoly":
        exps = tuple(exps)
        return cls(len(exps), {exps: c})

    @property
    def terms(self) -> Mapping[Exps, Fraction]:
        return self._terms

    def items(self):
        return self._terms.items()

    def sorted_terms(self) -> list[tuple[Exps, Fraction]]:
        return sorted(self._terms.items(), key=lambda kv: _sort_key(kv[0]))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        """Total degree; ``-1`` for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def homogeneous_part(self, k: int) -> "SymPoly":
        return SymPoly._raw(self.n, {e: c for e, c in self._terms.items() if sum(e) == k})

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * self.n, Fraction(0))

    def _check(self, other: "SymPoly") -> None:
        if self.n != other.n:
            raise DimensionError(f"generator count mismatch: {self.n} vs {other.n}")

    def _coerce(self, other) -> "SymPoly":
        if isinstance(other, SymPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return SymPoly.const(self.n, other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if isinstance(other, SymPoly):
            return self.n == other.n and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == SymPoly.const(self.n, other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._terms.items())))
        return self._hash

    def __add__(self, other) -> "SymPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return SymPoly._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self) -> "SymPoly":
        return SymPoly._raw(self.n, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "SymPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "SymPoly":
        return (-self) + other

    def scale(self, c) -> "SymPoly":
        c = as_fraction(c)
        if not c:
            return SymPoly.zero(self.n)
        return SymPoly._raw(self.n, {e: c * v for e, v in self._terms.items()})

    def __mul__(self, other) -> "SymPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, SymPoly):
            return NotImplemented
        self._check(other)
        out: dict[Exps, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return SymPoly._raw(self.n, out)

    def __rmul__(self, other) -> "SymPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> "SymPoly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers")
        result = SymPoly.const(self.n, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def partial(self, i: int) -> "SymPoly":
        """Formal derivative with respect to generator ``i`` (0-based)."""
        if not 0 <= i < self.n:
            raise IndexError(f"generator index {i} out of range for n={self.n}")
        out: dict[Exps, Fraction] = {}
        for e, c in self._terms.items():
            k = e[i]
            if k:
                out[e[:i] + (k - 1,) + e[i + 1:]] = c * k
        return SymPoly._raw(self.n, out)

    def substitute(self, images: Sequence["SymPoly"]) -> "SymPoly":
        """Replace each generator ``X_k`` by ``images[k]`` (all over a common generator count)."""
        if len(images) != self.n:
            raise DimensionError("need one image per generator")
        if not self._terms:
            m = images[0].n if images else 0
            return SymPoly.zero(m)
        m = images[0].n
        powers: dict[tuple[int, int], SymPoly] = {}

        def power(k: int, e: int) -> SymPoly:
            if (k, e) not in powers:
                powers[(k, e)] = images[k] ** e
            return powers[(k, e)]

        total = SymPoly.zero(m)
        for exps, c in self._terms.items():
            term = SymPoly.const(m, c)
            for k, e in enumerate(exps):
                if e:
                    term = term * power(k, e)
            total = total + term
        return total

    def to_str(self, names: Sequence[str] | None = None) -> str:
        if not self._terms:
            return "0"
        names = names or [f"x{i + 1}" for i in range(self.n)]
        parts = []
        for exps, c in self.sorted_terms():
            mono = "*".join(
                names[i] if e == 1 else f"{names[i]}^{e}" for i, e in enumerate(exps) if e
            )
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not mono:
                body = format_fraction(a)
            elif a == 1:
                body = mono
            else:
                body = f"{format_fraction(a)}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"SymPoly({self.to_str()!r})"


def monomials(n: int, degree: int) -> list[Exps]:
    """All exponent vectors of total degree exactly ``degree``, graded-lex descending."""
    out = []
    for combo in combinations_with_replacement(range(n), degree):
        exps = [0] * n
        for i in combo:
            exps[i] += 1
        out.append(tuple(exps))
    return sorted(out, key=_sort_key)


def monomials_upto(n: int, degree: int) -> list[Exps]:
    """Exponent vectors of degree ``0..degree`` in increasing degree."""
    out: list[Exps] = []
    for k in range(degree + 1):
        out.extend(monomials(n, k))
    return out


class TPoly:
    """Polynomial in ``t`` with :class:`SymPoly` coefficients (index = power of ``t``)."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Iterable[SymPoly] = ()):
        coeffs = list(coeffs)
        for c in coeffs:
            if c.n != n:
                raise DimensionError("coefficient generator count mismatch")
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.n = n
        self.coeffs: tuple[SymPoly, ...] = tuple(coeffs)

    @classmethod
    def of(cls, p: SymPoly) -> "TPoly":
        return cls(p.n, [p])

    def __getitem__(self, k: int) -> SymPoly:
        if k < 0:
            raise IndexError("t-order must be nonnegative")
        return self.coeffs[k] if k < len(self.coeffs) else SymPoly.zero(self.n)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self) -> Iterator[SymPoly]:
        return iter(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, SymPoly):
            other = TPoly.of(other)
        if not isinstance(other, TPoly):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.n, self.coeffs))

    def __add__(self, other) -> "TPoly":
        if isinstance(other, SymPoly):
            other = TPoly.of(other)
        if not isinstance(other, TPoly):
            return NotImplemented
        m = max(len(self), len(other))
        return TPoly(self.n, [self[k] + other[k] for k in range(m)])

    __radd__ = __add__

    def __neg__(self) -> "TPoly":
        return TPoly(self.n, [-c for c in self.coeffs])

    def __sub__(self, other) -> "TPoly":
        if isinstance(other, SymPoly):
            other = TPoly.of(other)
        return self + (-other)

    def scale(self, c) -> "TPoly":
        return TPoly(self.n, [p.scale(c) for p in self.coeffs])

    def shift(self, k: int = 1) -> "TPoly":
        """Multiply by ``t**k``."""
        if not self.coeffs:
            return self
        return TPoly(self.n, [SymPoly.zero(self.n)] * k + list(self.coeffs))

    def at(self, t) -> SymPoly:
        """Specialize the deformation parameter to a rational value."""
        t = as_fraction(t)
        total = SymPoly.zero(self.n)
        power = Fraction(1)
        for c in self.coeffs:
            total = total + c.scale(power)
            power *= t
        return total

    def to_str(self, names: Sequence[str] | None = None, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            body = c.to_str(names)
            if k == 0:
                parts.append(body)
            else:
                tp = var if k == 1 else f"{var}^{k}"
                parts.append(f"{tp}*({body})")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"TPoly({self.to_str()!r})"
