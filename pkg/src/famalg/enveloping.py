"""The one-parameter enveloping algebra U_t(g) in PBW normal form, and the star product.

Elements are sums of ordered monomials ``X_1^e1 ... X_n^en`` (generator order is
the basis order) with coefficients in Q[t].  Products are brought to normal
form by the rewrite ``X_j X_i -> X_i X_j + t c^k_ji X_k`` for ``j > i``; the
tensor algebra is never built.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Mapping, Sequence

from .lie import LieAlgebra
from .poly import DimensionError, Exps, SymPoly, TPoly, _sort_key, as_fraction, format_fraction

Key = tuple[Exps, int]  # (ordered exponents, power of t)
Terms = dict[Key, Fraction]


def _add_into(out: Terms, key: Key, c: Fraction) -> None:
    v = out.get(key, 0) + c
    if v:
        out[key] = v
    else:
        out.pop(key, None)


class UEElement:
    """Immutable element of U_t(g) in PBW normal form."""

    __slots__ = ("lie", "_terms")

    def __init__(self, lie: LieAlgebra, terms: Mapping[Key, object] | None = None):
        self.lie = lie
        clean: Terms = {}
        for (exps, p), c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != lie.n or p < 0:
                raise DimensionError(f"bad PBW key {(exps, p)}")
            _add_into(clean, (exps, p), as_fraction(c))
        self._terms = clean

    @classmethod
    def _raw(cls, lie: LieAlgebra, terms: Terms) -> "UEElement":
        obj = cls.__new__(cls)
        obj.lie = lie
        obj._terms = terms
        return obj

    @classmethod
    def zero(cls, lie: LieAlgebra) -> "UEElement":
        return cls._raw(lie, {})

    @classmethod
    def one(cls, lie: LieAlgebra) -> "UEElement":
        return cls._raw(lie, {((0,) * lie.n, 0): Fraction(1)})

    @classmethod
    def gen(cls, lie: LieAlgebra, i: int) -> "UEElement":
        exps = [0] * lie.n
        exps[i] = 1
        return cls._raw(lie, {(tuple(exps), 0): Fraction(1)})

    @classmethod
    def ordered(cls, lie: LieAlgebra, p: SymPoly | TPoly) -> "UEElement":
        """Read each commutative monomial as the ordered PBW monomial (no symmetrization)."""
        tp = p if isinstance(p, TPoly) else TPoly.of(p)
        terms: Terms = {}
        for k, coeff in enumerate(tp):
            for exps, c in coeff.items():
                terms[(exps, k)] = c
        return cls._raw(lie, terms)

    @property
    def terms(self) -> Mapping[Key, Fraction]:
        return self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, UEElement):
            return NotImplemented
        return self.lie == other.lie and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def degree(self) -> int:
        return max((sum(e) for e, _ in self._terms), default=-1)

    def t_degree(self) -> int:
        return max((p for _, p in self._terms), default=-1)

    def __add__(self, other: "UEElement") -> "UEElement":
        out = dict(self._terms)
        for k, c in other._terms.items():
            _add_into(out, k, c)
        return UEElement._raw(self.lie, out)

    def __neg__(self) -> "UEElement":
        return UEElement._raw(self.lie, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "UEElement") -> "UEElement":
        return self + (-other)

    def scale(self, c, t_power: int = 0) -> "UEElement":
        """Multiply by ``c * t**t_power``."""
        c = as_fraction(c)
        if not c:
            return UEElement.zero(self.lie)
        return UEElement._raw(self.lie, {(e, p + t_power): c * v for (e, p), v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, UEElement):
            return ue_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def divide_t(self) -> "UEElement":
        """Exact division by ``t``; raises if a ``t^0`` term is present."""
        if any(p == 0 for _, p in self._terms):
            raise ArithmeticError("element is not divisible by t")
        return UEElement._raw(self.lie, {(e, p - 1): c for (e, p), c in self._terms.items()})

    def t_coefficient(self, k: int) -> SymPoly:
        """Coefficient of ``t^k`` with ordered monomials read commutatively."""
        return SymPoly._raw(self.lie.n, {e: c for (e, p), c in self._terms.items() if p == k})

    def at_t(self, value) -> "UEElement":
        """Specialize ``t`` (``value=1`` gives U(g), ``value=0`` gives S(g))."""
        value = as_fraction(value)
        out: Terms = {}
        for (e, p), c in self._terms.items():
            _add_into(out, (e, 0), c * value**p)
        return UEElement._raw(self.lie, out)

    def to_str(self, var: str = "t") -> str:
        if not self._terms:
            return "0"
        names = self.lie.names
        items = sorted(self._terms.items(), key=lambda kv: (kv[0][1], _sort_key(kv[0][0])))
        parts = []
        for (exps, p), c in items:
            factors = []
            if p:
                factors.append(var if p == 1 else f"{var}^{p}")
            factors += [names[i] if e == 1 else f"{names[i]}^{e}" for i, e in enumerate(exps) if e]
            a = abs(c)
            if not factors:
                body = format_fraction(a)
            elif a == 1:
                body = "*".join(factors)
            else:
                body = f"{format_fraction(a)}*" + "*".join(factors)
            parts.append(("-" if c < 0 else "+", body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for s, b in parts[1:]:
            out += f" {s} {b}"
        return out

    def __repr__(self) -> str:
        return f"UEElement({self.to_str()!r})"


def _mono_times_gen(lie: LieAlgebra, alpha: Exps, j: int) -> Terms:
    """Normal form of ``X^alpha * X_j``."""
    memo = lie.cache.setdefault("mono_gen", {})
    key = (alpha, j)
    hit = memo.get(key)
    if hit is not None:
        return hit
    m = max((i for i, e in enumerate(alpha) if e), default=-1)
    if m <= j:
        res: Terms = {(alpha[:j] + (alpha[j] + 1,) + alpha[j + 1:], 0): Fraction(1)}
    else:
        # X^a' X_m X_j = X^a' X_j X_m + t c^k_mj X^a' X_k
        rest = alpha[:m] + (alpha[m] - 1,) + alpha[m + 1:]
        res = {}
        for (g, p), c in _mono_times_gen(lie, rest, j).items():
            for (g2, p2), c2 in _mono_times_gen(lie, g, m).items():
                _add_into(res, (g2, p + p2), c * c2)
        for k in range(lie.n):
            ck = lie.c[m][j][k]
            if ck:
                for (g, p), c in _mono_times_gen(lie, rest, k).items():
                    _add_into(res, (g, p + 1), ck * c)
    memo[key] = res
    return res


def _mono_mul(lie: LieAlgebra, alpha: Exps, beta: Exps) -> Terms:
    memo = lie.cache.setdefault("mono_mul", {})
    key = (alpha, beta)
    hit = memo.get(key)
    if hit is not None:
        return hit
    cur: Terms = {(alpha, 0): Fraction(1)}
    for j, e in enumerate(beta):
        for _ in range(e):
            nxt: Terms = {}
            for (g, p), c in cur.items():
                for (g2, p2), c2 in _mono_times_gen(lie, g, j).items():
                    _add_into(nxt, (g2, p + p2), c * c2)
            cur = nxt
    memo[key] = cur
    return cur


def ue_mul(u: UEElement, v: UEElement) -> UEElement:
    """Product in U_t(g), returned in PBW normal form."""
    if u.lie != v.lie:
        raise DimensionError("elements belong to different algebras")
    lie = u.lie
    out: Terms = {}
    for (a, p), c in u._terms.items():
        for (b, q), d in v._terms.items():
            for (g, r), e in _mono_mul(lie, a, b).items():
                _add_into(out, (g, p + q + r), c * d * e)
    return UEElement._raw(lie, out)


def ue_commutator(u: UEElement, v: UEElement) -> UEElement:
    return ue_mul(u, v) - ue_mul(v, u)


def _multinomial(alpha: Exps) -> int:
    r = factorial(sum(alpha))
    for e in alpha:
        r //= factorial(e)
    return r


def _word_sum(lie: LieAlgebra, alpha: Exps) -> Terms:
    """Sum of the normal forms of all distinct words with letter multiset ``alpha``."""
    memo = lie.cache.setdefault("word_sum", {})
    hit = memo.get(alpha)
    if hit is not None:
        return hit
    if not any(alpha):
        res: Terms = {(alpha, 0): Fraction(1)}
    else:
        res = {}
        for j, e in enumerate(alpha):
            if not e:
                continue
            rest = alpha[:j] + (e - 1,) + alpha[j + 1:]
            for (g, p), c in _word_sum(lie, rest).items():
                for (g2, p2), c2 in _mono_times_gen(lie, g, j).items():
                    _add_into(res, (g2, p + p2), c * c2)
    memo[alpha] = res
    return res


def _sym_monomial(lie: LieAlgebra, alpha: Exps) -> Terms:
    memo = lie.cache.setdefault("sym", {})
    hit = memo.get(alpha)
    if hit is not None:
        return hit
    w = Fraction(1, _multinomial(alpha))
    res = {k: c * w for k, c in _word_sum(lie, alpha).items()}
    memo[alpha] = res
    return res


def pbw_symmetrize(lie: LieAlgebra, a: SymPoly | TPoly) -> UEElement:
    """``X_1...X_k -> (1/k!) sum_sigma X_sigma(1)...X_sigma(k)``, extended t-linearly."""
    tp = a if isinstance(a, TPoly) else TPoly.of(a)
    if tp.n != lie.n:
        raise DimensionError("generator count mismatch")
    out: Terms = {}
    for k, coeff in enumerate(tp):
        for alpha, c in coeff.items():
            for (g, p), v in _sym_monomial(lie, alpha).items():
                _add_into(out, (g, p + k), c * v)
    return UEElement._raw(lie, out)


def pbw_inverse(u: UEElement) -> TPoly:
    """Inverse of :func:`pbw_symmetrize`, by induction on filtration degree."""
    lie = u.lie
    n = lie.n
    rest = dict(u._terms)
    found: dict[int, dict[Exps, Fraction]] = {}
    while rest:
        top = max(sum(e) for e, _ in rest)
        lead = [(e, p, c) for (e, p), c in rest.items() if sum(e) == top]
        for e, p, c in lead:
            slot = found.setdefault(p, {})
            _add_into(slot, e, c)  # type: ignore[arg-type]
            for (g, q), v in _sym_monomial(lie, e).items():
                _add_into(rest, (g, p + q), -c * v)
    if not found:
        return TPoly(n)
    kmax = max(found)
    return TPoly(n, [SymPoly._raw(n, found.get(k, {})) for k in range(kmax + 1)])


def _star_monomials(lie: LieAlgebra, alpha: Exps, beta: Exps) -> TPoly:
    memo = lie.cache.setdefault("star", {})
    key = (alpha, beta)
    hit = memo.get(key)
    if hit is None:
        prod = ue_mul(
            UEElement._raw(lie, dict(_sym_monomial(lie, alpha))),
            UEElement._raw(lie, dict(_sym_monomial(lie, beta))),
        )
        hit = memo[key] = pbw_inverse(prod)
    return hit


def star_product(lie: LieAlgebra, a: SymPoly | TPoly, b: SymPoly | TPoly) -> TPoly:
    """``a *_t b = I^-1(I(a) I(b))`` as a polynomial in t with S(g) coefficients."""
    ta = a if isinstance(a, TPoly) else TPoly.of(a)
    tb = b if isinstance(b, TPoly) else TPoly.of(b)
    if ta.n != lie.n or tb.n != lie.n:
        raise DimensionError("generator count mismatch")
    n = lie.n
    acc: dict[int, dict[Exps, Fraction]] = {}
    for ka, ca in enumerate(ta):
        for kb, cb in enumerate(tb):
            for alpha, x in ca.items():
                for beta, y in cb.items():
                    w = x * y
                    for k, coeff in enumerate(_star_monomials(lie, alpha, beta)):
                        slot = acc.setdefault(ka + kb + k, {})
                        for e, c in coeff.items():
                            _add_into(slot, e, w * c)  # type: ignore[arg-type]
    if not acc:
        return TPoly(n)
    return TPoly(n, [SymPoly._raw(n, acc.get(k, {})) for k in range(max(acc) + 1)])


def star_coefficient(lie: LieAlgebra, a: SymPoly, b: SymPoly, k: int) -> SymPoly:
    """Coefficient ``m_k(a, b)`` of ``t^k`` in ``a *_t b``."""
    if k < 0:
        raise ValueError("order must be nonnegative")
    return star_product(lie, a, b)[k]


StarExpansion = TPoly
