"""Independent reference computations used to freeze derived constants.

Nothing here imports the package's arithmetic: structure constants and
representation matrices are written out by hand, polynomials are sympy
expressions, and noncommutative products are computed on plain words.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from math import factorial

import sympy as sp

# sl2 with [e,f]=h, [h,e]=2e, [h,f]=-2f
SL2_NAMES = ("e", "f", "h")
SL2_BRACKET = {
    (0, 1): {2: 1},
    (2, 0): {0: 2},
    (2, 1): {1: -2},
}
SL2_STANDARD = (
    sp.Matrix([[0, 1], [0, 0]]),
    sp.Matrix([[0, 0], [1, 0]]),
    sp.Matrix([[1, 0], [0, -1]]),
)


def full_bracket(table: dict, n: int) -> dict:
    out = {}
    for (i, j), v in table.items():
        out[(i, j)] = dict(v)
        out[(j, i)] = {k: -c for k, c in v.items()}
    for i in range(n):
        for j in range(n):
            out.setdefault((i, j), {})
    return out


def adjoint_matrices(table: dict, n: int) -> tuple:
    br = full_bracket(table, n)
    return tuple(
        sp.Matrix(n, n, lambda k, j, i=i: br[(i, j)].get(k, 0)) for i in range(n)
    )


# classical invariants by brute-force linear algebra

def _monomials(syms, deg):
    return sorted(sp.itermonomials(syms, deg), key=sp.default_sort_key)


def invariant_dimension(table: dict, reps: tuple, degree: int) -> int:
    """dim of {A : [tau_i, A] + {X_i, A} = 0 for all i} over degree <= ``degree``."""
    n = len(reps)
    d = reps[0].shape[0]
    syms = sp.symbols(f"y0:{n}")
    br = full_bracket(table, n)
    monos = _monomials(syms, degree)
    coeffs = sp.symbols(f"c0:{d * d * len(monos)}")
    it = iter(coeffs)
    A = sp.Matrix(d, d, lambda p, q: sum(next(it) * m for m in monos))

    def pb(xi: int, a):
        # {X_i, a} = c^k_ij X_k d^j a
        return sum(c * syms[k] * sp.diff(a, syms[j]) for j in range(n) for k, c in br[(xi, j)].items())

    eqs = []
    for i in range(n):
        act = reps[i] * A - A * reps[i] + A.applyfunc(lambda a: pb(i, a))
        for entry in act:
            poly = sp.Poly(sp.expand(entry), *syms)
            eqs.extend(poly.coeffs())
    M = sp.Matrix([[sp.diff(eq, c) for c in coeffs] for eq in eqs]) if eqs else sp.zeros(0, len(coeffs))
    return len(coeffs) - M.rank()


# Casimir and nabla on sl2

def sl2_casimir():
    e, f, h = sp.symbols("e f h")
    n = 3
    ad = adjoint_matrices(SL2_BRACKET, n)
    B = sp.Matrix(n, n, lambda i, j: (ad[i] * ad[j]).trace())
    Binv = B.inv()
    X = (e, f, h)
    return sp.expand(sum(Binv[i, j] * X[i] * X[j] for i in range(n) for j in range(n))), (e, f, h)


def sl2_nabla_of_scalar(poly, gens):
    """``sum_k tau(X_k) d^k a`` for ``Id (x) a``."""
    out = sp.zeros(2, 2)
    for k, x in enumerate(gens):
        out += SL2_STANDARD[k] * sp.diff(poly, x)
    return out.applyfunc(sp.expand)


# star product on words

def _normal_order(word_terms: dict, bracket: dict) -> dict:
    """Rewrite words (tuples of generator indices) into nondecreasing order.

    Keys of the result are ``(sorted_word, t_power)``.
    """
    todo = [((w, 0), c) for w, c in word_terms.items()]
    out: dict = {}
    while todo:
        (w, tp), c = todo.pop()
        for pos in range(len(w) - 1):
            if w[pos] > w[pos + 1]:
                a, b = w[pos], w[pos + 1]
                swapped = w[:pos] + (b, a) + w[pos + 2:]
                todo.append(((swapped, tp), c))
                # a b = b a + t [a, b]
                for k, v in bracket[(a, b)].items():
                    todo.append(((w[:pos] + (k,) + w[pos + 2:], tp + 1), c * v))
                break
        else:
            out[(w, tp)] = out.get((w, tp), 0) + c
    return {k: v for k, v in out.items() if v}


def _exps_to_word(exps) -> tuple:
    return tuple(i for i, e in enumerate(exps) for _ in range(e))


def _symmetrize_words(exps, coeff) -> dict:
    letters = _exps_to_word(exps)
    k = len(letters)
    out: dict = {}
    for perm in permutations(range(k)):
        w = tuple(letters[p] for p in perm)
        out[w] = out.get(w, 0) + Fraction(coeff) / factorial(k)
    return out


def _inverse(ordered: dict, bracket: dict, n: int) -> dict:
    """Map normal-ordered ``{(word, tp): c}`` back to ``{(exps, tp): c}``."""
    rest = dict(ordered)
    out: dict = {}
    while rest:
        top = max(len(w) for (w, _) in rest)
        (w, tp), c = next(((k, v) for k, v in sorted(rest.items()) if len(k[0]) == top))
        exps = tuple(w.count(i) for i in range(n))
        out[(exps, tp)] = out.get((exps, tp), 0) + c
        sym = _normal_order(_symmetrize_words(exps, c), bracket)
        for (w2, tp2), v in sym.items():
            key = (w2, tp2 + tp)
            val = rest.get(key, 0) - v
            if val:
                rest[key] = val
            else:
                rest.pop(key, None)
    return {k: v for k, v in out.items() if v}


def star_words(table: dict, n: int, a_exps, b_exps) -> dict:
    """``{(exps, t_power): coefficient}`` for the monomial star product ``x^a * x^b``."""
    bracket = full_bracket(table, n)
    left = _symmetrize_words(a_exps, 1)
    right = _symmetrize_words(b_exps, 1)
    prod: dict = {}
    for w1, c1 in left.items():
        for w2, c2 in right.items():
            prod[w1 + w2] = prod.get(w1 + w2, 0) + c1 * c2
    return _inverse(_normal_order(prod, bracket), bracket, n)


if __name__ == "__main__":
    adj = adjoint_matrices(SL2_BRACKET, 3)
    print("sl2/standard invariant dims", [invariant_dimension(SL2_BRACKET, SL2_STANDARD, D) for D in range(4)])
    print("sl2/adjoint invariant dims", [invariant_dimension(SL2_BRACKET, adj, D) for D in range(3)])
    cas, gens = sl2_casimir()
    print("Casimir", cas)
    print("nabla(Cas)", sl2_nabla_of_scalar(cas, gens))
    print("e^2 * f", star_words(SL2_BRACKET, 3, (2, 0, 0), (0, 1, 0)))
