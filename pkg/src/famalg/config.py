"""Algebra/representation spec files (YAML).

A spec names a preset or spells out structure constants::

    algebra: sl2                 # or heisenberg3, affine2, abelian(4)
    representation: standard     # or trivial, adjoint

    algebra:
      dimension: 3
      basis: [p, q, z]
      brackets:                  # [i, j, k, "c"]  means  c^k_ij = c, 1-based
        - [1, 2, 3, "1"]
    representation:
      matrices:                  # one matrix per basis element, in basis order
        - [["0", "1", "0"], ["0", "0", "0"], ["0", "0", "0"]]
        - ...

Entries given for ``(i, j)`` only are completed by antisymmetry.  Rationals
are strings ``"p/q"`` or integers; YAML floats are rejected.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

import yaml

from .family import FamilyAlgebra
from .lie import (
    LieAlgebra,
    Representation,
    Violation,
    preset,
    rep_preset,
    validate_lie,
    validate_rep,
)
from .linalg import QMatrix


class SpecError(ValueError):
    """A located problem with a spec document."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None,
                 violations: list[Violation] | None = None):
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + where)
        self.line = line
        self.column = column
        self.violations = violations or []


@dataclass(frozen=True)
class AlgebraSpec:
    lie: LieAlgebra
    rep: Representation
    algebra_id: str
    rep_id: str

    def family(self) -> FamilyAlgebra:
        # already validated in parse_spec / from_presets
        return FamilyAlgebra(self.lie, self.rep, validate=False)


def rational(value: Any, where: str) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise SpecError(f"{where}: {value!r} is not an exact rational; write it as a string \"p/q\"")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise SpecError(f"{where}: cannot read {value!r} as a rational") from None
    raise SpecError(f"{where}: expected a rational, got {type(value).__name__}")


def _violation_error(what: str, bad: list[Violation]) -> SpecError:
    more = f" (and {len(bad) - 1} more)" if len(bad) > 1 else ""
    return SpecError(f"{what}: {bad[0]}{more}", violations=bad)


def _algebra(node: Any) -> LieAlgebra:
    if isinstance(node, str):
        try:
            return preset(node)
        except (KeyError, ValueError) as exc:
            raise SpecError(str(exc.args[0])) from None
    if not isinstance(node, dict):
        raise SpecError("algebra must be a preset name or a mapping")
    for key in ("dimension", "basis"):
        if key not in node:
            raise SpecError(f"algebra: missing {key!r}")
    n = node["dimension"]
    names = node["basis"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise SpecError("algebra.dimension must be a positive integer")
    if not isinstance(names, list) or len(names) != n or not all(isinstance(x, str) for x in names):
        raise SpecError(f"algebra.basis must list {n} generator names")
    if len(set(names)) != n:
        raise SpecError("algebra.basis has repeated names")
    entries = []
    for pos, item in enumerate(node.get("brackets") or [], start=1):
        if not isinstance(item, list) or len(item) != 4:
            raise SpecError(f"algebra.brackets[{pos}] must be [i, j, k, value]")
        i, j, k, v = item
        for idx in (i, j, k):
            if not isinstance(idx, int) or not 1 <= idx <= n:
                raise SpecError(f"algebra.brackets[{pos}]: index {idx!r} not in 1..{n}")
        entries.append((i - 1, j - 1, k - 1, rational(v, f"algebra.brackets[{pos}]")))
    try:
        return LieAlgebra.from_brackets(names, entries, label=node.get("label", "custom"))
    except ValueError as exc:
        raise SpecError(f"algebra.brackets: {exc}") from None


def _matrix(node: Any, where: str) -> QMatrix:
    if not isinstance(node, list) or not node or not all(isinstance(r, list) for r in node):
        raise SpecError(f"{where} must be a list of rows")
    rows = [[rational(x, where) for x in r] for r in node]
    if any(len(r) != len(rows) for r in rows):
        raise SpecError(f"{where} must be square")
    return QMatrix.from_rows(rows)


def _representation(node: Any, lie: LieAlgebra) -> Representation:
    if node is None:
        node = "standard"
    if isinstance(node, str):
        try:
            return rep_preset(lie, node)
        except KeyError as exc:
            raise SpecError(str(exc.args[0])) from None
    if not isinstance(node, dict) or "matrices" not in node:
        raise SpecError("representation must be a preset name or a mapping with 'matrices'")
    mats = node["matrices"]
    if isinstance(mats, dict):
        missing = [nm for nm in lie.names if nm not in mats]
        if missing:
            raise SpecError(f"representation.matrices: no matrix for {missing[0]!r}")
        mats = [mats[nm] for nm in lie.names]
    if not isinstance(mats, list) or len(mats) != lie.n:
        raise SpecError(f"representation.matrices must give {lie.n} matrices")
    qs = [_matrix(m, f"representation.matrices[{k + 1}]") for k, m in enumerate(mats)]
    if len({q.shape for q in qs}) != 1:
        raise SpecError("representation matrices differ in size")
    return Representation(tuple(qs), label=node.get("label", "custom"))


def _describe(node: Any, obj) -> str:
    return node.strip() if isinstance(node, str) else obj.label


def build_spec(doc: Any) -> AlgebraSpec:
    if not isinstance(doc, dict) or "algebra" not in doc:
        raise SpecError("spec must be a mapping with an 'algebra' key")
    lie = _algebra(doc["algebra"])
    bad = validate_lie(lie)
    if bad:
        raise _violation_error("algebra", bad)
    rep_node = doc.get("representation")
    rep = _representation(rep_node, lie)
    bad = validate_rep(lie, rep)
    if bad:
        raise _violation_error("representation", bad)
    return AlgebraSpec(lie, rep, _describe(doc["algebra"], lie), _describe(rep_node or "standard", rep))


def parse_spec(text: str) -> AlgebraSpec:
    """Parse and validate a YAML spec document."""
    try:
        doc = yaml.safe_load(text)
    except yaml.MarkedYAMLError as exc:
        mark = exc.problem_mark or exc.context_mark
        msg = f"YAML syntax error: {exc.problem or exc.context}"
        if mark is None:
            raise SpecError(msg) from None
        raise SpecError(msg, mark.line + 1, mark.column + 1) from None
    except yaml.YAMLError as exc:
        raise SpecError(f"YAML error: {exc}") from None
    return build_spec(doc)


def from_presets(algebra: str, representation: str = "standard") -> AlgebraSpec:
    return build_spec({"algebra": algebra, "representation": representation})
