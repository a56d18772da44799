"""Command line front end: ``famalg [options] COMMAND ...``.

Text goes to standard output; ``--out FILE`` also writes a JSON report.
Both are byte-identical across runs with the same inputs (wall time is only
included with ``--timing``).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from .config import AlgebraSpec, SpecError, from_presets, parse_spec
from .expr import ExpressionError, parse_matrix, parse_poly
from .enveloping import star_product
from .family import FamilyAlgebra, MatPoly
from .lie import casimir, NotSemisimpleError
from .poisson import poisson_bracket
from .poly import DimensionError
from .suites import DEFAULT_BUDGET, SUITES, SuiteReport, UnknownSuiteError, run_identity_suite

SCHEMA = "famalg-report/1"
WORKERS_ENV = "FAMALG_WORKERS"

EXIT_OK = 0
EXIT_RESIDUAL = 1
EXIT_USAGE = 2


class CommandError(ValueError):
    pass


@dataclass
class CommandResult:
    status: int
    result: dict
    lines: list[str] = field(default_factory=list)


# expressions

def _is_matrix(text: str) -> bool:
    return text.lstrip().startswith("[")


def _mat(fam: FamilyAlgebra, text: str) -> MatPoly:
    return parse_matrix(text, fam.lie.names, fam.d)


def _mat_str(fam: FamilyAlgebra, A: MatPoly) -> str:
    return A.to_str(fam.lie.names)


# commands

def cmd_check(spec: AlgebraSpec, args) -> CommandResult:
    lie, rep = spec.lie, spec.rep
    result = {
        "valid": True,
        "dimension": lie.n,
        "basis": list(lie.names),
        "rep_dimension": rep.d,
        "abelian": lie.is_abelian(),
    }
    lines = [
        f"algebra {spec.algebra_id}: dimension {lie.n}, basis {' '.join(lie.names)}",
        f"representation {spec.rep_id}: {rep.d}x{rep.d} matrices",
        "antisymmetry, Jacobi and representation relations hold",
    ]
    try:
        cas = casimir(lie)
    except NotSemisimpleError:
        pass
    else:
        result["casimir"] = cas.to_str(lie.names)
        lines.append(f"Casimir: {result['casimir']}")
    return CommandResult(EXIT_OK, result, lines)


def cmd_invariants(spec: AlgebraSpec, args) -> CommandResult:
    fam = spec.family()
    basis = fam.invariant_basis(args.degree)
    names = fam.lie.names
    result = {
        "degree": args.degree,
        "dimension": len(basis),
        "elements": [A.to_lists(names) for A in basis],
    }
    lines = [f"# invariants of degree <= {args.degree}: {len(basis)}"]
    lines += [A.to_str(names) for A in basis]
    return CommandResult(EXIT_OK, result, lines)


def cmd_poisson(spec: AlgebraSpec, args) -> CommandResult:
    fam = spec.family()
    if _is_matrix(args.a) or _is_matrix(args.b):
        out = _mat_str(fam, fam.nc_poisson(_mat(fam, args.a), _mat(fam, args.b)))
    else:
        names = fam.lie.names
        out = poisson_bracket(fam.lie, parse_poly(args.a, names), parse_poly(args.b, names)).to_str(names)
    return CommandResult(EXIT_OK, {"a": args.a, "b": args.b, "value": out}, [out])


def cmd_star(spec: AlgebraSpec, args) -> CommandResult:
    fam = spec.family()
    names = fam.lie.names
    if _is_matrix(args.a) or _is_matrix(args.b):
        coeffs = [_mat_str(fam, C) for C in fam.star_product(_mat(fam, args.a), _mat(fam, args.b))]
        zero = _mat_str(fam, MatPoly.zero(fam.d, fam.n))
    else:
        s = star_product(fam.lie, parse_poly(args.a, names), parse_poly(args.b, names))
        coeffs = [c.to_str(names) for c in s.coeffs]
        zero = "0"
    result: dict = {"a": args.a, "b": args.b}
    if args.order is not None:
        if args.order < 0:
            raise CommandError("--order must be nonnegative")
        value = coeffs[args.order] if args.order < len(coeffs) else zero
        result.update(order=args.order, value=value)
        return CommandResult(EXIT_OK, result, [value])
    result["coefficients"] = coeffs
    lines = [f"t^{k}: {c}" for k, c in enumerate(coeffs)] or ["t^0: " + zero]
    return CommandResult(EXIT_OK, result, lines)


def _unary(op_name: str):
    def run(spec: AlgebraSpec, args) -> CommandResult:
        fam = spec.family()
        A = _mat(fam, args.a)
        out = _mat_str(fam, getattr(fam, op_name)(A))
        return CommandResult(EXIT_OK, {"a": args.a, "value": out}, [out])

    return run


def cmd_fpbw(spec: AlgebraSpec, args) -> CommandResult:
    fam = spec.family()
    A = _mat(fam, args.a)
    U = fam.fpbw(A)
    result = {
        "a": args.a,
        "value": U.to_str(),
        "classical_invariant": fam.is_classical_invariant(A),
        "quantum_invariant": fam.is_quantum_invariant(U),
    }
    lines = [
        result["value"],
        f"# classical invariant: {'yes' if result['classical_invariant'] else 'no'}",
        f"# quantum invariant: {'yes' if result['quantum_invariant'] else 'no'}",
    ]
    return CommandResult(EXIT_OK, result, lines)


def _suite_lines(rep: SuiteReport, timing: bool) -> list[str]:
    budget = "full" if rep.budget is None else str(rep.budget)
    head = (f"suite {rep.suite}: {rep.algebra}/{rep.representation} degree<={rep.degree} "
            f"seed={rep.seed} budget={budget}")
    if timing:
        head += f" time={rep.wall_time:.3f}s"
    lines = [head]
    for c in rep.checks:
        tag = ("ok" if c.ok else "FAIL") if c.gating else "info"
        lines.append(f"  [{tag}] {c.label}: {c.tuples}/{c.population} tuples, "
                     f"{c.nonzero} nonzero (expect {c.expect})")
        for f in c.failures:
            lines.append(f"      at ({', '.join(f.inputs)}): {f.residual}")
    for key, val in rep.notes.items():
        lines.append(f"  note {key}: {json.dumps(val, sort_keys=True)}")
    lines.append(f"  result: {'PASS' if rep.passed else 'FAIL'}")
    return lines


def _run_one(payload) -> SuiteReport:
    spec, name, degree, seed, budget = payload
    return run_identity_suite(spec.family(), name, degree, seed, budget)


def _workers() -> int:
    raw = os.environ.get(WORKERS_ENV, "1")
    try:
        n = int(raw)
    except ValueError:
        raise CommandError(f"{WORKERS_ENV} must be an integer, got {raw!r}") from None
    return max(1, n)


def cmd_suite(spec: AlgebraSpec, args) -> CommandResult:
    if args.degree < 0:
        raise CommandError("--degree must be nonnegative")
    budget = None if args.full else args.budget
    if budget is not None and budget < 1:
        raise CommandError("--budget must be positive")
    names = list(SUITES) if args.name == "all" else [args.name]
    for nm in names:
        if nm not in SUITES:
            raise UnknownSuiteError(f"unknown suite {nm!r}; known: all, {', '.join(SUITES)}")
    payloads = [(spec, nm, args.degree, args.seed, budget) for nm in names]
    workers = min(_workers(), len(payloads))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(_run_one, payloads))
    else:
        reports = [_run_one(p) for p in payloads]
    lines: list[str] = []
    for r in reports:
        lines += _suite_lines(r, args.timing)
    passed = all(r.passed for r in reports)
    if len(reports) > 1:
        lines.append(f"{sum(r.passed for r in reports)}/{len(reports)} suites passed")
    result = {
        "passed": passed,
        "suites": [r.to_dict(timing=args.timing) for r in reports],
    }
    return CommandResult(EXIT_OK if passed else EXIT_RESIDUAL, result, lines)


COMMANDS = {
    "check": cmd_check,
    "invariants": cmd_invariants,
    "star": cmd_star,
    "poisson": cmd_poisson,
    "nabla": _unary("nabla"),
    "nabla-prime": _unary("nabla_prime"),
    "c1": _unary("chern_c1"),
    "fpbw": cmd_fpbw,
    "suite": cmd_suite,
}


def run_command(command: str, spec: AlgebraSpec, args) -> CommandResult:
    try:
        handler = COMMANDS[command]
    except KeyError:
        raise CommandError(f"unknown command {command!r}") from None
    return handler(spec, args)


# argument parsing

def _add_common(p: argparse.ArgumentParser, suppress: bool) -> None:
    # accepted before and after the command; subcommand copies never override defaults
    dflt = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    g = p.add_argument_group("input and output")
    g.add_argument("--spec", metavar="FILE", default=dflt(None),
                   help="YAML spec file (overrides --algebra/--rep)")
    g.add_argument("--algebra", default=dflt("sl2"), help="preset: sl2, heisenberg3, affine2, abelian(n)")
    g.add_argument("--rep", default=dflt("standard"), help="preset: trivial, standard, adjoint")
    g.add_argument("--out", metavar="FILE", default=dflt(None), help="write the JSON report here")
    g.add_argument("--timing", action="store_true", default=dflt(False),
                   help="include wall times (breaks byte identity)")


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    _add_common(p, suppress=True)
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(
        prog="famalg",
        description="Exact computations in family algebras End(V) (x) S(g).",
    )
    _add_common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    sub.add_parser("check", parents=[common], help="validate the algebra and representation")

    p = sub.add_parser("invariants", parents=[common], help="basis of invariants of degree <= D")
    p.add_argument("--degree", type=int, required=True)

    p = sub.add_parser("star", parents=[common], help="star product A *_t B")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--order", type=int, help="only the coefficient of t^k")

    p = sub.add_parser("poisson", parents=[common], help="Poisson bracket {A, B}")
    p.add_argument("a")
    p.add_argument("b")

    for name, text in (("nabla", "the nabla operator"), ("nabla-prime", "the left-handed nabla"),
                       ("c1", "the first Chern class derivation"), ("fpbw", "entrywise PBW symmetrization")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("a")

    p = sub.add_parser("suite", parents=[common], help="run an identity suite (or 'all')")
    p.add_argument("name", help=f"all, {', '.join(SUITES)}")
    p.add_argument("--degree", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    size = p.add_mutually_exclusive_group()
    size.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="max tuples per check")
    size.add_argument("--full", action="store_true", help="enumerate every tuple")
    return parser


def load_spec(args) -> AlgebraSpec:
    if args.spec:
        try:
            with open(args.spec, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise CommandError(f"cannot read spec file {args.spec!r}: {exc.strerror}") from None
        return parse_spec(text)
    return from_presets(args.algebra, args.rep)


def _emit_json(path: str, doc: dict) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        spec = load_spec(args)
        res = run_command(args.command, spec, args)
    except (SpecError, ExpressionError, CommandError, UnknownSuiteError, DimensionError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) else str(exc)
        print(f"famalg: error: {msg}", file=sys.stderr)
        return EXIT_USAGE
    for line in res.lines:
        print(line)
    if args.out:
        doc = {
            "schema": SCHEMA,
            "command": args.command,
            "algebra": spec.algebra_id,
            "representation": spec.rep_id,
            "exit_status": res.status,
            "result": res.result,
        }
        _emit_json(args.out, doc)
    return res.status


if __name__ == "__main__":
    sys.exit(main())
