"""Command-line front end.

Every command takes either ``--file algebra.json`` or a catalog selection
(``--family``, ``--n``, ``--p``, ``--s``, ``--variant``, ``--alpha``).
Exit codes: 0 success, 1 failed check, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .algebra import annihilator_invariants, associativity_defects, nilindex, power_series
from .catalog import Family, FamilySpec, build
from .charseq import char_seq_algebra
from .constraints import associator_constraints, enumerate_solutions
from .errors import AlgebraError, ElementInSquareError, NotNaturallyGradedError, NotNilpotentError
from .exact_linalg import format_scalar
from .grading import filtration_degrees, gradation_positions, natural_graded_witness, natural_gradation
from .io import emit_algebra, load_algebra
from .theorems import run_all


class UsageError(Exception):
    pass


def _int_list(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _scalar_list(text: str) -> tuple:
    try:
        return tuple(Fraction(x) for x in text.split(",") if x.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected comma-separated rationals, got {text!r}") from None


def _scalar(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected num/den, got {text!r}") from None


def _add_source(p: argparse.ArgumentParser) -> None:
    p.add_argument("--file", help="algebra document (JSON)")
    p.add_argument("--family", choices=[f.value for f in Family])
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=int, default=0)
    p.add_argument("--s", type=_int_list, default=(), help="s-profile, e.g. 2,1,0")
    p.add_argument("--variant", type=int)
    p.add_argument("--alpha", type=_scalar)
    p.add_argument("--json", action="store_true", help="machine-readable report")


def _add_sampling(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--trials", type=int, default=100)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pfiliform", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_ in [
        ("check", "associativity, nilpotency and nilindex"),
        ("series", "dimensions of the power series A^i"),
        ("grading", "natural gradation and graded-basis witness"),
        ("positions", "gradation positions of the f-vectors"),
        ("catalog", "emit a family instance as JSON"),
        ("invariants", "annihilator and commutator dimensions"),
    ]:
        _add_source(sub.add_parser(name, help=help_))
    p = sub.add_parser("charseq", help="characteristic sequence by seeded sampling")
    _add_source(p)
    _add_sampling(p)
    p = sub.add_parser("constraints", help="associativity constraints on the b-coefficients")
    _add_source(p)
    p.add_argument("--grid", type=_scalar_list, default=(Fraction(-1), Fraction(0), Fraction(1)),
                   help="candidate values, e.g. --grid=-1,0,1")
    p.add_argument("--ansatz", choices=["theorem", "graded"], default="theorem")
    p = sub.add_parser("verify-theorems", help="run every verification suite")
    p.add_argument("--n-max", type=int, default=9)
    p.add_argument("--json", action="store_true")
    return parser


def _spec(args) -> FamilySpec:
    if args.family is None or args.n is None:
        raise UsageError("give --file or both --family and --n")
    return FamilySpec(Family(args.family), args.n, args.p, variant=args.variant,
                      alpha=args.alpha, s=args.s, ansatz=getattr(args, "ansatz", "theorem"))


def _algebra(args):
    if args.file:
        return load_algebra(args.file)
    spec = _spec(args)
    spec.validate()
    return build(spec)


def _emit(args, out, payload: dict, text: str) -> None:
    if args.json:
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        out.write(text + "\n")


def cmd_check(args, out) -> int:
    A = _algebra(args)
    defects = associativity_defects(A)
    k = nilindex(A)
    if defects:
        text = f"not associative ({len(defects)} defective triples, first {defects[0]})"
    else:
        text = "associative"
    text += f", nilindex {k}" if k is not None else ", not nilpotent"
    _emit(args, out, {"associative": not defects, "defects": [list(d) for d in defects],
                      "nilpotent": k is not None, "nilindex": k}, text)
    return 0 if not defects and k is not None else 1


def cmd_series(args, out) -> int:
    series = power_series(_algebra(args))
    dims = series.dims
    _emit(args, out, {"dims": list(dims), "stabilized": series.stabilized},
          "(" + ",".join(map(str, dims)) + ")" + ("" if series.stabilized else " (not nilpotent)"))
    return 0


def cmd_charseq(args, out) -> int:
    c = char_seq_algebra(_algebra(args), args.trials, args.seed)
    _emit(args, out, {"sequence": list(c.parts), "seed": args.seed, "trials": args.trials}, str(c))
    return 0


def cmd_grading(args, out) -> int:
    A = _algebra(args)
    g = natural_gradation(A)
    degrees = filtration_degrees(A)
    witness = natural_graded_witness(A, degrees)
    lines = [f"dims ({','.join(map(str, g.dims))})"]
    lines.append("degrees " + " ".join(f"{l}:{d}" for l, d in zip(A.labels, degrees)))
    lines.append(f"naturally graded in the presented basis: {'yes' if witness else 'no'}")
    _emit(args, out, {"dims": list(g.dims), "degrees": list(degrees), "witness": witness},
          "\n".join(lines))
    return 0


def cmd_positions(args, out) -> int:
    A = _algebra(args)
    f_labels = [l for l in A.labels if l.startswith("f")]
    e_labels = [l for l in A.labels if not l.startswith("f")]
    r = gradation_positions(A, e_labels, f_labels).r
    bound = all(r_s <= s for s, r_s in enumerate(r, 1))
    _emit(args, out, {"r": list(r), "r_s_le_s": bound},
          f"r = ({','.join(map(str, r))}); r_s <= s: {'yes' if bound else 'no'}")
    return 0 if bound else 1


def cmd_catalog(args, out) -> int:
    spec = _spec(args)
    spec.validate()
    meta = {"family": spec.family.value, "n": spec.n}
    if spec.family in (Family.DEGREE_P, Family.P_FILIFORM_GRADED):
        meta["p"] = spec.p
    if spec.variant is not None:
        meta["variant"] = spec.variant
    if spec.alpha is not None:
        meta["alpha"] = format_scalar(spec.alpha)
    if spec.s:
        meta["s"] = list(spec.s)
    out.write(emit_algebra(build(spec), meta))
    return 0


def cmd_invariants(args, out) -> int:
    inv = annihilator_invariants(_algebra(args))
    _emit(args, out, inv._asdict(),
          f"left {inv.left}, right {inv.right}, two-sided {inv.two_sided}, commutator {inv.commutator}")
    return 0


def cmd_constraints(args, out) -> int:
    spec = _spec(args)
    cs = associator_constraints(spec)
    solutions = enumerate_solutions(cs, args.grid)
    report = cs.report()
    report["grid"] = [format_scalar(v) for v in args.grid]
    report["solutions"] = [{str(u): format_scalar(v) for u, v in s.items()} for s in solutions]
    if args.json:
        out.write(json.dumps(report, sort_keys=True) + "\n")
        return 0
    out.write(f"unknowns ({len(cs.unknowns)}): {' '.join(report['unknowns']) or '-'}\n")
    for eq in report["equations"]:
        out.write(f"  {eq} = 0\n")
    out.write(f"{len(solutions)} solutions on grid {{{','.join(str(v) for v in args.grid)}}}\n")
    for s in solutions:
        out.write("  " + (", ".join(f"{u}={v}" for u, v in s.items()) or "(no unknowns)") + "\n")
    return 0


def cmd_verify(args, out) -> int:
    results = run_all(args.n_max)
    if args.json:
        out.write(json.dumps([r.__dict__ for r in results], sort_keys=True) + "\n")
    else:
        for r in results:
            out.write(r.line() + "\n")
    return 0 if all(r.passed for r in results) else 1


COMMANDS = {
    "check": cmd_check,
    "series": cmd_series,
    "charseq": cmd_charseq,
    "grading": cmd_grading,
    "positions": cmd_positions,
    "catalog": cmd_catalog,
    "constraints": cmd_constraints,
    "invariants": cmd_invariants,
    "verify-theorems": cmd_verify,
}


def run_command(argv, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        return COMMANDS[args.command](args, out)
    except (NotNilpotentError, NotNaturallyGradedError, ElementInSquareError) as exc:
        err.write(f"check failed: {exc}\n")
        return 1
    except (UsageError, AlgebraError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))
