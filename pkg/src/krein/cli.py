"""Command-line front end: ``krein <command> ...``.

Spaces come from a catalog address (``minkowski:1``) or ``--file sp.json``.
Vectors are comma-separated reals (``--x 2,1``; write ``--x=-1,2`` when the
first entry is negative) or ``@path.json`` for a JSON vector with complex
entries.  Output is JSON on stdout except ``seq``, which emits CSV.

Exit codes: 0 success, 1 verification failure, 2 malformed input,
3 degenerate space, 4 target out of range, 5 construction or dimension error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

import numpy as np

from . import catalog
from .decomposition import (
    FundamentalSymmetry,
    canonical_decomposition,
    j_norm,
    symmetry_from_matrix,
    symmetry_of,
    verify_symmetry,
)
from .errors import (
    AxiomViolation,
    Degenerate,
    EmptyGap,
    HypothesisViolated,
    KreinError,
    MalformedInput,
    NegativeRadicand,
    NotHermitian,
    ParamOutOfRange,
    TargetBelowRange,
)
from .prescribe import norm_range, target_norm
from .sequences import diverging, ratio_neutral, ratio_orthogonal, vanishing
from .serialize import (
    decomposition_to_json,
    rows_to_csv,
    scalar_to_json,
    space_from_json,
    space_to_json,
    symmetry_matrix_from_json,
    symmetry_to_json,
    to_json,
    trace_to_json,
    vector_from_json,
)
from .space import KreinSpace, classify

EXIT_OK, EXIT_FAIL, EXIT_MALFORMED, EXIT_DEGENERATE, EXIT_RANGE, EXIT_CONSTRUCTION = range(6)

_EXIT_CODES = [
    ((MalformedInput, NotHermitian, ParamOutOfRange), EXIT_MALFORMED),
    ((Degenerate,), EXIT_DEGENERATE),
    ((TargetBelowRange, EmptyGap, HypothesisViolated), EXIT_RANGE),
    ((AxiomViolation, NegativeRadicand), EXIT_FAIL),
    ((KreinError,), EXIT_CONSTRUCTION),
]


def exit_code(exc: KreinError) -> int:
    for types, code in _EXIT_CODES:
        if isinstance(exc, types):
            return code
    return EXIT_CONSTRUCTION


def _read_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as e:
        raise MalformedInput(f"cannot read {path}: {e.strerror}") from None
    except json.JSONDecodeError as e:
        raise MalformedInput(f"{path}: invalid JSON ({e})") from None


def _dumps(payload) -> str:
    return json.dumps(payload, indent=2, allow_nan=False) + "\n"


def load_space(args) -> KreinSpace:
    if (args.space is None) == (args.file is None):
        raise MalformedInput("give exactly one of a catalog address or --file")
    if args.file is not None:
        return space_from_json(_read_json(args.file))
    try:
        return catalog.lookup(args.space).space
    except KeyError as e:
        raise MalformedInput(e.args[0]) from None


def parse_vector(text: str) -> np.ndarray:
    if text.startswith("@"):
        return vector_from_json(_read_json(text[1:]))
    try:
        return np.array([float(s) for s in text.split(",")], dtype=complex)
    except ValueError:
        raise MalformedInput(f"bad vector {text!r}; expected comma-separated reals") from None


def _require(value, flag: str):
    if value is None:
        raise MalformedInput(f"{flag} is required")
    return value


def symmetry_matrix(sp: KreinSpace, sym: Optional[str], sym_file: Optional[str]) -> np.ndarray:
    """Resolve ``--sym`` / ``--sym-file`` to a dense matrix (canonical by default)."""
    if sym is not None and sym_file is not None:
        raise MalformedInput("give at most one of --sym and --sym-file")
    if sym_file is not None:
        M = symmetry_matrix_from_json(_read_json(sym_file))
    elif sym in (None, "canonical"):
        return symmetry_of(canonical_decomposition(sp)).matrix
    elif sym == "identity":
        return np.eye(sp.dim, dtype=complex)
    else:
        try:
            entry = catalog.lookup(sym)
        except KeyError as e:
            raise MalformedInput(e.args[0]) from None
        if entry.family is None:
            raise MalformedInput(f"{sym!r} names a space, not a symmetry")
        M = entry.symmetry().matrix
    if M.shape != sp.gram.shape:
        raise MalformedInput(f"symmetry of shape {M.shape} for a space of dimension {sp.dim}")
    return M


def _symmetry(sp, args) -> FundamentalSymmetry:
    return symmetry_from_matrix(sp, symmetry_matrix(sp, args.sym, args.sym_file))


def cmd_analyze(args) -> int:
    sp = load_space(args)
    d = canonical_decomposition(sp)
    J = symmetry_of(d)
    out = {"dim": sp.dim, "signature": list(sp.signature), "definite": d.definite}
    out.update(space_to_json(sp))
    out.update(decomposition_to_json(d))
    out["J"] = symmetry_to_json(J)["matrix"]
    sys.stdout.write(_dumps(out))
    return EXIT_OK


def cmd_norm(args) -> int:
    sp = load_space(args)
    x = sp.vector(parse_vector(_require(args.x, "--x")))
    J = _symmetry(sp, args)
    rng = norm_range(sp, x)
    out = {
        "class": classify(sp, x).value,
        "form": scalar_to_json(sp.norm2(x)),
        "norm": j_norm(J, x),
        "lower": rng.lower,
        "lower_attained": rng.lower_attained,
    }
    sys.stdout.write(_dumps(out))
    return EXIT_OK


def cmd_target(args) -> int:
    sp = load_space(args)
    x = sp.vector(parse_vector(_require(args.x, "--x")))
    J, trace = target_norm(sp, x, _require(args.a, "--a"))
    out = {
        "a": args.a,
        "achieved": trace.achieved,
        "t_b": trace.t_b,
        "J": symmetry_to_json(J)["matrix"],
        "report": J.report.as_dict(),
    }
    if args.trace:
        out["trace"] = trace_to_json(trace)
    sys.stdout.write(_dumps(out))
    return EXIT_OK


def _seq_rows(sp, args):
    xs = [sp.vector(parse_vector(s)) for s in _require(args.x, "--x")]
    if args.kind == "diverge":
        return diverging(sp, xs, _symmetry(sp, args), args.steps), None
    if args.kind == "vanish":
        J1 = None
        if args.start_norm is not None:
            J1, _ = target_norm(sp, xs[0], args.start_norm)
        return vanishing(sp, xs, args.steps, J1), None
    if len(xs) != 1:
        raise MalformedInput(f"{args.kind} takes a single --x")
    y = sp.vector(parse_vector(_require(args.y, "--y")))
    fn = ratio_orthogonal if args.kind == "ratio-orth" else ratio_neutral
    return fn(sp, xs[0], y, args.steps)


def cmd_seq(args) -> int:
    sp = load_space(args)
    if args.steps < 1:
        raise MalformedInput("--steps must be at least 1")
    rows, trace = _seq_rows(sp, args)
    text = rows_to_csv(rows)
    if args.sidecars is not None:
        os.makedirs(args.sidecars, exist_ok=True)
        for r in rows:
            with open(os.path.join(args.sidecars, f"J_{r.n}.json"), "w", encoding="utf-8") as fh:
                fh.write(_dumps(symmetry_to_json(r.symmetry)))
    if args.out is None:
        sys.stdout.write(text)
        return EXIT_OK
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(text)
    last = rows[-1]
    summary = {"kind": args.kind, "rows": len(rows), "out": args.out,
               "last": {"n": last.n, "param": last.param, "norm_x": last.norm_x,
                        "norm_y": last.norm_y, "ratio": last.ratio}}
    if trace is not None:
        summary["case"] = trace.case.value
    sys.stdout.write(_dumps(to_json(summary)))
    return EXIT_OK


def cmd_verify(args) -> int:
    sp = load_space(args)
    report = verify_symmetry(sp, symmetry_matrix(sp, args.sym, args.sym_file))
    sys.stdout.write(_dumps(report.as_dict()))
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_example(args) -> int:
    try:
        entry = catalog.lookup(args.name)
    except KeyError as e:
        raise MalformedInput(e.args[0]) from None
    out = {"name": entry.name, "signature": list(entry.space.signature)}
    out.update(space_to_json(entry.space))
    J = entry.symmetry()
    if J is not None:
        out["J"] = symmetry_to_json(J)["matrix"]
        out["report"] = J.report.as_dict()
        if J.decomposition is not None:
            out.update(decomposition_to_json(J.decomposition))
    sys.stdout.write(_dumps(out))
    return EXIT_OK


def _add_space(p: argparse.ArgumentParser) -> None:
    p.add_argument("space", nargs="?", help="catalog address, e.g. minkowski:3")
    p.add_argument("--file", help="space JSON file")


def _add_sym(p: argparse.ArgumentParser) -> None:
    p.add_argument("--sym", help="canonical, identity, eg1:<n> or final:<n>")
    p.add_argument("--sym-file", help="symmetry JSON file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="krein", description="Fundamental symmetries of finite-dimensional Krein spaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="signature and canonical decomposition")
    _add_space(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("norm", help="J-norm of a vector")
    _add_space(p)
    _add_sym(p)
    p.add_argument("--x")
    p.set_defaults(func=cmd_norm)

    p = sub.add_parser("target", help="symmetry giving a vector a prescribed norm")
    _add_space(p)
    p.add_argument("--x")
    p.add_argument("--a", type=float)
    p.add_argument("--trace", action="store_true", help="include every intermediate quantity")
    p.set_defaults(func=cmd_target)

    p = sub.add_parser("seq", help="sequence of symmetries as CSV")
    p.add_argument("kind", choices=["diverge", "vanish", "ratio-orth", "ratio-neutral"])
    _add_space(p)
    _add_sym(p)
    p.add_argument("--x", action="append", help="vector; repeat for a schedule (diverge, vanish)")
    p.add_argument("--y")
    p.add_argument("--steps", type=int, default=10)
    p.add_argument("--start-norm", type=float, help="vanish: norm of the first row (default canonical J)")
    p.add_argument("--out", help="CSV path; a JSON summary then goes to stdout")
    p.add_argument("--sidecars", help="directory for J_<n>.json files")
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("verify", help="check the fundamental-symmetry axioms")
    _add_space(p)
    _add_sym(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("example", help="print a catalog entry")
    p.add_argument("name")
    p.set_defaults(func=cmd_example)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except KreinError as e:
        print(f"krein: {type(e).__name__}: {e}", file=sys.stderr)
        return exit_code(e)


if __name__ == "__main__":
    sys.exit(main())
