"""Command-line interface.

Exit codes: 0 trigonometric / success, 2 hyperbolic (valid data, no
state), 1 invalid input or I/O failure.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys

from . import __version__
from .bloch import to_bloch
from .errors import QLError
from .interference import Branch, interference_profile
from .prob_model import DEFAULT_TOL, ContextData, SampleCounts, estimate_context
from .qlra import a_canonical_basis, b_basis, born_probabilities, represent
from .sweep import SweepConfig, run_sweep, write_csv, write_json

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_HYPERBOLIC = 2


class CliError(Exception):
    pass


def _complex(z: complex) -> dict:
    return {"re": z.real, "im": z.imag}


def _context_report(c: ContextData) -> dict:
    return {
        "q": c.pa[0],
        "p": c.pb[0],
        "pa": list(c.pa),
        "pb": list(c.pb),
        "matrix": [list(row) for row in c.matrix.entries],
    }


def _profile_report(c: ContextData, sign: Branch) -> tuple[dict, bool]:
    profile = interference_profile(c, sign)
    report = {
        "lambda": list(profile.lambdas),
        "classification": profile.classification.value,
    }
    return report, profile.is_trigonometric


def _state_report(c: ContextData, sign: Branch) -> dict:
    s = represent(c, sign)
    return {
        "sign": s.profile.sign_branch.value,
        "phases": list(s.profile.phases),
        "psi": [_complex(complex(z)) for z in s.psi],
        "born_b": list(born_probabilities(s, b_basis())),
        "born_a": list(born_probabilities(s, a_canonical_basis(c.matrix))),
    }


def _point_report(c: ContextData, sign: Branch) -> dict:
    pt = to_bloch(c, sign)
    return {"x": pt.x, "y": pt.y, "z": pt.z, "color": list(pt.color), "branch": pt.branch.value}


def _single_sign(args) -> Branch:
    if args.sign == "both":
        raise CliError("--sign both is only valid for sweep")
    return Branch(args.sign)


def _context_from_args(args) -> ContextData:
    missing = [flag for flag, v in (("--q", args.q), ("--p", args.p), ("--P", args.P)) if v is None]
    if missing:
        raise CliError(f"missing required flags: {', '.join(missing)}")
    return ContextData.from_qpP(args.q, args.p, args.P, tol=args.tol)


def _require_json(args) -> None:
    if args.format != "json":
        raise CliError("CSV output is only available for sweep")


@contextlib.contextmanager
def _output(path):
    if path is None:
        yield sys.stdout
        return
    try:
        fh = open(path, "w", encoding="utf-8", newline="")
    except OSError as exc:
        raise CliError(f"cannot write {path}: {exc}") from None
    with fh:
        yield fh


def _emit(report: dict, args) -> None:
    with _output(args.out) as fh:
        json.dump(report, fh, indent=2)
        fh.write("\n")


def cmd_check(args) -> int:
    _require_json(args)
    c = _context_from_args(args)
    report, trig = _profile_report(c, Branch.PLUS)
    _emit({"valid": True, **_context_report(c), **report}, args)
    return EXIT_OK if trig else EXIT_HYPERBOLIC


def cmd_represent(args) -> int:
    _require_json(args)
    sign = _single_sign(args)
    c = _context_from_args(args)
    report, trig = _profile_report(c, sign)
    report = {**_context_report(c), **report}
    report["state"] = _state_report(c, sign) if trig else None
    _emit(report, args)
    return EXIT_OK if trig else EXIT_HYPERBOLIC


def cmd_bloch(args) -> int:
    _require_json(args)
    sign = _single_sign(args)
    c = _context_from_args(args)
    report, trig = _profile_report(c, sign)
    report = {**_context_report(c), **report}
    report["point"] = _point_report(c, sign) if trig else None
    _emit(report, args)
    return EXIT_OK if trig else EXIT_HYPERBOLIC


def cmd_sweep(args) -> int:
    if args.P is None:
        raise CliError("missing required flag: --P")
    try:
        cfg = SweepConfig(P=args.P, q_steps=args.q_steps, p_steps=args.p_steps,
                          sign=args.sign, tol=args.tol, margin=args.margin)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    result = run_sweep(cfg)
    with _output(args.out) as fh:
        if args.format == "csv":
            write_csv(result, fh)
        else:
            write_json(result, fh)
    summary = {"total": result.total, "skipped": result.skipped, "points": len(result.points)}
    # keep stdout clean when it carries the point cloud
    summary_fh = sys.stdout if args.out is not None else sys.stderr
    print(json.dumps(summary), file=summary_fh)
    return EXIT_OK


def cmd_ingest(args) -> int:
    _require_json(args)
    sign = _single_sign(args)
    if args.counts is None:
        raise CliError("missing required flag: --counts")
    try:
        counts = SampleCounts.load(args.counts)
    except OSError as exc:
        raise CliError(f"cannot read {args.counts}: {exc}") from None
    except QLError:
        raise
    except (TypeError, ValueError) as exc:
        raise CliError(f"cannot parse {args.counts}: {exc}") from None
    c = estimate_context(counts, tol=args.tol)
    report, trig = _profile_report(c, sign)
    report = {**_context_report(c), "doubly_stochastic": True, **report}
    report["state"] = _state_report(c, sign) if trig else None
    report["point"] = _point_report(c, sign) if trig else None
    _emit(report, args)
    return EXIT_OK if trig else EXIT_HYPERBOLIC


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qlrep",
        description="Quantum-like representation of two-observable probabilistic data.",
        allow_abbrev=False,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")

    shared = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    shared.add_argument("--q", type=float, help="P(a = alpha1)")
    shared.add_argument("--p", type=float, help="P(b = beta1)")
    shared.add_argument("--P", type=float, help="transition probability P(b=beta1 | a=alpha1)")
    shared.add_argument("--sign", choices=("plus", "minus", "both"), default="plus")
    shared.add_argument("--tol", type=float, default=DEFAULT_TOL, help="validation tolerance")
    shared.add_argument("--format", choices=("json", "csv"), default="json")
    shared.add_argument("--out", metavar="PATH", help="write output here instead of stdout")

    sub = parser.add_subparsers(dest="subcommand", required=True)
    sub.add_parser("check", parents=[shared], allow_abbrev=False,
                   help="validate and classify a context").set_defaults(func=cmd_check)
    sub.add_parser("represent", parents=[shared], allow_abbrev=False,
                   help="build the complex amplitude").set_defaults(func=cmd_represent)
    sub.add_parser("bloch", parents=[shared], allow_abbrev=False,
                   help="map a context onto the Bloch sphere").set_defaults(func=cmd_bloch)

    sweep = sub.add_parser("sweep", parents=[shared], allow_abbrev=False,
                           help="sweep a (q, p) grid at fixed P")
    sweep.add_argument("--q-steps", type=int, default=101)
    sweep.add_argument("--p-steps", type=int, default=101)
    sweep.add_argument("--margin", type=float, default=0.01)
    sweep.set_defaults(func=cmd_sweep)

    ingest = sub.add_parser("ingest", parents=[shared], allow_abbrev=False,
                            help="estimate a context from a JSON counts file")
    ingest.add_argument("--counts", metavar="PATH")
    ingest.set_defaults(func=cmd_ingest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; 2 is reserved for hyperbolic data
        return EXIT_OK if exc.code == 0 else EXIT_INVALID
    try:
        return args.func(args)
    except (CliError, QLError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
